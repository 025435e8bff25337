#include "kam/dynamics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "kam/errors.hpp"
#include "kam/operators.hpp"

namespace kam {

namespace {

using DenseMatrix = Eigen::MatrixXcd;
using ColMajorSparse = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;

SparseMatrix shifted_identity(const SparseMatrix& h, Complex scale) {
  SparseMatrix id(h.rows(), h.cols());
  id.setIdentity();
  SparseMatrix out = id + scale * h;
  out.makeCompressed();
  return out;
}

// <psi|O psi> / <psi|psi>; tolerates accumulated norm drift.
Complex raw_expectation(const LinearOperator& op, const ComplexVector& psi) {
  const Complex num = psi.dot(op.apply(psi));
  return num / psi.squaredNorm();
}

double magnitude(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

struct CrankNicolsonPropagator::Solver {
  SparseMatrix lhs;
  Eigen::BiCGSTAB<SparseMatrix, Eigen::DiagonalPreconditioner<Complex>> iterative;
  Eigen::PartialPivLU<DenseMatrix> dense;
  bool use_dense = false;
};

CrankNicolsonPropagator::CrankNicolsonPropagator(const LinearOperator& hamiltonian, double dt,
                                                 double hbar, PropagatorOptions options)
    : grid_(hamiltonian.grid()), dt_(dt), options_(options), solver_(std::make_unique<Solver>()) {
  if (!(dt != 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorCode::invalid_argument, "time step must be finite and nonzero");
  }
  if (!(hbar > 0.0)) throw Error(ErrorCode::invalid_argument, "hbar must be positive");
  if (!hamiltonian.hermitian()) {
    throw PreconditionError("Crank-Nicolson needs a Hermitian Hamiltonian; '" +
                            hamiltonian.label() + "' is not");
  }
  const SparseMatrix& h = hamiltonian.matrix();
  const Complex half(0.0, dt / (2.0 * hbar));
  solver_->lhs = shifted_identity(h, half);
  rhs_ = shifted_identity(h, -half);
  if (options_.solver == SolverKind::dense) {
    if (grid_.point_count() > kDenseSolverLimit) {
      throw Error(ErrorCode::invalid_argument,
                  "dense propagation is limited to " + std::to_string(kDenseSolverLimit) +
                      " points, grid has " + std::to_string(grid_.point_count()));
    }
    solver_->use_dense = true;
    solver_->dense.compute(DenseMatrix(solver_->lhs));
  } else {
    solver_->iterative.setTolerance(options_.solver_tolerance);
    solver_->iterative.setMaxIterations(options_.max_iterations);
    solver_->iterative.compute(solver_->lhs);
  }
}

CrankNicolsonPropagator::~CrankNicolsonPropagator() = default;
CrankNicolsonPropagator::CrankNicolsonPropagator(CrankNicolsonPropagator&&) noexcept = default;
CrankNicolsonPropagator& CrankNicolsonPropagator::operator=(CrankNicolsonPropagator&&) noexcept =
    default;

WaveFunction CrankNicolsonPropagator::step(const WaveFunction& psi) const {
  if (!(psi.grid() == grid_)) {
    throw Error(ErrorCode::grid_mismatch, "state grid " + psi.grid().describe() +
                                              " differs from propagator grid " + grid_.describe());
  }
  const ComplexVector b = rhs_ * psi.amplitudes();
  ComplexVector x;
  if (solver_->use_dense) {
    x = solver_->dense.solve(b);
    last_iterations_ = 0;
  } else {
    x = solver_->iterative.solveWithGuess(b, psi.amplitudes());
    last_iterations_ = static_cast<int>(solver_->iterative.iterations());
  }
  const double bnorm = b.norm();
  last_residual_ = bnorm > 0.0 ? (solver_->lhs * x - b).norm() / bnorm : (solver_->lhs * x).norm();
  if (!(last_residual_ <= options_.residual_limit)) {
    std::ostringstream os;
    os << "Crank-Nicolson solve stopped at relative residual " << last_residual_ << " after "
       << last_iterations_ << " iterations (limit " << options_.residual_limit << ")";
    throw SolverError(os.str(), last_residual_);
  }
  return WaveFunction(grid_, std::move(x));
}

WaveFunction crank_nicolson_step(const LinearOperator& hamiltonian, const WaveFunction& psi,
                                 double dt, double hbar, PropagatorOptions options) {
  return CrankNicolsonPropagator(hamiltonian, dt, hbar, options).step(psi);
}

double default_time_step(const Grid& grid, const FieldConfig& config) {
  const double h = grid.spacing();
  double dt = h * h * config.mass() / config.hbar();
  if (config.has_uniform_hmag()) {
    const auto b = config.hmag().evaluate(0.0, 0.0, 0.0);
    const double omega = config.q() * magnitude(b) / (config.mass() * config.c());
    if (omega > 0.0) dt = std::min(dt, 0.05 / omega);
  }
  return dt;
}

const std::vector<Complex>& PropagationTrace::at(const std::string& label) const {
  const auto it = observables.find(label);
  if (it == observables.end()) {
    throw Error(ErrorCode::invalid_argument, "trace has no observable '" + label + "'");
  }
  return it->second;
}

double excursion_slack(const FieldConfig& config, const WaveFunction& psi0, double duration) {
  const Grid& grid = psi0.grid();
  const ComplexVector& a = psi0.amplitudes();
  const double weight = a.squaredNorm();
  std::array<double, 3> mean{0, 0, 0}, second{0, 0, 0};
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    const double p = std::norm(a[static_cast<Eigen::Index>(n)]) / weight;
    const auto r = grid.position(n);
    for (int d = 0; d < 3; ++d) {
      mean[d] += p * r[d];
      second[d] += p * r[d] * r[d];
    }
  }
  double sigma = 0.0;
  for (int d = 0; d < 3; ++d) sigma = std::max(sigma, std::sqrt(std::max(0.0, second[d] - mean[d] * mean[d])));
  sigma = std::max(sigma, grid.spacing());

  std::array<double, 3> velocity{0, 0, 0};
  for (const Index3 axis : Index3::all()) {
    if (!grid.active(axis.offset())) continue;
    velocity[axis.offset()] =
        raw_expectation(build_pi(grid, config, axis), a).real() / config.mass();
  }
  const double speed = magnitude(velocity);
  const double t = std::abs(duration);
  const double spread = config.hbar() * t / (2.0 * config.mass() * sigma * sigma);
  double width = sigma * std::sqrt(1.0 + spread * spread);
  double travel = speed * t;
  if (config.has_uniform_hmag()) {
    const double b = magnitude(config.hmag().evaluate(0.0, 0.0, 0.0));
    if (b > 0.0) {
      const double omega = config.q() * b / (config.mass() * config.c());
      const double length2 = config.hbar() * config.c() / (config.q() * b);
      travel = std::min(travel, 2.0 * speed / omega);
      width = std::min(width, std::max(sigma, length2 / (2.0 * sigma)));
    }
  }
  return grid.wall_margin(mean) - travel - 4.0 * width;
}

PropagationTrace propagate_and_track(const FieldConfig& config, const WaveFunction& psi0,
                                     double dt, int steps, const std::vector<std::string>& labels,
                                     const TrackOptions& options) {
  if (steps < 0) throw Error(ErrorCode::invalid_argument, "step count must be non-negative");
  const Grid& grid = psi0.grid();
  if (!psi0.is_finite()) throw PreconditionError("initial state has non-finite amplitudes");
  if (options.check_excursion) {
    const double slack = excursion_slack(config, psi0, dt * steps);
    if (slack < 0.0) {
      std::ostringstream os;
      os << "a run of " << steps << " steps of dt = " << dt
         << " would bring the packet within 4 sigma of a wall (short by " << -slack
         << "); reduce steps or dt, or enlarge the grid";
      throw PreconditionError(os.str());
    }
  }
  std::vector<LinearOperator> ops;
  ops.reserve(labels.size());
  for (const auto& label : labels) ops.push_back(build_named(grid, config, label));

  const LinearOperator h = build_hamiltonian(grid, config);
  const CrankNicolsonPropagator propagator(h, dt, config.hbar(), options.propagator);

  PropagationTrace trace;
  trace.labels = labels;
  for (const auto& label : labels) trace.observables[label].reserve(steps + 1);
  const double norm0 = psi0.norm();
  WaveFunction psi = psi0;
  auto record = [&](double time) {
    trace.times.push_back(time);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      trace.observables[labels[k]].push_back(raw_expectation(ops[k], psi.amplitudes()));
    }
    trace.norm_drift.push_back(std::abs(psi.norm() - norm0));
  };
  record(0.0);
  for (int n = 1; n <= steps; ++n) {
    psi = propagator.step(psi);
    record(n * dt);
  }
  return trace;
}

DynamicReport verify_angular_ehrenfest_dynamic(const FieldConfig& config, const WaveFunction& psi0,
                                               double dt, int steps,
                                               const DynamicOptions& options) {
  if (steps < 2) {
    throw Error(ErrorCode::invalid_argument, "centered differences need at least 2 steps");
  }
  if (!(dt > 0.0)) throw Error(ErrorCode::invalid_argument, "time step must be positive");
  const std::vector<std::string> labels = {"L1", "L2", "L3", "T1", "T2", "T3", "H"};
  DynamicReport out;
  out.trace = propagate_and_track(config, psi0, dt, steps, labels, options.track);
  const PropagationTrace& trace = out.trace;
  ResidualReport& report = out.summary;
  report.name = "ehrenfest-dynamic";
  report.grid_spec = psi0.grid().describe();
  report.passed = true;

  const std::size_t samples = trace.samples();
  for (int i = 1; i <= 3; ++i) {
    const auto& l = trace.at("L" + std::to_string(i));
    const auto& t = trace.at("T" + std::to_string(i));
    double worst = 0.0, torque_scale = 0.0, rate_scale = 0.0;
    for (std::size_t n = 1; n + 1 < samples; ++n) {
      const double rate = (l[n + 1].real() - l[n - 1].real()) / (2.0 * dt);
      worst = std::max(worst, std::abs(rate - t[n].real()));
      torque_scale = std::max(torque_scale, std::abs(t[n].real()));
      rate_scale = std::max(rate_scale, std::abs(rate));
    }
    if (torque_scale < options.absolute_floor && rate_scale < options.absolute_floor) continue;
    const bool relative = torque_scale >= options.absolute_floor;
    const double scale = relative ? torque_scale : 1.0;
    const double residual = worst / scale;
    report.add({"dL" + std::to_string(i) + "/dt - T" + std::to_string(i), residual, scale, relative,
                options.tolerance, residual <= options.tolerance});
  }

  double step_drift = 0.0;
  for (std::size_t n = 1; n < samples; ++n) {
    step_drift = std::max(step_drift, std::abs(trace.norm_drift[n] - trace.norm_drift[n - 1]));
  }
  report.add({"norm drift per step", step_drift, 1.0, false, options.norm_step_tolerance,
              step_drift <= options.norm_step_tolerance});

  const auto& energy = trace.at("H");
  const double e0 = energy.front().real();
  double energy_drift = 0.0;
  for (const Complex& e : energy) energy_drift = std::max(energy_drift, std::abs(e.real() - e0));
  const double escale = std::max(std::abs(e0), 1e-300);
  energy_drift /= escale;
  report.add({"energy drift", energy_drift, escale, true, options.energy_tolerance,
              energy_drift <= options.energy_tolerance});
  return out;
}

GroundState ground_state(const LinearOperator& hamiltonian, const GroundStateOptions& options) {
  if (!hamiltonian.hermitian()) {
    throw PreconditionError("ground state needs a Hermitian Hamiltonian; '" +
                            hamiltonian.label() + "' is not");
  }
  const Grid& grid = hamiltonian.grid();
  const SparseMatrix& h = hamiltonian.matrix();
  const Eigen::Index n = h.rows();

  // Every eigenvalue is >= gershgorin.
  double gershgorin = std::numeric_limits<double>::infinity();
  double radius = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    double diag = 0.0, off = 0.0;
    for (SparseMatrix::InnerIterator it(h, r); it; ++it) {
      if (it.col() == r) diag = it.value().real();
      else off += std::abs(it.value());
    }
    gershgorin = std::min(gershgorin, diag - off);
    radius = std::max(radius, std::abs(diag) + off);
  }

  // Start from the lowest Dirichlet-box mode: positive everywhere, so it
  // overlaps any nodeless ground state.
  ComplexVector psi(n);
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    const auto idx = grid.multi_index(p);
    double v = 1.0;
    for (int d = 0; d < 3; ++d) {
      if (!grid.active(d)) continue;
      v *= std::sin(M_PI * (idx[d] + 1) / (grid.size(d) + 1));
    }
    psi[static_cast<Eigen::Index>(p)] = v;
  }
  psi.normalize();

  double energy_out = 0.0, residual_out = 0.0;
  int iterations_out = 0;
  std::vector<double> history;
  Eigen::SparseLU<ColMajorSparse> lu;
  double shift = std::numeric_limits<double>::quiet_NaN();
  SparseMatrix id(n, n);
  id.setIdentity();
  const double floor = 1e-12 * std::max(radius, 1e-300);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const ComplexVector hpsi = h * psi;
    const double energy = psi.dot(hpsi).real();
    const double abs_residual = (hpsi - energy * psi).norm();
    const double residual = std::abs(energy) > floor ? abs_residual / std::abs(energy) : abs_residual;
    history.push_back(residual);
    energy_out = energy;
    residual_out = residual;
    iterations_out = iter - 1;
    if (residual <= options.tolerance) break;
    if (iter == options.max_iterations) {
      std::ostringstream os;
      os << "ground state did not converge in " << options.max_iterations
         << " iterations; residual history:";
      const std::size_t first = history.size() > 8 ? history.size() - 8 : 0;
      for (std::size_t k = first; k < history.size(); ++k) os << ' ' << history[k];
      throw SolverError(os.str(), residual);
    }
    // Half the Rayleigh gap below the Gershgorin bound: the shift stays under
    // the lowest eigenvalue and tracks it as the estimate improves.
    const double target = gershgorin - std::max(0.5 * (energy - gershgorin), floor);
    if (std::isnan(shift) || std::abs(target - shift) > 0.1 * std::abs(shift - gershgorin)) {
      shift = target;
      ColMajorSparse a = h - Complex(shift) * id;
      a.makeCompressed();
      lu.compute(a);
      if (lu.info() != Eigen::Success) {
        throw SolverError("sparse LU factorization of H - s failed: " + lu.lastErrorMessage(),
                          residual);
      }
    }
    psi = lu.solve(psi);
    psi.normalize();
  }
  ComplexVector scaled = psi / std::sqrt(grid.cell_volume());
  return GroundState{energy_out, WaveFunction(grid, std::move(scaled)), residual_out,
                     iterations_out, std::move(history)};
}

std::vector<double> dense_lowest_eigenvalues(const LinearOperator& hamiltonian, int count) {
  const std::size_t points = hamiltonian.rows();
  if (points > 4096) {
    throw Error(ErrorCode::invalid_argument,
                "dense diagonalization is limited to 4096 points, grid has " + std::to_string(points));
  }
  if (count < 1) throw Error(ErrorCode::invalid_argument, "eigenvalue count must be positive");
  const DenseMatrix dense(hamiltonian.matrix());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw SolverError("dense Hermitian eigensolver failed", 0.0);
  }
  const auto& values = solver.eigenvalues();
  const auto m = std::min<Eigen::Index>(count, values.size());
  return std::vector<double>(values.data(), values.data() + m);
}

}  // namespace kam
