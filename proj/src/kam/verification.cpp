#include "kam/verification.hpp"

#include <cmath>
#include <sstream>

#include "kam/errors.hpp"
#include "kam/random.hpp"
#include "kam/tensor_identities.hpp"

namespace kam {

namespace {

constexpr int kCyclic[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

std::string bracket(const char* stem, int i, int j) {
  return "[" + std::string(stem) + std::to_string(i + 1) + "," + stem + std::to_string(j + 1) + "]";
}

bool has_constant_potential(const FieldConfig& config) {
  const auto& a = config.vector_potential();
  return a[0].is_constant() && a[1].is_constant() && a[2].is_constant();
}

ResidualReport start_report(std::string name, const WaveFunction& psi) {
  ResidualReport r;
  r.name = std::move(name);
  r.grid_spec = psi.grid().describe();
  r.passed = true;
  return r;
}

}  // namespace

void ResidualReport::add(ResidualComponent c) {
  if (components.empty() || c.residual / c.tolerance > residual / tolerance) {
    residual = c.residual;
    tolerance = c.tolerance;
  }
  passed = (components.empty() ? true : passed) && c.passed;
  components.push_back(std::move(c));
}

ResidualComponent identity_residual(const Grid& grid, std::string label,
                                    const ComplexVector& residual,
                                    std::initializer_list<const ComplexVector*> terms,
                                    double tolerance, const ResidualOptions& options) {
  double scale = 0.0;
  for (const ComplexVector* t : terms) scale = std::max(scale, interior_norm(grid, *t, options.guard));
  ResidualComponent c;
  c.label = std::move(label);
  const double absolute = interior_norm(grid, residual, options.guard);
  c.relative = scale >= options.absolute_floor;
  c.scale = c.relative ? scale : 1.0;
  c.residual = absolute / c.scale;
  c.tolerance = tolerance;
  c.passed = c.residual <= tolerance;
  return c;
}

namespace {

// Shared body of the l and L commutation checks. `correction` is null for
// the canonical operators.
ResidualReport angular_commutation(std::string name, const std::array<LinearOperator, 3>& ops,
                                   const std::array<LinearOperator, 3>* correction, double hbar,
                                   const WaveFunction& psi, const ResidualOptions& options,
                                   const char* stem) {
  ResidualReport report = start_report(std::move(name), psi);
  const Grid& grid = psi.grid();
  for (const auto& p : kCyclic) {
    const int i = p[0], j = p[1], k = p[2];
    const ComplexVector lhs = commutator_apply(ops[i], ops[j], psi).amplitudes();
    const ComplexVector main = Complex(0.0, hbar) * ops[k].apply(psi.amplitudes());
    ComplexVector extra = ComplexVector::Zero(main.size());
    if (correction) extra = Complex(0.0, hbar) * (*correction)[k].apply(psi.amplitudes());
    const ComplexVector residual = lhs - main - extra;
    report.add(identity_residual(grid, bracket(stem, i, j), residual, {&lhs, &main, &extra},
                                 options.tolerance, options));
  }
  return report;
}

}  // namespace

ResidualReport verify_ll_commutation(const WaveFunction& psi, double hbar,
                                     const ResidualOptions& options) {
  const Grid& grid = psi.grid();
  const std::array<LinearOperator, 3> l = {build_l(grid, Index3(1), hbar),
                                           build_l(grid, Index3(2), hbar),
                                           build_l(grid, Index3(3), hbar)};
  return angular_commutation("ll", l, nullptr, hbar, psi, options, "l");
}

ResidualReport verify_LL_commutation(const FieldConfig& config, const WaveFunction& psi,
                                     const ResidualOptions& options) {
  const Grid& grid = psi.grid();
  const std::array<LinearOperator, 3> big = {build_L(grid, config, Index3(1)),
                                             build_L(grid, config, Index3(2)),
                                             build_L(grid, config, Index3(3))};
  const std::array<LinearOperator, 3> corr = {build_LL_correction(grid, config, Index3(1)),
                                              build_LL_correction(grid, config, Index3(2)),
                                              build_LL_correction(grid, config, Index3(3))};
  return angular_commutation("LL", big, &corr, config.hbar(), psi, options, "L");
}

ResidualReport verify_pipi_commutation(const FieldConfig& config, const WaveFunction& psi,
                                       const ResidualOptions& options) {
  ResidualReport report = start_report("pipi", psi);
  const Grid& grid = psi.grid();
  const std::array<LinearOperator, 3> pi = {build_pi(grid, config, Index3(1)),
                                            build_pi(grid, config, Index3(2)),
                                            build_pi(grid, config, Index3(3))};
  const auto& a = config.vector_potential();
  const double tol = has_constant_potential(config) ? options.exact_tolerance : options.tolerance;
  for (const auto& p : kCyclic) {
    const int i = p[0], j = p[1];
    const Polynomial field = a[j].derivative(i) - a[i].derivative(j);
    const ComplexVector lhs = commutator_apply(pi[i], pi[j], psi).amplitudes();
    const ComplexVector rhs =
        Complex(0.0, config.hbar() * config.q() / config.c()) *
        polynomial_diagonal(grid, field, 1.0, "F").apply(psi.amplitudes());
    const ComplexVector residual = lhs - rhs;
    report.add(identity_residual(grid, bracket("pi", i, j), residual, {&lhs, &rhs}, tol, options));
  }
  return report;
}

ResidualReport verify_force_forms(const FieldConfig& config, const WaveFunction& psi,
                                  const ResidualOptions& options) {
  ResidualReport report = start_report("force-forms", psi);
  const Grid& grid = psi.grid();
  const bool all_exact = has_constant_potential(config);
  const bool uniform = config.has_uniform_hmag();
  for (const Index3 k : Index3::all()) {
    const ComplexVector def =
        build_magnetic_force(grid, config, k, ForceForm::definition).apply(psi.amplitudes());
    const ComplexVector anti =
        build_magnetic_force(grid, config, k, ForceForm::anticommutator).apply(psi.amplitudes());
    const ComplexVector expd =
        build_magnetic_force(grid, config, k, ForceForm::expanded).apply(psi.amplitudes());
    const std::string sfx = std::to_string(k.value());
    const double tol_pde = all_exact ? options.exact_tolerance : options.tolerance;
    const double tol_ae = (all_exact || uniform) ? options.exact_tolerance : options.tolerance;
    report.add(identity_residual(grid, "definition-anticommutator M" + sfx, def - anti,
                                 {&def, &anti}, tol_pde, options));
    report.add(identity_residual(grid, "anticommutator-expanded M" + sfx, anti - expd,
                                 {&anti, &expd}, tol_ae, options));
    report.add(identity_residual(grid, "definition-expanded M" + sfx, def - expd, {&def, &expd},
                                 tol_pde, options));
  }
  return report;
}

ResidualReport verify_angular_ehrenfest_static(const FieldConfig& config, const WaveFunction& psi,
                                               const ResidualOptions& options) {
  ResidualReport report = start_report("ehrenfest-static", psi);
  const Grid& grid = psi.grid();
  const LinearOperator h = build_hamiltonian(grid, config);
  const ComplexVector h_psi = h.apply(psi.amplitudes());
  const ComplexVector energy_scale = h_psi * psi.norm();
  for (const Index3 i : Index3::all()) {
    const LinearOperator li = build_L(grid, config, i);
    const ComplexVector lhs =
        Complex(0.0, 1.0 / config.hbar()) * commutator_apply(h, li, psi).amplitudes();
    const ComplexVector rhs = build_torque(grid, config, i).apply(psi.amplitudes());
    report.add(identity_residual(grid, "(i/hbar)[H,L" + std::to_string(i.value()) + "] - T" +
                                           std::to_string(i.value()),
                                 lhs - rhs, {&lhs, &rhs, &energy_scale}, options.tolerance,
                                 options));
  }
  return report;
}

WaveFunction gauge_phase(const FieldConfig& config, const Polynomial& chi, const WaveFunction& psi) {
  const Grid& grid = psi.grid();
  const double scale = config.q() / (config.hbar() * config.c());
  ComplexVector out = psi.amplitudes();
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    const auto r = grid.position(n);
    out[static_cast<Eigen::Index>(n)] *= std::polar(1.0, scale * chi.evaluate(r[0], r[1], r[2]));
  }
  return WaveFunction(grid, std::move(out));
}

GaugeReport verify_gauge_expectations(const FieldConfig& config, const Polynomial& chi,
                                      const WaveFunction& psi, const GaugeOptions& options) {
  const Grid& grid = psi.grid();
  const FieldConfig transformed = gauge_transform(config, chi);
  const WaveFunction psi_t = gauge_phase(config, chi, psi);
  const double hbar = config.hbar();

  GaugeReport out;
  out.summary = start_report("gauge", psi);

  const double e0 = expectation(build_hamiltonian(grid, config), psi).real();
  const double e1 = expectation(build_hamiltonian(grid, transformed), psi_t).real();
  out.energy_before = e0;
  out.energy_after = e1;
  const double de = std::abs(e1 - e0) / std::max(std::abs(e0), 1e-300);
  ResidualComponent energy{"d<H>", de, std::abs(e0), true, options.invariance_tolerance,
                           de <= options.invariance_tolerance};
  out.summary.add(energy);
  out.invariance_residual = de;

  const PolynomialVector grad_chi = gradient(chi);
  for (const Index3 i : Index3::all()) {
    const int a = i.offset();
    const double before = expectation(build_L(grid, config, i), psi).real();
    const double after = expectation(build_L(grid, transformed, i), psi_t).real();
    out.kinetic_L_before[a] = before;
    out.kinetic_L_after[a] = after;
    const double scale = std::max(std::abs(before), hbar);
    const double dl = std::abs(after - before) / scale;
    out.invariance_residual = std::max(out.invariance_residual, dl);
    out.summary.add({"d<L" + std::to_string(i.value()) + ">", dl, scale, true,
                     options.invariance_tolerance, dl <= options.invariance_tolerance});

    const LinearOperator li = build_l(grid, i, hbar);
    const double shift = expectation(li, psi_t).real() - expectation(li, psi).real();
    Polynomial lever;  // e_ijk x_j d_k chi
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (const int e = tensor::levi_civita(i, Index3(j + 1), Index3(k + 1)))
          lever += Rational(e) * Polynomial::variable(j) * grad_chi[k];
    const double predicted =
        expectation(polynomial_diagonal(grid, lever, config.q() / config.c(), "lever"), psi).real();
    out.canonical_shift[a] = shift;
    out.predicted_shift[a] = predicted;
    const double denom = std::max(std::abs(predicted), hbar);
    const double mismatch = std::abs(shift - predicted) / denom;
    out.shift_mismatch = std::max(out.shift_mismatch, mismatch);
    out.summary.add({"d<l" + std::to_string(i.value()) + "> vs prediction", mismatch, denom, true,
                     options.shift_tolerance, mismatch <= options.shift_tolerance});
  }
  return out;
}

ConvergenceReport fit_convergence(std::string name, std::vector<double> spacings,
                                  std::vector<double> residuals, double exact_threshold,
                                  double order_min, double order_max) {
  if (spacings.size() < 3 || spacings.size() != residuals.size()) {
    throw Error(ErrorCode::invalid_argument,
                "a convergence study needs at least 3 spacings with one residual each");
  }
  for (std::size_t n = 1; n < spacings.size(); ++n) {
    if (!(spacings[n] < spacings[n - 1])) {
      throw Error(ErrorCode::invalid_argument, "convergence spacings must be strictly decreasing");
    }
  }
  ConvergenceReport r;
  r.name = std::move(name);
  r.order_min = order_min;
  r.order_max = order_max;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (std::size_t n = 0; n < spacings.size(); ++n) {
    const bool fit = residuals[n] >= exact_threshold;
    r.fitted.push_back(fit);
    if (!fit) continue;
    const double x = std::log(spacings[n]);
    const double y = std::log(residuals[n]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++used;
  }
  r.spacings = std::move(spacings);
  r.residuals = std::move(residuals);
  if (used < 2) {
    r.exact = used == 0;
    r.fitted_order = 0.0;
    r.passed = r.exact;
    return r;
  }
  r.fitted_order = (used * sxy - sx * sy) / (used * sxx - sx * sx);
  r.passed = r.fitted_order >= order_min && r.fitted_order <= order_max;
  return r;
}

ConvergenceReport convergence_study(std::string name, std::span<const double> spacings,
                                    const std::function<double(double)>& residual_at,
                                    double exact_threshold, double order_min, double order_max) {
  std::vector<double> hs(spacings.begin(), spacings.end());
  if (hs.size() < 3) {
    throw Error(ErrorCode::invalid_argument, "a convergence study needs at least 3 spacings");
  }
  for (std::size_t n = 1; n < hs.size(); ++n) {
    if (!(hs[n] < hs[n - 1])) {
      throw Error(ErrorCode::invalid_argument, "convergence spacings must be strictly decreasing");
    }
  }
  std::vector<double> res;
  res.reserve(hs.size());
  for (double h : hs) res.push_back(residual_at(h));
  return fit_convergence(std::move(name), std::move(hs), std::move(res), exact_threshold,
                         order_min, order_max);
}

std::vector<std::pair<std::string, PacketSpec>> state_variants(const Grid& grid,
                                                               const PacketSpec& base,
                                                               std::uint64_t seed) {
  Rng rng(mix_seed(seed, "state-variants"));
  std::vector<std::pair<std::string, PacketSpec>> out;
  out.emplace_back("gaussian", base);

  // Displace inside whatever margin the walls leave beyond 4 sigma and add a
  // gentle boost (|k_i| <= 0.15 / sigma).
  PacketSpec displaced = base;
  const double slack = std::max(0.0, grid.wall_margin(base.center) - 4.0 * base.sigma);
  for (int axis = 0; axis < grid.dimension(); ++axis) {
    displaced.center[axis] += 0.9 * slack * rng.uniform(-1.0, 1.0) / std::sqrt(3.0);
    displaced.wavevector[axis] += rng.uniform(-0.15, 0.15) / base.sigma;
  }
  out.emplace_back("displaced", displaced);

  if (grid.dimension() >= 2) {
    PacketSpec vortex = base;
    vortex.vortex = base.vortex == 0 ? 1 : base.vortex + (base.vortex > 0 ? 1 : -1);
    out.emplace_back("vortex", vortex);
  }
  return out;
}

std::string describe(const PacketSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << "center=(" << spec.center[0] << "," << spec.center[1] << "," << spec.center[2]
     << ") sigma=" << spec.sigma << " k=(" << spec.wavevector[0] << "," << spec.wavevector[1]
     << "," << spec.wavevector[2] << ") vortex=" << spec.vortex;
  return os.str();
}

}  // namespace kam
