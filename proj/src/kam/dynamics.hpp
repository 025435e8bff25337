#pragma once

// Crank-Nicolson propagation, expectation tracking, the time-domain torque
// check, and ground states by shifted inverse iteration.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kam/fields.hpp"
#include "kam/linear_operator.hpp"
#include "kam/verification.hpp"

namespace kam {

enum class SolverKind {
  iterative,  // BiCGSTAB with a diagonal preconditioner
  dense,      // partial-pivot LU; at most kDenseSolverLimit points
};

inline constexpr std::size_t kDenseSolverLimit = 1024;

struct PropagatorOptions {
  SolverKind solver = SolverKind::iterative;
  double solver_tolerance = 1e-13;  // relative, passed to the iterative solver
  double residual_limit = 1e-10;    // accepted relative residual of each solve
  int max_iterations = 2000;
};

// One Cayley step: (1 + i H dt / 2 hbar) psi' = (1 - i H dt / 2 hbar) psi.
// Negative dt steps backward in time.
class CrankNicolsonPropagator {
 public:
  CrankNicolsonPropagator(const LinearOperator& hamiltonian, double dt, double hbar = 1.0,
                          PropagatorOptions options = {});
  ~CrankNicolsonPropagator();
  CrankNicolsonPropagator(CrankNicolsonPropagator&&) noexcept;
  CrankNicolsonPropagator& operator=(CrankNicolsonPropagator&&) noexcept;

  WaveFunction step(const WaveFunction& psi) const;
  double dt() const noexcept { return dt_; }
  // Relative residual of the most recent solve.
  double last_residual() const noexcept { return last_residual_; }
  int last_iterations() const noexcept { return last_iterations_; }

 private:
  struct Solver;
  Grid grid_;
  double dt_;
  PropagatorOptions options_;
  SparseMatrix rhs_;
  std::unique_ptr<Solver> solver_;
  mutable double last_residual_ = 0.0;
  mutable int last_iterations_ = 0;
};

WaveFunction crank_nicolson_step(const LinearOperator& hamiltonian, const WaveFunction& psi,
                                 double dt, double hbar = 1.0, PropagatorOptions options = {});

// dt = h^2 m / hbar, reduced so that omega_c dt <= 0.05 for uniform fields.
double default_time_step(const Grid& grid, const FieldConfig& config);

struct PropagationTrace {
  std::vector<double> times;
  std::vector<std::string> labels;  // observable order
  std::map<std::string, std::vector<Complex>> observables;
  std::vector<double> norm_drift;  // |‖psi(t)‖ - ‖psi(0)‖|

  std::size_t samples() const noexcept { return times.size(); }
  const std::vector<Complex>& at(const std::string& label) const;
};

struct TrackOptions {
  PropagatorOptions propagator;
  bool check_excursion = true;
};

// Estimated closest approach to a wall minus 4 sigma over [0, duration];
// negative when the run would violate the margin.
double excursion_slack(const FieldConfig& config, const WaveFunction& psi0, double duration);

// Propagates under the composed Hamiltonian of `config` and records the
// expectation of each named operator (see build_named) at every step,
// including t = 0.
PropagationTrace propagate_and_track(const FieldConfig& config, const WaveFunction& psi0,
                                     double dt, int steps, const std::vector<std::string>& labels,
                                     const TrackOptions& options = {});

struct DynamicOptions {
  double tolerance = 1e-2;           // max |dL/dt - T| / max |T|
  double norm_step_tolerance = 1e-10;
  double energy_tolerance = 1e-8;    // relative drift of <H> over the run
  double absolute_floor = 1e-9;      // components with max |T| and max |dL/dt| below are skipped
  TrackOptions track;
};

struct DynamicReport {
  ResidualReport summary;
  PropagationTrace trace;
};

// Centered differences of <L_i> at interior samples against <T_i>, plus
// norm and energy drift of the run.
DynamicReport verify_angular_ehrenfest_dynamic(const FieldConfig& config, const WaveFunction& psi0,
                                               double dt, int steps,
                                               const DynamicOptions& options = {});

struct GroundStateOptions {
  double tolerance = 1e-8;  // relative eigen-residual
  int max_iterations = 500;
};

struct GroundState {
  double energy = 0.0;
  WaveFunction state;
  double residual = 0.0;  // ‖H psi - E psi‖ / |E|
  int iterations = 0;
  std::vector<double> residual_history;
};

// Shifted inverse iteration. The shift sits below the Gershgorin bound of
// the spectrum, so each solve is an implicit imaginary-time step that damps
// every excited component relative to the lowest one.
GroundState ground_state(const LinearOperator& hamiltonian, const GroundStateOptions& options = {});

// Lowest `count` eigenvalues by dense Hermitian diagonalization. Oracle for
// grids of at most 4096 points.
std::vector<double> dense_lowest_eigenvalues(const LinearOperator& hamiltonian, int count);

}  // namespace kam
