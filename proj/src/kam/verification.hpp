#pragma once

// Grid residuals for the angular-momentum, momentum, force and torque
// identities, the gauge-expectation experiment, and convergence-order fits.
//
// Residual norms are taken over interior points (at least `guard` cells from
// every wall). Composite stencils of reach <= guard then see no Dirichlet
// ghost values, so the measured residual is pure discretization error.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kam/fields.hpp"
#include "kam/operators.hpp"

namespace kam {

struct ResidualOptions {
  double tolerance = 1e-2;        // relative, for O(h^2) identities
  double exact_tolerance = 1e-12;  // for structurally exact cases
  double absolute_floor = 1e-12;   // below this every term counts as zero
  int guard = 4;
};

struct ResidualComponent {
  std::string label;  // e.g. "[L1,L2]"
  double residual = 0.0;
  double scale = 0.0;
  bool relative = true;
  double tolerance = 0.0;
  bool passed = false;
};

struct ResidualReport {
  std::string name;
  double residual = 0.0;   // worst component
  double tolerance = 0.0;  // tolerance of the worst component
  bool passed = false;     // every component within its tolerance
  std::string grid_spec;
  std::string state_spec;
  std::vector<ResidualComponent> components;

  void add(ResidualComponent c);
};

// Relative residual ||r|| / max ||X|| over the identity's terms X, falling
// back to the absolute ||r|| when every term is below options.absolute_floor.
ResidualComponent identity_residual(const Grid& grid, std::string label,
                                    const ComplexVector& residual,
                                    std::initializer_list<const ComplexVector*> terms,
                                    double tolerance, const ResidualOptions& options);

// [l_i, l_j] = i hbar e_ijk l_k for the three cyclic pairs.
ResidualReport verify_ll_commutation(const WaveFunction& psi, double hbar = 1.0,
                                     const ResidualOptions& options = {});
// [L_i, L_j] = i hbar e_ijk (L_k + (q/c)(r.H) x_k)
ResidualReport verify_LL_commutation(const FieldConfig& config, const WaveFunction& psi,
                                     const ResidualOptions& options = {});
// [pi_i, pi_j] = (i hbar q / c)(d_i A_j - d_j A_i)
ResidualReport verify_pipi_commutation(const FieldConfig& config, const WaveFunction& psi,
                                       const ResidualOptions& options = {});
// Pairwise agreement of the definition, anticommutator and expanded forms.
ResidualReport verify_force_forms(const FieldConfig& config, const WaveFunction& psi,
                                  const ResidualOptions& options = {});
// (i/hbar)[H, L_i] psi = T_i psi; scale includes ||H psi|| ||psi||.
ResidualReport verify_angular_ehrenfest_static(const FieldConfig& config, const WaveFunction& psi,
                                               const ResidualOptions& options = {});

struct GaugeOptions {
  double invariance_tolerance = 1e-2;  // on |d<L_i>| and |d<H>|, relative
  double shift_tolerance = 5e-2;       // relative mismatch of the l shift
};

struct GaugeReport {
  ResidualReport summary;
  std::array<double, 3> kinetic_L_before{}, kinetic_L_after{};
  double energy_before = 0.0, energy_after = 0.0;
  std::array<double, 3> canonical_shift{};   // measured <l_i>' - <l_i>
  std::array<double, 3> predicted_shift{};   // (q/c) <e_ijk x_j d_k chi>
  double invariance_residual = 0.0;  // max relative change of <L_i>, <H>
  double shift_mismatch = 0.0;       // max relative error of the l shift
};

// psi' = exp(i q chi / hbar c) psi, config' = gauge_transform(config, chi).
GaugeReport verify_gauge_expectations(const FieldConfig& config, const Polynomial& chi,
                                      const WaveFunction& psi, const GaugeOptions& options = {});

// exp(i q chi / hbar c) psi
WaveFunction gauge_phase(const FieldConfig& config, const Polynomial& chi, const WaveFunction& psi);

struct ConvergenceReport {
  std::string name;
  std::vector<double> spacings;
  std::vector<double> residuals;
  std::vector<bool> fitted;  // false for points below the exact threshold
  double fitted_order = 0.0;
  double expected_order = 2.0;
  double order_min = 1.7;
  double order_max = 2.3;
  bool exact = false;  // every residual below the exact threshold
  bool passed = false;
};

// Least-squares slope of log(residual) against log(h), skipping residuals
// below `exact_threshold`. Needs >= 3 strictly decreasing spacings.
ConvergenceReport fit_convergence(std::string name, std::vector<double> spacings,
                                  std::vector<double> residuals, double exact_threshold = 1e-12,
                                  double order_min = 1.7, double order_max = 2.3);

// Evaluates `residual_at` for each spacing and fits the order.
ConvergenceReport convergence_study(std::string name, std::span<const double> spacings,
                                    const std::function<double(double)>& residual_at,
                                    double exact_threshold = 1e-12, double order_min = 1.7,
                                    double order_max = 2.3);

// Test states for a scenario: the base packet, a displaced and boosted copy
// and a vortex copy, with offsets drawn from `seed` inside the available
// wall margin.
std::vector<std::pair<std::string, PacketSpec>> state_variants(const Grid& grid,
                                                               const PacketSpec& base,
                                                               std::uint64_t seed);
std::string describe(const PacketSpec& spec);

}  // namespace kam
