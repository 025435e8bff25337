#include <algorithm>

#include "kam/errors.hpp"
#include "kam/runner.hpp"

namespace kam {

namespace {

const char* const kTensors = R"(name = tensor-identities
description = Levi-Civita contraction identities in exact arithmetic
[checks]
suite = verify-tensors
seed = 20240611
)";

const char* const kCanonical = R"(name = canonical-angular-momentum
description = [l_i, l_j] = i hbar e_ijk l_k for the canonical angular momentum
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
[checks]
suite = ll, converge:ll
base_level = -1
)";

const char* const kKineticL = R"(name = kinetic-angular-momentum-uniform-b
description = [L_i, L_j] = i hbar e_ijk (L_k + (q/c)(r.H) x_k) in a uniform field
[field]
param B = 1
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
[checks]
suite = LL, converge:LL
base_level = -1
)";

const char* const kPiPi = R"(name = kinetic-momentum-uniform-b
description = [pi_i, pi_j] = (i hbar q/c) e_ijk H_k in a uniform field
[field]
param B = 1
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
[checks]
suite = pipi, converge:pipi
base_level = -1
)";

const char* const kPiPiZero = R"(name = kinetic-momentum-zero-field
description = [pi_i, pi_j] = 0 without a field, exact on the grid
[grid]
dims = 32, 32, 32
h = 1/3
[state]
sigma = 1
[checks]
suite = pipi
)";

const char* const kForces = R"(name = force-forms-uniform-b
description = definition, anticommutator and expanded magnetic force in a uniform field
[field]
param B = 1
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
[checks]
suite = force-forms, converge:force-forms
base_level = -1
)";

const char* const kForcesNonuniform = R"(name = force-forms-nonuniform-b
description = the three magnetic force forms in the field H = (0, 0, 1 + b x^2/2)
[field]
param b = 1/8
A = (-y*(1 + b*x^2)/2, x/2, 0)
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
[checks]
suite = force-forms, converge:force-forms
base_level = -1
)";

const char* const kTorqueStatic = R"(name = torque-static-uniform-b
description = (i/hbar)[H, L_i] = T_i in a uniform field
[field]
param B = 1
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
[checks]
suite = ehrenfest-static, converge:ehrenfest-static
tolerance.ehrenfest-static = 2e-2
base_level = -1
)";

const char* const kTorqueCentral = R"(name = torque-central-potential
description = zero torque expectation in a central potential on symmetric states
[field]
param k = 1/2
V = k*(x^2 + y^2 + z^2)
[grid]
dims = 48, 48, 48
h = 1/3
[state]
sigma = 2
variants = false
[checks]
suite = central-torque, ehrenfest-static
)";

const char* const kTorqueDynamic = R"(name = torque-dynamic-cyclotron
description = d<L_z>/dt against <T_z> for a cyclotron packet over one period
[field]
param B = 1
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 128, 128
h = 1/10
[state]
sigma = 0.70710678118654752
k = (1, 0, 0)
[checks]
suite = ehrenfest-dynamic
)";

const char* const kGauge = R"(name = gauge-landau-to-symmetric
description = <L_i> and <H> are gauge invariant while <l_z> shifts by (qB/2c) a^2
[field]
param B = 1/4
A = (-B*y, 0, 0)
chi = B*x*y/2
[grid]
dims = 48, 48, 48
h = 1/4
[state]
center = (2, 0, 0)
sigma = 1
variants = false
[checks]
suite = gauge, converge:gauge
refine = 1.4142135623730951
)";

const char* const kLandau = R"(name = landau-ground-state
description = lowest Landau level at hbar omega_c / 2 in the symmetric gauge
[field]
param B = 1
A = (-B*y/2, B*x/2, 0)
[grid]
dims = 64, 64
h = 1/8
[checks]
suite = landau
)";

const char* const kPropagator = R"(name = propagator-properties
description = free spreading, unitarity and time reversal of the Crank-Nicolson step
[grid]
dims = 2000
h = 1/20
[state]
sigma = 1
[checks]
suite = propagator
dt = 1/400
steps = 800
)";

}  // namespace

const std::vector<BuiltinScenario>& builtin_scenarios() {
  static const std::vector<BuiltinScenario> all = [] {
    std::vector<BuiltinScenario> out;
    for (const char* text : {kTensors, kCanonical, kKineticL, kPiPi, kPiPiZero, kForces,
                             kForcesNonuniform, kTorqueStatic, kTorqueCentral, kTorqueDynamic, kGauge,
                             kLandau, kPropagator}) {
      const Scenario s = parse_scenario(text);
      out.push_back({s.name, s.description, text});
    }
    return out;
  }();
  return all;
}

const BuiltinScenario& builtin_scenario(std::string_view name) {
  const auto& all = builtin_scenarios();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const BuiltinScenario& s) { return s.name == name; });
  if (it == all.end()) {
    throw Error(ErrorCode::unknown_scenario, "unknown scenario '" + std::string(name) + "'");
  }
  return *it;
}

}  // namespace kam
