#include "kam/runner.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "kam/errors.hpp"
#include "kam/operators.hpp"
#include "kam/tensor_identities.hpp"
#include "kam/verification.hpp"

namespace kam {

Json json_number(double value) {
  if (std::isfinite(value)) return value;
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

double json_to_number(const Json& value) {
  if (value.is_number()) return value.get<double>();
  const std::string s = value.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw Error(ErrorCode::parse_error, "expected a number, got '" + s + "'");
}

namespace {

bool same_number(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same_optional(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_number(*a, *b);
}

bool same_trace(const std::optional<PropagationTrace>& a, const std::optional<PropagationTrace>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->times == b->times && a->labels == b->labels && a->observables == b->observables &&
         a->norm_drift == b->norm_drift;
}

Json array3(const std::array<double, 3>& v) {
  return Json::array({json_number(v[0]), json_number(v[1]), json_number(v[2])});
}

// Everything a check needs, with tolerances already scaled.
class CheckContext {
 public:
  CheckContext(const Scenario& scenario, const RunOptions& options)
      : scenario_(scenario),
        scale_(options.tolerance_scale),
        seed_(options.seed.value_or(scenario.checks.seed)),
        config_(scenario.field.config()) {}

  double tol(const std::string& key) const {
    const double t = scenario_.tolerance(key);
    return key == "order-min" || key == "order-max" ? t : t * scale_;
  }
  std::uint64_t seed() const { return seed_; }
  const Scenario& scenario() const { return scenario_; }
  const FieldConfig& config() const { return config_; }

  ResidualOptions residual_options(const std::string& key) const {
    ResidualOptions o;
    o.tolerance = tol(key);
    o.exact_tolerance = tol("exact");
    return o;
  }

  std::vector<std::pair<std::string, PacketSpec>> states(const Grid& grid) const {
    if (!scenario_.state.variants) return {{"gaussian", scenario_.state.packet}};
    return state_variants(grid, scenario_.state.packet, seed_);
  }

  double time_step(const Grid& grid) const {
    return scenario_.checks.dt > 0.0 ? scenario_.checks.dt : default_time_step(grid, config_);
  }

 private:
  const Scenario& scenario_;
  double scale_;
  std::uint64_t seed_;
  FieldConfig config_;
};

using ResidualFn = std::function<ResidualReport(const FieldConfig&, const WaveFunction&,
                                                const ResidualOptions&)>;

ResidualFn residual_function(const std::string& target) {
  if (target == "ll") {
    return [](const FieldConfig& c, const WaveFunction& psi, const ResidualOptions& o) {
      return verify_ll_commutation(psi, c.hbar(), o);
    };
  }
  if (target == "LL") return verify_LL_commutation;
  if (target == "pipi") return verify_pipi_commutation;
  if (target == "force-forms") return verify_force_forms;
  if (target == "ehrenfest-static") return verify_angular_ehrenfest_static;
  throw Error(ErrorCode::internal, "no residual function for '" + target + "'");
}

Json component_json(const std::string& state, const ResidualComponent& c) {
  Json j;
  if (!state.empty()) j["state"] = state;
  j["label"] = c.label;
  j["residual"] = json_number(c.residual);
  j["scale"] = json_number(c.scale);
  j["relative"] = c.relative;
  j["tolerance"] = json_number(c.tolerance);
  j["passed"] = c.passed;
  return j;
}

void absorb(CheckResult& out, const ResidualReport& r, const std::string& state) {
  Json& components = out.details["components"];
  for (const auto& c : r.components) {
    components.push_back(component_json(state, c));
    const double ratio = c.residual / c.tolerance;
    if (!out.tolerance || ratio > out.residual / *out.tolerance || std::isnan(ratio)) {
      out.residual = c.residual;
      out.tolerance = c.tolerance;
    }
    out.passed = out.passed && c.passed;
  }
}

void run_tensors(const CheckContext& ctx, CheckResult& out) {
  out.kind = "tensor";
  tensor::TensorSuiteOptions options;
  options.seed = ctx.seed();
  const auto reports = tensor::run_tensor_suite(options);
  out.passed = true;
  std::size_t failures = 0;
  Json families = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["name"] = r.name;
    j["cases"] = r.cases_checked;
    j["failures"] = r.failures.size();
    Json shown = Json::array();
    for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k) {
      const auto& f = r.failures[k];
      shown.push_back({{"step", f.step},
                       {"indices", f.indices},
                       {"lhs", f.lhs.str()},
                       {"rhs", f.rhs.str()}});
    }
    j["first_failures"] = shown;
    families.push_back(j);
    failures += r.failures.size();
    out.passed = out.passed && r.passed();
  }
  out.details["seed"] = ctx.seed();
  out.details["families"] = families;
  out.residual = static_cast<double>(failures);
  out.tolerance = 0.0;
}

void run_residual(const CheckContext& ctx, const std::string& check, CheckResult& out) {
  out.kind = "residual";
  const Grid grid = ctx.scenario().grid.build();
  const ResidualOptions options = ctx.residual_options(check);
  const ResidualFn fn = residual_function(check);
  out.passed = true;
  out.details["grid"] = grid.describe();
  Json states = Json::array();
  for (const auto& [label, packet] : ctx.states(grid)) {
    const WaveFunction psi = gaussian_packet(grid, packet);
    absorb(out, fn(ctx.config(), psi, options), label);
    states.push_back({{"state", label}, {"spec", describe(packet)}});
  }
  out.details["states"] = states;
}

bool is_central(const FieldConfig& config) {
  for (int a = 0; a < 3; ++a) {
    if (!config.hmag()[a].is_zero()) return false;
  }
  const PolynomialVector grad = gradient(config.scalar_potential());
  const PolynomialVector torque = {
      {Polynomial::variable(1) * grad[2] - Polynomial::variable(2) * grad[1],
       Polynomial::variable(2) * grad[0] - Polynomial::variable(0) * grad[2],
       Polynomial::variable(0) * grad[1] - Polynomial::variable(1) * grad[0]}};
  return torque.is_zero();
}

void run_central_torque(const CheckContext& ctx, CheckResult& out) {
  out.kind = "residual";
  if (!is_central(ctx.config())) {
    throw PreconditionError(
        "central-torque needs a rotation-invariant potential and zero magnetic field");
  }
  const Grid grid = ctx.scenario().grid.build();
  const double tolerance = ctx.tol("central-torque");
  out.passed = true;
  out.details["grid"] = grid.describe();
  for (const auto& [label, packet] : ctx.states(grid)) {
    const WaveFunction psi = gaussian_packet(grid, packet);
    ResidualReport r;
    for (const Index3 i : Index3::all()) {
      const double t = std::abs(expectation(build_torque(grid, ctx.config(), i), psi));
      r.add({"|<T" + std::to_string(i.value()) + ">|", t, 1.0, false, tolerance, t <= tolerance});
    }
    absorb(out, r, label);
  }
}

void run_dynamic(const CheckContext& ctx, CheckResult& out) {
  out.kind = "dynamic";
  const Grid grid = ctx.scenario().grid.build();
  const FieldConfig& config = ctx.config();
  const double dt = ctx.time_step(grid);
  int steps = ctx.scenario().checks.steps;
  if (steps == 0) {
    steps = 200;
    if (config.has_uniform_hmag()) {
      const auto b = config.hmag().evaluate(0.0, 0.0, 0.0);
      const double bm = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
      if (bm > 0.0) {
        const double omega = config.q() * bm / (config.mass() * config.c());
        steps = static_cast<int>(std::lround(2.0 * M_PI / (omega * dt)));
      }
    }
  }
  DynamicOptions options;
  options.tolerance = ctx.tol("ehrenfest-dynamic");
  options.norm_step_tolerance = ctx.tol("norm-step");
  options.energy_tolerance = ctx.tol("energy-drift");
  const WaveFunction psi = gaussian_packet(grid, ctx.scenario().state.packet);
  DynamicReport r = verify_angular_ehrenfest_dynamic(config, psi, dt, steps, options);
  out.passed = true;
  absorb(out, r.summary, "");
  out.details["grid"] = grid.describe();
  out.details["state"] = describe(ctx.scenario().state.packet);
  out.details["dt"] = json_number(dt);
  out.details["steps"] = steps;
  out.trace = std::move(r.trace);
}

Json gauge_json(const GaugeReport& r) {
  Json j;
  j["L_before"] = array3(r.kinetic_L_before);
  j["L_after"] = array3(r.kinetic_L_after);
  j["energy_before"] = json_number(r.energy_before);
  j["energy_after"] = json_number(r.energy_after);
  j["l_shift"] = array3(r.canonical_shift);
  j["l_shift_predicted"] = array3(r.predicted_shift);
  j["invariance_residual"] = json_number(r.invariance_residual);
  j["shift_mismatch"] = json_number(r.shift_mismatch);
  return j;
}

GaugeOptions gauge_options(const CheckContext& ctx) {
  GaugeOptions o;
  o.invariance_tolerance = ctx.tol("gauge");
  o.shift_tolerance = ctx.tol("gauge-shift");
  return o;
}

void run_gauge(const CheckContext& ctx, CheckResult& out) {
  out.kind = "gauge";
  const Grid grid = ctx.scenario().grid.build();
  const WaveFunction psi = gaussian_packet(grid, ctx.scenario().state.packet);
  const GaugeReport r =
      verify_gauge_expectations(ctx.config(), *ctx.scenario().field.chi, psi, gauge_options(ctx));
  out.passed = true;
  absorb(out, r.summary, "");
  out.details["grid"] = grid.describe();
  out.details["state"] = describe(ctx.scenario().state.packet);
  out.details["chi"] = ctx.scenario().field.chi_text;
  out.details["expectations"] = gauge_json(r);
}

void run_convergence(const CheckContext& ctx, const std::string& target, CheckResult& out) {
  out.kind = "convergence";
  const ScenarioChecks& checks = ctx.scenario().checks;
  const double exact = ctx.tol("exact");
  const double omin = ctx.tol("order-min");
  const double omax = ctx.tol("order-max");
  const PacketSpec& packet = ctx.scenario().state.packet;

  std::vector<double> spacings;
  std::map<std::string, std::vector<double>> series;
  std::vector<std::string> order;  // first-seen component order
  Json levels = Json::array();
  bool shifts_ok = true;
  for (int l = checks.base_level; l < checks.base_level + checks.levels; ++l) {
    const Grid grid = ctx.scenario().grid.refined(l, checks.refine);
    const WaveFunction psi = gaussian_packet(grid, packet);
    spacings.push_back(grid.spacing());
    Json level = {{"level", l}, {"grid", grid.describe()}};
    auto push = [&](const std::string& label, double value) {
      if (!series.count(label)) order.push_back(label);
      series[label].push_back(value);
    };
    if (target == "gauge") {
      const GaugeReport r = verify_gauge_expectations(ctx.config(), *ctx.scenario().field.chi, psi,
                                                      gauge_options(ctx));
      push("gauge invariance", r.invariance_residual);
      shifts_ok = shifts_ok && r.shift_mismatch <= ctx.tol("gauge-shift");
      level["expectations"] = gauge_json(r);
    } else {
      ResidualOptions options = ctx.residual_options(target);
      const ResidualReport r = residual_function(target)(ctx.config(), psi, options);
      for (const auto& c : r.components) push(c.label, c.residual);
    }
    levels.push_back(level);
  }

  out.passed = shifts_ok;
  out.residual = 0.0;
  Json fits = Json::array();
  double worst_gap = -1.0;
  for (const auto& label : order) {
    const ConvergenceReport fit =
        fit_convergence(label, spacings, series[label], exact, omin, omax);
    Json residuals = Json::array();
    for (double r : fit.residuals) residuals.push_back(json_number(r));
    fits.push_back({{"label", label},
                    {"residuals", residuals},
                    {"fitted_order", json_number(fit.fitted_order)},
                    {"exact", fit.exact},
                    {"passed", fit.passed}});
    out.passed = out.passed && fit.passed;
    out.residual = std::max(out.residual, fit.residuals.back());
    if (!fit.exact) {
      const double gap = std::abs(fit.fitted_order - fit.expected_order);
      if (gap > worst_gap || std::isnan(gap)) {
        worst_gap = gap;
        out.order = fit.fitted_order;
      }
    }
  }
  Json hs = Json::array();
  for (double h : spacings) hs.push_back(json_number(h));
  out.details["target"] = target;
  out.details["spacings"] = hs;
  out.details["order_window"] = {json_number(omin), json_number(omax)};
  out.details["fits"] = fits;
  out.details["levels"] = levels;
  if (target == "gauge") out.details["l_shift_within_tolerance_at_every_level"] = shifts_ok;
}

void run_landau(const CheckContext& ctx, CheckResult& out) {
  out.kind = "ground-state";
  const FieldConfig& config = ctx.config();
  const Grid grid = ctx.scenario().grid.build();
  if (grid.dimension() != 2) throw PreconditionError("landau needs a 2D grid");
  if (!config.has_uniform_hmag() || !config.scalar_potential().is_zero()) {
    throw PreconditionError("landau needs a uniform magnetic field and V = 0");
  }
  const auto b = config.hmag().evaluate(0.0, 0.0, 0.0);
  if (b[0] != 0.0 || b[1] != 0.0 || !(b[2] != 0.0)) {
    throw PreconditionError("landau needs the magnetic field along z");
  }
  const double bz = std::abs(b[2]);
  const double length = std::sqrt(config.hbar() * config.c() / (config.q() * bz));
  const double h = grid.spacing();
  const double box = std::min(grid.size(0), grid.size(1)) * h + h;
  if (length < 6.0 * h * (1.0 - 1e-12) || length > box / 8.0 * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "magnetic length " << length << " must lie in [6h, box/8] = [" << 6.0 * h << ", "
       << box / 8.0 << "]";
    throw PreconditionError(os.str());
  }
  const double expected = config.hbar() * config.q() * bz / (2.0 * config.mass() * config.c());
  const GroundState gs = ground_state(build_hamiltonian_compact(grid, config));
  const double error = std::abs(gs.energy - expected) / expected;
  ResidualReport r;
  r.add({"ground energy vs hbar omega_c / 2", error, expected, true, ctx.tol("landau"),
         error <= ctx.tol("landau")});

  // Same physical box on 32 x 32, solved both ways.
  const double h32 = box / 33.0;
  const Grid small = ctx.scenario().grid.origin
                         ? Grid({32, 32}, h32,
                                {grid.lower_wall(0) + h32, grid.lower_wall(1) + h32, 0.0})
                         : Grid::centered({32, 32}, h32, ctx.scenario().grid.center);
  const LinearOperator h_small = build_hamiltonian_compact(small, config);
  const GroundState gs_small = ground_state(h_small);
  const double dense = dense_lowest_eigenvalues(h_small, 1).front();
  const double agreement = std::abs(gs_small.energy - dense) / std::abs(dense);
  r.add({"iterative vs dense ground energy at 32x32", agreement, std::abs(dense), true,
         ctx.tol("landau-dense"), agreement <= ctx.tol("landau-dense")});

  out.passed = true;
  absorb(out, r, "");
  out.details["grid"] = grid.describe();
  out.details["magnetic_length"] = json_number(length);
  out.details["expected_energy"] = json_number(expected);
  out.details["ground_energy"] = json_number(gs.energy);
  out.details["eigen_residual"] = json_number(gs.residual);
  out.details["iterations"] = gs.iterations;
  out.details["dense_grid"] = small.describe();
  out.details["dense_energy"] = json_number(dense);
  out.details["iterative_energy_dense_grid"] = json_number(gs_small.energy);
}

void run_propagator(const CheckContext& ctx, CheckResult& out) {
  out.kind = "propagator";
  const FieldConfig& config = ctx.config();
  const auto& a = config.vector_potential();
  if (!a.is_zero() || !config.scalar_potential().is_zero()) {
    throw PreconditionError("propagator checks free spreading and need A = 0 and V = 0");
  }
  const PacketSpec& packet = ctx.scenario().state.packet;
  if (packet.vortex != 0) throw PreconditionError("propagator needs a plain Gaussian state");
  const Grid grid = ctx.scenario().grid.build();
  const double dt = ctx.time_step(grid);
  const int steps = ctx.scenario().checks.steps > 0 ? ctx.scenario().checks.steps : 200;
  const WaveFunction psi0 = gaussian_packet(grid, packet);
  const double slack = excursion_slack(config, psi0, dt * steps);
  if (slack < 0.0) {
    throw PreconditionError("the run would bring the packet within 4 sigma of a wall");
  }

  const LinearOperator h = build_hamiltonian(grid, config);
  const CrankNicolsonPropagator forward(h, dt, config.hbar());
  const CrankNicolsonPropagator backward(h, -dt, config.hbar());
  PropagationTrace trace;
  for (int d = 0; d < grid.dimension(); ++d) trace.labels.push_back("x" + std::to_string(d + 1));
  std::vector<LinearOperator> xs;
  for (int d = 0; d < grid.dimension(); ++d) xs.push_back(build_position(grid, Index3(d + 1)));
  const double norm0 = psi0.norm();
  double step_drift = 0.0;
  WaveFunction psi = psi0;
  auto record = [&](double t) {
    trace.times.push_back(t);
    for (std::size_t d = 0; d < xs.size(); ++d) {
      const Complex v = psi.inner(xs[d].apply(psi)) / (psi.norm() * psi.norm());
      trace.observables[trace.labels[d]].push_back(v);
    }
    const double drift = std::abs(psi.norm() - norm0);
    if (!trace.norm_drift.empty()) {
      step_drift = std::max(step_drift, std::abs(drift - trace.norm_drift.back()));
    }
    trace.norm_drift.push_back(drift);
  };
  record(0.0);
  for (int n = 1; n <= steps; ++n) {
    psi = forward.step(psi);
    record(n * dt);
  }

  const double t = steps * dt;
  const double s = packet.sigma;
  const double spread = config.hbar() * t / (2.0 * config.mass() * s * s);
  const double expected = s * std::sqrt(1.0 + spread * spread);
  ResidualReport r;
  Json widths = Json::array();
  const double weight = psi.amplitudes().squaredNorm();
  for (int d = 0; d < grid.dimension(); ++d) {
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t p = 0; p < grid.point_count(); ++p) {
      const double w = std::norm(psi.amplitudes()[static_cast<Eigen::Index>(p)]) / weight;
      const double x = grid.position(p)[d];
      m1 += w * x;
      m2 += w * x * x;
    }
    const double width = std::sqrt(m2 - m1 * m1);
    widths.push_back(json_number(width));
    const double err = std::abs(width - expected) / expected;
    r.add({"width x" + std::to_string(d + 1) + " vs sigma(t)", err, expected, true,
           ctx.tol("propagator"), err <= ctx.tol("propagator")});
  }
  r.add({"norm drift per step", step_drift, 1.0, false, ctx.tol("norm-step"),
         step_drift <= ctx.tol("norm-step")});

  WaveFunction back = psi;
  for (int n = 0; n < steps; ++n) back = backward.step(back);
  const double reversal = l2_norm(grid, back.amplitudes() - psi0.amplitudes());
  r.add({"time-reversal return", reversal, 1.0, false, ctx.tol("propagator-reversal"),
         reversal <= ctx.tol("propagator-reversal")});

  out.passed = true;
  absorb(out, r, "");
  out.details["grid"] = grid.describe();
  out.details["state"] = describe(packet);
  out.details["dt"] = json_number(dt);
  out.details["steps"] = steps;
  out.details["expected_width"] = json_number(expected);
  out.details["widths"] = widths;
  out.trace = std::move(trace);
}

void dispatch(const CheckContext& ctx, const std::string& check, CheckResult& out) {
  if (check == "verify-tensors") return run_tensors(ctx, out);
  if (check == "central-torque") return run_central_torque(ctx, out);
  if (check == "ehrenfest-dynamic") return run_dynamic(ctx, out);
  if (check == "gauge") return run_gauge(ctx, out);
  if (check == "landau") return run_landau(ctx, out);
  if (check == "propagator") return run_propagator(ctx, out);
  if (check.rfind("converge:", 0) == 0) return run_convergence(ctx, check.substr(9), out);
  return run_residual(ctx, check, out);
}

}  // namespace

bool operator==(const CheckResult& a, const CheckResult& b) {
  return a.name == b.name && a.kind == b.kind && a.passed == b.passed &&
         same_number(a.residual, b.residual) && same_optional(a.tolerance, b.tolerance) &&
         same_optional(a.order, b.order) && a.error == b.error && a.details == b.details &&
         same_trace(a.trace, b.trace);
}

bool operator==(const RunReport& a, const RunReport& b) {
  return a.scenario_name == b.scenario_name && a.scenario == b.scenario && a.seed == b.seed &&
         a.tolerance_scale == b.tolerance_scale && a.checks == b.checks && a.passed == b.passed &&
         same_number(a.wall_time_seconds, b.wall_time_seconds);
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["description"] = s.description;
  Json field;
  Json params = Json::object();
  for (const auto& name : s.field.parameter_order) params[name] = s.field.parameters.at(name).str();
  field["parameters"] = params;
  field["A"] = s.field.a_text;
  field["V"] = s.field.v_text;
  field["chi"] = s.field.chi_text;
  field["A_polynomial"] = s.field.a.to_string();
  field["V_polynomial"] = s.field.v.to_string();
  const PhysicalConstants& c = s.field.constants;
  field["constants"] = {{"q", c.charge.str()},
                        {"hbar", c.hbar.str()},
                        {"m", c.mass.str()},
                        {"c", c.light_speed.str()}};
  j["field"] = field;
  Json grid;
  grid["dims"] = s.grid.dims;
  grid["h"] = json_number(s.grid.h);
  if (s.grid.origin) grid["origin"] = array3(*s.grid.origin);
  else grid["center"] = array3(s.grid.center);
  j["grid"] = grid;
  j["state"] = {{"center", array3(s.state.packet.center)},
                {"sigma", json_number(s.state.packet.sigma)},
                {"k", array3(s.state.packet.wavevector)},
                {"vortex", s.state.packet.vortex},
                {"variants", s.state.variants}};
  Json tolerances = Json::object();
  for (const auto& [k, v] : s.checks.tolerances) tolerances[k] = json_number(v);
  j["checks"] = {{"suite", s.checks.suite},
                 {"tolerances", tolerances},
                 {"levels", s.checks.levels},
                 {"base_level", s.checks.base_level},
                 {"refine", json_number(s.checks.refine)},
                 {"dt", json_number(s.checks.dt)},
                 {"steps", s.checks.steps},
                 {"seed", s.checks.seed}};
  return j;
}

RunReport run_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!(options.tolerance_scale > 0.0) || !std::isfinite(options.tolerance_scale)) {
    throw Error(ErrorCode::invalid_argument, "tolerance scale must be positive and finite");
  }
  validate_scenario(scenario);
  RunReport report;
  report.scenario_name = scenario.name;
  report.scenario = scenario_to_json(scenario);
  report.seed = options.seed.value_or(scenario.checks.seed);
  report.tolerance_scale = options.tolerance_scale;
  const CheckContext ctx(scenario, options);
  report.passed = true;
  for (const auto& check : scenario.checks.suite) {
    CheckResult result;
    result.name = check;
    try {
      dispatch(ctx, check, result);
    } catch (const std::exception& e) {
      result.passed = false;
      result.error = e.what();
      if (const auto* err = dynamic_cast<const Error*>(&e)) {
        result.details["error_code"] = to_string(err->code());
      }
      if (const auto* solver = dynamic_cast<const SolverError*>(&e)) {
        result.details["final_residual"] = json_number(solver->final_residual());
      }
    }
    report.passed = report.passed && result.passed;
    report.checks.push_back(std::move(result));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace kam
