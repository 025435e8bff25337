#include "kam/operators.hpp"

#include <cmath>

#include "kam/errors.hpp"

namespace kam {

namespace {

using Triplet = Eigen::Triplet<Complex>;

int eps(int i, int j, int k) {
  return tensor::levi_civita(Index3(i + 1), Index3(j + 1), Index3(k + 1));
}

std::string axis_label(const char* stem, Index3 axis) {
  return std::string(stem) + std::to_string(axis.value());
}

SparseMatrix from_triplets(const Grid& grid, const std::vector<Triplet>& triplets) {
  const auto n = static_cast<Eigen::Index>(grid.point_count());
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

// Offsets (in linear index) of the +1 neighbour along each axis.
std::size_t stride(const Grid& grid, int axis) {
  std::size_t s = 1;
  for (int a = 0; a < axis; ++a) s *= static_cast<std::size_t>(grid.size(a));
  return s;
}

}  // namespace

const char* to_string(ForceForm form) {
  switch (form) {
    case ForceForm::definition: return "definition";
    case ForceForm::anticommutator: return "anticommutator";
    case ForceForm::expanded: return "expanded";
  }
  return "?";
}

LinearOperator polynomial_diagonal(const Grid& grid, const Polynomial& p, double scale,
                                   std::string label) {
  ComplexVector values(grid.point_count());
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    const auto r = grid.position(n);
    values[static_cast<Eigen::Index>(n)] = scale * p.evaluate(r[0], r[1], r[2]);
  }
  return diagonal_operator(grid, values, std::move(label), true);
}

LinearOperator build_position(const Grid& grid, Index3 axis) {
  ComplexVector values(grid.point_count());
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    values[static_cast<Eigen::Index>(n)] = grid.position(n)[axis.offset()];
  }
  return diagonal_operator(grid, values, axis_label("x", axis), true);
}

LinearOperator build_derivative(const Grid& grid, Index3 axis) {
  const int a = axis.offset();
  const std::string label = axis_label("D", axis);
  if (!grid.active(a)) return zero_operator(grid, label);

  const std::size_t s = stride(grid, a);
  const double w = 0.5 / grid.spacing();
  std::vector<Triplet> triplets;
  triplets.reserve(2 * grid.point_count());
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    const int idx = grid.multi_index(n)[a];
    const auto row = static_cast<Eigen::Index>(n);
    if (idx + 1 < grid.size(a)) triplets.emplace_back(row, static_cast<Eigen::Index>(n + s), w);
    if (idx > 0) triplets.emplace_back(row, static_cast<Eigen::Index>(n - s), -w);
  }
  return LinearOperator(grid, from_triplets(grid, triplets), label, false);
}

LinearOperator build_momentum(const Grid& grid, Index3 axis, double hbar) {
  return (Complex(0.0, -hbar) * build_derivative(grid, axis))
      .with_label(axis_label("p", axis))
      .with_hermitian(true);
}

LinearOperator build_pi(const Grid& grid, const FieldConfig& config, Index3 axis) {
  const LinearOperator p = build_momentum(grid, axis, config.hbar());
  const LinearOperator a = polynomial_diagonal(grid, config.vector_potential()[axis.offset()],
                                               config.q() / config.c(), "qA/c");
  return (p - a).with_label(axis_label("pi", axis)).with_hermitian(true);
}

LinearOperator build_l(const Grid& grid, Index3 i, double hbar) {
  LinearOperator l = zero_operator(grid);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int e = eps(i.offset(), j, k);
      if (e == 0) continue;
      const LinearOperator xd =
          product(build_position(grid, Index3(j + 1)), build_derivative(grid, Index3(k + 1)));
      l = l + Complex(0.0, -hbar * e) * xd;
    }
  return l.with_label(axis_label("l", i)).with_hermitian(true);
}

LinearOperator build_L(const Grid& grid, const FieldConfig& config, Index3 i) {
  Polynomial coupling;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int e = eps(i.offset(), j, k);
      if (e == 0) continue;
      coupling += Rational(e) * Polynomial::variable(j) * config.vector_potential()[k];
    }
  const LinearOperator correction =
      polynomial_diagonal(grid, coupling, config.q() / config.c(), "(q/c)e x A");
  return (build_l(grid, i, config.hbar()) - correction)
      .with_label(axis_label("L", i))
      .with_hermitian(true);
}

LinearOperator build_L_from_pi(const Grid& grid, const FieldConfig& config, Index3 i) {
  LinearOperator out = zero_operator(grid);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int e = eps(i.offset(), j, k);
      if (e == 0) continue;
      out = out + Complex(e) * product(build_position(grid, Index3(j + 1)),
                                       build_pi(grid, config, Index3(k + 1)));
    }
  return out.with_label(axis_label("L", i)).with_hermitian(true);
}

namespace {

LinearOperator pi_squared_sum(const Grid& grid, const FieldConfig& config) {
  LinearOperator sum = zero_operator(grid);
  for (const Index3 a : Index3::all()) {
    const LinearOperator pa = build_pi(grid, config, a);
    sum = sum + product(pa, pa);
  }
  return sum.with_label("pi.pi").with_hermitian(true);
}

}  // namespace

LinearOperator build_hamiltonian(const Grid& grid, const FieldConfig& config) {
  const LinearOperator kinetic = Complex(0.5 / config.mass()) * pi_squared_sum(grid, config);
  LinearOperator h = kinetic;
  if (!config.scalar_potential().is_zero()) {
    h = h + polynomial_diagonal(grid, config.scalar_potential(), config.q(), "qV");
  }
  return h.with_label("Hamiltonian").with_hermitian(true);
}

LinearOperator build_hamiltonian_compact(const Grid& grid, const FieldConfig& config) {
  const double hop = config.hbar() * config.hbar() /
                     (2.0 * config.mass() * grid.spacing() * grid.spacing());
  const double phase_scale = config.q() / (config.hbar() * config.c());
  std::vector<Triplet> triplets;
  triplets.reserve(grid.point_count() * (1 + 2 * grid.dimension()));
  for (int a = 0; a < grid.dimension(); ++a) {
    const Polynomial primitive = config.vector_potential()[a].antiderivative(a);
    const std::size_t s = stride(grid, a);
    for (std::size_t n = 0; n < grid.point_count(); ++n) {
      triplets.emplace_back(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), 2.0 * hop);
      if (grid.multi_index(n)[a] + 1 >= grid.size(a)) continue;
      auto r0 = grid.position(n);
      auto r1 = r0;
      r1[a] += grid.spacing();
      const double theta = phase_scale * (primitive.evaluate(r1[0], r1[1], r1[2]) -
                                          primitive.evaluate(r0[0], r0[1], r0[2]));
      const Complex link = -hop * std::polar(1.0, -theta);
      triplets.emplace_back(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n + s), link);
      triplets.emplace_back(static_cast<Eigen::Index>(n + s), static_cast<Eigen::Index>(n),
                            std::conj(link));
    }
  }
  if (!config.scalar_potential().is_zero()) {
    for (std::size_t n = 0; n < grid.point_count(); ++n) {
      const auto r = grid.position(n);
      triplets.emplace_back(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n),
                            config.q() * config.scalar_potential().evaluate(r[0], r[1], r[2]));
    }
  }
  return LinearOperator(grid, from_triplets(grid, triplets), "Hamiltonian[compact]", true);
}

LinearOperator build_magnetic_force(const Grid& grid, const FieldConfig& config, Index3 k,
                                    ForceForm form) {
  const std::string label = axis_label("M", k) + "[" + to_string(form) + "]";
  const double q = config.q();
  const double m = config.mass();
  const double c = config.c();
  const double hbar = config.hbar();

  if (form == ForceForm::definition) {
    const LinearOperator p2 = pi_squared_sum(grid, config);
    const LinearOperator pk = build_pi(grid, config, k);
    const LinearOperator comm = compose(p2, pk) - compose(pk, p2);
    return (Complex(0.0, 1.0 / (2.0 * m * hbar)) * comm).with_label(label).with_hermitian(true);
  }

  LinearOperator out = zero_operator(grid);
  Polynomial curl_term;  // e_kmn d_m H_n
  for (int mm = 0; mm < 3; ++mm)
    for (int nn = 0; nn < 3; ++nn) {
      const int e = eps(k.offset(), mm, nn);
      if (e == 0) continue;
      const Polynomial& hn = config.hmag()[nn];
      if (hn.is_zero()) continue;
      const LinearOperator h_diag = polynomial_diagonal(grid, hn, 1.0, "H" + std::to_string(nn + 1));
      const LinearOperator pm = build_pi(grid, config, Index3(mm + 1));
      if (form == ForceForm::anticommutator) {
        out = out + Complex(e * q / (2.0 * m * c)) * (product(pm, h_diag) + product(h_diag, pm));
      } else {
        out = out + Complex(e * q / (m * c)) * product(h_diag, pm);
        curl_term += Rational(e) * hn.derivative(mm);
      }
    }
  if (form == ForceForm::expanded && !curl_term.is_zero()) {
    out = out - Complex(0.0, hbar * q / (2.0 * m * c)) *
                    polynomial_diagonal(grid, curl_term, 1.0, "e dH");
  }
  const bool herm = form == ForceForm::anticommutator || config.has_uniform_hmag();
  return out.with_label(label).with_hermitian(herm);
}

LinearOperator build_lorentz_force(const Grid& grid, const FieldConfig& config, Index3 k) {
  LinearOperator f = build_magnetic_force(grid, config, k, ForceForm::expanded);
  const bool herm = f.hermitian();
  const Polynomial& ek = config.electric()[k.offset()];
  if (!ek.is_zero()) f = f + polynomial_diagonal(grid, ek, config.q(), "qE");
  return f.with_label(axis_label("f", k)).with_hermitian(herm);
}

LinearOperator build_torque(const Grid& grid, const FieldConfig& config, Index3 i) {
  LinearOperator out = zero_operator(grid);
  bool herm = true;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const int e = eps(i.offset(), j, k);
      if (e == 0) continue;
      const LinearOperator xj = build_position(grid, Index3(j + 1));
      const LinearOperator fk = build_lorentz_force(grid, config, Index3(k + 1));
      herm = herm && fk.hermitian();
      out = out + Complex(0.5 * e) * (product(xj, fk) + product(fk, xj));
    }
  return out.with_label(axis_label("T", i)).with_hermitian(herm);
}

LinearOperator build_LL_correction(const Grid& grid, const FieldConfig& config, Index3 k) {
  Polynomial r_dot_h;
  for (int a = 0; a < 3; ++a) r_dot_h += Polynomial::variable(a) * config.hmag()[a];
  return polynomial_diagonal(grid, r_dot_h * Polynomial::variable(k.offset()),
                             config.q() / config.c(), axis_label("(q/c)(r.H)x", k));
}

LinearOperator build_named(const Grid& grid, const FieldConfig& config, const std::string& label) {
  if (label == "H" || label == "Hamiltonian") return build_hamiltonian(grid, config);
  if (label == "1") return identity_operator(grid);
  auto split = [&](const std::string& stem) -> int {
    if (label.size() != stem.size() + 1 || label.compare(0, stem.size(), stem) != 0) return 0;
    const char d = label.back();
    return (d >= '1' && d <= '3') ? d - '0' : 0;
  };
  if (int a = split("x")) return build_position(grid, Index3(a));
  if (int a = split("D")) return build_derivative(grid, Index3(a));
  if (int a = split("p")) return build_momentum(grid, Index3(a), config.hbar());
  if (int a = split("pi")) return build_pi(grid, config, Index3(a));
  if (int a = split("l")) return build_l(grid, Index3(a), config.hbar());
  if (int a = split("L")) return build_L(grid, config, Index3(a));
  if (int a = split("T")) return build_torque(grid, config, Index3(a));
  if (int a = split("f")) return build_lorentz_force(grid, config, Index3(a));
  throw Error(ErrorCode::invalid_argument, "unknown operator label '" + label + "'");
}

}  // namespace kam
