#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "kam/errors.hpp"
#include "kam/field_parser.hpp"
#include "kam/operators.hpp"

using kam::Complex;
using kam::Grid;
using kam::Index3;
using kam::LinearOperator;
using kam::Rational;

namespace {

kam::FieldConfig unit_b(kam::Gauge gauge = kam::Gauge::symmetric) {
  return kam::make_uniform_b({Rational(0), Rational(0), Rational(1)}, gauge);
}

kam::WaveFunction packet(const Grid& g, double sigma, std::array<double, 3> k = {0, 0, 0}) {
  kam::PacketSpec s;
  s.sigma = sigma;
  s.wavevector = k;
  return kam::gaussian_packet(g, s);
}

std::vector<double> dense_spectrum(const LinearOperator& op) {
  const Eigen::MatrixXcd m(op.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
}

}  // namespace

TEST(Operators, DerivativeIsAntisymmetricCentralDifference) {
  const Grid g({10}, 0.5);
  const LinearOperator d = kam::build_derivative(g, Index3(1));
  const kam::SparseMatrix m = d.matrix();
  const kam::SparseMatrix mt = m.transpose();
  EXPECT_EQ(kam::max_entry_difference(m, -mt), 0.0);
  EXPECT_EQ(m.coeff(3, 4), Complex(1.0, 0.0));  // 1 / 2h
  EXPECT_EQ(m.coeff(3, 2), Complex(-1.0, 0.0));
  EXPECT_EQ(kam::build_derivative(g, Index3(2)).stored_nonzeros(), 0u);
}

TEST(Operators, CanonicalCommutatorIsSecondOrder) {
  // [x, p] psi = i hbar psi + O(h^2) in the interior.
  std::vector<double> errors;
  for (double h : {0.2, 0.1, 0.05}) {
    const Grid g = Grid::centered({static_cast<int>(std::lround(16 / h)) - 1}, h);
    const auto psi = packet(g, 1.0, {0.5, 0, 0});
    const auto x = kam::build_position(g, Index3(1));
    const auto p = kam::build_momentum(g, Index3(1));
    const kam::ComplexVector r =
        kam::commutator_apply(x, p, psi).amplitudes() - Complex(0, 1) * psi.amplitudes();
    errors.push_back(kam::interior_norm(g, r, 4));
  }
  EXPECT_NEAR(std::log(errors[0] / errors[1]) / std::log(2.0), 2.0, 0.1);
  EXPECT_NEAR(std::log(errors[1] / errors[2]) / std::log(2.0), 2.0, 0.1);
}

TEST(Operators, HermitianOperatorsPassRandomDefectCheck) {
  const Grid g = Grid::centered({12, 12, 12}, 0.5);
  const auto cfg = unit_b();
  for (const char* label : {"p1", "pi2", "l3", "L1", "H", "x2", "T3"}) {
    const auto op = kam::build_named(g, cfg, label);
    EXPECT_TRUE(op.hermitian()) << label;
    EXPECT_LT(kam::hermiticity_defect(op, 5, 10), 1e-12) << label;
  }
  EXPECT_FALSE(kam::build_derivative(g, Index3(1)).hermitian());
}

TEST(Operators, ZeroFieldKineticAngularMomentumIsCanonical) {
  const Grid g = Grid::centered({10, 10, 10}, 0.5);
  for (const Index3 i : Index3::all()) {
    const auto kinetic = kam::build_L(g, kam::make_zero_field(), i);
    const auto canonical = kam::build_l(g, i);
    EXPECT_EQ(kam::max_entry_difference(kinetic.matrix(), canonical.matrix()), 0.0) << i.value();
  }
}

TEST(Operators, DerivativeIsExactOnLinearFunctionsInTheInterior) {
  // f = (3 - 2y) on points at least 2 cells from every wall; D_y f = -2 there.
  const Grid g = Grid::centered({12, 12, 12}, 0.3);
  kam::ComplexVector f(static_cast<Eigen::Index>(g.point_count()));
  for (std::size_t n = 0; n < g.point_count(); ++n) {
    f[static_cast<Eigen::Index>(n)] = g.is_interior(n, 1) ? Complex(3 - 2 * g.position(n)[1], 0) : 0.0;
  }
  const auto df = kam::build_derivative(g, Index3(2)).apply(f);
  for (std::size_t n = 0; n < g.point_count(); ++n) {
    if (g.is_interior(n, 2)) EXPECT_NEAR(std::abs(df[static_cast<Eigen::Index>(n)] + 2.0), 0.0, 1e-13);
  }
}

TEST(Operators, CommutatorAlgebraHoldsOnRandomStates) {
  const Grid g = Grid::centered({10, 10, 10}, 0.5);
  const auto cfg = unit_b();
  const auto a = kam::build_pi(g, cfg, Index3(1));
  const auto b = kam::build_L(g, cfg, Index3(2));
  const auto c = kam::build_position(g, Index3(3));
  kam::WaveFunction psi(g, kam::ComplexVector::Random(static_cast<Eigen::Index>(g.point_count())));
  const auto ab = kam::commutator_apply(a, b, psi).amplitudes();
  const auto ba = kam::commutator_apply(b, a, psi).amplitudes();
  EXPECT_LT((ab + ba).norm(), 1e-12 * ab.norm());
  const auto sum = kam::commutator_apply(a + Complex(2.5, -1) * c, b, psi).amplitudes();
  const kam::ComplexVector parts = ab + Complex(2.5, -1) * kam::commutator_apply(c, b, psi).amplitudes();
  EXPECT_LT((sum - parts).norm(), 1e-12 * sum.norm());
  const auto anti_ab = kam::anticommutator_apply(a, b, psi).amplitudes();
  const auto anti_ba = kam::anticommutator_apply(b, a, psi).amplitudes();
  EXPECT_LT((anti_ab - anti_ba).norm(), 1e-12 * anti_ab.norm());
}

TEST(Operators, KineticAngularMomentumFromPiMatches) {
  const Grid g = Grid::centered({26, 26, 26}, 0.25);
  const auto cfg = unit_b();
  const auto psi = packet(g, 0.75, {0.2, 0.1, -0.3});
  for (const Index3 i : Index3::all()) {
    const auto a = kam::build_L(g, cfg, i).apply(psi.amplitudes());
    const auto b = kam::build_L_from_pi(g, cfg, i).apply(psi.amplitudes());
    EXPECT_LT((a - b).norm(), 1e-12 * a.norm()) << i.value();
  }
}

TEST(Operators, LazyComposeAgreesWithAssembledProduct) {
  const Grid g = Grid::centered({26, 26, 26}, 0.25);
  const auto cfg = unit_b();
  const auto a = kam::build_pi(g, cfg, Index3(1));
  const auto b = kam::build_l(g, Index3(3));
  const auto lazy = kam::compose(a, b);
  const auto dense = kam::product(a, b);
  EXPECT_FALSE(lazy.is_assembled());
  EXPECT_TRUE(dense.is_assembled());
  EXPECT_THROW(lazy.matrix(), kam::Error);
  const auto psi = packet(g, 0.75);
  EXPECT_LT((lazy.apply(psi.amplitudes()) - dense.apply(psi.amplitudes())).norm(), 1e-12);
}

TEST(Operators, ComposedHamiltonianHasExactDiscreteGroundEnergy) {
  // D is antisymmetric tridiagonal with eigenvalues i cos(j pi / (N + 1)) / h,
  // so -D^2 / 2 bottoms out at sin^2(pi / (2 (N + 1))) / (2 h^2) for even N.
  const int n = 20;
  const double h = 0.25;
  const Grid g({n}, h);
  const auto spectrum = dense_spectrum(kam::build_hamiltonian(g, kam::make_zero_field()));
  const double expected = std::pow(std::sin(M_PI / (2.0 * (n + 1))), 2) / (2 * h * h);
  EXPECT_NEAR(spectrum.front(), expected, 1e-12);
}

TEST(Operators, CompactHamiltonianSpectrumIsGaugeIndependent) {
  const Grid g = Grid::centered({12, 12}, 0.5);
  const auto sym = dense_spectrum(kam::build_hamiltonian_compact(g, unit_b(kam::Gauge::symmetric)));
  const auto lan = dense_spectrum(kam::build_hamiltonian_compact(g, unit_b(kam::Gauge::landau)));
  ASSERT_EQ(sym.size(), lan.size());
  for (std::size_t k = 0; k < sym.size(); ++k) EXPECT_NEAR(sym[k], lan[k], 1e-10);
}

TEST(Operators, CompactHamiltonianReducesToLaplacianWithoutField) {
  const Grid g({8}, 1.0);
  const auto m = kam::build_hamiltonian_compact(g, kam::make_zero_field()).matrix();
  EXPECT_EQ(m.coeff(3, 3), Complex(1.0, 0.0));
  EXPECT_EQ(m.coeff(3, 4), Complex(-0.5, 0.0));
}

TEST(Operators, ForceFormsCoincideExactlyInUniformField) {
  const Grid g = Grid::centered({26, 26, 26}, 0.4);
  const auto cfg = unit_b();
  const auto psi = packet(g, 1.2, {0.2, 0.0, 0.1});
  for (const Index3 k : Index3::all()) {
    const auto a = kam::build_magnetic_force(g, cfg, k, kam::ForceForm::anticommutator)
                       .apply(psi.amplitudes());
    const auto e =
        kam::build_magnetic_force(g, cfg, k, kam::ForceForm::expanded).apply(psi.amplitudes());
    EXPECT_LT((a - e).norm(), 1e-12 * std::max(1.0, a.norm()));
  }
}

TEST(Operators, ExpandedForceHermitianOnlyForUniformField) {
  const Grid g = Grid::centered({10, 10, 10}, 0.5);
  const kam::FieldConfig nonuniform(kam::parse_vector_expression("(0, x^2, 0)"), {});
  EXPECT_FALSE(
      kam::build_magnetic_force(g, nonuniform, Index3(2), kam::ForceForm::expanded).hermitian());
  EXPECT_TRUE(
      kam::build_magnetic_force(g, nonuniform, Index3(2), kam::ForceForm::anticommutator).hermitian());
  EXPECT_TRUE(kam::build_magnetic_force(g, unit_b(), Index3(2), kam::ForceForm::expanded).hermitian());
}

TEST(Operators, NamedOperatorsValidateLabels) {
  const Grid g({8, 8, 8}, 0.5);
  const auto cfg = kam::make_zero_field();
  EXPECT_NO_THROW(kam::build_named(g, cfg, "T3"));
  EXPECT_NO_THROW(kam::build_named(g, cfg, "1"));
  EXPECT_THROW(kam::build_named(g, cfg, "Q1"), kam::Error);
  EXPECT_THROW(kam::build_named(g, cfg, "L4"), kam::Error);
}

TEST(Operators, ExpectationNeedsNormalizedState) {
  const Grid g({8, 8}, 0.5);
  const kam::WaveFunction psi(g, kam::ComplexVector::Ones(64));
  EXPECT_THROW(kam::expectation(kam::identity_operator(g), psi), kam::Error);
  kam::WaveFunction n = psi;
  n.normalize();
  EXPECT_NEAR(kam::expectation(kam::identity_operator(g), n).real(), 1.0, 1e-14);
}

TEST(Operators, GridMismatchIsRejected) {
  const Grid a({8, 8}, 0.5), b({8, 8}, 0.25);
  EXPECT_THROW(kam::build_position(a, Index3(1)) + kam::build_position(b, Index3(1)), kam::Error);
}
