#include <gtest/gtest.h>

#include <cmath>

#include "kam/errors.hpp"
#include "kam/grid.hpp"
#include "kam/wavefunction.hpp"

using kam::Grid;
using kam::PacketSpec;

TEST(Grid, IndexRoundTripAndLayout) {
  const Grid g({9, 10, 11}, 0.5, {1.0, 2.0, 3.0});
  EXPECT_EQ(g.point_count(), 990u);
  EXPECT_EQ(g.linear_index(1, 0, 0), 1u);
  EXPECT_EQ(g.linear_index(0, 1, 0), 9u);
  for (std::size_t n = 0; n < g.point_count(); n += 37) {
    const auto idx = g.multi_index(n);
    EXPECT_EQ(g.linear_index(idx[0], idx[1], idx[2]), n);
  }
  EXPECT_DOUBLE_EQ(g.coordinate(1, 4), 4.0);
  EXPECT_DOUBLE_EQ(g.lower_wall(0), 0.5);
  EXPECT_DOUBLE_EQ(g.upper_wall(0), 1.0 + 9 * 0.5);
  EXPECT_DOUBLE_EQ(g.cell_volume(), 0.125);
}

TEST(Grid, InactiveAxesHaveZeroCoordinate) {
  const Grid g({16, 16}, 0.25);
  EXPECT_EQ(g.dimension(), 2);
  EXPECT_FALSE(g.active(2));
  EXPECT_EQ(g.size(2), 1);
  EXPECT_DOUBLE_EQ(g.position(5)[2], 0.0);
  EXPECT_DOUBLE_EQ(g.cell_volume(), 0.0625);
}

TEST(Grid, CenteredPlacementIsSymmetric) {
  const Grid g = Grid::centered({8, 9}, 0.5, {1.0, -1.0, 0.0});
  EXPECT_DOUBLE_EQ(g.lower_wall(0) + g.upper_wall(0), 2.0);
  EXPECT_DOUBLE_EQ(g.lower_wall(1) + g.upper_wall(1), -2.0);
}

TEST(Grid, RejectsBadShapes) {
  EXPECT_THROW(Grid({7}, 0.1), kam::Error);
  EXPECT_THROW(Grid({}, 0.1), kam::Error);
  EXPECT_THROW(Grid({8, 8, 8, 8}, 0.1), kam::Error);
  EXPECT_THROW(Grid({8}, 0.0), kam::Error);
  EXPECT_THROW(Grid({8}, -1.0), kam::Error);
}

TEST(Grid, InteriorGuardExcludesCellsNearWalls) {
  const Grid g({10}, 1.0);
  int interior = 0;
  for (std::size_t n = 0; n < g.point_count(); ++n) interior += g.is_interior(n, 4) ? 1 : 0;
  EXPECT_EQ(interior, 2);  // n = 4, 5
  EXPECT_TRUE(g.is_interior(0, 0));
}

TEST(Packet, NormalizedWithCenteredMean) {
  const Grid g = Grid::centered({32, 32, 32}, 0.25);
  PacketSpec s;
  s.sigma = 1.0;
  s.wavevector = {0.3, -0.2, 0.1};
  const auto psi = kam::gaussian_packet(g, s);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
  EXPECT_TRUE(psi.is_normalized());
  std::array<double, 3> mean{0, 0, 0};
  for (std::size_t n = 0; n < g.point_count(); ++n) {
    const double w = std::norm(psi.amplitudes()[static_cast<Eigen::Index>(n)]) * g.cell_volume();
    for (int d = 0; d < 3; ++d) mean[d] += w * g.position(n)[d];
  }
  for (double m : mean) EXPECT_NEAR(m, 0.0, 1e-8);
}

TEST(Packet, PositionVarianceIsSigmaSquared) {
  const Grid g = Grid::centered({400}, 0.05);
  PacketSpec s;
  s.sigma = 1.5;
  const auto psi = kam::gaussian_packet(g, s);
  double var = 0.0;
  for (std::size_t n = 0; n < g.point_count(); ++n) {
    const double x = g.position(n)[0];
    var += std::norm(psi.amplitudes()[static_cast<Eigen::Index>(n)]) * g.cell_volume() * x * x;
  }
  EXPECT_NEAR(var, 2.25, 1e-8);  // tails beyond the walls carry ~1e-9
}

TEST(Packet, VortexCarriesWinding) {
  const Grid g = Grid::centered({49, 49}, 0.25);
  PacketSpec s;
  s.sigma = 1.0;
  s.vortex = 2;
  const auto psi = kam::gaussian_packet(g, s);
  // Phase of the amplitude on the +x and +y axes differs by m * pi/2.
  const auto& a = psi.amplitudes();
  const double ph_x = std::arg(a[static_cast<Eigen::Index>(g.linear_index(32, 24, 0))]);
  const double ph_y = std::arg(a[static_cast<Eigen::Index>(g.linear_index(24, 32, 0))]);
  EXPECT_NEAR(std::remainder(ph_y - ph_x - M_PI, 2 * M_PI), 0.0, 1e-12);
}

TEST(Packet, PreconditionsNameTheProblem) {
  const Grid g = Grid::centered({32, 32, 32}, 0.25);
  PacketSpec narrow;
  narrow.sigma = 0.5;
  EXPECT_NE(kam::packet_precondition_violation(g, narrow).find("3h"), std::string::npos);
  EXPECT_THROW(kam::gaussian_packet(g, narrow), kam::PreconditionError);
  PacketSpec off;
  off.sigma = 1.0;
  off.center = {0.0, 2.0, 0.0};
  const std::string why = kam::packet_precondition_violation(g, off);
  EXPECT_NE(why.find("upper wall of axis 2"), std::string::npos) << why;
  PacketSpec vortex;
  vortex.sigma = 1.0;
  vortex.vortex = 1;
  EXPECT_THROW(kam::gaussian_packet(Grid::centered({64}, 0.25), vortex), kam::PreconditionError);
}

TEST(WaveFunction, InnerProductUsesCellVolume) {
  const Grid g({8, 8}, 0.5);
  kam::ComplexVector v = kam::ComplexVector::Ones(64);
  const kam::WaveFunction psi(g, v);
  EXPECT_DOUBLE_EQ(psi.norm(), std::sqrt(64 * 0.25));
  EXPECT_FALSE(psi.is_normalized());
  kam::WaveFunction copy = psi;
  copy.normalize();
  EXPECT_NEAR(copy.norm(), 1.0, 1e-15);
  EXPECT_THROW(kam::WaveFunction(g, kam::ComplexVector::Ones(10)), kam::Error);
}
