#pragma once

#include <Eigen/Core>
#include <complex>

#include "kam/grid.hpp"

namespace kam {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

// Complex amplitudes on a grid with the discrete L2 inner product
// <phi|psi> = h^d sum conj(phi) psi.
class WaveFunction {
 public:
  explicit WaveFunction(Grid grid);
  WaveFunction(Grid grid, ComplexVector amplitudes);

  const Grid& grid() const noexcept { return grid_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  ComplexVector& amplitudes() noexcept { return amplitudes_; }

  Complex inner(const WaveFunction& other) const;  // <this|other>
  double norm() const;
  void normalize();
  bool is_normalized(double tolerance = 1e-10) const;
  bool is_finite() const;

 private:
  Grid grid_;
  ComplexVector amplitudes_;
};

// Discrete inner product of raw amplitude vectors on `grid`.
Complex inner_product(const Grid& grid, const ComplexVector& a, const ComplexVector& b);
double l2_norm(const Grid& grid, const ComplexVector& v);
// L2 norm restricted to points at least `guard` cells from every wall.
double interior_norm(const Grid& grid, const ComplexVector& v, int guard);

struct PacketSpec {
  std::array<double, 3> center{0, 0, 0};
  double sigma = 1.0;
  std::array<double, 3> wavevector{0, 0, 0};
  int vortex = 0;  // azimuthal winding about the packet center, in the xy plane
};

// N exp(-|r-c|^2 / 4 sigma^2) exp(i k.r) ((x-cx) +- i (y-cy))^|m|.
// The vortex factor carries the phase e^{i m phi}; the radial factor rho^|m|
// keeps the state smooth at the core. Requires sigma >= 3h and the center at
// least 4 sigma from every wall.
WaveFunction gaussian_packet(const Grid& grid, const PacketSpec& spec);

// Diagnostic text for violated packet preconditions; empty when they hold.
std::string packet_precondition_violation(const Grid& grid, const PacketSpec& spec);

}  // namespace kam
