#include "kam/wavefunction.hpp"

#include <cmath>
#include <sstream>

#include "kam/errors.hpp"

namespace kam {

WaveFunction::WaveFunction(Grid grid)
    : grid_(std::move(grid)), amplitudes_(ComplexVector::Zero(grid_.point_count())) {}

WaveFunction::WaveFunction(Grid grid, ComplexVector amplitudes)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != grid_.point_count()) {
    throw Error(ErrorCode::grid_mismatch, "amplitude count does not match the grid");
  }
}

Complex WaveFunction::inner(const WaveFunction& other) const {
  if (!(grid_ == other.grid_)) {
    throw Error(ErrorCode::grid_mismatch, "inner product of states on different grids");
  }
  return inner_product(grid_, amplitudes_, other.amplitudes_);
}

double WaveFunction::norm() const { return l2_norm(grid_, amplitudes_); }

void WaveFunction::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw Error(ErrorCode::invalid_argument, "cannot normalize a zero state");
  amplitudes_ /= n;
}

bool WaveFunction::is_normalized(double tolerance) const {
  return std::abs(norm() - 1.0) <= tolerance;
}

bool WaveFunction::is_finite() const { return amplitudes_.allFinite(); }

Complex inner_product(const Grid& grid, const ComplexVector& a, const ComplexVector& b) {
  return grid.cell_volume() * a.dot(b);  // Eigen's dot conjugates the left side
}

double l2_norm(const Grid& grid, const ComplexVector& v) {
  return std::sqrt(grid.cell_volume()) * v.norm();
}

double interior_norm(const Grid& grid, const ComplexVector& v, int guard) {
  double sum = 0.0;
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    if (grid.is_interior(n, guard)) sum += std::norm(v[static_cast<Eigen::Index>(n)]);
  }
  return std::sqrt(grid.cell_volume() * sum);
}

std::string packet_precondition_violation(const Grid& grid, const PacketSpec& spec) {
  std::ostringstream os;
  os.precision(6);
  if (!(spec.sigma >= 3.0 * grid.spacing() * (1.0 - 1e-12))) {
    os << "packet width sigma = " << spec.sigma << " is below 3h = " << 3.0 * grid.spacing();
    return os.str();
  }
  if (spec.vortex != 0 && grid.dimension() < 2) {
    return "a vortex packet needs at least a 2D grid";
  }
  for (int axis = 0; axis < grid.dimension(); ++axis) {
    const double lo = spec.center[axis] - grid.lower_wall(axis);
    const double hi = grid.upper_wall(axis) - spec.center[axis];
    const double need = 4.0 * spec.sigma * (1.0 - 1e-12);
    if (lo < need || hi < need) {
      os << "packet center is " << std::min(lo, hi) << " from the "
         << (lo < hi ? "lower" : "upper") << " wall of axis " << axis + 1
         << "; the 4 sigma margin requires " << 4.0 * spec.sigma;
      return os.str();
    }
  }
  return {};
}

WaveFunction gaussian_packet(const Grid& grid, const PacketSpec& spec) {
  if (const std::string why = packet_precondition_violation(grid, spec); !why.empty()) {
    throw PreconditionError(why);
  }
  ComplexVector amp(grid.point_count());
  const double inv4s2 = 1.0 / (4.0 * spec.sigma * spec.sigma);
  const int m = std::abs(spec.vortex);
  const double sign = spec.vortex >= 0 ? 1.0 : -1.0;
  for (std::size_t n = 0; n < grid.point_count(); ++n) {
    const auto r = grid.position(n);
    double r2 = 0.0;
    double phase = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      const double d = r[axis] - spec.center[axis];
      if (grid.active(axis)) r2 += d * d;
      phase += spec.wavevector[axis] * r[axis];
    }
    Complex value = std::exp(-r2 * inv4s2) * std::polar(1.0, phase);
    if (m != 0) {
      const Complex w(r[0] - spec.center[0], sign * (r[1] - spec.center[1]));
      value *= std::pow(w, m);
    }
    amp[static_cast<Eigen::Index>(n)] = value;
  }
  WaveFunction psi(grid, std::move(amp));
  psi.normalize();
  return psi;
}

}  // namespace kam
