#include "kam/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kam/errors.hpp"

namespace kam {

Grid::Grid(std::vector<int> dims, double spacing, std::array<double, 3> origin) : h_(spacing) {
  if (dims.empty() || dims.size() > 3) {
    throw Error(ErrorCode::invalid_argument, "grid needs 1 to 3 axis sizes");
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw Error(ErrorCode::invalid_argument, "grid spacing must be positive and finite");
  }
  ndim_ = static_cast<int>(dims.size());
  for (int axis = 0; axis < ndim_; ++axis) {
    if (dims[axis] < 8) {
      throw Error(ErrorCode::invalid_argument, "grid axis " + std::to_string(axis + 1) +
                                                   " has " + std::to_string(dims[axis]) +
                                                   " points; at least 8 are required");
    }
    dims_[axis] = dims[axis];
    origin_[axis] = origin[axis];
  }
  count_ = static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2];
  cell_volume_ = std::pow(h_, ndim_);
}

Grid Grid::centered(std::vector<int> dims, double spacing, std::array<double, 3> center) {
  std::array<double, 3> origin = center;
  for (std::size_t axis = 0; axis < dims.size() && axis < 3; ++axis) {
    origin[axis] = center[axis] - 0.5 * (dims[axis] - 1) * spacing;
  }
  return Grid(std::move(dims), spacing, origin);
}

std::array<int, 3> Grid::multi_index(std::size_t linear) const noexcept {
  const int ix = static_cast<int>(linear % dims_[0]);
  linear /= dims_[0];
  const int iy = static_cast<int>(linear % dims_[1]);
  const int iz = static_cast<int>(linear / dims_[1]);
  return {ix, iy, iz};
}

std::array<double, 3> Grid::position(std::size_t linear) const noexcept {
  const auto n = multi_index(linear);
  return {coordinate(0, n[0]), coordinate(1, n[1]), coordinate(2, n[2])};
}

double Grid::wall_margin(const std::array<double, 3>& point) const {
  double margin = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < ndim_; ++axis) {
    margin = std::min({margin, point[axis] - lower_wall(axis), upper_wall(axis) - point[axis]});
  }
  return margin;
}

bool Grid::is_interior(std::size_t linear, int guard) const noexcept {
  const auto n = multi_index(linear);
  for (int axis = 0; axis < ndim_; ++axis) {
    // distance in cells to the ghost layers at -1 and N
    if (n[axis] + 1 <= guard || dims_[axis] - n[axis] <= guard) return false;
  }
  return true;
}

std::string Grid::describe() const {
  std::ostringstream os;
  os.precision(17);
  for (int axis = 0; axis < ndim_; ++axis) os << (axis ? "x" : "") << dims_[axis];
  os << " h=" << h_ << " origin=(" << origin_[0] << "," << origin_[1] << "," << origin_[2] << ")";
  return os.str();
}

}  // namespace kam
