#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace kam {

// Uniform rectilinear grid in 1-3 dimensions with equal spacing on all axes.
// Point n on an active axis sits at origin + n*h, n = 0..N-1; the
// Dirichlet-zero walls are the ghost positions n = -1 and n = N. Inactive
// axes have size 1 and coordinate 0 (a 2D grid is translation-invariant in
// z).
class Grid {
 public:
  Grid(std::vector<int> dims, double spacing, std::array<double, 3> origin = {0, 0, 0});

  // Grid whose points are placed symmetrically about `center`.
  static Grid centered(std::vector<int> dims, double spacing,
                       std::array<double, 3> center = {0, 0, 0});

  int dimension() const noexcept { return ndim_; }
  int size(int axis) const { return dims_.at(axis); }
  const std::array<int, 3>& dims() const noexcept { return dims_; }
  double spacing() const noexcept { return h_; }
  const std::array<double, 3>& origin() const noexcept { return origin_; }
  bool active(int axis) const noexcept { return axis < ndim_; }
  std::size_t point_count() const noexcept { return count_; }
  // Volume element h^d of the discrete inner product.
  double cell_volume() const noexcept { return cell_volume_; }

  std::size_t linear_index(int ix, int iy, int iz) const noexcept {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(dims_[0]) *
               (static_cast<std::size_t>(iy) + static_cast<std::size_t>(dims_[1]) * iz);
  }
  std::array<int, 3> multi_index(std::size_t linear) const noexcept;
  double coordinate(int axis, int n) const noexcept {
    return active(axis) ? origin_[axis] + n * h_ : 0.0;
  }
  std::array<double, 3> position(std::size_t linear) const noexcept;

  double lower_wall(int axis) const { return origin_[axis] - h_; }
  double upper_wall(int axis) const { return origin_[axis] + dims_[axis] * h_; }
  // Distance from a point to the nearest wall over active axes.
  double wall_margin(const std::array<double, 3>& point) const;

  // True when the point is at least `guard` cells away from every wall,
  // i.e. any stencil of reach <= guard applied there sees no ghost value.
  bool is_interior(std::size_t linear, int guard) const noexcept;

  std::string describe() const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.ndim_ == b.ndim_ && a.dims_ == b.dims_ && a.h_ == b.h_ && a.origin_ == b.origin_;
  }

 private:
  int ndim_;
  std::array<int, 3> dims_{1, 1, 1};
  double h_;
  std::array<double, 3> origin_{0, 0, 0};
  std::size_t count_;
  double cell_volume_;
};

}  // namespace kam
