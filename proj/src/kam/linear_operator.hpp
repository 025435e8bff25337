#pragma once

#include <Eigen/SparseCore>
#include <memory>
#include <string>
#include <vector>

#include "kam/wavefunction.hpp"

namespace kam {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

// Sparse complex operator on a grid.
//
// An operator is either assembled (one compressed-row matrix) or a lazy sum of
// scaled products of assembled factors. Lazy products are applied
// right-to-left as a chain of matrix-vector products, so nested commutators
// never materialize triple products. `product` is the only path that forms a
// sparse matrix-matrix product, and it takes exactly two assembled operands.
class LinearOperator {
 public:
  LinearOperator(Grid grid, SparseMatrix matrix, std::string label, bool hermitian);

  const Grid& grid() const noexcept { return grid_; }
  const std::string& label() const noexcept { return label_; }
  bool hermitian() const noexcept { return hermitian_; }
  bool is_assembled() const noexcept;
  std::size_t rows() const noexcept { return grid_.point_count(); }

  // Throws unless assembled.
  const SparseMatrix& matrix() const;
  // Nonzeros summed over every stored factor.
  std::size_t stored_nonzeros() const;

  ComplexVector apply(const ComplexVector& v) const;
  WaveFunction apply(const WaveFunction& psi) const;

  LinearOperator with_label(std::string label) const;
  LinearOperator with_hermitian(bool hermitian) const;

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator*(Complex s, const LinearOperator& a);

  // Lazy composition a*b.
  friend LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
  // Assembled sparse product of two assembled operators.
  friend LinearOperator product(const LinearOperator& a, const LinearOperator& b);

 private:
  struct Term {
    Complex coefficient;
    std::vector<std::shared_ptr<const SparseMatrix>> factors;  // leftmost first
  };
  LinearOperator(Grid grid, std::vector<Term> terms, std::string label, bool hermitian);
  static void require_same_grid(const LinearOperator& a, const LinearOperator& b);

  Grid grid_;
  std::vector<Term> terms_;
  std::string label_;
  bool hermitian_;
};

LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator product(const LinearOperator& a, const LinearOperator& b);

LinearOperator identity_operator(const Grid& grid);
LinearOperator zero_operator(const Grid& grid, std::string label = "0");
// Diagonal operator from values at grid points.
LinearOperator diagonal_operator(const Grid& grid, const ComplexVector& values, std::string label,
                                 bool hermitian);

// (AB - BA) psi and (AB + BA) psi from four operator-vector applications.
WaveFunction commutator_apply(const LinearOperator& a, const LinearOperator& b,
                              const WaveFunction& psi);
WaveFunction anticommutator_apply(const LinearOperator& a, const LinearOperator& b,
                                  const WaveFunction& psi);

// h^d sum conj(psi) (op psi). Requires a normalized state (within 1e-10).
Complex expectation(const LinearOperator& op, const WaveFunction& psi);

// Largest relative defect |<phi|O psi> - conj(<psi|O phi>)| / scale over
// `pairs` seeded random state pairs.
double hermiticity_defect(const LinearOperator& op, std::uint64_t seed, int pairs = 10);

// Max |a_ij - b_ij| over the union of both sparsity patterns.
double max_entry_difference(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace kam
