#include "kam/linear_operator.hpp"

#include <cmath>

#include "kam/errors.hpp"
#include "kam/random.hpp"

namespace kam {

LinearOperator::LinearOperator(Grid grid, SparseMatrix matrix, std::string label, bool hermitian)
    : grid_(std::move(grid)), label_(std::move(label)), hermitian_(hermitian) {
  const auto n = static_cast<Eigen::Index>(grid_.point_count());
  if (matrix.rows() != n || matrix.cols() != n) {
    throw Error(ErrorCode::grid_mismatch, "operator matrix does not match the grid size");
  }
  matrix.makeCompressed();
  terms_.push_back({Complex(1.0), {std::make_shared<const SparseMatrix>(std::move(matrix))}});
}

LinearOperator::LinearOperator(Grid grid, std::vector<Term> terms, std::string label,
                               bool hermitian)
    : grid_(std::move(grid)), terms_(std::move(terms)), label_(std::move(label)),
      hermitian_(hermitian) {}

bool LinearOperator::is_assembled() const noexcept {
  return terms_.size() == 1 && terms_[0].factors.size() == 1 &&
         terms_[0].coefficient == Complex(1.0);
}

const SparseMatrix& LinearOperator::matrix() const {
  if (!is_assembled()) {
    throw Error(ErrorCode::invalid_argument,
                "operator '" + label_ + "' is a lazy composition and has no single matrix");
  }
  return *terms_[0].factors[0];
}

std::size_t LinearOperator::stored_nonzeros() const {
  std::size_t total = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.factors) total += static_cast<std::size_t>(f->nonZeros());
  return total;
}

ComplexVector LinearOperator::apply(const ComplexVector& v) const {
  if (static_cast<std::size_t>(v.size()) != rows()) {
    throw Error(ErrorCode::grid_mismatch, "vector length does not match operator '" + label_ + "'");
  }
  ComplexVector out = ComplexVector::Zero(v.size());
  ComplexVector work;
  for (const auto& term : terms_) {
    if (term.factors.empty()) {
      out += term.coefficient * v;
      continue;
    }
    work = *term.factors.back() * v;
    for (auto it = term.factors.rbegin() + 1; it != term.factors.rend(); ++it) {
      ComplexVector next = **it * work;
      work.swap(next);
    }
    out += term.coefficient * work;
  }
  return out;
}

WaveFunction LinearOperator::apply(const WaveFunction& psi) const {
  if (!(psi.grid() == grid_)) {
    throw Error(ErrorCode::grid_mismatch, "state and operator '" + label_ + "' use different grids");
  }
  return WaveFunction(grid_, apply(psi.amplitudes()));
}

LinearOperator LinearOperator::with_label(std::string label) const {
  LinearOperator copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

LinearOperator LinearOperator::with_hermitian(bool hermitian) const {
  LinearOperator copy = *this;
  copy.hermitian_ = hermitian;
  return copy;
}

void LinearOperator::require_same_grid(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.grid_ == b.grid_)) {
    throw Error(ErrorCode::grid_mismatch,
                "operators '" + a.label_ + "' and '" + b.label_ + "' use different grids");
  }
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  LinearOperator::require_same_grid(a, b);
  const std::string label = "(" + a.label_ + " + " + b.label_ + ")";
  const bool herm = a.hermitian_ && b.hermitian_;
  if (a.is_assembled() && b.is_assembled()) {
    SparseMatrix sum = a.matrix() + b.matrix();
    return LinearOperator(a.grid_, std::move(sum), label, herm);
  }
  std::vector<LinearOperator::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return LinearOperator(a.grid_, std::move(terms), label, herm);
}

LinearOperator operator*(Complex s, const LinearOperator& a) {
  const bool herm = a.hermitian_ && s.imag() == 0.0;
  if (a.is_assembled()) {
    SparseMatrix scaled = s * a.matrix();
    return LinearOperator(a.grid_, std::move(scaled), a.label_, herm);
  }
  std::vector<LinearOperator::Term> terms = a.terms_;
  for (auto& t : terms) t.coefficient *= s;
  return LinearOperator(a.grid_, std::move(terms), a.label_, herm);
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  return (a + Complex(-1.0) * b).with_label("(" + a.label() + " - " + b.label() + ")");
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  LinearOperator::require_same_grid(a, b);
  std::vector<LinearOperator::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      LinearOperator::Term t{ta.coefficient * tb.coefficient, ta.factors};
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      terms.push_back(std::move(t));
    }
  return LinearOperator(a.grid_, std::move(terms), a.label_ + "*" + b.label_, false);
}

LinearOperator product(const LinearOperator& a, const LinearOperator& b) {
  LinearOperator::require_same_grid(a, b);
  SparseMatrix p = (a.matrix() * b.matrix()).pruned();
  return LinearOperator(a.grid_, std::move(p), a.label_ + "*" + b.label_, false);
}

LinearOperator identity_operator(const Grid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.point_count());
  SparseMatrix id(n, n);
  id.setIdentity();
  return LinearOperator(grid, std::move(id), "1", true);
}

LinearOperator zero_operator(const Grid& grid, std::string label) {
  const auto n = static_cast<Eigen::Index>(grid.point_count());
  return LinearOperator(grid, SparseMatrix(n, n), std::move(label), true);
}

LinearOperator diagonal_operator(const Grid& grid, const ComplexVector& values, std::string label,
                                 bool hermitian) {
  const auto n = static_cast<Eigen::Index>(grid.point_count());
  SparseMatrix d(n, n);
  d.reserve(Eigen::VectorXi::Constant(n, 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (values[i] != Complex(0.0)) d.insert(i, i) = values[i];
  }
  return LinearOperator(grid, std::move(d), std::move(label), hermitian);
}

WaveFunction commutator_apply(const LinearOperator& a, const LinearOperator& b,
                              const WaveFunction& psi) {
  const WaveFunction ab = a.apply(b.apply(psi));
  const WaveFunction ba = b.apply(a.apply(psi));
  return WaveFunction(psi.grid(), ab.amplitudes() - ba.amplitudes());
}

WaveFunction anticommutator_apply(const LinearOperator& a, const LinearOperator& b,
                                  const WaveFunction& psi) {
  const WaveFunction ab = a.apply(b.apply(psi));
  const WaveFunction ba = b.apply(a.apply(psi));
  return WaveFunction(psi.grid(), ab.amplitudes() + ba.amplitudes());
}

Complex expectation(const LinearOperator& op, const WaveFunction& psi) {
  if (!psi.is_normalized(1e-10)) {
    throw Error(ErrorCode::not_normalized,
                "expectation of '" + op.label() + "' needs a normalized state (norm = " +
                    std::to_string(psi.norm()) + ")");
  }
  return psi.inner(op.apply(psi));
}

double hermiticity_defect(const LinearOperator& op, std::uint64_t seed, int pairs) {
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(op.rows());
  auto random_vector = [&]() {
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return v;
  };
  double worst = 0.0;
  for (int p = 0; p < pairs; ++p) {
    const ComplexVector phi = random_vector();
    const ComplexVector psi = random_vector();
    const ComplexVector o_psi = op.apply(psi);
    const ComplexVector o_phi = op.apply(phi);
    const Complex lhs = phi.dot(o_psi);
    const Complex rhs = std::conj(psi.dot(o_phi));
    const double scale = std::max({phi.norm() * o_psi.norm(), psi.norm() * o_phi.norm(), 1e-300});
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

double max_entry_difference(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  const SparseMatrix d = a - b;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < d.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(d, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace kam
