#include "kam/tensor_identities.hpp"

#include <stdexcept>

#include "kam/random.hpp"

namespace kam::tensor {

namespace {

// 0-based signature, used inside tight loops.
int eps(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2) are cyclic shifts
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

int delta(int i, int j) { return i == j ? 1 : 0; }

Rational dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// (x.H) e_ijk x_k
Rational cross_term(int i, int j, const Vec3& x, const Vec3& h) {
  Rational s = 0;
  for (int k = 0; k < 3; ++k) {
    if (const int e = eps(i, j, k)) s += e * x[k];
  }
  return dot(x, h) * s;
}

void check(IdentityReport& report, const std::string& step,
           std::vector<int> idx, const Rational& lhs, const Rational& rhs) {
  ++report.cases_checked;
  if (lhs != rhs) {
    for (int& v : idx) v += 1;
    report.failures.push_back({step, std::move(idx), lhs, rhs});
  }
}

// The four triple-epsilon forms appearing in the magnetic correction. Each
// one is a full sum over a, b, c, d, e; only nonzero epsilon products are
// visited.
Rational quadruple_form(int which, int i, int j, const Vec3& x, const Vec3& h) {
  Rational sum = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          for (int e = 0; e < 3; ++e) {
            const int outer = eps(b, d, e);
            if (outer == 0) continue;
            int inner = 0;
            switch (which) {
              case 0: inner = eps(i, a, b) * eps(j, c, d); break;
              case 1: inner = eps(i, c, b) * eps(j, a, d); break;
              case 2: inner = eps(j, a, b) * eps(i, c, d); break;
              default: inner = eps(j, c, b) * eps(i, a, d); break;
            }
            if (inner == 0) continue;
            sum += outer * inner * x[a] * x[c] * h[e];
          }
  return sum;
}

// e_iab e_jcd + e_icb e_jad - e_jab e_icd - e_jcb e_iad
int symmetrized_bracket(int i, int j, int a, int b, int c, int d) {
  return eps(i, a, b) * eps(j, c, d) + eps(i, c, b) * eps(j, a, d) -
         eps(j, a, b) * eps(i, c, d) - eps(j, c, b) * eps(i, a, d);
}

Rational random_small_rational(Rng& rng) {
  const auto num = rng.integer(-9, 9);
  const auto den = rng.integer(1, 6);
  return Rational(num, den);
}

}  // namespace

Index3::Index3(int value) : value_(value) {
  if (value < 1 || value > 3) {
    throw std::invalid_argument("Index3 must be 1, 2 or 3, got " +
                                std::to_string(value));
  }
}

const std::array<Index3, 3>& Index3::all() {
  static const std::array<Index3, 3> values{Index3(1), Index3(2), Index3(3)};
  return values;
}

void IdentityReport::merge(const IdentityReport& other) {
  cases_checked += other.cases_checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

int levi_civita(Index3 i, Index3 j, Index3 k) noexcept {
  return eps(i.offset(), j.offset(), k.offset());
}

int kronecker(Index3 i, Index3 j) noexcept { return delta(i.offset(), j.offset()); }

IdentityReport verify_delta_contraction() {
  IdentityReport report{"delta_contraction", 0, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int d = 0; d < 3; ++d) {
          int lhs = 0;
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
              lhs += (eps(i, a, b) * eps(j, c, d) - eps(j, a, b) * eps(i, c, d)) *
                     delta(b, c);
          const int middle = delta(i, d) * delta(j, a) - delta(i, a) * delta(j, d);
          int rhs = 0;
          for (int k = 0; k < 3; ++k) rhs -= eps(i, j, k) * eps(k, a, d);
          // One case per tuple; both equalities must hold for it to pass.
          ++report.cases_checked;
          if (lhs != middle) {
            report.failures.push_back(
                {"lhs=delta form", {i + 1, j + 1, a + 1, d + 1}, lhs, middle});
          }
          if (middle != rhs) {
            report.failures.push_back(
                {"delta form=-eps eps", {i + 1, j + 1, a + 1, d + 1}, middle, rhs});
          }
        }
  return report;
}

IdentityReport verify_quadruple_contractions(const Vec3& x, const Vec3& h) {
  static const char* const names[4] = {"e_bde e_iab e_jcd", "e_bde e_icb e_jad",
                                       "e_bde e_jab e_icd", "e_bde e_jcb e_iad"};
  static const int signs[4] = {1, 1, -1, -1};

  IdentityReport report{"quadruple_contractions", 0, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Rational target = cross_term(i, j, x, h);
      Rational combined = 0;
      for (int w = 0; w < 4; ++w) {
        const Rational value = quadruple_form(w, i, j, x, h);
        check(report, names[w], {i, j}, value, signs[w] * target);
        combined += signs[w] * value;
      }
      check(report, "combined/4", {i, j}, combined / 4, target);
    }
  return report;
}

Vec3 curl_of_gradient(const Mat3& grad_a) {
  Vec3 h{0, 0, 0};
  for (int e = 0; e < 3; ++e)
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d)
        if (const int s = eps(e, b, d)) h[e] += s * grad_a[b][d];
  return h;
}

IdentityReport verify_field_contraction(const Vec3& x, const Mat3& grad_a) {
  IdentityReport report{"field_contraction", 0, {}};
  const Vec3 h = curl_of_gradient(grad_a);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational original = 0;
      Rational symmetrized = 0;
      Rational antisymmetrized = 0;
      Rational with_field = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) {
              const Rational xx = x[a] * x[c];
              const int plain = eps(i, a, b) * eps(j, c, d) - eps(j, a, b) * eps(i, c, d);
              const int sym = symmetrized_bracket(i, j, a, b, c, d);
              if (plain != 0) original += plain * xx * grad_a[b][d];
              if (sym != 0) {
                symmetrized += Rational(sym, 2) * xx * grad_a[b][d];
                antisymmetrized +=
                    Rational(sym, 4) * xx * (grad_a[b][d] - grad_a[d][b]);
                for (int e = 0; e < 3; ++e)
                  if (const int s = eps(b, d, e))
                    with_field += Rational(s * sym, 4) * xx * h[e];
              }
            }
      check(report, "a<->c symmetrization", {i, j}, original, symmetrized);
      check(report, "antisymmetric gradient", {i, j}, symmetrized, antisymmetrized);
      check(report, "curl substitution", {i, j}, antisymmetrized, with_field);
      check(report, "(x.H) e_ijk x_k", {i, j}, with_field, cross_term(i, j, x, h));
    }
  return report;
}

std::vector<IdentityReport> run_tensor_suite(const TensorSuiteOptions& options) {
  Rng rng(mix_seed(options.seed, "tensor-suite"));
  auto random_int_vec = [&rng]() {
    return Vec3{Rational(rng.integer(-9, 9)), Rational(rng.integer(-9, 9)),
                Rational(rng.integer(-9, 9))};
  };

  IdentityReport levi{"levi_civita_antisymmetry", 0, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        check(levi, "swap(i,j)", {i, j, k}, eps(j, i, k), -eps(i, j, k));
        check(levi, "swap(j,k)", {i, j, k}, eps(i, k, j), -eps(i, j, k));
        check(levi, "swap(i,k)", {i, j, k}, eps(k, j, i), -eps(i, j, k));
      }

  IdentityReport quad{"quadruple_contractions", 0, {}};
  const Vec3 zero{0, 0, 0};
  const Vec3 ez{0, 0, 1};
  const Vec3 v{1, -2, 3};
  const std::vector<std::pair<Vec3, Vec3>> degenerate = {
      {zero, zero}, {zero, v}, {v, zero},
      {v, Vec3{2, -4, 6}},           // parallel
      {Vec3{1, 0, 0}, ez},           // orthogonal
      {Vec3{3, 3, 0}, Vec3{-1, 1, 7}}};  // orthogonal, generic
  for (const auto& [x, h] : degenerate) quad.merge(verify_quadruple_contractions(x, h));
  for (int n = 0; n < options.random_cases; ++n) {
    const Vec3 x = random_int_vec();
    const Vec3 h = random_int_vec();
    quad.merge(verify_quadruple_contractions(x, h));
  }

  IdentityReport field{"field_contraction", 0, {}};
  for (int n = 0; n < options.random_cases; ++n) {
    Vec3 x{random_small_rational(rng), random_small_rational(rng),
           random_small_rational(rng)};
    Mat3 grad;
    for (auto& row : grad)
      for (auto& g : row) g = random_small_rational(rng);
    field.merge(verify_field_contraction(x, grad));
  }

  return {levi, verify_delta_contraction(), quad, field};
}

}  // namespace kam::tensor
