#pragma once

#include "kleinian/error.hpp"
#include "kleinian/matrix.hpp"
#include "kleinian/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

namespace kleinian {

namespace detail {

inline Integer lcm_of_denominators(const RVector& row) {
  Integer l = 1;
  for (const auto& x : row) l = lcm(l, denominator(x));
  return l;
}

} // namespace detail

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers, so every intermediate value is a minor of the scaled matrix.
inline std::size_t rank(const RMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const RVector row = m.row(i);
    const Integer scale = detail::lcm_of_denominators(row);
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = numerator(row[j] * scale);
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

struct EchelonForm {
  RMatrix reduced;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan over Q. Independent of the Bareiss path in rank().
inline EchelonForm rref(const RMatrix& m) {
  RMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RMatrix reduced(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

/// Basis of the null space, one vector per free column; vector k has a 1 in
/// its free column and zeros in the other free columns.
inline std::vector<RVector> kernel_basis(const RMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RMatrix inverse(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix " + m.shape());
  const std::size_t n = m.rows();
  const auto [reduced, pivots] = rref(hstack({m, RMatrix::identity(n)}, n));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw DomainError("matrix is singular");
  RMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
  return inv;
}

/// A linear subspace of Q^d held as a reduced-echelon basis, so two
/// subspaces are equal iff their bases are identical.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(const std::vector<RVector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RVector& v) const { return is_zero(reduce(v)); }

  /// Adds v; returns false when v was already in the span.
  bool insert(const RVector& v) {
    if (v.size() != ambient_) throw ShapeError("vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(ambient_));
    RVector w = reduce(v);
    std::size_t p = 0;
    while (p < w.size() && w[p] == 0) ++p;
    if (p == w.size()) return false;
    const Rational inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& b : basis_) {
      if (b[p] == 0) continue;
      const Rational f = b[p];
      for (std::size_t j = 0; j < ambient_; ++j) b[j] -= f * w[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(w));
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  static bool is_zero(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }

  RVector reduce(RVector v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[k][j];
    }
    return v;
  }

  std::size_t ambient_;
  std::vector<RVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace of Q^ambient containing `seed` and stable under every
/// operator. Each new basis vector is pushed through all operators once, so
/// the loop ends after at most `ambient` insertions.
inline Subspace closure_under(const std::vector<RMatrix>& operators, const std::vector<RVector>& seed,
                              std::size_t ambient) {
  for (const auto& op : operators)
    if (op.rows() != ambient || op.cols() != ambient)
      throw ShapeError("operator " + op.shape() + " on ambient dimension " + std::to_string(ambient));
  Subspace s(ambient);
  std::deque<RVector> pending;
  for (const auto& v : seed)
    if (s.insert(v)) pending.push_back(v);
  while (!pending.empty()) {
    const RVector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& op : operators) {
      RVector w = op * v;
      if (s.insert(w)) pending.push_back(std::move(w));
    }
  }
  return s;
}

/// Coefficients c_0..c_n (ascending) of det(tI - A), by Faddeev-LeVerrier.
inline RVector characteristic_polynomial(const RMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("characteristic polynomial of non-square " + a.shape());
  const std::size_t n = a.rows();
  RVector c(n + 1);
  c[n] = 1;
  RMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const RMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer a) {
  if (a < 0) a = -a;
  // Trial division; inputs here are spectra of small exact constructions.
  if (a > Integer(1'000'000'000'000LL)) throw DomainError("coefficient too large for rational root search: " + a.str());
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Synthetic division of an ascending coefficient list by (t - root);
/// returns nullopt when the remainder is nonzero.
inline std::optional<RVector> divide_by_root(const RVector& p, const Rational& root) {
  const std::size_t deg = p.size() - 1;
  RVector q(deg);
  Rational carry = 0;
  for (std::size_t k = deg; k >= 1; --k) {
    carry = p[k] + carry * root;
    q[k - 1] = carry;
  }
  if (p[0] + carry * root != 0) return std::nullopt;
  return q;
}

} // namespace detail

/// Rational roots with multiplicity of an ascending coefficient list.
/// The multiplicities sum to the degree iff the polynomial splits over Q.
inline std::vector<std::pair<Rational, std::size_t>> rational_roots(RVector p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  std::vector<std::pair<Rational, std::size_t>> roots;
  if (p.size() <= 1) return roots;
  std::size_t zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (p.size() <= 1) return roots;

  Integer scale = 1;
  for (const auto& x : p) scale = lcm(scale, denominator(x));
  std::vector<Integer> ip;
  for (const auto& x : p) ip.push_back(numerator(x * scale));

  std::vector<Rational> candidates;
  for (const auto& num : detail::positive_divisors(ip.front()))
    for (const auto& den : detail::positive_divisors(ip.back())) {
      candidates.emplace_back(num, den);
      candidates.emplace_back(-num, den);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& c : candidates) {
    std::size_t mult = 0;
    while (p.size() > 1) {
      auto q = detail::divide_by_root(p, c);
      if (!q) break;
      p = std::move(*q);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(c, mult);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace kleinian
