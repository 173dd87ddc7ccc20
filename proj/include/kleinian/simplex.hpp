#pragma once

#include "kleinian/error.hpp"
#include "kleinian/matrix.hpp"
#include "kleinian/rational.hpp"

#include <cstddef>
#include <vector>

namespace kleinian {

struct LpResult {
  enum class Status { Optimal, Unbounded };
  Status status;
  Rational value;
  RVector x;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the slack basis
/// is feasible. Dense tableau over Q with Bland's rule, which cannot cycle.
inline LpResult simplex_maximize(const RMatrix& a, const RVector& b, const RVector& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw ShapeError("LP data shapes disagree");
  for (const auto& bi : b)
    if (bi < 0) throw DomainError("simplex_maximize needs b >= 0 (origin feasible)");

  // Columns 0..n-1 structural, n..n+m-1 slack, last column right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<RVector> t(m, RVector(width));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
  }
  RVector reduced(width);  // reduced costs: c_j - z_j for maximisation
  for (std::size_t j = 0; j < n; ++j) reduced[j] = c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (reduced[j] > 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return {LpResult::Status::Unbounded, 0, {}};

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = reduced[enter];
    for (std::size_t j = 0; j < width; ++j) reduced[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  LpResult res{LpResult::Status::Optimal, 0, RVector(n)};
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

} // namespace kleinian
