#pragma once

// Reference computations used by the tests. Each works from the definition
// and shares no algorithm with the library code it is checked against.

#include "kleinian/appendix.hpp"
#include "kleinian/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using kleinian::Rational;

/// Number of partitions of N (Euler's recurrence by largest part, via DP on coins).
inline long partition_count(int N) {
  std::vector<long> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= N; ++part)
    for (int s = part; s <= N; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(N)];
}

/// Number of k-tuples of partitions of total size n: coefficient of q^n in
/// prod_j (1 - q^j)^(-k). Counts partitions of n*k with empty k-core.
inline long multipartition_count(int k, int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int copy = 0; copy < k; ++copy)
    for (int part = 1; part <= n; ++part)
      for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

/// n-element order ideals of M_r = {(i,j) in N^2 : i = j mod r+1} under the
/// order c' <= c iff c - c' in M_r. For invariant cells this is the
/// componentwise order. Every cell of an n-element ideal lies in a chain of
/// length min(i,j) + |i-j|/(r+1) + 1, which bounds the candidate set.
inline long monoid_ideal_count(int r, int n) {
  const int m = r + 1;
  std::vector<std::pair<int, int>> cand;
  for (int i = 0; i <= n * m; ++i)
    for (int j = 0; j <= n * m; ++j) {
      if ((i - j) % m != 0) continue;
      if (std::min(i, j) + std::abs(i - j) / m <= n - 1) cand.push_back({i, j});
    }
  std::sort(cand.begin(), cand.end(), [](auto a, auto b) {
    return a.first + a.second != b.first + b.second ? a.first + a.second < b.first + b.second : a < b;
  });
  std::vector<bool> in(cand.size(), false);
  long count = 0;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t k, int size) {
    if (size == n) {
      ++count;
      return;
    }
    if (k == cand.size()) return;
    // Include cand[k] if every smaller candidate below it is already in.
    bool closed = true;
    for (std::size_t l = 0; l < k && closed; ++l)
      if (cand[l].first <= cand[k].first && cand[l].second <= cand[k].second && !in[l]) closed = false;
    if (closed) {
      in[k] = true;
      dfs(k + 1, size + 1);
      in[k] = false;
    }
    dfs(k + 1, size);
  };
  dfs(0, 0);
  return count;
}

/// Solves the square system by Gauss-Jordan; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t d = b.size();
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c] == 0) ++p;
    if (p == d) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < d; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Maximum of x[target] over {x >= 0, rows}, by enumerating every basic
/// solution (all d-subsets of the constraints taken as equalities). Assumes
/// the polytope is bounded and nonempty.
inline Rational lp_max_by_vertices(const kleinian::ConstraintSystem& sys, std::size_t target) {
  const std::size_t d = sys.unknowns.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& row : sys.rows) {
    rows.emplace_back(row.coeffs.begin(), row.coeffs.end());
    rhs.emplace_back(row.bound);
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> e(d, Rational(0));
    e[k] = -1;
    rows.push_back(e);
    rhs.emplace_back(0);
  }
  const std::size_t m = rows.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == d) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (std::size_t k : pick) {
        a.push_back(rows[k]);
        b.push_back(rhs[k]);
      }
      const auto x = solve_square(a, b);
      if (!x) return;
      for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t k = 0; k < d; ++k) lhs += rows[i][k] * (*x)[k];
        if (lhs > rhs[i]) return;
      }
      if (!best || (*x)[target] > *best) best = (*x)[target];
      return;
    }
    for (std::size_t k = start; k < m; ++k) {
      pick.push_back(k);
      choose(k + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best.value();
}

/// Every integer point of the system inside [0, box]^d. Sets `touched` when a
/// feasible point has a coordinate equal to `box`, meaning the box was too small.
inline std::vector<std::vector<long>> integer_points_in_box(const kleinian::ConstraintSystem& sys, long box, bool& touched) {
  const std::size_t d = sys.unknowns.size();
  std::vector<std::vector<long>> out;
  std::vector<long> p(d, 0);
  touched = false;
  while (true) {
    if (sys.satisfied_by(p)) {
      out.push_back(p);
      for (long x : p) touched = touched || x == box;
    }
    std::size_t k = d;
    while (k > 0 && p[k - 1] == box) p[--k] = 0;
    if (k == 0) break;
    ++p[k - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace oracle
