#pragma once

#include "kleinian/error.hpp"
#include "kleinian/mckay.hpp"
#include "kleinian/simplex.hpp"
#include "kleinian/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

// Integer verification of the dimension bound v_j <= n delta_j off J. The
// constraint system keeps only the local inequality
//   2 v_i <= sum_{head(a)=i} v_tail(a)    (i an unframed vertex outside J)
// with v_inf = 1 and v_j = n delta_j on J pinned, plus v >= 0.

namespace kleinian {

/// sum_k coeffs[k] * v[unknowns[k]] <= bound, originating at `vertex`.
struct LinearInequality {
  Vertex vertex;
  std::vector<long> coeffs;
  long bound;
};

struct ConstraintSystem {
  DynkinType type;
  long n;
  Face J;
  std::vector<long> delta;
  std::vector<Vertex> unknowns;
  std::vector<LinearInequality> rows;

  std::optional<std::size_t> index_of(Vertex v) const {
    const auto it = std::find(unknowns.begin(), unknowns.end(), v);
    if (it == unknowns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - unknowns.begin());
  }

  bool satisfied_by(const std::vector<long>& point) const {
    if (point.size() != unknowns.size()) throw ShapeError("point has wrong number of coordinates");
    for (long x : point)
      if (x < 0) return false;
    for (const auto& row : rows) {
      long lhs = 0;
      for (std::size_t k = 0; k < point.size(); ++k) lhs += row.coeffs[k] * point[k];
      if (lhs > row.bound) return false;
    }
    return true;
  }
};

inline ConstraintSystem build_system(const FramedMcKayQuiver& q, long n, const Face& J) {
  if (J.empty()) throw DomainError("J must be nonempty");
  if (n < 1) throw DomainError("n must be positive");
  require_face_in_range(q.type(), J);

  ConstraintSystem sys{q.type(), n, J, q.delta(), {}, {}};
  for (Vertex i = 0; i <= q.rank(); ++i)
    if (!J.contains(i)) sys.unknowns.push_back(i);
  auto pinned = [&](Vertex v) { return v == kInfinity ? 1L : n * q.delta(v); };

  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
    const Vertex i = sys.unknowns[k];
    LinearInequality row{i, std::vector<long>(sys.unknowns.size(), 0), 0};
    row.coeffs[k] = 2;
    for (const auto& [j, mult] : q.neighbours(i)) {
      if (const auto idx = sys.index_of(j); j != kInfinity && idx) row.coeffs[*idx] -= mult;
      else row.bound += mult * pinned(j);
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

inline ConstraintSystem build_system(const DynkinType& t, long n, const Face& J) {
  return build_system(build_framed_quiver(t), n, J);
}

namespace detail {

inline std::size_t require_unknown(const ConstraintSystem& sys, Vertex v) {
  const auto idx = sys.index_of(v);
  if (!idx) throw DomainError("vertex " + vertex_name(v) + " is not an unknown of the system");
  return *idx;
}

} // namespace detail

/// Exact maximum of v_vertex over the rational polytope.
inline Rational lp_max(const ConstraintSystem& sys, Vertex vertex) {
  const std::size_t target = detail::require_unknown(sys, vertex);
  const std::size_t m = sys.rows.size(), d = sys.unknowns.size();
  RMatrix a(m, d);
  RVector b(m), c(d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < d; ++k) a(i, k) = sys.rows[i].coeffs[k];
    b[i] = sys.rows[i].bound;
  }
  c[target] = 1;
  const LpResult res = simplex_maximize(a, b, c);
  if (res.status != LpResult::Status::Optimal) throw DomainError("LP relaxation is unbounded at vertex " + vertex_name(vertex));
  return res.value;
}

/// Upper bound on v_vertex by Fourier-Motzkin elimination of leaves of the
/// forest of unknowns. Each unknown contributes one row a_l v_l - m v_p <= c_l
/// towards its remaining neighbour p; eliminating l rewrites p's row as
/// (a_p - m m'/a_l) v_p ... <= c_p + m' c_l / a_l. All right-hand sides stay
/// nonnegative, so this is the exact projection and the bound equals the LP
/// maximum. Throws when the structure is not a forest or the final
/// coefficient is not positive.
inline Rational projected_upper_bound(const ConstraintSystem& sys, Vertex vertex) {
  const std::size_t root = detail::require_unknown(sys, vertex);
  const std::size_t d = sys.unknowns.size();
  std::vector<std::vector<Rational>> coeff(d, std::vector<Rational>(d));
  std::vector<Rational> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) coeff[i][k] = sys.rows[i].coeffs[k];
    rhs[i] = sys.rows[i].bound;
  }
  std::vector<bool> alive(d, true);
  auto live_neighbours = [&](std::size_t l) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < d; ++k)
      if (k != l && alive[k] && (coeff[l][k] != 0 || coeff[k][l] != 0)) out.push_back(k);
    return out;
  };

  for (std::size_t remaining = d; remaining > 1; --remaining) {
    std::optional<std::size_t> leaf;
    for (std::size_t l = 0; l < d && !leaf; ++l)
      if (alive[l] && l != root && live_neighbours(l).size() <= 1) leaf = l;
    if (!leaf) throw DomainError("bound propagation stalled: unknowns do not form a forest");
    const std::size_t l = *leaf;
    if (coeff[l][l] <= 0) throw DomainError("bound propagation stalled at vertex " + vertex_name(sys.unknowns[l]));
    for (std::size_t p : live_neighbours(l)) {
      const Rational beta = coeff[p][l], gamma = coeff[l][p];
      if (beta > 0 || gamma > 0) throw DomainError("unexpected positive off-diagonal coefficient");
      coeff[p][p] -= beta * gamma / coeff[l][l];
      rhs[p] -= beta * rhs[l] / coeff[l][l];
      coeff[p][l] = 0;
    }
    alive[l] = false;
  }
  if (coeff[root][root] <= 0) throw DomainError("bound propagation failed to bound vertex " + vertex_name(vertex));
  return rhs[root] / coeff[root][root];
}

struct IntegerBox {
  std::vector<long> lower, upper;
  bool empty() const {
    for (std::size_t k = 0; k < lower.size(); ++k)
      if (lower[k] > upper[k]) return true;
    return false;
  }
};

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

} // namespace detail

/// Projection bounds, then interval propagation over every row until no
/// bound moves.
inline IntegerBox integer_bounds(const ConstraintSystem& sys) {
  const std::size_t d = sys.unknowns.size();
  IntegerBox box{std::vector<long>(d, 0), std::vector<long>(d)};
  for (std::size_t k = 0; k < d; ++k)
    box.upper[k] = floor(projected_upper_bound(sys, sys.unknowns[k])).convert_to<long>();

  for (bool changed = true; changed && !box.empty();) {
    changed = false;
    for (const auto& row : sys.rows) {
      long min_lhs = 0;
      for (std::size_t j = 0; j < d; ++j)
        min_lhs += row.coeffs[j] * (row.coeffs[j] > 0 ? box.lower[j] : box.upper[j]);
      for (std::size_t k = 0; k < d; ++k) {
        const long ck = row.coeffs[k];
        if (ck == 0) continue;
        const long slack = row.bound - (min_lhs - ck * (ck > 0 ? box.lower[k] : box.upper[k]));
        if (ck > 0) {
          const long hi = detail::floor_div(slack, ck);
          if (hi < box.upper[k]) box.upper[k] = hi, changed = true;
        } else {
          const long lo = detail::ceil_div(slack, ck);
          if (lo > box.lower[k]) box.lower[k] = lo, changed = true;
        }
      }
    }
  }
  return box;
}

/// Calls visit(point) for every feasible integer point, in lexicographic
/// order of the unknowns' values. Depth-first with row-wise pruning.
inline void for_each_integer_point(const ConstraintSystem& sys, const std::function<void(const std::vector<long>&)>& visit) {
  const std::size_t d = sys.unknowns.size();
  const IntegerBox box = integer_bounds(sys);
  if (box.empty()) return;
  std::vector<long> point(d, 0);

  // Smallest achievable value of each row given point[0..depth) fixed.
  auto prunable = [&](std::size_t depth) {
    for (const auto& row : sys.rows) {
      long lhs = 0;
      for (std::size_t j = 0; j < d; ++j) {
        const long c = row.coeffs[j];
        lhs += j < depth ? c * point[j] : c * (c > 0 ? box.lower[j] : box.upper[j]);
      }
      if (lhs > row.bound) return true;
    }
    return false;
  };

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == d) {
      visit(point);
      return;
    }
    for (long x = box.lower[depth]; x <= box.upper[depth]; ++x) {
      point[depth] = x;
      if (!prunable(depth + 1)) descend(depth + 1);
    }
  };
  if (!prunable(0)) descend(0);
}

inline std::vector<std::vector<long>> integer_enumerate(const ConstraintSystem& sys) {
  std::vector<std::vector<long>> out;
  for_each_integer_point(sys, [&](const std::vector<long>& p) { out.push_back(p); });
  return out;
}

struct VerificationReport {
  enum class Status { Verified, Counterexample };

  DynkinType type;
  long n;
  Face J;
  Status status;
  std::vector<Vertex> unknowns;
  std::vector<std::vector<long>> witnesses;  // points violating v_j <= n delta_j
  std::vector<long> integer_max;             // per unknown
  std::vector<Rational> lp_max;              // per unknown
  std::size_t point_count = 0;

  bool verified() const { return status == Status::Verified; }
  std::string status_string() const { return verified() ? "verified" : "counterexample"; }
};

/// Every integer point of the relaxation must satisfy v_j <= n delta_j. A
/// counterexample refutes the inequality-only argument, not necessarily the
/// bound for actual stable representations.
inline VerificationReport verify_bound(const FramedMcKayQuiver& q, long n, const Face& J) {
  const ConstraintSystem sys = build_system(q, n, J);
  const std::size_t d = sys.unknowns.size();
  VerificationReport rep{q.type(), n, J, VerificationReport::Status::Verified, sys.unknowns, {}, std::vector<long>(d, -1), {}, 0};
  for_each_integer_point(sys, [&](const std::vector<long>& p) {
    ++rep.point_count;
    bool violates = false;
    for (std::size_t k = 0; k < d; ++k) {
      rep.integer_max[k] = std::max(rep.integer_max[k], p[k]);
      if (p[k] > n * q.delta(sys.unknowns[k])) violates = true;
    }
    if (violates) rep.witnesses.push_back(p);
  });
  if (rep.point_count == 0) throw std::logic_error("relaxation has no integer points; v = n*delta should be feasible");
  for (Vertex v : sys.unknowns) rep.lp_max.push_back(lp_max(sys, v));
  if (!rep.witnesses.empty()) rep.status = VerificationReport::Status::Counterexample;
  return rep;
}

inline VerificationReport verify_bound(const DynkinType& t, long n, const Face& J) {
  return verify_bound(build_framed_quiver(t), n, J);
}

/// Reports in the order of `faces`, whatever the worker count.
inline std::vector<VerificationReport> verify_faces(const DynkinType& t, long n, const std::vector<Face>& faces,
                                                    unsigned workers = 1) {
  const FramedMcKayQuiver q = build_framed_quiver(t);
  std::vector<std::optional<VerificationReport>> slots(faces.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t k = next++; k < faces.size(); k = next++) {
      try {
        slots[k] = verify_bound(q, n, faces[k]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(faces.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<VerificationReport> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// All 2^(r+1) - 1 nonempty J, in increasing bit-mask order.
inline std::vector<VerificationReport> verify_all(const DynkinType& t, long n, unsigned workers = 1) {
  t.validate();
  std::vector<Face> faces;
  for (std::uint32_t m = 1; m <= Face::all(t.rank).mask(); ++m) faces.emplace_back(m);
  return verify_faces(t, n, faces, workers);
}

inline std::string summary_line(const std::vector<VerificationReport>& reports) {
  std::size_t ok = 0;
  for (const auto& r : reports) ok += r.verified() ? 1 : 0;
  return "verified " + std::to_string(ok) + "/" + std::to_string(reports.size());
}

} // namespace kleinian
