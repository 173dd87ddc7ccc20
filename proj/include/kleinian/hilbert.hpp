#pragma once

#include "kleinian/error.hpp"
#include "kleinian/mckay.hpp"
#include "kleinian/representation.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

// Type A_r combinatorics. mu_(r+1) acts on (x, y) with weights (+1, -1), so the
// monomial x^i y^j has weight (i - j) mod (r+1) and every monomial ideal is
// invariant. A cell (i, j) stands for x^i y^j.

namespace kleinian {

struct Cell {
  int i, j;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline int weight(const Cell& c, int r) {
  const int m = r + 1;
  return (((c.i - c.j) % m) + m) % m;
}

/// The monomials outside a monomial ideal of C[x,y]: a finite order ideal
/// of N^2, held sorted lexicographically.
class Staircase {
public:
  Staircase() = default;
  explicit Staircase(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) throw DomainError("repeated cell in staircase");
    for (const auto& c : cells_) {
      if (c.i < 0 || c.j < 0) throw DomainError("staircase cell with negative exponent");
      if ((c.i > 0 && !contains({c.i - 1, c.j})) || (c.j > 0 && !contains({c.i, c.j - 1})))
        throw DomainError("cell set is not downward closed");
    }
  }

  /// Row j holds row_lengths[j] cells x^0 y^j .. x^(len-1) y^j.
  static Staircase from_row_lengths(const std::vector<int>& row_lengths) {
    std::vector<Cell> cells;
    for (std::size_t j = 0; j < row_lengths.size(); ++j)
      for (int i = 0; i < row_lengths[j]; ++i) cells.push_back({i, static_cast<int>(j)});
    return Staircase(std::move(cells));
  }

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase& a, const Staircase& b) { return a.cells_ <=> b.cells_; }

private:
  std::vector<Cell> cells_;
};

inline bool in_invariant_monoid(const Cell& c, int r) { return c.i >= 0 && c.j >= 0 && weight(c, r) == 0; }

/// Finite order ideal of the invariant monoid M_r = {(i,j) : i = j mod r+1}.
class MonoidStaircase {
public:
  MonoidStaircase(int r, std::vector<Cell> cells) : r_(r), cells_(std::move(cells)) {
    if (r < 1) throw DomainError("monoid staircase needs r >= 1");
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) throw DomainError("repeated cell");
    for (const auto& c : cells_) {
      if (!in_invariant_monoid(c, r_)) throw DomainError("cell outside the invariant monoid");
      for (const auto& p : predecessors(c))
        if (!contains(p)) throw DomainError("cell set is not downward closed in the monoid");
    }
  }

  int r() const { return r_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  /// Cells one monoid generator below c: c - (r+1,0), c - (0,r+1), c - (1,1).
  std::vector<Cell> predecessors(const Cell& c) const {
    std::vector<Cell> out;
    const int m = r_ + 1;
    if (c.i >= m) out.push_back({c.i - m, c.j});
    if (c.j >= m) out.push_back({c.i, c.j - m});
    if (c.i >= 1 && c.j >= 1) out.push_back({c.i - 1, c.j - 1});
    return out;
  }

  friend bool operator==(const MonoidStaircase&, const MonoidStaircase&) = default;
  friend auto operator<=>(const MonoidStaircase& a, const MonoidStaircase& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

private:
  int r_;
  std::vector<Cell> cells_;
};

namespace detail {

inline void partitions(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

} // namespace detail

/// Every staircase with N cells, one per partition of N, in lexicographic
/// order of their sorted cell lists.
inline std::vector<Staircase> enumerate_staircases(int colength) {
  if (colength < 0) throw DomainError("colength must be nonnegative");
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  detail::partitions(colength, colength, current, parts);
  std::vector<Staircase> out;
  for (const auto& p : parts) out.push_back(Staircase::from_row_lengths(p));
  std::sort(out.begin(), out.end());
  return out;
}

/// Cell count per residue class (i - j) mod (r+1).
inline std::vector<long> weight_profile(const Staircase& s, int r) {
  if (r < 1) throw DomainError("r must be >= 1");
  std::vector<long> profile(static_cast<std::size_t>(r) + 1, 0);
  for (const auto& c : s.cells()) ++profile[static_cast<std::size_t>(weight(c, r))];
  return profile;
}

inline bool is_regular_type(const std::vector<long>& profile, long n) {
  return std::all_of(profile.begin(), profile.end(), [n](long c) { return c == n; });
}

enum class ArrowRole { X, Y, B, BStar };

/// Which monomial action each arrow of the type A_r quiver carries. For
/// r >= 2 the stored orientation i -> i+1 raises weight (x). For A1 both
/// copies of the double edge run 0 -> 1: copy 0 forward is x, copy 1 forward is y.
inline ArrowRole typeA_arrow_role(const FramedMcKayQuiver& q, std::size_t arrow) {
  if (q.type().family != Family::A) throw DomainError("monomial roles exist only in type A");
  const Arrow& a = q.arrows().at(arrow);
  if (a.edge == 0) return a.reversed ? ArrowRole::BStar : ArrowRole::B;
  const bool forward_is_x = q.rank() >= 2 || a.copy == 0;
  return (forward_is_x != a.reversed) ? ArrowRole::X : ArrowRole::Y;
}

/// Basis of vertex k's space: cells of weight k, in lexicographic order.
inline std::vector<std::vector<Cell>> graded_cells(const Staircase& s, int r) {
  std::vector<std::vector<Cell>> out(static_cast<std::size_t>(r) + 1);
  for (const auto& c : s.cells()) out[static_cast<std::size_t>(weight(c, r))].push_back(c);
  return out;
}

/// The preprojective representation of C[x,y]/I for a regular-type
/// staircase: x-arrows multiply by x, y-arrows by eps(paired x-arrow) * y,
/// b sends 1 to the cell (0,0), b* = 0. The sign on y keeps every moment
/// residual at zero whatever sign convention the quiver carries.
inline QuiverRepresentation rep_from_ideal(const FramedMcKayQuiver& q, const Staircase& s, long n) {
  if (q.type().family != Family::A) throw DomainError("staircase representations exist only in type A");
  const int r = q.rank();
  if (!is_regular_type(weight_profile(s, r), n))
    throw DomainError("staircase is not of regular-representation type for n=" + std::to_string(n));

  const auto graded = graded_cells(s, r);
  std::map<Cell, std::size_t> index;
  for (const auto& cls : graded)
    for (std::size_t k = 0; k < cls.size(); ++k) index[cls[k]] = k;

  DimensionVector dims(r);
  dims.set(kInfinity, 1);
  for (Vertex v = 0; v <= r; ++v) dims.set(v, static_cast<long>(graded[static_cast<std::size_t>(v)].size()));

  std::vector<RMatrix> mats;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arr = q.arrows()[a];
    RMatrix m(static_cast<std::size_t>(dims[arr.head]), static_cast<std::size_t>(dims[arr.tail]));
    switch (typeA_arrow_role(q, a)) {
    case ArrowRole::B:
      if (s.contains({0, 0})) m(index.at({0, 0}), 0) = 1;
      break;
    case ArrowRole::BStar:
      break;
    case ArrowRole::X:
    case ArrowRole::Y: {
      const bool is_x = typeA_arrow_role(q, a) == ArrowRole::X;
      const Rational coeff = is_x ? Rational(1) : Rational(q.arrows()[FramedMcKayQuiver::opposite(a)].epsilon);
      for (const auto& c : graded[static_cast<std::size_t>(arr.tail)]) {
        const Cell image = is_x ? Cell{c.i + 1, c.j} : Cell{c.i, c.j + 1};
        if (s.contains(image)) m(index.at(image), index.at(c)) = coeff;
      }
      break;
    }
    }
    mats.push_back(std::move(m));
  }
  return {q, std::move(dims), std::move(mats)};
}

inline QuiverRepresentation rep_from_ideal(const Staircase& s, int r, long n) {
  return rep_from_ideal(build_framed_quiver(DynkinType::make(Family::A, r)), s, n);
}

/// Regular-type staircases of colength n(r+1): torus-fixed points of nGamma-Hilb.
inline std::vector<Staircase> enumerate_regular_fixed_points(int r, long n) {
  if (r < 1) throw DomainError("r must be >= 1");
  if (n < 0) throw DomainError("n must be nonnegative");
  std::vector<Staircase> out;
  for (auto& s : enumerate_staircases(static_cast<int>(n * (r + 1))))
    if (is_regular_type(weight_profile(s, r), n)) out.push_back(std::move(s));
  return out;
}

/// n-cell order ideals of M_r, grown one addable cell at a time from the
/// empty ideal; a std::set of sorted cell lists removes duplicates.
inline std::vector<MonoidStaircase> enumerate_monoid_staircases(int r, int n) {
  if (r < 1) throw DomainError("r must be >= 1");
  if (n < 0) throw DomainError("n must be nonnegative");
  const int m = r + 1;
  std::set<std::vector<Cell>> level{{}};
  for (int size = 0; size < n; ++size) {
    std::set<std::vector<Cell>> next;
    for (const auto& cells : level) {
      const MonoidStaircase current(r, cells);
      std::set<Cell> candidates{{0, 0}};
      for (const auto& c : cells) {
        candidates.insert({c.i + m, c.j});
        candidates.insert({c.i, c.j + m});
        candidates.insert({c.i + 1, c.j + 1});
      }
      for (const auto& c : candidates) {
        if (current.contains(c)) continue;
        const auto preds = current.predecessors(c);
        if (!std::all_of(preds.begin(), preds.end(), [&](const Cell& p) { return current.contains(p); })) continue;
        auto grown = cells;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<MonoidStaircase> out;
  for (const auto& cells : level) out.emplace_back(r, cells);
  return out;
}

/// Fixed-point shadow of I -> I cap C[x,y]^Gamma: the invariant cells of s.
inline MonoidStaircase intersect_with_invariants(const Staircase& s, int r) {
  std::vector<Cell> cells;
  for (const auto& c : s.cells())
    if (in_invariant_monoid(c, r)) cells.push_back(c);
  return MonoidStaircase(r, std::move(cells));
}

/// chi_0 .. chi_nmax, chi_n = number of n-cell monoid order ideals.
inline std::vector<std::size_t> euler_characteristic_series(int r, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  std::vector<std::size_t> chi;
  for (int n = 0; n <= n_max; ++n) chi.push_back(enumerate_monoid_staircases(r, n).size());
  return chi;
}

inline std::string euler_series_csv(const std::vector<std::size_t>& chi) {
  std::string s = "n,chi\n";
  for (std::size_t n = 0; n < chi.size(); ++n) s += std::to_string(n) + "," + std::to_string(chi[n]) + "\n";
  return s;
}

} // namespace kleinian
