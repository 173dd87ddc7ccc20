#pragma once

#include "kleinian/error.hpp"
#include "kleinian/linalg.hpp"
#include "kleinian/polynomial.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kleinian {

/// Vertices are 0..r for the unframed diagram plus the framing vertex.
using Vertex = int;
inline constexpr Vertex kInfinity = -1;

inline std::size_t slot(Vertex v) { return static_cast<std::size_t>(v + 1); }
inline Vertex vertex_at(std::size_t s) { return static_cast<Vertex>(s) - 1; }

inline std::string vertex_name(Vertex v) { return v == kInfinity ? "inf" : std::to_string(v); }

inline Vertex parse_vertex(std::string_view s) {
  if (s == "inf") return kInfinity;
  if (s.empty() || s.size() > 3) throw DomainError("bad vertex '" + std::string(s) + "'");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw DomainError("bad vertex '" + std::string(s) + "'");
    v = 10 * v + (c - '0');
  }
  return v;
}

enum class Family { A, D, E };

struct DynkinType {
  Family family;
  int rank;

  static DynkinType make(Family f, int r) {
    DynkinType t{f, r};
    t.validate();
    return t;
  }

  /// Parses "A1", "D4", "E8" (case-insensitive family letter).
  static DynkinType parse(std::string_view s) {
    if (s.size() < 2) throw DomainError("bad Dynkin type '" + std::string(s) + "'");
    Family f;
    switch (s.front()) {
    case 'A': case 'a': f = Family::A; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: throw DomainError("unknown Dynkin family in '" + std::string(s) + "'");
    }
    int r = 0;
    for (char c : s.substr(1)) {
      if (c < '0' || c > '9' || r > 1000) throw DomainError("bad Dynkin rank in '" + std::string(s) + "'");
      r = 10 * r + (c - '0');
    }
    return make(f, r);
  }

  void validate() const {
    const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                    (family == Family::E && rank >= 6 && rank <= 8);
    if (!ok) throw DomainError("invalid rank " + std::to_string(rank) + " for family " + family_letter());
  }

  std::string family_letter() const {
    switch (family) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    }
    return "?";
  }
  std::string name() const { return family_letter() + std::to_string(rank); }
  int num_unframed() const { return rank + 1; }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct Edge {
  Vertex u, v;
  int multiplicity;
};

/// One oriented copy of an edge. Arrows are stored in (a, a*) pairs: index
/// 2k follows the stored edge orientation, 2k+1 is its opposite.
struct Arrow {
  Vertex tail, head;
  std::size_t edge;
  int copy;
  bool reversed;
  int epsilon;

  /// "u>v#k" for the stored orientation of edge (u,v), "u>v#k*" for the reverse.
  std::string id(const std::vector<Edge>& edges) const {
    const Edge& e = edges[edge];
    return vertex_name(e.u) + ">" + vertex_name(e.v) + "#" + std::to_string(copy) + (reversed ? "*" : "");
  }
};

/// Vertex-indexed nonnegative integers, the framing vertex included.
class DimensionVector {
public:
  DimensionVector() = default;
  explicit DimensionVector(int rank) : values_(static_cast<std::size_t>(rank) + 2, 0) {}
  DimensionVector(std::vector<long> values_by_slot) : values_(std::move(values_by_slot)) {
    for (long x : values_)
      if (x < 0) throw DomainError("negative entry in dimension vector");
  }

  long operator[](Vertex v) const { return values_.at(slot(v)); }
  void set(Vertex v, long d) {
    if (d < 0) throw DomainError("negative entry in dimension vector");
    values_.at(slot(v)) = d;
  }
  std::size_t size() const { return values_.size(); }
  const std::vector<long>& by_slot() const { return values_; }
  long total() const {
    long t = 0;
    for (long x : values_) t += x;
    return t;
  }

  friend DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
    if (a.size() != b.size()) throw ShapeError("dimension vectors of different lengths");
    std::vector<long> s(a.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.values_[k] + b.values_[k];
    return DimensionVector(std::move(s));
  }
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

  /// "(v_inf; v_0,...,v_r)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < values_.size(); ++k) {
      s += std::to_string(values_[k]);
      s += k == 0 ? ";" : (k + 1 < values_.size() ? "," : "");
    }
    return s + ")";
  }

private:
  std::vector<long> values_;
};

class FramedMcKayQuiver {
public:
  FramedMcKayQuiver(DynkinType type, std::vector<Edge> edges, std::vector<long> delta)
      : type_(type), edges_(std::move(edges)), delta_(std::move(delta)) {
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (int k = 0; k < edges_[e].multiplicity; ++k) {
        arrows_.push_back({edges_[e].u, edges_[e].v, e, k, false, +1});
        arrows_.push_back({edges_[e].v, edges_[e].u, e, k, true, -1});
      }
  }

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<long>& delta() const { return delta_; }
  long delta(Vertex i) const { return delta_.at(static_cast<std::size_t>(i)); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> vs{kInfinity};
    for (Vertex i = 0; i <= rank(); ++i) vs.push_back(i);
    return vs;
  }
  std::size_t num_vertices() const { return static_cast<std::size_t>(rank()) + 2; }
  bool has_vertex(Vertex v) const { return v >= kInfinity && v <= rank(); }

  static std::size_t opposite(std::size_t arrow) { return arrow ^ 1U; }

  std::string arrow_id(std::size_t a) const { return arrows_.at(a).id(edges_); }

  std::optional<std::size_t> find_arrow(std::string_view id) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrow_id(a) == id) return a;
    return std::nullopt;
  }

  std::vector<std::size_t> arrows_with_head(Vertex v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].head == v) out.push_back(a);
    return out;
  }

  /// Neighbours of an unframed or framing vertex, with edge multiplicity.
  std::vector<std::pair<Vertex, int>> neighbours(Vertex v) const {
    std::vector<std::pair<Vertex, int>> out;
    for (const auto& e : edges_) {
      if (e.u == v) out.emplace_back(e.v, e.multiplicity);
      if (e.v == v) out.emplace_back(e.u, e.multiplicity);
    }
    return out;
  }

  /// Same quiver with every sign negated; still satisfies eps(a) != eps(a*).
  FramedMcKayQuiver with_flipped_epsilon() const {
    FramedMcKayQuiver q = *this;
    for (auto& a : q.arrows_) a.epsilon = -a.epsilon;
    return q;
  }

  /// Canonical text form used to check determinism.
  std::string serialize() const {
    std::string s = type_.name() + "|";
    for (const auto& e : edges_)
      s += vertex_name(e.u) + "-" + vertex_name(e.v) + "x" + std::to_string(e.multiplicity) + ";";
    s += "|";
    for (long d : delta_) s += std::to_string(d) + ",";
    s += "|";
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      s += arrow_id(a) + (arrows_[a].epsilon > 0 ? "+" : "-") + ";";
    return s;
  }

private:
  DynkinType type_;
  std::vector<Edge> edges_;
  std::vector<long> delta_;
  std::vector<Arrow> arrows_;
};

namespace detail {

/// Chain 0-1-...-first_arm ending at the branch vertex, then each further arm
/// hung off the branch vertex in the order given.
inline std::vector<Edge> branched_tree(int first_arm, const std::vector<int>& other_arms) {
  std::vector<Edge> edges;
  for (int i = 0; i < first_arm; ++i) edges.push_back({i, i + 1, 1});
  const int branch = first_arm;
  int next = first_arm + 1;
  for (int len : other_arms) {
    Vertex prev = branch;
    for (int k = 0; k < len; ++k) {
      edges.push_back({prev, next, 1});
      prev = next++;
    }
  }
  return edges;
}

inline std::vector<Edge> unframed_edges(const DynkinType& t) {
  const int r = t.rank;
  switch (t.family) {
  case Family::A: {
    if (r == 1) return {{0, 1, 2}};
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({r, 0, 1});
    return edges;
  }
  case Family::D: {
    std::vector<Edge> edges{{0, 2, 1}, {1, 2, 1}};
    for (int i = 2; i < r - 2; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({r - 2, r - 1, 1});
    edges.push_back({r - 2, r, 1});
    return edges;
  }
  case Family::E:
    if (r == 6) return branched_tree(2, {2, 2});
    if (r == 7) return branched_tree(3, {3, 1});
    return branched_tree(5, {2, 1});
  }
  return {};
}

/// The unique null vector of 2I - adjacency normalised to delta_0 = 1.
inline std::vector<long> solve_null_root(int num_vertices, const std::vector<Edge>& edges) {
  const auto n = static_cast<std::size_t>(num_vertices);
  RMatrix cartan(n, n);
  for (std::size_t i = 0; i < n; ++i) cartan(i, i) = 2;
  for (const auto& e : edges) {
    cartan(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) -= e.multiplicity;
    cartan(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) -= e.multiplicity;
  }
  const auto kernel = kernel_basis(cartan);
  if (kernel.size() != 1) throw DomainError("affine Cartan matrix has nullity " + std::to_string(kernel.size()));
  const Rational scale = kernel[0][0];
  if (scale == 0) throw DomainError("null root vanishes at vertex 0");
  std::vector<long> delta;
  for (const auto& x : kernel[0]) {
    const Rational d = x / scale;
    if (!is_integer(d) || d <= 0) throw DomainError("null root is not a positive integer vector");
    delta.push_back(numerator(d).convert_to<long>());
  }
  return delta;
}

} // namespace detail

/// Framed doubled affine diagram. Edge 0 is the framing edge inf-0; the
/// remaining edges follow the canonical numbering: 0 is the trivial vertex,
/// the arm through 0 comes first, further arms follow by decreasing length.
inline FramedMcKayQuiver build_framed_quiver(const DynkinType& t) {
  t.validate();
  auto unframed = detail::unframed_edges(t);
  auto delta = detail::solve_null_root(t.num_unframed(), unframed);
  std::vector<Edge> edges{{kInfinity, 0, 1}};
  edges.insert(edges.end(), unframed.begin(), unframed.end());
  return FramedMcKayQuiver(t, std::move(edges), std::move(delta));
}

/// v = rho_inf + sum_i n*delta_i*rho_i.
inline DimensionVector dimension_vector_v(const FramedMcKayQuiver& q, long n) {
  if (n < 1) throw DomainError("n must be positive");
  DimensionVector v(q.rank());
  v.set(kInfinity, 1);
  for (Vertex i = 0; i <= q.rank(); ++i) v.set(i, n * q.delta(i));
  return v;
}

inline DimensionVector dimension_vector_v(const DynkinType& t, long n) {
  return dimension_vector_v(build_framed_quiver(t), n);
}

/// Alternate E8 labelling (chain 1-3-4-5-6-7-8-0 with 2 on the branch
/// vertex 4) translated to the canonical labels.
inline Vertex e8_alternate_label_to_canonical(int label) {
  static constexpr std::array<int, 9> table{0, 7, 8, 6, 5, 4, 3, 2, 1};
  if (label < 0 || label > 8) throw DomainError("E8 label out of range");
  return table[static_cast<std::size_t>(label)];
}

struct HypersurfaceData {
  DynkinType type;
  Polynomial f;                                   // in z1, z2, z3
  std::optional<std::array<Polynomial, 3>> generators;  // in x, y (type A only)
  bool irreducible = true;                        // stored metadata

  std::string f_string() const { return f.to_string({"z1", "z2", "z3"}); }
};

/// Type A_r: f = z1 z2 - z3^(r+1) with z = (x^(r+1), y^(r+1), xy).
/// Types D and E: Arnold normal forms, metadata only.
inline HypersurfaceData hypersurface(const DynkinType& t) {
  t.validate();
  auto z = [](std::size_t k, unsigned p = 1) { return Polynomial::variable(3, k, p); };
  const auto r = static_cast<unsigned>(t.rank);
  HypersurfaceData h{t, Polynomial(3), std::nullopt, true};
  switch (t.family) {
  case Family::A: {
    h.f = z(0) * z(1) - z(2, r + 1);
    auto xy = [](unsigned i, unsigned j) {
      return Polynomial::variable(2, 0, i) * Polynomial::variable(2, 1, j);
    };
    h.generators = std::array<Polynomial, 3>{xy(r + 1, 0), xy(0, r + 1), xy(1, 1)};
    break;
  }
  case Family::D:
    h.f = z(0, 2) + z(1, 2) * z(2) + z(2, r - 1);
    break;
  case Family::E:
    if (r == 6) h.f = z(0, 2) + z(1, 3) + z(2, 4);
    else if (r == 7) h.f = z(0, 2) + z(1, 3) + z(1) * z(2, 3);
    else h.f = z(0, 2) + z(1, 3) + z(2, 5);
    break;
  }
  return h;
}

} // namespace kleinian
