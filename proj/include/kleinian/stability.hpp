#pragma once

#include "kleinian/error.hpp"
#include "kleinian/mckay.hpp"
#include "kleinian/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kleinian {

/// A subset J of the unframed vertices {0..r}, kept as a bit mask (r <= 30).
class Face {
public:
  Face() = default;
  explicit Face(std::uint32_t mask) : mask_(mask) {}

  static Face from_vertices(const std::vector<Vertex>& vs) {
    std::uint32_t m = 0;
    for (Vertex v : vs) {
      if (v < 0 || v > 30) throw DomainError("face vertex out of range: " + std::to_string(v));
      m |= 1U << v;
    }
    return Face(m);
  }

  static Face all(int rank) { return Face((rank >= 31 ? ~0U : (1U << (rank + 1)) - 1U)); }

  /// Parses a comma list like "0,2"; the empty string is the empty face.
  static Face parse(const std::string& s) {
    std::vector<Vertex> vs;
    std::size_t start = 0;
    while (start < s.size()) {
      const auto comma = s.find(',', start);
      const auto tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const Vertex v = parse_vertex(tok);
      if (v == kInfinity) throw DomainError("J may not contain the framing vertex");
      vs.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return from_vertices(vs);
  }

  std::uint32_t mask() const { return mask_; }
  bool contains(Vertex v) const { return v >= 0 && (mask_ >> v) & 1U; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool fits(int rank) const { return (mask_ & ~Face::all(rank).mask_) == 0; }
  bool is_subset_of(const Face& o) const { return (mask_ & ~o.mask_) == 0; }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < 32; ++v)
      if (contains(v)) vs.push_back(v);
    return vs;
  }

  std::string list() const {
    std::string s;
    for (Vertex v : vertices()) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
  }
  /// "J={0,2}"
  std::string label() const { return "J={" + list() + "}"; }

  friend bool operator==(const Face&, const Face&) = default;

private:
  std::uint32_t mask_ = 0;
};

/// Rational weight per vertex, slot-indexed (framing vertex first).
struct StabilityParameter {
  std::vector<Rational> values;
  /// Set when the parameter was built to vanish on v(type, n).
  std::optional<std::pair<DynkinType, long>> normalized_for;

  const Rational& operator[](Vertex v) const { return values.at(slot(v)); }
  int rank() const { return static_cast<int>(values.size()) - 2; }

  Rational evaluate(const DimensionVector& d) const {
    if (d.size() != values.size()) throw ShapeError("parameter and dimension vector lengths differ");
    Rational s = 0;
    for (std::size_t k = 0; k < values.size(); ++k) s += values[k] * d.by_slot()[k];
    return s;
  }
};

inline void require_face_in_range(const DynkinType& t, const Face& J) {
  if (!J.fits(t.rank)) throw DomainError(J.label() + " is not a subset of {0.." + std::to_string(t.rank) + "}");
}

/// -n * sum_{j in J} delta_j at infinity, 1 on J, 0 elsewhere.
inline StabilityParameter theta_J(const FramedMcKayQuiver& q, long n, const Face& J) {
  require_face_in_range(q.type(), J);
  StabilityParameter theta{std::vector<Rational>(q.num_vertices()), std::make_pair(q.type(), n)};
  long weight = 0;
  for (Vertex j : J.vertices()) {
    theta.values[slot(j)] = 1;
    weight += n * q.delta(j);
  }
  theta.values[slot(kInfinity)] = -weight;
  return theta;
}

inline StabilityParameter theta_J(const DynkinType& t, long n, const Face& J) {
  return theta_J(build_framed_quiver(t), n, J);
}

/// A parameter on the cornered vertex set {inf} u J, in that order.
struct CornerParameter {
  std::vector<Vertex> vertices;
  std::vector<Rational> values;

  Rational evaluate(const std::vector<long>& dims) const {
    if (dims.size() != values.size()) throw ShapeError("corner dimension vector length mismatch");
    Rational s = 0;
    for (std::size_t k = 0; k < values.size(); ++k) s += values[k] * dims[k];
    return s;
  }
};

/// Restriction of theta_J to {inf} u J.
inline CornerParameter eta_J(const FramedMcKayQuiver& q, long n, const Face& J) {
  if (J.empty()) throw DomainError("eta_J needs a nonempty J");
  const StabilityParameter theta = theta_J(q, n, J);
  CornerParameter eta;
  eta.vertices.push_back(kInfinity);
  eta.values.push_back(theta[kInfinity]);
  for (Vertex j : J.vertices()) {
    eta.vertices.push_back(j);
    eta.values.push_back(theta[j]);
  }
  return eta;
}

/// v_J = rho_inf + sum_{j in J} n delta_j rho_j, ordered like eta_J's vertices.
inline std::vector<long> corner_dimension_vector(const FramedMcKayQuiver& q, long n, const Face& J) {
  std::vector<long> d{1};
  for (Vertex j : J.vertices()) d.push_back(n * q.delta(j));
  return d;
}

struct Classification {
  enum class Kind { Chamber, Face, Outside };
  Kind kind;
  Face face;  // {j : theta_j > 0}; meaningful unless Outside

  std::string describe() const {
    switch (kind) {
    case Kind::Chamber: return "C+";
    case Kind::Face: return "face " + face.label();
    case Kind::Outside: return "outside closure of C+";
    }
    return "";
  }
};

/// C+ when positive on every unframed vertex, the face sigma_J of its
/// closure when nonnegative there, outside otherwise.
inline Classification classify(const StabilityParameter& theta) {
  if (theta.values.size() < 2) throw DomainError("parameter has no unframed vertices");
  std::vector<Vertex> positive;
  for (Vertex i = 0; i <= theta.rank(); ++i) {
    if (theta[i] < 0) return {Classification::Kind::Outside, Face()};
    if (theta[i] > 0) positive.push_back(i);
  }
  const Face J = Face::from_vertices(positive);
  if (J == Face::all(theta.rank())) return {Classification::Kind::Chamber, J};
  return {Classification::Kind::Face, J};
}

struct FacePoset {
  struct Node {
    Face face;
    int rank;
    std::string label;
  };
  struct Edge {
    std::size_t from, to;  // indices into nodes; from covers to
  };

  DynkinType type;
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  /// DOT text: nodes named by J with rank attribute |J|, edges larger -> smaller J.
  std::string to_dot() const {
    std::string s = "digraph face_poset_" + type.name() + " {\n  rankdir=TB;\n";
    for (const auto& n : nodes) {
      s += "  \"" + n.face.label() + "\" [rank=" + std::to_string(n.rank);
      if (!n.label.empty()) s += ", label=\"" + n.face.label() + "\\n" + n.label + "\"";
      s += "];\n";
    }
    for (const auto& e : edges)
      s += "  \"" + nodes[e.from].face.label() + "\" -> \"" + nodes[e.to].face.label() + "\";\n";
    return s + "}\n";
  }
};

/// All 2^(r+1) faces of the closure of C+, sorted by (|J| descending, mask),
/// with a Hasse edge J -> J' whenever J' = J minus one vertex.
inline FacePoset face_poset(const DynkinType& t) {
  t.validate();
  if (t.rank > 20) throw DomainError("face poset too large");
  const std::uint32_t count = 1U << (t.rank + 1);
  std::vector<std::uint32_t> masks(count);
  for (std::uint32_t m = 0; m < count; ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  FacePoset poset{t, {}, {}};
  std::vector<std::size_t> index(count);
  for (std::size_t k = 0; k < masks.size(); ++k) {
    const Face f(masks[k]);
    std::string label;
    if (masks[k] == count - 1) label = "nGamma-Hilb(C^2)";
    else if (masks[k] == 0) label = "Sym^n(C^2/Gamma)";
    poset.nodes.push_back({f, f.size(), label});
    index[masks[k]] = k;
  }
  for (std::size_t k = 0; k < masks.size(); ++k)
    for (Vertex v = 0; v <= t.rank; ++v)
      if ((masks[k] >> v) & 1U) poset.edges.push_back({k, index[masks[k] & ~(1U << v)]});
  return poset;
}

/// For n = 1, whether the morphism attached to J' subset J is an isomorphism:
/// the symmetric difference of J and J' must be exactly {0}.
inline bool n1_collapse_predicate(const Face& J, const Face& Jprime) {
  if (!Jprime.is_subset_of(J) || Jprime == J)
    throw DomainError(Jprime.label() + " is not a proper subset of " + J.label());
  return (J.mask() ^ Jprime.mask()) == 1U;
}

} // namespace kleinian
