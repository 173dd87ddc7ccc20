#pragma once

#include "kleinian/error.hpp"
#include "kleinian/linalg.hpp"
#include "kleinian/mckay.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kleinian {

/// A representation of the doubled framed quiver: one matrix per arrow,
/// mats[a] of shape dims[head(a)] x dims[tail(a)].
class QuiverRepresentation {
public:
  QuiverRepresentation(FramedMcKayQuiver quiver, DimensionVector dims, std::vector<RMatrix> mats)
      : quiver_(std::move(quiver)), dims_(std::move(dims)), mats_(std::move(mats)) {
    if (dims_.size() != quiver_.num_vertices()) throw ShapeError("dimension vector does not match quiver");
    if (mats_.size() != quiver_.arrows().size()) throw ShapeError("one matrix per arrow required");
    for (std::size_t a = 0; a < mats_.size(); ++a) {
      const Arrow& arr = quiver_.arrows()[a];
      if (mats_[a].rows() != static_cast<std::size_t>(dims_[arr.head]) ||
          mats_[a].cols() != static_cast<std::size_t>(dims_[arr.tail]))
        throw ShapeError("arrow " + quiver_.arrow_id(a) + " carries " + mats_[a].shape() + ", expected " +
                         std::to_string(dims_[arr.head]) + "x" + std::to_string(dims_[arr.tail]));
    }
  }

  static QuiverRepresentation zero(const FramedMcKayQuiver& quiver, const DimensionVector& dims) {
    std::vector<RMatrix> mats;
    for (const auto& a : quiver.arrows())
      mats.emplace_back(static_cast<std::size_t>(dims[a.head]), static_cast<std::size_t>(dims[a.tail]));
    return {quiver, dims, std::move(mats)};
  }

  const FramedMcKayQuiver& quiver() const { return quiver_; }
  const DimensionVector& dims() const { return dims_; }
  const std::vector<RMatrix>& mats() const { return mats_; }
  const RMatrix& mat(std::size_t arrow) const { return mats_.at(arrow); }

  /// Offset of vertex v's coordinates in the total space, vertices in slot order.
  std::size_t offset(Vertex v) const {
    std::size_t off = 0;
    for (std::size_t s = 0; s < slot(v); ++s) off += static_cast<std::size_t>(dims_.by_slot()[s]);
    return off;
  }
  std::size_t total_dim() const { return static_cast<std::size_t>(dims_.total()); }

  /// Arrow a as an operator on the total space (zero outside tail -> head).
  RMatrix total_operator(std::size_t a) const {
    const Arrow& arr = quiver_.arrows()[a];
    RMatrix op(total_dim(), total_dim());
    const std::size_t r0 = offset(arr.head), c0 = offset(arr.tail);
    const RMatrix& m = mats_[a];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) op(r0 + i, c0 + j) = m(i, j);
    return op;
  }

private:
  FramedMcKayQuiver quiver_;
  DimensionVector dims_;
  std::vector<RMatrix> mats_;
};

/// Residual at each vertex (slot-indexed): sum over arrows a with head i of
/// eps(a) * mats[a] * mats[a*]. All zero iff the preprojective relations hold.
inline std::vector<RMatrix> moment_residual(const QuiverRepresentation& rep) {
  const auto& q = rep.quiver();
  std::vector<RMatrix> residual;
  for (Vertex v : q.vertices()) {
    const auto d = static_cast<std::size_t>(rep.dims()[v]);
    RMatrix r(d, d);
    for (std::size_t a : q.arrows_with_head(v))
      r += Rational(q.arrows()[a].epsilon) * (rep.mat(a) * rep.mat(FramedMcKayQuiver::opposite(a)));
    residual.push_back(std::move(r));
  }
  return residual;
}

inline bool satisfies_preprojective_relations(const QuiverRepresentation& rep) {
  for (const auto& r : moment_residual(rep))
    if (!r.is_zero()) return false;
  return true;
}

struct TaggedVector {
  Vertex vertex;
  RVector vector;
};

struct GeneratedSubmodule {
  DimensionVector dims;
  std::vector<Subspace> spaces;  // slot-indexed, each in its vertex space
};

/// Smallest arrow-stable graded subspace containing the seed vectors.
inline GeneratedSubmodule submodule_generated(const QuiverRepresentation& rep, const std::vector<TaggedVector>& seed) {
  const auto& q = rep.quiver();
  const std::size_t total = rep.total_dim();
  std::vector<RVector> lifted;
  for (const auto& [v, vec] : seed) {
    if (!q.has_vertex(v)) throw DomainError("seed at unknown vertex " + std::to_string(v));
    if (vec.size() != static_cast<std::size_t>(rep.dims()[v]))
      throw ShapeError("seed of length " + std::to_string(vec.size()) + " at vertex " + vertex_name(v) +
                       " of dimension " + std::to_string(rep.dims()[v]));
    RVector w(total);
    const std::size_t off = rep.offset(v);
    for (std::size_t k = 0; k < vec.size(); ++k) w[off + k] = vec[k];
    lifted.push_back(std::move(w));
  }
  std::vector<RMatrix> ops;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) ops.push_back(rep.total_operator(a));
  const Subspace closure = closure_under(ops, lifted, total);

  // Homogeneous seeds and operators give a graded closure, and the reduced
  // echelon basis of a graded subspace is homogeneous, so rows split by block.
  DimensionVector dims(q.rank());
  std::vector<Subspace> spaces;
  for (Vertex v : q.vertices()) {
    const std::size_t off = rep.offset(v), d = static_cast<std::size_t>(rep.dims()[v]);
    Subspace s(d);
    for (const auto& b : closure.basis()) {
      RVector piece(b.begin() + static_cast<std::ptrdiff_t>(off), b.begin() + static_cast<std::ptrdiff_t>(off + d));
      s.insert(piece);
    }
    dims.set(v, static_cast<long>(s.dim()));
    spaces.push_back(std::move(s));
  }
  return {std::move(dims), std::move(spaces)};
}

inline bool is_cyclic_at_infinity(const QuiverRepresentation& rep) {
  if (rep.dims()[kInfinity] != 1) throw DomainError("cyclicity at infinity needs dims[inf] = 1");
  return submodule_generated(rep, {{kInfinity, RVector{Rational(1)}}}).dims == rep.dims();
}

inline QuiverRepresentation vertex_simple(const FramedMcKayQuiver& q, Vertex i) {
  if (!q.has_vertex(i)) throw DomainError("no vertex " + std::to_string(i));
  DimensionVector d(q.rank());
  d.set(i, 1);
  return QuiverRepresentation::zero(q, d);
}

inline QuiverRepresentation direct_sum(const QuiverRepresentation& a, const QuiverRepresentation& b) {
  if (a.quiver().serialize() != b.quiver().serialize()) throw DomainError("direct sum of representations of different quivers");
  std::vector<RMatrix> mats;
  for (std::size_t k = 0; k < a.mats().size(); ++k) mats.push_back(block_diagonal(a.mat(k), b.mat(k)));
  return {a.quiver(), a.dims() + b.dims(), std::move(mats)};
}

struct VertexProbe {
  bool f_injective;
  bool g_surjective;
  bool inequality_holds;
};

/// The local complex V_i -f-> (+)_{head(a)=i} V_tail(a) -g-> V_i: f stacks the
/// reverse arrows a* out of i, g places the arrows a into i side by side.
inline VertexProbe vertex_stability_probe(const QuiverRepresentation& rep, Vertex i) {
  const auto& q = rep.quiver();
  if (i == kInfinity || !q.has_vertex(i)) throw DomainError("probe vertex must be an unframed vertex");
  const auto di = static_cast<std::size_t>(rep.dims()[i]);
  std::vector<RMatrix> out_blocks, in_blocks;
  long neighbour_sum = 0;
  for (std::size_t a : q.arrows_with_head(i)) {
    in_blocks.push_back(rep.mat(a));
    out_blocks.push_back(rep.mat(FramedMcKayQuiver::opposite(a)));
    neighbour_sum += rep.dims()[q.arrows()[a].tail];
  }
  const RMatrix f = vstack(out_blocks, di);
  const RMatrix g = hstack(in_blocks, di);
  return {rank(f) == di, rank(g) == di, 2 * static_cast<long>(di) <= neighbour_sum};
}

} // namespace kleinian
