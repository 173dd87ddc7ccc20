#pragma once

#include "kleinian/error.hpp"
#include "kleinian/hilbert.hpp"
#include "kleinian/linalg.hpp"
#include "kleinian/mckay.hpp"
#include "kleinian/representation.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

// The cornered algebra for J = {0}: modules over CQ'/K, where Q' has vertices
// {inf, 0}, one arrow alpha: inf -> 0 and three loops at 0, and K is generated
// by f(alpha_1, alpha_2, alpha_3) and the three commutators.

namespace kleinian {

struct QPrime {
  static constexpr std::array<std::string_view, 2> vertices{"inf", "0"};
  static constexpr std::array<std::string_view, 4> arrows{"alpha", "alpha1", "alpha2", "alpha3"};
};

struct CornerIdealK {
  Polynomial f;
  static constexpr std::array<std::array<int, 2>, 3> commutators{{{0, 1}, {0, 2}, {1, 2}}};

  static CornerIdealK for_type(const DynkinType& t) { return {hypersurface(t).f}; }
  static constexpr std::size_t num_relations() { return 1 + commutators.size(); }
};

/// (w, w*, A1, A2, A3) of dimension vector (1, n).
class CornerModuleQ0 {
public:
  CornerModuleQ0(RMatrix w, RMatrix wstar, std::array<RMatrix, 3> a)
      : n_(w.rows()), w_(std::move(w)), wstar_(std::move(wstar)), a_(std::move(a)) {
    if (w_.cols() != 1) throw ShapeError("w must be n x 1, got " + w_.shape());
    if (wstar_.rows() != 1 || wstar_.cols() != n_) throw ShapeError("w* must be 1 x " + std::to_string(n_) + ", got " + wstar_.shape());
    for (const auto& m : a_)
      if (m.rows() != n_ || m.cols() != n_) throw ShapeError("A_i must be " + std::to_string(n_) + "x" + std::to_string(n_) + ", got " + m.shape());
  }

  std::size_t n() const { return n_; }
  const RMatrix& w() const { return w_; }
  const RMatrix& wstar() const { return wstar_; }
  const std::array<RMatrix, 3>& A() const { return a_; }
  const RMatrix& A(std::size_t k) const { return a_.at(k); }

  friend bool operator==(const CornerModuleQ0&, const CornerModuleQ0&) = default;

private:
  std::size_t n_;
  RMatrix w_, wstar_;
  std::array<RMatrix, 3> a_;
};

/// f evaluated at pairwise commuting matrices (term order is irrelevant then).
inline RMatrix evaluate_at_matrices(const Polynomial& f, const std::array<RMatrix, 3>& a) {
  const std::size_t n = a[0].rows();
  RMatrix out(n, n);
  for (const auto& [e, c] : f.terms()) {
    RMatrix term = RMatrix::identity(n);
    for (std::size_t k = 0; k < 3; ++k) term = term * power(a[k], e[k]);
    out += Rational(c) * term;
  }
  return out;
}

struct RelationResidual {
  std::array<RMatrix, 3> commutators;  // [A1,A2], [A1,A3], [A2,A3]
  RMatrix f;

  bool ok() const {
    return f.is_zero() && std::all_of(commutators.begin(), commutators.end(), [](const RMatrix& m) { return m.is_zero(); });
  }
};

inline RelationResidual check_relations(const CornerModuleQ0& m, const DynkinType& t) {
  RelationResidual res;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [i, j] = CornerIdealK::commutators[k];
    res.commutators[k] = commutator(m.A(static_cast<std::size_t>(i)), m.A(static_cast<std::size_t>(j)));
  }
  res.f = evaluate_at_matrices(CornerIdealK::for_type(t).f, m.A());
  return res;
}

/// eta-stability for J = {0}: the module is generated by w's image under the A_i.
inline bool is_eta_stable(const CornerModuleQ0& m, const DynkinType& t) {
  if (!check_relations(m, t).ok()) throw DomainError("corner module violates the relations of K");
  const std::vector<RMatrix> ops(m.A().begin(), m.A().end());
  return closure_under(ops, {m.w().col(0)}, m.n()).dim() == m.n();
}

struct WstarReport {
  bool vanishes;
  std::string diagnostic;
};

inline WstarReport wstar_vanishes(const CornerModuleQ0& m) {
  for (std::size_t k = 0; k < m.n(); ++k)
    if (m.wstar()(0, k) != 0)
      return {false, "w*[0][" + std::to_string(k) + "] = " + to_string(m.wstar()(0, k)) + " is nonzero"};
  return {true, "w* = 0"};
}

/// j^* for J = {0} on a type-A staircase representation: the space at 0 is
/// the weight-0 part of C[x,y]/I, and A1, A2, A3 are the cycles x^(r+1),
/// y^(r+1), xy through vertex 0 read off the arrow matrices.
inline CornerModuleQ0 j_star_corner(const QuiverRepresentation& rep, long n) {
  const auto& q = rep.quiver();
  if (q.type().family != Family::A) throw DomainError("j_star_corner needs a type A representation");
  const int r = q.rank();
  if (n < 0) throw DomainError("n must be nonnegative");
  DimensionVector expected(r);
  expected.set(kInfinity, 1);
  for (Vertex v = 0; v <= r; ++v) expected.set(v, n);
  if (rep.dims() != expected)
    throw DomainError("representation is not of regular-representation type for n=" + std::to_string(n));

  std::vector<std::size_t> x_from(static_cast<std::size_t>(r) + 1), y_from(static_cast<std::size_t>(r) + 1);
  std::size_t b = 0, bstar = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto tail = static_cast<std::size_t>(q.arrows()[a].tail);
    switch (typeA_arrow_role(q, a)) {
    case ArrowRole::X: x_from[tail] = a; break;
    case ArrowRole::Y: y_from[tail] = a; break;
    case ArrowRole::B: b = a; break;
    case ArrowRole::BStar: bstar = a; break;
    }
  }
  // y-arrows carry eps(paired x-arrow) * y; undo the sign.
  auto y_matrix = [&](std::size_t tail) {
    const std::size_t a = y_from[tail];
    return Rational(q.arrows()[FramedMcKayQuiver::opposite(a)].epsilon) * rep.mat(a);
  };
  const auto d0 = static_cast<std::size_t>(rep.dims()[0]);
  RMatrix xs = RMatrix::identity(d0), ys = RMatrix::identity(d0);
  for (int k = 0; k <= r; ++k) xs = rep.mat(x_from[static_cast<std::size_t>(k)]) * xs;
  for (int k = 0; k <= r; ++k) ys = y_matrix(static_cast<std::size_t>((r + 1 - k) % (r + 1))) * ys;
  const RMatrix xy = y_matrix(1) * rep.mat(x_from[0]);
  return CornerModuleQ0(rep.mat(b), rep.mat(bstar), {xs, ys, xy});
}

/// Independent construction from an ideal of the invariant ring: basis the
/// cells, A_i multiply by (r+1,0), (0,r+1), (1,1), w = class of 1, w* = 0.
inline CornerModuleQ0 corner_from_monoid_staircase(const MonoidStaircase& ms) {
  const std::size_t n = ms.size();
  const int m = ms.r() + 1;
  const std::array<Cell, 3> shifts{Cell{m, 0}, Cell{0, m}, Cell{1, 1}};
  std::array<RMatrix, 3> a{RMatrix(n, n), RMatrix(n, n), RMatrix(n, n)};
  const auto& cells = ms.cells();
  auto index = [&](const Cell& c) { return static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), c) - cells.begin()); };
  for (std::size_t k = 0; k < 3; ++k)
    for (const auto& c : cells) {
      const Cell image{c.i + shifts[k].i, c.j + shifts[k].j};
      if (ms.contains(image)) a[k](index(image), index(c)) = 1;
    }
  RMatrix w(n, 1);
  if (n > 0) w(index({0, 0}), 0) = 1;
  return CornerModuleQ0(std::move(w), RMatrix(1, n), std::move(a));
}

/// Simultaneous change of basis by P: A -> P A P^-1, w -> P w, w* -> w* P^-1.
inline CornerModuleQ0 conjugate(const CornerModuleQ0& m, const RMatrix& p) {
  const RMatrix pinv = inverse(p);
  return CornerModuleQ0(p * m.w(), m.wstar() * pinv, {p * m.A(0) * pinv, p * m.A(1) * pinv, p * m.A(2) * pinv});
}

/// Random invertible matrix with entries a/b, |a| <= 3, b in {1,2,3}.
template <class Rng>
RMatrix random_invertible(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  while (true) {
    RMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = Rational(num(rng), den(rng));
    if (rank(p) == n) return p;
  }
}

class NonSplitSpectrum : public DomainError {
public:
  NonSplitSpectrum(std::size_t which, std::array<RVector, 3> polys)
      : DomainError("characteristic polynomial of A" + std::to_string(which + 1) + " does not split over Q"),
        char_polys(std::move(polys)) {}
  std::array<RVector, 3> char_polys;
};

using Point3 = std::array<Rational, 3>;

/// Joint spectrum of the commuting triple with multiplicity, sorted. The
/// multiplicity of (l1,l2,l3) is the dimension of the joint generalised
/// eigenspace, the kernel of the stacked (A_k - l_k)^n.
inline std::vector<Point3> hilbert_chow(const CornerModuleQ0& m, const DynkinType& t) {
  if (!check_relations(m, t).ok()) throw DomainError("corner module violates the relations of K");
  const std::size_t n = m.n();
  std::array<RVector, 3> polys;
  std::array<std::vector<Rational>, 3> eigen;
  for (std::size_t k = 0; k < 3; ++k) polys[k] = characteristic_polynomial(m.A(k));
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t total = 0;
    for (const auto& [root, mult] : rational_roots(polys[k])) {
      eigen[k].push_back(root);
      total += mult;
    }
    if (total != n) throw NonSplitSpectrum(k, polys);
  }
  const auto shifted_power = [&](std::size_t k, const Rational& l) {
    return power(m.A(k) - l * RMatrix::identity(n), static_cast<unsigned>(n));
  };
  std::vector<Point3> points;
  for (const auto& l1 : eigen[0])
    for (const auto& l2 : eigen[1])
      for (const auto& l3 : eigen[2]) {
        const RMatrix stacked = vstack({shifted_power(0, l1), shifted_power(1, l2), shifted_power(2, l3)}, n);
        const std::size_t mult = n - rank(stacked);
        for (std::size_t c = 0; c < mult; ++c) points.push_back({l1, l2, l3});
      }
  if (points.size() != n) throw std::logic_error("joint eigenspaces do not fill the module");
  std::sort(points.begin(), points.end());
  return points;
}

inline bool lies_on_hypersurface(const Point3& p, const DynkinType& t) {
  const Polynomial& f = hypersurface(t).f;
  Rational value = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < 3; ++k)
      for (unsigned i = 0; i < e[k]; ++i) term *= p[k];
    value += term;
  }
  return value == 0;
}

} // namespace kleinian
