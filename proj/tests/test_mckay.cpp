#include "kleinian/mckay.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace kleinian;

namespace {

std::vector<DynkinType> all_test_types() {
  std::vector<DynkinType> ts;
  for (int r = 1; r <= 8; ++r) ts.push_back(DynkinType::make(Family::A, r));
  for (int r = 4; r <= 9; ++r) ts.push_back(DynkinType::make(Family::D, r));
  for (int r = 6; r <= 8; ++r) ts.push_back(DynkinType::make(Family::E, r));
  return ts;
}

} // namespace

TEST(DynkinType, RankConstraints) {
  EXPECT_THROW(DynkinType::make(Family::A, 0), DomainError);
  EXPECT_THROW(DynkinType::make(Family::D, 3), DomainError);
  EXPECT_THROW(DynkinType::make(Family::E, 5), DomainError);
  EXPECT_THROW(DynkinType::make(Family::E, 9), DomainError);
  EXPECT_THROW(DynkinType::parse("F4"), DomainError);
  EXPECT_THROW(DynkinType::parse("A"), DomainError);
  EXPECT_EQ(DynkinType::parse("e7"), DynkinType::make(Family::E, 7));
}

TEST(FramedQuiver, A1HasDoubleEdge) {
  const auto q = build_framed_quiver(DynkinType::parse("A1"));
  EXPECT_EQ(q.num_vertices(), 3u);
  ASSERT_EQ(q.edges().size(), 2u);
  EXPECT_EQ(q.edges()[1].u, 0);
  EXPECT_EQ(q.edges()[1].v, 1);
  EXPECT_EQ(q.edges()[1].multiplicity, 2);
  EXPECT_EQ(q.delta(), (std::vector<long>{1, 1}));
  EXPECT_EQ(q.arrows().size(), 6u);  // framing pair + two pairs on the double edge
}

TEST(FramedQuiver, D4IsAStar) {
  const auto q = build_framed_quiver(DynkinType::parse("D4"));
  EXPECT_EQ(q.delta(), (std::vector<long>{1, 1, 2, 1, 1}));
  int centre_degree = 0;
  for (const auto& e : q.edges())
    if (e.u == 2 || e.v == 2) ++centre_degree;
  EXPECT_EQ(centre_degree, 4);
}

TEST(FramedQuiver, E8BranchVertexHasDeltaSix) {
  const auto q = build_framed_quiver(DynkinType::parse("E8"));
  std::map<Vertex, int> degree;
  for (const auto& e : q.edges())
    if (e.u != kInfinity) ++degree[e.u], ++degree[e.v];
  Vertex branch = -2;
  for (const auto& [v, d] : degree)
    if (d == 3) branch = v;
  ASSERT_NE(branch, -2);
  EXPECT_EQ(q.delta(branch), 6);
}

TEST(FramedQuiver, NullRootIdentityEverywhere) {
  for (const auto& t : all_test_types()) {
    const auto q = build_framed_quiver(t);
    EXPECT_EQ(q.delta(0), 1) << t.name();
    for (Vertex i = 0; i <= q.rank(); ++i) {
      long sum = 0;
      for (const auto& [j, m] : q.neighbours(i))
        if (j != kInfinity) sum += m * q.delta(j);
      EXPECT_EQ(2 * q.delta(i), sum) << t.name() << " vertex " << i;
      EXPECT_GT(q.delta(i), 0);
    }
  }
}

TEST(FramedQuiver, StructuralInvariants) {
  for (const auto& t : all_test_types()) {
    const auto q = build_framed_quiver(t);
    int framing_edges = 0;
    for (const auto& e : q.edges())
      if (e.u == kInfinity || e.v == kInfinity) {
        ++framing_edges;
        EXPECT_EQ(e.multiplicity, 1);
        EXPECT_EQ(e.u == kInfinity ? e.v : e.u, 0);
      }
    EXPECT_EQ(framing_edges, 1);

    std::size_t expected_arrows = 0;
    for (const auto& e : q.edges()) expected_arrows += 2 * static_cast<std::size_t>(e.multiplicity);
    ASSERT_EQ(q.arrows().size(), expected_arrows);
    std::set<std::string> ids;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arr = q.arrows()[a];
      const auto& opp = q.arrows()[FramedMcKayQuiver::opposite(a)];
      EXPECT_NE(arr.epsilon, opp.epsilon);
      EXPECT_EQ(arr.tail, opp.head);
      EXPECT_EQ(arr.head, opp.tail);
      ids.insert(q.arrow_id(a));
      EXPECT_EQ(q.find_arrow(q.arrow_id(a)), a);
    }
    EXPECT_EQ(ids.size(), q.arrows().size());

    const auto flipped = q.with_flipped_epsilon();
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
      EXPECT_EQ(flipped.arrows()[a].epsilon, -q.arrows()[a].epsilon);
  }
}

TEST(FramedQuiver, Deterministic) {
  for (const auto& t : all_test_types())
    EXPECT_EQ(build_framed_quiver(t).serialize(), build_framed_quiver(t).serialize());
}

TEST(FramedQuiver, ArrowIds) {
  const auto q = build_framed_quiver(DynkinType::parse("A1"));
  EXPECT_EQ(q.arrow_id(0), "inf>0#0");
  EXPECT_EQ(q.arrow_id(1), "inf>0#0*");
  EXPECT_EQ(q.arrow_id(4), "0>1#1");
  EXPECT_EQ(q.arrow_id(5), "0>1#1*");
}

TEST(DimensionVectorV, Examples) {
  EXPECT_EQ(dimension_vector_v(DynkinType::parse("A2"), 3), DimensionVector({1, 3, 3, 3}));
  EXPECT_EQ(dimension_vector_v(DynkinType::parse("D4"), 1), DimensionVector({1, 1, 1, 2, 1, 1}));
  EXPECT_EQ(dimension_vector_v(DynkinType::parse("A1"), 5), DimensionVector({1, 5, 5}));
  EXPECT_THROW(dimension_vector_v(DynkinType::parse("A1"), 0), DomainError);
  EXPECT_EQ(dimension_vector_v(DynkinType::parse("A2"), 3).to_string(), "(1;3,3,3)");
}

TEST(Hypersurface, TypeASubstitutionVanishes) {
  for (int r = 1; r <= 6; ++r) {
    const auto h = hypersurface(DynkinType::make(Family::A, r));
    ASSERT_TRUE(h.generators.has_value());
    const auto& g = *h.generators;
    EXPECT_TRUE(h.f.substitute({g[0], g[1], g[2]}).is_zero()) << "A" << r;
  }
  EXPECT_EQ(hypersurface(DynkinType::parse("A1")).f_string(), "z1*z2 - z3^2");
  EXPECT_EQ(hypersurface(DynkinType::parse("A2")).f_string(), "z1*z2 - z3^3");
}

TEST(Hypersurface, GeneratorsOfA1) {
  const auto h = hypersurface(DynkinType::parse("A1"));
  const std::vector<std::string> xy{"x", "y"};
  EXPECT_EQ((*h.generators)[0].to_string(xy), "x^2");
  EXPECT_EQ((*h.generators)[1].to_string(xy), "y^2");
  EXPECT_EQ((*h.generators)[2].to_string(xy), "x*y");
  // A wrong generator set must not satisfy f.
  const auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  EXPECT_FALSE(h.f.substitute({x.pow(2), y.pow(2), x}).is_zero());
}

TEST(Hypersurface, DEHaveNoGenerators) {
  for (const char* name : {"D4", "D5", "E6", "E7", "E8"}) {
    const auto h = hypersurface(DynkinType::parse(name));
    EXPECT_FALSE(h.generators.has_value());
    EXPECT_TRUE(h.irreducible);
    EXPECT_FALSE(h.f.is_zero());
  }
  EXPECT_EQ(hypersurface(DynkinType::parse("E8")).f_string(), "z1^2 + z2^3 + z3^5");
}

TEST(E8Labels, AlternateNumberingMatchesDeltas) {
  const auto q = build_framed_quiver(DynkinType::parse("E8"));
  // delta in the alternate labels: 0:1 1:2 2:3 3:4 4:6 5:5 6:4 7:3 8:2
  const std::array<long, 9> alternate_delta{1, 2, 3, 4, 6, 5, 4, 3, 2};
  std::set<Vertex> image;
  for (int label = 0; label <= 8; ++label) {
    const Vertex v = e8_alternate_label_to_canonical(label);
    image.insert(v);
    EXPECT_EQ(q.delta(v), alternate_delta[static_cast<std::size_t>(label)]) << label;
  }
  EXPECT_EQ(image.size(), 9u);
  // Alternate chain 1-3-4-5-6-7-8-0 and 2-4 must be edges.
  const std::vector<std::pair<int, int>> alternate_edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}, {2, 4}};
  for (const auto& [a, b] : alternate_edges) {
    const Vertex u = e8_alternate_label_to_canonical(a), v = e8_alternate_label_to_canonical(b);
    bool found = false;
    for (const auto& [w, m] : q.neighbours(u)) found = found || w == v;
    EXPECT_TRUE(found) << a << "-" << b;
  }
}
