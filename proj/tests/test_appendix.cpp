#include "kleinian/appendix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kleinian;

namespace {

struct Case {
  std::string type;
  long n;
};

const std::vector<Case> kSmallCases{{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A2", 1}, {"A2", 2}, {"A3", 1},
                                    {"A3", 2}, {"A4", 1}, {"D4", 1}, {"D4", 2}, {"D5", 1}};

} // namespace

TEST(BuildSystem, A2J0) {
  const auto sys = build_system(DynkinType::parse("A2"), 1, Face::parse("0"));
  EXPECT_EQ(sys.unknowns, (std::vector<Vertex>{1, 2}));
  ASSERT_EQ(sys.rows.size(), 2u);
  EXPECT_EQ(sys.rows[0].coeffs, (std::vector<long>{2, -1}));
  EXPECT_EQ(sys.rows[0].bound, 1);
  EXPECT_EQ(sys.rows[1].coeffs, (std::vector<long>{-1, 2}));
  EXPECT_EQ(sys.rows[1].bound, 1);
}

TEST(BuildSystem, A1J1IncludesFramingConstant) {
  const auto sys = build_system(DynkinType::parse("A1"), 3, Face::parse("1"));
  ASSERT_EQ(sys.rows.size(), 1u);
  EXPECT_EQ(sys.rows[0].coeffs, (std::vector<long>{2}));
  EXPECT_EQ(sys.rows[0].bound, 7);  // 2 * 3 from the double edge, 1 from the framing
}

TEST(BuildSystem, Rejects) {
  EXPECT_THROW(build_system(DynkinType::parse("A1"), 1, Face()), DomainError);
  EXPECT_THROW(build_system(DynkinType::parse("A1"), 0, Face::parse("0")), DomainError);
  EXPECT_THROW(build_system(DynkinType::parse("A1"), 1, Face::parse("2")), DomainError);
}

TEST(BuildSystem, NDeltaIsFeasible) {
  for (const char* name : {"A1", "A2", "A5", "D4", "D6", "E6", "E7", "E8"}) {
    const auto t = DynkinType::parse(name);
    for (long n = 1; n <= 3; ++n)
      for (std::uint32_t m = 1; m <= Face::all(t.rank).mask(); ++m) {
        const auto sys = build_system(t, n, Face(m));
        std::vector<long> point;
        for (Vertex v : sys.unknowns) point.push_back(n * sys.delta[static_cast<std::size_t>(v)]);
        EXPECT_TRUE(sys.satisfied_by(point)) << name << " " << Face(m).label();
      }
  }
}

TEST(LpMax, Examples) {
  for (long n = 1; n <= 4; ++n) {
    EXPECT_EQ(lp_max(build_system(DynkinType::parse("A2"), n, Face::parse("0")), 1), n);
    EXPECT_EQ(lp_max(build_system(DynkinType::parse("A1"), n, Face::parse("1")), 0), Rational(2 * n + 1, 2));
    EXPECT_EQ(lp_max(build_system(DynkinType::parse("A1"), n, Face::parse("0")), 1), n);
  }
  EXPECT_THROW(lp_max(build_system(DynkinType::parse("A1"), 1, Face::parse("0")), 0), DomainError);
}

TEST(LpMax, SimplexProjectionAndVertexEnumerationAgree) {
  for (const auto& [name, n] : kSmallCases) {
    const auto t = DynkinType::parse(name);
    for (std::uint32_t m = 1; m <= Face::all(t.rank).mask(); ++m) {
      const auto sys = build_system(t, n, Face(m));
      for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
        const Rational lp = lp_max(sys, sys.unknowns[k]);
        EXPECT_EQ(lp, projected_upper_bound(sys, sys.unknowns[k])) << name << " " << Face(m).label();
        EXPECT_EQ(lp, oracle::lp_max_by_vertices(sys, k)) << name << " " << Face(m).label();
      }
    }
  }
}

TEST(IntegerEnumerate, A1J0) {
  const auto pts = integer_enumerate(build_system(DynkinType::parse("A1"), 1, Face::parse("0")));
  EXPECT_EQ(pts, (std::vector<std::vector<long>>{{0}, {1}}));
}

TEST(IntegerEnumerate, MatchesBoxEnumeration) {
  for (const auto& [name, n] : kSmallCases) {
    const auto t = DynkinType::parse(name);
    const auto q = build_framed_quiver(t);
    long box = 1;
    for (long d : q.delta()) box = std::max(box, 2 * n * d + 2);
    for (std::uint32_t m = 1; m <= Face::all(t.rank).mask(); ++m) {
      const auto sys = build_system(q, n, Face(m));
      if (sys.unknowns.size() > 4) continue;
      bool touched = false;
      const auto expected = oracle::integer_points_in_box(sys, box, touched);
      ASSERT_FALSE(touched) << "box too small for " << name << " " << Face(m).label();
      auto got = integer_enumerate(sys);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected) << name << " " << Face(m).label();
    }
  }
}

TEST(IntegerEnumerate, PointsAreSoundAndBelowLp) {
  for (const auto& [name, n] : kSmallCases) {
    const auto t = DynkinType::parse(name);
    for (std::uint32_t m = 1; m <= Face::all(t.rank).mask(); ++m) {
      const auto sys = build_system(t, n, Face(m));
      std::vector<Rational> lp;
      for (Vertex v : sys.unknowns) lp.push_back(lp_max(sys, v));
      for (const auto& p : integer_enumerate(sys)) {
        EXPECT_TRUE(sys.satisfied_by(p));
        for (std::size_t k = 0; k < p.size(); ++k) EXPECT_LE(Rational(p[k]), lp[k]);
      }
    }
  }
}

TEST(VerifyBound, A1J1) {
  for (long n = 1; n <= 3; ++n) {
    const auto r = verify_bound(DynkinType::parse("A1"), n, Face::parse("1"));
    EXPECT_TRUE(r.verified());
    EXPECT_EQ(r.integer_max, (std::vector<long>{n}));
    EXPECT_EQ(r.lp_max, (std::vector<Rational>{Rational(2 * n + 1, 2)}));
    EXPECT_EQ(r.point_count, static_cast<std::size_t>(n + 1));
  }
}

TEST(VerifyBound, IntegerMaxAttainsNDelta) {
  for (const auto& [name, n] : kSmallCases) {
    const auto t = DynkinType::parse(name);
    const auto q = build_framed_quiver(t);
    for (const auto& r : verify_all(t, n)) {
      EXPECT_TRUE(r.verified()) << name << " " << r.J.label();
      for (std::size_t k = 0; k < r.unknowns.size(); ++k) {
        EXPECT_EQ(r.integer_max[k], n * q.delta(r.unknowns[k]));
        EXPECT_GE(r.lp_max[k], Rational(r.integer_max[k]));
      }
    }
  }
}

TEST(VerifyAll, CountsAndSummary) {
  const auto reports = verify_all(DynkinType::parse("D4"), 1, 2);
  EXPECT_EQ(reports.size(), 31u);
  EXPECT_EQ(summary_line(reports), "verified 31/31");
  for (std::size_t k = 0; k < reports.size(); ++k) EXPECT_EQ(reports[k].J.mask(), k + 1);
}

TEST(VerifyAll, DeterministicAcrossWorkerCounts) {
  const auto t = DynkinType::parse("E6");
  const auto one = verify_all(t, 1, 1);
  const auto four = verify_all(t, 1, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    EXPECT_EQ(one[k].J, four[k].J);
    EXPECT_EQ(one[k].integer_max, four[k].integer_max);
    EXPECT_EQ(one[k].lp_max, four[k].lp_max);
    EXPECT_EQ(one[k].point_count, four[k].point_count);
  }
}
