#include <gtest/gtest.h>

#include "curves/errors.hpp"
#include "curves/geodesic.hpp"
#include "curves/oracle.hpp"
#include "gen.hpp"

#include <complex>
#include <set>

using namespace curves;

namespace {

CyclicWord cw(const char* s) { return CyclicWord::parse(s); }

Real abs_trace(const Mat2& m) { return abs(m.trace()); }

bool disjoint(const HalfDisk& x, const HalfDisk& y) { return abs(x.center - y.center) > x.radius + y.radius; }

}  // namespace

TEST(Realize, AnnulusIsDiagonal) {
  const IsometryRep rep = realize(build_surface("annulus"), 2.0);
  const Mat2& m = rep.matrix(Letter{0, 1});
  EXPECT_EQ(m.b, 0);
  EXPECT_EQ(m.c, 0);
  EXPECT_GT(abs_trace(m), 2);
}

TEST(Realize, PingPongDisksAreDisjoint) {
  for (const char* name : {"pants", "torus1", "fatgraph:order=a+,b+,c+,a-,b-,c-"}) {
    const SurfaceSpec s = build_surface(name);
    const IsometryRep rep = realize(s, 2.0);
    std::vector<HalfDisk> disks;
    for (const Dart& d : s.vertex_order()) disks.push_back(rep.disk(d));
    for (std::size_t i = 0; i < disks.size(); ++i) {
      for (std::size_t j = i + 1; j < disks.size(); ++j) EXPECT_TRUE(disjoint(disks[i], disks[j])) << name;
    }
  }
}

TEST(Realize, GeneratorsMapDisksAndAreHyperbolic) {
  const SurfaceSpec s = build_surface("torus1");
  const IsometryRep rep = realize(s, 2.0);
  for (int g : s.generators()) {
    const Mat2& m = rep.matrix(Letter{g, 1});
    EXPECT_NEAR(static_cast<double>(m.a * m.d - m.b * m.c), 1.0, 1e-30);
    EXPECT_GT(abs_trace(m), 2);
    // the top of D(x-) maps onto the boundary circle of D(x+)
    const HalfDisk minus = rep.disk({g, -1});
    const HalfDisk plus = rep.disk({g, 1});
    using C = std::complex<Real>;
    const C z(minus.center, minus.radius);
    const C w = (C(m.a) * z + C(m.b)) / (C(m.c) * z + C(m.d));
    EXPECT_LT(abs(abs(w - C(plus.center)) - plus.radius), Real("1e-40"));
  }
  const Mat2 commutator = rep.matrix(Word::parse("abAB"));
  EXPECT_GT(abs_trace(commutator), 2);
}

TEST(Realize, Errors) {
  EXPECT_THROW(realize(build_surface("moebius")), AdmissibilityError);
  EXPECT_THROW(realize(build_surface("fatgraph:order=a+,a-,b+,b-;twists=b")), AdmissibilityError);
  EXPECT_THROW(realize(build_surface("rp2")), AdmissibilityError);
  EXPECT_THROW(realize(build_surface("pants"), 1.0), PreconditionError);
}

TEST(NumericCounts, Examples) {
  const IsometryRep annulus = realize(build_surface("annulus"));
  EXPECT_EQ(count_self_numeric(annulus, cw("a")), 0);

  for (double lambda : {2.0, 3.0, 5.0}) {
    const IsometryRep pants = realize(build_surface("pants"), lambda);
    EXPECT_EQ(count_self_numeric(pants, cw("aB")), 1);
    EXPECT_EQ(count_self_numeric(pants, cw("aaB")), 2) << lambda;
    EXPECT_EQ(count_pair_numeric(pants, cw("a"), cw("b")), 0);
  }
  const IsometryRep torus = realize(build_surface("torus1"));
  EXPECT_EQ(count_pair_numeric(torus, cw("a"), cw("b")), 1);
  EXPECT_EQ(count_self_numeric(torus, cw("abAB")), 0);

  const IsometryRep pants = realize(build_surface("pants"));
  EXPECT_THROW(count_pair_numeric(pants, cw("aB"), cw("bAbA")), PreconditionError);
  EXPECT_THROW(count_self_numeric(pants, cw("aBaB")), PreconditionError);
  EXPECT_THROW(count_self_numeric(pants, cw("")), PreconditionError);
}

TEST(AxisOf, FixedPoints) {
  Mat2 m;
  m.a = 4;
  m.d = Real(1) / 4;
  // one fixed point of a diagonal matrix is at infinity
  EXPECT_THROW(axis_of(m), NumericError);
  Mat2 h;
  h.a = 2;
  h.b = 1;
  h.c = 1;
  h.d = 1;
  const Axis ah = axis_of(h);
  for (const Real& x : {ah.attracting, ah.repelling}) {
    EXPECT_LT(abs(h.c * x * x + (h.d - h.a) * x - h.b), Real("1e-45"));
  }
  EXPECT_GT(ah.attracting, ah.repelling);
}

TEST(OracleProperty, AgreesWithCounterOnAllShortWords) {
  for (const char* name : {"annulus", "pants", "torus1"}) {
    const OracleCheckSummary sum = run_oracle_check(build_surface(name), 6, 100);
    EXPECT_TRUE(sum.mismatches.empty()) << name << ": " << (sum.mismatches.empty() ? "" : sum.mismatches[0]);
    EXPECT_GT(sum.self_checked, 0);
  }
}

TEST(OracleProperty, RandomOrientableFatgraphs) {
  for (int t = 0; t < 30; ++t) {
    const SurfaceSpec s = gen::fatgraph(static_cast<int>(gen::uniform(2, 3)), false);
    const IsometryRep rep = realize(s, 3.0);
    for (int i = 0; i < 10; ++i) {
      const CyclicWord c = gen::primitive(s.rank(), 7);
      EXPECT_EQ(count_self_numeric(rep, c), self_intersection_geom(s, c)) << c.str();
      const CyclicWord d = gen::cyclic(s.rank(), 6);
      if (share_root(c, d)) continue;
      EXPECT_EQ(count_pair_numeric(rep, c, d), pair_intersection_geom(s, c, d)) << c.str() << " " << d.str();
    }
  }
}

TEST(EnumerateCyclicWords, MatchesBruteForce) {
  std::set<CyclicWord> expected;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer) {
      for (char ch : std::string("abAB")) next.push_back(w + ch);
    }
    for (const std::string& w : next) {
      const CyclicWord c = CyclicWord::parse(w);
      if (c.size() == static_cast<std::size_t>(len)) expected.insert(c);
    }
    layer = std::move(next);
  }
  const auto words = enumerate_cyclic_words({0, 1}, 4);
  EXPECT_EQ(std::set<CyclicWord>(words.begin(), words.end()), expected);
  EXPECT_EQ(words.size(), expected.size());
}
