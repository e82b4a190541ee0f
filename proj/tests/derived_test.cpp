#include <gtest/gtest.h>

#include <set>

#include "ceer/derived.hpp"
#include "ceer/errors.hpp"
#include "ceer/example_relations.hpp"
#include "ceer/pairing.hpp"
#include "oracles.hpp"

using namespace ceer;

namespace {

Enumerator full_dyadic() {
  return Enumerator([](Index c) { return dyadic_unpair(c); }, "full/dyadic");
}

}  // namespace

TEST(Derived, WorkedValuesOnTheFullRelation) {
  DerivedContext ctx{CodingTable(full_dyadic())};
  EXPECT_TRUE(ctx.in_R(0, 2));
  EXPECT_TRUE(ctx.in_R(1, 3));
  EXPECT_FALSE(ctx.in_R(2, 0));
  EXPECT_FALSE(ctx.in_R(0, 3));
  EXPECT_TRUE(ctx.in_S(2, 2));
  EXPECT_TRUE(ctx.in_S(3, 7));
  EXPECT_TRUE(ctx.in_S(7, 3));
  EXPECT_TRUE(ctx.in_T(2, 2));
  EXPECT_FALSE(ctx.in_T(3, 7));
  for (Nat j = 0; j <= 20; ++j) EXPECT_FALSE(ctx.in_S(0, j));
  EXPECT_TRUE(ctx.in_F(2, 7));
  EXPECT_FALSE(ctx.in_F(2, 3));
  EXPECT_EQ(to_string(ctx.minimal_walk(2, 7)), "(-1,3)");
  EXPECT_THROW(ctx.minimal_walk(2, 3), NoWalk);

  const auto d = ctx.decide(DerivedRel::F, 2, 7);
  EXPECT_TRUE(d.holds);
  EXPECT_EQ(d.certificate, "walk (-1,3)");
  EXPECT_FALSE(ctx.decide(DerivedRel::R, 2, 0).holds);
  EXPECT_THROW(ctx.in_J(0, 0), SpecError);
}

TEST(Derived, RelationNamesRoundTrip) {
  for (const auto* n : {"R", "S", "T", "H", "F", "J", "G"})
    EXPECT_STREQ(to_string(parse_derived_rel(n)), n);
  EXPECT_THROW(parse_derived_rel("X"), SpecError);
}

TEST(Derived, DecidersMatchEdgeListOracle) {
  constexpr Nat kN = 50;
  for (const auto& spec : builtin_ic_relations()) {
    const auto nu = enumerator(spec);
    const oracle::EdgeOracle oracle(nu, 3 * kN);
    const auto truth = ground_truth(spec);
    DerivedContext ctx{CodingTable(nu)};
    // Walk indices address π, not ν.
    const Enumerator over_pi([&ctx](Index m) { return ctx.pi(m); }, "pi");
    std::set<NodePair> r(oracle.pi.begin(), oracle.pi.end());
    for (Nat i = 0; i <= kN; ++i)
      for (Nat j = 0; j <= kN; ++j) {
        ASSERT_EQ(ctx.in_R(i, j), r.count({i, j}) > 0) << spec.name() << " R " << i << "," << j;
        ASSERT_EQ(ctx.in_S(i, j), oracle.s(i, j)) << spec.name() << " S " << i << "," << j;
        ASSERT_EQ(ctx.in_T(i, j), oracle.t(i, j)) << spec.name() << " T " << i << "," << j;
        const int dist = oracle.distance(i, j);
        ASSERT_EQ(ctx.in_F(i, j), i == j || dist >= 0) << spec.name() << " F " << i << "," << j;
        if (ctx.in_R(i, j) || ctx.in_S(i, j) || ctx.in_T(i, j) || ctx.in_F(i, j))
          ASSERT_TRUE(truth(i, j)) << spec.name() << " " << i << "," << j;
        if (i != j && dist > 0) {
          const Walk w = ctx.minimal_walk(i, j);
          ASSERT_TRUE(is_walk(w, i, j, over_pi)) << spec.name() << " " << i << "," << j << " " << to_string(w);
          ASSERT_EQ(static_cast<int>(w.size()), dist) << spec.name() << " " << i << "," << j;
        }
      }
  }
}

TEST(Derived, HIsSymmetricAndTransitive) {
  constexpr Nat kN = 40;
  for (auto spec : builtin_ic_relations()) {
    spec.fair = true;
    DerivedContext ctx{CodingTable(enumerator(spec))};
    std::vector<std::vector<bool>> h(kN + 1, std::vector<bool>(kN + 1));
    for (Nat i = 0; i <= kN; ++i)
      for (Nat j = 0; j <= kN; ++j) {
        h[i][j] = ctx.in_H(i, j);
        ASSERT_EQ(h[i][j], ctx.in_S(i, j) || ctx.in_T(i, j));
      }
    for (Nat i = 0; i <= kN; ++i)
      for (Nat j = 0; j <= kN; ++j) {
        ASSERT_EQ(h[i][j], h[j][i]) << spec.name();
        if (!h[i][j]) continue;
        for (Nat k = 0; k <= kN; ++k)
          if (h[j][k]) ASSERT_TRUE(h[i][k]) << spec.name() << " " << i << "," << j << "," << k;
      }
  }
}

TEST(Derived, FairEnumerationMakesTRelateDistinctTails) {
  auto spec = RelationSpec::parse_text("mod:1");
  spec.fair = true;
  DerivedContext ctx{CodingTable(enumerator(spec))};
  bool found = false;
  for (Nat i = 0; i <= 60 && !found; ++i)
    for (Nat j = 0; j <= 60 && !found; ++j) found = i != j && ctx.in_T(i, j);
  EXPECT_TRUE(found);
}

TEST(Derived, LiteralFormulaAgreesWithDecider) {
  DerivedContext ctx{CodingTable(full_dyadic())};
  for (Nat i = 0; i <= 4; ++i)
    for (Nat j = 0; i + j <= 4; ++j) EXPECT_EQ(ctx.in_F_formula(i, j), ctx.in_F(i, j)) << i << "," << j;
  EXPECT_THROW(ctx.in_F_formula(3, 2), ScaleExceeded);
}

TEST(Derived, TailDecidersStayInsideTheirBound) {
  for (const auto& spec : builtin_ic_relations()) {
    DerivedContext ctx{CodingTable(enumerator(spec))};
    ctx.ensure(200);
    for (Nat i = 0; i <= 30; ++i)
      for (Nat j = 0; j <= 30; ++j) {
        ctx.reset_stats();
        ctx.in_R(i, j);
        ctx.in_S(i, j);
        ctx.in_T(i, j);
        const auto& s = ctx.stats();
        ASSERT_LE(s.max_nu_index, std::max(i, j)) << spec.name() << " " << i << "," << j;
        ASSERT_LE(s.max_pi_index, std::max(i, j));
      }
  }
}

TEST(Derived, JoinComponentsOnMergedCodings) {
  constexpr Nat kN = 25;
  for (const auto* text : {"mod:2", "mod:3"}) {
    auto spec = RelationSpec::parse_text(text);
    spec.fair = true;
    const auto truth = ground_truth(spec);
    DerivedContext ctx{MergedCoding(enumerator(spec))};
    ASSERT_TRUE(ctx.has_merged());
    std::vector<std::vector<bool>> g(kN + 1, std::vector<bool>(kN + 1));
    for (Nat i = 0; i <= kN; ++i) {
      const bool hi = ctx.in_H(i, i);
      EXPECT_NE(ctx.in_J(i, i), hi) << text << " " << i;
      for (Nat j = 0; j <= kN; ++j) {
        const bool jij = ctx.in_J(i, j);
        if (hi) ASSERT_FALSE(jij);
        ASSERT_EQ(jij, ctx.in_J(j, i));
        g[i][j] = ctx.in_G(i, j);
        ASSERT_EQ(g[i][j], ctx.in_H(i, j) || jij);
        if (g[i][j]) ASSERT_TRUE(truth(i, j)) << text << " " << i << "," << j;
      }
    }
    for (Nat i = 0; i <= kN; ++i) {
      ASSERT_TRUE(g[i][i]);
      for (Nat j = 0; j <= kN; ++j) {
        ASSERT_EQ(g[i][j], g[j][i]);
        if (!g[i][j]) continue;
        for (Nat k = 0; k <= kN; ++k)
          if (g[j][k]) ASSERT_TRUE(g[i][k]);
      }
    }
  }
}

TEST(Derived, ReachIndexComponents) {
  ReachIndex r;
  r.absorb(1, {0, 2});
  r.absorb(2, {1, 3});
  r.absorb(3, {0, 7});
  r.set_cap(7);
  EXPECT_TRUE(r.connected(2, 7));
  EXPECT_FALSE(r.connected(2, 3));
  EXPECT_EQ(r.component_size(0, 7), 3u);
  EXPECT_EQ(r.component_size(0, 5), 2u);
  EXPECT_EQ(r.component_size(5, 7), 1u);
  EXPECT_EQ(r.cursor(), 3u);
}
