#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "ceer/enumerator.hpp"
#include "ceer/errors.hpp"
#include "ceer/pairing.hpp"
#include "ceer/relation.hpp"
#include "test_support.hpp"

using namespace ceer;

namespace {

FiniteRelation rel(Nat bound, std::initializer_list<NodePair> ps) { return FiniteRelation(bound, ps); }

// Reference closure by Warshall's algorithm, independent of the library's fixpoint loop.
FiniteRelation warshall(const FiniteRelation& a) {
  const Nat n = a.bound() + 1;
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const auto& [i, j] : a.pairs()) m[i][j] = 1;
  for (Nat k = 0; k < n; ++k)
    for (Nat i = 0; i < n; ++i)
      if (m[i][k])
        for (Nat j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = 1;
  return FiniteRelation::from_predicate(a.bound(), [&](Nat i, Nat j) { return m[i][j] != 0; });
}

}  // namespace

TEST(Compose, Examples) {
  EXPECT_EQ(compose(rel(9, {{0, 1}}), rel(9, {{1, 2}})), rel(9, {{0, 2}}));
  EXPECT_TRUE(compose(rel(9, {{0, 1}, {3, 4}}), FiniteRelation(9)).empty());
  EXPECT_EQ(compose(rel(9, {{0, 2}, {0, 7}}), rel(9, {{2, 2}, {7, 3}})), rel(9, {{0, 2}, {0, 3}}));
}

TEST(Compose, RejectsMismatchedWindows) {
  EXPECT_THROW(compose(FiniteRelation(3), FiniteRelation(4)), SpecError);
  EXPECT_THROW(unite(FiniteRelation(3), FiniteRelation(4)), SpecError);
}

TEST(Converse, Examples) {
  EXPECT_EQ(converse(rel(9, {{0, 2}})), rel(9, {{2, 0}}));
  EXPECT_EQ(converse(rel(9, {{1, 3}, {3, 7}})), rel(9, {{3, 1}, {7, 3}}));
  const auto sym = rel(9, {{1, 4}, {4, 1}, {2, 2}});
  EXPECT_EQ(converse(sym), sym);
}

TEST(RelationAlgebra, CompositionAndConverseLawsOnRandomRelations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Nat bound = rng() % 13;
    const auto a = gen::random_relation(rng, bound), b = gen::random_relation(rng, bound),
               c = gen::random_relation(rng, bound);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(converse(converse(a)), a);
    ASSERT_EQ(converse(compose(a, b)), compose(converse(b), converse(a)));
    ASSERT_EQ(compose(a, unite(b, c)), unite(compose(a, b), compose(a, c)));
  }
}

TEST(TransitiveClosure, Examples) {
  EXPECT_EQ(transitive_closure_bf(rel(9, {{0, 1}, {1, 2}})), rel(9, {{0, 1}, {1, 2}, {0, 2}}));
  const auto order = rel(5, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(transitive_closure_bf(order), order);
  const auto chain = transitive_closure_bf(rel(5, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(chain.size(), 6u);
}

TEST(TransitiveClosure, LeastTransitiveSupersetOnRandomRelations) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Nat bound = rng() % 9;
    const auto a = gen::random_relation(rng, bound, 6);
    const auto tc = transitive_closure_bf(a);
    ASSERT_TRUE(tc.includes(a));
    ASSERT_TRUE(is_transitive(tc));
    ASSERT_EQ(tc, warshall(a));
    // Dropping any added pair leaves a relation that is not a transitive superset of a.
    for (const auto& p : tc.pairs()) {
      if (a.contains(p)) continue;
      FiniteRelation smaller(bound);
      for (const auto& q : tc.pairs())
        if (q != p) smaller.insert(q);
      ASSERT_FALSE(is_transitive(smaller)) << "pair " << p << " was not needed";
    }
  }
}

TEST(TransitiveClosure, ReflexiveSubrelationsOfPairClassRelationsAreClosed) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Nat bound = 1 + rng() % 9;
    // Classes of size <= 2: a random matching.
    std::vector<Nat> nodes = window_nodes(bound);
    for (std::size_t k = nodes.size(); k > 1; --k) std::swap(nodes[k - 1], nodes[rng() % k]);
    FiniteRelation e = FiniteRelation::identity(bound);
    for (std::size_t k = 0; k + 1 < nodes.size(); k += 2)
      if (rng() % 2) {
        e.insert(nodes[k], nodes[k + 1]);
        e.insert(nodes[k + 1], nodes[k]);
      }
    FiniteRelation r = FiniteRelation::identity(bound);
    for (const auto& p : e.pairs())
      if (rng() % 2) r.insert(p);
    ASSERT_EQ(transitive_closure_bf(r), r);
  }
}

TEST(TransitiveClosure, ThreeElementClassBreaksClosure) {
  auto r = FiniteRelation::identity(3);
  r.insert(0, 1);
  r.insert(1, 2);
  EXPECT_NE(transitive_closure_bf(r), r);
}

TEST(LatticeJoin, Examples) {
  const auto I = FiniteRelation::identity(4);
  EXPECT_EQ(lattice_join(I, I), I);
  const auto a = FiniteRelation::from_predicate(2, [](Nat i, Nat j) { return i == j || (i < 2 && j < 2); });
  const auto b = FiniteRelation::from_predicate(2, [](Nat i, Nat j) { return i == j || (i > 0 && j > 0); });
  EXPECT_EQ(lattice_join(a, b), FiniteRelation::full(2));
}

TEST(LatticeJoin, RejectsNonEquivalences) {
  EXPECT_THROW(lattice_join(rel(3, {{0, 1}}), FiniteRelation::identity(3)), SpecError);
}

TEST(LatticeJoin, IsTheLeastEquivalenceAboveBoth) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Nat bound = rng() % 10;
    const auto a = gen::random_equivalence(rng, bound, 4), b = gen::random_equivalence(rng, bound, 4);
    const auto j = lattice_join(a, b);
    ASSERT_TRUE(is_equivalence(j));
    ASSERT_TRUE(j.includes(a));
    ASSERT_TRUE(j.includes(b));
    ASSERT_EQ(j, warshall(unite(a, b)));
  }
}

TEST(IsEquivalence, Examples) {
  EXPECT_TRUE(is_equivalence(FiniteRelation::identity(5), window_nodes(5)));
  auto r = FiniteRelation::identity(5);
  r.insert(0, 1);
  EXPECT_FALSE(is_equivalence(r, window_nodes(5)));
  const auto mod3 = FiniteRelation::from_predicate(9, [](Nat i, Nat j) { return i % 3 == j % 3; });
  EXPECT_TRUE(is_equivalence(mod3, window_nodes(9)));
}

TEST(Classes, Examples) {
  EXPECT_EQ(classes(FiniteRelation::identity(2)).blocks, (std::vector<std::vector<Nat>>{{0}, {1}, {2}}));
  EXPECT_EQ(classes(FiniteRelation::full(2)).blocks, (std::vector<std::vector<Nat>>{{0, 1, 2}}));
  auto pairs = FiniteRelation::identity(9);
  pairs.insert(6, 7);
  pairs.insert(7, 6);
  const auto blocks = classes(pairs).blocks;
  EXPECT_EQ(blocks.size(), 9u);
  EXPECT_NE(std::find(blocks.begin(), blocks.end(), std::vector<Nat>{6, 7}), blocks.end());
}

TEST(Field, Examples) {
  EXPECT_TRUE(field(FiniteRelation(5)).empty());
  const auto h = rel(5, {{1, 3}, {3, 1}, {1, 1}, {3, 3}});
  EXPECT_EQ(field(h), (std::vector<Nat>{1, 3}));
  EXPECT_EQ(field_via_diagonal(h), (std::vector<Nat>{1, 3}));
  EXPECT_EQ(field(rel(9, {{2, 9}, {9, 2}})), (std::vector<Nat>{2, 9}));
}

TEST(Field, UnionOfComplementaryPartialEquivalencesIsAnEquivalence) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Nat bound = 1 + rng() % 10;
    std::vector<char> side(bound + 1);
    for (auto& s : side) s = static_cast<char>(rng() % 2);
    const auto base = gen::random_equivalence(rng, bound, 3);
    const auto h = FiniteRelation::from_predicate(bound, [&](Nat i, Nat j) { return side[i] && side[j] && base.contains(i, j); });
    const auto k = FiniteRelation::from_predicate(bound, [&](Nat i, Nat j) { return !side[i] && !side[j] && base.contains(i, j); });
    ASSERT_EQ(field_via_diagonal(h), field(h));
    ASSERT_TRUE(is_equivalence(unite(h, k)));
  }
}

TEST(FiniteRelation, RejectsPairsOutsideTheWindow) {
  FiniteRelation r(3);
  EXPECT_THROW(r.insert(4, 0), SpecError);
}

TEST(FiniteRelation, JsonRoundTripAndSortedPairs) {
  const auto r = rel(7, {{3, 1}, {0, 2}, {0, 1}});
  const auto j = to_json(r);
  EXPECT_EQ(j.dump(), R"({"bound":7,"pairs":[[0,1],[0,2],[3,1]]})");
  EXPECT_EQ(relation_from_json(j), r);
  EXPECT_THROW(relation_from_json(nlohmann::json::parse(R"({"bound":2,"pairs":[[0,5]]})")), SpecError);
  EXPECT_THROW(relation_from_json(nlohmann::json::parse(R"({"pairs":[]})")), SpecError);
}

TEST(FiniteRelation, DotUsesUndirectedEdgesForSymmetricRelations) {
  const auto sym = rel(3, {{0, 1}, {1, 0}});
  const auto dot = to_dot(sym, "E");
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_EQ(dot.find("digraph"), std::string::npos);
  EXPECT_NE(to_dot(rel(3, {{0, 1}})).find("0 -> 1"), std::string::npos);
}

// ---- enumerations and walks ----

TEST(SignedEdges, TailAndHead) {
  const Enumerator nu([](Index k) { return k == 1 ? NodePair{0, 2} : NodePair{k, k + 1}; }, "toy");
  EXPECT_EQ(tau(SignedEdge(1), nu), 0u);
  EXPECT_EQ(eta(SignedEdge(1), nu), 2u);
  EXPECT_EQ(tau(SignedEdge(-1), nu), 2u);
  EXPECT_EQ(eta(SignedEdge(-1), nu), 0u);
  EXPECT_THROW(SignedEdge(0), SpecError);
  EXPECT_THROW(nu(0), SpecError);
}

TEST(Walks, Examples) {
  // mod 2 on the dyadic sweep: ν(c) = (m,n) if m ≡ n (mod 2), else (m,m).
  const Enumerator nu(
      [](Index c) {
        const auto p = dyadic_unpair(c);
        return p.first % 2 == p.second % 2 ? p : NodePair{p.first, p.first};
      },
      "mod2/dyadic");
  ASSERT_EQ(nu(5), (NodePair{0, 2}));
  ASSERT_EQ(nu(9), (NodePair{0, 4}));
  ASSERT_EQ(nu(1), (NodePair{0, 0}));
  // 2 -> 0 -> 4 -> 0 along ν(5) backwards, ν(9) forwards, ν(9) backwards.
  EXPECT_TRUE(is_walk(make_walk({5}), 0, 2, nu));
  EXPECT_TRUE(is_walk(make_walk({5, -5}), 0, 0, nu));
  EXPECT_TRUE(is_walk(make_walk({-5, 9, -9}), 2, 0, nu));
  EXPECT_FALSE(is_walk(make_walk({5, 9}), 0, 4, nu));
  EXPECT_FALSE(is_walk(Walk{}, 0, 0, nu));
  EXPECT_EQ(to_string(make_walk({-1, 3})), "(-1,3)");
}

TEST(Walks, ClosureMembershipMatchesWalkExistence) {
  // For a finite edge list, (i,j) ∈ tc(R ∪ R⁻¹) iff a walk over the edge
  // indices joins them; walks of length n land in the n-fold composition.
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const Nat bound = 2 + rng() % 6;
    std::vector<NodePair> edges;
    const std::size_t count = 1 + rng() % 6;
    for (std::size_t k = 0; k < count; ++k) edges.push_back({rng() % (bound + 1), rng() % (bound + 1)});
    const Enumerator nu([edges](Index k) { return edges[(k - 1) % edges.size()]; }, "edges");
    const FiniteRelation R(bound, edges);
    const auto sym = unite(R, converse(R));
    const auto tc = transitive_closure_bf(sym);
    // Enumerate all walks of length <= 4 over signed indices 1..count.
    std::set<NodePair> walkable;
    std::vector<std::int64_t> steps;
    std::vector<FiniteRelation> powers{sym};
    for (int n = 1; n < 4; ++n) powers.push_back(compose(powers.back(), sym));
    std::function<void()> rec = [&] {
      if (!steps.empty()) {
        Walk w;
        for (auto x : steps) w.emplace_back(x);
        const Nat i = tau(w.front(), nu), j = eta(w.back(), nu);
        if (is_walk(w, i, j, nu)) {
          walkable.insert({i, j});
          ASSERT_TRUE(powers[steps.size() - 1].contains(i, j));
        }
      }
      if (steps.size() == 4) return;
      for (std::int64_t x = -static_cast<std::int64_t>(count); x <= static_cast<std::int64_t>(count); ++x) {
        if (x == 0) continue;
        steps.push_back(x);
        rec();
        steps.pop_back();
      }
    };
    rec();
    for (const auto& p : tc.pairs()) {
      // Paths in a graph on <= 8 nodes may need up to 8 steps; only check
      // pairs whose shortest connection fits in 4 steps.
      bool short_path = false;
      for (const auto& pw : powers) short_path = short_path || pw.contains(p);
      if (short_path) ASSERT_TRUE(walkable.count(p)) << p;
    }
    for (const auto& p : walkable) ASSERT_TRUE(tc.contains(p));
  }
}
