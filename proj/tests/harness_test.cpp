#include <gtest/gtest.h>

#include "ceer/errors.hpp"
#include "ceer/harness.hpp"

using namespace ceer;

namespace {

WindowConfig small(Nat n, std::uint64_t fuel = 100'000) {
  WindowConfig w;
  w.n = n;
  w.fuel = fuel;
  return w;
}

std::size_t count_prefix(const VerificationReport& r, const std::string& prefix, Status s) {
  std::size_t k = 0;
  for (const auto& c : r.checks())
    if (c.name.rfind(prefix, 0) == 0 && c.status == s) ++k;
  return k;
}

}  // namespace

TEST(Report, FailuresNeedCounterexamples) {
  VerificationReport r;
  EXPECT_THROW(r.add({"x", Status::Fail, "no witness", std::nullopt, 0}), CeerError);
  r.add({"b", Status::Fail, "bad pair", NodePair{1, 2}, 3});
  r.add({"a", Status::Pass, "", std::nullopt, 1});
  r.add({"c", Status::Inconclusive, "fuel", std::nullopt, 9});
  r.canonicalize();
  EXPECT_EQ(r.checks().front().name, "a");
  EXPECT_EQ(r.count(Status::Pass), 1u);
  EXPECT_TRUE(r.any_fail());
  ASSERT_NE(r.find("b"), nullptr);
  EXPECT_EQ(r.find("zz"), nullptr);

  const auto j = r.to_json(small(4));
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_EQ(j["summary"]["inconclusive"], 1);
  EXPECT_EQ(j["checks"][1]["counterexample"], nlohmann::json::array({1, 2}));
  EXPECT_TRUE(j["checks"][0]["counterexample"].is_null());
  EXPECT_EQ(j["config"]["window"], 4);
}

TEST(Report, WindowValidation) {
  EXPECT_THROW(small(0).validate(), SpecError);
  EXPECT_THROW(small(3, 0).validate(), SpecError);
  EXPECT_NO_THROW(small(3).validate());
}

TEST(Harness, CodingChecksPassOrStayInconclusive) {
  const auto ok = verify_coding("mod2", enumerator(RelationSpec::parse_text("mod:2")), 100, 100'000);
  EXPECT_GT(ok.count(Status::Pass), 0u);
  EXPECT_EQ(ok.count(Status::Fail), 0u);
  EXPECT_EQ(ok.count(Status::Inconclusive), 0u);

  // No coding exists for the identity: inconclusive, never a failure.
  const auto id = RelationSpec::parse_text(R"({"kind":"partition","classes":[],"modulus":0})");
  const auto none = verify_coding("id", enumerator(id), 10, 2000);
  EXPECT_EQ(none.count(Status::Fail), 0u);
  EXPECT_GT(none.count(Status::Inconclusive), 0u);
}

TEST(Harness, CompositionHoldsOnBuiltins) {
  for (const auto& spec : builtin_ic_relations()) {
    DerivedContext ctx{CodingTable(enumerator(spec))};
    const auto r = verify_composition(spec.name(), ground_truth(spec), ctx, small(15));
    EXPECT_EQ(r.count(Status::Fail), 0u) << r.to_text();
    EXPECT_EQ(r.count(Status::Inconclusive), 0u) << r.to_text();
  }
}

TEST(Harness, CompositionAgainstAWrongRelationFails) {
  // Coding of mod 2 checked against mod 4: some composite lands outside.
  DerivedContext ctx{CodingTable(enumerator(RelationSpec::parse_text("mod:2")))};
  const auto r = verify_composition("wrong", ground_truth(RelationSpec::parse_text("mod:4")), ctx, small(12));
  ASSERT_TRUE(r.any_fail());
  for (const auto& c : r.checks())
    if (c.status == Status::Fail) {
      ASSERT_TRUE(c.counterexample.has_value());
      const auto [i, j] = *c.counterexample;
      EXPECT_EQ(i % 2, j % 2);
      EXPECT_NE(i % 4, j % 4);
    }
}

TEST(Harness, WalkShapeOnBuiltins) {
  for (const auto& spec : builtin_ic_relations()) {
    DerivedContext ctx{CodingTable(enumerator(spec))};
    const auto r = verify_walk_shape(spec.name(), ctx, small(20), 60);
    EXPECT_FALSE(r.any_fail()) << r.to_text();
  }
}

TEST(Harness, JoinGeneratorsOnSmallWindow) {
  const auto spec = RelationSpec::parse_text("mod:3");
  const auto r = verify_join_generators(spec.name(), ground_truth(spec),
                                        MergedCoding(fair_enumeration(enumerator(spec)), 100'000), small(12), 40);
  EXPECT_FALSE(r.any_fail()) << r.to_text();
  for (const auto* n : {"mod3/FG/F-equivalence", "mod3/FG/G-equivalence", "mod3/FG/F-within-E", "mod3/FG/G-within-E",
                        "mod3/FG/join-within-E", "mod3/FG/J-field"}) {
    ASSERT_NE(r.find(n), nullptr) << n;
    EXPECT_EQ(r.find(n)->status, Status::Pass) << n;
  }
}

TEST(Harness, ReflexiveClosureAndPairClasses) {
  const auto rc = verify_reflexive_closure(small(5));
  EXPECT_EQ(rc.count(Status::Fail), 0u) << rc.to_text();
  EXPECT_EQ(rc.count(Status::Inconclusive), 0u);
  const auto pc = verify_pair_classes([](Nat n) { return n == 3; }, small(12));
  EXPECT_EQ(pc.count(Status::Fail), 0u) << pc.to_text();
}

TEST(Harness, PowerJoinReduction) {
  const auto eta = InjectiveStream::from_list({2, 3, 7});
  const auto r = verify_power_join(eta, [](Nat n) { return n == 2 || n == 3 || n == 7; }, small(250));
  EXPECT_EQ(r.count(Status::Fail), 0u) << r.to_text();
  EXPECT_EQ(count_prefix(r, "power-join(2,3,7)/", Status::Pass), r.checks().size());
}

TEST(Harness, RunsAreReproducible) {
  const auto w = small(8);
  const auto a = verify_relation(RelationSpec::parse_text("mod:2"), w).to_json(w).dump();
  const auto b = verify_relation(RelationSpec::parse_text("mod:2"), w).to_json(w).dump();
  EXPECT_EQ(a, b);
  const auto fc = verify_relation(RelationSpec::parse_text(R"({"kind":"partition","classes":[[0,1]],"modulus":0})"),
                                  small(8, 2000));
  EXPECT_EQ(fc.count(Status::Fail), 0u) << fc.to_text();
}
