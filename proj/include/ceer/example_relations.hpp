#pragma once

// Concrete equivalence relations with decidable ground truth, their
// enumerators, and the JSON relation-spec format used by the CLI.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ceer/enumerator.hpp"
#include "ceer/pairing.hpp"
#include "ceer/relation.hpp"
#include "ceer/types.hpp"

namespace ceer {

enum class ClassKind { IC, FC, Mixed };
const char* to_string(ClassKind k);

/// Decidable membership for an equivalence relation on ℕ.
struct GroundTruth {
  std::function<bool(Nat, Nat)> decide;
  ClassKind kind = ClassKind::IC;
  std::string label;

  bool operator()(Nat i, Nat j) const { return decide(i, j); }
};

/// A relation together with one enumeration of it.
struct ExampleRelation {
  GroundTruth truth;
  Enumerator nu;
};

/// i ~ j iff i ≡ j (mod k). The enumerator sweeps ℕ² with the given
/// pairing, emitting (m,n) when related and (m,m) otherwise.
ExampleRelation mod_relation(Nat k, Sweep sweep = Sweep::Cantor);

/// Sweeps ℕ² with the given pairing, emitting related pairs as they are and
/// replacing unrelated ones by (filler, filler).
Enumerator enumerator_from_decider(const GroundTruth& g, Nat filler = 0,
                                   Sweep sweep = Sweep::Cantor);

/// η: ℕ⁺ → ℕ without repetitions. A finite prefix models a finite set; η(n)
/// is nullopt past it.
class InjectiveStream {
 public:
  InjectiveStream(std::function<std::optional<Nat>(Index)> fn, std::string label);
  /// Throws SpecError on a repeated value.
  static InjectiveStream from_list(std::vector<Nat> values);

  std::optional<Nat> operator()(Index n) const { return fn_(n); }
  const std::string& label() const noexcept { return label_; }
  /// Distinctness of η(1..prefix).
  bool injective_on(Index prefix) const;
  /// True iff x = η(n) for some n <= limit.
  bool enumerates(Nat x, Index limit) const;

 private:
  std::function<std::optional<Nat>(Index)> fn_;
  std::string label_;
};

/// base^exp, or nullopt if it exceeds 64 bits.
std::optional<Nat> checked_pow(Nat base, Nat exp);

/// F: i = j or {i,j} = {2n, 3^η(n)};  G: i = j or {i,j} = {2n, 5^η(n)};
/// both with n <= max{i,j}.
std::pair<GroundTruth, GroundTruth> power_pair_relations(const InjectiveStream& eta);
/// The join F ∨ G: classes {2n, 3^η(n), 5^η(n)} and singletons.
GroundTruth power_join(const InjectiveStream& eta);

/// x = y, or min{x,y} even, min{x,y}/2 ∈ A and |y - x| = 1.
GroundTruth pair_class_relation(std::function<bool(Nat)> in_a, std::string label);

/// Listed classes, and every unlisted number grouped by its residue mod
/// `modulus` (modulus 0: unlisted numbers are singletons). Throws SpecError
/// on overlapping classes.
GroundTruth partition_spec_relation(const std::vector<std::vector<Nat>>& classes, Nat modulus);

FiniteRelation materialize(const GroundTruth& g, Nat window);

/// Parsed form of {"kind": "mod"|"partition"|"prop23"|"prop24", ...}.
struct RelationSpec {
  std::string kind;
  Nat k = 1;
  Sweep sweep = Sweep::Cantor;
  bool fair = false;
  std::vector<std::vector<Nat>> classes;
  Nat modulus = 1;
  std::vector<Nat> eta;
  std::string part = "join";
  std::vector<Nat> a;

  /// Throws SpecError on anything malformed.
  static RelationSpec parse(const nlohmann::json& j);
  /// Accepts JSON text or the shorthands "mod:K", "prop23:a,b,c", "prop24:a,b".
  static RelationSpec parse_text(const std::string& text);
  nlohmann::json to_json() const;
  std::string name() const;
};

GroundTruth ground_truth(const RelationSpec& spec);
/// The spec's enumerator, wrapped by fair_enumeration when spec.fair is set.
Enumerator enumerator(const RelationSpec& spec);

/// mod 1, mod 2, mod 3, mod 5 (Cantor sweep).
std::vector<RelationSpec> builtin_ic_relations();

}  // namespace ceer
