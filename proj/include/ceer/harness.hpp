#pragma once

// Windowed, fuel-bounded verification. A check either passes, fails with a
// concrete counterexample, or is inconclusive because a bounded search ran
// out; semi-decidable inclusions can be confirmed but never refuted.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ceer/coding.hpp"
#include "ceer/derived.hpp"
#include "ceer/example_relations.hpp"
#include "ceer/types.hpp"

namespace ceer {

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::optional<NodePair> counterexample;
  std::uint64_t queries = 0;
};

struct WindowConfig {
  Nat n = kDefaultWindow;
  std::uint64_t fuel = kDefaultFuel;
  std::vector<std::uint64_t> seeds = {1};

  /// Throws SpecError unless n >= 1 and fuel >= 1.
  void validate() const;
};

class VerificationReport {
 public:
  void add(Check c);
  void merge(const VerificationReport& other);
  /// Orders checks by name.
  void canonicalize();

  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::size_t count(Status s) const;
  bool any_fail() const { return count(Status::Fail) > 0; }
  const Check* find(const std::string& name) const;

  nlohmann::json to_json(const WindowConfig& config) const;
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

/// Every coding clause for a coding of `nu` extended to n entries.
VerificationReport verify_coding(const std::string& name, const Enumerator& nu, std::size_t n,
                                 std::uint64_t fuel);

/// E = R S R⁻¹: soundness of every composite witness found in the table,
/// and completeness on E ∩ [0,n]² by locating ν(m) = (i,j), ν(m') = (j,i).
VerificationReport verify_composition(const std::string& name, const GroundTruth& e, DerivedContext& ctx,
                                 const WindowConfig& w);

/// F = tc(R_ξ ∪ R_ξ⁻¹) and G = H ∪ J over a merged coding of a fair
/// enumeration of e: equivalence laws, F,G ⊆ E, F ∨ G ⊆ E, F G F
/// witnesses, interleaving, field(J) = window ∖ field(H), class growth.
VerificationReport verify_join_generators(const std::string& name, const GroundTruth& e, MergedCoding m,
                                    const WindowConfig& w, std::size_t interleave_entries = 100);

/// Minimal walks between sampled reachable pairs: negatives then positives,
/// length <= i + j, and agreement with an independent BFS.
VerificationReport verify_walk_shape(const std::string& name, DerivedContext& ctx,
                                        const WindowConfig& w, std::size_t samples = 100);

/// tc r = r for every reflexive r ⊆ e, e ranging over equivalence relations
/// on [0,5] whose classes have size <= 2; plus a size-3 tightness search.
VerificationReport verify_reflexive_closure(const WindowConfig& w);

/// Windowed join classes, the composition identities, and the reduction
/// n ∈ A ⟺ (3ⁿ, 5ⁿ) ∈ F ∨ G.
VerificationReport verify_power_join(const InjectiveStream& eta, const std::function<bool(Nat)>& in_a,
                                 const WindowConfig& w);

/// Reflexive symmetric r ⊆ E satisfy tc r = r, so tc r = E forces r = E.
VerificationReport verify_pair_classes(const std::function<bool(Nat)>& in_a, const WindowConfig& w);

/// Every check applicable to one relation spec.
VerificationReport verify_relation(const RelationSpec& spec, const WindowConfig& w);

/// All built-in relations.
VerificationReport run_all(const WindowConfig& w);

}  // namespace ceer
