#pragma once

// Exact relation algebra on a finite window [0, bound]².

#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "ceer/types.hpp"

namespace ceer {

inline constexpr Nat kDefaultWindow = 64;

class FiniteRelation {
 public:
  explicit FiniteRelation(Nat bound) : bound_(bound) {}
  FiniteRelation(Nat bound, std::initializer_list<NodePair> pairs);
  FiniteRelation(Nat bound, const std::vector<NodePair>& pairs);

  /// {(i,j) ∈ [0,bound]² | pred(i,j)}
  static FiniteRelation from_predicate(Nat bound, const std::function<bool(Nat, Nat)>& pred);
  static FiniteRelation identity(Nat bound);
  static FiniteRelation full(Nat bound);

  Nat bound() const noexcept { return bound_; }
  const std::set<NodePair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool contains(Nat i, Nat j) const { return pairs_.contains({i, j}); }
  bool contains(NodePair p) const { return pairs_.contains(p); }

  /// Throws SpecError if a component exceeds the bound.
  void insert(Nat i, Nat j);
  void insert(NodePair p) { insert(p.first, p.second); }

  bool includes(const FiniteRelation& other) const;

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  Nat bound_;
  std::set<NodePair> pairs_;
};

/// {(i,k) | ∃j (i,j) ∈ a ∧ (j,k) ∈ b}. Throws SpecError on bound mismatch.
FiniteRelation compose(const FiniteRelation& a, const FiniteRelation& b);
FiniteRelation converse(const FiniteRelation& a);
FiniteRelation unite(const FiniteRelation& a, const FiniteRelation& b);
FiniteRelation intersect(const FiniteRelation& a, const FiniteRelation& b);

/// ⋃ aⁿ, by iterating composition until nothing new appears.
FiniteRelation transitive_closure_bf(const FiniteRelation& a);

/// tc(a ∪ b). Both inputs must be equivalence relations on [0, bound];
/// anything else raises SpecError.
FiniteRelation lattice_join(const FiniteRelation& a, const FiniteRelation& b);

bool is_reflexive_on(const FiniteRelation& a, const std::vector<Nat>& domain);
bool is_symmetric(const FiniteRelation& a);
bool is_transitive(const FiniteRelation& a);
bool is_equivalence(const FiniteRelation& a, const std::vector<Nat>& domain);
/// Domain defaults to the whole window [0, bound].
bool is_equivalence(const FiniteRelation& a);

/// {i | ∃j (i,j) ∈ a ∪ a⁻¹}, sorted.
std::vector<Nat> field(const FiniteRelation& a);
/// {i | (i,i) ∈ a}; equals field(a) whenever a is symmetric and transitive.
std::vector<Nat> field_via_diagonal(const FiniteRelation& a);

/// [i]_a = {j | (i,j) ∈ a}; empty when i is outside the field.
std::vector<Nat> class_of(const FiniteRelation& a, Nat i);

struct Partition {
  /// Each block sorted; blocks ordered by least element.
  std::vector<std::vector<Nat>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Classes of a symmetric, transitive relation over its field.
Partition classes(const FiniteRelation& a);

std::vector<Nat> window_nodes(Nat bound);

nlohmann::json to_json(const FiniteRelation& a);
FiniteRelation relation_from_json(const nlohmann::json& j);
std::string to_dot(const FiniteRelation& a, const std::string& name = "R");

}  // namespace ceer
