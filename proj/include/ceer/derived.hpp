#pragma once

// Deciders for the relations derived from a coding:
//   R = π(ℕ⁺)                      S, T: pairs of π-tails whose ν-preimages
//   H = S ∪ T                            are inverse (S) or equal (T)
//   F = tc(R ∪ R⁻¹)                J = (ℕ∖field H)² ∩ tc(R_ζ ∪ R_ζ⁻¹)
//   G = H ∪ J
// Every quantifier is bounded through the monotonicity of proj2 π.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ceer/coding.hpp"
#include "ceer/enumerator.hpp"
#include "ceer/types.hpp"

namespace ceer {

enum class DerivedRel { R, S, T, H, F, J, G };

/// "R", "S", ... ; throws SpecError otherwise.
DerivedRel parse_derived_rel(std::string_view name);
const char* to_string(DerivedRel rel);

/// Instrumentation for the bounded-quantifier discipline of the R/S/T
/// deciders. Table extension is accounted separately.
struct QueryStats {
  std::uint64_t nu_queries = 0;
  Index max_nu_index = 0;
  std::size_t max_pi_index = 0;
};

using Edge = std::pair<Index, NodePair>;

/// Union-find over the edges π(m) absorbed so far. Edges are absorbed in
/// increasing m, which is increasing proj2 π(m); after absorbing everything
/// up to cap, two nodes <= cap are connected iff tc(R ∪ R⁻¹) relates them.
class ReachIndex {
 public:
  Nat cap() const noexcept { return cap_; }
  /// Largest m absorbed.
  Index cursor() const noexcept { return static_cast<Index>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  void set_cap(Nat cap) { cap_ = cap; }
  void absorb(Index m, NodePair e);

  bool connected(Nat i, Nat j) const;
  /// Number of nodes <= limit in i's component (i itself included).
  std::size_t component_size(Nat i, Nat limit) const;

 private:
  Nat find(Nat x) const;
  void grow(Nat x);

  Nat cap_ = 0;
  std::vector<Edge> edges_;
  mutable std::vector<Nat> parent_;
  std::vector<std::uint32_t> rank_;
};

struct Decision {
  bool holds = false;
  std::string certificate;
};

class DerivedContext {
 public:
  explicit DerivedContext(CodingTable table);
  explicit DerivedContext(MergedCoding merged);

  bool has_merged() const noexcept;
  const Enumerator& nu() const;
  std::size_t filled() const;
  /// Queries spent by table extension.
  std::uint64_t extension_queries() const;
  nlohmann::json coding_json() const;

  const QueryStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = {}; }

  /// Fill the primary coding (or the merged pair) through n.
  void ensure(std::size_t n);
  /// π(n) for the primary coding (χ, or ξ when merged); extends as needed.
  NodePair pi(std::size_t n);
  /// πζ(n); needs a merged coding.
  NodePair pi_zeta(std::size_t n);

  bool in_R(Nat i, Nat j);
  bool in_S(Nat i, Nat j);
  bool in_T(Nat i, Nat j);
  bool in_H(Nat i, Nat j);
  bool in_F(Nat i, Nat j);
  /// tc(R_ζ ∪ R_ζ⁻¹); needs a merged coding.
  bool in_F_zeta(Nat i, Nat j);
  bool in_J(Nat i, Nat j);
  bool in_G(Nat i, Nat j);

  /// Literal bounded search over coded walks x <= β(max(i+j, 2)).
  /// Throws ScaleExceeded for i + j > 4.
  bool in_F_formula(Nat i, Nat j);

  /// A shortest walk from i to j over π. Throws NoWalk if none exists, and
  /// FuelExhausted if a diagonal witness cannot be located.
  Walk minimal_walk(Nat i, Nat j);

  Decision decide(DerivedRel rel, Nat i, Nat j);

  /// {(m, π(m)) | proj2 π(m) <= cap}, in increasing m.
  std::vector<Edge> admitted_edges(Nat cap);
  std::vector<Edge> admitted_zeta_edges(Nat cap);

  /// The primary reach index absorbed through cap.
  const ReachIndex& reach(Nat cap);
  const ReachIndex& reach_zeta(Nat cap);

 private:
  enum class Side { Primary, Zeta };

  NodePair pi_on(Side side, std::size_t n);
  NodePair nu_counted(Index k);
  /// The m < i with proj2 π(m) = i, if any.
  std::optional<std::size_t> tail_position(Side side, Nat i);
  void absorb_through(Side side, Nat cap);
  bool st_match(Nat i, Nat j, bool inverse_pairs, Index* m_out, Index* n_out);

  std::variant<CodingTable, MergedCoding> coding_;
  ReachIndex reach_;
  ReachIndex reach_zeta_;
  QueryStats stats_;
};

}  // namespace ceer
