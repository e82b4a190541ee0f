#pragma once

// Codings χ of an enumeration ν and the merged double coding (ξ, ζ).
//
// A coding reindexes ν so that π = ν∘χ keeps the first component of ν(n),
// has first component below second, and has strictly increasing second
// components. Those monotonicities turn every search in the derived
// relations into a bounded one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ceer/enumerator.hpp"
#include "ceer/errors.hpp"
#include "ceer/types.hpp"

namespace ceer {

/// Default ν-query budget for a single extension step.
inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// ν′(2^m (2n+1)) = ν(n+1): same image, every pair hit infinitely often.
Enumerator fair_enumeration(const Enumerator& nu);

class CodingTable {
 public:
  explicit CodingTable(Enumerator nu, std::uint64_t fuel = kDefaultFuel);

  /// A table over a caller-supplied χ prefix (π is computed from ν); no
  /// validity check is made, see check_coding_conditions.
  static CodingTable from_prefix(Enumerator nu, std::vector<Index> chi,
                                 std::uint64_t fuel = kDefaultFuel);

  const Enumerator& nu() const noexcept { return nu_; }
  std::uint64_t fuel() const noexcept { return fuel_; }
  std::size_t filled() const noexcept { return chi_.size(); }

  /// 1-based accessors; throw std::out_of_range past filled().
  Index chi(std::size_t n) const { return chi_.at(n - 1); }
  NodePair pi(std::size_t n) const { return pi_.at(n - 1); }
  std::span<const Index> chi_values() const noexcept { return chi_; }
  std::span<const NodePair> pi_values() const noexcept { return pi_; }

  /// Total ν-queries spent extending this table.
  std::uint64_t queries() const noexcept { return queries_; }

  /// Fill through n with the minimal witnesses of the recursive definition.
  /// Throws FuelExhausted; the table keeps whatever was filled before, and
  /// later requests past the failed step rethrow without searching again.
  void extend_to(std::size_t n);

 private:
  Enumerator nu_;
  std::uint64_t fuel_;
  std::vector<Index> chi_;
  std::vector<NodePair> pi_;
  std::uint64_t queries_ = 0;
  std::optional<FuelExhausted> exhausted_;
};

CodingTable extend_coding(CodingTable t, std::size_t n);

struct ConditionResult {
  std::string name;
  bool passed = true;
  /// 1-based position of the first violation, 0 if none.
  std::size_t first_violation = 0;
  std::string detail;
};

struct CodingReport {
  std::vector<ConditionResult> conditions;

  bool all_passed() const;
  const ConditionResult& at(const std::string& name) const;
};

/// Every clause of the coding definition over the filled prefix, plus the
/// derived monotonicities (n < χ(n), n < proj2 π(n), proj2 π increasing) and
/// the class-witness chains k, χ(k), χ²(k), ... for ν(k) diagonal, as far as
/// they stay inside the prefix.
CodingReport check_coding_conditions(const CodingTable& t);

/// proj2 π(χⁿ(k)) for n = 0.. while χⁿ(k) stays within max_len, where k is
/// the first index with ν(k) = (i,i) (found within fuel). Extends t as needed.
/// Returns the chain; throws FuelExhausted if k cannot be found.
std::vector<Nat> class_witness_chain(CodingTable& t, Nat i, std::size_t depth, std::size_t max_len);

/// Two interleaved codings ξ < ζ < ξ(next) of one fair enumeration, merged
/// as μ(n) = 2^ξ(n) (2ζ(n)+1).
class MergedCoding {
 public:
  explicit MergedCoding(Enumerator nu, std::uint64_t fuel = kDefaultFuel);

  const Enumerator& nu() const noexcept { return nu_; }
  std::uint64_t fuel() const noexcept { return fuel_; }
  std::size_t filled() const noexcept { return xi_.size(); }

  Index xi(std::size_t n) const { return xi_.at(n - 1); }
  Index zeta(std::size_t n) const { return zeta_.at(n - 1); }
  NodePair pi_xi(std::size_t n) const { return pi_xi_.at(n - 1); }
  NodePair pi_zeta(std::size_t n) const { return pi_zeta_.at(n - 1); }
  BigNat mu(std::size_t n) const;

  std::span<const Index> xi_values() const noexcept { return xi_; }
  std::span<const Index> zeta_values() const noexcept { return zeta_; }

  std::uint64_t queries() const noexcept { return queries_; }

  void extend_to(std::size_t n);

  CodingTable xi_table() const;
  CodingTable zeta_table() const;

 private:
  Enumerator nu_;
  std::uint64_t fuel_;
  std::vector<Index> xi_;
  std::vector<Index> zeta_;
  std::vector<NodePair> pi_xi_;
  std::vector<NodePair> pi_zeta_;
  std::uint64_t queries_ = 0;
  std::optional<FuelExhausted> exhausted_;
  std::vector<NodePair> scratch_;
};

MergedCoding extend_merged(MergedCoding m, std::size_t n);

/// Both component codings checked as codings, plus ξ(n) < ζ(n) < ξ(n+1),
/// proj2 πξ(n) < proj2 πζ(n), and μ(n) recovering (ξ(n), ζ(n)).
CodingReport check_merged_conditions(const MergedCoding& m);

nlohmann::json to_json(const CodingTable& t);
nlohmann::json to_json(const MergedCoding& m);

}  // namespace ceer
