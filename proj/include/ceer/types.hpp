#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace ceer {

/// Elements of the universe ℕ.
using Nat = std::uint64_t;
/// Positions in an enumeration (always >= 1 when used as an argument).
using Index = std::uint64_t;

/// Arbitrary-precision naturals for codes, bounds and merged indices.
using BigNat = boost::multiprecision::cpp_int;

struct NodePair {
  Nat first = 0;
  Nat second = 0;

  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// (i,j)⁻¹ = (j,i)
constexpr NodePair inverse(NodePair p) noexcept { return {p.second, p.first}; }

inline std::ostream& operator<<(std::ostream& os, const NodePair& p) {
  return os << '(' << p.first << ',' << p.second << ')';
}

}  // namespace ceer
