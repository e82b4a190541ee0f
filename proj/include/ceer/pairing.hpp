#pragma once

// Bijections ℕ² ↔ ℕ⁺ used to sweep pairs, and the 2-adic projections.

#include <cstdint>

#include "ceer/types.hpp"

namespace ceer {

enum class Sweep { Cantor, Dyadic };

/// c = 2^m (2n+1)  ↦  (m, n). Throws SpecError for c = 0.
NodePair dyadic_unpair(Index c);
/// (m, n) ↦ 2^m (2n+1); throws SpecError if the result overflows 64 bits.
Index dyadic_pair(Nat m, Nat n);

/// Cantor pairing shifted to ℕ⁺: (x, y) ↦ (x+y)(x+y+1)/2 + y + 1.
Index cantor_pair(Nat x, Nat y);
/// Inverse of cantor_pair. Throws SpecError for c = 0.
NodePair cantor_unpair(Index c);

NodePair sweep_unpair(Sweep s, Index c);
const char* to_string(Sweep s);

/// max { m | 2^m divides k }. Throws SpecError for k = 0.
Nat proj_exp(Index k);
/// ((k / 2^proj_exp(k)) - 1) / 2. Throws SpecError for k = 0.
Nat proj_odd(Index k);
BigNat proj_exp(const BigNat& k);
BigNat proj_odd(const BigNat& k);

}  // namespace ceer
