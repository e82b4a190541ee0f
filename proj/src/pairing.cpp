#include "ceer/pairing.hpp"

#include <bit>
#include <cmath>

#include "ceer/errors.hpp"

namespace ceer {

NodePair dyadic_unpair(Index c) {
  if (c == 0) throw SpecError("dyadic_unpair: 0 is not in ℕ⁺");
  const auto m = static_cast<Nat>(std::countr_zero(c));
  return {m, ((c >> m) - 1) / 2};
}

Index dyadic_pair(Nat m, Nat n) {
  if (n > (UINT64_MAX - 1) / 2) throw SpecError("dyadic_pair: overflow");
  const Index odd = 2 * n + 1;
  if (m >= 64 || (odd >> (63 - std::min<Nat>(m, 63))) > 1) throw SpecError("dyadic_pair: overflow");
  return odd << m;
}

Index cantor_pair(Nat x, Nat y) {
  const Nat s = x + y;
  return s * (s + 1) / 2 + y + 1;
}

NodePair cantor_unpair(Index c) {
  if (c == 0) throw SpecError("cantor_unpair: 0 is not in ℕ⁺");
  const Nat z = c - 1;
  // Largest w with w(w+1)/2 <= z.
  auto w = static_cast<Nat>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  const Nat y = z - w * (w + 1) / 2;
  return {w - y, y};
}

NodePair sweep_unpair(Sweep s, Index c) {
  return s == Sweep::Cantor ? cantor_unpair(c) : dyadic_unpair(c);
}

const char* to_string(Sweep s) { return s == Sweep::Cantor ? "cantor" : "dyadic"; }

Nat proj_exp(Index k) {
  if (k == 0) throw SpecError("proj_exp: 0 has no 2-adic valuation");
  return static_cast<Nat>(std::countr_zero(k));
}

Nat proj_odd(Index k) { return ((k >> proj_exp(k)) - 1) / 2; }

BigNat proj_exp(const BigNat& k) {
  if (k <= 0) throw SpecError("proj_exp: 0 has no 2-adic valuation");
  return BigNat(boost::multiprecision::lsb(k));
}

BigNat proj_odd(const BigNat& k) {
  if (k <= 0) throw SpecError("proj_odd: 0 has no 2-adic valuation");
  const auto e = boost::multiprecision::lsb(k);
  return ((k >> e) - 1) / 2;
}

}  // namespace ceer
