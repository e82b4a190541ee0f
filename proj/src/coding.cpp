#include "ceer/coding.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ceer/errors.hpp"
#include "ceer/pairing.hpp"

namespace ceer {

Enumerator fair_enumeration(const Enumerator& nu) {
  return Enumerator([nu](Index c) { return nu(proj_odd(c) + 1); }, "fair(" + nu.label() + ")");
}

CodingTable::CodingTable(Enumerator nu, std::uint64_t fuel) : nu_(std::move(nu)), fuel_(fuel) {
  if (!nu_) throw SpecError("coding table needs an enumerator");
  if (fuel_ == 0) throw SpecError("fuel must be positive");
}

CodingTable CodingTable::from_prefix(Enumerator nu, std::vector<Index> chi, std::uint64_t fuel) {
  CodingTable t(std::move(nu), fuel);
  t.pi_.reserve(chi.size());
  for (Index k : chi) t.pi_.push_back(t.nu_(k));
  t.chi_ = std::move(chi);
  return t;
}

void CodingTable::extend_to(std::size_t n) {
  if (n <= chi_.size()) return;
  if (exhausted_) throw *exhausted_;
  chi_.reserve(n);
  pi_.reserve(n);
  while (chi_.size() < n) {
    const std::size_t step = chi_.size() + 1;
    const Nat head = nu_(step).first;
    ++queries_;
    const Nat floor = step == 1 ? std::max<Nat>(1, head) : std::max(head, pi_.back().second);
    const Index lo = step == 1 ? 2 : chi_.back() + 1;
    std::uint64_t spent = 0;
    for (Index k = lo;; ++k) {
      if (spent == fuel_) {
        std::ostringstream why;
        why << "no k in [" << lo << ", " << k - 1 << "] with proj1 nu(k) = " << head
            << " and proj2 nu(k) > " << floor;
        queries_ += spent;
        exhausted_.emplace(step, spent, why.str());
        throw *exhausted_;
      }
      const NodePair p = nu_(k);
      ++spent;
      if (p.first == head && p.second > floor) {
        chi_.push_back(k);
        pi_.push_back(p);
        break;
      }
    }
    queries_ += spent;
  }
}

CodingTable extend_coding(CodingTable t, std::size_t n) {
  t.extend_to(n);
  return t;
}

bool CodingReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

const ConditionResult& CodingReport::at(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw SpecError("no condition named " + name);
}

namespace {

template <class Pred>
ConditionResult scan_condition(std::string name, std::size_t from, std::size_t to, Pred ok) {
  ConditionResult r{std::move(name), true, 0, ""};
  for (std::size_t n = from; n <= to; ++n) {
    std::string why;
    if (!ok(n, why)) {
      r.passed = false;
      r.first_violation = n;
      r.detail = why;
      break;
    }
  }
  return r;
}

std::string pair_str(NodePair p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// The coding clauses on an arbitrary (chi, pi) prefix over nu.
std::vector<ConditionResult> coding_clauses(const Enumerator& nu, std::span<const Index> chi,
                                            std::span<const NodePair> pi, const std::string& prefix) {
  const std::size_t len = chi.size();
  std::vector<ConditionResult> out;
  auto P = [&](std::size_t n) { return pi[n - 1]; };
  auto C = [&](std::size_t n) { return chi[n - 1]; };
  out.push_back(scan_condition(prefix + "chi_basis", 1, std::min<std::size_t>(len, 1),
                               [&](std::size_t, std::string& why) {
                                 why = "chi(1) = " + std::to_string(C(1));
                                 return C(1) > 1;
                               }));
  out.push_back(scan_condition(prefix + "head_preserved", 1, len, [&](std::size_t n, std::string& why) {
    const Nat want = nu(n).first;
    why = "proj1 pi = " + std::to_string(P(n).first) + ", proj1 nu(n) = " + std::to_string(want);
    return P(n).first == want;
  }));
  out.push_back(scan_condition(prefix + "tail_basis", 1, std::min<std::size_t>(len, 1),
                               [&](std::size_t, std::string& why) {
                                 const Nat bound = std::max<Nat>(1, nu(1).first);
                                 why = "pi(1) = " + pair_str(P(1));
                                 return bound < P(1).second;
                               }));
  out.push_back(scan_condition(prefix + "chi_increasing", 2, len, [&](std::size_t n, std::string& why) {
    why = "chi(" + std::to_string(n - 1) + ") = " + std::to_string(C(n - 1)) + ", chi(" +
          std::to_string(n) + ") = " + std::to_string(C(n));
    return C(n - 1) < C(n);
  }));
  out.push_back(scan_condition(prefix + "pi_matches_nu", 1, len, [&](std::size_t n, std::string& why) {
    why = "pi(n) = " + pair_str(P(n)) + " but nu(chi(n)) = " + pair_str(nu(C(n)));
    return nu(C(n)) == P(n);
  }));
  out.push_back(scan_condition(prefix + "tail_increasing", 2, len, [&](std::size_t n, std::string& why) {
    why = "pi(" + std::to_string(n - 1) + ") = " + pair_str(P(n - 1)) + ", pi(" + std::to_string(n) +
          ") = " + pair_str(P(n));
    return std::max(P(n).first, P(n - 1).second) < P(n).second;
  }));
  out.push_back(scan_condition(prefix + "chi_above_index", 1, len, [&](std::size_t n, std::string& why) {
    why = "chi(n) = " + std::to_string(C(n));
    return n < C(n);
  }));
  out.push_back(scan_condition(prefix + "tail_above_index", 1, len, [&](std::size_t n, std::string& why) {
    why = "pi(n) = " + pair_str(P(n));
    return n < P(n).second;
  }));
  return out;
}

}  // namespace

CodingReport check_coding_conditions(const CodingTable& t) {
  CodingReport rep;
  rep.conditions = coding_clauses(t.nu(), t.chi_values(), t.pi_values(), "");

  // Chains k, χ(k), χ²(k), ... from diagonal ν(k), kept inside the prefix.
  ConditionResult chains{"class_chains", true, 0, ""};
  const std::size_t len = t.filled();
  for (std::size_t k = 1; k <= len && chains.passed; ++k) {
    const NodePair start = t.nu()(k);
    if (start.first != start.second) continue;
    std::size_t c = k;
    Nat prev = 0;
    bool first = true;
    while (c <= len) {
      const NodePair p = t.pi(c);
      if (p.first != start.first || (!first && p.second <= prev)) {
        chains.passed = false;
        chains.first_violation = c;
        chains.detail = "chain from nu(" + std::to_string(k) + ") = " + pair_str(start) + " reaches " +
                        pair_str(p);
        break;
      }
      prev = p.second;
      first = false;
      c = t.chi(c);
    }
  }
  rep.conditions.push_back(std::move(chains));
  return rep;
}

std::vector<Nat> class_witness_chain(CodingTable& t, Nat i, std::size_t depth, std::size_t max_len) {
  Index k = 0;
  for (Index c = 1; c <= t.fuel(); ++c) {
    const NodePair p = t.nu()(c);
    if (p.first == i && p.second == i) {
      k = c;
      break;
    }
  }
  if (k == 0)
    throw FuelExhausted(0, t.fuel(), "no index k with nu(k) = (" + std::to_string(i) + "," +
                                         std::to_string(i) + ")");
  std::vector<Nat> out;
  Index c = k;
  for (std::size_t n = 0; n <= depth && c <= max_len; ++n) {
    t.extend_to(c);
    out.push_back(t.pi(c).second);
    c = t.chi(c);
  }
  return out;
}

// ---- merged coding ----

MergedCoding::MergedCoding(Enumerator nu, std::uint64_t fuel) : nu_(std::move(nu)), fuel_(fuel) {
  if (!nu_) throw SpecError("merged coding needs an enumerator");
  if (fuel_ == 0) throw SpecError("fuel must be positive");
}

BigNat MergedCoding::mu(std::size_t n) const {
  return (BigNat(1) << static_cast<unsigned>(xi(n))) * (2 * BigNat(zeta(n)) + 1);
}

namespace {

// 2^a (2b+1) < 2^a' (2b'+1), compared without forming the powers.
bool merged_less(Index a, Index b, Index a2, Index b2) {
  if (a == a2) return b < b2;
  if (a < a2) {
    const Index shift = a2 - a;
    if (shift >= 62) return true;
    return BigNat(2 * b + 1) < (BigNat(2 * b2 + 1) << static_cast<unsigned>(shift));
  }
  return !merged_less(a2, b2, a, b) && !(a == a2 && b == b2);
}

}  // namespace

void MergedCoding::extend_to(std::size_t n) {
  if (n <= xi_.size()) return;
  if (exhausted_) throw *exhausted_;
  while (xi_.size() < n) {
    const std::size_t step = xi_.size() + 1;
    const Nat head = nu_(step).first;
    ++queries_;
    const Nat floor = step == 1 ? std::max<Nat>(1, head) : std::max(head, pi_zeta_.back().second);
    const Index lo = step == 1 ? 2 : zeta_.back() + 1;

    // ν over [lo, ...) is read once per step and reused by every candidate.
    std::vector<NodePair>& window = scratch_;
    window.clear();
    auto at = [&](Index k) -> const NodePair& {
      while (lo + window.size() <= k) {
        if (window.size() == fuel_) {
          queries_ += window.size();
          std::ostringstream why;
          why << "no pair of indices >= " << lo << " with heads " << head << " and tails above " << floor;
          exhausted_.emplace(step, window.size(), why.str());
          throw *exhausted_;
        }
        window.push_back(nu_(lo + window.size()));
      }
      return window[k - lo];
    };
    auto usable = [&](Index k) { return at(k).first == head && at(k).second > floor; };

    bool found = false;
    Index best_a = 0, best_b = 0;
    for (Index a = lo;; ++a) {
      // Stop once even the least partner b = a+1 cannot beat the best.
      if (found && !merged_less(a, a + 1, best_a, best_b)) break;
      if (!usable(a)) continue;
      const Nat tail_a = at(a).second;
      for (Index b = a + 1;; ++b) {
        if (found && !merged_less(a, b, best_a, best_b)) break;
        const NodePair pb = at(b);
        if (pb.first == head && pb.second > tail_a) {
          best_a = a;
          best_b = b;
          found = true;
          break;
        }
      }
    }
    queries_ += window.size();
    xi_.push_back(best_a);
    zeta_.push_back(best_b);
    pi_xi_.push_back(at(best_a));
    pi_zeta_.push_back(at(best_b));
  }
}

MergedCoding extend_merged(MergedCoding m, std::size_t n) {
  m.extend_to(n);
  return m;
}

CodingTable MergedCoding::xi_table() const {
  return CodingTable::from_prefix(nu_, std::vector<Index>(xi_.begin(), xi_.end()), fuel_);
}

CodingTable MergedCoding::zeta_table() const {
  return CodingTable::from_prefix(nu_, std::vector<Index>(zeta_.begin(), zeta_.end()), fuel_);
}

CodingReport check_merged_conditions(const MergedCoding& m) {
  CodingReport rep;
  const std::vector<Index> xi(m.xi_values().begin(), m.xi_values().end());
  const std::vector<Index> zeta(m.zeta_values().begin(), m.zeta_values().end());
  std::vector<NodePair> pxi, pzeta;
  for (std::size_t n = 1; n <= m.filled(); ++n) {
    pxi.push_back(m.pi_xi(n));
    pzeta.push_back(m.pi_zeta(n));
  }
  for (auto& c : coding_clauses(m.nu(), xi, pxi, "xi.")) rep.conditions.push_back(std::move(c));
  for (auto& c : coding_clauses(m.nu(), zeta, pzeta, "zeta.")) rep.conditions.push_back(std::move(c));
  const std::size_t len = m.filled();
  rep.conditions.push_back(scan_condition("interleaved", 1, len, [&](std::size_t n, std::string& why) {
    why = "xi = " + std::to_string(m.xi(n)) + ", zeta = " + std::to_string(m.zeta(n));
    if (n < len) why += ", next xi = " + std::to_string(m.xi(n + 1));
    return m.xi(n) < m.zeta(n) && (n == len || m.zeta(n) < m.xi(n + 1));
  }));
  rep.conditions.push_back(scan_condition("tails_ordered", 1, len, [&](std::size_t n, std::string& why) {
    why = "pi_xi = " + pair_str(m.pi_xi(n)) + ", pi_zeta = " + pair_str(m.pi_zeta(n));
    return m.pi_xi(n).second < m.pi_zeta(n).second;
  }));
  rep.conditions.push_back(scan_condition("mu_decodes", 1, std::min<std::size_t>(len, 64),
                                          [&](std::size_t n, std::string& why) {
                                            const BigNat mu = m.mu(n);
                                            why = "mu(n) does not split into (xi, zeta)";
                                            return proj_exp(mu) == m.xi(n) && proj_odd(mu) == m.zeta(n);
                                          }));
  return rep;
}

namespace {

nlohmann::json pairs_json(std::span<const NodePair> ps) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : ps) a.push_back({p.first, p.second});
  return a;
}

}  // namespace

nlohmann::json to_json(const CodingTable& t) {
  return {{"chi", std::vector<Index>(t.chi_values().begin(), t.chi_values().end())},
          {"pi", pairs_json(t.pi_values())},
          {"fuel", t.fuel()},
          {"enumerator", t.nu().label()}};
}

nlohmann::json to_json(const MergedCoding& m) {
  std::vector<NodePair> pxi, pzeta;
  for (std::size_t n = 1; n <= m.filled(); ++n) {
    pxi.push_back(m.pi_xi(n));
    pzeta.push_back(m.pi_zeta(n));
  }
  return {{"chi", std::vector<Index>(m.xi_values().begin(), m.xi_values().end())},
          {"pi", pairs_json(pxi)},
          {"zeta", std::vector<Index>(m.zeta_values().begin(), m.zeta_values().end())},
          {"pi_zeta", pairs_json(pzeta)},
          {"fuel", m.fuel()},
          {"enumerator", m.nu().label()}};
}

}  // namespace ceer
