#include "ceer/derived.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "ceer/errors.hpp"
#include "ceer/seq_codec.hpp"

namespace ceer {

DerivedRel parse_derived_rel(std::string_view name) {
  static const std::pair<std::string_view, DerivedRel> names[] = {
      {"R", DerivedRel::R}, {"S", DerivedRel::S}, {"T", DerivedRel::T}, {"H", DerivedRel::H},
      {"F", DerivedRel::F}, {"J", DerivedRel::J}, {"G", DerivedRel::G}};
  for (const auto& [n, r] : names)
    if (n == name) return r;
  throw SpecError("unknown derived relation '" + std::string(name) + "' (expected one of R S T H F J G)");
}

const char* to_string(DerivedRel rel) {
  switch (rel) {
    case DerivedRel::R: return "R";
    case DerivedRel::S: return "S";
    case DerivedRel::T: return "T";
    case DerivedRel::H: return "H";
    case DerivedRel::F: return "F";
    case DerivedRel::J: return "J";
    case DerivedRel::G: return "G";
  }
  return "?";
}

// ---- ReachIndex ----

void ReachIndex::grow(Nat x) {
  if (x < parent_.size()) return;
  const std::size_t old = parent_.size();
  parent_.resize(x + 1);
  rank_.resize(x + 1, 0);
  std::iota(parent_.begin() + static_cast<std::ptrdiff_t>(old), parent_.end(), static_cast<Nat>(old));
}

Nat ReachIndex::find(Nat x) const {
  if (x >= parent_.size()) return x;
  Nat root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const Nat next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

void ReachIndex::absorb(Index m, NodePair e) {
  if (m != edges_.size() + 1) throw SpecError("ReachIndex: edges must be absorbed in order");
  edges_.emplace_back(m, e);
  grow(std::max(e.first, e.second));
  Nat a = find(e.first), b = find(e.second);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
}

bool ReachIndex::connected(Nat i, Nat j) const { return find(i) == find(j); }

std::size_t ReachIndex::component_size(Nat i, Nat limit) const {
  const Nat root = find(i);
  std::size_t count = 0;
  for (Nat x = 0; x <= limit; ++x)
    if (find(x) == root) ++count;
  return count;
}

// ---- DerivedContext ----

DerivedContext::DerivedContext(CodingTable table) : coding_(std::move(table)) {}
DerivedContext::DerivedContext(MergedCoding merged) : coding_(std::move(merged)) {}

bool DerivedContext::has_merged() const noexcept { return std::holds_alternative<MergedCoding>(coding_); }

const Enumerator& DerivedContext::nu() const {
  return std::visit([](const auto& c) -> const Enumerator& { return c.nu(); }, coding_);
}

std::size_t DerivedContext::filled() const {
  return std::visit([](const auto& c) { return c.filled(); }, coding_);
}

std::uint64_t DerivedContext::extension_queries() const {
  return std::visit([](const auto& c) { return c.queries(); }, coding_);
}

nlohmann::json DerivedContext::coding_json() const {
  return std::visit([](const auto& c) { return to_json(c); }, coding_);
}

void DerivedContext::ensure(std::size_t n) {
  std::visit([n](auto& c) { c.extend_to(n); }, coding_);
}

NodePair DerivedContext::pi_on(Side side, std::size_t n) {
  ensure(n);
  stats_.max_pi_index = std::max(stats_.max_pi_index, n);
  if (auto* t = std::get_if<CodingTable>(&coding_)) {
    if (side == Side::Zeta) throw SpecError("this relation needs a merged coding");
    return t->pi(n);
  }
  const auto& m = std::get<MergedCoding>(coding_);
  return side == Side::Primary ? m.pi_xi(n) : m.pi_zeta(n);
}

NodePair DerivedContext::pi(std::size_t n) { return pi_on(Side::Primary, n); }
NodePair DerivedContext::pi_zeta(std::size_t n) { return pi_on(Side::Zeta, n); }

NodePair DerivedContext::nu_counted(Index k) {
  ++stats_.nu_queries;
  stats_.max_nu_index = std::max(stats_.max_nu_index, k);
  return nu()(k);
}

std::optional<std::size_t> DerivedContext::tail_position(Side side, Nat i) {
  // proj2 π(m) > m >= 1, so only m in [1, i-1] can have tail i.
  if (i < 2) return std::nullopt;
  // Extend only until some tail reaches i; past that point tails exceed i.
  std::size_t lo = 1, hi = std::min<std::size_t>(std::max<std::size_t>(filled(), 1), i - 1);
  while (hi < i - 1 && pi_on(side, hi).second < i) ++hi;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pi_on(side, mid).second < i)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (pi_on(side, lo).second == i) return lo;
  return std::nullopt;
}

bool DerivedContext::in_R(Nat i, Nat j) {
  const auto n = tail_position(Side::Primary, j);
  return n && pi(*n).first == i;
}

bool DerivedContext::st_match(Nat i, Nat j, bool inverse_pairs, Index* m_out, Index* n_out) {
  const auto m = tail_position(Side::Primary, i);
  if (!m) return false;
  const auto n = tail_position(Side::Primary, j);
  if (!n) return false;
  const NodePair vm = nu_counted(*m);
  const NodePair vn = nu_counted(*n);
  const bool ok = inverse_pairs ? vn == inverse(vm) : vn == vm;
  if (ok) {
    if (m_out) *m_out = *m;
    if (n_out) *n_out = *n;
  }
  return ok;
}

bool DerivedContext::in_S(Nat i, Nat j) { return st_match(i, j, true, nullptr, nullptr); }
bool DerivedContext::in_T(Nat i, Nat j) { return st_match(i, j, false, nullptr, nullptr); }
bool DerivedContext::in_H(Nat i, Nat j) { return in_S(i, j) || in_T(i, j); }

void DerivedContext::absorb_through(Side side, Nat cap) {
  ReachIndex& r = side == Side::Primary ? reach_ : reach_zeta_;
  if (r.cursor() > 0 && cap <= r.cap()) return;
  for (Index m = r.cursor() + 1;; ++m) {
    const NodePair e = pi_on(side, m);
    if (e.second > cap) break;
    r.absorb(m, e);
  }
  r.set_cap(std::max(cap, r.cap()));
}

const ReachIndex& DerivedContext::reach(Nat cap) {
  absorb_through(Side::Primary, cap);
  return reach_;
}

const ReachIndex& DerivedContext::reach_zeta(Nat cap) {
  if (!has_merged()) throw SpecError("this relation needs a merged coding");
  absorb_through(Side::Zeta, cap);
  return reach_zeta_;
}

bool DerivedContext::in_F(Nat i, Nat j) {
  // Every node heads some π edge, so (i,i) ∈ R R⁻¹.
  if (i == j) return true;
  return reach(std::max(i, j)).connected(i, j);
}

bool DerivedContext::in_F_zeta(Nat i, Nat j) {
  if (!has_merged()) throw SpecError("this relation needs a merged coding");
  if (i == j) return true;
  return reach_zeta(std::max(i, j)).connected(i, j);
}

bool DerivedContext::in_J(Nat i, Nat j) {
  if (!has_merged()) throw SpecError("J needs a merged coding");
  return !in_H(i, i) && !in_H(j, j) && in_F_zeta(i, j);
}

bool DerivedContext::in_G(Nat i, Nat j) { return in_H(i, j) || in_J(i, j); }

namespace {

std::vector<Edge> edges_up_to(const ReachIndex& r, Nat cap) {
  std::vector<Edge> out;
  for (const auto& e : r.edges())
    if (e.second.second <= cap) out.push_back(e);
  return out;
}

}  // namespace

std::vector<Edge> DerivedContext::admitted_edges(Nat cap) { return edges_up_to(reach(cap), cap); }
std::vector<Edge> DerivedContext::admitted_zeta_edges(Nat cap) { return edges_up_to(reach_zeta(cap), cap); }

bool DerivedContext::in_F_formula(Nat i, Nat j) {
  if (i + j > 4) throw ScaleExceeded("literal walk search is limited to i + j <= 4");
  const Nat k = std::max<Nat>(i + j, 2);
  const std::uint64_t bound = static_cast<std::uint64_t>(beta(k));
  // Items are bounded by k in magnitude, so π is needed through k.
  ensure(k);
  for (std::uint64_t x = 1; x <= bound; ++x) {
    if (!is_valid_code(x)) continue;
    const auto seq = decode_all(x);
    Walk w;
    bool in_range = true;
    for (std::int64_t s : *seq) {
      if (static_cast<std::uint64_t>(s < 0 ? -s : s) > k) {
        in_range = false;
        break;
      }
      w.emplace_back(s);
    }
    if (!in_range) continue;
    std::vector<NodePair> steps;
    for (const auto& e : w) steps.push_back(pi(e.magnitude()));
    auto tail = [&](std::size_t t) { return w[t].forward() ? steps[t].first : steps[t].second; };
    auto head = [&](std::size_t t) { return w[t].forward() ? steps[t].second : steps[t].first; };
    if (tail(0) != i || head(w.size() - 1) != j) continue;
    bool chained = true;
    for (std::size_t t = 0; t + 1 < w.size() && chained; ++t) chained = head(t) == tail(t + 1);
    if (!chained) continue;
    bool edges_in_R = true;
    for (const auto& p : steps) edges_in_R = edges_in_R && in_R(p.first, p.second);
    if (edges_in_R) return true;
  }
  return false;
}

Walk DerivedContext::minimal_walk(Nat i, Nat j) {
  if (i == j) {
    if (const auto m = tail_position(Side::Primary, i)) return Walk{SignedEdge(-static_cast<std::int64_t>(*m)), SignedEdge(static_cast<std::int64_t>(*m))};
    const std::uint64_t fuel = std::visit([](const auto& c) { return c.fuel(); }, coding_);
    for (std::size_t m = 1; m <= fuel; ++m)
      if (pi(m).first == i) return Walk{SignedEdge(static_cast<std::int64_t>(m)), SignedEdge(-static_cast<std::int64_t>(m))};
    throw FuelExhausted(0, fuel, "no pi edge with head " + std::to_string(i));
  }
  const Nat cap = std::max(i, j);
  const auto edges = admitted_edges(cap);
  std::map<Nat, std::vector<std::int64_t>> adj;
  for (const auto& [m, e] : edges) {
    adj[e.first].push_back(static_cast<std::int64_t>(m));
    adj[e.second].push_back(-static_cast<std::int64_t>(m));
  }
  std::map<Nat, std::int64_t> via;  // node -> signed edge used to reach it
  std::deque<Nat> queue{i};
  via[i] = 0;
  while (!queue.empty() && !via.count(j)) {
    const Nat u = queue.front();
    queue.pop_front();
    for (std::int64_t x : adj[u]) {
      const NodePair e = edges[static_cast<std::size_t>(x < 0 ? -x : x) - 1].second;
      const Nat v = x > 0 ? e.second : e.first;
      if (via.count(v)) continue;
      via[v] = x;
      queue.push_back(v);
    }
  }
  if (!via.count(j)) {
    std::ostringstream os;
    os << "no walk from " << i << " to " << j << " over pi edges with tails <= " << cap;
    throw NoWalk(os.str());
  }
  Walk w;
  for (Nat v = j; v != i;) {
    const std::int64_t x = via[v];
    w.emplace_back(x);
    const NodePair e = edges[static_cast<std::size_t>(x < 0 ? -x : x) - 1].second;
    v = x > 0 ? e.first : e.second;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Decision DerivedContext::decide(DerivedRel rel, Nat i, Nat j) {
  std::ostringstream cert;
  bool holds = false;
  switch (rel) {
    case DerivedRel::R: {
      const auto n = tail_position(Side::Primary, j);
      holds = n && pi(*n).first == i;
      if (holds) cert << "pi(" << *n << ") = " << pi(*n);
      else if (n) cert << "pi(" << *n << ") = " << pi(*n) << " is the only pair with tail " << j;
      else cert << "no n < " << j << " with proj2 pi(n) = " << j;
      break;
    }
    case DerivedRel::S:
    case DerivedRel::T: {
      Index m = 0, n = 0;
      holds = st_match(i, j, rel == DerivedRel::S, &m, &n);
      if (holds)
        cert << "m = " << m << ", n = " << n << ", nu(m) = " << nu()(m) << ", nu(n) = " << nu()(n);
      else
        cert << "searched m < " << i << ", n < " << j;
      break;
    }
    case DerivedRel::H: {
      const auto s = decide(DerivedRel::S, i, j);
      if (s.holds) return {true, "S: " + s.certificate};
      const auto t = decide(DerivedRel::T, i, j);
      return {t.holds, (t.holds ? "T: " : "neither S nor T; ") + t.certificate};
    }
    case DerivedRel::F: {
      holds = in_F(i, j);
      if (holds) {
        try {
          cert << "walk " << to_string(minimal_walk(i, j));
        } catch (const FuelExhausted&) {
          cert << "reflexive";
        }
      } else {
        cert << "no walk over pi edges with tails <= " << std::max(i, j);
      }
      break;
    }
    case DerivedRel::J: {
      if (in_H(i, i) || in_H(j, j)) {
        cert << (in_H(i, i) ? i : j) << " is in the field of H";
      } else {
        holds = in_F_zeta(i, j);
        cert << (holds ? "zeta-connected outside field of H" : "not zeta-connected with tails <= ")
             << (holds ? "" : std::to_string(std::max(i, j)));
      }
      break;
    }
    case DerivedRel::G: {
      const auto h = decide(DerivedRel::H, i, j);
      if (h.holds) return {true, "H: " + h.certificate};
      const auto jj = decide(DerivedRel::J, i, j);
      return {jj.holds, "J: " + jj.certificate};
    }
  }
  return {holds, cert.str()};
}

}  // namespace ceer
