#include "ceer/harness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ceer/errors.hpp"
#include "ceer/relation.hpp"

namespace ceer {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

void WindowConfig::validate() const {
  if (n < 1) throw SpecError("window must be >= 1");
  if (fuel < 1) throw SpecError("fuel must be >= 1");
  if (seeds.empty()) throw SpecError("at least one seed is required");
}

// ---- report ----

void VerificationReport::add(Check c) {
  if (c.status == Status::Fail && !c.counterexample)
    throw CeerError("failing check '" + c.name + "' has no counterexample");
  checks_.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void VerificationReport::canonicalize() {
  std::stable_sort(checks_.begin(), checks_.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json(const WindowConfig& config) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"name", c.name}, {"status", ceer::to_string(c.status)}, {"detail", c.detail},
                        {"queries", c.queries}};
    j["counterexample"] = c.counterexample ? nlohmann::json::array({c.counterexample->first, c.counterexample->second})
                                           : nlohmann::json(nullptr);
    checks.push_back(std::move(j));
  }
  return {{"config", {{"window", config.n}, {"fuel", config.fuel}, {"seeds", config.seeds}}},
          {"checks", std::move(checks)},
          {"summary",
           {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"inconclusive", count(Status::Inconclusive)}}}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INCONCLUSIVE") << "  "
       << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    if (c.counterexample) os << "  counterexample " << *c.counterexample;
    os << '\n';
  }
  os << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Inconclusive)
     << " inconclusive\n";
  return os.str();
}

namespace {

Check pass(std::string name, std::string detail = "", std::uint64_t queries = 0) {
  return {std::move(name), Status::Pass, std::move(detail), std::nullopt, queries};
}

Check fail(std::string name, NodePair at, std::string detail = "") {
  return {std::move(name), Status::Fail, std::move(detail), at, 0};
}

Check inconclusive(std::string name, std::string detail, std::uint64_t queries = 0) {
  return {std::move(name), Status::Inconclusive, std::move(detail), std::nullopt, queries};
}

// First pair of a not in b, if any.
std::optional<NodePair> first_outside(const FiniteRelation& a, const FiniteRelation& b) {
  for (const auto& p : a.pairs())
    if (!b.contains(p)) return p;
  return std::nullopt;
}

Check inclusion(std::string name, const FiniteRelation& a, const FiniteRelation& b) {
  if (const auto p = first_outside(a, b)) return fail(std::move(name), *p, "pair outside the larger relation");
  return pass(std::move(name), std::to_string(a.size()) + " pairs");
}

Check equivalence_laws(std::string name, const FiniteRelation& a) {
  const auto nodes = window_nodes(a.bound());
  for (Nat i : nodes)
    if (!a.contains(i, i)) return fail(std::move(name), {i, i}, "not reflexive");
  for (const auto& [i, j] : a.pairs())
    if (!a.contains(j, i)) return fail(std::move(name), {i, j}, "converse missing");
  // Transitivity: every pair of the square must already be present.
  const FiniteRelation sq = compose(a, a);
  if (const auto p = first_outside(sq, a)) return fail(std::move(name), *p, "not transitive");
  return pass(std::move(name), "reflexive, symmetric, transitive on [0," + std::to_string(a.bound()) + "]");
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(population);
  for (std::size_t k = 0; k < population; ++k) idx[k] = k;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates; raw engine output keeps results identical across
  // standard libraries.
  const std::size_t take = std::min(count, population);
  for (std::size_t k = 0; k < take; ++k) {
    const std::size_t r = k + static_cast<std::size_t>(rng() % (population - k));
    std::swap(idx[k], idx[r]);
  }
  idx.resize(take);
  return idx;
}

// Independent BFS over {π(m) | proj2 π(m) <= cap}: shortest walk length, or 0
// if j is unreachable from i.
std::size_t bfs_distance(DerivedContext& ctx, Nat i, Nat j, bool zeta = false) {
  const Nat cap = std::max(i, j);
  std::vector<NodePair> edges;
  for (std::size_t m = 1;; ++m) {
    const NodePair e = zeta ? ctx.pi_zeta(m) : ctx.pi(m);
    if (e.second > cap) break;
    edges.push_back(e);
  }
  if (i == j) return 0;
  std::map<Nat, std::size_t> dist{{i, 0}};
  std::deque<Nat> queue{i};
  while (!queue.empty()) {
    const Nat u = queue.front();
    queue.pop_front();
    for (const auto& e : edges) {
      for (const Nat v : {e.first == u ? e.second : cap + 1, e.second == u ? e.first : cap + 1}) {
        if (v > cap || dist.count(v)) continue;
        dist[v] = dist[u] + 1;
        if (v == j) return dist[v];
        queue.push_back(v);
      }
    }
  }
  return 0;
}

std::string join_names(const std::string& a, const std::string& b) { return a + "/" + b; }

}  // namespace

// ---- coding ----

VerificationReport verify_coding(const std::string& name, const Enumerator& nu, std::size_t n, std::uint64_t fuel) {
  VerificationReport rep;
  CodingTable t(nu, fuel);
  try {
    t.extend_to(n);
  } catch (const FuelExhausted& e) {
    rep.add(inconclusive(join_names(name, "coding/extend"),
                         std::string(e.what()) + " (no coding exists unless the relation is IC)", t.queries()));
    return rep;
  }
  rep.add(pass(join_names(name, "coding/extend"), "filled " + std::to_string(n) + " entries", t.queries()));
  for (const auto& c : check_coding_conditions(t).conditions) {
    const std::string cname = join_names(name, "coding/" + c.name);
    if (c.passed) {
      rep.add(pass(cname));
    } else {
      const std::size_t at = c.first_violation;
      rep.add(fail(cname, {at, at >= 1 && at <= t.filled() ? t.chi(at) : 0}, c.detail));
    }
  }
  // Determinism: a fresh table reproduces the same χ.
  CodingTable again(nu, fuel);
  again.extend_to(n);
  const bool same = std::equal(t.chi_values().begin(), t.chi_values().end(), again.chi_values().begin(),
                               again.chi_values().end());
  rep.add(same ? pass(join_names(name, "coding/deterministic"))
               : fail(join_names(name, "coding/deterministic"), {0, 0}, "rebuilt table differs"));
  return rep;
}

// ---- E = R S R⁻¹ ----

VerificationReport verify_composition(const std::string& name, const GroundTruth& e, DerivedContext& ctx,
                                 const WindowConfig& w) {
  VerificationReport rep;
  const Nat N = w.n;
  const std::string base = join_names(name, "RSR");

  // Completeness: (i,j) = ν(m), (j,i) = ν(m'), then (i,h) = π(m), (j,k) = π(m').
  std::map<NodePair, Index> first_seen;
  std::size_t wanted = 0;
  for (Nat i = 0; i <= N; ++i)
    for (Nat j = 0; j <= N; ++j)
      if (e(i, j)) ++wanted;
  for (Index m = 1; m <= w.fuel && first_seen.size() < wanted; ++m) {
    const NodePair p = ctx.nu()(m);
    if (p.first <= N && p.second <= N) first_seen.emplace(p, m);
  }
  std::size_t found = 0, missing = 0;
  std::optional<NodePair> first_missing, broken;
  std::string broken_detail;
  bool table_short = false;
  std::string table_detail;
  for (Nat i = 0; i <= N && !broken && !table_short; ++i) {
    for (Nat j = 0; j <= N && !broken && !table_short; ++j) {
      if (!e(i, j)) continue;
      const auto a = first_seen.find({i, j});
      const auto b = first_seen.find({j, i});
      if (a == first_seen.end() || b == first_seen.end()) {
        ++missing;
        if (!first_missing) first_missing = NodePair{i, j};
        continue;
      }
      try {
        const Nat h = ctx.pi(a->second).second;
        const Nat k = ctx.pi(b->second).second;
        if (!(ctx.in_R(i, h) && ctx.in_S(h, k) && ctx.in_R(j, k))) {
          broken = NodePair{i, j};
          std::ostringstream os;
          os << "h = " << h << ", k = " << k << " do not witness R S R^-1";
          broken_detail = os.str();
        } else {
          ++found;
        }
      } catch (const FuelExhausted& ex) {
        table_short = true;
        table_detail = ex.what();
      }
    }
  }
  if (broken) rep.add(fail(join_names(base, "completeness"), *broken, broken_detail));
  else if (table_short)
    rep.add(inconclusive(join_names(base, "completeness"), table_detail, ctx.extension_queries()));
  else if (missing)
    rep.add(inconclusive(join_names(base, "completeness"),
                         std::to_string(missing) + " E-pairs without enumeration index <= fuel, first " +
                             [&] { std::ostringstream os; os << *first_missing; return os.str(); }(),
                         ctx.extension_queries()));
  else
    rep.add(pass(join_names(base, "completeness"), std::to_string(found) + " E-pairs witnessed",
                 ctx.extension_queries()));

  // Soundness: every composite i R h S k R⁻¹ j over the filled prefix is in E.
  const std::size_t L = ctx.filled();
  std::map<NodePair, std::vector<std::size_t>> by_nu;
  for (std::size_t m = 1; m <= L; ++m) by_nu[ctx.nu()(m)].push_back(m);
  std::size_t composites = 0;
  std::optional<NodePair> unsound;
  for (std::size_t a = 1; a <= L && !unsound; ++a) {
    const NodePair pa = ctx.pi(a);
    if (pa.first > N) continue;
    const auto partners = by_nu.find(inverse(ctx.nu()(a)));
    if (partners == by_nu.end()) continue;
    for (std::size_t b : partners->second) {
      const NodePair pb = ctx.pi(b);
      if (pb.first > N) continue;
      ++composites;
      if (!e(pa.first, pb.first)) {
        unsound = NodePair{pa.first, pb.first};
        break;
      }
    }
  }
  if (unsound)
    rep.add(fail(join_names(base, "soundness"), *unsound, "composite witness outside E"));
  else
    rep.add(pass(join_names(base, "soundness"),
                 std::to_string(composites) + " composites over " + std::to_string(L) + " table entries"));

  // in_R against a literal scan of the same prefix.
  std::optional<NodePair> r_mismatch;
  try {
    for (Nat i = 0; i <= N && !r_mismatch; ++i)
      for (Nat j = 0; j <= N && !r_mismatch; ++j) {
        bool literal = false;
        for (std::size_t n = 1; n < j && !literal; ++n) literal = ctx.pi(n) == NodePair{i, j};
        if (literal != ctx.in_R(i, j)) r_mismatch = NodePair{i, j};
      }
    rep.add(r_mismatch ? fail(join_names(base, "R-oracle"), *r_mismatch, "in_R disagrees with a scan of pi")
                       : pass(join_names(base, "R-oracle")));
  } catch (const FuelExhausted& ex) {
    rep.add(inconclusive(join_names(base, "R-oracle"), ex.what()));
  }
  return rep;
}

// ---- E = F G F = F ∨ G with both factors IC ----

VerificationReport verify_join_generators(const std::string& name, const GroundTruth& e, MergedCoding m,
                                    const WindowConfig& w, std::size_t interleave_entries) {
  VerificationReport rep;
  const Nat N = w.n;
  const std::string base = join_names(name, "FG");

  try {
    m.extend_to(interleave_entries);
  } catch (const FuelExhausted& ex) {
    rep.add(inconclusive(join_names(base, "merged/extend"), ex.what(), m.queries()));
    return rep;
  }
  for (const auto& c : check_merged_conditions(m).conditions) {
    const std::string cname = join_names(base, "merged/" + c.name);
    if (c.passed) rep.add(pass(cname, "first " + std::to_string(m.filled()) + " entries"));
    else rep.add(fail(cname, {c.first_violation, c.first_violation <= m.filled() ? m.xi(c.first_violation) : 0}, c.detail));
  }

  DerivedContext ctx(std::move(m));
  FiniteRelation Fw(N), Gw(N), Hw(N), Jw(N);
  try {
    Fw = FiniteRelation::from_predicate(N, [&](Nat i, Nat j) { return ctx.in_F(i, j); });
    Hw = FiniteRelation::from_predicate(N, [&](Nat i, Nat j) { return ctx.in_H(i, j); });
    Jw = FiniteRelation::from_predicate(N, [&](Nat i, Nat j) { return ctx.in_J(i, j); });
  } catch (const FuelExhausted& ex) {
    rep.add(inconclusive(join_names(base, "deciders"), ex.what(), ctx.extension_queries()));
    return rep;
  }
  Gw = unite(Hw, Jw);
  const FiniteRelation Ew = materialize(e, N);

  rep.add(equivalence_laws(join_names(base, "F-equivalence"), Fw));
  rep.add(equivalence_laws(join_names(base, "G-equivalence"), Gw));
  rep.add(inclusion(join_names(base, "F-within-E"), Fw, Ew));
  rep.add(inclusion(join_names(base, "G-within-E"), Gw, Ew));
  rep.add(inclusion(join_names(base, "join-within-E"), lattice_join(Fw, Gw), Ew));

  // field(J) = window ∖ field(H)
  {
    const auto fh = field_via_diagonal(Hw);
    const auto fj = field(Jw);
    std::vector<Nat> complement;
    const std::set<Nat> in_h(fh.begin(), fh.end());
    for (Nat i = 0; i <= N; ++i)
      if (!in_h.count(i)) complement.push_back(i);
    if (fj == complement) {
      rep.add(pass(join_names(base, "J-field"), std::to_string(fj.size()) + " nodes outside field(H)"));
    } else {
      std::vector<Nat> diff;
      std::set_symmetric_difference(fj.begin(), fj.end(), complement.begin(), complement.end(),
                                    std::back_inserter(diff));
      rep.add(fail(join_names(base, "J-field"), {diff.front(), diff.front()}, "field(J) and window minus field(H) differ"));
    }
  }

  // in_F and F_ζ against BFS over the same bounded edge sets.
  {
    std::optional<NodePair> mismatch;
    for (Nat i = 0; i <= N && !mismatch; ++i)
      for (Nat j = 0; j <= N && !mismatch; ++j) {
        if (i == j) continue;
        if ((bfs_distance(ctx, i, j) > 0) != Fw.contains(i, j)) mismatch = NodePair{i, j};
        else if ((bfs_distance(ctx, i, j, true) > 0) != ctx.in_F_zeta(i, j)) mismatch = NodePair{i, j};
      }
    rep.add(mismatch ? fail(join_names(base, "F-oracle"), *mismatch, "union-find and BFS disagree")
                     : pass(join_names(base, "F-oracle")));
  }

  // F G F witnesses through R S R⁻¹: (i,j) = ν(a), (j,i) = ν(b).
  {
    std::map<NodePair, Index> first_seen;
    std::size_t wanted = Ew.size();
    for (Index k = 1; k <= w.fuel && first_seen.size() < wanted; ++k) {
      const NodePair p = ctx.nu()(k);
      if (p.first <= N && p.second <= N) first_seen.emplace(p, k);
    }
    std::size_t witnessed = 0, missing = 0;
    std::optional<NodePair> broken;
    std::string short_detail;
    for (const auto& [i, j] : Ew.pairs()) {
      const auto a = first_seen.find({i, j});
      const auto b = first_seen.find({j, i});
      if (a == first_seen.end() || b == first_seen.end()) {
        ++missing;
        continue;
      }
      try {
        const Nat h = ctx.pi(a->second).second;
        const Nat k = ctx.pi(b->second).second;
        if (ctx.in_F(i, h) && ctx.in_G(h, k) && ctx.in_F(k, j)) ++witnessed;
        else {
          broken = NodePair{i, j};
          break;
        }
      } catch (const FuelExhausted& ex) {
        ++missing;
        if (short_detail.empty()) short_detail = ex.what();
      }
    }
    const std::string cname = join_names(base, "FGF-witness");
    if (broken) rep.add(fail(cname, *broken, "R S R^-1 witness is not an F G F chain"));
    else if (missing)
      rep.add(inconclusive(cname, std::to_string(missing) + " of " + std::to_string(Ew.size()) +
                                      " E-pairs without a witness within fuel" +
                                      (short_detail.empty() ? "" : "; " + short_detail),
                           ctx.extension_queries()));
    else rep.add(pass(cname, std::to_string(witnessed) + " E-pairs", ctx.extension_queries()));
  }

  // Class sizes at sampled nodes, counted inside [0, N·2^t] for t = 0..8,
  // never shrink and end strictly larger than they started.
  {
    const auto picks = sample_indices(N + 1, 4, w.seeds.front());
    std::ostringstream detail;
    bool grew = true;
    try {
      for (std::size_t p : picks) {
        const Nat s = static_cast<Nat>(p);
        std::vector<std::size_t> fs, gs;
        std::size_t g = 0;
        Nat counted = 0;
        for (Nat cap = N; cap <= 256 * N; cap *= 2) {
          fs.push_back(ctx.reach(cap).component_size(s, cap));
          for (Nat j = counted; j <= cap; ++j)
            if (ctx.in_G(s, j)) ++g;
          counted = cap + 1;
          gs.push_back(g);
        }
        detail << s << ": F";
        for (auto f : fs) detail << ' ' << f;
        detail << ", G";
        for (auto x : gs) detail << ' ' << x;
        detail << "; ";
        grew = grew && std::is_sorted(fs.begin(), fs.end()) && fs.front() < fs.back() && gs.front() < gs.back();
      }
      rep.add(grew ? pass(join_names(base, "class-growth"), detail.str())
                   : inconclusive(join_names(base, "class-growth"), "not every counter grew: " + detail.str()));
    } catch (const FuelExhausted& ex) {
      rep.add(inconclusive(join_names(base, "class-growth"), ex.what()));
    }
  }
  return rep;
}

// ---- minimal walks ----

VerificationReport verify_walk_shape(const std::string& name, DerivedContext& ctx, const WindowConfig& w,
                                        std::size_t samples) {
  VerificationReport rep;
  const Nat N = w.n;
  const std::string cname = join_names(name, "walk-shape");
  std::vector<NodePair> reachable;
  try {
    for (Nat i = 0; i <= N; ++i)
      for (Nat j = 0; j <= N; ++j)
        if (i != j && ctx.in_F(i, j)) reachable.push_back({i, j});
  } catch (const FuelExhausted& ex) {
    rep.add(inconclusive(cname, ex.what()));
    return rep;
  }
  if (reachable.empty()) {
    rep.add(inconclusive(cname, "no reachable pairs in the window"));
    return rep;
  }
  const Enumerator pi_enum([&ctx](Index k) { return ctx.pi(k); }, "pi");
  std::size_t checked = 0;
  for (std::size_t idx : sample_indices(reachable.size(), samples, w.seeds.front())) {
    const auto [i, j] = reachable[idx];
    const Walk walk = ctx.minimal_walk(i, j);
    std::size_t k = 0;
    while (k < walk.size() && !walk[k].forward()) ++k;
    const bool shaped = std::all_of(walk.begin() + static_cast<std::ptrdiff_t>(k), walk.end(),
                                    [](const SignedEdge& x) { return x.forward(); });
    std::string why;
    if (!is_walk(walk, i, j, pi_enum)) why = "not a walk";
    else if (!shaped) why = "positive step before a negative one";
    else if (walk.size() > i + j) why = "longer than i + j";
    else if (walk.size() != bfs_distance(ctx, i, j)) why = "not shortest per BFS";
    if (!why.empty()) {
      rep.add(fail(cname, {i, j}, why + ": " + to_string(walk)));
      return rep;
    }
    ++checked;
  }
  // Diagonal walks are a single edge and its reverse.
  for (Nat i = 0; i <= std::min<Nat>(N, 10); ++i) {
    try {
      const Walk walk = ctx.minimal_walk(i, i);
      if (walk.size() != 2 || walk[0] != walk[1].reversed() || !is_walk(walk, i, i, pi_enum)) {
        rep.add(fail(cname, {i, i}, "diagonal walk " + to_string(walk)));
        return rep;
      }
    } catch (const FuelExhausted& ex) {
      rep.add(inconclusive(join_names(name, "walk-diagonal"), ex.what()));
      break;
    }
  }
  rep.add(pass(cname, std::to_string(checked) + " sampled pairs of " + std::to_string(reachable.size())));
  return rep;
}

// ---- transitive closure of reflexive subrelations ----

namespace {

// All set partitions of {0..n-1} as block labels (restricted growth strings).
void partitions(std::size_t n, std::vector<std::size_t>& cur, std::size_t blocks,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    partitions(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

}  // namespace

VerificationReport verify_reflexive_closure(const WindowConfig&) {
  VerificationReport rep;
  constexpr Nat kBound = 5;
  std::vector<std::vector<std::size_t>> labels;
  std::vector<std::size_t> cur;
  partitions(kBound + 1, cur, 0, labels);

  std::size_t relations = 0, subrelations = 0, symmetric_ok = 0;
  std::size_t tight_found = 0;
  std::optional<NodePair> bad;
  std::string bad_detail;
  for (const auto& lab : labels) {
    std::map<std::size_t, std::size_t> sizes;
    for (auto b : lab) ++sizes[b];
    const std::size_t largest = std::max_element(sizes.begin(), sizes.end(), [](auto a, auto b) {
                                  return a.second < b.second;
                                })->second;
    const FiniteRelation e = FiniteRelation::from_predicate(kBound, [&](Nat i, Nat j) { return lab[i] == lab[j]; });
    std::vector<NodePair> off;
    for (const auto& p : e.pairs())
      if (p.first != p.second) off.push_back(p);
    if (largest <= 2) {
      ++relations;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()) && !bad; ++mask) {
        FiniteRelation r = FiniteRelation::identity(kBound);
        for (std::size_t b = 0; b < off.size(); ++b)
          if (mask >> b & 1u) r.insert(off[b]);
        ++subrelations;
        const FiniteRelation tc = transitive_closure_bf(r);
        if (!(tc == r)) {
          bad = first_outside(tc, r);
          bad_detail = "tc r adds a pair";
        } else if (is_symmetric(r)) {
          if (is_equivalence(r)) ++symmetric_ok;
          else {
            bad = off.empty() ? NodePair{0, 0} : off.front();
            bad_detail = "symmetric reflexive r is not an equivalence relation";
          }
        }
      }
    } else if (largest == 3 && tight_found == 0) {
      // A path a-b-c inside a three-element class closes to a-c.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
        FiniteRelation r = FiniteRelation::identity(kBound);
        for (std::size_t b = 0; b < off.size(); ++b)
          if (mask >> b & 1u) r.insert(off[b]);
        if (!(transitive_closure_bf(r) == r)) {
          ++tight_found;
          break;
        }
      }
    }
  }
  if (bad) rep.add(fail("reflexive-closure/reflexive-closed", *bad, bad_detail));
  else
    rep.add(pass("reflexive-closure/reflexive-closed",
                 std::to_string(relations) + " relations, " + std::to_string(subrelations) +
                     " reflexive subrelations, " + std::to_string(symmetric_ok) + " symmetric ones are equivalences"));
  rep.add(tight_found ? pass("reflexive-closure/size3-tightness", "found r with tc r != r in a 3-element class")
                      : inconclusive("reflexive-closure/size3-tightness", "no counterexample found"));
  return rep;
}

// ---- join of two FC relations ----

VerificationReport verify_power_join(const InjectiveStream& eta, const std::function<bool(Nat)>& in_a,
                                 const WindowConfig& w) {
  VerificationReport rep;
  const Nat N = w.n;
  const std::string base = "power-join" + eta.label();
  const auto [F, G] = power_pair_relations(eta);
  const FiniteRelation Fw = materialize(F, N), Gw = materialize(G, N);

  rep.add(equivalence_laws(join_names(base, "F-equivalence"), Fw));
  rep.add(equivalence_laws(join_names(base, "G-equivalence"), Gw));
  {
    std::optional<NodePair> big;
    for (const auto* r : {&Fw, &Gw})
      for (const auto& blk : classes(*r).blocks)
        if (blk.size() > 2 && !big) big = NodePair{blk[0], blk[1]};
    rep.add(big ? fail(join_names(base, "classes-at-most-2"), *big, "class with more than two elements")
                : pass(join_names(base, "classes-at-most-2")));
  }

  const FiniteRelation J = lattice_join(Fw, Gw);
  // Expected blocks: {2n, 3^η(n), 5^η(n)} cut down to what the window links.
  std::map<Nat, Nat> rep_of;  // node -> block id (least element)
  for (Index n = 1; 2 * n <= N; ++n) {
    const auto e = eta(n);
    if (!e) continue;
    std::vector<Nat> blk{2 * n};
    for (Nat b : {Nat{3}, Nat{5}})
      if (const auto v = checked_pow(b, *e); v && *v <= N) blk.push_back(*v);
    const Nat id = *std::min_element(blk.begin(), blk.end());
    for (Nat x : blk) rep_of[x] = id;
  }
  Partition expected;
  {
    std::map<Nat, std::vector<Nat>> grouped;
    for (Nat x = 0; x <= N; ++x) grouped[rep_of.count(x) ? rep_of[x] : x].push_back(x);
    for (auto& [_, blk] : grouped) {
      std::sort(blk.begin(), blk.end());
      expected.blocks.push_back(blk);
    }
    std::sort(expected.blocks.begin(), expected.blocks.end());
  }
  const Partition got = classes(J);
  if (got == expected) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& blk : got.blocks)
      if (blk.size() > 1) {
        os << (shown++ ? " " : "") << '{';
        for (std::size_t k = 0; k < blk.size(); ++k) os << (k ? "," : "") << blk[k];
        os << '}';
      }
    rep.add(pass(join_names(base, "join-classes"), os.str()));
  } else {
    NodePair at{0, 0};
    for (std::size_t k = 0; k < std::min(got.blocks.size(), expected.blocks.size()); ++k)
      if (got.blocks[k] != expected.blocks[k]) {
        at = {got.blocks[k].front(), got.blocks[k].back()};
        break;
      }
    rep.add(fail(join_names(base, "join-classes"), at, "windowed join classes differ from the triples"));
  }

  rep.add(inclusion(join_names(base, "join-within-truth"), J, materialize(power_join(eta), N)));

  // F G F ∪ G F G = F G ∪ G F = F G F on the window.
  {
    const FiniteRelation FG = compose(Fw, Gw), GF = compose(Gw, Fw);
    const FiniteRelation FGF = compose(FG, Fw), GFG = compose(GF, Gw);
    const FiniteRelation lhs = unite(FGF, GFG), mid = unite(FG, GF);
    std::optional<NodePair> diff;
    for (const auto& pr : {std::pair{&lhs, &mid}, std::pair{&mid, &FGF}, std::pair{&FGF, &J}})
      if (!diff) {
        if (auto p = first_outside(*pr.first, *pr.second)) diff = p;
        else if (auto q = first_outside(*pr.second, *pr.first)) diff = q;
      }
    rep.add(diff ? fail(join_names(base, "composition-identity"), *diff, "identity broken on the window")
                 : pass(join_names(base, "composition-identity"), "FGF u GFG = FG u GF = FGF = tc(F u G)"));
  }

  // n ∈ A ⟺ (3ⁿ, 5ⁿ) joined, for n >= 1 with 5ⁿ in the window.
  {
    std::size_t checkable = 0;
    std::optional<NodePair> wrong;
    std::ostringstream os;
    for (Nat n = 1;; ++n) {
      const auto p3 = checked_pow(3, n), p5 = checked_pow(5, n);
      if (!p5 || *p5 > N) break;
      ++checkable;
      const bool joined = J.contains(*p3, *p5);
      os << n << (in_a(n) ? " in A" : " not in A") << (joined ? ", joined; " : ", apart; ");
      if (joined != in_a(n)) wrong = NodePair{*p3, *p5};
    }
    const std::string cname = join_names(base, "reduction");
    if (wrong) rep.add(fail(cname, *wrong, os.str()));
    else if (!checkable) rep.add(inconclusive(cname, "window holds no 5^n with n >= 1"));
    else rep.add(pass(cname, os.str()));
  }

  // η enumerates A without repetitions on its prefix.
  {
    std::optional<NodePair> bad;
    Index n = 1;
    for (; n <= 1024 && eta(n); ++n)
      if (!in_a(*eta(n))) bad = NodePair{n, *eta(n)};
    if (!eta.injective_on(n)) bad = NodePair{0, 0};
    rep.add(bad ? fail(join_names(base, "eta-enumerates-A"), *bad) : pass(join_names(base, "eta-enumerates-A")));
  }
  return rep;
}

// ---- reflexive generators of a pair-class relation ----

VerificationReport verify_pair_classes(const std::function<bool(Nat)>& in_a, const WindowConfig& w) {
  VerificationReport rep;
  const Nat N = w.n;
  const std::string base = "pair-classes";
  const GroundTruth g = pair_class_relation(in_a, "pair-classes");
  const FiniteRelation E = materialize(g, N);
  const FiniteRelation I = FiniteRelation::identity(N);

  rep.add(equivalence_laws(join_names(base, "equivalence"), E));
  {
    std::optional<NodePair> bad;
    for (const auto& blk : classes(E).blocks) {
      if (blk.size() == 1) {
        const Nat x = blk[0];
        const Nat lo = x - x % 2;
        if (in_a(lo / 2) && lo + 1 <= N) bad = NodePair{x, x};
      } else if (!(blk.size() == 2 && blk[0] % 2 == 0 && blk[1] == blk[0] + 1 && in_a(blk[0] / 2))) {
        bad = NodePair{blk.front(), blk.back()};
      }
      if (bad) break;
    }
    rep.add(bad ? fail(join_names(base, "classes"), *bad, "class is neither a singleton nor {2n, 2n+1} with n in A")
                : pass(join_names(base, "classes")));
  }

  std::vector<NodePair> off;
  for (const auto& p : E.pairs())
    if (p.first < p.second) off.push_back(p);

  rep.add(transitive_closure_bf(E) == E ? pass(join_names(base, "tc-E")) : fail(join_names(base, "tc-E"), {0, 0}));
  {
    const bool closed = transitive_closure_bf(I) == I;
    const bool differs = !(I == E);
    if (closed && (differs || off.empty()))
      rep.add(pass(join_names(base, "tc-I"), differs ? "tc I = I != E" : "E = I on this window"));
    else
      rep.add(fail(join_names(base, "tc-I"), off.empty() ? NodePair{0, 0} : off.front()));
  }
  {
    std::size_t trials = 0;
    std::optional<NodePair> bad;
    for (std::uint64_t seed : w.seeds) {
      std::mt19937_64 rng(seed);
      for (int t = 0; t < 50 && !bad; ++t, ++trials) {
        FiniteRelation r = I;
        std::size_t kept = 0;
        for (const auto& p : off)
          if (rng() % 2) {
            r.insert(p);
            r.insert(inverse(p));
            ++kept;
          }
        const FiniteRelation tc = transitive_closure_bf(r);
        if (!(tc == r)) bad = first_outside(tc, r);
        else if ((tc == E) != (kept == off.size())) bad = off.empty() ? NodePair{0, 0} : off.front();
      }
    }
    rep.add(bad ? fail(join_names(base, "tc-random"), *bad, "tc r != r, or tc r = E with r != E")
                : pass(join_names(base, "tc-random"), std::to_string(trials) + " random reflexive symmetric r"));
  }
  return rep;
}

// ---- drivers ----

namespace {

bool is_ic(const RelationSpec& spec) {
  return spec.kind == "mod" || (spec.kind == "partition" && spec.classes.empty() && spec.modulus > 0);
}

}  // namespace

VerificationReport verify_relation(const RelationSpec& spec, const WindowConfig& w) {
  w.validate();
  VerificationReport rep;
  const std::string name = spec.name();
  if (spec.kind == "prop23") {
    const auto eta = InjectiveStream::from_list(spec.eta);
    const std::set<Nat> a(spec.eta.begin(), spec.eta.end());
    rep.merge(verify_power_join(eta, [a](Nat n) { return a.count(n) > 0; }, w));
    rep.canonicalize();
    return rep;
  }
  if (spec.kind == "prop24") {
    const std::set<Nat> a(spec.a.begin(), spec.a.end());
    rep.merge(verify_pair_classes([a](Nat n) { return a.count(n) > 0; }, w));
    rep.canonicalize();
    return rep;
  }

  const GroundTruth truth = ground_truth(spec);
  RelationSpec plain = spec;
  plain.fair = false;
  const Enumerator nu = enumerator(plain);
  const Enumerator fair = fair_enumeration(nu);

  rep.merge(verify_coding(name + "/fair", fair, 200, w.fuel));
  rep.merge(verify_coding(name + "/plain", nu, 200, w.fuel));
  DerivedContext ctx{CodingTable(nu, w.fuel)};
  rep.merge(verify_composition(name, truth, ctx, w));
  if (!is_ic(spec)) {
    rep.canonicalize();
    return rep;
  }
  rep.merge(verify_walk_shape(name, ctx, w));
  rep.merge(verify_join_generators(name, truth, MergedCoding(fair, w.fuel), w));
  rep.canonicalize();
  return rep;
}

VerificationReport run_all(const WindowConfig& w) {
  w.validate();
  VerificationReport rep;
  for (const auto& spec : builtin_ic_relations()) rep.merge(verify_relation(spec, w));
  rep.merge(verify_reflexive_closure(w));
  RelationSpec p23;
  p23.kind = "prop23";
  p23.eta = {2, 3, 7};
  WindowConfig w23 = w;
  w23.n = std::max<Nat>(w.n, 250);
  rep.merge(verify_relation(p23, w23));
  RelationSpec p24;
  p24.kind = "prop24";
  p24.a = {3};
  rep.merge(verify_relation(p24, w));
  rep.canonicalize();
  return rep;
}

}  // namespace ceer
