#include "ceer/relation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ceer/errors.hpp"

namespace ceer {

FiniteRelation::FiniteRelation(Nat bound, std::initializer_list<NodePair> pairs) : bound_(bound) {
  for (const auto& p : pairs) insert(p);
}

FiniteRelation::FiniteRelation(Nat bound, const std::vector<NodePair>& pairs) : bound_(bound) {
  for (const auto& p : pairs) insert(p);
}

FiniteRelation FiniteRelation::from_predicate(Nat bound, const std::function<bool(Nat, Nat)>& pred) {
  FiniteRelation r(bound);
  for (Nat i = 0; i <= bound; ++i)
    for (Nat j = 0; j <= bound; ++j)
      if (pred(i, j)) r.pairs_.insert({i, j});
  return r;
}

FiniteRelation FiniteRelation::identity(Nat bound) {
  FiniteRelation r(bound);
  for (Nat i = 0; i <= bound; ++i) r.pairs_.insert({i, i});
  return r;
}

FiniteRelation FiniteRelation::full(Nat bound) {
  return from_predicate(bound, [](Nat, Nat) { return true; });
}

void FiniteRelation::insert(Nat i, Nat j) {
  if (i > bound_ || j > bound_) {
    std::ostringstream os;
    os << "pair " << NodePair{i, j} << " outside window [0," << bound_ << "]";
    throw SpecError(os.str());
  }
  pairs_.insert({i, j});
}

bool FiniteRelation::includes(const FiniteRelation& other) const {
  return std::includes(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end());
}

namespace {

void require_same_bound(const FiniteRelation& a, const FiniteRelation& b, const char* op) {
  if (a.bound() != b.bound())
    throw SpecError(std::string(op) + ": window bounds differ (" + std::to_string(a.bound()) +
                    " vs " + std::to_string(b.bound()) + ")");
}

std::map<Nat, std::vector<Nat>> successors(const FiniteRelation& a) {
  std::map<Nat, std::vector<Nat>> out;
  for (const auto& [i, j] : a.pairs()) out[i].push_back(j);
  return out;
}

}  // namespace

FiniteRelation compose(const FiniteRelation& a, const FiniteRelation& b) {
  require_same_bound(a, b, "compose");
  const auto next = successors(b);
  FiniteRelation out(a.bound());
  for (const auto& [i, j] : a.pairs()) {
    auto it = next.find(j);
    if (it == next.end()) continue;
    for (Nat k : it->second) out.insert(i, k);
  }
  return out;
}

FiniteRelation converse(const FiniteRelation& a) {
  FiniteRelation out(a.bound());
  for (const auto& p : a.pairs()) out.insert(inverse(p));
  return out;
}

FiniteRelation unite(const FiniteRelation& a, const FiniteRelation& b) {
  require_same_bound(a, b, "unite");
  FiniteRelation out = a;
  for (const auto& p : b.pairs()) out.insert(p);
  return out;
}

FiniteRelation intersect(const FiniteRelation& a, const FiniteRelation& b) {
  require_same_bound(a, b, "intersect");
  FiniteRelation out(a.bound());
  for (const auto& p : a.pairs())
    if (b.contains(p)) out.insert(p);
  return out;
}

FiniteRelation transitive_closure_bf(const FiniteRelation& a) {
  // closure_{k+1} = closure_k ∪ closure_k ∘ a, i.e. a ∪ a² ∪ ... ∪ a^{k+1}
  FiniteRelation closure = a;
  for (;;) {
    FiniteRelation next = unite(closure, compose(closure, a));
    if (next.size() == closure.size()) return closure;
    closure = std::move(next);
  }
}

FiniteRelation lattice_join(const FiniteRelation& a, const FiniteRelation& b) {
  require_same_bound(a, b, "lattice_join");
  if (!is_equivalence(a)) throw SpecError("lattice_join: left operand is not an equivalence relation");
  if (!is_equivalence(b)) throw SpecError("lattice_join: right operand is not an equivalence relation");
  return transitive_closure_bf(unite(a, b));
}

bool is_reflexive_on(const FiniteRelation& a, const std::vector<Nat>& domain) {
  return std::all_of(domain.begin(), domain.end(), [&](Nat i) { return a.contains(i, i); });
}

bool is_symmetric(const FiniteRelation& a) {
  return std::all_of(a.pairs().begin(), a.pairs().end(),
                     [&](const NodePair& p) { return a.contains(inverse(p)); });
}

bool is_transitive(const FiniteRelation& a) {
  const auto next = successors(a);
  for (const auto& [i, j] : a.pairs()) {
    auto it = next.find(j);
    if (it == next.end()) continue;
    for (Nat k : it->second)
      if (!a.contains(i, k)) return false;
  }
  return true;
}

bool is_equivalence(const FiniteRelation& a, const std::vector<Nat>& domain) {
  if (!is_reflexive_on(a, domain)) return false;
  // Symmetry and transitivity restricted to the domain.
  std::vector<Nat> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  auto in_domain = [&](Nat x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  FiniteRelation restricted(a.bound());
  for (const auto& p : a.pairs())
    if (in_domain(p.first) && in_domain(p.second)) restricted.insert(p);
  return is_symmetric(restricted) && is_transitive(restricted);
}

bool is_equivalence(const FiniteRelation& a) { return is_equivalence(a, window_nodes(a.bound())); }

std::vector<Nat> field(const FiniteRelation& a) {
  std::set<Nat> nodes;
  for (const auto& [i, j] : a.pairs()) {
    nodes.insert(i);
    nodes.insert(j);
  }
  return {nodes.begin(), nodes.end()};
}

std::vector<Nat> field_via_diagonal(const FiniteRelation& a) {
  std::vector<Nat> out;
  for (const auto& [i, j] : a.pairs())
    if (i == j) out.push_back(i);
  return out;
}

std::vector<Nat> class_of(const FiniteRelation& a, Nat i) {
  std::vector<Nat> out;
  for (auto it = a.pairs().lower_bound({i, 0}); it != a.pairs().end() && it->first == i; ++it)
    out.push_back(it->second);
  return out;
}

Partition classes(const FiniteRelation& a) {
  Partition p;
  std::set<Nat> seen;
  for (Nat i : field(a)) {
    if (seen.contains(i)) continue;
    auto block = class_of(a, i);
    // i sits in the field through some (j,i); symmetry puts it in its own class.
    if (block.empty()) block.push_back(i);
    for (Nat j : block) seen.insert(j);
    seen.insert(i);
    p.blocks.push_back(std::move(block));
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

std::vector<Nat> window_nodes(Nat bound) {
  std::vector<Nat> out(bound + 1);
  for (Nat i = 0; i <= bound; ++i) out[i] = i;
  return out;
}

nlohmann::json to_json(const FiniteRelation& a) {
  auto pairs = nlohmann::json::array();
  for (const auto& [i, j] : a.pairs()) pairs.push_back({i, j});
  return {{"bound", a.bound()}, {"pairs", std::move(pairs)}};
}

FiniteRelation relation_from_json(const nlohmann::json& j) {
  try {
    FiniteRelation r(j.at("bound").get<Nat>());
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw SpecError("relation pair must be [i, j]");
      r.insert(p[0].get<Nat>(), p[1].get<Nat>());
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed relation JSON: ") + e.what());
  }
}

std::string to_dot(const FiniteRelation& a, const std::string& name) {
  const bool undirected = is_symmetric(a);
  std::ostringstream os;
  os << (undirected ? "graph " : "digraph ") << name << " {\n";
  for (Nat i : field(a)) os << "  " << i << ";\n";
  for (const auto& [i, j] : a.pairs()) {
    if (i == j) continue;
    if (undirected) {
      if (i < j) os << "  " << i << " -- " << j << ";\n";
    } else {
      os << "  " << i << " -> " << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ceer
