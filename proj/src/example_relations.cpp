#include "ceer/example_relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ceer/coding.hpp"
#include "ceer/errors.hpp"

namespace ceer {

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::IC: return "IC";
    case ClassKind::FC: return "FC";
    case ClassKind::Mixed: return "mixed";
  }
  return "?";
}

ExampleRelation mod_relation(Nat k, Sweep sweep) {
  if (k == 0) throw SpecError("mod_relation: k must be >= 1");
  GroundTruth g{[k](Nat i, Nat j) { return i % k == j % k; }, ClassKind::IC,
                "mod" + std::to_string(k)};
  Enumerator nu(
      [k, sweep](Index c) {
        const NodePair p = sweep_unpair(sweep, c);
        return p.first % k == p.second % k ? p : NodePair{p.first, p.first};
      },
      g.label + "/" + to_string(sweep));
  return {std::move(g), std::move(nu)};
}

Enumerator enumerator_from_decider(const GroundTruth& g, Nat filler, Sweep sweep) {
  return Enumerator(
      [g, filler, sweep](Index c) {
        const NodePair p = sweep_unpair(sweep, c);
        return g(p.first, p.second) ? p : NodePair{filler, filler};
      },
      g.label + "/" + to_string(sweep));
}

// ---- InjectiveStream ----

InjectiveStream::InjectiveStream(std::function<std::optional<Nat>(Index)> fn, std::string label)
    : fn_(std::move(fn)), label_(std::move(label)) {}

InjectiveStream InjectiveStream::from_list(std::vector<Nat> values) {
  std::set<Nat> seen;
  for (Nat v : values)
    if (!seen.insert(v).second) throw SpecError("eta repeats the value " + std::to_string(v));
  std::ostringstream label;
  label << '(';
  for (std::size_t k = 0; k < values.size(); ++k) label << (k ? "," : "") << values[k];
  label << ')';
  return InjectiveStream(
      [values](Index n) -> std::optional<Nat> {
        if (n == 0 || n > values.size()) return std::nullopt;
        return values[n - 1];
      },
      label.str());
}

bool InjectiveStream::injective_on(Index prefix) const {
  std::set<Nat> seen;
  for (Index n = 1; n <= prefix; ++n)
    if (const auto v = fn_(n); v && !seen.insert(*v).second) return false;
  return true;
}

bool InjectiveStream::enumerates(Nat x, Index limit) const {
  for (Index n = 1; n <= limit; ++n)
    if (fn_(n) == x) return true;
  return false;
}

std::optional<Nat> checked_pow(Nat base, Nat exp) {
  Nat r = 1;
  for (Nat e = 0; e < exp; ++e) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

namespace {

// i = j, or {i,j} = {2n, base^η(n)} for some 1 <= n <= max{i,j}.
GroundTruth power_pairing(InjectiveStream eta, Nat base, std::string label) {
  auto linked = [eta, base](Nat even, Nat other) {
    if (even == 0 || even % 2 != 0) return false;
    const auto e = eta(even / 2);
    if (!e) return false;
    return checked_pow(base, *e) == other;
  };
  return {[linked](Nat i, Nat j) { return i == j || linked(i, j) || linked(j, i); }, ClassKind::FC,
          std::move(label)};
}

// Position n >= 1 of the class containing x, if x is 2n, 3^η(n) or 5^η(n).
// Powers are matched by scanning η, which only semi-decides the join for an
// infinite stream; the scan stops at the end of a finite stream or at horizon.
std::optional<Index> power_join_anchor(const InjectiveStream& eta, Nat x, Index horizon) {
  if (x >= 2 && x % 2 == 0 && eta(x / 2)) return x / 2;
  for (Index n = 1; n <= horizon; ++n) {
    const auto e = eta(n);
    if (!e) break;
    if (checked_pow(3, *e) == x || checked_pow(5, *e) == x) return n;
  }
  return std::nullopt;
}

}  // namespace

std::pair<GroundTruth, GroundTruth> power_pair_relations(const InjectiveStream& eta) {
  return {power_pairing(eta, 3, "powerF" + eta.label()), power_pairing(eta, 5, "powerG" + eta.label())};
}

GroundTruth power_join(const InjectiveStream& eta) {
  return {[eta](Nat i, Nat j) {
            if (i == j) return true;
            const Index horizon = std::max<Index>(std::max(i, j), 1024);
            const auto a = power_join_anchor(eta, i, horizon);
            const auto b = power_join_anchor(eta, j, horizon);
            return a && b && *a == *b;
          },
          ClassKind::FC, "power-join" + eta.label()};
}

GroundTruth pair_class_relation(std::function<bool(Nat)> in_a, std::string label) {
  return {[in_a](Nat x, Nat y) {
            if (x == y) return true;
            const Nat lo = std::min(x, y), hi = std::max(x, y);
            return lo % 2 == 0 && hi - lo == 1 && in_a(lo / 2);
          },
          ClassKind::FC, std::move(label)};
}

GroundTruth partition_spec_relation(const std::vector<std::vector<Nat>>& classes, Nat modulus) {
  std::map<Nat, std::size_t> owner;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Nat x : classes[c]) {
      const auto [it, fresh] = owner.emplace(x, c);
      if (!fresh && it->second != c)
        throw SpecError("partition classes overlap at " + std::to_string(x));
    }
  std::ostringstream label;
  label << "partition(" << classes.size() << " classes, mod " << modulus << ")";
  return {[owner, modulus](Nat i, Nat j) {
            if (i == j) return true;
            const auto a = owner.find(i), b = owner.find(j);
            if (a != owner.end() || b != owner.end())
              return a != owner.end() && b != owner.end() && a->second == b->second;
            return modulus != 0 && i % modulus == j % modulus;
          },
          modulus == 0 ? ClassKind::FC : (owner.empty() ? ClassKind::IC : ClassKind::Mixed), label.str()};
}

FiniteRelation materialize(const GroundTruth& g, Nat window) {
  return FiniteRelation::from_predicate(window, [&g](Nat i, Nat j) { return g(i, j); });
}

// ---- relation specs ----

namespace {

template <class T>
T get_field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("relation spec field '") + key + "': " + e.what());
  }
}

std::vector<Nat> parse_list(const std::string& text) {
  std::vector<Nat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') throw SpecError("not a natural number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

RelationSpec RelationSpec::parse(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("relation spec must be a JSON object");
  RelationSpec s;
  s.kind = get_field<std::string>(j, "kind", "");
  static const std::set<std::string> known_keys = {"kind", "k", "sweep", "fair", "classes", "modulus", "eta", "part", "a"};
  for (const auto& [key, _] : j.items())
    if (!known_keys.count(key)) throw SpecError("unknown relation spec field '" + key + "'");
  if (s.kind == "mod") {
    s.k = get_field<Nat>(j, "k", 1);
    if (s.k == 0) throw SpecError("mod: k must be >= 1");
    const auto sw = get_field<std::string>(j, "sweep", "cantor");
    if (sw == "cantor") s.sweep = Sweep::Cantor;
    else if (sw == "dyadic") s.sweep = Sweep::Dyadic;
    else throw SpecError("mod: sweep must be 'cantor' or 'dyadic'");
    s.fair = get_field<bool>(j, "fair", false);
  } else if (s.kind == "partition") {
    s.classes = get_field<std::vector<std::vector<Nat>>>(j, "classes", {});
    s.modulus = get_field<Nat>(j, "modulus", 1);
    partition_spec_relation(s.classes, s.modulus);  // overlap check
  } else if (s.kind == "prop23") {
    s.eta = get_field<std::vector<Nat>>(j, "eta", {});
    InjectiveStream::from_list(s.eta);  // repetition check
    s.part = get_field<std::string>(j, "part", "join");
    if (s.part != "join" && s.part != "F" && s.part != "G")
      throw SpecError("prop23: part must be 'join', 'F' or 'G'");
  } else if (s.kind == "prop24") {
    s.a = get_field<std::vector<Nat>>(j, "a", {});
  } else {
    throw SpecError("unknown relation kind '" + s.kind + "' (expected mod, partition, prop23 or prop24)");
  }
  return s;
}

RelationSpec RelationSpec::parse_text(const std::string& text) {
  const auto colon = text.find(':');
  if (!text.empty() && text.front() != '{' && colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    const auto values = parse_list(rest);
    if (head == "mod") {
      if (values.size() != 1) throw SpecError("mod:K takes one number");
      return parse({{"kind", "mod"}, {"k", values[0]}});
    }
    if (head == "prop23") return parse({{"kind", "prop23"}, {"eta", values}});
    if (head == "prop24") return parse({{"kind", "prop24"}, {"a", values}});
    throw SpecError("unknown relation shorthand '" + head + "'");
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("relation spec is not valid JSON: ") + e.what());
  }
  return parse(j);
}

nlohmann::json RelationSpec::to_json() const {
  nlohmann::json j = {{"kind", kind}};
  if (kind == "mod") {
    j["k"] = k;
    j["sweep"] = ceer::to_string(sweep);
    j["fair"] = fair;
  } else if (kind == "partition") {
    j["classes"] = classes;
    j["modulus"] = modulus;
  } else if (kind == "prop23") {
    j["eta"] = eta;
    j["part"] = part;
  } else if (kind == "prop24") {
    j["a"] = a;
  }
  return j;
}

std::string RelationSpec::name() const {
  std::ostringstream os;
  if (kind == "mod") {
    os << "mod" << k;
    if (sweep == Sweep::Dyadic) os << "/dyadic";
    if (fair) os << "/fair";
  } else if (kind == "prop23") {
    os << "power-join";
    if (part != "join") os << part;
    os << InjectiveStream::from_list(eta).label();
  } else if (kind == "prop24") {
    os << "pair-classes{";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << '}';
  } else {
    os << ground_truth(*this).label;
  }
  return os.str();
}

GroundTruth ground_truth(const RelationSpec& spec) {
  if (spec.kind == "mod") return mod_relation(spec.k, spec.sweep).truth;
  if (spec.kind == "partition") return partition_spec_relation(spec.classes, spec.modulus);
  if (spec.kind == "prop23") {
    const auto eta = InjectiveStream::from_list(spec.eta);
    if (spec.part == "F") return power_pair_relations(eta).first;
    if (spec.part == "G") return power_pair_relations(eta).second;
    return power_join(eta);
  }
  if (spec.kind == "prop24") {
    const std::set<Nat> a(spec.a.begin(), spec.a.end());
    return pair_class_relation([a](Nat n) { return a.count(n) > 0; }, spec.name());
  }
  throw SpecError("unknown relation kind '" + spec.kind + "'");
}

Enumerator enumerator(const RelationSpec& spec) {
  Enumerator nu = spec.kind == "mod" ? mod_relation(spec.k, spec.sweep).nu
                                     : enumerator_from_decider(ground_truth(spec), 0, spec.sweep);
  return spec.fair ? fair_enumeration(nu) : nu;
}

std::vector<RelationSpec> builtin_ic_relations() {
  std::vector<RelationSpec> out;
  for (Nat k : {1, 2, 3, 5}) {
    RelationSpec s;
    s.kind = "mod";
    s.k = k;
    out.push_back(s);
  }
  return out;
}

}  // namespace ceer
