// ceer: generate relations, build codings, decide derived relations and run
// the verification suite from the command line.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ceer/coding.hpp"
#include "ceer/derived.hpp"
#include "ceer/errors.hpp"
#include "ceer/example_relations.hpp"
#include "ceer/harness.hpp"
#include "ceer/relation.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kFullRelation = R"({"kind":"mod","k":1,"sweep":"dyadic"})";

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kExhausted = 3 };

std::uint64_t default_fuel() {
  if (const char* env = std::getenv("CEER_FUEL")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ceer::SpecError(std::string("CEER_FUEL must be a positive integer, got '") + env + "'");
  }
  return ceer::kDefaultFuel;
}

nlohmann::json manifest(const std::string& command_line, const ceer::RelationSpec* spec, std::uint64_t window,
                        std::uint64_t fuel, const std::vector<std::uint64_t>& seeds) {
  return {{"command", command_line},
          {"spec", spec ? spec->to_json() : nlohmann::json(nullptr)},
          {"window", window},
          {"fuel", fuel},
          {"seeds", seeds},
          {"version", kVersion}};
}

}  // namespace

int main(int argc, char** argv) {
  std::string command_line;
  command_line = "ceer";
  for (int k = 1; k < argc; ++k) command_line += " " + std::string(argv[k]);

  CLI::App app{"Computably enumerable equivalence relations: codings, derived deciders, verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string rel_text, spec_text = kFullRelation, derived_name;
  std::uint64_t window = 16, n_entries = 10, fuel = 0;
  std::vector<std::uint64_t> seeds{1};
  ceer::Nat i = 0, j = 0;
  bool json = false, merged = false, formula = false;

  auto* gen = app.add_subcommand("gen", "Materialize a relation on [0,window]^2 as JSON");
  gen->add_option("--rel", rel_text, "Relation spec (JSON or shorthand like mod:3)")->required();
  gen->add_option("--window", window, "Window bound");
  gen->add_flag("--json", json, "Wrap output with the run manifest");

  auto* code = app.add_subcommand("code", "Build a coding table");
  code->add_option("--rel", rel_text, "Relation spec")->required();
  code->add_option("--n", n_entries, "Number of entries");
  code->add_option("--fuel", fuel, "Max enumeration queries per step (default 10^6 or CEER_FUEL)");
  code->add_flag("--merged", merged, "Build the merged double coding of the fair enumeration");
  code->add_flag("--json", json, "Wrap output with the run manifest");

  auto* decide = app.add_subcommand("decide", "Decide a derived relation at (i,j)");
  decide->add_option("--rel", derived_name, "Derived relation: R S T H F J G")->required();
  decide->add_option("--spec", spec_text, "Source relation spec (default: full relation, dyadic sweep)");
  decide->add_option("i", i)->required();
  decide->add_option("j", j)->required();
  decide->add_option("--fuel", fuel, "Max enumeration queries per step");
  decide->add_flag("--formula", formula, "Decide F by the literal coded-walk search (i+j <= 4)");
  decide->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--rel", rel_text, "Relation spec (default: every built-in check)");
  verify->add_option("--window", window, "Window bound");
  verify->add_option("--fuel", fuel, "Max enumeration queries per step");
  verify->add_option("--seed", seeds, "Sampling seeds");
  verify->add_flag("--json", json, "JSON report");

  auto* dot = app.add_subcommand("export-dot", "Write a windowed relation as Graphviz");
  dot->add_option("--rel", rel_text, "Relation spec")->required();
  dot->add_option("--window", window, "Window bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (fuel == 0) fuel = default_fuel();

    if (gen->parsed() || dot->parsed()) {
      const auto spec = ceer::RelationSpec::parse_text(rel_text);
      const auto rel = ceer::materialize(ceer::ground_truth(spec), window);
      if (dot->parsed()) {
        std::cout << ceer::to_dot(rel, spec.name());
      } else if (json) {
        std::cout << nlohmann::json{{"manifest", manifest(command_line, &spec, window, 0, {})},
                                    {"relation", ceer::to_json(rel)}}.dump(2)
                  << '\n';
      } else {
        std::cout << ceer::to_json(rel).dump() << '\n';
      }
      return kOk;
    }

    if (code->parsed()) {
      const auto spec = ceer::RelationSpec::parse_text(rel_text);
      const auto nu = ceer::enumerator(spec);
      nlohmann::json table;
      if (merged) {
        ceer::MergedCoding m(spec.fair ? nu : ceer::fair_enumeration(nu), fuel);
        m.extend_to(n_entries);
        table = ceer::to_json(m);
      } else {
        ceer::CodingTable t(nu, fuel);
        t.extend_to(n_entries);
        table = ceer::to_json(t);
      }
      if (json)
        std::cout << nlohmann::json{{"manifest", manifest(command_line, &spec, n_entries, fuel, {})}, {"table", table}}.dump(2)
                  << '\n';
      else
        std::cout << table.dump() << '\n';
      return kOk;
    }

    if (decide->parsed()) {
      const auto rel = ceer::parse_derived_rel(derived_name);
      const auto spec = ceer::RelationSpec::parse_text(spec_text);
      const auto nu = ceer::enumerator(spec);
      const bool needs_merged = rel == ceer::DerivedRel::J || rel == ceer::DerivedRel::G;
      ceer::DerivedContext ctx = needs_merged
                                     ? ceer::DerivedContext(ceer::MergedCoding(spec.fair ? nu : ceer::fair_enumeration(nu), fuel))
                                     : ceer::DerivedContext(ceer::CodingTable(nu, fuel));
      ceer::Decision d;
      if (formula) {
        if (rel != ceer::DerivedRel::F) throw ceer::SpecError("--formula applies to F only");
        d.holds = ctx.in_F_formula(i, j);
        d.certificate = "literal search over codes <= beta(" + std::to_string(std::max<ceer::Nat>(i + j, 2)) + ")";
      } else {
        d = ctx.decide(rel, i, j);
      }
      if (json) {
        std::cout << nlohmann::json{{"manifest", manifest(command_line, &spec, 0, fuel, {})},
                                    {"relation", ceer::to_string(rel)},
                                    {"i", i},
                                    {"j", j},
                                    {"holds", d.holds},
                                    {"certificate", d.certificate}}.dump(2)
                  << '\n';
      } else {
        std::cout << (d.holds ? "true" : "false") << '\n' << d.certificate << '\n';
      }
      return kOk;
    }

    if (verify->parsed()) {
      ceer::WindowConfig w{window, fuel, seeds};
      w.validate();
      std::optional<ceer::RelationSpec> spec;
      ceer::VerificationReport rep;
      if (rel_text.empty()) {
        rep = ceer::run_all(w);
      } else {
        spec = ceer::RelationSpec::parse_text(rel_text);
        rep = ceer::verify_relation(*spec, w);
      }
      if (json) {
        nlohmann::json out = rep.to_json(w);
        out["manifest"] = manifest(command_line, spec ? &*spec : nullptr, window, fuel, seeds);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << rep.to_text();
      }
      return rep.any_fail() ? kFailure : kOk;
    }
  } catch (const ceer::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ceer::FuelExhausted& e) {
    std::cerr << "error: " << e.what() << '\n'
              << "note: a coding exists exactly when every class is infinite; exhaustion means either the relation "
                 "has a finite class or the fuel is too small\n";
    return kExhausted;
  } catch (const ceer::ScaleExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
