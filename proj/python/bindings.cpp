// Python module _ceer: thin wrappers over the C++ core. Structured results
// cross the boundary as JSON text and are decoded by the ceer package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ceer/coding.hpp"
#include "ceer/derived.hpp"
#include "ceer/errors.hpp"
#include "ceer/example_relations.hpp"
#include "ceer/harness.hpp"
#include "ceer/pairing.hpp"
#include "ceer/seq_codec.hpp"

namespace py = pybind11;
using namespace ceer;

namespace {

py::int_ to_py(const BigNat& z) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.str().c_str(), nullptr, 10)));
}

py::tuple as_tuple(NodePair p) { return py::make_tuple(p.first, p.second); }

BigNat from_py(const py::int_& z) {
  if (z < py::int_(0)) throw SpecError("codes are natural numbers");
  return BigNat(py::str(z).cast<std::string>());
}

Enumerator source_enumerator(const RelationSpec& spec, bool merged) {
  const Enumerator nu = enumerator(spec);
  return merged && !spec.fair ? fair_enumeration(nu) : nu;
}

std::string coding_json(const std::string& spec_text, std::size_t n, std::uint64_t fuel, bool merged) {
  const auto spec = RelationSpec::parse_text(spec_text);
  if (merged) {
    MergedCoding m(source_enumerator(spec, true), fuel);
    m.extend_to(n);
    return to_json(m).dump();
  }
  CodingTable t(enumerator(spec), fuel);
  t.extend_to(n);
  return to_json(t).dump();
}

py::tuple decide(const std::string& rel, Nat i, Nat j, const std::string& spec_text, std::uint64_t fuel) {
  const DerivedRel r = parse_derived_rel(rel);
  const auto spec = RelationSpec::parse_text(spec_text);
  const bool merged = r == DerivedRel::J || r == DerivedRel::G;
  DerivedContext ctx = merged ? DerivedContext(MergedCoding(source_enumerator(spec, true), fuel))
                              : DerivedContext(CodingTable(enumerator(spec), fuel));
  const Decision d = ctx.decide(r, i, j);
  return py::make_tuple(d.holds, d.certificate);
}

std::string verify_json(const std::optional<std::string>& spec_text, Nat window, std::uint64_t fuel,
                        std::vector<std::uint64_t> seeds) {
  WindowConfig w{window, fuel, std::move(seeds)};
  w.validate();
  const auto rep = spec_text ? verify_relation(RelationSpec::parse_text(*spec_text), w) : run_all(w);
  return rep.to_json(w).dump();
}

std::string generate_json(const std::string& spec_text, Nat window) {
  return to_json(materialize(ground_truth(RelationSpec::parse_text(spec_text)), window)).dump();
}

}  // namespace

PYBIND11_MODULE(_ceer, m) {
  m.doc() = "Coded enumerations of equivalence relations";

  // Later registrations are tried first, so subclasses go after the base.
  const auto& base = py::register_exception<CeerError>(m, "CeerError", PyExc_RuntimeError);
  py::register_exception<SpecError>(m, "SpecError", base.ptr());
  py::register_exception<FuelExhausted>(m, "FuelExhausted", base.ptr());
  py::register_exception<ScaleExceeded>(m, "ScaleExceeded", base.ptr());
  py::register_exception<NoWalk>(m, "NoWalk", base.ptr());

  m.attr("DEFAULT_FUEL") = kDefaultFuel;

  m.def("encode_seq", [](const NzSeq& s) { return to_py(encode_seq(s)); }, py::arg("seq"));
  m.def("decode_seq", [](const py::int_& z, std::uint64_t i) { return to_py(decode_seq_big(from_py(z), i)); },
        py::arg("z"), py::arg("i"));
  m.def("decode_all", [](const py::int_& z) { return decode_all(from_py(z)); }, py::arg("z"));
  m.def("is_valid_code", [](const py::int_& z) { return is_valid_code(from_py(z)); }, py::arg("z"));
  m.def("beta", [](std::uint64_t k) { return to_py(beta(k)); }, py::arg("k"));

  m.def("dyadic_pair", &dyadic_pair, py::arg("m"), py::arg("n"));
  m.def("dyadic_unpair", [](Index c) { return as_tuple(dyadic_unpair(c)); }, py::arg("c"));
  m.def("cantor_pair", &cantor_pair, py::arg("x"), py::arg("y"));
  m.def("cantor_unpair", [](Index c) { return as_tuple(cantor_unpair(c)); }, py::arg("c"));

  m.def("coding_json", &coding_json, py::arg("spec"), py::arg("n"), py::arg("fuel") = kDefaultFuel,
        py::arg("merged") = false);
  m.def("decide", &decide, py::arg("rel"), py::arg("i"), py::arg("j"),
        py::arg("spec") = R"({"kind":"mod","k":1,"sweep":"dyadic"})", py::arg("fuel") = kDefaultFuel);
  m.def("verify_json", &verify_json, py::arg("spec") = std::nullopt, py::arg("window") = Nat{16},
        py::arg("fuel") = kDefaultFuel, py::arg("seeds") = std::vector<std::uint64_t>{1});
  m.def("generate_json", &generate_json, py::arg("spec"), py::arg("window"));
  m.def("spec_name", [](const std::string& s) { return RelationSpec::parse_text(s).name(); }, py::arg("spec"));
}
