#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ilat/census.hpp"
#include "ilat/congruence.hpp"
#include "ilat/constructions.hpp"
#include "ilat/document.hpp"

namespace py = pybind11;
using namespace ilat;

namespace {

std::vector<std::vector<bool>> leq_matrix(const FiniteLattice& L) {
  std::vector<std::vector<bool>> rows(L.n, std::vector<bool>(L.n, false));
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) rows[x][y] = L.leq(x, y);
  return rows;
}

py::dict flags_dict(const ClassFlags& f) {
  py::dict d;
  d["i_lattice"] = f.i_lattice;
  d["bounded"] = f.bounded;
  d["pseudo_kleene"] = f.pseudo_kleene;
  d["de_morgan"] = f.de_morgan;
  d["kleene"] = f.kleene;
  d["paraorthomodular"] = f.paraorthomodular;
  d["bz"] = f.bz;
  d["antiortholattice"] = f.antiortholattice;
  d["orthomodular"] = f.orthomodular;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite lattices with involution: congruences, census, verification";

  py::register_exception<Error>(m, "IlatError");

  py::class_<FiniteLattice>(m, "FiniteLattice")
      .def_readonly("n", &FiniteLattice::n)
      .def_readonly("labels", &FiniteLattice::labels)
      .def_readonly("covers", &FiniteLattice::covers)
      .def("leq", &FiniteLattice::leq)
      .def("meet", &FiniteLattice::meet)
      .def("join", &FiniteLattice::join)
      .def("bottom", &FiniteLattice::bottom)
      .def("top", &FiniteLattice::top)
      .def("leq_matrix", &leq_matrix)
      .def("__repr__", [](const FiniteLattice& L) {
        return "<FiniteLattice n=" + std::to_string(L.n) + ">";
      });

  py::class_<InvolutionLattice>(m, "InvolutionLattice")
      .def_readonly("base", &InvolutionLattice::base)
      .def_readonly("involution", &InvolutionLattice::invol)
      .def_property_readonly("n", &InvolutionLattice::n)
      .def("inv", &InvolutionLattice::inv)
      .def("__repr__", [](const InvolutionLattice& L) {
        return "<InvolutionLattice n=" + std::to_string(L.n()) + ">";
      });

  py::class_<BZLattice>(m, "BZLattice")
      .def_readonly("base", &BZLattice::base)
      .def_readonly("brouwer", &BZLattice::brouwer)
      .def_property_readonly("n", &BZLattice::n)
      .def("has_trivial_brouwer", &BZLattice::has_trivial_brouwer);

  py::class_<Partition>(m, "Partition")
      .def("classes", &Partition::classes)
      .def("num_classes", &Partition::num_classes)
      .def("refines", &Partition::refines)
      .def(py::self == py::self)
      .def("__repr__", [](const Partition& p) {
        return "<Partition classes=" + std::to_string(p.num_classes()) + ">";
      });

  py::class_<CongruenceFamily>(m, "CongruenceFamily")
      .def_readonly("members", &CongruenceFamily::members)
      .def_property_readonly("kind",
                             [](const CongruenceFamily& f) { return family_kind_name(f.kind); })
      .def("count", &CongruenceFamily::count)
      .def("__len__", [](const CongruenceFamily& f) { return f.members.size(); });

  py::class_<CensusRecord>(m, "CensusRecord")
      .def_readonly("n", &CensusRecord::n)
      .def_readonly("lattice_class_count", &CensusRecord::lattice_class_count)
      .def_readonly("i_lattice_class_count", &CensusRecord::i_lattice_class_count)
      .def_readonly("histogram", &CensusRecord::histogram)
      .def_readonly("max_i_congruences", &CensusRecord::max_i_congruences)
      .def_readonly("extremal_witnesses", &CensusRecord::extremal_witnesses)
      .def_readonly("runner_up", &CensusRecord::runner_up);

  // construction
  m.def("validate", [](const std::vector<std::vector<bool>>& leq) { return validate(leq); });
  m.def("chain", &chain);
  m.def("boolean_cube", &boolean_cube);
  m.def("m3", &m3);
  m.def("n5", &n5);
  m.def("b6", &b6);
  m.def("ordinal_sum", &ordinal_sum);
  m.def("horizontal_sum",
        py::overload_cast<const InvolutionLattice&, const InvolutionLattice&>(&horizontal_sum));
  m.def("direct_product",
        py::overload_cast<const InvolutionLattice&, const InvolutionLattice&>(&direct_product));
  m.def("i_ordinal_triple", &i_ordinal_triple);
  m.def("catalog", [](const std::string& name, const std::vector<int>& params) {
    auto built = catalog_build(name, params);
    if (!built) throw Error(ErrorCode::ParseError, "unknown catalog name " + name);
    return *built;
  }, py::arg("name"), py::arg("params") = std::vector<int>{});

  // order-theoretic queries
  m.def("narrows", [](const FiniteLattice& L) {
    std::vector<std::pair<int, int>> out;
    for (auto& iv : narrows(L)) out.emplace_back(iv.lo, iv.hi);
    return out;
  });
  m.def("is_modular", &is_modular);
  m.def("is_distributive", &is_distributive);
  m.def("canonical_key", &canonical_form);
  m.def("canonical_i_key", &canonical_i_key);
  m.def("is_isomorphic", [](const FiniteLattice& L, const FiniteLattice& M) {
    return find_isomorphism(L, M).has_value();
  });
  m.def("involutions_of", &involutions_of);
  m.def("attach_involution", &attach_involution);
  m.def("trivial_brouwer", &trivial_brouwer);
  m.def("classify", [](const InvolutionLattice& L) { return flags_dict(classify(L)); });
  m.def("classify_bz", [](const BZLattice& L) { return flags_dict(classify(L)); });

  // congruences
  m.def("principal_congruence", &principal_congruence);
  m.def("i_principal_congruence", &i_principal_congruence);
  m.def("all_congruences", &all_congruences);
  m.def("i_congruences", &i_congruences);
  m.def("bz_congruences", &bz_congruences);
  m.def("con0", &con0);
  m.def("con01", &con01);
  m.def("atoms", &atoms);
  m.def("is_subdirectly_irreducible", &is_subdirectly_irreducible);
  m.def("quotient",
        py::overload_cast<const InvolutionLattice&, const Partition&>(&quotient));
  m.def("quotient_lattice",
        py::overload_cast<const FiniteLattice&, const Partition&>(&quotient));

  // documents
  m.def("parse", [](const std::string& text) {
    Structure s = parse_structure(text);
    py::dict d;
    d["lattice"] = s.lat;
    if (s.invol) d["involution_lattice"] = s.as_involution();
    if (s.brouwer) d["bz_lattice"] = s.as_bz();
    return d;
  });
  m.def("emit_json", [](const InvolutionLattice& L) { return emit_json(to_document(L)); });
  m.def("emit_json_lattice", [](const FiniteLattice& L) { return emit_json(to_document(L)); });
  m.def("emit_dot", [](const InvolutionLattice& L, bool show_involution) {
    Structure s{L.base, L.invol, std::nullopt};
    return emit_dot(s, show_involution);
  }, py::arg("lattice"), py::arg("show_involution") = false);
  m.def("format_partition", &format_partition);

  // census
  m.def("enumerate_lattices", &enumerate_lattices, py::arg("n"),
        py::arg("cap") = kDefaultCensusCap);
  m.def("enumerate_i_lattices", &enumerate_i_lattices, py::arg("n"),
        py::arg("cap") = kDefaultCensusCap);
  m.def("census", [](int n, int cap, int threads) {
    return census_record(run_census(n, cap, threads));
  }, py::arg("n"), py::arg("cap") = kDefaultCensusCap, py::arg("threads") = 0);
  m.def("census_verify", [](int n, const std::string& what, int cap, int threads) {
    CensusData data = run_census(n, cap, threads);
    if (what == "maxcgkl") return verify_max_theorem(data);
    if (what == "maxcgaol") return verify_bz_theorem(data);
    if (what == "maxcglat") { verify_lattice_theorem(data); return census_record(data); }
    if (what == "second") { verify_second_largest(data); return census_record(data); }
    throw Error(ErrorCode::ParseError, "unknown verification " + what);
  }, py::arg("n"), py::arg("what"), py::arg("cap") = kDefaultCensusCap, py::arg("threads") = 0);
  m.def("census_record_json", &census_record_json);
}
