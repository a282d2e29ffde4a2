#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gausswords/automaton.hpp"
#include "gausswords/carter.hpp"
#include "gausswords/export.hpp"
#include "gausswords/interlacement.hpp"
#include "gausswords/oracle.hpp"
#include "gausswords/word.hpp"

namespace py = pybind11;
using namespace gauss;

namespace {

py::object witness(const interlace::PlanarityVerdict& v) {
  if (const auto* l = std::get_if<Label>(&v.witness)) return py::int_(l->value());
  if (const auto* p = std::get_if<std::pair<Label, Label>>(&v.witness))
    return py::make_tuple(p->first.value(), p->second.value());
  if (const auto* c = std::get_if<std::vector<Label>>(&v.witness)) {
    py::list out;
    for (const auto& l : *c) out.append(l.value());
    return out;
  }
  return py::none();
}

ra::RegisterAutomatonSpec load_spec(const std::string& spec) {
  if (spec == "builtin:gw") return ra::unsigned_gauss_recognizer();
  if (spec == "builtin:sgw") return ra::signed_gauss_recognizer();
  return ra::spec_from_json(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauss word validation, planarity and register automata";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvalidWord>(m, "InvalidWord", error.ptr());
  py::register_exception<LimitExceeded>(m, "LimitExceeded", error.ptr());

  py::class_<GaussWord>(m, "GaussWord")
      .def(py::init(&parse), py::arg("text"))
      .def("__str__", [](const GaussWord& w) { return render(w); })
      .def("__repr__", [](const GaussWord& w) { return "GaussWord('" + render(w) + "')"; })
      .def("__len__", &GaussWord::size)
      .def("__eq__", [](const GaussWord& a, const GaussWord& b) { return a == b; })
      .def_property_readonly("is_signed", &GaussWord::is_signed)
      .def_property_readonly("labels", [](const GaussWord& w) {
        std::vector<std::uint64_t> out;
        for (const auto& l : w.labels()) out.push_back(l.value());
        return out;
      });
  py::implicitly_convertible<std::string, GaussWord>();

  m.def("parse", &parse, py::arg("text"));
  m.def("render", &render, py::arg("word"));
  m.def(
      "validate",
      [](const GaussWord& w) {
        std::vector<std::string> out;
        for (const auto& v : validate(w).violations) out.push_back(v.describe(w.signedness()));
        return out;
      },
      py::arg("word"), "Violation messages; empty when the word is valid.");
  m.def("is_valid", [](const GaussWord& w) { return validate(w).ok(); }, py::arg("word"));
  m.def("strip_signs", &strip_signs, py::arg("word"));

  py::class_<carter::EulerReport>(m, "EulerReport")
      .def_readonly("vertices", &carter::EulerReport::vertices)
      .def_readonly("edges", &carter::EulerReport::edges)
      .def_readonly("faces", &carter::EulerReport::faces)
      .def_readonly("chi", &carter::EulerReport::chi)
      .def("__repr__", [](const carter::EulerReport& e) {
        return "EulerReport(V=" + std::to_string(e.vertices) + ", E=" + std::to_string(e.edges) +
               ", F=" + std::to_string(e.faces) + ", chi=" + std::to_string(e.chi) + ")";
      });

  m.def(
      "faces",
      [](const GaussWord& w) {
        std::vector<std::vector<std::pair<std::size_t, std::string>>> out;
        for (const auto& face : carter::enumerate_faces(w).faces) {
          auto& f = out.emplace_back();
          for (const auto& s : face) f.emplace_back(s.position, std::string(1, to_char(s.incoming)));
        }
        return out;
      },
      py::arg("word"), "Left-turn face cycles as lists of (position, 'L'|'R').");
  m.def("euler_characteristic", &carter::euler_characteristic, py::arg("word"));
  m.def("is_planar_signed", &carter::is_planar_signed, py::arg("word"));

  py::class_<interlace::PlanarityVerdict>(m, "PlanarityVerdict")
      .def_readonly("planar", &interlace::PlanarityVerdict::planar)
      .def_readonly("failed_stage", &interlace::PlanarityVerdict::failed_stage)
      .def_property_readonly("witness", &witness)
      .def("__bool__", [](const interlace::PlanarityVerdict& v) { return v.planar; });

  m.def("is_planar_unsigned", &interlace::is_planar_unsigned, py::arg("word"));
  m.def(
      "alpha", [](const GaussWord& w, std::uint64_t i) { return interlace::alpha(w, Label(i)); },
      py::arg("word"), py::arg("i"));
  m.def(
      "beta",
      [](const GaussWord& w, std::uint64_t i, std::uint64_t j) {
        return interlace::beta(w, Label(i), Label(j)).count;
      },
      py::arg("word"), py::arg("i"), py::arg("j"));
  m.def(
      "interlacement_graph",
      [](const GaussWord& w) {
        const auto g = interlace::interlacement_graph(w);
        std::vector<std::uint64_t> vs;
        for (const auto& v : g.vertices()) vs.push_back(v.value());
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> es;
        for (const auto& e : g.edges()) es.emplace_back(e.u.value(), e.v.value(), e.beta_count);
        return py::make_tuple(vs, es);
      },
      py::arg("word"), "(vertices, [(u, v, beta_count), ...])");
  m.def(
      "interlacement_dot",
      [](const GaussWord& w) { return io::interlacement_to_dot(interlace::interlacement_graph(w)); },
      py::arg("word"));
  m.def(
      "faces_dot", [](const GaussWord& w) { return io::faces_to_dot(carter::enumerate_faces(w)); },
      py::arg("word"));

  m.def(
      "brute_force_planarity",
      [](const GaussWord& w, std::size_t max_crossings) {
        return oracle::brute_force_unsigned_planarity(w, max_crossings);
      },
      py::arg("word"), py::arg("max_crossings") = oracle::kDefaultMaxCrossings);
  m.def(
      "exhaustive_words",
      [](std::size_t n) { return oracle::generate(oracle::Exhaustive{n}).words; }, py::arg("crossings"));
  m.def(
      "random_words",
      [](std::size_t count, std::size_t min_crossings, std::size_t max_crossings, std::uint64_t seed,
         bool with_signs) {
        return oracle::generate(oracle::Random{min_crossings, max_crossings, count, seed, with_signs}).words;
      },
      py::arg("count"), py::arg("min_crossings") = 1, py::arg("max_crossings") = 6, py::arg("seed") = 0,
      py::arg("signed") = false);

  m.def(
      "run_automaton",
      [](const std::string& spec, const std::vector<std::pair<std::string, std::uint64_t>>& word,
         bool nondeterministic, bool compile) {
        auto s = load_spec(spec);
        if (compile) s = ra::compile_modified_to_original(s);
        ra::DataWord data;
        for (const auto& [tag, datum] : word) data.push_back({tag, datum});
        ra::RunOptions opts;
        opts.mode = nondeterministic ? ra::Mode::Nondeterministic : ra::Mode::Deterministic;
        const auto r = ra::run(s, data, opts);
        py::dict out;
        out["accepted"] = r.accepted();
        out["explored"] = r.explored;
        out["ceiling"] = r.ceiling;
        return out;
      },
      py::arg("spec"), py::arg("word"), py::arg("nondeterministic") = false, py::arg("compile") = false,
      "Run a spec ('builtin:gw', 'builtin:sgw' or JSON text) on [(tag, datum), ...].");
  m.def(
      "data_word",
      [](const GaussWord& w) {
        std::vector<std::pair<std::string, std::uint64_t>> out;
        for (const auto& l : ra::to_data_word(w)) out.emplace_back(l.tag, l.datum);
        return out;
      },
      py::arg("word"));
  m.def(
      "builtin_spec_json",
      [](bool with_signs) {
        return ra::spec_to_json(with_signs ? ra::signed_gauss_recognizer() : ra::unsigned_gauss_recognizer());
      },
      py::arg("signed") = false);
}
