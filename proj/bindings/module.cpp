// Python bindings for the core operations: parsing, typing, search spaces,
// decisions, enumeration and the negative translation.  The shared immutable
// handles of the core are boxed into small value classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polsearch/parse.hpp"

namespace py = pybind11;
using namespace polsearch;

namespace {

struct PyPFormula { PForm v; };
struct PyIFormula { IForm v; };
struct PyLjpTerm { TermPtr v; };
struct PyLjtTerm { LjtPtr v; };
struct PyForest { ForestPtr v; };

std::vector<PyLjpTerm> box_terms(const std::vector<TermPtr>& ts) {
  std::vector<PyLjpTerm> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(PyLjpTerm{t});
  return out;
}

std::vector<PyLjtTerm> box_ljt(const std::vector<LjtPtr>& ts) {
  std::vector<PyLjtTerm> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(PyLjtTerm{t});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Proof-search spaces and inhabitation decisions for focused intuitionistic logics";

  py::register_exception<SyntaxError>(m, "SyntaxError");
  py::register_exception<TypingError>(m, "TypingError");
  py::register_exception<TranslationError>(m, "TranslationError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<PyPFormula>(m, "PFormula")
      .def("__str__", [](const PyPFormula& f) { return to_string(f.v); })
      .def("__repr__", [](const PyPFormula& f) { return "PFormula('" + to_string(f.v) + "')"; })
      .def("__eq__", [](const PyPFormula& a, const PyPFormula& b) { return equal(a.v, b.v); })
      .def("__hash__", [](const PyPFormula& f) { return py::hash(py::str(to_string(f.v))); })
      .def_property_readonly("negative", [](const PyPFormula& f) { return f.v->is_negative(); })
      .def_property_readonly("positive", [](const PyPFormula& f) { return f.v->is_positive(); })
      .def_property_readonly("right", [](const PyPFormula& f) { return f.v->is_right(); })
      .def_property_readonly("composite_negative",
                             [](const PyPFormula& f) { return f.v->is_composite_negative(); })
      .def_property_readonly("weight", [](const PyPFormula& f) { return weight(f.v); });

  py::class_<PyIFormula>(m, "IFormula")
      .def("__str__", [](const PyIFormula& f) { return to_string(f.v); })
      .def("__repr__", [](const PyIFormula& f) { return "IFormula('" + to_string(f.v) + "')"; })
      .def("__eq__", [](const PyIFormula& a, const PyIFormula& b) { return equal(a.v, b.v); })
      .def("__hash__", [](const PyIFormula& f) { return py::hash(py::str(to_string(f.v))); })
      .def_property_readonly("right", [](const PyIFormula& f) { return f.v->is_right(); })
      .def_property_readonly("positive", [](const PyIFormula& f) { return f.v->is_positive(); });

  py::class_<Sequent>(m, "Sequent")
      .def("__str__", [](const Sequent& s) { return to_string(s); })
      .def("__repr__", [](const Sequent& s) { return "Sequent('" + to_string(s) + "')"; })
      .def("__eq__", [](const Sequent& a, const Sequent& b) { return equal(a, b); })
      .def("__hash__", [](const Sequent& s) { return py::hash(py::str(to_string(s))); })
      .def_property_readonly("rstable", [](const Sequent& s) { return s.is_rstable(); })
      .def_property_readonly("weight", [](const Sequent& s) { return weight(s); });

  py::class_<LjtSequent>(m, "LjtSequent")
      .def("__str__", [](const LjtSequent& s) { return to_string(s); })
      .def("__repr__", [](const LjtSequent& s) { return "LjtSequent('" + to_string(s) + "')"; })
      .def("__eq__", [](const LjtSequent& a, const LjtSequent& b) { return equal(a, b); })
      .def("__hash__", [](const LjtSequent& s) { return py::hash(py::str(to_string(s))); });

  py::class_<PyLjpTerm>(m, "LjpTerm")
      .def("__str__", [](const PyLjpTerm& t) { return to_string(t.v); })
      .def("__repr__", [](const PyLjpTerm& t) { return "LjpTerm('" + to_string(t.v) + "')"; })
      .def("__eq__", [](const PyLjpTerm& a, const PyLjpTerm& b) { return equal(a.v, b.v); })
      .def("__hash__", [](const PyLjpTerm& t) { return py::hash(py::str(to_string(t.v))); })
      .def_property_readonly("size", [](const PyLjpTerm& t) { return term_size(t.v); });

  py::class_<PyLjtTerm>(m, "LjtTerm")
      .def("__str__", [](const PyLjtTerm& t) { return to_string(t.v); })
      .def("__repr__", [](const PyLjtTerm& t) { return "LjtTerm('" + to_string(t.v) + "')"; })
      .def("__eq__", [](const PyLjtTerm& a, const PyLjtTerm& b) { return equal(a.v, b.v); })
      .def("__hash__", [](const PyLjtTerm& t) { return py::hash(py::str(to_string(t.v))); })
      .def_property_readonly("size", [](const PyLjtTerm& t) { return term_size(t.v); })
      .def_property_readonly("legal", [](const PyLjtTerm& t) { return is_legal(t.v); });

  py::class_<PyForest>(m, "Forest")
      .def("__str__", [](const PyForest& t) { return to_string(t.v); })
      .def("__repr__", [](const PyForest& t) { return "Forest('" + to_string(t.v) + "')"; })
      .def("__eq__", [](const PyForest& a, const PyForest& b) { return equal(a.v, b.v); })
      .def_property_readonly("nodes", [](const PyForest& t) { return node_count(t.v); })
      .def_property_readonly("guarded", [](const PyForest& t) { return is_guarded(t.v); })
      .def_property_readonly("well_bound", [](const PyForest& t) { return is_well_bound(t.v); })
      .def_property_readonly("closed", [](const PyForest& t) { return fpv(t.v).empty(); })
      .def("unfold", [](const PyForest& t) { return PyForest{unfold_gfp(t.v)}; })
      .def(
          "members",
          [](const PyForest& t, int bound) { return box_terms(members_of_forest(t.v, bound)); },
          py::arg("max_size"));

  // Parsing.
  m.def("parse_formula", [](const std::string& s) { return PyPFormula{parse_pformula(s)}; },
        py::arg("text"), "Parse a polarized formula");
  m.def("parse_iformula", [](const std::string& s) { return PyIFormula{parse_iformula(s)}; },
        py::arg("text"), "Parse an intuitionistic formula");
  m.def("parse_sequent", [](const std::string& s) { return parse_ljp_sequent(s); },
        py::arg("text"), "Parse an LJP sequent");
  m.def("parse_ljt_sequent", [](const std::string& s) { return parse_ljt_sequent(s); },
        py::arg("text"), "Parse an LJT sequent");
  m.def("parse_term", [](const std::string& s) { return PyLjpTerm{parse_ljp_term(s)}; },
        py::arg("text"), "Parse an LJP proof term");
  m.def("parse_ljt_term", [](const std::string& s) { return PyLjtTerm{parse_ljt_term(s)}; },
        py::arg("text"), "Parse an LJT proof term");

  // Typing.
  m.def("check", [](const Sequent& s, const PyLjpTerm& t) { return check(s, t.v); },
        py::arg("sequent"), py::arg("term"));
  m.def("check_ljt", [](const LjtSequent& s, const PyLjtTerm& t) { return check_ljt(s, t.v); },
        py::arg("sequent"), py::arg("term"));

  // Search spaces and decisions.
  m.def("space", [](const Sequent& s) { return PyForest{finrep_closed(s)}; }, py::arg("sequent"),
        "Finitary search space of an LJP sequent");
  m.def("inhabited", [](const Sequent& s) { return inhabited(s); }, py::arg("sequent"));
  m.def("finite", [](const Sequent& s) { return finite(s); }, py::arg("sequent"));
  m.def("count", [](const Sequent& s) { return count(s); }, py::arg("sequent"));
  m.def("members", [](const Sequent& s, int k) { return box_terms(members(s, k)); },
        py::arg("sequent"), py::arg("max_size"));
  m.def("oracle_search", [](const Sequent& s, int k) { return box_terms(oracle_search(s, k)); },
        py::arg("sequent"), py::arg("max_size"));

  m.def("ljt_inhabited", [](const LjtSequent& s) { return ljt_inhabited(s); }, py::arg("sequent"));
  m.def("ljt_finite", [](const LjtSequent& s) { return ljt_finite(s); }, py::arg("sequent"));
  m.def("ljt_count", [](const LjtSequent& s) { return ljt_count(s); }, py::arg("sequent"));
  m.def("members_ljt", [](const LjtSequent& s, int k) { return box_ljt(members_ljt(s, k)); },
        py::arg("sequent"), py::arg("max_size"));
  m.def("oracle_search_ljt",
        [](const LjtSequent& s, int k) { return box_ljt(oracle_search_ljt(s, k)); },
        py::arg("sequent"), py::arg("max_size"));

  // Translation.
  m.def("star_formula", [](const PyIFormula& f) { return PyPFormula{star_formula(f.v)}; },
        py::arg("formula"));
  m.def("star_sequent", [](const LjtSequent& s) { return star_sequent(s); }, py::arg("sequent"));
  m.def("star_term", [](const PyLjtTerm& t) { return PyLjpTerm{star_term(t.v)}; },
        py::arg("term"));
  m.def("forget_formula", [](const PyPFormula& f) { return PyIFormula{forget_formula(f.v)}; },
        py::arg("formula"));
  m.def("forget_term", [](const PyLjpTerm& t) { return PyLjtTerm{forget_term(t.v)}; },
        py::arg("term"));

  m.attr("__version__") = "0.1.0";
}
