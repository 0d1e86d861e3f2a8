#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cpeg/errors.hpp"
#include "cpeg/grammar_parser.hpp"
#include "cpeg/parse_engine.hpp"
#include "cpeg/ret.hpp"
#include "cpeg/static_analysis.hpp"
#include "cpeg/type_inference.hpp"

namespace py = pybind11;

namespace {

py::object tree_to_py(const cpeg::Tree& tree) {
  if (tree.is_text()) return py::str(tree.text_value());
  py::list nodes;
  for (const cpeg::TreeNode& node : tree.nodes()) {
    py::dict d;
    d["label"] = node.label;
    py::object children = tree_to_py(node.children);
    if (py::isinstance<py::str>(children)) {
      py::list wrapped;
      if (!node.children.text_value().empty()) wrapped.append(children);
      d["children"] = wrapped;
    } else {
      d["children"] = children;
    }
    nodes.append(d);
  }
  if (py::len(nodes) == 1) return nodes[0];
  return nodes;
}

cpeg::ParseOptions make_options(bool full_match) {
  cpeg::ParseOptions options;
  options.full_match = full_match;
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "PEG parsing with declarative tree captures and inferred "
            "regular expression tree types";

  py::register_exception<cpeg::SyntaxError>(m, "GrammarSyntaxError",
                                            PyExc_ValueError);
  py::register_exception<cpeg::LeftRecursionError>(m, "LeftRecursionError",
                                                   PyExc_ValueError);
  py::register_exception<cpeg::WellFormednessError>(m, "WellFormednessError",
                                                    PyExc_ValueError);

  py::class_<cpeg::Tree>(m, "Tree")
      .def_static("from_sexpr",
                  [](const std::string& text) { return cpeg::Tree::from_sexpr(text); })
      .def("to_sexpr", &cpeg::Tree::to_sexpr)
      .def("to_obj", [](const cpeg::Tree& t) { return tree_to_py(t); })
      .def("is_text", &cpeg::Tree::is_text)
      .def("__eq__",
           [](const cpeg::Tree& a, const cpeg::Tree& b) { return a == b; })
      .def("__repr__", [](const cpeg::Tree& t) {
        return "Tree(" + t.to_sexpr() + ")";
      });

  py::class_<cpeg::InferenceResult>(m, "Inference")
      .def("text",
           [](const cpeg::InferenceResult& r) {
             return cpeg::serialize_types(r.bindings, *r.root);
           })
      .def_property_readonly("root",
                             [](const cpeg::InferenceResult& r) {
                               return cpeg::to_string(*r.root);
                             })
      .def("bindings",
           [](const cpeg::InferenceResult& r) {
             py::dict out;
             for (const std::string& name : r.bindings.names()) {
               out[py::str(name)] = cpeg::to_string(*r.bindings.resolve(name));
             }
             return out;
           })
      .def_property_readonly("unguarded_cycle",
                             [](const cpeg::InferenceResult& r)
                                 -> std::optional<std::vector<std::string>> {
                               return r.unguarded;
                             })
      .def("alpha_equal", [](const cpeg::InferenceResult& a,
                             const cpeg::InferenceResult& b) {
        return cpeg::alpha_equal(a, b);
      });

  py::class_<cpeg::Grammar>(m, "Grammar")
      .def_property_readonly("nonterminals", &cpeg::Grammar::nonterminals)
      .def_property_readonly("labels",
                             [](const cpeg::Grammar& g) { return g.labels(); })
      .def(
          "parse",
          [](const cpeg::Grammar& g, const std::string& input,
             bool full_match) -> std::optional<cpeg::Tree> {
            cpeg::ParseOutcome outcome =
                cpeg::parse(g, input, make_options(full_match));
            if (!outcome.ok()) return std::nullopt;
            return outcome.value();
          },
          py::arg("input"), py::arg("full_match") = false)
      .def(
          "parse_info",
          [](const cpeg::Grammar& g, const std::string& input,
             bool full_match) {
            cpeg::ParseOutcome outcome =
                cpeg::parse(g, input, make_options(full_match));
            py::dict out;
            out["ok"] = outcome.ok();
            out["end"] = outcome.end;
            out["furthest"] = outcome.furthest;
            if (outcome.ok()) out["tree"] = outcome.value();
            return out;
          },
          py::arg("input"), py::arg("full_match") = false)
      .def(
          "infer",
          [](const cpeg::Grammar& g, bool force, bool dedup) {
            cpeg::InferOptions options;
            options.force = force;
            options.dedup = dedup;
            return cpeg::infer_grammar(g, options);
          },
          py::arg("force") = false, py::arg("dedup") = false)
      .def("well_formedness_violations",
           [](const cpeg::Grammar& g) {
             py::list out;
             for (const cpeg::Violation& v :
                  cpeg::check_well_formed(g).violations) {
               py::dict d;
               d["rule"] = v.rule;
               d["path"] = v.path;
               d["reason"] = v.reason;
               out.append(d);
             }
             return out;
           })
      .def("is_well_formed",
           [](const cpeg::Grammar& g) {
             return cpeg::check_well_formed(g).is_well_formed();
           })
      .def("left_recursive_cycles",
           [](const cpeg::Grammar& g) {
             return cpeg::recursion_info(g).left_recursive_cycles;
           })
      .def("recursive_nonterminals",
           [](const cpeg::Grammar& g) {
             return cpeg::recursion_info(g).recursive_nonterminals;
           })
      .def(
          "validate",
          [](const cpeg::Grammar& g, const std::string& input,
             bool full_match) -> std::optional<bool> {
            cpeg::ParseOutcome outcome =
                cpeg::parse(g, input, make_options(full_match));
            if (!outcome.ok()) return std::nullopt;
            cpeg::InferenceResult inference = cpeg::infer_grammar(g);
            return cpeg::member(outcome.value(), *inference.root,
                                inference.bindings);
          },
          py::arg("input"), py::arg("full_match") = false);

  m.def("load_grammar", [](const std::string& text) {
    return cpeg::parse_grammar(text);
  });

  m.def(
      "member",
      [](const cpeg::Tree& tree, const cpeg::InferenceResult& inference) {
        return cpeg::member(tree, *inference.root, inference.bindings);
      },
      py::arg("tree"), py::arg("inference"));

  m.def(
      "member_of",
      [](const cpeg::Tree& tree, const std::string& types_text) {
        cpeg::TypeDocument doc = cpeg::read_types(types_text);
        return cpeg::member(tree, *doc.root, doc.bindings);
      },
      py::arg("tree"), py::arg("types_text"));
}
