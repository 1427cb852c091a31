#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grpmat/pipeline.hpp"
#include "grpmat/sullivan.hpp"

namespace py = pybind11;
using namespace grpmat;

namespace {

BuildMode parse_mode(const std::string& mode) {
  if (mode == "strict") return BuildMode::Strict;
  if (mode == "extended") return BuildMode::Extended;
  if (mode == "auto") return BuildMode::Auto;
  throw py::value_error("mode must be 'strict', 'extended' or 'auto'");
}

std::vector<std::vector<int>> entries(const BMatrix& b) {
  std::vector<std::vector<int>> out(b.rows(), std::vector<int>(b.n()));
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.n(); ++c) out[r][c] = b.at(r, c);
  return out;
}

py::dict canonical_dict(const CanonicalForm& c) {
  py::dict d;
  d["matrix"] = c.matrix;
  d["ordering"] = c.ordering.images();
  d["diagonal_free_ordering_exists"] = c.diagonal_free_ordering_exists;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact group encodings and the structured XB = BY solver.";

  py::exception<Error>(m, "GrpmatError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object type = py::module_::import("grpmat._core").attr("GrpmatError");
      py::object instance = type(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<Group>(m, "Group")
      .def_static("from_table", [](const Table& t) { return Group::from_table(t); }, py::arg("table"),
                  "Validates a 1-based Cayley table with the identity first.")
      .def_static("from_json", [](const std::string& text) { return parse_group(text); })
      .def("to_json", &serialize_group)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("table", &Group::table)
      .def("mul", &Group::mul)
      .def("inverse", &Group::inverse)
      .def("element_order", &Group::element_order)
      .def("is_abelian", &Group::is_abelian)
      .def("relabeled", [](const Group& g, std::vector<int> images) { return g.relabeled(Permutation(std::move(images))); },
           py::arg("ordering"))
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("__repr__", [](const Group& g) { return "<Group of order " + std::to_string(g.order()) + ">"; });

  py::class_<BMatrix>(m, "BMatrix")
      .def_property_readonly("n", &BMatrix::n)
      .def_property_readonly("rows", &BMatrix::rows)
      .def_property_readonly("mode", [](const BMatrix& b) { return std::string(to_string(b.mode())); })
      .def_property_readonly("labels",
                             [](const BMatrix& b) {
                               std::vector<std::string> out;
                               for (const auto& l : b.layout()) out.push_back(l.to_string());
                               return out;
                             })
      .def_property_readonly("entries", &entries)
      .def("to_text", &serialize_B)
      .def("__eq__", [](const BMatrix& a, const BMatrix& b) { return a == b; })
      .def("__repr__", [](const BMatrix& b) {
        return "<BMatrix " + std::to_string(b.rows()) + "x" + std::to_string(b.n()) + " " +
               std::string(to_string(b.mode())) + ">";
      });

  m.def("catalog", [](const std::string& name) { return catalog(name); }, py::arg("name"));
  m.def("catalog_names", &catalog_names);
  m.def("classified_names", &classified_names, py::arg("n"));
  m.def("enumerate_groups", [](int n) { return enumerate_groups(n); }, py::arg("n"));

  m.def("build_b", [](const Group& g, const std::string& mode) { return build_B(g, parse_mode(mode)); },
        py::arg("group"), py::arg("mode") = "auto");
  m.def("parse_b", [](const std::string& text) { return parse_B(text); }, py::arg("text"));
  m.def("canonical_b", [](const Group& g) { return canonical_dict(canonical_B(g)); }, py::arg("group"));

  m.def("structured_solutions",
        [](const BMatrix& b) {
          std::vector<std::vector<int>> out;
          for (const auto& p : structured_solutions(b)) out.push_back(p.sigma().images());
          return out;
        },
        py::arg("b"), "Images of every sigma whose structured pair solves XB = BY.");

  m.def("cross_check",
        [](const BMatrix& b) {
          py::gil_scoped_release release;
          const LinearCrossCheck r = cross_check_linear(b);
          py::gil_scoped_acquire acquire;
          py::dict d;
          d["space_dimension"] = r.space_dimension;
          d["unknowns"] = r.unknowns;
          d["structured_count"] = r.structured_count;
          d["all_contained"] = r.all_contained();
          return d;
        },
        py::arg("b"));

  m.def("verify",
        [](const Group& g) {
          VerifyReport r;
          {
            py::gil_scoped_release release;
            r = verify(g);
          }
          py::dict d;
          d["order"] = r.order;
          d["mode"] = std::string(to_string(r.mode));
          d["solutions"] = r.solutions;
          std::vector<std::string> sigmas;
          for (const auto& s : r.sigmas) sigmas.push_back(s.cycle_string());
          d["sigmas"] = sigmas;
          d["matches_cayley"] = r.matches_cayley;
          d["group_valid"] = r.group_valid;
          d["isomorphic"] = r.isomorphic;
          d["psi"] = r.psi ? py::object(py::str(r.psi->verdict())) : py::object(py::none());
          d["failure"] = r.failure;
          d["ok"] = r.ok();
          return d;
        },
        py::arg("group"));

  m.def("iso",
        [](const Group& g, const Group& h) {
          const IsoReport r = iso_compare(g, h);
          py::dict d;
          d["canonical_equal"] = r.canonical_equal;
          d["isomorphic"] = r.isomorphic();
          d["agree"] = r.agree();
          d["witness"] = r.witness ? py::object(py::cast(r.witness->images())) : py::object(py::none());
          return d;
        },
        py::arg("g"), py::arg("h"));

  m.def("census",
        [](int n) {
          const Census c = census(n);
          py::dict d;
          d["order"] = c.order;
          d["count"] = c.count;
          d["group_count"] = c.group_count;
          d["matrices"] = c.matrices;
          py::dict forms;
          for (const auto& e : c.entries) forms[py::str(e.name)] = canonical_dict(e.form);
          d["groups"] = forms;
          return d;
        },
        py::arg("n"));

  m.def("d_z", [](int j, const Group& g) { return sullivan::d_z(j, g).to_string(); }, py::arg("j"), py::arg("group"));
}
