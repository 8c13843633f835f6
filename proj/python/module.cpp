#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moufang/catalog.hpp"
#include "moufang/errors.hpp"
#include "moufang/json_io.hpp"
#include "moufang/series.hpp"
#include "moufang/symbolic.hpp"

namespace py = pybind11;

namespace {

// Round-trip through the text form; keeps the Python view identical to what
// the CLI prints.
py::object j2py(const moufang::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<int>> table_rows(const moufang::LoopTable& L) {
  std::vector<std::vector<int>> rows(L.order(), std::vector<int>(L.order()));
  for (int i = 0; i < L.order(); ++i) {
    for (int j = 0; j < L.order(); ++j) {
      rows[i][j] = L.at(i, j);
    }
  }
  return rows;
}

moufang::SeriesReport series_by_kind(const moufang::LoopTable& L,
                                     const std::string& kind) {
  if (kind == "lower") {
    return moufang::lower_central_series(L);
  }
  if (kind == "derived") {
    return moufang::derived_series(L);
  }
  if (kind == "upper") {
    return moufang::upper_central_series(L);
  }
  throw moufang::InputError("unknown series kind: " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite commutative Moufang loop computations";

  py::register_exception<moufang::InputError>(m, "InputError",
                                              PyExc_ValueError);
  py::register_exception<moufang::PreconditionError>(m, "PreconditionError",
                                                     PyExc_ValueError);
  py::register_exception<moufang::BoundExceededError>(m, "BoundExceededError",
                                                      PyExc_RuntimeError);
  py::register_exception<moufang::TheoremViolationError>(
      m, "TheoremViolationError", PyExc_RuntimeError);

  py::class_<moufang::LoopTable>(m, "Loop")
      .def(py::init([](std::vector<std::vector<int>> rows, std::string name) {
             return moufang::LoopTable(std::move(rows), std::move(name));
           }),
           py::arg("table"), py::arg("name") = "")
      .def_static("build",
                  [](const std::string& spec) {
                    return moufang::build(
                        moufang::ConstructionSpec::parse(spec));
                  },
                  py::arg("construction"))
      .def_static("from_file", &moufang::load, py::arg("path"))
      .def_property_readonly("order", &moufang::LoopTable::order)
      .def_property_readonly("name", &moufang::LoopTable::name)
      .def_property_readonly("table", &table_rows)
      .def("mul", [](const moufang::LoopTable& L, int a, int b) {
        return moufang::mul(L, a, b);
      })
      .def("inv", [](const moufang::LoopTable& L,
                     int a) { return moufang::inv(L, a); })
      .def("pow", [](const moufang::LoopTable& L, int a, long long k) {
        return moufang::pow(L, a, k);
      })
      .def("element_order",
           [](const moufang::LoopTable& L, int a) {
             return moufang::element_order(L, a);
           })
      .def("exponent",
           [](const moufang::LoopTable& L) { return moufang::exponent(L); })
      .def("associator",
           [](const moufang::LoopTable& L, int a, int b, int c) {
             return moufang::associator(L, a, b, c);
           })
      .def("verify",
           [](const moufang::LoopTable& L) {
             return j2py(moufang::verification_to_json(moufang::verify_cml(L)));
           })
      .def("identities",
           [](const moufang::LoopTable& L) {
             return j2py(
                 moufang::scan_result_to_json(moufang::check_identities(L)));
           })
      .def("inner_automorphism_check",
           [](const moufang::LoopTable& L) {
             return j2py(moufang::scan_result_to_json(
                 moufang::check_inner_automorphism(L)));
           })
      .def("series",
           [](const moufang::LoopTable& L, const std::string& kind) {
             return j2py(moufang::series_to_json(series_by_kind(L, kind)));
           },
           py::arg("kind") = "lower")
      .def("nilpotency_class",
           [](const moufang::LoopTable& L) {
             return moufang::nilpotency_class(L);
           })
      .def("solvability_class",
           [](const moufang::LoopTable& L) {
             return moufang::solvability_class(L);
           })
      .def("centre",
           [](const moufang::LoopTable& L) {
             return moufang::centre(L).indices();
           })
      .def("subloops",
           [](const moufang::LoopTable& L, int bound) {
             std::vector<std::vector<int>> out;
             for (const auto& H : moufang::all_subloops(L, bound)) {
               out.push_back(H.indices());
             }
             return out;
           },
           py::arg("bound") = moufang::kDefaultEnumerationBound)
      .def("decompose",
           [](const moufang::LoopTable& L) {
             py::dict out;
             for (const auto& [p, mask] : moufang::p_components(L)) {
               out[py::int_(p)] = mask.indices();
             }
             return out;
           })
      .def("save", &moufang::save, py::arg("path"))
      .def("__len__", &moufang::LoopTable::order)
      .def("__repr__", [](const moufang::LoopTable& L) {
        return "<Loop " +
               (L.name().empty() ? std::string("?") : L.name()) + " order " +
               std::to_string(L.order()) + ">";
      });

  m.def("classify",
        [](int d, const moufang::LoopTable& K, int bound) {
          const moufang::SymbolicCML S(d, K);
          return j2py(
              moufang::classification_to_json(moufang::classify(S, bound)));
        },
        py::arg("d"), py::arg("k"),
        py::arg("bound") = moufang::kDefaultEnumerationBound,
        "Classify the symbolic loop (quasicyclic^d) x K");

  m.def("fixture_non_moufang",
        [] { return moufang::fixture_non_moufang(); },
        "Smallest commutative unital Latin square that fails the Moufang law");
}
