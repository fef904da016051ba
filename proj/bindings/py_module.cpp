#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ksi/centrality.hpp"
#include "ksi/distribution.hpp"
#include "ksi/generators.hpp"
#include "ksi/graph.hpp"
#include "ksi/sweep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "ksi-centrality core: graph loading, generators, scoring, fits";

  py::class_<ksi::Graph>(m, "Graph")
      .def_property_readonly("n", &ksi::Graph::num_vertices)
      .def_property_readonly("m", &ksi::Graph::num_edges)
      .def("degree", &ksi::Graph::degree, py::arg("i"))
      .def("neighbors",
           [](const ksi::Graph& g, ksi::VertexId i) {
             auto nb = g.neighbors(i);
             return std::vector<ksi::VertexId>(nb.begin(), nb.end());
           },
           py::arg("i"))
      .def("has_edge", &ksi::Graph::has_edge, py::arg("i"), py::arg("j"))
      .def("label", &ksi::Graph::label, py::arg("i"))
      .def("__eq__", [](const ksi::Graph& a, const ksi::Graph& b) { return a == b; });

  py::class_<ksi::KsiScores>(m, "KsiScores")
      .def_readonly("n", &ksi::KsiScores::n)
      .def_readonly("boundary_edges", &ksi::KsiScores::boundary_edges)
      .def_readonly("ksi", &ksi::KsiScores::ksi)
      .def_readonly("ksi_norm", &ksi::KsiScores::ksi_norm);

  py::class_<ksi::FitReport>(m, "FitReport")
      .def_property_readonly("exp_slope",
                             [](const ksi::FitReport& r) { return r.exp.slope; })
      .def_property_readonly(
          "exp_intercept",
          [](const ksi::FitReport& r) { return r.exp.intercept; })
      .def_property_readonly("exp_rmse",
                             [](const ksi::FitReport& r) { return r.exp.rmse; })
      .def_property_readonly("exp_r2",
                             [](const ksi::FitReport& r) { return r.exp.r2; })
      .def_property_readonly(
          "gauss_rmse", [](const ksi::FitReport& r) { return r.gauss.rmse; })
      .def_readonly("skewness", &ksi::FitReport::skewness)
      .def_readonly("bins_used", &ksi::FitReport::bins_used)
      .def_property_readonly("verdict", [](const ksi::FitReport& r) {
        return std::string(ksi::verdict_name(r.verdict));
      });

  m.def("load_edge_list",
        [](const std::string& path) { return ksi::load_edge_list(path); },
        py::arg("path"));
  m.def("largest_connected_component", &ksi::largest_connected_component,
        py::arg("graph"));

  m.def("erdos_renyi", &ksi::erdos_renyi, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("barabasi_albert", &ksi::barabasi_albert, py::arg("n"), py::arg("m"),
        py::arg("seed"));
  m.def("watts_strogatz", &ksi::watts_strogatz, py::arg("n"), py::arg("k"),
        py::arg("p"), py::arg("seed"));

  m.def("ksi_all", &ksi::ksi_all, py::arg("graph"), py::arg("threads") = 0);
  m.def("ksi_all_dense_oracle", &ksi::ksi_all_dense_oracle, py::arg("graph"),
        py::arg("max_n") = 256);
  m.def("boundary_edge_count", &ksi::boundary_edge_count, py::arg("graph"),
        py::arg("i"));
  m.def("average_normalized_ksi", &ksi::average_normalized_ksi,
        py::arg("scores"));

  m.def("analyze",
        [](const std::vector<double>& values, int bins, int skip_bins) {
          return ksi::analyze(values, bins, skip_bins);
        },
        py::arg("values"), py::arg("bins") = 50, py::arg("skip_bins") = 0);
  m.def("log_fit_deviation", &ksi::log_fit_deviation, py::arg("graph"),
        py::arg("bins") = 50);
}
