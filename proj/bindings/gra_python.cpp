// Python bindings for the main operations: dataset generation, complex
// statistics, Hodge Laplacians, AUC and the end-to-end attack pipeline.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gra/eval.hpp"
#include "gra/graph_data.hpp"
#include "gra/linalg.hpp"
#include "gra/simplicial.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> to_numpy(const gra::linalg::DenseMatrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  std::copy(m.values().begin(), m.values().end(),
            out.mutable_data());
  return out;
}

gra::data::Graph make_graph(std::size_t n,
                            const std::vector<std::pair<std::size_t,
                                                        std::size_t>>& edges) {
  std::vector<gra::data::Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return gra::data::Graph::from_edges(n, std::move(es));
}

gra::eval::RunConfig config_from_dict(const py::dict& d) {
  gra::eval::RunConfig cfg;
  for (const auto& item : d) {
    cfg.set(py::str(item.first), py::str(item.second));
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_gra_py, m) {
  m.doc() = "graph reconstruction attack toolkit";

  m.def(
      "auc",
      [](const std::vector<double>& scores, const std::vector<int>& labels) {
        return gra::eval::auc(scores, labels);
      },
      py::arg("scores"), py::arg("labels"),
      "Rank-based AUC with average ranks for ties.");

  m.def(
      "erdos_renyi",
      [](std::size_t n, double p, std::uint64_t seed) {
        auto g = gra::data::erdos_renyi(n, p, seed);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        edges.reserve(g.edge_count());
        for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
        return edges;
      },
      py::arg("n"), py::arg("p"), py::arg("seed"),
      "Edge list of G(n, p), deterministic per seed.");

  m.def(
      "complex_stats",
      [](std::size_t n,
         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         int max_dim) {
        auto k = gra::simplicial::clique_complex(make_graph(n, edges),
                                                 max_dim);
        return py::make_tuple(k.count(0), k.count(1), k.count(2));
      },
      py::arg("n"), py::arg("edges"), py::arg("max_dim") = 2,
      "Simplex counts (|K_0|, |K_1|, |K_2|) of the clique complex.");

  m.def(
      "boundary_matrix",
      [](std::size_t n,
         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         int d) {
        auto k = gra::simplicial::clique_complex(make_graph(n, edges), 2);
        return to_numpy(
            gra::linalg::densify(gra::simplicial::boundary_matrix(k, d).matrix));
      },
      py::arg("n"), py::arg("edges"), py::arg("d"),
      "Signed incidence operator of the clique complex, dense.");

  m.def(
      "hodge_laplacian",
      [](std::size_t n,
         const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         int d) {
        auto k = gra::simplicial::clique_complex(make_graph(n, edges), 2);
        return to_numpy(
            gra::linalg::densify(gra::simplicial::hodge_laplacian(k, d).matrix));
      },
      py::arg("n"), py::arg("edges"), py::arg("d"),
      "L_d of the clique complex, dense.");

  m.def(
      "gcn_normalize",
      [](py::array_t<double, py::array::c_style | py::array::forcecast> a) {
        auto buf = a.request();
        if (buf.ndim != 2 || buf.shape[0] != buf.shape[1]) {
          throw py::value_error("expected a square 2-d array");
        }
        const auto n = static_cast<std::size_t>(buf.shape[0]);
        gra::linalg::DenseMatrix dense(
            n, n,
            std::vector<double>(static_cast<double*>(buf.ptr),
                                static_cast<double*>(buf.ptr) + n * n));
        return to_numpy(gra::linalg::densify(
            gra::data::gcn_normalize(gra::linalg::sparsify(dense))));
      },
      py::arg("adjacency"),
      "D~^{-1/2} (A + I) D~^{-1/2}, dense in and out.");

  m.def(
      "run_pipeline",
      [](const py::dict& config) {
        auto report = gra::eval::run_pipeline(config_from_dict(config));
        py::dict out;
        out["dataset"] = report.dataset;
        out["encoder"] = report.encoder;
        out["snn_mode"] = report.snn_mode;
        out["known_fraction"] = report.known_fraction;
        out["seed"] = report.seed;
        out["auc"] = report.auc;
        out["pair_count"] = report.pair_count;
        out["train_accuracy"] = report.train_accuracy;
        out["format_version"] = report.format_version;
        py::dict echo;
        for (const auto& [k, v] : report.config_echo) {
          echo[py::str(k)] = v;
        }
        out["config"] = echo;
        return out;
      },
      py::arg("config"),
      "Full pipeline: load, split, train encoder, attack, AUC.");

  m.def(
      "report_json",
      [](const py::dict& config) {
        return gra::eval::report_to_json(
            gra::eval::run_pipeline(config_from_dict(config)));
      },
      py::arg("config"), "Pipeline report as canonical JSON text.");
}
