#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectraltk/bounds.hpp"
#include "spectraltk/graph.hpp"
#include "spectraltk/resistance.hpp"
#include "spectraltk/spectrum.hpp"
#include "spectraltk/trees.hpp"
#include "spectraltk/walk.hpp"

namespace py = pybind11;
using namespace spectraltk;

PYBIND11_MODULE(_spectraltk, m) {
  m.doc() = "spectral graph analysis toolkit";

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, double>>& es) {
             std::vector<Edge> edges;
             for (const auto& [u, v, w] : es) edges.push_back({u, v, w});
             return WeightedGraph(n, std::move(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &WeightedGraph::num_vertices)
      .def_property_readonly("m", &WeightedGraph::num_edges)
      .def("degree", &WeightedGraph::degree)
      .def_property_readonly("vol_total", &WeightedGraph::vol_total)
      .def_property_readonly("connected", &WeightedGraph::connected)
      .def_property_readonly("regular", &WeightedGraph::regular)
      .def("stationary", py::overload_cast<int>(&WeightedGraph::stationary, py::const_))
      .def_readonly("name", &WeightedGraph::name)
      .def_readonly("family", &WeightedGraph::family);

  m.def("parse_edge_list", &parse_edge_list);
  m.def("serialize_edge_list", &serialize_edge_list);
  m.def("make_cycle", &make_cycle);
  m.def("make_path", &make_path);
  m.def("make_complete", &make_complete);
  m.def("make_barbell", &make_barbell);
  m.def("make_clique_cycle", &make_clique_cycle);
  m.def("make_torus", &make_torus);
  m.def("make_hypercube", &make_hypercube);
  m.def("make_erdos_renyi", &make_erdos_renyi);
  m.def("diameter", &diameter);
  m.def("distances_from", &distances_from);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("residual_tol", &Spectrum::residual_tol)
      .def("g", &Spectrum::g)
      .def("count_below", &Spectrum::count_below);
  m.def("compute_spectrum", &compute_spectrum);

  m.def("vertex_measure", [](const Spectrum& s, const WeightedGraph& g, int x,
                             double delta) {
    const VertexMeasure v = vertex_measure(s, g, x, delta);
    return py::make_tuple(v.mu, v.mu_star);
  });
  m.def("graph_measure", [](const Spectrum& s, double delta) {
    const GraphMeasure v = graph_measure(s, delta);
    return py::make_tuple(v.mu, v.mu_star);
  });

  py::class_<SpectralEmbedding>(m, "SpectralEmbedding")
      .def_readonly("delta", &SpectralEmbedding::delta)
      .def_readonly("dims", &SpectralEmbedding::dims)
      .def("norm2", &SpectralEmbedding::norm2)
      .def("dist2", &SpectralEmbedding::dist2)
      .def("coords", [](const SpectralEmbedding& e, int x) {
        return std::vector<double>(e.row(x), e.row(x) + e.dims);
      });
  m.def("spectral_embedding", &spectral_embedding);

  py::class_<BallSelection>(m, "BallSelection")
      .def_readonly("delta", &BallSelection::delta)
      .def_readonly("alpha", &BallSelection::alpha)
      .def_readonly("k", &BallSelection::k)
      .def_readonly("centers", &BallSelection::centers)
      .def_readonly("balls", &BallSelection::balls)
      .def_readonly("half_balls", &BallSelection::half_balls);
  m.def("ball_selection", &ball_selection, py::arg("g"), py::arg("s"),
        py::arg("delta"), py::arg("alpha") = 0.25);

  m.def("effective_resistance", &effective_resistance);
  m.def("resistance_matrix", &resistance_matrix);

  py::class_<WalkKernel>(m, "WalkKernel")
      .def(py::init<const WeightedGraph&, const Spectrum&>(),
           py::keep_alive<1, 2>(), py::keep_alive<1, 3>());
  m.def("return_probability", &return_probability);
  m.def("transition_probability", &transition_probability);
  m.def("heat_return_probability", &heat_return_probability);
  m.def("l2_mixing_time", &l2_mixing_time);
  m.def("linf_mixing_time", &linf_mixing_time);
  m.def("monte_carlo_return", [](const WeightedGraph& g, int x, long long t,
                                 long long samples, std::uint64_t seed, int jobs) {
    const MonteCarloEstimate e = monte_carlo_return(g, x, t, samples, seed, jobs);
    return py::make_tuple(e.estimate, e.half_width);
  }, py::arg("g"), py::arg("x"), py::arg("t"), py::arg("samples"),
     py::arg("seed"), py::arg("jobs") = 1);

  m.def("spanning_tree_count_exact", [](const WeightedGraph& g) {
    return py::cast(spanning_tree_count_exact(g).get_str());
  });
  m.def("brute_force_tree_count", &brute_force_tree_count);
  m.def("log_tau_exact", &log_tau_exact);
  m.def("log_tau_spectral", &log_tau_spectral);
  m.def("estimate_log_tau_local",
        [](const WeightedGraph& g, double epsilon, double delta_fail,
           std::uint64_t seed, long long r, long long N, long long D) {
          auto oracle = in_memory_oracle(g, seed);
          EstimatorOverrides ov;
          if (r >= 0) ov.r = r;
          if (N >= 0) ov.num_samples = N;
          if (D >= 0) ov.degree_samples = D;
          const TreeEstimate e =
              estimate_log_tau_local(*oracle, epsilon, delta_fail, seed, ov);
          py::dict d;
          d["value"] = e.value;
          d["r"] = e.r;
          d["s"] = e.s;
          d["num_samples"] = e.num_samples;
          d["degree_samples"] = e.degree_samples;
          d["queries_used"] = e.queries_used;
          return d;
        },
        py::arg("g"), py::arg("epsilon"), py::arg("delta_fail"), py::arg("seed"),
        py::arg("r") = -1, py::arg("num_samples") = -1,
        py::arg("degree_samples") = -1);

  m.def("run_bound_suite", [](const WeightedGraph& g) {
    const Spectrum s = compute_spectrum(g);
    const BoundReport rep = run_bound_suite(g, s);
    return py::make_tuple(rep.all_pass(), rep.to_json());
  });
  m.def("gamma_function", &gamma_function);
}
