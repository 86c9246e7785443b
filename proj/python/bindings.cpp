#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steklov/bounds.hpp"
#include "steklov/cli.hpp"
#include "steklov/flows.hpp"
#include "steklov/generators.hpp"
#include "steklov/graph_io.hpp"
#include "steklov/spectral.hpp"

namespace py = pybind11;
using namespace steklov;

namespace {

BoundedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& boundary,
                        std::optional<bool> planar, std::optional<int> crossing_number, std::optional<int> genus) {
  return validate({n, edges, boundary, {planar, crossing_number, genus}});
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["bound"] = r.bound_name;
  d["k"] = r.k;
  d["value"] = r.value;
  d["sigma_k"] = r.sigma_k;
  d["applicable"] = r.applicable();
  d["satisfied"] = r.satisfied();
  d["tight"] = r.tight();
  d["assumptions"] = r.assumptions;
  d["reason"] = r.reason;
  return d;
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Steklov eigenvalues, eigenvalue bounds and boundary flows on graphs";

  auto error = py::register_exception<Error>(m, "SteklovError", PyExc_ValueError);
  (void)error;

  py::class_<BoundedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("num_vertices"), py::arg("edges"), py::arg("boundary"),
           py::kw_only(), py::arg("planar") = py::none(), py::arg("crossing_number") = py::none(),
           py::arg("genus") = py::none())
      .def_static("generate", [](const std::string& family, const std::string& boundary) {
        return generate(parse_family(family), boundary);
      }, py::arg("family"), py::arg("boundary") = "default")
      .def_static("from_json", [](const std::string& text) { return validate(parse_graph_json(text)); })
      .def_static("read", [](const std::string& path) { return validate(read_graph_file(path)); })
      .def("to_json", &graph_to_json)
      .def_property_readonly("num_vertices", &BoundedGraph::num_vertices)
      .def_property_readonly("num_edges", &BoundedGraph::num_edges)
      .def_property_readonly("edges", [](const BoundedGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def_property_readonly("boundary", &BoundedGraph::boundary)
      .def_property_readonly("interior", &BoundedGraph::interior)
      .def("degree", &BoundedGraph::degree)
      .def("__repr__", [](const BoundedGraph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " edges=" + std::to_string(g.num_edges()) +
               " boundary=" + std::to_string(g.boundary_size()) + ">";
      });

  m.def("laplacian", &laplacian);
  m.def("dtn_matrix", [](const BoundedGraph& g) { return dtn_matrix(g).matrix; });
  m.def("steklov_spectrum", [](const BoundedGraph& g) { return Vector(steklov_spectrum(g).values); });
  m.def("penalized_spectrum", [](const BoundedGraph& g, double r) { return Vector(penalized_spectrum(g, r).values); },
        py::arg("graph"), py::arg("penalty"));
  m.def("rayleigh_quotient", [](const BoundedGraph& g, const std::vector<double>& f) {
    return rayleigh_quotient(g, f);
  });
  m.def("harmonic_extension", [](const BoundedGraph& g, const std::vector<double>& boundary_values) {
    return harmonic_extension(g, boundary_values);
  });

  m.def("evaluate_bounds", [](const BoundedGraph& g) {
    const auto table = evaluate_all(g);
    py::list reports;
    for (const auto& r : table.reports) reports.append(report_dict(r));
    py::list probes;
    for (const auto& p : table.probes) {
      py::dict d;
      d["name"] = p.name;
      d["statement"] = p.statement;
      d["threshold"] = p.threshold;
      d["violated"] = p.violated;
      probes.append(d);
    }
    py::dict out;
    out["sigma"] = Vector(table.spectrum.values);
    out["reports"] = reports;
    out["probes"] = probes;
    return out;
  });
  m.def("degree_diameter_value", &degree_diameter_value);

  m.def("node_weighted_distance", [](const BoundedGraph& g, std::vector<double> s, Vertex u, Vertex v) {
    return node_weighted_distance(g, WeightFunction(std::move(s)), u, v);
  });
  m.def("lambda_s", [](const BoundedGraph& g, std::vector<double> s) {
    return lambda_s(g, WeightFunction(std::move(s)));
  });
  m.def("min_congestion", [](const BoundedGraph& g, int max_iters, double tol) {
    const auto r = min_congestion_flow(g, {max_iters, tol});
    py::dict d;
    d["con2"] = r.con2;
    d["congestion"] = r.congestion;
    d["fw_gap"] = r.fw_gap;
    d["iterations"] = r.iterations;
    d["converged"] = r.converged;
    return d;
  }, py::arg("graph"), py::arg("max_iters") = 5000, py::arg("tol") = 1e-6);
  m.def("duality_gap", [](const BoundedGraph& g, int max_iters, double tol, std::uint64_t seed) {
    const auto r = duality_gap(g, {max_iters, tol}, seed);
    py::dict d;
    d["con2_star"] = r.con2_star;
    d["lambda_star"] = r.lambda_star;
    d["gap"] = r.gap;
    d["converged"] = r.converged;
    d["weak_duality_ok"] = r.weak_duality_ok;
    return d;
  }, py::arg("graph"), py::arg("max_iters") = 5000, py::arg("tol") = 1e-6, py::arg("seed") = 0);

  m.def("run_cli", &run, py::arg("args"), "Runs a steklov command; returns (exit_code, stdout, stderr).");
}
