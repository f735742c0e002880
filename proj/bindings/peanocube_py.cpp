#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "peanocube/analysis.hpp"
#include "peanocube/convexity.hpp"
#include "peanocube/euler.hpp"
#include "peanocube/hypermedian.hpp"
#include "peanocube/io.hpp"
#include "peanocube/retracts.hpp"
#include "peanocube/transform.hpp"

namespace py = pybind11;
using namespace peanocube;

namespace {

py::dict report_dict(const AnalysisReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["n"] = r.n;
    d["m"] = r.m;
    d["partialCube"] = r.flags.partial_cube;
    d["peano"] = r.flags.peano;
    d["median"] = r.flags.median;
    d["netlike"] = r.flags.netlike;
    d["cubeFreeNetlike"] = r.flags.cube_free_netlike;
    d["cellular"] = r.flags.cellular;
    d["hyperMedian"] = r.hyper_median;
    d["quasiHypertorus"] = r.flags.quasi_hypertorus;
    d["antipodal"] = r.flags.antipodal;
    d["bulgeRegular"] = r.flags.bulge_regular;
    if (r.ph >= 0) d["ph"] = r.ph;
    if (r.idim >= 0) d["idim"] = r.idim;
    if (r.helly >= 0) d["helly"] = r.helly;
    if (r.depth_value >= 0) d["depth"] = r.depth_value;
    if (r.flags.partial_cube) {
        d["eulerSum"] = r.euler_sum;
        d["idimFormula"] = r.idim_formula;
    }
    if (!r.leaf_multiset.empty()) d["decompositionLeafMultiset"] = r.leaf_multiset;
    d["warnings"] = r.warnings;
    return d;
}

}  // namespace

PYBIND11_MODULE(_peanocube, m) {
    m.doc() = "Structure theory of Peano partial cubes: recognition, convexity, "
              "decomposition and Euler-type invariants for finite graphs";

    py::register_exception<Error>(m, "PeanocubeError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>, std::string>(), py::arg("n"), py::arg("edges"),
             py::arg("name") = "")
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def_property_readonly("name", &Graph::name)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("is_regular", &Graph::is_regular)
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + (g.name().empty() ? "" : g.name() + " ") +
                   std::to_string(g.n()) + " vertices, " + std::to_string(g.m()) + " edges>";
        });

    py::class_<TorusDescriptor>(m, "TorusDescriptor")
        .def_readonly("vertices", &TorusDescriptor::vertices)
        .def_readonly("k2_factors", &TorusDescriptor::k2_factors)
        .def_readonly("cycle_factors", &TorusDescriptor::cycle_factors)
        .def_property_readonly("dimension", &TorusDescriptor::dimension)
        .def_property_readonly("gamma", &TorusDescriptor::gamma)
        .def("__repr__",
             [](const TorusDescriptor& t) { return "<Torus " + torus_label(t) + ">"; });

    // generators and fixtures
    m.def("hypercube", &make_hypercube, py::arg("dim"));
    m.def("even_cycle", &make_even_cycle, py::arg("length"));
    m.def("hypertorus", &make_hypertorus, py::arg("cycle_lengths"));
    m.def("prism", &make_prism, py::arg("base"));
    m.def("path", &make_path, py::arg("edges"));
    m.def("tree", &make_tree, py::arg("vertices"), py::arg("seed") = 1);
    m.def("fixture", &fixture, py::arg("name"));
    m.def("fixture_names", &fixture_names);

    // metric and convexity basics
    m.def("distance_matrix", [](const Graph& g) {
        DistanceMatrix d(g);
        std::vector<std::vector<int>> out(g.n(), std::vector<int>(g.n()));
        for (int u = 0; u < g.n(); ++u) {
            for (int v = 0; v < g.n(); ++v) out[u][v] = d.at(u, v);
        }
        return out;
    });
    m.def("interval", [](const Graph& g, int x, int y) {
        Metric m2(g);
        return interval(m2, x, y);
    });
    m.def("convex_hull", [](const Graph& g, const VertexSet& seed) {
        auto res = convex_hull(g, seed);
        return py::make_tuple(res.members.to_vector(), res.iterations);
    });
    m.def("is_convex", [](const Graph& g, const VertexSet& s) { return is_convex(g, s).convex; });
    m.def("gate", [](const Graph& g, const VertexSet& f, int x) -> py::object {
        Metric m2(g);
        auto gate = gate_of(m2, Bitset::of(g.n(), f), x);
        if (!gate) return py::none();
        return py::int_(*gate);
    });
    m.def("is_gated", [](const Graph& g, const VertexSet& f) {
        Metric m2(g);
        return is_gated(m2, Bitset::of(g.n(), f));
    });
    m.def("w_set", [](const Graph& g, int a, int b) {
        Metric m2(g);
        return w_set(g, m2, a, b).to_vector();
    });
    m.def("u_set", [](const Graph& g, int a, int b) {
        Metric m2(g);
        return u_set(g, m2, a, b).to_vector();
    });

    // recognition
    m.def("is_partial_cube", [](const Graph& g) { return is_partial_cube(g).ok; });
    m.def("isometric_dimension", &isometric_dimension);
    m.def("is_peano", [](const Graph& g) { return is_peano(g).value; });
    m.def("is_median", &is_median);
    m.def("is_netlike", &is_netlike);
    m.def("is_cube_free_netlike", &is_cube_free_netlike);
    m.def("is_cellular", &is_cellular);
    m.def("is_hyper_median", [](const Graph& g) { return is_hyper_median(g).value; });
    m.def("is_antipodal", [](const Graph& g) { return is_antipodal(g).antipodal; });
    m.def("quasi_hypertorus", [](const Graph& g) -> py::object {
        auto t = is_quasi_hypertorus(g);
        if (!t) return py::none();
        return py::cast(*t);
    });

    // invariants
    m.def("prehull_number", &prehull_number);
    m.def("helly_number", &helly_number, py::arg("g"), py::arg("oracle_cap") = 12);
    m.def("depth", [](const Graph& g) { return depth(g).depth; });
    m.def("euler_characteristic", [](const Graph& g) {
        return euler_characteristic(beta_table(g));
    });
    m.def("idim_by_formula", [](const Graph& g) { return idim_by_formula(beta_table(g)); });
    m.def("convex_excess", [](const Graph& g) { return convex_excess(g); });
    m.def("ksh_defect", &ksh_defect);
    m.def("beta_table", [](const Graph& g) {
        py::dict out;
        for (const auto& [key, count] : beta_table(g).beta) {
            out[py::make_tuple(key.first, key.second)] = count;
        }
        return out;
    });

    // transforms and decomposition
    m.def("theta_class_count", [](const Graph& g) { return theta_classes(g).class_count(); });
    m.def("contract", [](const Graph& g, int class_id) { return contract(g, class_id).result; });
    m.def("expand", [](const Graph& g, const VertexSet& v0, const VertexSet& v1) {
        return expand(g, {v0, v1}).graph;
    });
    m.def("gated_amalgam",
          [](const Graph& g0, const Graph& g1, const std::vector<int>& e0,
             const std::vector<int>& e1) { return gated_amalgam(g0, g1, e0, e1).graph; });
    m.def("decomposition_leaves", [](const Graph& g) {
        auto tree = decompose(g);
        std::vector<std::string> out;
        for (const auto* t : tree.leaves()) out.push_back(torus_label(*t));
        std::sort(out.begin(), out.end());
        return out;
    });
    m.def("fixed_torus", [](const Graph& g) { return fixed_torus_under_automorphisms(g); });
    m.def("median_or_hyper_median", [](const Graph& g, int u, int v, int w) -> py::object {
        auto res = median_or_hyper_median(g, u, v, w);
        py::dict d;
        if (res.kind == MedianResult::Kind::Median) {
            d["kind"] = "median";
            d["median"] = res.median;
        } else if (res.kind == MedianResult::Kind::HyperMedian) {
            d["kind"] = "hyper-median";
            d["triangle"] = res.triangle;
            d["hull"] = res.hull->vertices;
        } else {
            d["kind"] = "none";
        }
        return d;
    });

    // I/O and the aggregate report
    m.def("from_json", &graph_from_json);
    m.def("to_json", &graph_to_json);
    m.def("analyze", [](const Graph& g) { return report_dict(analyze(g)); });

    m.attr("__version__") = "1.0.0";
}
