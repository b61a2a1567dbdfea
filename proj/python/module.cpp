#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricount/approx_counter.hpp"
#include "tricount/base_estimator.hpp"
#include "tricount/io.hpp"

namespace py = pybind11;
using namespace tricount;

namespace {

std::vector<Point> to_points(const std::vector<std::pair<long, long>>& pts) {
    std::vector<Point> S;
    S.reserve(pts.size());
    for (const auto& [x, y] : pts) S.emplace_back(x, y);
    return S;
}

// Counts can exceed any machine word; hand them to Python as true ints.
py::int_ to_py_int(const BigInt& v) {
    PyObject* o = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!o) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(o);
}

DPConfig config_from(int k, int delta, const std::string& family) {
    DPConfig cfg;
    cfg.k = k;
    cfg.delta = delta;
    if (family == "triquad")
        cfg.family = CellFamily::TriQuad;
    else if (family == "binary-cut")
        cfg.family = CellFamily::BinaryCut;
    else if (family == "exhaustive")
        cfg.family = CellFamily::Exhaustive;
    else
        throw InvalidInput("unknown cell family: " + family);
    return cfg;
}

} // namespace

PYBIND11_MODULE(_tricount, m) {
    m.doc() = "Exact and approximate triangulation counting for planar point sets";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<CapacityExceeded>(m, "CapacityExceeded", PyExc_RuntimeError);

    m.def(
        "count_triangulations",
        [](const std::vector<std::pair<long, long>>& pts, unsigned long cap) {
            return to_py_int(count_triangulations(to_points(pts), cap));
        },
        py::arg("points"), py::arg("cap") = kDefaultTriangulationCap,
        "Exact number of triangulations via flip-graph enumeration.");

    m.def(
        "brute_force_oracle",
        [](const std::vector<std::pair<long, long>>& pts) {
            return to_py_int(brute_force_oracle(to_points(pts)));
        },
        py::arg("points"),
        "Independent maximal-clique count over compatible candidate edges (n <= 12).");

    m.def(
        "approx_count",
        [](const std::vector<std::pair<long, long>>& pts, int k, int delta,
           const std::string& family) {
            auto res = approx_count(to_points(pts), config_from(k, delta, family));
            py::dict stats;
            stats["cells"] = res.stats.cells;
            stats["base_cells"] = res.stats.base_cells;
            stats["partitions"] = res.stats.partitions;
            stats["warnings"] = res.stats.warnings;
            return py::make_tuple(to_py_int(res.count), stats);
        },
        py::arg("points"), py::arg("k") = 4, py::arg("delta") = 6,
        py::arg("family") = "triquad",
        "Approximate count from the cell-partition recurrence; returns (count, stats).");

    m.def(
        "estimate_base",
        [](py::int_ lam, unsigned long n, double epsilon) {
            BigInt lambda(py::str(lam).cast<std::string>());
            auto est = estimate_base(lambda, n, epsilon);
            py::dict out;
            out["base"] = est.base;
            out["lower"] = est.lower;
            out["upper"] = est.upper;
            out["epsilon"] = est.epsilon_used;
            out["n"] = est.n;
            return out;
        },
        py::arg("count"), py::arg("n"), py::arg("epsilon") = 0.1,
        "Per-point base count**(1/n) with a 2**epsilon bracket.");

    m.def(
        "catalan", [](unsigned k) { return to_py_int(catalan(k)); }, py::arg("k"));

    m.def(
        "generate_points",
        [](const std::string& kind, int n, unsigned long seed) {
            std::vector<std::pair<long, long>> out;
            for (const auto& p : generate_points(parse_gen_kind(kind), n, seed))
                out.emplace_back(p.x.get_si(), p.y.get_si());
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 1,
        "Deterministic generators: 'convex', 'grid' or 'random'.");
}
