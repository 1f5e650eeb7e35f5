#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilecount/bounds.hpp"
#include "tilecount/core.hpp"
#include "tilecount/counting.hpp"
#include "tilecount/enumerate.hpp"
#include "tilecount/multidim.hpp"
#include "tilecount/numtheory.hpp"
#include "tilecount/oracle.hpp"
#include "tilecount/subtile.hpp"

namespace py = pybind11;
using namespace tilecount;

namespace {

py::int_ to_py(const Count& c) {
    PyObject* obj = PyLong_FromString(c.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list points_to_py(const PointSet& s) {
    py::list out;
    for (const auto& p : s.points()) {
        if (s.dim() == 1) {
            out.append(p[0]);
        } else {
            py::tuple t(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) t[i] = p[i];
            out.append(t);
        }
    }
    return out;
}

PointSet points_from_py(const py::sequence& seq) {
    std::vector<Point> pts;
    unsigned dim = 1;
    for (const auto& item : seq) {
        if (py::isinstance<py::int_>(item)) {
            pts.push_back({item.cast<std::int64_t>()});
        } else {
            Point p = item.cast<Point>();
            dim = static_cast<unsigned>(p.size());
            pts.push_back(std::move(p));
        }
    }
    return PointSet(dim, std::move(pts));
}

py::dict tiling_to_py(const TilingPair& t) {
    py::dict out;
    out["A"] = points_to_py(t.tile);
    out["B"] = points_to_py(t.translations);
    if (const auto* box = std::get_if<BoxShape>(&t.region))
        out["C"] = py::cast(box->sides);
    else
        out["C"] = points_to_py(std::get<PointSet>(t.region));
    return out;
}

}  // namespace

PYBIND11_MODULE(_tilecount, m) {
    m.doc() = "Exact counting and enumeration of translational tilings of "
              "finite discrete boxes.";

    m.def("count", [](std::uint64_t alpha, std::uint64_t n) {
        return to_py(count_full(alpha, n));
    }, py::arg("alpha"), py::arg("n"),
       "Number of tilings of [n] by tiles of size alpha (segment/rift recursion).");

    m.def("count_ie", [](std::uint64_t alpha, std::uint64_t n) {
        return to_py(count_ie(alpha, n));
    }, py::arg("alpha"), py::arg("n"),
       "Same count via the independent inclusion-exclusion recursion.");

    m.def("count_box", [](std::uint64_t alpha, std::vector<std::uint64_t> dims) {
        return to_py(count_box_total(alpha, BoxShape(std::move(dims))));
    }, py::arg("alpha"), py::arg("dims"),
       "Number of tilings of the box with the given side lengths.");

    m.def("total_count", [](std::uint64_t n) { return to_py(total_count(n)); },
          py::arg("n"), "Sum of count(alpha, n) over all alpha | n (OEIS A067824).");

    m.def("enumerate_interval",
          [](std::uint64_t alpha, std::uint64_t n, std::uint64_t limit) {
              py::list out;
              for (const auto& t : enumerate_interval(alpha, n, limit).tilings)
                  out.append(tiling_to_py(t));
              return out;
          },
          py::arg("alpha"), py::arg("n"), py::arg("limit") = 1000000,
          "All tilings of [n] by tiles of size alpha, in the canonical order.");

    m.def("brute_force_tilings",
          [](std::uint64_t alpha, const py::sequence& region, std::uint64_t node_cap) {
              py::list out;
              for (const auto& t : brute_force_tilings(alpha, points_from_py(region),
                                                       node_cap))
                  out.append(tiling_to_py(t));
              return out;
          },
          py::arg("alpha"), py::arg("region"), py::arg("node_cap") = 100000000,
          "Oracle enumeration over an arbitrary finite region (list of points).");

    m.def("is_valid_tiling",
          [](const py::sequence& a, const py::sequence& b, const py::sequence& c) {
              return is_valid_tiling(points_from_py(a), points_from_py(b),
                                     points_from_py(c));
          },
          py::arg("tile"), py::arg("translations"), py::arg("region"));

    m.def("upper_bound_log2", &upper_bound_log2, py::arg("alpha"), py::arg("n"));
    m.def("upper_bound_holds", &upper_bound_holds, py::arg("alpha"), py::arg("n"));

    m.def("max_count", [](std::uint64_t n) {
        auto [alpha, c] = max_count(n);
        return py::make_tuple(alpha, to_py(c));
    }, py::arg("n"), "(alpha, count) maximizing count(alpha, n) over alpha | n.");

    m.def("family_2k", [](std::uint64_t k) {
        const auto r = family_2k(k);
        py::dict out;
        out["k"] = r.k;
        out["alpha"] = r.alpha;
        out["n"] = r.n;
        out["count"] = to_py(r.count);
        out["exponent_per_k"] = r.exponent_per_k;
        out["holds"] = r.holds;
        return out;
    }, py::arg("k"));

    m.def("conjecture_probe",
          [](std::uint64_t alpha, std::uint64_t n, std::uint64_t window) {
              const auto r = conjecture_probe(alpha, n, window);
              py::dict out;
              out["alpha"] = r.alpha;
              out["n"] = r.n;
              out["window"] = r.window;
              out["interval_count"] = to_py(r.interval_count);
              out["max_count"] = to_py(r.max_count);
              out["argmax_C"] = py::cast(r.argmax_c);
              out["violations"] = py::cast(r.violations);
              out["sets_scanned"] = r.sets_scanned;
              return out;
          },
          py::arg("alpha"), py::arg("n"), py::arg("window"));

    m.def("subtile_bound_check",
          [](std::uint64_t alpha_prime, const py::sequence& ambient_a,
             const py::sequence& ambient_b, std::uint64_t n) {
              const auto v = subtile_bound_check(alpha_prime, points_from_py(ambient_a),
                                                 points_from_py(ambient_b), n);
              py::dict out;
              out["tilings_of_tile"] = to_py(v.tilings_of_tile);
              out["tilings_of_interval"] = to_py(v.tilings_of_interval);
              out["bound_holds"] = v.bound_holds;
              out["injective"] = v.injective;
              return out;
          },
          py::arg("alpha_prime"), py::arg("ambient_a"), py::arg("ambient_b"),
          py::arg("n"));

    py::register_exception<WorkCapExceeded>(m, "WorkCapExceeded");
}
