#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>

#include "mbd/exact.hpp"
#include "mbd/moments.hpp"
#include "mbd/oracle.hpp"
#include "mbd/pmf.hpp"
#include "mbd/shape.hpp"

namespace py = pybind11;
using namespace mbd;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

PmfKind parse_kind(const std::string& s) {
    if (s == "full") return PmfKind::Full;
    if (s == "F" || s == "cond_F") return PmfKind::CondF;
    if (s == "A" || s == "cond_A") return PmfKind::CondA;
    throw py::value_error("kind must be 'full', 'F' or 'A', got '" + s + "'");
}

State parse_state(const std::string& s) {
    if (s == "F") return State::F;
    if (s == "A") return State::A;
    throw py::value_error("state must be 'F' or 'A', got '" + s + "'");
}

py::dict shape_dict(const ShapeClass& s) {
    py::dict d;
    d["class"] = std::string(to_string(s.kind));
    d["unimodal"] = is_unimodal(s.kind);
    d["boundary_values"] = s.boundary_values;
    d["margin"] = s.margin;
    d["modes"] = s.modes.indices;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Markov binomial distribution: exact PMFs, moments and shape classification";

    py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ValueError);

    py::class_<ChainParams>(m, "Params")
        .def(py::init(&make_params), py::arg("a"), py::arg("b"), py::arg("nu_F"))
        .def_static("stationary", &make_stationary_params, py::arg("a"), py::arg("b"),
                    "Chain started from its stationary law")
        .def_property_readonly("a", &ChainParams::a)
        .def_property_readonly("b", &ChainParams::b)
        .def_property_readonly("nu_F", &ChainParams::nu_F)
        .def_property_readonly("nu_A", &ChainParams::nu_A)
        .def("__repr__", [](const ChainParams& p) {
            return "Params(a=" + std::to_string(p.a()) + ", b=" + std::to_string(p.b()) +
                   ", nu_F=" + std::to_string(p.nu_F()) + ")";
        });

    m.def(
        "pmf",
        [](const ChainParams& p, long n, const std::string& method) {
            if (method == "forward") return to_array(pmf(p, n).values);
            if (method == "recursion") return to_array(pmf_scalar_recursion(p, n).values);
            if (method == "closed") return to_array(pmf_closed(p, n).values);
            throw py::value_error("method must be 'forward', 'recursion' or 'closed'");
        },
        py::arg("params"), py::arg("n"), py::arg("method") = "forward", "PMF of K_n as an array of length n + 1");

    m.def(
        "conditional_pmf",
        [](const ChainParams& p, long n, const std::string& state) {
            return to_array(conditional_pmf(p, n, parse_state(state)).values);
        },
        py::arg("params"), py::arg("n"), py::arg("state"), "Law of K_n given Y_n = state ('F' or 'A')");

    m.def(
        "log_pmf",
        [](const ChainParams& p, long n, const std::string& kind) { return to_array(log_pmf(p, n, parse_kind(kind))); },
        py::arg("params"), py::arg("n"), py::arg("kind") = "full", "Natural logs of the full or conditional PMF");

    m.def(
        "state_prob", [](const ChainParams& p, long k, const std::string& s) { return state_prob(p, k, parse_state(s)); },
        py::arg("params"), py::arg("k"), py::arg("state"), "P(Y_k = state)");

    m.def(
        "moments",
        [](const ChainParams& p, long n) {
            const auto r = moment_report(p, n);
            py::dict d;
            d["n"] = r.n;
            d["mean"] = r.mean;
            d["variance"] = r.variance;
            d["cond_mean_F"] = r.cond_mean_F;
            d["cond_mean_A"] = r.cond_mean_A;
            d["cond_var_F"] = r.cond_var_F;
            d["cond_var_A"] = r.cond_var_A;
            return d;
        },
        py::arg("params"), py::arg("n"), "Mean, variance and conditional moments (NaN where undefined)");

    m.def(
        "cond_moment",
        [](const ChainParams& p, long n, const std::string& s, int order) {
            return cond_moment(p, n, parse_state(s), order);
        },
        py::arg("params"), py::arg("n"), py::arg("state"), py::arg("m"), "E[K_n^m | Y_n = state]");

    m.def(
        "classify",
        [](const ChainParams& p, long n, const std::string& kind) { return shape_dict(classify(p, n, parse_kind(kind))); },
        py::arg("params"), py::arg("n"), py::arg("kind") = "full", "Shape class of the full or conditional PMF");

    m.def(
        "classify_values",
        [](const std::vector<double>& values) {
            return std::string(to_string(classify_values(std::span<const double>(values))));
        },
        py::arg("values"), "Shape class of an arbitrary sequence f(0..n)");

    m.def(
        "classify_exact",
        [](const ChainParams& p, long n, const std::string& kind) {
            return std::string(to_string(exact::classify(p, n, parse_kind(kind))));
        },
        py::arg("params"), py::arg("n"), py::arg("kind") = "full",
        "Shape class decided in exact rational arithmetic (n <= 64)");

    m.def(
        "is_log_concave",
        [](const std::vector<double>& values, bool strict) { return is_log_concave(values, strict); },
        py::arg("values"), py::arg("strict") = false);

    m.def(
        "classify_region",
        [](long n, py::object nu, int grid, unsigned threads) {
            NuSpec spec;
            if (py::isinstance<py::str>(nu)) {
                if (nu.cast<std::string>() != "stationary") throw py::value_error("nu must be 'stationary' or a number");
                spec = NuSpec::stationary();
            } else {
                spec = NuSpec::fixed(nu.cast<double>());
            }
            RegionGrid g;
            {
                py::gil_scoped_release release;
                g = classify_region(n, spec, grid, threads);
            }
            std::vector<double> centers(static_cast<std::size_t>(grid));
            for (int i = 0; i < grid; ++i) centers[static_cast<std::size_t>(i)] = (i + 0.5) / grid;
            std::vector<std::vector<std::string>> classes(static_cast<std::size_t>(grid));
            for (int i = 0; i < grid; ++i) {
                for (int j = 0; j < grid; ++j) classes[static_cast<std::size_t>(i)].emplace_back(to_string(g.at(i, j).shape.kind));
            }
            py::dict d;
            d["n"] = n;
            d["grid"] = grid;
            d["a"] = to_array(centers);
            d["b"] = to_array(centers);
            d["classes"] = classes;
            return d;
        },
        py::arg("n"), py::arg("nu") = "stationary", py::arg("grid") = 100, py::arg("threads") = 0u,
        "Shape classes at grid cell centers; classes[i][j] belongs to (a[i], b[j])");

    m.def(
        "enumerate",
        [](const ChainParams& p, long n) {
            const auto e = enumerate(p, n);
            py::array_t<double> out({static_cast<py::ssize_t>(e.joint.size()), py::ssize_t{2}});
            auto w = out.mutable_unchecked<2>();
            for (std::size_t j = 0; j < e.joint.size(); ++j) {
                w(static_cast<py::ssize_t>(j), 0) = e.joint[j][0];
                w(static_cast<py::ssize_t>(j), 1) = e.joint[j][1];
            }
            return out;
        },
        py::arg("params"), py::arg("n"), "Joint law P(K_n = j, Y_n = F/A) by summing all 2^n paths (n <= 20)");

    m.def(
        "sample",
        [](const ChainParams& p, long n, std::uint64_t reps, std::uint64_t seed) {
            SampleSummary s;
            {
                py::gil_scoped_release release;
                s = sample(p, n, reps, seed);
            }
            py::dict d;
            d["n"] = s.n;
            d["reps"] = s.reps;
            d["seed"] = s.seed;
            d["generator"] = s.generator;
            d["histogram"] = s.histogram;
            d["terminal_counts"] = py::dict(py::arg("F") = s.terminal_counts[0], py::arg("A") = s.terminal_counts[1]);
            d["empirical_mean"] = s.empirical_mean();
            return d;
        },
        py::arg("params"), py::arg("n"), py::arg("reps"), py::arg("seed") = 1u, "Monte Carlo histogram of K_n");
}
