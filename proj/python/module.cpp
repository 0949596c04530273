// Python bindings. Exact values cross the boundary as strings ("p/q" for
// rationals, decimal digits for big integers); the package wrapper turns
// them into Fraction and int.

#include "lisinv/report.hpp"
#include "lisinv/sampler.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lisinv;

namespace {

Permutation to_perm(const std::vector<int>& v) {
    std::vector<Permutation::value_type> e;
    e.reserve(v.size());
    for (int x : v) {
        if (x < 1 || x > 65535) throw std::invalid_argument("permutation entries must be in 1..n");
        e.push_back(static_cast<Permutation::value_type>(x));
    }
    return Permutation(std::move(e));
}

std::vector<int> from_perm(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

PatternSet to_patterns(const std::vector<std::string>& pats) {
    std::string joined;
    for (const auto& p : pats) joined += (joined.empty() ? "" : ",") + p;
    return PatternSet::parse(joined);
}

py::dict moment_dict(const MomentReport& m) {
    py::dict d;
    d["n"] = m.n;
    d["count"] = to_string(m.count);
    d["mean"] = to_string(m.mean);
    d["variance"] = to_string(m.variance);
    return d;
}

}  // namespace

PYBIND11_MODULE(_lisinv, m) {
    m.doc() = "LIS statistics on 3412-avoiding involutions";

    py::register_exception<LimitError>(m, "LimitError", PyExc_ValueError);
    py::register_exception<EmptyClassError>(m, "EmptyClassError", PyExc_ValueError);
    py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);

    m.def("lis", [](const std::vector<int>& p) { return lis(to_perm(p)); });
    m.def("is_involution", [](const std::vector<int>& p) { return is_involution(to_perm(p)); });
    m.def("contains_pattern", [](const std::vector<int>& p, const std::vector<int>& pat) {
        return contains_pattern(to_perm(p), to_perm(pat));
    });

    m.def(
        "lis_distribution",
        [](int n, const std::vector<std::string>& patterns) {
            LisDistribution d;
            {
                py::gil_scoped_release nogil;
                d = lis_distribution(n, to_patterns(patterns));
            }
            py::dict counts;
            for (int k = 0; k <= n; ++k)
                if (d.counts[k]) counts[py::int_(k)] = d.counts[k];
            py::dict out;
            out["n"] = n;
            out["class_size"] = d.class_size;
            out["counts"] = counts;
            return out;
        },
        py::arg("n"), py::arg("patterns") = std::vector<std::string>{"3412"});

    m.def(
        "gf_coeffs",
        [](const std::string& name, int order) {
            BiSeries s;
            {
                py::gil_scoped_release nogil;
                const Catalog& cat = Catalog::builtin();
                s = cat.evaluate<QPoly>(cat.find(name), order);
            }
            std::vector<std::vector<std::string>> out;
            for (const auto& slice : s.slices()) {
                std::vector<std::string> row;
                for (const auto& c : slice.coeffs()) row.push_back(to_string(c));
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("name"), py::arg("order"));

    m.def(
        "moments",
        [](const std::string& name, int n, int order) {
            MomentReport r;
            {
                py::gil_scoped_release nogil;
                const Catalog& cat = Catalog::builtin();
                r = moments(cat.evaluate<QJet>(cat.find(name), std::max(order, n)), n);
            }
            return moment_dict(r);
        },
        py::arg("name"), py::arg("n"), py::arg("order") = 0);

    m.def(
        "oracle_moments",
        [](int n, const std::vector<std::string>& patterns) {
            const auto t = to_patterns(patterns);
            MomentReport r;
            r.n = n;
            const auto d = lis_distribution(n, t);
            r.count = Rational(BigInt(static_cast<unsigned long>(d.class_size)));
            r.mean = expectation(d);
            r.variance = variance(d);
            return moment_dict(r);
        },
        py::arg("n"), py::arg("patterns") = std::vector<std::string>{"3412"});

    m.def("count_table", [](int n_max) {
        const CountTable t(n_max);
        std::vector<std::string> out;
        for (const auto& v : t.counts()) out.push_back(v.get_str());
        return out;
    });

    m.def(
        "sample",
        [](int n, std::uint64_t seed, std::uint64_t stream) {
            const CountTable t(n);
            RandomSource rng(seed, stream);
            return from_perm(sample_3412_involution(n, t, rng));
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("stream") = 0);

    m.def(
        "monte_carlo",
        [](int n, std::uint64_t samples, std::uint64_t seed) {
            SampleStats st;
            {
                py::gil_scoped_release nogil;
                st = monte_carlo_lis(n, samples, seed);
            }
            py::dict d;
            d["n"] = st.n;
            d["sample_count"] = st.sample_count;
            d["seed"] = st.seed;
            d["rng"] = st.rng;
            d["mean_lis"] = st.mean_lis;
            d["stderr_lis"] = st.stderr_lis;
            d["histogram"] = st.histogram;
            return d;
        },
        py::arg("n"), py::arg("samples"), py::arg("seed") = 0);

    m.def("smallest_root", [](const std::vector<std::string>& coeffs) {
        std::vector<BigInt> p;
        for (const auto& c : coeffs) p.emplace_back(c);
        const auto r = smallest_root(p);
        return py::make_tuple(to_string(r.lo), to_string(r.hi), to_decimal(r.value, 12));
    });

    m.def("constant_for", [](const std::string& name) { return constant_decimal(Catalog::builtin(), name); });

    m.def(
        "verify",
        [](int max_n, int order, const std::string& only) {
            std::vector<Check> checks;
            {
                py::gil_scoped_release nogil;
                checks = run_verification(Catalog::builtin(), {max_n, order, only});
            }
            std::vector<py::tuple> out;
            for (const auto& c : checks) out.push_back(py::make_tuple(c.name, c.pass, c.detail));
            return out;
        },
        py::arg("max_n") = 10, py::arg("order") = 64, py::arg("only") = "");

    m.def(
        "table1",
        [](int n_hi, double tolerance) {
            std::vector<AsymptoticRow> rows;
            {
                py::gil_scoped_release nogil;
                rows = table1_report(Catalog::builtin(), n_hi, tolerance);
            }
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["row"] = r.name;
                d["patterns"] = r.patterns;
                d["statistic"] = r.statistic;
                d["growth"] = to_string(r.growth);
                d["measured"] = r.measured;
                d["constant"] = r.constant_decimal;
                d["relative_error"] = r.relative_error;
                d["pass"] = r.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("n_hi") = 2000, py::arg("tolerance") = 0.01);
}
