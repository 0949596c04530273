#include "lisinv/report.hpp"

#include "lisinv/sampler.hpp"

#include <cmath>

namespace lisinv {

namespace {

std::string join_patterns(const GfSpec& spec) {
    std::string s;
    for (const auto& cls : spec.classes) {
        std::string extra;
        for (const auto& p : cls.patterns())
            if (p.to_string() != "3412") extra = p.to_string();
        if (!s.empty()) s += '/';
        s += extra.empty() ? "3412" : extra;
    }
    return s;
}

bool wanted(const VerifyOptions& o, const std::string& name) { return o.only.empty() || o.only == name; }

Check equivalence(const std::string& name, const BiSeries& a, const BiSeries& b, int order) {
    Check c{name, true, {}};
    for (int n = 0; n <= order; ++n) {
        if (!(a[n] == b[n])) {
            c.pass = false;
            c.detail = "x^" + std::to_string(n) + ": " + a[n].to_string() + " vs " + b[n].to_string();
            break;
        }
    }
    return c;
}

template <class F>
Check guarded(const std::string& name, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

}  // namespace

Check oracle_check(const std::string& name, const BiSeries& series, const std::vector<PatternSet>& classes, int max_n) {
    Check c{name, true, {}};
    if (!has_nonnegative_integer_coeffs(series)) {
        c.pass = false;
        c.detail = "series has a negative or non-integer coefficient";
    } else if (max_excess_q_degree(series) > 0) {
        c.pass = false;
        c.detail = "some x^n slice has q-degree above n";
    }
    for (const auto& cls : classes) {
        for (int n = 0; n <= max_n && c.pass; ++n) {
            const QPoly oracle = empirical_polynomial(n, cls);
            if (!(series[n] == oracle)) {
                c.pass = false;
                c.detail = "T={" + cls.key() + "} x^" + std::to_string(n) + ": series " + series[n].to_string() +
                           " vs oracle " + oracle.to_string();
            }
        }
    }
    return c;
}

std::vector<Check> run_verification(const Catalog& catalog, const VerifyOptions& o) {
    std::vector<Check> checks;
    const int order = std::max(o.order, o.max_n);

    for (const auto& spec : catalog.specs()) {
        if (!wanted(o, spec.name)) continue;
        const std::string name = "oracle:" + spec.name;
        checks.push_back(guarded(name, [&] {
            return oracle_check(name, catalog.evaluate<QPoly>(spec, order), spec.classes, o.max_n);
        }));
    }

    if (wanted(o, "H_3412")) {
        checks.push_back(guarded("quadratic:H_3412", [&] {
            // x^2 H^2 + (xq + x^2(q-1) - 1) H + 1 = 0
            const BiSeries h = h_3412<QPoly>(order);
            const BiSeries x = BiSeries::x(order), q = BiSeries::q(order), one = BiSeries::one(order);
            const BiSeries lhs = x * x * h * h + (x * q + x * x * (q - one) - one) * h + one;
            Check c{"quadratic:H_3412", lhs.valuation() > order, {}};
            if (!c.pass) c.detail = "nonzero at x^" + std::to_string(lhs.valuation());
            return c;
        }));
        checks.push_back(guarded("motzkin:H_3412", [&] {
            Check c{"motzkin:H_3412", true, {}};
            const auto counts = eval_q1(h_3412<QPoly>(order));
            const CountTable table(order);
            for (int n = 0; n <= order && c.pass; ++n) {
                const bool oracle_ok = n > o.max_n || Rational(BigInt(static_cast<unsigned long>(
                                                           lis_distribution(n, PatternSet::with_3412()).class_size))) == counts[n];
                if (counts[n] != Rational(table[n]) || !oracle_ok) {
                    c.pass = false;
                    c.detail = "n=" + std::to_string(n) + ": series " + to_string(counts[n]) + " vs recurrence " +
                               table[n].get_str();
                }
            }
            return c;
        }));
    }

    if (wanted(o, "F_k")) {
        for (int k = 2; k <= 8; ++k) {
            const std::string name = "family:F_k_recurrence==F_k_narayana(" + std::to_string(k) + ")";
            checks.push_back(guarded(name, [&] {
                return equivalence(name, f_k_recurrence<QPoly>(k, order), f_k_narayana<QPoly>(k, order), order);
            }));
        }
    }
    if (wanted(o, "Dec_k")) {
        for (int k = 3; k <= 6; ++k) {
            const std::string name = "family:Dec_k==Dec_k_chebyshev(" + std::to_string(k) + ")";
            checks.push_back(guarded(name, [&] {
                return equivalence(name, dec_k<QPoly>(k, order), dec_k_chebyshev<QPoly>(k, order), order);
            }));
        }
    }
    if (wanted(o, "G_k")) {
        checks.push_back(guarded("family:G_k(4)==H_4123", [&] {
            return equivalence("family:G_k(4)==H_4123", g_k<QPoly>(4, order),
                               catalog.evaluate<QPoly>(catalog.find("H_4123"), order), order);
        }));
    }

    if (o.only.empty()) {
        checks.push_back(guarded("structure:decomposition", [&] {
            Check c{"structure:decomposition", true, {}};
            for (int n = 1; n <= o.max_n && c.pass; ++n) {
                for (const auto& p : restricted_involutions(n, PatternSet::with_3412())) {
                    const auto d = decompositions_3412(p);
                    if (d.size() != 1) {
                        c.pass = false;
                        c.detail = p.to_string() + " matches " + std::to_string(d.size()) + " branches";
                        break;
                    }
                }
            }
            return c;
        }));
        for (const char* tau : {"231", "312"}) {
            const std::string name = std::string("known-class:I_n(") + tau + ")";
            checks.push_back(guarded(name, [&] {
                Check c{name, true, {}};
                const auto cls = PatternSet::bare({Permutation::parse(tau)});
                for (int n = 1; n <= o.max_n && c.pass; ++n) {
                    const Rational e = exact_expectation(n, cls);
                    Rational expected(n + 1, 2);
                    expected.canonicalize();
                    if (e != expected) {
                        c.pass = false;
                        c.detail = "n=" + std::to_string(n) + ": E = " + to_string(e);
                    }
                }
                return c;
            }));
        }
    }
    return checks;
}

namespace {

AsymptoticRow make_row(const Catalog& catalog, std::string name, const GfSpec& spec, const std::string& statistic,
                       const AsymptoticTarget& target, double measured, double tolerance) {
    AsymptoticRow r;
    r.name = std::move(name);
    r.gf = spec.name;
    r.patterns = join_patterns(spec);
    r.statistic = statistic;
    r.growth = target.growth;
    r.measured = measured;
    const mpf_class c = catalog.constant(target.constant);
    r.constant = c.get_d();
    r.constant_decimal = to_decimal(c, 12);
    r.relative_error = std::abs(measured - r.constant) / std::abs(r.constant);
    r.pass = r.relative_error <= tolerance;
    return r;
}

}  // namespace

std::vector<AsymptoticRow> table1_report(const Catalog& catalog, int n_hi, double tolerance) {
    std::vector<AsymptoticRow> rows;
    for (const GfSpec* spec : catalog.table1_rows()) {
        const JetSeries s = catalog.evaluate<QJet>(*spec, n_hi);
        const SlopeEstimate est = asymptotic_slope(s, n_hi / 2, n_hi);
        if (spec->mean)
            rows.push_back(make_row(catalog, spec->name, *spec, "E", *spec->mean, est.mean_statistic(spec->mean->growth), tolerance));
        if (spec->variance)
            rows.push_back(make_row(catalog, spec->name, *spec, "Var", *spec->variance,
                                    est.variance_statistic(spec->variance->growth), tolerance));
    }
    return rows;
}

std::vector<AsymptoticRow> theorem_report(const Catalog& catalog, int n_hi, double tolerance) {
    std::vector<AsymptoticRow> rows;
    for (const auto& t : catalog.theorem_targets()) {
        const GfSpec spec = catalog.find(t.gf);
        const JetSeries s = catalog.evaluate<QJet>(spec, n_hi);
        const SlopeEstimate est = asymptotic_slope(s, n_hi / 2, n_hi);
        rows.push_back(make_row(catalog, t.name, spec, "E", t.mean, est.mean_statistic(t.mean.growth), tolerance));
    }
    return rows;
}

}  // namespace lisinv
