// lisinv: tables and verification verdicts for LIS statistics on
// 3412-avoiding involutions.
//
// Exit codes: 0 success, 1 verification failure, 2 input or limit error.

#include "lisinv/report.hpp"
#include "lisinv/sampler.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace lisinv;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::optional<int> n;
    std::string n_range;
    std::string avoid;
    std::string gf;
    std::optional<int> order;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
    std::string catalog;
    std::string only;
    int max_n = 10;
    int n_hi = 2000;
    double tolerance = 0.01;
    bool theorems = false;
    bool expand = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One result, rendered either way.
struct Output {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    json doc;
    int exit_code = 0;
};

std::pair<int, int> range_of(const RunConfig& c) {
    if (!c.n_range.empty()) {
        const auto dots = c.n_range.find("..");
        if (dots == std::string::npos) throw InputError("--n-range expects A..B");
        try {
            const int a = std::stoi(c.n_range.substr(0, dots));
            const int b = std::stoi(c.n_range.substr(dots + 2));
            if (a < 0 || b < a) throw InputError("--n-range: need 0 <= A <= B");
            return {a, b};
        } catch (const std::logic_error&) {
            throw InputError("--n-range expects A..B, got '" + c.n_range + "'");
        }
    }
    if (!c.n) throw InputError("give --n or --n-range");
    if (*c.n < 0) throw InputError("--n must be nonnegative");
    return {*c.n, *c.n};
}

const Catalog& catalog_of(const RunConfig& c) {
    if (c.catalog.empty()) return Catalog::builtin();
    static const Catalog loaded = Catalog::load(c.catalog);
    return loaded;
}

std::string csv_perm(const Permutation& p) {
    std::string s = p.to_string();
    std::replace(s.begin(), s.end(), ',', ' ');
    return s;
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

// Canonical order, so equal sets print identically.
json patterns_json(const PatternSet& t) {
    json a = json::array();
    std::stringstream key(t.key());
    for (std::string p; std::getline(key, p, ',');) a.push_back(p);
    return a;
}

Output cmd_enumerate(const RunConfig& c) {
    Output o;
    o.header = {"n", "perm", "lis"};
    const auto t = PatternSet::parse(c.avoid.empty() ? "3412" : c.avoid);
    const auto [lo, hi] = range_of(c);
    o.doc = json::array();
    for (int n = lo; n <= hi; ++n) {
        for (const auto& p : restricted_involutions(n, t)) {
            o.rows.push_back({std::to_string(n), csv_perm(p), std::to_string(lis(p))});
            o.doc.push_back({{"n", n}, {"perm", p.to_string()}, {"lis", lis(p)}});
        }
    }
    return o;
}

Output cmd_distribution(const RunConfig& c) {
    Output o;
    o.header = {"n", "k", "count"};
    const auto t = PatternSet::parse(c.avoid.empty() ? "3412" : c.avoid);
    const auto [lo, hi] = range_of(c);
    json all = json::array();
    for (int n = lo; n <= hi; ++n) {
        const auto d = lis_distribution(n, t);
        json counts = json::object();
        for (int k = 0; k <= n; ++k) {
            if (d.counts[k] == 0) continue;
            o.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(d.counts[k])});
            counts[std::to_string(k)] = d.counts[k];
        }
        all.push_back({{"n", n}, {"patterns", patterns_json(t)}, {"class_size", d.class_size}, {"counts", counts}});
    }
    o.doc = all.size() == 1 ? all[0] : all;
    return o;
}

void expand_into(Output& o, const std::string& part, const Expr& e) {
    const auto table = expand_polynomial(e);
    json rows = json::array();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j) {
            if (table[i][j] == 0) continue;
            o.rows.push_back({part, std::to_string(i), std::to_string(j), table[i][j].get_str()});
            rows.push_back({{"x", i}, {"q", j}, {"coeff", table[i][j].get_str()}});
        }
    o.doc[part] = rows;
}

Output cmd_gf_coeffs(const RunConfig& c) {
    Output o;
    if (c.gf.empty()) throw InputError("--gf is required");
    const Catalog& cat = catalog_of(c);
    const GfSpec spec = cat.find(c.gf);

    if (c.expand) {
        if (!spec.expr) throw InputError(spec.name + " is not a closed form");
        o.header = {"part", "x", "q", "coeff"};
        o.doc = {{"gf", spec.name}, {"expr", spec.expr_text}};
        const Expr* e = spec.expr.get();
        if (e->kind == Expr::Kind::Div) {
            expand_into(o, "numerator", *e->args[0]);
            expand_into(o, "denominator", *e->args[1]);
        } else {
            expand_into(o, "polynomial", *e);
        }
        return o;
    }

    int lo = 0, hi = 0;
    if (c.n || !c.n_range.empty()) std::tie(lo, hi) = range_of(c);
    else if (c.order) hi = *c.order;
    else throw InputError("give --order, --n or --n-range");
    const int order = c.order.value_or(hi);
    if (order < hi) throw InputError("--order must be at least the requested n");

    const BiSeries s = cat.evaluate<QPoly>(spec, order);
    o.header = {"n", "k", "coeff"};
    json slices = json::array();
    for (int n = lo; n <= hi; ++n) {
        json coeffs = json::object();
        const auto& slice = s[n];
        for (int k = 0; k <= slice.degree(); ++k) {
            const Rational v = slice.coeff(k);
            if (v == 0) continue;
            o.rows.push_back({std::to_string(n), std::to_string(k), to_string(v)});
            coeffs[std::to_string(k)] = to_string(v);
        }
        slices.push_back({{"n", n}, {"coeffs", coeffs}});
    }
    o.doc = {{"gf", spec.name}, {"order", order}, {"slices", slices}};
    return o;
}

void moment_row(Output& o, json& rows, const MomentReport& m) {
    const std::string e = to_string(m.mean), v = to_string(m.variance);
    const std::string ed = to_decimal(m.mean), vd = to_decimal(m.variance);
    o.rows.push_back({std::to_string(m.n), to_string(m.count), e, v, ed, vd});
    rows.push_back({{"n", m.n}, {"count", to_string(m.count)}, {"E", e}, {"Var", v}, {"E_decimal", ed}, {"Var_decimal", vd}});
}

Output cmd_moments(const RunConfig& c) {
    Output o;
    o.header = {"n", "count", "E", "Var", "E_decimal", "Var_decimal"};
    const auto [lo, hi] = range_of(c);
    json rows = json::array();
    if (!c.gf.empty()) {
        const int order = c.order.value_or(hi);
        if (order < hi) throw InputError("--order must be at least the requested n");
        const Catalog& cat = catalog_of(c);
        const JetSeries s = cat.evaluate<QJet>(cat.find(c.gf), order);
        for (int n = lo; n <= hi; ++n) moment_row(o, rows, moments(s, n));
        o.doc = {{"gf", c.gf}, {"order", order}, {"moments", rows}};
    } else {
        const auto t = PatternSet::parse(c.avoid.empty() ? "3412" : c.avoid);
        for (int n = lo; n <= hi; ++n) {
            const auto d = lis_distribution(n, t);
            if (d.class_size == 0) throw EmptyClassError("empty class at n = " + std::to_string(n));
            MomentReport m;
            m.n = n;
            m.count = Rational(BigInt(static_cast<unsigned long>(d.class_size)));
            m.mean = expectation(d);
            m.variance = variance(d);
            moment_row(o, rows, m);
        }
        o.doc = {{"patterns", patterns_json(t)}, {"moments", rows}};
    }
    return o;
}

Output cmd_slopes(const RunConfig& c) {
    Output o;
    if (c.gf.empty()) throw InputError("--gf is required");
    int lo = c.n_hi / 2, hi = c.n_hi;
    if (!c.n_range.empty()) std::tie(lo, hi) = range_of(c);
    if (lo >= hi) throw InputError("slopes need n_lo < n_hi");
    const Catalog& cat = catalog_of(c);
    const JetSeries s = cat.evaluate<QJet>(cat.find(c.gf), c.order.value_or(hi));
    const SlopeEstimate est = asymptotic_slope(s, lo, hi);
    auto d = [](double v) {
        std::ostringstream os;
        os.precision(12);
        os << v;
        return os.str();
    };
    o.header = {"gf", "n_lo", "n_hi", "E_lo", "E_hi", "E_ratio", "E_difference", "Var_lo", "Var_hi", "Var_ratio",
                "Var_difference"};
    o.rows.push_back({c.gf, std::to_string(lo), std::to_string(hi), to_decimal(est.lo.mean), to_decimal(est.hi.mean),
                      d(est.mean_ratio), d(est.mean_difference), to_decimal(est.lo.variance), to_decimal(est.hi.variance),
                      d(est.variance_ratio), d(est.variance_difference)});
    o.doc = json::object();
    for (std::size_t i = 0; i < o.header.size(); ++i) o.doc[o.header[i]] = o.rows[0][i];
    o.doc["n_lo"] = lo;
    o.doc["n_hi"] = hi;
    return o;
}

void asymptotic_rows(Output& o, const std::vector<AsymptoticRow>& rows) {
    auto d = [](double v) {
        std::ostringstream os;
        os.precision(12);
        os << v;
        return os.str();
    };
    for (const auto& r : rows) {
        const double dev = std::abs(r.measured - r.constant);
        o.rows.push_back({r.name, r.patterns, r.statistic, to_string(r.growth), d(r.measured), r.constant_decimal, d(dev),
                          d(r.relative_error), r.pass ? "PASS" : "FAIL"});
        o.doc.push_back({{"row", r.name},
                         {"patterns", r.patterns},
                         {"statistic", r.statistic},
                         {"growth", to_string(r.growth)},
                         {"measured", r.measured},
                         {"constant", r.constant_decimal},
                         {"abs_dev", dev},
                         {"rel_err", r.relative_error},
                         {"verdict", r.pass ? "PASS" : "FAIL"}});
        if (!r.pass) o.exit_code = 1;
    }
}

Output cmd_table1(const RunConfig& c) {
    Output o;
    if (c.n_hi < 2) throw InputError("--n-hi must be at least 2");
    o.header = {"row", "patterns", "statistic", "growth", "measured", "constant", "abs_dev", "rel_err", "verdict"};
    o.doc = json::array();
    const Catalog& cat = catalog_of(c);
    asymptotic_rows(o, table1_report(cat, c.n_hi, c.tolerance));
    if (c.theorems) asymptotic_rows(o, theorem_report(cat, c.n_hi, c.tolerance));
    return o;
}

Output cmd_verify(const RunConfig& c) {
    Output o;
    VerifyOptions opt;
    opt.max_n = c.max_n;
    opt.order = c.order.value_or(64);
    opt.only = c.only;
    if (opt.max_n < 0 || opt.max_n > kOracleMaxN) throw LimitError("--max-n must be in 0.." + std::to_string(kOracleMaxN));
    const auto checks = run_verification(catalog_of(c), opt);
    if (checks.empty()) throw InputError("no checks selected");
    o.header = {"check", "verdict", "detail"};
    json list = json::array();
    int failed = 0;
    for (const auto& ch : checks) {
        o.rows.push_back({csv_safe(ch.name), ch.pass ? "PASS" : "FAIL", csv_safe(ch.detail)});
        json item = {{"name", ch.name}, {"pass", ch.pass}};
        if (!ch.pass) item["counterexample"] = ch.detail;
        list.push_back(item);
        failed += !ch.pass;
    }
    o.doc = {{"max_n", opt.max_n},
             {"order", std::max(opt.order, opt.max_n)},
             {"passed", static_cast<int>(checks.size()) - failed},
             {"failed", failed},
             {"checks", list}};
    o.exit_code = failed ? 1 : 0;
    return o;
}

Output cmd_sample(const RunConfig& c) {
    Output o;
    if (!c.n) throw InputError("--n is required");
    if (*c.n < 0) throw InputError("--n must be nonnegative");
    if (c.samples == 0) throw InputError("--samples must be positive");
    const auto t = PatternSet::parse(c.avoid.empty() ? "3412" : c.avoid);

    SampleStats st;
    if (t == PatternSet::with_3412()) {
        st = monte_carlo_lis(*c.n, c.samples, c.seed);
    } else {
        RandomSource rng(c.seed);
        st.n = *c.n;
        st.seed = c.seed;
        st.sample_count = c.samples;
        double sum = 0, sum2 = 0;
        for (std::uint64_t i = 0; i < c.samples; ++i) {
            const int l = lis(sample_restricted_small(*c.n, t, rng));
            ++st.histogram[l];
            sum += l;
            sum2 += double(l) * l;
        }
        const double m = sum / double(c.samples);
        st.mean_lis = m;
        st.stderr_lis = c.samples > 1 ? std::sqrt((sum2 - sum * m) / double(c.samples - 1) / double(c.samples)) : 0.0;
    }

    auto d = [](double v) {
        std::ostringstream os;
        os.precision(12);
        os << v;
        return os.str();
    };
    o.header = {"n", "samples", "seed", "rng", "mean_lis", "stderr_lis", "k", "count"};
    json hist = json::object();
    for (const auto& [k, cnt] : st.histogram) {
        o.rows.push_back({std::to_string(st.n), std::to_string(st.sample_count), std::to_string(st.seed), st.rng,
                          d(st.mean_lis), d(st.stderr_lis), std::to_string(k), std::to_string(cnt)});
        hist[std::to_string(k)] = cnt;
    }
    o.doc = {{"n", st.n},
             {"patterns", patterns_json(t)},
             {"sample_count", st.sample_count},
             {"seed", st.seed},
             {"rng", st.rng},
             {"mean_lis", st.mean_lis},
             {"stderr_lis", st.stderr_lis},
             {"histogram", hist}};
    return o;
}

std::string render(const Output& o, const std::string& format) {
    if (format == "json") return o.doc.dump(2) + "\n";
    std::string s;
    for (std::size_t i = 0; i < o.header.size(); ++i) s += (i ? "," : "") + o.header[i];
    s += '\n';
    for (const auto& row : o.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i];
        s += '\n';
    }
    return s;
}

// Written once: to a sibling temporary, then renamed into place.
void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw InputError("cannot write " + tmp.string());
        f << text;
        if (!f.flush()) throw InputError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LIS statistics on 3412-avoiding involutions"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv or json (verify defaults to json)")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "output path (default: standard output)");
        sub->add_option("--catalog", cfg.catalog, "catalog JSON to use instead of the built-in one")
            ->check(CLI::ExistingFile);
    };
    auto sizes = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "size");
        sub->add_option("--n-range", cfg.n_range, "sizes A..B");
    };

    std::map<CLI::App*, std::function<Output(const RunConfig&)>> handlers;

    auto* en = app.add_subcommand("enumerate", "list I_n(T) with the LIS of each member");
    sizes(en);
    en->add_option("--avoid", cfg.avoid, "comma-separated patterns (default 3412)");
    handlers[en] = cmd_enumerate;

    auto* di = app.add_subcommand("distribution", "LIS histogram of I_n(T) by enumeration");
    sizes(di);
    di->add_option("--avoid", cfg.avoid, "comma-separated patterns (default 3412)");
    handlers[di] = cmd_distribution;

    auto* gc = app.add_subcommand("gf-coeffs", "coefficients [x^n q^k] of a catalog generating function");
    sizes(gc);
    gc->add_option("--gf", cfg.gf, "generating function name")->required();
    gc->add_option("--order", cfg.order, "truncation order");
    gc->add_flag("--expand", cfg.expand, "print the expanded numerator and denominator instead");
    handlers[gc] = cmd_gf_coeffs;

    auto* mo = app.add_subcommand("moments", "exact E and Var of LIS");
    sizes(mo);
    auto* mo_gf = mo->add_option("--gf", cfg.gf, "from a generating function");
    mo->add_option("--avoid", cfg.avoid, "from the oracle instead")->excludes(mo_gf);
    mo->add_option("--order", cfg.order, "truncation order");
    handlers[mo] = cmd_moments;

    auto* sl = app.add_subcommand("slopes", "finite-n estimates of the growth constants");
    sl->add_option("--gf", cfg.gf, "generating function name")->required();
    sl->add_option("--n-range", cfg.n_range, "n_lo..n_hi");
    sl->add_option("--n-hi", cfg.n_hi, "n_hi with n_lo = n_hi/2 (default 2000)");
    sl->add_option("--order", cfg.order, "truncation order");
    handlers[sl] = cmd_slopes;

    auto* t1 = app.add_subcommand("table1", "the nine pattern rows against their asymptotic constants");
    t1->add_option("--n-hi", cfg.n_hi, "evaluation size (default 2000)");
    t1->add_option("--tolerance", cfg.tolerance, "relative tolerance (default 0.01)");
    t1->add_flag("--theorems", cfg.theorems, "append the theorem constants");
    handlers[t1] = cmd_table1;

    auto* ve = app.add_subcommand("verify", "series against oracle, family equivalences, structure");
    ve->add_option("--max-n", cfg.max_n, "largest oracle size (default 10)");
    ve->add_option("--order", cfg.order, "truncation order (default 64)");
    ve->add_option("--only", cfg.only, "restrict to one generating function or family");
    handlers[ve] = cmd_verify;

    auto* sa = app.add_subcommand("sample", "uniform samples and their LIS statistics");
    sa->add_option("--n", cfg.n, "size")->required();
    sa->add_option("--samples", cfg.samples, "number of samples (default 1000)");
    sa->add_option("--seed", cfg.seed, "seed (default 0)");
    sa->add_option("--avoid", cfg.avoid, "classes other than 3412 need n <= 12");
    handlers[sa] = cmd_sample;

    for (auto& [sub, h] : handlers) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    if (cfg.format.empty()) cfg.format = chosen == ve ? "json" : "csv";
    try {
        const Output o = handlers.at(chosen)(cfg);
        emit(render(o, cfg.format), cfg.out);
        return o.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
