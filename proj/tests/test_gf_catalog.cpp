#include "lisinv/gf_catalog.hpp"
#include "lisinv/report.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace lisinv;

namespace {

constexpr int N = 24;

const Catalog& cat() { return Catalog::builtin(); }

BiSeries named(const std::string& name, int order = N) { return cat().evaluate<QPoly>(cat().find(name), order); }

PatternSet T(const std::string& key) { return PatternSet::parse(key); }

void expect_oracle(const BiSeries& s, const PatternSet& t, int max_n) {
    for (int n = 0; n <= max_n; ++n) EXPECT_EQ(s[n], empirical_polynomial(n, t)) << "T={" << t.key() << "} n=" << n;
}

// E_n for {3412,123} written out from the closed formula.
Rational theorem_ii(int n) {
    const int sign = n % 2 == 0 ? 1 : -1;
    Rational num = Rational(n * n, 2) + Rational(3, 4) + Rational(sign, 4);
    Rational den = Rational(n * n, 4) + Rational(7, 8) + Rational(sign, 8);
    num.canonicalize();
    den.canonicalize();
    return num / den;
}

}  // namespace

TEST(GfCatalog, H3412) {
    const auto h = h_3412<QPoly>(N);
    const std::vector<int> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
    const auto counts = eval_q1(h);
    for (std::size_t n = 0; n < motzkin.size(); ++n) EXPECT_EQ(counts[n], motzkin[n]);
    EXPECT_EQ(h[2], QPoly(std::vector<Rational>{0, 1, 1}));

    const auto x = BiSeries::x(N), q = BiSeries::q(N), one = BiSeries::one(N);
    const auto lhs = x * x * h * h + (x * q + x * x * (q - one) - one) * h + one;
    EXPECT_EQ(lhs.valuation(), N + 1);
}

TEST(GfCatalog, ClosedFormExamples) {
    const auto h12 = named("H_12");
    for (int n = 1; n <= N; ++n) EXPECT_EQ(h12[n], QPoly::q_marker());
    expect_oracle(named("H_321"), T("3412,321"), 10);
    expect_oracle(named("Table1_1432"), T("3412,1432"), 10);
    const auto c = eval_q1(named("Table1_1432"));
    for (int n = 1; n <= N; ++n) EXPECT_EQ(c[n], BigInt(1) << (n - 1));
}

TEST(GfCatalog, FkRecurrence) {
    EXPECT_EQ(f_k_recurrence<QPoly>(2, N), named("H_12"));
    EXPECT_EQ(f_k_recurrence<QPoly>(3, N), named("H_123"));
    for (int k = 2; k <= 6; ++k) {
        const auto f = f_k_recurrence<QPoly>(k, N);
        for (int n = 0; n <= N; ++n) EXPECT_LT(f[n].degree(), k) << k << " " << n;
        expect_oracle(f, PatternSet::with_3412({Permutation::identity(k)}), 9);
    }
}

TEST(GfCatalog, FkNarayana) {
    EXPECT_EQ(narayana_coefficient(0, 1), 1);
    EXPECT_EQ(narayana_coefficient(3, 2), 3);  // (1/2) C(2,1) C(3,1)
    EXPECT_EQ(narayana_coefficient(4, 2), 6);
    EXPECT_EQ(narayana_coefficient(2, 4), 0);
    EXPECT_EQ(f_k_narayana<QPoly>(3, N), named("H_123"));
    for (int k = 2; k <= 8; ++k) EXPECT_EQ(f_k_narayana<QPoly>(k, 60), f_k_recurrence<QPoly>(k, 60)) << k;
}

TEST(GfCatalog, Gk) {
    EXPECT_EQ(g_k<QPoly>(4, 60), named("H_4123", 60));
    expect_oracle(g_k<QPoly>(3, N), PatternSet::bare({Permutation::parse("312")}), 9);
    expect_oracle(g_k<QPoly>(5, N), T("3412,51234"), 10);
}

TEST(GfCatalog, Dec) {
    EXPECT_EQ(dec_k<QPoly>(3, N), named("H_321"));
    EXPECT_EQ(dec_k<QPoly>(4, N), named("Table1_4321"));
    expect_oracle(dec_k<QPoly>(5, N), T("3412,54321"), 10);
    for (int k = 3; k <= 6; ++k) EXPECT_EQ(dec_k_chebyshev<QPoly>(k, 60), dec_k<QPoly>(k, 60)) << k;
}

TEST(GfCatalog, EverySpecIsCombinatorial) {
    for (const auto& spec : cat().specs()) {
        const auto s = cat().evaluate<QPoly>(spec, N);
        EXPECT_TRUE(has_nonnegative_integer_coeffs(s)) << spec.name;
        EXPECT_LE(max_excess_q_degree(s), 0) << spec.name;
    }
}

TEST(GfCatalog, MomentsExamples) {
    const auto h123 = named("H_123", 80);
    for (int n = 1; n <= 80; ++n) EXPECT_EQ(moments(h123, n).mean, theorem_ii(n)) << n;
    const auto m1 = moments(h_3412<QPoly>(N), 1);
    EXPECT_EQ(m1.mean, 1);
    EXPECT_EQ(m1.variance, 0);
    const auto h21 = named("H_21");
    for (int n = 1; n <= N; ++n) {
        EXPECT_EQ(moments(h21, n).mean, n);
        EXPECT_EQ(moments(h21, n).variance, 0);
    }
    EXPECT_THROW(moments(h21, N + 1), TruncationExceeded);
}

TEST(GfCatalog, MomentsMatchOracle) {
    const auto h = h_3412<QPoly>(N);
    for (int n = 1; n <= 10; ++n) {
        const auto m = moments(h, n);
        EXPECT_EQ(m.mean, exact_expectation(n, PatternSet::with_3412()));
        EXPECT_EQ(m.variance, exact_variance(n, PatternSet::with_3412()));
    }
}

TEST(GfCatalog, JetMomentsMatchBivariate) {
    for (const auto& spec : cat().specs()) {
        const auto bi = cat().evaluate<QPoly>(spec, N);
        const auto jet = cat().evaluate<QJet>(spec, N);
        for (int n = 1; n <= N; ++n) {
            if (bi[n].is_zero()) continue;  // e.g. F_1 = 1
            const auto a = moments(bi, n), b = moments(jet, n);
            EXPECT_EQ(a.mean, b.mean) << spec.name << " " << n;
            EXPECT_EQ(a.variance, b.variance) << spec.name << " " << n;
            EXPECT_GE(a.variance, 0) << spec.name << " " << n;
        }
    }
}

TEST(GfCatalog, SlopesConverge) {
    for (const GfSpec* spec : cat().table1_rows()) {
        if (spec->mean->growth != Growth::Linear) continue;
        const auto s = cat().evaluate<QJet>(*spec, 400);
        const double a = asymptotic_slope(s, 50, 100).mean_difference;
        const double b = asymptotic_slope(s, 100, 200).mean_difference;
        const double c = asymptotic_slope(s, 200, 400).mean_difference;
        EXPECT_LE(std::abs(c - b), std::abs(b - a) + 1e-12) << spec->name;
    }
}

TEST(GfCatalog, SlopesSmallTargets) {
    auto slope = [](const std::string& name) {
        const auto s = cat().evaluate<QJet>(cat().find(name), 600);
        return asymptotic_slope(s, 300, 600).mean_difference;
    };
    EXPECT_NEAR(slope("H_321"), 0.723607, 0.723607 * 0.01);
    EXPECT_NEAR(slope("H_132"), 0.447214, 0.447214 * 0.01);
}

TEST(GfCatalog, Roots) {
    const auto quartic = cat().root("quartic");
    EXPECT_NEAR(quartic.value.get_d(), 0.45208778430, 5e-12);
    EXPECT_NEAR(cat().root("cubic").value.get_d(), 0.44504, 5e-6);
    EXPECT_LE(quartic.hi - quartic.lo, Rational(1, BigInt("1000000000000000000000000000000")));

    const auto half = smallest_root({BigInt(-1), BigInt(2)});
    EXPECT_EQ(half.lo, Rational(1, 2));
    EXPECT_EQ(half.hi, Rational(1, 2));
    EXPECT_THROW(smallest_root({BigInt(1), BigInt(0), BigInt(1)}), ConstructionError);  // +-i
}

TEST(GfCatalog, Constants) {
    // The printed decimal for this constant agrees with the closed form to 10
    // digits only; the closed form is the one the exact slope reproduces.
    EXPECT_NEAR(cat().constant("thm_vi_E").get_d(), 0.454689799955, 1e-10);
    EXPECT_EQ(constant_decimal(cat(), "thm_vi_E"), "0.454689799983");
    EXPECT_EQ(constant_decimal(cat(), "tbl_4321_E"), "0.625");
    EXPECT_EQ(constant_decimal(cat(), "thm_i_E"), "0.444444444444");
    EXPECT_EQ(constant_decimal(cat(), "thm_iv_E"), "0.72360679775");
    EXPECT_THROW(cat().constant("nope"), UnknownName);
}

// For a rational series E(n) = c n + d + (exponentially small), so the
// difference quotient pins c down far beyond the tolerance used elsewhere.
TEST(GfCatalog, ExactSlopeOfH4123) {
    const auto s = cat().evaluate<QJet>(cat().find("H_4123"), 800);
    const Rational d = (moments(s, 800).mean - moments(s, 400).mean) / Rational(400);
    EXPECT_EQ(to_decimal(d, 12), constant_decimal(cat(), "thm_vi_E"));
}

TEST(GfCatalog, FindFamilies) {
    EXPECT_EQ(cat().find("F_k(7)").construction, Construction::FkRecurrence);
    EXPECT_EQ(cat().find("Dec_k_chebyshev(5)").construction, Construction::DecChebyshev);
    EXPECT_EQ(cat().find("G_k(6)").k, 6);
    EXPECT_THROW(cat().find("H_9999"), UnknownName);
    EXPECT_EQ(cat().table1_rows().size(), 9u);
}

// A catalog with an off-by-one in a Table 1 denominator must be caught.
TEST(GfCatalog, NegativeControl) {
    std::ifstream in(LISINV_CATALOG);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const std::string good = "q*(q - 1)*x^3 + q*(q - 1)*x^2 - 2*q*x + 1";
    const auto at = text.find(good);
    ASSERT_NE(at, std::string::npos);
    text.replace(at, good.size(), "q*(q - 1)*x^3 + q*(q - 1)*x^2 - 3*q*x + 1");
    const Catalog broken = Catalog::from_json(text);
    const auto spec = broken.find("Table1_4321");
    const auto check = oracle_check("oracle:Table1_4321", broken.evaluate<QPoly>(spec, 12), spec.classes, 8);
    EXPECT_FALSE(check.pass);
    EXPECT_NE(check.detail.find("vs oracle"), std::string::npos) << check.detail;
}

TEST(Expr, ParseAndPrint) {
    EXPECT_THROW(parse_expr("1 + "), std::invalid_argument);
    EXPECT_THROW(parse_expr("x ^ q"), std::invalid_argument);
    const auto e = parse_expr("1/(1 - x*q)");
    EXPECT_EQ(eval_series<QPoly>(*e, 10), named("H_21", 10));
    const auto poly = expand_polynomial(*parse_expr("(1 - x)^2 + q*x"));
    EXPECT_EQ(poly[0][0], 1);
    EXPECT_EQ(poly[1][0], -2);
    EXPECT_EQ(poly[1][1], 1);
    EXPECT_EQ(poly[2][0], 1);
}
