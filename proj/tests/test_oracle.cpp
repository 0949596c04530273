#include "lisinv/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace lisinv;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Filter S_n directly; only used for small n.
std::vector<Permutation> involutions_by_filter(int n) {
    std::vector<Permutation::value_type> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p(v);
        if (is_involution(p)) out.push_back(p);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST(Oracle, SmallEnumerations) {
    EXPECT_EQ(enumerate_involutions(0), std::vector{P("")});
    auto two = enumerate_involutions(2);
    std::sort(two.begin(), two.end());
    EXPECT_EQ(two, (std::vector{P("12"), P("21")}));
    EXPECT_EQ(enumerate_involutions(4).size(), 10u);
}

TEST(Oracle, StructuralGenerationMatchesFilter) {
    for (int n = 0; n <= 8; ++n) {
        auto a = enumerate_involutions(n);
        std::sort(a.begin(), a.end());
        EXPECT_EQ(a, involutions_by_filter(n)) << n;
    }
}

TEST(Oracle, TelephoneNumbers) {
    std::uint64_t prev2 = 1, prev1 = 1;  // I(0), I(1)
    for (int n = 2; n <= kOracleMaxN; ++n) {
        const std::uint64_t expected = prev1 + static_cast<std::uint64_t>(n - 1) * prev2;
        std::uint64_t count = 0;
        for_each_involution(n, [&](const Permutation&) { ++count; });
        EXPECT_EQ(count, expected) << n;
        prev2 = prev1;
        prev1 = expected;
    }
}

TEST(Oracle, NoDuplicates) {
    const auto all = enumerate_involutions(9);
    EXPECT_EQ(std::set<Permutation>(all.begin(), all.end()).size(), all.size());
}

TEST(Oracle, SizeGuard) {
    EXPECT_THROW(lis_distribution(kOracleMaxN + 1, PatternSet::with_3412()), LimitError);
    EXPECT_THROW(lis_distribution(-1, PatternSet::with_3412()), LimitError);
}

TEST(Oracle, DistributionExamples) {
    const auto t = PatternSet::with_3412();
    const auto d2 = lis_distribution(2, t);
    EXPECT_EQ(d2.class_size, 2u);
    EXPECT_EQ(d2.counts, (std::vector<std::uint64_t>{0, 1, 1}));
    EXPECT_EQ(lis_distribution(4, t).class_size, 9u);
    const auto d0 = lis_distribution(0, PatternSet::parse("3412,123"));
    EXPECT_EQ(d0.class_size, 1u);
    EXPECT_EQ(d0.counts, (std::vector<std::uint64_t>{1}));
}

TEST(Oracle, DistributionInvariants) {
    for (const char* key : {"3412", "3412,123", "3412,4321", "3412,2413", "231"}) {
        const auto t = PatternSet::parse(key);
        for (int n = 0; n <= 10; ++n) {
            const auto d = lis_distribution(n, t);
            EXPECT_EQ(std::accumulate(d.counts.begin(), d.counts.end(), std::uint64_t{0}), d.class_size);
            EXPECT_EQ(d.class_size, restricted_involutions(n, t).size());
            if (n > 0) EXPECT_EQ(d.counts[0], 0u);
        }
    }
}

TEST(Oracle, MotzkinClassSizes) {
    // M(n) = M(n-1) + sum_{i=0}^{n-2} M(i) M(n-2-i)
    std::vector<std::uint64_t> m{1, 1};
    for (int n = 2; n <= 12; ++n) {
        std::uint64_t v = m[n - 1];
        for (int i = 0; i <= n - 2; ++i) v += m[i] * m[n - 2 - i];
        m.push_back(v);
    }
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(lis_distribution(n, PatternSet::with_3412()).class_size, m[n]) << n;
}

TEST(Oracle, EmpiricalPolynomialExamples) {
    EXPECT_EQ(empirical_polynomial(2, PatternSet::parse("3412,321")), QPoly({0, 1, 1}));
    EXPECT_EQ(empirical_polynomial(1, PatternSet::parse("3412,123")), QPoly::q_marker());
    EXPECT_EQ(empirical_polynomial(3, PatternSet::parse("3412,123")).coeff(3), 0);
}

TEST(Oracle, PatternSetKeyIsCanonical) {
    EXPECT_EQ(PatternSet::parse("123,3412").key(), PatternSet::parse("3412,123").key());
    EXPECT_EQ(PatternSet::with_3412({P("123")}).key(), "123,3412");
    EXPECT_FALSE(PatternSet::parse("231").contains_3412());
    EXPECT_TRUE(PatternSet::with_3412().contains_3412());
}

TEST(Oracle, Moments) {
    const auto t123 = PatternSet::parse("3412,123");
    EXPECT_EQ(exact_expectation(2, t123), Rational(3, 2));
    EXPECT_EQ(exact_variance(1, PatternSet::with_3412()), 0);
    EXPECT_EQ(exact_variance(1, t123), 0);
    for (const char* tau : {"231", "312"})
        for (int n = 1; n <= 10; ++n) {
            Rational e(n + 1, 2);
            e.canonicalize();
            EXPECT_EQ(exact_expectation(n, PatternSet::bare({P(tau)})), e) << tau << " " << n;
        }
}

TEST(Oracle, DecompositionIsUnique) {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : restricted_involutions(n, PatternSet::with_3412())) {
            const auto d = decompositions_3412(p);
            ASSERT_EQ(d.size(), 1u) << p.to_string();
            EXPECT_EQ(compose(d[0]), p);
            EXPECT_TRUE(is_involution(d[0].rest));
            EXPECT_TRUE(avoids(d[0].rest, P("3412")));
            if (d[0].block_size > 1) EXPECT_EQ(d[0].inner.size(), static_cast<std::size_t>(d[0].block_size - 2));
        }
}
