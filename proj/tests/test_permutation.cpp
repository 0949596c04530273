#include "lisinv/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace lisinv;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// Quadratic DP, independent of patience sorting.
int lis_dp(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<int> best(n, 1);
    int top = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (p.at(j) < p.at(i)) best[i] = std::max(best[i], best[j] + 1);
        top = std::max(top, best[i]);
    }
    return top;
}

// Brute force over all index subsets of pattern length.
bool contains_brute(const Permutation& p, const Permutation& pat) {
    const std::size_t n = p.size(), k = pat.size();
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<Permutation::value_type> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) sub.push_back(p.at(i));
        if (standardize(sub) == pat) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

std::vector<Permutation> all_of_size(int n) {
    std::vector<Permutation::value_type> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation random_perm(std::mt19937_64& g, int n) {
    std::vector<Permutation::value_type> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), g);
    return Permutation(v);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(Permutation(std::vector<Permutation::value_type>{1, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation(std::vector<Permutation::value_type>{0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation(std::vector<Permutation::value_type>{1, 3}), std::invalid_argument);
    EXPECT_NO_THROW(Permutation(std::vector<Permutation::value_type>{}));
}

TEST(Permutation, ParseAndPrint) {
    EXPECT_EQ(P("3412").to_string(), "3412");
    EXPECT_EQ(P("3,4,1,2"), P("3412"));
    EXPECT_EQ(P("").size(), 0u);
    const auto big = Permutation::decreasing(11);
    EXPECT_EQ(big.to_string(), "11,10,9,8,7,6,5,4,3,2,1");
    EXPECT_EQ(Permutation::parse(big.to_string()), big);
}

TEST(Permutation, Involution) {
    EXPECT_TRUE(is_involution(P("")));
    EXPECT_TRUE(is_involution(P("3412")));
    EXPECT_FALSE(is_involution(P("231")));
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_of_size(n)) {
            EXPECT_EQ(is_involution(p), p.inverse() == p);
            if (is_involution(p)) EXPECT_EQ(p.inverse(), p);
        }
}

TEST(Permutation, ContainsPatternExamples) {
    EXPECT_TRUE(contains_pattern(P("15243"), P("321")));
    EXPECT_TRUE(contains_pattern(P("4231"), P("")));
    EXPECT_TRUE(contains_pattern(P(""), P("")));
    EXPECT_FALSE(contains_pattern(P("123"), P("321")));
    EXPECT_TRUE(avoids(P("12"), P("21")));
}

TEST(Permutation, ContainsPatternMatchesBruteForce) {
    std::vector<Permutation> pats;
    for (int k = 1; k <= 4; ++k)
        for (const auto& p : all_of_size(k)) pats.push_back(p);
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_of_size(n))
            for (const auto& pat : pats)
                if (pat.size() <= 3 || n <= 5) ASSERT_EQ(contains_pattern(p, pat), contains_brute(p, pat)) << p.to_string() << " " << pat.to_string();
}

TEST(Permutation, ContainmentIsMonotone) {
    const auto s2 = all_of_size(2), s3 = all_of_size(3);
    std::mt19937_64 g(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_perm(g, 1 + static_cast<int>(g() % 8));
        for (const auto& big : s3)
            for (const auto& small : s2)
                if (contains_pattern(big, small) && avoids(p, small)) EXPECT_TRUE(avoids(p, big));
    }
}

TEST(Permutation, LisExamples) {
    EXPECT_EQ(lis(P("")), 0);
    EXPECT_EQ(lis(Permutation::identity(9)), 9);
    EXPECT_EQ(lis(Permutation::decreasing(9)), 1);
    EXPECT_EQ(lis(P("15243")), 3);
}

TEST(Permutation, LisMatchesDp) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : all_of_size(n)) ASSERT_EQ(lis(p), lis_dp(p)) << p.to_string();
    std::mt19937_64 g(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto p = random_perm(g, 1 + static_cast<int>(g() % 200));
        ASSERT_EQ(lis(p), lis_dp(p));
    }
}

TEST(Permutation, Sums) {
    EXPECT_EQ(direct_sum(P("1"), P("21")), P("132"));
    EXPECT_EQ(direct_sum(P(""), P("231")), P("231"));
    EXPECT_EQ(direct_sum(P("21"), P("1")), P("213"));
    EXPECT_EQ(skew_sum(P("1"), P("1")), P("21"));
    EXPECT_EQ(skew_sum(skew_sum(P("1"), P("12")), P("1")), P("4231"));
    EXPECT_EQ(skew_sum(P(""), P("312")), P("312"));
}

TEST(Permutation, LisOfSums) {
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_perm(g, static_cast<int>(g() % 9));
        const auto b = random_perm(g, static_cast<int>(g() % 9));
        EXPECT_EQ(lis(direct_sum(a, b)), lis(a) + lis(b));
        EXPECT_EQ(lis(skew_sum(a, b)), std::max(lis(a), lis(b)));
    }
}

TEST(Permutation, IrreducibleComponents) {
    EXPECT_EQ(irreducible_components(P("123")), (std::vector{P("1"), P("1"), P("1")}));
    EXPECT_EQ(irreducible_components(P("321")), (std::vector{P("321")}));
    EXPECT_EQ(irreducible_components(P("2134")), (std::vector{P("21"), P("1"), P("1")}));
    EXPECT_TRUE(irreducible_components(P("")).empty());
}

TEST(Permutation, ComponentsFoldBack) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_of_size(n)) {
            const auto parts = irreducible_components(p);
            Permutation acc;
            for (const auto& c : parts) {
                acc = direct_sum(acc, c);
                // no proper prefix of a component is closed under values
                for (std::size_t i = 1; i < c.size(); ++i) {
                    const auto mx = *std::max_element(c.entries().begin(), c.entries().begin() + static_cast<long>(i));
                    EXPECT_NE(mx, i) << p.to_string();
                }
            }
            EXPECT_EQ(acc, p);
        }
}

TEST(Permutation, BarExamples) {
    EXPECT_EQ(bar(P("1")), P(""));
    EXPECT_EQ(bar_case(P("4231")), BarCase::BothEnds);
    EXPECT_EQ(bar(P("4231")), P("12"));
    EXPECT_EQ(bar_case(P("231")), BarCase::TrailingOne);
    EXPECT_EQ(bar(P("231")), P("12"));
    EXPECT_EQ(bar_case(P("312")), BarCase::LeadingMax);
    EXPECT_EQ(bar(P("312")), P("12"));
    EXPECT_EQ(bar_case(P("132")), BarCase::Unchanged);
    EXPECT_EQ(bar(P("132")), P("132"));
}

// Each case is re-derived from the definition; exactly one must hold.
TEST(Permutation, BarCasesAreExclusive) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_of_size(n)) {
            const std::size_t m = p.size();
            const bool trivial = m <= 1;
            const bool starts_max = m >= 2 && p.at(0) == m;
            const bool ends_one = m >= 2 && p.at(m - 1) == 1;
            const bool both = !trivial && starts_max && ends_one;
            const bool leading = !trivial && starts_max && !ends_one;
            const bool trailing = !trivial && ends_one && !starts_max;
            const bool unchanged = !trivial && !starts_max && !ends_one;
            ASSERT_EQ(trivial + both + leading + trailing + unchanged, 1);
            const BarCase expected = trivial   ? BarCase::Trivial
                                     : both    ? BarCase::BothEnds
                                     : leading ? BarCase::LeadingMax
                                     : trailing ? BarCase::TrailingOne
                                                : BarCase::Unchanged;
            EXPECT_EQ(bar_case(p), expected) << p.to_string();

            const Permutation one = P("1"), b = bar(p);
            switch (expected) {
                case BarCase::Trivial: EXPECT_TRUE(b.empty()); break;
                case BarCase::BothEnds: EXPECT_EQ(skew_sum(skew_sum(one, b), one), p); break;
                case BarCase::LeadingMax: EXPECT_EQ(skew_sum(one, b), p); break;
                case BarCase::TrailingOne: EXPECT_EQ(skew_sum(b, one), p); break;
                case BarCase::Unchanged: EXPECT_EQ(b, p); break;
            }
        }
}
