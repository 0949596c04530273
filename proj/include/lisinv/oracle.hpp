#pragma once

// Exhaustive ground truth over involutions of [n].

#include "lisinv/permutation.hpp"
#include "lisinv/rational.hpp"
#include "lisinv/series.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lisinv {

inline constexpr int kOracleMaxN = 14;

/// A set of forbidden patterns. Built with `with_3412` the set always
/// contains 3412; `bare` leaves it out for cross-checks on other classes.
class PatternSet {
public:
    static PatternSet with_3412(std::vector<Permutation> extra = {});
    static PatternSet bare(std::vector<Permutation> patterns);
    /// Comma-separated list, e.g. "3412,123"; 3412 is not implied.
    static PatternSet parse(const std::string& text);

    const std::vector<Permutation>& patterns() const { return patterns_; }
    bool contains_3412() const;
    /// Patterns in canonical order (length, then lexicographic), joined by ','.
    std::string key() const;
    bool admits(const Permutation& p) const;

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    explicit PatternSet(std::vector<Permutation> patterns);
    std::vector<Permutation> patterns_;
};

struct LisDistribution {
    int n = 0;
    std::uint64_t class_size = 0;
    /// counts[k] for k = 0..n
    std::vector<std::uint64_t> counts;
};

/// Calls `visit` on every involution of [n] exactly once, built by deciding
/// for the largest element whether it is fixed or paired with some i < n.
void for_each_involution(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_involutions(int n);

/// I_n(T) in enumeration order. Cached per (n, T).
const std::vector<Permutation>& restricted_involutions(int n, const PatternSet& patterns);

/// Cached per (n, T).
LisDistribution lis_distribution(int n, const PatternSet& patterns);

/// [x^n] H_T(x, q) = sum_k counts[k] q^k.
QPoly empirical_polynomial(int n, const PatternSet& patterns);

Rational exact_expectation(int n, const PatternSet& patterns);
Rational exact_variance(int n, const PatternSet& patterns);
Rational expectation(const LisDistribution& d);
Rational variance(const LisDistribution& d);

/// One way of writing a 3412-avoiding involution as 1 (+) rest or as
/// (1 (-) inner (-) 1) (+) rest with block size m >= 2.
struct Decomposition {
    int block_size = 1;  // 1 for the 1 (+) rest branch
    Permutation inner;   // empty for block_size 1
    Permutation rest;
};

/// Every decomposition of `p` whose parts are 3412-avoiding involutions.
/// For p in I_n(3412), n >= 1, exactly one is expected.
std::vector<Decomposition> decompositions_3412(const Permutation& p);

/// Reassembles a decomposition.
Permutation compose(const Decomposition& d);

}  // namespace lisinv
