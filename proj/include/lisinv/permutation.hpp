#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lisinv {

/// One-line notation of a permutation of {1..n}. Values are 1-based,
/// storage is 0-based; at(i) takes a 0-based position. Immutable.
class Permutation {
public:
    using value_type = std::uint16_t;

    Permutation() = default;
    /// Throws std::invalid_argument unless `entries` is a bijection onto {1..n}.
    explicit Permutation(std::vector<value_type> entries);

    static Permutation identity(std::size_t n);
    static Permutation decreasing(std::size_t n);

    /// "3412" for n <= 9, "10,1,2,..." otherwise; the empty permutation is "".
    /// Both digit strings and comma lists are accepted for any n.
    static Permutation parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    value_type at(std::size_t i) const { return e_[i]; }
    std::span<const value_type> entries() const { return e_; }

    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    struct Unchecked {};
    Permutation(std::vector<value_type> entries, Unchecked) : e_(std::move(entries)) {}
    friend Permutation direct_sum(const Permutation&, const Permutation&);
    friend Permutation skew_sum(const Permutation&, const Permutation&);
    friend Permutation standardize(std::span<const value_type>);

    std::vector<value_type> e_;
};

/// Order-isomorphic relabelling of distinct values onto {1..k}.
Permutation standardize(std::span<const Permutation::value_type> values);

bool is_involution(const Permutation& p);

/// Backtracking over positions with value bounds; the empty pattern is
/// contained in every permutation.
bool contains_pattern(const Permutation& p, const Permutation& pattern);
inline bool avoids(const Permutation& p, const Permutation& pattern) { return !contains_pattern(p, pattern); }

/// Longest strictly increasing subsequence, O(n log n).
int lis(const Permutation& p);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Maximal decomposition p = c1 (+) c2 (+) ... into nonempty irreducibles.
std::vector<Permutation> irreducible_components(const Permutation& p);

enum class BarCase {
    Trivial,       // empty or 1
    BothEnds,      // p = 1 (-) s (-) 1
    LeadingMax,    // p = 1 (-) s, s not ending in 1
    TrailingOne,   // p = s (-) 1, p not beginning with m
    Unchanged,
};

/// Which branch of the bar operator applies to p.
BarCase bar_case(const Permutation& p);

/// Strips the outer skew-sum blocks per bar_case.
Permutation bar(const Permutation& p);

}  // namespace lisinv
