#pragma once

// Exact uniform sampling of 3412-avoiding involutions.
//
// A 3412-avoiding involution of size n >= 1 is either 1 (+) r with r of size
// n - 1, or (1 (-) s (-) 1) (+) r with s of size m - 2 and r of size n - m
// for some 2 <= m <= n. Counting both branches gives
//   M[n] = M[n-1] + sum_{m=2}^{n} M[m-2] M[n-m],
// and drawing a branch with probability proportional to its count at every
// level yields the uniform distribution.

#include "lisinv/oracle.hpp"
#include "lisinv/permutation.hpp"
#include "lisinv/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace lisinv {

/// Deterministic random source; records its seed and algorithm name.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    static constexpr const char* algorithm() { return "mt19937_64"; }
    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, bound) by rejection over ceil(log2 bound) random bits.
    BigInt below(const BigInt& bound);
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

class CountTable {
public:
    explicit CountTable(int n_max);

    int n_max() const { return static_cast<int>(m_.size()) - 1; }
    const BigInt& operator[](int n) const { return m_[static_cast<std::size_t>(n)]; }
    const std::vector<BigInt>& counts() const { return m_; }

private:
    std::vector<BigInt> m_;
};

/// Uniform element of I_n(3412). Requires table.n_max() >= n.
Permutation sample_3412_involution(int n, const CountTable& table, RandomSource& rng);

struct SampleStats {
    int n = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::string rng = RandomSource::algorithm();
    double mean_lis = 0;
    double stderr_lis = 0;
    std::map<int, std::uint64_t> histogram;
};

/// i.i.d. samples from `seed`; identical output for identical arguments.
SampleStats monte_carlo_lis(int n, std::uint64_t samples, std::uint64_t seed);

/// Uniform element of I_n(T) for small n, by indexing the enumerated class.
/// Throws EmptyClassError when the class is empty.
Permutation sample_restricted_small(int n, const PatternSet& patterns, RandomSource& rng);

}  // namespace lisinv
