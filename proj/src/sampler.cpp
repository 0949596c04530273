#include "lisinv/sampler.hpp"

#include "lisinv/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace lisinv {

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

BigInt RandomSource::below(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("RandomSource::below: bound must be positive");
    if (bound == 1) return 0;
    const BigInt top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    BigInt r;
    for (;;) {
        for (auto& w : buf) w = engine_();
        const std::size_t spare = words * 64 - bits;
        if (spare) buf.back() >>= spare;
        mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
        if (r < bound) return r;
    }
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
    const BigInt r = below(BigInt(static_cast<unsigned long>(bound)));
    return r.get_ui();
}

CountTable::CountTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("CountTable: n_max must be >= 0");
    m_.resize(static_cast<std::size_t>(n_max) + 1);
    // Same numbers as the convolution in the header, via the linear
    // Motzkin recurrence (n + 2) M[n] = (2n + 1) M[n-1] + 3 (n - 1) M[n-2].
    m_[0] = 1;
    if (n_max >= 1) m_[1] = 1;
    for (int n = 2; n <= n_max; ++n) {
        BigInt s = (2 * n + 1) * m_[n - 1] + 3 * (n - 1) * m_[n - 2];
        m_[n] = s / (n + 2);
    }
}

namespace {

// Block sizes are scanned in the order 2, n, 3, n-1, ...; the branch
// weights are largest near both ends.
int interleaved(int idx, int n) {
    const int half = idx / 2;
    return (idx % 2 == 0) ? 2 + half : n - half;
}

}  // namespace

Permutation sample_3412_involution(int n, const CountTable& table, RandomSource& rng) {
    if (n < 0 || n > table.n_max()) throw std::out_of_range("sample_3412_involution: n outside count table");
    std::vector<Permutation::value_type> e(static_cast<std::size_t>(n));
    // Pending (offset, size) sub-blocks; each occupies positions and values
    // offset+1 .. offset+size.
    std::vector<std::pair<int, int>> work{{0, n}};
    BigInt weight;
    while (!work.empty()) {
        auto [off, size] = work.back();
        work.pop_back();
        while (size > 0) {
            BigInt r = rng.below(table[size]);
            if (r < table[size - 1]) {
                e[off] = static_cast<Permutation::value_type>(off + 1);
                ++off;
                --size;
                continue;
            }
            r -= table[size - 1];
            int block = -1;
            const int choices = size - 1;  // m = 2..size
            for (int idx = 0; idx < choices; ++idx) {
                const int m = interleaved(idx, size);
                weight = table[m - 2] * table[size - m];
                if (r < weight) {
                    block = m;
                    break;
                }
                r -= weight;
            }
            if (block < 0) throw std::logic_error("sample_3412_involution: count table inconsistent");
            e[off] = static_cast<Permutation::value_type>(off + block);
            e[off + block - 1] = static_cast<Permutation::value_type>(off + 1);
            if (block > 2) work.emplace_back(off + 1, block - 2);
            off += block;
            size -= block;
        }
    }
    return Permutation(std::move(e));
}

SampleStats monte_carlo_lis(int n, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("monte_carlo_lis: samples must be >= 1");
    const CountTable table(n);
    RandomSource rng(seed);
    SampleStats st;
    st.n = n;
    st.sample_count = samples;
    st.seed = seed;
    double sum = 0, sum2 = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const int k = lis(sample_3412_involution(n, table, rng));
        ++st.histogram[k];
        sum += k;
        sum2 += static_cast<double>(k) * k;
    }
    const double count = static_cast<double>(samples);
    st.mean_lis = sum / count;
    if (samples > 1) {
        const double var = std::max(0.0, (sum2 - sum * sum / count) / (count - 1));
        st.stderr_lis = std::sqrt(var / count);
    }
    return st;
}

Permutation sample_restricted_small(int n, const PatternSet& patterns, RandomSource& rng) {
    if (n > 12) throw LimitError("sample_restricted_small supports n <= 12");
    const auto& members = restricted_involutions(n, patterns);
    if (members.empty()) throw EmptyClassError("I_" + std::to_string(n) + "(" + patterns.key() + ") is empty");
    return members[rng.below(static_cast<std::uint64_t>(members.size()))];
}

}  // namespace lisinv
