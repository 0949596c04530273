#include "lisinv/oracle.hpp"

#include "lisinv/errors.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lisinv {

namespace {

const Permutation& pattern_3412() {
    static const Permutation p = Permutation::parse("3412");
    return p;
}

bool canonical_less(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void guard(int n) {
    if (n < 0 || n > kOracleMaxN)
        throw LimitError("oracle supports 0 <= n <= " + std::to_string(kOracleMaxN) + ", got " + std::to_string(n));
}

}  // namespace

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    std::sort(patterns_.begin(), patterns_.end(), canonical_less);
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
    // 3412 first: it rejects the most candidates in this domain.
    auto it = std::find(patterns_.begin(), patterns_.end(), pattern_3412());
    if (it != patterns_.end()) std::rotate(patterns_.begin(), it, it + 1);
}

PatternSet PatternSet::with_3412(std::vector<Permutation> extra) {
    extra.push_back(pattern_3412());
    return PatternSet(std::move(extra));
}

PatternSet PatternSet::bare(std::vector<Permutation> patterns) { return PatternSet(std::move(patterns)); }

PatternSet PatternSet::parse(const std::string& text) {
    std::vector<Permutation> ps;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        ps.push_back(Permutation::parse(text.substr(start, end - start)));
        start = end + 1;
    }
    return PatternSet(std::move(ps));
}

bool PatternSet::contains_3412() const {
    return std::find(patterns_.begin(), patterns_.end(), pattern_3412()) != patterns_.end();
}

std::string PatternSet::key() const {
    std::vector<Permutation> sorted = patterns_;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::string k;
    for (const auto& p : sorted) {
        if (!k.empty()) k += ',';
        k += p.to_string();
    }
    return k;
}

bool PatternSet::admits(const Permutation& p) const {
    return std::none_of(patterns_.begin(), patterns_.end(), [&](const Permutation& t) { return contains_pattern(p, t); });
}

void for_each_involution(int n, const std::function<void(const Permutation&)>& visit) {
    guard(n);
    std::vector<Permutation::value_type> e(static_cast<std::size_t>(n), 0);
    // Fill the largest unassigned element first.
    std::function<void(int)> rec = [&](int top) {
        while (top > 0 && e[top - 1] != 0) --top;
        if (top == 0) {
            visit(Permutation(e));
            return;
        }
        e[top - 1] = static_cast<Permutation::value_type>(top);
        rec(top - 1);
        e[top - 1] = 0;
        for (int i = 1; i < top; ++i) {
            if (e[i - 1] != 0) continue;
            e[top - 1] = static_cast<Permutation::value_type>(i);
            e[i - 1] = static_cast<Permutation::value_type>(top);
            rec(top - 1);
            e[i - 1] = 0;
            e[top - 1] = 0;
        }
    };
    rec(n);
}

std::vector<Permutation> enumerate_involutions(int n) {
    std::vector<Permutation> out;
    for_each_involution(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

namespace {

struct OracleCache {
    std::mutex mu;
    std::map<std::pair<int, std::string>, std::vector<Permutation>> classes;
    std::map<std::pair<int, std::string>, LisDistribution> distributions;
};

OracleCache& cache() {
    static OracleCache c;
    return c;
}

}  // namespace

const std::vector<Permutation>& restricted_involutions(int n, const PatternSet& patterns) {
    guard(n);
    auto& c = cache();
    const auto key = std::make_pair(n, patterns.key());
    {
        std::lock_guard lock(c.mu);
        if (auto it = c.classes.find(key); it != c.classes.end()) return it->second;
    }
    std::vector<Permutation> members;
    if (patterns.contains_3412() && patterns.patterns().size() > 1) {
        // Narrow from the cached 3412 class.
        const auto& base = restricted_involutions(n, PatternSet::with_3412());
        for (const auto& p : base)
            if (patterns.admits(p)) members.push_back(p);
    } else {
        for_each_involution(n, [&](const Permutation& p) {
            if (patterns.admits(p)) members.push_back(p);
        });
    }
    std::lock_guard lock(c.mu);
    // Element references stay valid: std::map never relocates nodes.
    return c.classes.try_emplace(key, std::move(members)).first->second;
}

LisDistribution lis_distribution(int n, const PatternSet& patterns) {
    guard(n);
    auto& c = cache();
    const auto key = std::make_pair(n, patterns.key());
    {
        std::lock_guard lock(c.mu);
        if (auto it = c.distributions.find(key); it != c.distributions.end()) return it->second;
    }
    LisDistribution d;
    d.n = n;
    d.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : restricted_involutions(n, patterns)) {
        ++d.counts[static_cast<std::size_t>(lis(p))];
        ++d.class_size;
    }
    std::lock_guard lock(c.mu);
    c.distributions.try_emplace(key, d);
    return d;
}

QPoly empirical_polynomial(int n, const PatternSet& patterns) {
    const auto d = lis_distribution(n, patterns);
    std::vector<Rational> c;
    for (auto k : d.counts) c.emplace_back(BigInt(static_cast<unsigned long>(k)));
    return QPoly(std::move(c));
}

Rational expectation(const LisDistribution& d) {
    if (d.class_size == 0) throw EmptyClassError("empty class at n = " + std::to_string(d.n));
    BigInt s = 0;
    for (std::size_t k = 0; k < d.counts.size(); ++k) s += BigInt(static_cast<unsigned long>(d.counts[k])) * static_cast<unsigned long>(k);
    Rational e(s, BigInt(static_cast<unsigned long>(d.class_size)));
    e.canonicalize();
    return e;
}

Rational variance(const LisDistribution& d) {
    const Rational mean = expectation(d);
    BigInt s2 = 0;
    for (std::size_t k = 0; k < d.counts.size(); ++k)
        s2 += BigInt(static_cast<unsigned long>(d.counts[k])) * static_cast<unsigned long>(k * k);
    Rational m2(s2, BigInt(static_cast<unsigned long>(d.class_size)));
    m2.canonicalize();
    return m2 - mean * mean;
}

Rational exact_expectation(int n, const PatternSet& patterns) { return expectation(lis_distribution(n, patterns)); }

Rational exact_variance(int n, const PatternSet& patterns) { return variance(lis_distribution(n, patterns)); }

std::vector<Decomposition> decompositions_3412(const Permutation& p) {
    std::vector<Decomposition> out;
    const int n = static_cast<int>(p.size());
    const auto e = p.entries();
    auto good = [](const Permutation& s) { return is_involution(s) && avoids(s, pattern_3412()); };
    for (int m = 1; m <= n; ++m) {
        // The first m positions must carry exactly the values 1..m.
        const auto head = e.first(static_cast<std::size_t>(m));
        if (*std::max_element(head.begin(), head.end()) != m) continue;
        Decomposition d;
        d.block_size = m;
        d.rest = standardize(e.subspan(static_cast<std::size_t>(m)));
        if (m == 1) {
            if (e[0] != 1) continue;
        } else {
            if (e[0] != m || e[static_cast<std::size_t>(m) - 1] != 1) continue;
            d.inner = standardize(head.subspan(1, static_cast<std::size_t>(m) - 2));
        }
        if (!good(d.inner) || !good(d.rest)) continue;
        if (compose(d) != p) continue;
        out.push_back(std::move(d));
    }
    return out;
}

Permutation compose(const Decomposition& d) {
    const Permutation one = Permutation::identity(1);
    if (d.block_size == 1) return direct_sum(one, d.rest);
    return direct_sum(skew_sum(skew_sum(one, d.inner), one), d.rest);
}

}  // namespace lisinv
