#include "lisinv/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace lisinv {

Permutation::Permutation(std::vector<value_type> entries) : e_(std::move(entries)) {
    std::vector<bool> seen(e_.size() + 1, false);
    for (auto v : e_) {
        if (v < 1 || v > e_.size() || seen[v]) throw std::invalid_argument("not a permutation of {1..n}");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<value_type> e(n);
    std::iota(e.begin(), e.end(), value_type{1});
    return {std::move(e), Unchecked{}};
}

Permutation Permutation::decreasing(std::size_t n) {
    std::vector<value_type> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<value_type>(n - i);
    return {std::move(e), Unchecked{}};
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<value_type> e;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit in '" + std::string(text) + "'");
            e.push_back(static_cast<value_type>(c - '0'));
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(',', start), text.size());
            const auto field = text.substr(start, end - start);
            unsigned v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{} || ptr != field.data() + field.size() || v > 65535)
                throw std::invalid_argument("bad permutation entry in '" + std::string(text) + "'");
            e.push_back(static_cast<value_type>(v));
            start = end + 1;
        }
    }
    return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
    std::string s;
    const bool compact = e_.size() <= 9;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (!compact && i > 0) s += ',';
        s += std::to_string(e_[i]);
    }
    return s;
}

Permutation Permutation::inverse() const {
    std::vector<value_type> inv(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) inv[e_[i] - 1] = static_cast<value_type>(i + 1);
    return {std::move(inv), Unchecked{}};
}

Permutation standardize(std::span<const Permutation::value_type> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Permutation::value_type> e(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) e[order[r]] = static_cast<Permutation::value_type>(r + 1);
    return Permutation(std::move(e));
}

bool is_involution(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.at(p.at(i) - 1) != i + 1) return false;
    return true;
}

namespace {

// Places pattern entries left to right. For pattern index s the candidate
// value must lie strictly between the images of the nearest smaller and
// nearest larger pattern values already placed.
class Matcher {
public:
    Matcher(const Permutation& text, const Permutation& pattern)
        : text_(text), pat_(pattern), image_(pattern.size() + 2, 0) {}

    bool run() { return place(0, 0); }

private:
    bool place(std::size_t s, std::size_t from) {
        const std::size_t k = pat_.size();
        if (s == k) return true;
        const auto pv = pat_.at(s);
        // image_ is indexed by pattern value; 0 marks "not yet placed".
        int lo = 0;
        int hi = static_cast<int>(text_.size()) + 1;
        for (std::size_t v = pv; v-- > 1;)
            if (image_[v]) {
                lo = image_[v];
                break;
            }
        for (std::size_t v = pv + 1; v <= k; ++v)
            if (image_[v]) {
                hi = image_[v];
                break;
            }
        const std::size_t last = text_.size() - (k - s);
        for (std::size_t i = from; i <= last; ++i) {
            const int tv = text_.at(i);
            if (tv <= lo || tv >= hi) continue;
            image_[pv] = tv;
            if (place(s + 1, i + 1)) return true;
        }
        image_[pv] = 0;
        return false;
    }

    const Permutation& text_;
    const Permutation& pat_;
    std::vector<int> image_;
};

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
    if (pattern.size() > p.size()) return false;
    if (pattern.empty()) return true;
    return Matcher(p, pattern).run();
}

int lis(const Permutation& p) {
    std::vector<Permutation::value_type> tails;
    for (auto v : p.entries()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<Permutation::value_type> e(a.e_);
    const auto k = static_cast<Permutation::value_type>(a.size());
    for (auto v : b.e_) e.push_back(static_cast<Permutation::value_type>(v + k));
    return {std::move(e), Permutation::Unchecked{}};
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<Permutation::value_type> e;
    e.reserve(a.size() + b.size());
    const auto m = static_cast<Permutation::value_type>(b.size());
    for (auto v : a.e_) e.push_back(static_cast<Permutation::value_type>(v + m));
    e.insert(e.end(), b.e_.begin(), b.e_.end());
    return {std::move(e), Permutation::Unchecked{}};
}

std::vector<Permutation> irreducible_components(const Permutation& p) {
    std::vector<Permutation> parts;
    std::size_t start = 0;
    std::size_t prefix_max = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        prefix_max = std::max<std::size_t>(prefix_max, p.at(i));
        // positions start..i hold exactly the values start+1..i+1
        if (prefix_max == i + 1) {
            std::vector<Permutation::value_type> block;
            for (std::size_t j = start; j <= i; ++j) block.push_back(static_cast<Permutation::value_type>(p.at(j) - start));
            parts.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return parts;
}

BarCase bar_case(const Permutation& p) {
    const std::size_t m = p.size();
    if (m <= 1) return BarCase::Trivial;
    const bool leads_max = p.at(0) == m;
    const bool ends_one = p.at(m - 1) == 1;
    if (leads_max && ends_one) return BarCase::BothEnds;
    if (leads_max) return BarCase::LeadingMax;
    if (ends_one) return BarCase::TrailingOne;
    return BarCase::Unchanged;
}

Permutation bar(const Permutation& p) {
    const auto e = p.entries();
    const std::size_t m = p.size();
    switch (bar_case(p)) {
        case BarCase::Trivial:
            return {};
        case BarCase::BothEnds:
            return standardize(e.subspan(1, m - 2));
        case BarCase::LeadingMax:
            return standardize(e.subspan(1));
        case BarCase::TrailingOne:
            return standardize(e.first(m - 1));
        case BarCase::Unchanged:
            break;
    }
    return p;
}

}  // namespace lisinv
