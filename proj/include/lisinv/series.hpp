#pragma once

// Truncated formal power series in x whose coefficients live in a ring C.
//
// Two coefficient rings are provided:
//   QPoly - dense polynomials in q over Q. Series<QPoly> is the full
//           bivariate series H(x, q) ("BiSeries").
//   QJet  - the Taylor jet of a function of q at q = 1, modulo (q - 1)^3.
//           Series<QJet> carries exactly H(x,1), dH/dq(x,1) and
//           d2H/dq2(x,1) / 2, which is all the moment computations need.
//
// Only x is truncated. The q-degree of QPoly slices is never cut.

#include "lisinv/errors.hpp"
#include "lisinv/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lisinv {

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rational c);
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly zero() { return {}; }
    static QPoly one() { return QPoly(Rational(1)); }
    static QPoly q_marker();
    static QPoly monomial(int k, Rational c);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_unit() const { return c_.size() == 1; }

    /// Coefficient of q^k; zero beyond the degree.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    QPoly inverse() const;
    Rational at_one() const;
    QPoly derivative() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& s);
    /// this += a * b without a temporary product polynomial.
    void add_product(const QPoly& a, const QPoly& b);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
    friend QPoly operator-(QPoly a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// "c0 + c1 q + c2 q^2"
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// value + d1 e + d2 e^2 with q = 1 + e, arithmetic modulo e^3.
class QJet {
public:
    QJet() = default;
    explicit QJet(Rational v) : v_(std::move(v)) {}
    QJet(Rational v, Rational d1, Rational d2) : v_(std::move(v)), d1_(std::move(d1)), d2_(std::move(d2)) {}

    static QJet zero() { return {}; }
    static QJet one() { return QJet(Rational(1)); }
    static QJet q_marker() { return {Rational(1), Rational(1), Rational(0)}; }

    const Rational& value() const { return v_; }
    /// First q-derivative at q = 1.
    const Rational& first() const { return d1_; }
    /// Half the second q-derivative at q = 1.
    const Rational& half_second() const { return d2_; }

    bool is_zero() const { return v_ == 0 && d1_ == 0 && d2_ == 0; }
    bool is_one() const { return v_ == 1 && d1_ == 0 && d2_ == 0; }
    bool is_unit() const { return v_ != 0; }

    QJet inverse() const;
    Rational at_one() const { return v_; }

    QJet& operator+=(const QJet& o);
    QJet& operator-=(const QJet& o);
    QJet& operator*=(const QJet& o);
    QJet& operator*=(const Rational& s);
    void add_product(const QJet& a, const QJet& b);

    friend QJet operator+(QJet a, const QJet& b) { return a += b; }
    friend QJet operator-(QJet a, const QJet& b) { return a -= b; }
    friend QJet operator*(QJet a, const QJet& b) { return a *= b; }
    friend QJet operator*(QJet a, const Rational& s) { return a *= s; }
    friend QJet operator-(QJet a);
    friend bool operator==(const QJet& a, const QJet& b) = default;

    std::string to_string() const;

private:
    Rational v_, d1_, d2_;
};

template <class C>
concept SeriesCoefficient = requires(C c, const C& a, const Rational& r) {
    { C::zero() } -> std::same_as<C>;
    { C::one() } -> std::same_as<C>;
    { C::q_marker() } -> std::same_as<C>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a.is_unit() } -> std::same_as<bool>;
    { a.inverse() } -> std::same_as<C>;
    { a.at_one() } -> std::same_as<Rational>;
    c += a;
    c -= a;
    c *= a;
    c *= r;
    c.add_product(a, a);
};

template <SeriesCoefficient C>
class Series {
public:
    using coefficient_type = C;

    Series() = default;
    explicit Series(int order) : order_(order), s_(static_cast<std::size_t>(order) + 1, C::zero()) {}

    static Series constant(C c, int order) {
        Series r(order);
        r.s_[0] = std::move(c);
        return r;
    }
    static Series one(int order) { return constant(C::one(), order); }
    /// c * x^k
    static Series monomial(int k, C c, int order) {
        Series r(order);
        if (k <= order) r.s_[k] = std::move(c);
        return r;
    }
    static Series x(int order) { return monomial(1, C::one(), order); }
    static Series q(int order) { return constant(C::q_marker(), order); }

    int order() const { return order_; }
    const C& operator[](int n) const { return s_[static_cast<std::size_t>(n)]; }
    C& operator[](int n) { return s_[static_cast<std::size_t>(n)]; }
    const std::vector<C>& slices() const { return s_; }

    Series truncated(int order) const {
        Series r(std::min(order, order_));
        std::copy_n(s_.begin(), r.s_.size(), r.s_.begin());
        return r;
    }

    /// Index of the lowest nonzero slice; order()+1 for the zero series.
    int valuation() const {
        for (int n = 0; n <= order_; ++n)
            if (!s_[n].is_zero()) return n;
        return order_ + 1;
    }

    Series& operator+=(const Series& o) {
        shrink_to(o.order_);
        for (int n = 0; n <= order_; ++n) s_[n] += o.s_[n];
        return *this;
    }
    Series& operator-=(const Series& o) {
        shrink_to(o.order_);
        for (int n = 0; n <= order_; ++n) s_[n] -= o.s_[n];
        return *this;
    }
    Series& operator*=(const Rational& c) {
        for (auto& s : s_) s *= c;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) {
        for (auto& s : a.s_) s *= Rational(-1);
        return a;
    }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Series& a, const Series& b) { return multiply(a, b); }
    friend Series operator/(const Series& a, const Series& b) { return divide(a, b); }

    friend bool operator==(const Series& a, const Series& b) = default;

    /// Result order is the smaller of the two orders.
    static Series multiply(const Series& a, const Series& b) {
        const int order = std::min(a.order_, b.order_);
        Series r(order);
        const auto na = a.support(order);
        const auto nb = b.support(order);
        const auto& outer = na.size() <= nb.size() ? na : nb;
        const auto& inner = na.size() <= nb.size() ? nb : na;
        const Series& so = na.size() <= nb.size() ? a : b;
        const Series& si = na.size() <= nb.size() ? b : a;
        for (int i : outer) {
            for (int j : inner) {
                if (i + j > order) break;
                r.s_[i + j].add_product(so.s_[i], si.s_[j]);
            }
        }
        return r;
    }

    /// Requires a unit constant slice in the divisor.
    static Series divide(const Series& a, const Series& b) {
        const int order = std::min(a.order_, b.order_);
        if (!b.s_[0].is_unit()) throw NonUnitDivisor("series division: divisor constant term is not a unit");
        const C inv0 = b.s_[0].inverse();
        auto nb = b.support(order);
        std::erase(nb, 0);
        Series r(order);
        for (int n = 0; n <= order; ++n) {
            C acc = a.s_[n];
            for (int i : nb) {
                if (i > n) break;
                C t = b.s_[i];
                t *= r.s_[n - i];
                acc -= t;
            }
            acc *= inv0;
            r.s_[n] = std::move(acc);
        }
        return r;
    }

private:
    void shrink_to(int order) {
        if (order < order_) {
            order_ = order;
            s_.resize(static_cast<std::size_t>(order) + 1);
        }
    }
    std::vector<int> support(int upto) const {
        std::vector<int> idx;
        for (int n = 0; n <= std::min(upto, order_); ++n)
            if (!s_[n].is_zero()) idx.push_back(n);
        return idx;
    }

    int order_ = 0;
    std::vector<C> s_{C::zero()};
};

using BiSeries = Series<QPoly>;
using JetSeries = Series<QJet>;

/// Divides by x^v after checking the v lowest slices vanish; the order drops by v.
template <SeriesCoefficient C>
Series<C> shift_down(const Series<C>& a, int v) {
    if (v > a.order()) throw ConstructionError("shift_down: shift exceeds truncation order");
    for (int n = 0; n < v; ++n)
        if (!a[n].is_zero())
            throw ConstructionError("shift_down: slice x^" + std::to_string(n) + " does not vanish");
    Series<C> r(a.order() - v);
    for (int n = 0; n <= r.order(); ++n) r[n] = a[n + v];
    return r;
}

template <SeriesCoefficient C>
Series<C> power(const Series<C>& a, int e) {
    Series<C> r = Series<C>::one(a.order());
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Square root with constant term +1 by Newton iteration s <- (s + a/s) / 2.
/// Each step doubles the number of correct slices, starting from s = 1.
template <SeriesCoefficient C>
Series<C> sqrt(const Series<C>& a) {
    if (!a[0].is_one()) throw BranchError("series sqrt: constant term must equal 1");
    const int order = a.order();
    Series<C> s = Series<C>::one(0);
    int correct = 1;
    const Rational half(1, 2);
    while (correct < order + 1) {
        correct = std::min(2 * correct, order + 1);
        const int prec = correct - 1;
        Series<C> widened(prec);
        for (int n = 0; n <= std::min(s.order(), prec); ++n) widened[n] = s[n];
        s = (widened + a.truncated(prec) / widened) * half;
    }
    return s;
}

/// True when a and b agree on every slice up to `order` (both must reach it).
template <SeriesCoefficient C>
bool equal_up_to(const Series<C>& a, const Series<C>& b, int order) {
    if (a.order() < order || b.order() < order) return false;
    for (int n = 0; n <= order; ++n)
        if (!(a[n] == b[n])) return false;
    return true;
}

// BiSeries-specific operations.

/// Formal q-derivative applied `times` times (1 or 2).
BiSeries d_dq(const BiSeries& a, int times = 1);

/// [x^n q^k]; throws TruncationExceeded when n > order.
Rational coeff(const BiSeries& a, int n, int k);

/// Largest q-degree minus n over all slices; <= 0 for combinatorial series.
int max_excess_q_degree(const BiSeries& a);

/// True when every coefficient is a nonnegative integer.
bool has_nonnegative_integer_coeffs(const BiSeries& a);

/// One line per slice: "n: c0 + c1 q + ...".
std::string dump(const BiSeries& a);

/// Substitutes q = 1; returns order+1 coefficients.
template <SeriesCoefficient C>
std::vector<Rational> eval_q1(const Series<C>& a) {
    std::vector<Rational> r;
    r.reserve(a.slices().size());
    for (const auto& s : a.slices()) r.push_back(s.at_one());
    return r;
}

/// Converts the bivariate series into its jet at q = 1.
JetSeries to_jet(const BiSeries& a);

}  // namespace lisinv
