#include "lisinv/gf_catalog.hpp"

#include <stdexcept>

namespace lisinv {

namespace {

template <SeriesCoefficient C>
struct Build {
    using S = Series<C>;
    int order;

    S one() const { return S::one(order); }
    S x(int k = 1) const { return S::monomial(k, C::one(), order); }
    S q() const { return S::q(order); }
    S q_power(int k) const { return S::constant(power(S::q(0), k)[0], order); }
    S num(long v) const { return S::constant(C::one() * Rational(v), order); }
    /// xq / (1 - x)
    S xq_over_1mx() const { return x() * q() / (one() - x()); }
    /// 1 - qx - (q-1)x^2
    S b_poly() const { return one() - q() * x() - (q() - one()) * x(2); }
};

BigInt binomial(int a, int b) {
    if (b < 0) return 0;
    if (a == -1) return b == 0 ? 1 : 0;
    if (a < 0 || b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

/// sum_{i=1}^{j+1} N(j,i) x^{2i+j-1} / ((1-x)^{2j+1} (1+x)^j) * q^{j+1}
template <SeriesCoefficient C>
Series<C> narayana_term(int j, int order) {
    const Build<C> b{order};
    Series<C> numer(order);
    for (int i = 1; i <= j + 1; ++i) {
        const Rational c = narayana_coefficient(j, i);
        if (c == 0) continue;
        numer += b.x(2 * i + j - 1) * c;
    }
    const Series<C> denom = power(b.one() - b.x(), 2 * j + 1) * power(b.one() + b.x(), j);
    return numer / denom * b.q_power(j + 1);
}

}  // namespace

Rational narayana_coefficient(int j, int i) {
    Rational r(binomial(j - 1, i - 1) * binomial(j, i - 1), BigInt(i));
    r.canonicalize();
    return r;
}

template <SeriesCoefficient C>
Series<C> h_3412(int order) {
    const Build<C> b{order + 2};
    const Series<C> a = b.b_poly();
    const Series<C> root = sqrt(a * a - b.x(2) * Rational(4));
    const Series<C> numer = a - root;
    if (!numer[0].is_zero() || !numer[1].is_zero())
        throw ConstructionError("h_3412: numerator does not vanish to order x^2");
    return shift_down(numer, 2) * Rational(1, 2);
}

template <SeriesCoefficient C>
Series<C> f_k_recurrence(int k, int order) {
    if (k < 0) throw std::invalid_argument("f_k_recurrence: k must be >= 0");
    const Build<C> b{order};
    std::vector<Series<C>> f{Series<C>(order), b.one()};
    const Series<C> lead = b.xq_over_1mx();
    const Series<C> one_minus_x2 = b.one() - b.x(2);
    for (int m = 2; m <= k; ++m) {
        if (m == 2) {
            f.push_back(b.one() + lead * f[1]);
            continue;
        }
        // The i = m summand (F_m - F_{m-1}) F_1 is moved to the left side.
        Series<C> rhs = b.one() + (lead - b.x(2)) * f[m - 1];
        Series<C> sum(order);
        for (int i = 3; i <= m - 1; ++i) sum += (f[i] - f[i - 1]) * f[m - i + 1];
        rhs += b.x(2) * sum;
        f.push_back(rhs / one_minus_x2);
    }
    return f[static_cast<std::size_t>(k)];
}

template <SeriesCoefficient C>
Series<C> f_k_narayana(int k, int order) {
    if (k < 1) throw std::invalid_argument("f_k_narayana: k must be >= 1");
    Series<C> s = Series<C>::one(order);
    for (int j = 0; j <= k - 2; ++j) s += narayana_term<C>(j, order);
    return s;
}

template <SeriesCoefficient C>
Series<C> g_k(int k, int order) {
    if (k < 3) throw std::invalid_argument("g_k: k must be >= 3");
    const Build<C> b{order};
    Series<C> sum(order);
    for (int j = 1; j <= k - 3; ++j) sum += narayana_term<C>(j, order);
    return b.one() / (b.one() - b.xq_over_1mx() - b.x(2) * sum);
}

template <SeriesCoefficient C>
Series<C> dec_k(int k, int order) {
    if (k < 1) throw std::invalid_argument("dec_k: k must be >= 1");
    const Build<C> b{order};
    Series<C> odd = b.one();                              // F_1
    Series<C> even = b.one() / (b.one() - b.q() * b.x());  // F_2
    const Series<C> base = b.b_poly();
    for (int m = 3; m <= k; ++m) {
        Series<C>& prev = (m % 2 == 1) ? odd : even;
        prev = b.one() / (base - b.x(2) * prev);
    }
    return (k % 2 == 1) ? odd : even;
}

template <SeriesCoefficient C>
Series<C> dec_k_chebyshev(int k, int order) {
    if (k < 3) throw std::invalid_argument("dec_k_chebyshev: k must be >= 3");
    const Build<C> b{order};
    const int half = (k % 2 == 1) ? (k - 1) / 2 : (k - 2) / 2;
    // w[j + 1] = W_j for j = -1..half; W_{-1} = 0.
    const Series<C> bp = b.b_poly();
    std::vector<Series<C>> w{Series<C>(order), b.one()};
    for (int j = 1; j <= half; ++j) w.push_back(bp * w[j] - b.x(2) * w[j - 1]);
    auto W = [&](int j) -> const Series<C>& { return w[static_cast<std::size_t>(j + 1)]; };

    // half >= 1, so every index below is >= -1.
    Series<C> numer(order), denom(order);
    if (k % 2 == 1) {
        numer = W(half - 1) - b.x(2) * W(half - 2);
        denom = W(half) - b.x(2) * W(half - 1);
    } else {
        const Series<C> lead = b.one() - b.x() * b.q();
        numer = lead * W(half - 1) - b.x(2) * W(half - 2);
        denom = lead * W(half) - b.x(2) * W(half - 1);
    }
    if (!denom[0].is_unit()) throw ConstructionError("dec_k_chebyshev: cleared denominator lost its unit constant term");
    return numer / denom;
}

#define LISINV_INSTANTIATE(C)                               \
    template Series<C> h_3412<C>(int);                      \
    template Series<C> f_k_recurrence<C>(int, int);         \
    template Series<C> f_k_narayana<C>(int, int);           \
    template Series<C> g_k<C>(int, int);                    \
    template Series<C> dec_k<C>(int, int);                  \
    template Series<C> dec_k_chebyshev<C>(int, int);

LISINV_INSTANTIATE(QPoly)
LISINV_INSTANTIATE(QJet)

#undef LISINV_INSTANTIATE

}  // namespace lisinv
