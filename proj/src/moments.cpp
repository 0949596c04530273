#include "lisinv/gf_catalog.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace lisinv {

namespace {

MomentReport assemble(int n, Rational count, Rational first, Rational second) {
    if (count == 0) throw EmptyClassError("no objects of size " + std::to_string(n));
    MomentReport r;
    r.n = n;
    r.mean = first / count;
    const Rational factorial2 = second / count;
    r.variance = factorial2 + r.mean - r.mean * r.mean;
    r.count = std::move(count);
    return r;
}

void check_order(int order, int n) {
    if (n < 0 || n > order)
        throw TruncationExceeded("moments: n = " + std::to_string(n) + " beyond order " + std::to_string(order));
}

}  // namespace

MomentReport moments(const BiSeries& series, int n) {
    check_order(series.order(), n);
    const QPoly& slice = series[n];
    const QPoly d1 = slice.derivative();
    return assemble(n, slice.at_one(), d1.at_one(), d1.derivative().at_one());
}

MomentReport moments(const JetSeries& series, int n) {
    check_order(series.order(), n);
    const QJet& j = series[n];
    return assemble(n, j.value(), j.first(), j.half_second() * 2);
}

Growth parse_growth(const std::string& text) {
    if (text == "linear") return Growth::Linear;
    if (text == "constant") return Growth::Constant;
    if (text == "inverse_square") return Growth::InverseSquare;
    throw UnknownName("unknown growth kind '" + text + "'");
}

std::string to_string(Growth g) {
    switch (g) {
        case Growth::Linear:
            return "linear";
        case Growth::Constant:
            return "constant";
        case Growth::InverseSquare:
            return "inverse_square";
    }
    return {};
}

namespace {

double pick(Growth g, const Rational& at_hi, double difference, int n_hi) {
    switch (g) {
        case Growth::Linear:
            return difference;
        case Growth::Constant:
            return at_hi.get_d();
        case Growth::InverseSquare:
            return Rational(at_hi * n_hi * n_hi).get_d();
    }
    return 0;
}

}  // namespace

double SlopeEstimate::mean_statistic(Growth g) const { return pick(g, hi.mean, mean_difference, n_hi); }

double SlopeEstimate::variance_statistic(Growth g) const { return pick(g, hi.variance, variance_difference, n_hi); }

SlopeEstimate asymptotic_slope(const JetSeries& series, int n_lo, int n_hi) {
    if (n_lo >= n_hi) throw std::invalid_argument("asymptotic_slope: need n_lo < n_hi");
    SlopeEstimate s;
    s.n_lo = n_lo;
    s.n_hi = n_hi;
    s.lo = moments(series, n_lo);
    s.hi = moments(series, n_hi);
    const Rational span(n_hi - n_lo);
    s.mean_ratio = Rational(s.hi.mean / n_hi).get_d();
    s.mean_difference = Rational((s.hi.mean - s.lo.mean) / span).get_d();
    s.variance_ratio = Rational(s.hi.variance / n_hi).get_d();
    s.variance_difference = Rational((s.hi.variance - s.lo.variance) / span).get_d();
    s.hi.slope_mean = s.mean_difference;
    s.hi.slope_variance = s.variance_difference;
    return s;
}

// ---- roots ----

namespace {

Rational evaluate(const std::vector<BigInt>& p, const Rational& x) {
    Rational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int sign(const Rational& r) { return sgn(r); }

Rational dyadic_near(double v, int bits) {
    const double scale = std::ldexp(1.0, bits);
    Rational r(BigInt(static_cast<long>(std::llround(v * scale))), BigInt(1));
    r /= Rational(BigInt(1) << bits);
    return r;
}

}  // namespace

AlgebraicRoot smallest_root(const std::vector<BigInt>& polynomial, const Rational& tolerance) {
    std::vector<BigInt> p = polynomial;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.size() < 2) throw std::invalid_argument("smallest_root: polynomial must be nonconstant");

    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[static_cast<Eigen::Index>(i)] = p[i].get_d();
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    std::vector<std::complex<double>> roots(solver.roots().begin(), solver.roots().end());
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return std::abs(a) < std::abs(b); });

    const auto smallest = roots.front();
    if (std::abs(smallest.imag()) > 1e-9 * std::max(1.0, std::abs(smallest)))
        throw ConstructionError("smallest_root: root of smallest modulus is not real");
    if (roots.size() > 1 && std::abs(roots[1]) - std::abs(smallest) < 1e-9)
        throw ConstructionError("smallest_root: smallest modulus is not attained by a unique root");

    AlgebraicRoot r;
    r.polynomial = polynomial;
    const double guess = smallest.real();
    r.lo = dyadic_near(guess - 1e-7, 40);
    r.hi = dyadic_near(guess + 1e-7, 40);
    int slo = sign(evaluate(p, r.lo));
    const int shi = sign(evaluate(p, r.hi));
    if (slo == 0) r.hi = r.lo;
    else if (shi == 0) r.lo = r.hi;
    else if (slo == shi) throw ConstructionError("smallest_root: no sign change around the numerical root");

    while (r.hi - r.lo > tolerance) {
        Rational mid = (r.lo + r.hi) / 2;
        const int sm = sign(evaluate(p, mid));
        if (sm == 0) {
            r.lo = r.hi = mid;
            break;
        }
        if (sm == slo)
            r.lo = std::move(mid);
        else
            r.hi = std::move(mid);
    }
    r.value = mpf_class((r.lo + r.hi) / 2, 256);
    return r;
}

std::vector<BigInt> polynomial_in_alpha(const Expr& e) {
    // Reuse the series machinery with 'a' renamed to x.
    std::function<ExprPtr(const Expr&)> rename = [&](const Expr& node) -> ExprPtr {
        auto copy = std::make_shared<Expr>(node);
        if (node.kind == Expr::Kind::Alpha) copy->kind = Expr::Kind::X;
        else if (node.kind == Expr::Kind::X || node.kind == Expr::Kind::Q)
            throw std::invalid_argument("root polynomial must only use 'a'");
        for (auto& arg : copy->args) arg = rename(*arg);
        return copy;
    };
    const auto table = expand_polynomial(*rename(e));
    std::vector<BigInt> coeffs;
    for (const auto& row : table) coeffs.push_back(row.empty() ? BigInt(0) : row[0]);
    return coeffs;
}

}  // namespace lisinv
