#include "lisinv/series.hpp"

#include <sstream>

namespace lisinv {

// ---- QPoly ----

QPoly::QPoly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::q_marker() { return monomial(1, Rational(1)); }

QPoly QPoly::monomial(int k, Rational c) {
    QPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.c_[k] = std::move(c);
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return c_[k];
}

QPoly QPoly::inverse() const {
    if (!is_unit()) throw NonUnitDivisor("q-polynomial " + to_string() + " is not a unit");
    return QPoly(Rational(1) / c_[0]);
}

Rational QPoly::at_one() const {
    Rational s;
    for (const auto& c : c_) s += c;
    return s;
}

QPoly QPoly::derivative() const {
    QPoly d;
    if (c_.size() <= 1) return d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d.c_[k - 1] = c_[k] * static_cast<long>(k);
    d.trim();
    return d;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.add_product(a, b);
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

void QPoly::add_product(const QPoly& a, const QPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return;
    const std::size_t need = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < need) c_.resize(need);
    Rational t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            c_[i + j] += t;
        }
    }
    trim();
}

QPoly operator-(QPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << lisinv::to_string(c_[k]);
        if (k == 1) os << " q";
        if (k > 1) os << " q^" << k;
    }
    return os.str();
}

// ---- QJet ----

QJet QJet::inverse() const {
    if (!is_unit()) throw NonUnitDivisor("jet with zero value is not a unit");
    // 1/(v + a e + b e^2) = 1/v - a/v^2 e + (a^2/v^3 - b/v^2) e^2
    const Rational iv = Rational(1) / v_;
    const Rational iv2 = iv * iv;
    return {iv, -d1_ * iv2, d1_ * d1_ * iv2 * iv - d2_ * iv2};
}

QJet& QJet::operator+=(const QJet& o) {
    v_ += o.v_;
    d1_ += o.d1_;
    d2_ += o.d2_;
    return *this;
}

QJet& QJet::operator-=(const QJet& o) {
    v_ -= o.v_;
    d1_ -= o.d1_;
    d2_ -= o.d2_;
    return *this;
}

QJet& QJet::operator*=(const QJet& o) {
    QJet r;
    r.add_product(*this, o);
    *this = std::move(r);
    return *this;
}

QJet& QJet::operator*=(const Rational& s) {
    v_ *= s;
    d1_ *= s;
    d2_ *= s;
    return *this;
}

void QJet::add_product(const QJet& a, const QJet& b) {
    Rational t;
    auto mac = [&t](Rational& acc, const Rational& x, const Rational& y) {
        if (x == 0 || y == 0) return;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc += t;
    };
    mac(v_, a.v_, b.v_);
    mac(d1_, a.v_, b.d1_);
    mac(d1_, a.d1_, b.v_);
    mac(d2_, a.v_, b.d2_);
    mac(d2_, a.d1_, b.d1_);
    mac(d2_, a.d2_, b.v_);
}

QJet operator-(QJet a) {
    a *= Rational(-1);
    return a;
}

std::string QJet::to_string() const {
    return "[" + lisinv::to_string(v_) + ", " + lisinv::to_string(d1_) + ", " + lisinv::to_string(d2_) + "]";
}

// ---- BiSeries ----

BiSeries d_dq(const BiSeries& a, int times) {
    if (times < 1 || times > 2) throw std::invalid_argument("d_dq: times must be 1 or 2");
    BiSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        QPoly p = a[n].derivative();
        if (times == 2) p = p.derivative();
        r[n] = std::move(p);
    }
    return r;
}

Rational coeff(const BiSeries& a, int n, int k) {
    if (n < 0 || n > a.order())
        throw TruncationExceeded("coeff: x^" + std::to_string(n) + " beyond order " + std::to_string(a.order()));
    return a[n].coeff(k);
}

int max_excess_q_degree(const BiSeries& a) {
    int excess = -(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n)
        if (!a[n].is_zero()) excess = std::max(excess, a[n].degree() - n);
    return excess;
}

bool has_nonnegative_integer_coeffs(const BiSeries& a) {
    for (const auto& s : a.slices())
        for (const auto& c : s.coeffs())
            if (c < 0 || c.get_den() != 1) return false;
    return true;
}

std::string dump(const BiSeries& a) {
    std::ostringstream os;
    for (int n = 0; n <= a.order(); ++n) os << n << ": " << a[n].to_string() << "\n";
    return os.str();
}

JetSeries to_jet(const BiSeries& a) {
    JetSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        const QPoly& p = a[n];
        Rational d2 = p.derivative().derivative().at_one() / 2;
        r[n] = QJet(p.at_one(), p.derivative().at_one(), std::move(d2));
    }
    return r;
}

}  // namespace lisinv
