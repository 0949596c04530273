#include "lisinv/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace lisinv {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_decimal(const mpf_class& r, int digits) {
    const int n = gmp_snprintf(nullptr, 0, "%.*Fg", digits, r.get_mpf_t());
    std::string out(static_cast<std::size_t>(n) + 1, '\0');
    gmp_snprintf(out.data(), out.size(), "%.*Fg", digits, r.get_mpf_t());
    out.resize(static_cast<std::size_t>(n));
    return out;
}

std::string to_decimal(const Rational& r, int digits) {
    return to_decimal(mpf_class(r, 256), digits);
}

bool is_canonical(const Rational& r) {
    if (r.get_den() < 1) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g == 1;
}

}  // namespace lisinv
