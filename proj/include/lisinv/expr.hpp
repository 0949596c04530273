#pragma once

// A small expression language for the catalog data file.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'x' | 'q' | 'a' | 'sqrt' '(' expr ')' | '(' expr ')'
//
// x and q are the series markers; a is an algebraic constant supplied at
// evaluation time (a root of a catalog polynomial).

#include "lisinv/errors.hpp"
#include "lisinv/series.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lisinv {

struct Expr {
    enum class Kind { Number, X, Q, Alpha, Add, Sub, Mul, Div, Pow, Neg, Sqrt };
    Kind kind = Kind::Number;
    BigInt number;
    int exponent = 0;
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws std::invalid_argument with the offending position on bad input.
ExprPtr parse_expr(const std::string& text);

/// Canonical text form of a parsed expression (fully parenthesized).
std::string to_string(const Expr& e);

/// Real value with `alpha` bound to 'a'. Rejects x and q.
mpf_class eval_real(const Expr& e, const mpf_class& alpha, mp_bitcnt_t precision = 256);

/// Evaluates the expression as a series truncated at `order`.
///
/// Division by a divisor whose lowest nonzero slice x^v is a unit is
/// performed after removing x^v from both sides (the dividend's low slices
/// must vanish), which costs v orders of precision; evaluation therefore
/// runs at a padded order and the result must still reach `order`.
template <SeriesCoefficient C>
Series<C> eval_series(const Expr& e, int order);

/// Coefficient table of a polynomial expression in x and q (no division or
/// sqrt): entry [i][j] is the coefficient of x^i q^j.
std::vector<std::vector<BigInt>> expand_polynomial(const Expr& e);

}  // namespace lisinv
