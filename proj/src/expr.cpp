#include "lisinv/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace lisinv {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->args = std::move(args);
        return e;
    }

    ExprPtr expr() {
        auto lhs = term();
        for (;;) {
            if (eat('+'))
                lhs = node(Expr::Kind::Add, {lhs, term()});
            else if (eat('-'))
                lhs = node(Expr::Kind::Sub, {lhs, term()});
            else
                return lhs;
        }
    }
    ExprPtr term() {
        auto lhs = unary();
        for (;;) {
            if (eat('*'))
                lhs = node(Expr::Kind::Mul, {lhs, unary()});
            else if (eat('/'))
                lhs = node(Expr::Kind::Div, {lhs, unary()});
            else
                return lhs;
        }
    }
    ExprPtr unary() {
        if (eat('-')) return node(Expr::Kind::Neg, {unary()});
        return power();
    }
    ExprPtr power() {
        auto base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Pow;
        e->exponent = std::stoi(s_.substr(start, pos_ - start));
        e->args = {base};
        return e;
    }
    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->number = BigInt(s_.substr(start, pos_ - start));
            return e;
        }
        if (eat('(')) {
            auto e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            auto arg = expr();
            if (!eat(')')) fail("expected ')'");
            return node(Expr::Kind::Sqrt, {arg});
        }
        ++pos_;
        switch (c) {
            case 'x':
                return node(Expr::Kind::X, {});
            case 'q':
                return node(Expr::Kind::Q, {});
            case 'a':
                return node(Expr::Kind::Alpha, {});
            default:
                --pos_;
                fail("unknown symbol");
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
};

template <SeriesCoefficient C>
Series<C> eval_at(const Expr& e, int order) {
    using S = Series<C>;
    switch (e.kind) {
        case Expr::Kind::Number:
            return S::constant(C::one() * Rational(e.number), order);
        case Expr::Kind::X:
            return S::x(order);
        case Expr::Kind::Q:
            return S::q(order);
        case Expr::Kind::Alpha:
            throw std::invalid_argument("symbol 'a' has no series value");
        case Expr::Kind::Add:
            return eval_at<C>(*e.args[0], order) + eval_at<C>(*e.args[1], order);
        case Expr::Kind::Sub:
            return eval_at<C>(*e.args[0], order) - eval_at<C>(*e.args[1], order);
        case Expr::Kind::Mul:
            return eval_at<C>(*e.args[0], order) * eval_at<C>(*e.args[1], order);
        case Expr::Kind::Neg:
            return -eval_at<C>(*e.args[0], order);
        case Expr::Kind::Pow:
            return power(eval_at<C>(*e.args[0], order), e.exponent);
        case Expr::Kind::Sqrt:
            return sqrt(eval_at<C>(*e.args[0], order));
        case Expr::Kind::Div: {
            S num = eval_at<C>(*e.args[0], order);
            S den = eval_at<C>(*e.args[1], order);
            const int v = den.valuation();
            if (v > den.order()) throw NonUnitDivisor("division by a series that vanishes to the working order");
            if (v > 0) {
                num = shift_down(num, v);
                den = shift_down(den, v);
            }
            return num / den;
        }
    }
    throw std::logic_error("unreachable");
}

int x_degree_bound(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number:
        case Expr::Kind::Q:
            return 0;
        case Expr::Kind::X:
            return 1;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return std::max(x_degree_bound(*e.args[0]), x_degree_bound(*e.args[1]));
        case Expr::Kind::Mul:
            return x_degree_bound(*e.args[0]) + x_degree_bound(*e.args[1]);
        case Expr::Kind::Neg:
            return x_degree_bound(*e.args[0]);
        case Expr::Kind::Pow:
            return e.exponent * x_degree_bound(*e.args[0]);
        default:
            throw std::invalid_argument("not a polynomial expression: " + to_string(e));
    }
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
    auto bin = [&](const char* op) { return "(" + to_string(*e.args[0]) + op + to_string(*e.args[1]) + ")"; };
    switch (e.kind) {
        case Expr::Kind::Number:
            return e.number.get_str();
        case Expr::Kind::X:
            return "x";
        case Expr::Kind::Q:
            return "q";
        case Expr::Kind::Alpha:
            return "a";
        case Expr::Kind::Add:
            return bin(" + ");
        case Expr::Kind::Sub:
            return bin(" - ");
        case Expr::Kind::Mul:
            return bin("*");
        case Expr::Kind::Div:
            return bin("/");
        case Expr::Kind::Pow:
            return to_string(*e.args[0]) + "^" + std::to_string(e.exponent);
        case Expr::Kind::Neg:
            return "-" + to_string(*e.args[0]);
        case Expr::Kind::Sqrt:
            return "sqrt(" + to_string(*e.args[0]) + ")";
    }
    return {};
}

mpf_class eval_real(const Expr& e, const mpf_class& alpha, mp_bitcnt_t precision) {
    auto arg = [&](std::size_t i) { return eval_real(*e.args[i], alpha, precision); };
    mpf_class r(0, precision);
    switch (e.kind) {
        case Expr::Kind::Number:
            r = e.number;
            return r;
        case Expr::Kind::Alpha:
            r = alpha;
            return r;
        case Expr::Kind::X:
        case Expr::Kind::Q:
            throw std::invalid_argument("series marker in a real-valued expression");
        case Expr::Kind::Add:
            r = arg(0) + arg(1);
            return r;
        case Expr::Kind::Sub:
            r = arg(0) - arg(1);
            return r;
        case Expr::Kind::Mul:
            r = arg(0) * arg(1);
            return r;
        case Expr::Kind::Div:
            r = arg(0) / arg(1);
            return r;
        case Expr::Kind::Neg:
            r = -arg(0);
            return r;
        case Expr::Kind::Pow: {
            const mpf_class b = arg(0);
            r = 1;
            for (int i = 0; i < e.exponent; ++i) r *= b;
            return r;
        }
        case Expr::Kind::Sqrt:
            r = ::sqrt(arg(0));
            return r;
    }
    return r;
}

template <SeriesCoefficient C>
Series<C> eval_series(const Expr& e, int order) {
    for (int pad = 4; pad <= 64; pad *= 2) {
        Series<C> s = eval_at<C>(e, order + pad);
        if (s.order() >= order) return s.truncated(order);
    }
    throw ConstructionError("expression loses too much precision: " + to_string(e));
}

template Series<QPoly> eval_series<QPoly>(const Expr&, int);
template Series<QJet> eval_series<QJet>(const Expr&, int);

std::vector<std::vector<BigInt>> expand_polynomial(const Expr& e) {
    const int deg = x_degree_bound(e);
    const BiSeries s = eval_at<QPoly>(e, deg);
    std::vector<std::vector<BigInt>> table;
    for (int n = 0; n <= deg; ++n) {
        std::vector<BigInt> row;
        for (const auto& c : s[n].coeffs()) row.push_back(c.get_num());
        table.push_back(std::move(row));
    }
    while (!table.empty() && table.back().empty()) table.pop_back();
    return table;
}

}  // namespace lisinv
