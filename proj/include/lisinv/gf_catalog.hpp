#pragma once

#include "lisinv/expr.hpp"
#include "lisinv/oracle.hpp"
#include "lisinv/series.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lisinv {

// ---------------------------------------------------------------------------
// Family constructions. All are templates over the coefficient ring so that
// the same code yields the full bivariate series (QPoly) and the q = 1 jet
// used for large-order moment runs (QJet).
// ---------------------------------------------------------------------------

/// H(x,q) for I(3412): (A - sqrt(A^2 - 4x^2)) / (2x^2), A = 1 - xq - x^2(q-1).
template <SeriesCoefficient C>
Series<C> h_3412(int order);

/// H_{12...k} from the convolution recurrence with F_0 = 0, F_1 = 1.
template <SeriesCoefficient C>
Series<C> f_k_recurrence(int k, int order);

/// H_{12...k} from the explicit Narayana double sum (k >= 2; k = 1 gives 1).
template <SeriesCoefficient C>
Series<C> f_k_narayana(int k, int order);

/// H_{k12...(k-1)}, k >= 3.
template <SeriesCoefficient C>
Series<C> g_k(int k, int order);

/// H_{k(k-1)...1} from F_k = 1 / (1 - qx - (q-1)x^2 - x^2 F_{k-2}).
template <SeriesCoefficient C>
Series<C> dec_k(int k, int order);

/// H_{k(k-1)...1} from the Chebyshev closed forms, k >= 3. Uses the
/// x-cleared polynomials W_j = x^j U_j(t), t = (1 - qx - (q-1)x^2) / (2x),
/// which satisfy W_j = B W_{j-1} - x^2 W_{j-2} with B = 2xt.
template <SeriesCoefficient C>
Series<C> dec_k_chebyshev(int k, int order);

/// Narayana coefficient (1/i) C(j-1, i-1) C(j, i-1) with C(-1, 0) = 1.
Rational narayana_coefficient(int j, int i);

// ---------------------------------------------------------------------------
// Moments and asymptotics.
// ---------------------------------------------------------------------------

struct MomentReport {
    int n = 0;
    Rational count;     // [x^n] H(x, 1)
    Rational mean;      // E
    Rational variance;  // Var = E2 + E - E^2, E2 the second factorial moment
    std::optional<double> slope_mean;
    std::optional<double> slope_variance;
};

/// Throws EmptyClassError when [x^n] H(x, 1) = 0, TruncationExceeded when n > order.
MomentReport moments(const BiSeries& series, int n);
MomentReport moments(const JetSeries& series, int n);

enum class Growth { Linear, Constant, InverseSquare };

Growth parse_growth(const std::string& text);
std::string to_string(Growth g);

struct SlopeEstimate {
    int n_lo = 0, n_hi = 0;
    MomentReport lo, hi;
    double mean_ratio = 0;       // E(n_hi) / n_hi
    double mean_difference = 0;  // (E(n_hi) - E(n_lo)) / (n_hi - n_lo)
    double variance_ratio = 0;
    double variance_difference = 0;

    /// The statistic that converges to the constant for the given growth:
    /// Linear -> difference quotient, Constant -> value at n_hi,
    /// InverseSquare -> value * n_hi^2.
    double mean_statistic(Growth g) const;
    double variance_statistic(Growth g) const;
};

SlopeEstimate asymptotic_slope(const JetSeries& series, int n_lo, int n_hi);

/// A real simple root of an integer polynomial with a rational isolating interval.
struct AlgebraicRoot {
    std::vector<BigInt> polynomial;  // coefficients, constant term first
    Rational lo, hi;
    mpf_class value;
};

/// Root of smallest absolute value, required to be real and simple. The
/// candidate is located numerically, then isolated and refined by exact
/// rational bisection until hi - lo <= tolerance.
AlgebraicRoot smallest_root(const std::vector<BigInt>& polynomial, const Rational& tolerance = Rational(1, BigInt("1000000000000000000000000000000")));

/// Integer coefficient list (constant first) of a polynomial in 'a'.
std::vector<BigInt> polynomial_in_alpha(const Expr& e);

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

enum class Construction { ClosedForm, H3412, FkRecurrence, FkNarayana, Gk, DecRecurrence, DecChebyshev };

struct AsymptoticTarget {
    std::string constant;  // key into the constant table
    Growth growth = Growth::Linear;
};

struct GfSpec {
    std::string name;
    Construction construction = Construction::ClosedForm;
    int k = 0;
    std::string expr_text;  // closed forms only
    ExprPtr expr;
    /// Each entry is one pattern set T (3412 included) that the series is
    /// claimed to enumerate. Several entries form one Table 1 row.
    std::vector<PatternSet> classes;
    std::optional<AsymptoticTarget> mean;
    std::optional<AsymptoticTarget> variance;
    std::string note;
};

struct TheoremTarget {
    std::string name;  // e.g. "thm_iv"
    std::string gf;
    AsymptoticTarget mean;
};

struct ConstantEntry {
    std::string name;
    std::string expr_text;
    ExprPtr expr;
    std::string root;  // key into the root table, empty when 'a' is unused
};

class Catalog {
public:
    /// The checked-in data file compiled into the library.
    static const Catalog& builtin();
    static Catalog from_json(const std::string& text);
    static Catalog load(const std::filesystem::path& path);

    /// Closed forms from the data file, then H_3412 and the F_k, G_k, Dec_k families.
    const std::vector<GfSpec>& specs() const { return specs_; }
    /// Also resolves "F_k(7)", "F_k_narayana(4)", "G_k(6)", "Dec_k(8)", "Dec_k_chebyshev(5)".
    GfSpec find(const std::string& name) const;
    std::vector<const GfSpec*> table1_rows() const;
    const std::vector<TheoremTarget>& theorem_targets() const { return theorems_; }
    const std::vector<ConstantEntry>& constants() const { return constants_; }

    /// Value of a named asymptotic constant; throws UnknownName.
    mpf_class constant(const std::string& name) const;
    AlgebraicRoot root(const std::string& key) const;
    const std::string& root_polynomial(const std::string& key) const;

    template <SeriesCoefficient C>
    Series<C> evaluate(const GfSpec& spec, int order) const;

private:
    std::vector<GfSpec> specs_;
    std::vector<TheoremTarget> theorems_;
    std::vector<ConstantEntry> constants_;
    std::vector<std::pair<std::string, std::string>> roots_;
};

/// The decimal form used for reported constants (12 significant digits).
std::string constant_decimal(const Catalog& catalog, const std::string& name);

}  // namespace lisinv
