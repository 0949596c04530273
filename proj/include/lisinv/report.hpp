#pragma once

// Verification and asymptotic reports shared by the CLI, the acceptance
// suite and the Python module.

#include "lisinv/gf_catalog.hpp"

#include <string>
#include <vector>

namespace lisinv {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample on failure
};

struct VerifyOptions {
    int max_n = 10;
    int order = 64;
    std::string only;  // restrict to one generating function when nonempty
};

/// Series-vs-oracle agreement for every spec and class, family
/// equivalences, structural decomposition and the known-class identities.
std::vector<Check> run_verification(const Catalog& catalog, const VerifyOptions& options);

/// Compares the [x^n] slices of `series` with oracle distributions for
/// every class and n <= max_n.
Check oracle_check(const std::string& name, const BiSeries& series, const std::vector<PatternSet>& classes, int max_n);

struct AsymptoticRow {
    std::string name;      // theorem part or Table 1 row
    std::string gf;
    std::string patterns;  // row patterns separated by '/'
    std::string statistic; // "E" or "Var"
    Growth growth = Growth::Linear;
    double measured = 0;
    double constant = 0;
    std::string constant_decimal;
    double relative_error = 0;
    bool pass = false;
};

/// Evaluates every Table 1 row at order n_hi and compares both statistics.
std::vector<AsymptoticRow> table1_report(const Catalog& catalog, int n_hi, double tolerance);

/// Same for the theorem parts (mean only).
std::vector<AsymptoticRow> theorem_report(const Catalog& catalog, int n_hi, double tolerance);

}  // namespace lisinv
