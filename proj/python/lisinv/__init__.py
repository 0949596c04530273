"""Exact LIS statistics on 3412-avoiding involutions.

Rationals come back as ``fractions.Fraction`` and big integers as ``int``.
"""

from fractions import Fraction

from . import _lisinv
from ._lisinv import (
    EmptyClassError,
    LimitError,
    UnknownName,
    constant_for,
    contains_pattern,
    is_involution,
    lis,
    monte_carlo,
    sample,
    table1,
    verify,
)

__all__ = [
    "EmptyClassError",
    "LimitError",
    "UnknownName",
    "constant_for",
    "contains_pattern",
    "count_table",
    "gf_coeffs",
    "is_involution",
    "lis",
    "lis_distribution",
    "moments",
    "monte_carlo",
    "oracle_moments",
    "sample",
    "smallest_root",
    "table1",
    "verify",
]


def _patterns(patterns):
    if isinstance(patterns, str):
        return [p for p in patterns.split(",") if p]
    return [str(p) for p in patterns]


def _moments(d):
    return {
        "n": d["n"],
        "count": int(Fraction(d["count"])),
        "mean": Fraction(d["mean"]),
        "variance": Fraction(d["variance"]),
    }


def lis_distribution(n, patterns=("3412",)):
    """LIS histogram of I_n(T) by enumeration (n <= 14)."""
    return _lisinv.lis_distribution(n, _patterns(patterns))


def gf_coeffs(name, order):
    """Slices [x^n] of a catalog series as lists of q-coefficients."""
    return [[Fraction(c) for c in row] for row in _lisinv.gf_coeffs(name, order)]


def moments(name, n, order=0):
    """Exact E and Var of LIS at size n from a catalog series."""
    return _moments(_lisinv.moments(name, n, order))


def oracle_moments(n, patterns=("3412",)):
    """Exact E and Var of LIS at size n by enumeration."""
    return _moments(_lisinv.oracle_moments(n, _patterns(patterns)))


def count_table(n_max):
    """|I_n(3412)| for n = 0..n_max."""
    return [int(v) for v in _lisinv.count_table(n_max)]


def smallest_root(coeffs):
    """Isolating interval (lo, hi) and 12-digit value of the smallest real root.

    Coefficients are integers, constant term first.
    """
    lo, hi, value = _lisinv.smallest_root([str(int(c)) for c in coeffs])
    return Fraction(lo), Fraction(hi), value
