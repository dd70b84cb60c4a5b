"""Exact good-place local factors with brute-force verification."""

try:
    from . import _localperiod as _ext
except ImportError:  # in-tree build: the extension sits next to the package
    import _localperiod as _ext

from fractions import Fraction

BudgetExceeded = _ext.BudgetExceeded
Place = _ext.Place
RationalFunction = _ext.RationalFunction

x_series = _ext.x_series
x_at_zero = _ext.x_at_zero
pi = _ext.pi
pi_display = _ext.pi_display
weil_zeta = _ext.weil_zeta
weil_zeta_display = _ext.weil_zeta_display
hecke_shift = _ext.hecke_shift
local_period = _ext.local_period
constant_term_factor = _ext.constant_term_factor
model_form = _ext.model_form
x_series_oracle = _ext.x_series_oracle
pi_table_oracle = _ext.pi_table_oracle
count_measure = _ext.count_measure
verify = _ext.verify


def q_power(place, x):
    """q^{-x} as a Fraction."""
    return Fraction(place.q) ** (-x)


__all__ = [
    "BudgetExceeded",
    "Fraction",
    "Place",
    "RationalFunction",
    "constant_term_factor",
    "count_measure",
    "hecke_shift",
    "local_period",
    "model_form",
    "pi",
    "pi_display",
    "pi_table_oracle",
    "q_power",
    "verify",
    "weil_zeta",
    "weil_zeta_display",
    "x_at_zero",
    "x_series",
    "x_series_oracle",
]
