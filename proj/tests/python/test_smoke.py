from fractions import Fraction

import pytest

import localperiod as lp


def test_period_spot_value():
    rep = lp.local_period(0, lp.Place(q=5, eps=1))
    assert rep["ratio_is_constant"]
    assert rep["normalized"].evaluate(a=Fraction(1, 25)) == Fraction(13, 12)


def test_x_series_matches_oracle():
    place = lp.Place(p=5, eps=1)
    series = lp.x_series(1, 0, place).series(0, 3)[0]
    assert series == [1, Fraction(2, 5), Fraction(2, 25), Fraction(2, 125)]
    assert lp.x_series_oracle(1, place, 3, T=0) == series


def test_rho_zero_and_table():
    place = lp.Place(p=3, eps=-1)
    assert lp.x_at_zero(2, place).series(0, 4)[0] == lp.x_series_oracle(2, place, 4)
    table = lp.pi_table_oracle(2, place, 2, 3)
    assert lp.pi(2, place).series(2, 3) == table


def test_displays_and_equality():
    place = lp.Place(q=7, eps=-1)
    assert lp.pi(4, place) == lp.pi_display(4, place)
    assert lp.weil_zeta(3, place) == lp.weil_zeta_display(3, place)
    assert lp.weil_zeta(3, place) != lp.weil_zeta(5, place)


def test_structured_form():
    d = lp.weil_zeta(1, lp.Place(p=5)).to_dict()
    assert set(d) == {"num", "den"}
    assert all(isinstance(m[0], str) and "/" in m[0] for m in d["num"])


def test_count_measure():
    assert lp.count_measure([1], 0, 25, 3, lp.Place(p=5)) == Fraction(2, 25)
    assert lp.count_measure([2], 0, 1, 1, lp.Place(p=5, eps=-1)) == 0


def test_constant_term_and_hecke():
    place = lp.Place(q=5, eps=-1)
    factor, lam = lp.constant_term_factor(1, place)
    assert lam == (2, -1, 0)
    assert factor.evaluate(a=Fraction(1, 625)) == Fraction(16276, 16275)
    f = lp.local_period(1, place)["raw"]
    assert lp.hecke_shift(f, 0, place) == f


def test_errors():
    with pytest.raises(ValueError):
        lp.Place(p=9)
    with pytest.raises(ValueError):
        lp.x_at_zero(0, lp.Place(p=5, eps=-1))
    with pytest.raises(lp.BudgetExceeded):
        lp.x_series_oracle(1, lp.Place(p=7), 6)


def test_verify_small_grid():
    report = lp.verify(primes=[3], dims=[0, 1, 2], tmax=1, lmax=2)
    assert report["schema"] == "localperiod.verify/1"
    assert report["summary"]["fail"] == 0
    assert len(report["cells"]) == 6
