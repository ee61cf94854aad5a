import json
from fractions import Fraction

import pytest

import qeis


def test_g1_table():
    assert qeis.series("g", 1, 8) == [
        Fraction(-1, 2), 1, 1, -1, -2, -3, 1, 4, 8,
    ]


def test_h1_and_u2():
    assert qeis.series("h", 1, 4) == [Fraction(-1, 2), 2, 5, 7, 12]
    assert qeis.series("u", 2, 4) == [Fraction(-1, 24), 0, 1, 4, 9]
    assert qeis.series("u", 3, 6) == [0] * 7


def test_eisenstein_constants():
    assert qeis.series("G", 2, 2) == [Fraction(-1, 24), 1, 3]
    assert qeis.series("G", 4, 2) == [Fraction(1, 240), 1, 9]


def test_series_json_schema():
    doc = json.loads(qeis.series_json("g", 1, 3))
    assert doc["order"] == 3
    assert doc["prefactor"] == "0"
    assert doc["coeffs"][0] == [0, "-1/2"]


def test_coeff_table():
    rows = qeis.coeff_table("anm", 3)
    assert (1, 1, "1", 1) in rows
    assert (3, 2, "-2", 2) in rows
    for n, m, value, threshold in rows:
        assert m >= threshold
    assert (1, 2, "2", 2) in qeis.coeff_table("bnm", 1)


def test_unimodal_ranks():
    assert qeis.unimodal_ranks(2) == {-1: 1, 0: 1, 1: 1}
    assert sum(qeis.unimodal_ranks(6).values()) == 38


def test_eval_function():
    eta = qeis.eval_function("eta", 0j, 1j)
    assert abs(eta - 0.768225422326058) < 1e-12
    assert abs(qeis.eval_function("theta", 0j, 1j)) < 1e-13
    with pytest.raises(qeis.AccuracyError):
        qeis.eval_function("eta", 0j, 1e-9j)


def test_verify_suites_quick():
    numeric = qeis.verify_numeric()
    assert numeric and all(ok for _, ok, _ in numeric)
    limits = qeis.verify_limits()
    assert limits and all(ok for _, ok, _ in limits)
