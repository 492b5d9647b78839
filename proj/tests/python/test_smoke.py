"""Python smoke tests for the _ktree extension."""

import json
from fractions import Fraction

import pytest

import ktree


def test_parse_and_spec():
    k = ktree.parse_k("golden:1,1")
    assert k.spec == "quad:(1,1,5,2)"
    assert k.kind == "quad"
    assert ktree.parse_k("3/2").kind == "rational"
    assert abs(float(k) - 1.6180339887) < 1e-9


def test_parse_rejects_bad_specs():
    with pytest.raises(ValueError):
        ktree.parse_k("nonsense")
    with pytest.raises(ValueError):
        ktree.parse_k("1/2")  # k must exceed 1


def test_phi_rows():
    k = ktree.parse_k("golden:1,1")
    assert ktree.leftmost_sequence(k, 5) == [1, 2, 4, 7, 12, 20]
    assert ktree.row_lengths(k, 7) == [1, 1, 2, 3, 5, 8, 13, 21]
    assert ktree.brute_force_row_lengths(k, 7) == [1, 1, 2, 3, 5, 8, 13, 21]


def test_tree_operations():
    k = ktree.parse_k("3/2")
    assert ktree.parent(4, k) == 2
    assert ktree.children(2, k) == (3, 4)
    assert ktree.child_count(2, k) == 2
    assert ktree.depth(4, k) == 3
    slice_ = ktree.build_slice(k, 4)
    assert [len(row) for row in slice_.rows] == [1, 1, 1, 2, 3]
    assert "digraph ktree" in slice_.to_dot()


def test_big_integers_cross_the_boundary():
    k = ktree.parse_k("golden:1,1")
    f = ktree.leftmost_sequence(k, 200)
    assert f[200] > 10**40  # far beyond 64-bit
    assert ktree.floor_scaled(f[200], k) == ktree.ceil_scaled(f[200], k) - 1


def test_recurrence_and_closed_form():
    report = ktree.verify_recurrence(ktree.GoldenParams(1, 1), 40)
    assert report["holds"] is True
    assert report["base"] == (1, 1)
    assert ktree.closed_form_row(ktree.GoldenParams(1, 1), 5) == 8
    assert ktree.closed_form_row(ktree.GoldenParams(3, 0), 4) == 54
    with pytest.raises(ValueError):
        ktree.verify_recurrence(ktree.GoldenParams(1, 2), 25)


def test_enclosures_are_fractions():
    enc = ktree.enclose_c(ktree.parse_k("2"), 10)
    assert enc["c_lo"] == Fraction(1)
    assert enc["c_hi"] == Fraction(1) + Fraction(1, 1024)
    assert enc["rho_lo"] == Fraction(1, 2)


def test_closed_rho_containment():
    rho = ktree.closed_rho(ktree.GoldenParams(1, 1))
    assert str(rho) == "(5+sqrt(5))/10"
    enc = ktree.enclose_c(ktree.parse_k("golden:1,1"), 60)
    lo, hi = enc["rho_lo"], enc["rho_hi"]
    assert Fraction(lo) < Fraction(hi)
    assert float(lo) <= float(rho) <= float(hi)
    assert rho.to_decimal(10) == "0.7236067977"


def test_quadreal_arithmetic():
    phi = ktree.QuadReal(1, 1, 5, 2)
    assert phi * phi == phi + ktree.QuadReal(1, 0, 0, 1)
    assert phi.floor() == 1
    assert (-phi).floor() == -2
    assert ktree.quad_normalize(0, 3, 8, 3) == ktree.QuadReal(0, 2, 2, 1)
    assert phi.frac() < phi


def test_indicators():
    k = ktree.parse_k("golden:1,1")
    x = ktree.count_indicator(1, k)
    assert str(x) == "(-1+sqrt(5))/2"
    assert ktree.classify(x, k) == "ceil"
    report = ktree.grandparent_count(ktree.GoldenParams(5, 3), grid=200)
    assert report["verdict"] is True
    assert report["expected"] == 3


def test_sweep_and_probe():
    rows = ktree.sweep(Fraction(14, 10), Fraction(17, 10), 3, 20)
    assert [row["k"] for row in rows] == [Fraction(7, 5), Fraction(31, 20), Fraction(17, 10)]
    for row in rows:
        assert row["error"] is None
        assert Fraction(row["k"] - 1, row["k"]) <= row["rho_lo"] <= row["rho_hi"] <= 1

    probe = ktree.josephus_probe(2, [Fraction(1, 1000)], 100)
    assert probe["point"] == Fraction(2)
    assert probe["rows"][0]["c_lo"] == Fraction(1)


def test_verify_json_round_trip():
    report = json.loads(ktree.verify_json(3, -1, depth=25, iters=60))
    assert report["pass"] is True
    assert report["rho"]["closed"] == "(5+sqrt(5))/10"


def test_precision_exhaustion_is_an_error():
    k = ktree.parse_k("2.25")
    assert ktree.floor_scaled(2, k) == 4
    with pytest.raises(ArithmeticError):
        ktree.floor_scaled(4, k)
