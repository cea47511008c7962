import os
from fractions import Fraction

import pytest

import hallkit

DATA = os.environ.get("HALLKIT_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def coeff(c):
    return Fraction(c["a"]), Fraction(c["b"])


def test_simple_product_in_a2():
    s = hallkit.Session(os.path.join(DATA, "quivers", "a2.json"))
    out = s.mul("u+[1,0] u+[0,1]")
    # v^-1 at q = 2 is v/2
    assert [coeff(t["coeff"]) for t in out["terms"]] == [(0, Fraction(1, 2))] * 2
    assert {t["class"] for t in out["terms"]} == {"[1,1]#0", "[1,1]#1"}


def test_mutation_case_and_target():
    s = hallkit.Session("kronecker")
    assert s.mutate("left", "2,1", "1,0") == {"case": "ii", "gamma": [3, 2]}
    assert s.mutate("right", "0,1", "1,2") == {"case": "ii", "lambda": [2, 3]}


def test_expression_round_trip():
    s = hallkit.Session("kronecker", q=3)
    x = s.dmul("u+[1,0] u-[1,0] + v^-1*K[0,1]")
    assert s.dmul(x["expr"]) == x


def test_regular_classes():
    for q in (2, 3):
        rows = hallkit.Session("kronecker", q=q).classes("1,1")
        assert sum(r["indecomposable"] for r in rows) == q + 1


def test_orbit_contains_expected_sequences():
    orbit = hallkit.Session("kronecker").orbit(2, ["0,1", "1,2"])
    assert ["[1,0]", "[0,1]"] in orbit
    assert len(orbit) == 5


def test_errors_map_to_python_exceptions():
    s = hallkit.Session("kronecker")
    with pytest.raises(ValueError):
        s.mul("u[1,1]")
    with pytest.raises(ValueError):
        s.dmul("u+[1,0")
    with pytest.raises(ValueError):
        hallkit.Session("a2", q=4)


def test_alternating_sum_and_suite_group():
    assert hallkit.alternating_binomial_sum(3, 7, 2) == {"a": "0/1", "b": "0/1"}
    keys = [k for k, _ in hallkit.suite_groups()]
    assert keys[0] == "sums" and len(keys) == 8
    reports = hallkit.verify("sums")
    assert all(r["pass"] for r in reports)
