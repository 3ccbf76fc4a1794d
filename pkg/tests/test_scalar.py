from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from flexsys.scalar import EPS, INF, OMEGA, ONE, ZERO, EpsScalar, classify, es_arith, es_compare, format_eps, valuation

import gen
from oracles import sympy_series, sympy_valuation, to_sympy


def test_product_with_eps():
    assert es_arith(OMEGA + 2, EPS, "mul") == 1 + 2 * EPS


def test_self_difference_is_zero():
    f = (1 + EPS) / (3 - EPS**2)
    assert es_arith(f, f, "sub") == ZERO
    assert (f - f).is_zero()


def test_geometric_series():
    f = es_arith(ONE, 1 - EPS, "div")
    assert f.valuation() == 0
    assert f.series(3) == {0: 1, 1: 1, 2: 1, 3: 1}
    assert f.series(3) == sympy_series(to_sympy(f), 3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        es_arith(ONE, ZERO, "div")


@pytest.mark.parametrize(
    "f, v",
    [(3 * EPS**2, 2), (ZERO, INF), ((EPS + EPS**2) / (1 - EPS), 1), (OMEGA + 2, -1)],
)
def test_valuation(f, v):
    assert valuation(f) == v


@pytest.mark.parametrize(
    "f, g, sign",
    [(OMEGA + 2, 1000, 1), (EPS, EPS**2, 1), (Fraction("0.15"), Fraction("0.1"), 1), (-EPS, EPS**3, -1), (EPS, EPS, 0)],
)
def test_compare(f, g, sign):
    assert es_compare(f, g) == sign


def test_classify():
    assert classify(OMEGA + 2) == "unlimited"
    assert classify(Fraction(-3, 7)) == "appreciable"
    assert classify(EPS / (1 + EPS)) == "infinitesimal"


def test_normal_form_is_unique():
    a = (1 - EPS**2) / (1 - EPS)
    assert a == 1 + EPS
    assert a.is_laurent_polynomial()
    assert hash(a) == hash(1 + EPS)
    assert EpsScalar(Fraction(3, 4)) == Fraction(3, 4)
    assert hash(EpsScalar(2)) == hash(2)


def test_decimal_strings_are_exact():
    assert EpsScalar("0.15") == Fraction(3, 20)


def test_format():
    assert format_eps(Fraction(1, 3) * OMEGA**2 - Fraction(1, 5)) == "1/3*eps^-2-0.2"
    assert format_eps(1 / (1 - EPS)) == "(1)/(1-eps)"
    assert format_eps(-EPS + 2 * EPS**3) == "-eps+2*eps^3"


def same(a, b) -> bool:
    return sympy.cancel(a - b) == 0


def test_field_laws_against_sympy():
    rng = random.Random(7)
    for _ in range(150):
        f, g = gen.eps_scalar(rng), gen.eps_scalar(rng)
        sf, sg = to_sympy(f), to_sympy(g)
        assert same(to_sympy(f + g), sf + sg)
        assert same(to_sympy(f * g), sf * sg)
        if not g.is_zero():
            assert same(to_sympy(f / g), sf / sg)
        v = sympy_valuation(sf)
        assert f.valuation() == (INF if v is None else v)


def test_series_against_sympy():
    rng = random.Random(8)
    for _ in range(60):
        f = gen.eps_scalar(rng)
        if f.is_zero():
            continue
        top = int(f.valuation()) + 3
        assert f.series(top) == sympy_series(to_sympy(f), top)


def test_truncate_keeps_low_orders():
    f = 1 / (1 - EPS)
    assert f.truncate(2) == 1 + EPS
    assert f.truncate(0) == ZERO
