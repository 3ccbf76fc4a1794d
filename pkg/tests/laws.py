"""Algebraic laws of the scalar layer, one random case per call.

Shared by ``test_extnum.py`` and the acceptance suite.  Every ``check_*``
raises ``AssertionError`` with the offending inputs.
"""

from __future__ import annotations

import random

from flexsys.extnum import (
    FULL,
    ExternalScalar,
    Neutrix,
    ext_add,
    ext_inv,
    ext_leq,
    ext_mul,
    ext_scale,
    ext_subset,
    is_zeroless,
    ntx_div,
    ntx_mul,
    ntx_scale,
    ntx_sum,
    oslash,
    relative_imprecision,
)
from flexsys.scalar import ONE, ZERO

import gen
from oracles import product_profile, profile, quotient_profile, scaled_profile


def in_class(n) -> bool:
    return isinstance(n, Neutrix) and n.kind in ("zero", "o", "L", "R") and isinstance(n.order, int)


def check_field_laws(rng: random.Random) -> None:
    f, g, h = gen.eps_scalar(rng), gen.eps_scalar(rng), gen.eps_scalar(rng)
    ctx = f"f={f} g={g} h={h}"
    assert (f + g) + h == f + (g + h), ctx
    assert (f * g) * h == f * (g * h), ctx
    assert f + g == g + f and f * g == g * f, ctx
    assert f * (g + h) == f * g + f * h, ctx
    assert f - f == ZERO and f + ZERO == f and f * ONE == f, ctx
    if not f.is_zero():
        assert f * (ONE / f) == ONE, ctx
        assert (g / f) * f == g, ctx
    if not f.is_zero() and not g.is_zero():
        assert (f * g).valuation() == f.valuation() + g.valuation(), ctx
    if not (f + g).is_zero():
        v = (f + g).valuation()
        assert v >= min(f.valuation(), g.valuation()), ctx
        if f.valuation() != g.valuation():
            assert v == min(f.valuation(), g.valuation()), ctx


def check_neutrix_ops(rng: random.Random) -> None:
    a, b, c = (gen.neutrix(rng, full=True) for _ in range(3))
    f = gen.eps_scalar(rng)
    ctx = f"A={a} B={b} C={c} f={f}"
    s = ntx_sum(a, b)
    assert s == max(a, b, key=lambda n: n.level), ctx
    assert ntx_sum(a, a) == a and s == ntx_sum(b, a), ctx
    assert ntx_sum(s, c) == ntx_sum(a, ntx_sum(b, c)), ctx
    for res in (s, ntx_mul(a, b), ntx_div(a, b), ntx_scale(f, a)):
        assert in_class(res), ctx
    assert profile(ntx_mul(a, b)) == product_profile(a, b), f"product {ctx}"
    assert profile(ntx_div(a, b)) == quotient_profile(a, b), f"quotient {ctx}"
    if f.is_zero():
        assert ntx_scale(f, a).is_zero(), ctx
    elif a.is_scaled():
        assert profile(ntx_scale(f, a)) == scaled_profile(int(f.valuation()), a), f"scale {ctx}"


def check_external_laws(rng: random.Random) -> None:
    al, be, ga = gen.ext_scalar(rng), gen.ext_scalar(rng), gen.ext_scalar(rng)
    f = gen.eps_scalar(rng)
    ctx = f"a={al} b={be} c={ga} f={f}"
    for res in (ext_add(al, be), ext_mul(al, be), ext_scale(f, al)):
        assert in_class(res.neutrix), ctx
        assert ExternalScalar(res.rep, res.neutrix) == res, f"not canonical {ctx}"
    assert ext_add(al, be) == ext_add(be, al) and ext_mul(al, be) == ext_mul(be, al), ctx
    assert ext_add(ext_add(al, be), ga) == ext_add(al, ext_add(be, ga)), ctx
    left = ext_mul(al, ext_add(be, ga))
    right = ext_add(ext_mul(al, be), ext_mul(al, ga))
    assert ext_subset(left, right), f"subdistributivity {ctx}"
    assert ext_scale(f, ext_add(be, ga)) == ext_add(ext_scale(f, be), ext_scale(f, ga)), f"real factor {ctx}"
    assert ext_mul(ExternalScalar(f), be) == ext_scale(f, be), ctx
    if is_zeroless(al):
        assert relative_imprecision(al) <= oslash(0), ctx
        if al.neutrix != FULL:
            assert ext_inv(ext_inv(al)) == al, f"inverse {ctx}"
    assert ext_leq(al, be) or ext_leq(be, al), f"totality {ctx}"
    if ext_leq(al, be):
        assert ext_leq(ext_add(al, ga), ext_add(be, ga)), f"order and sum {ctx}"


def check_case(rng: random.Random) -> None:
    check_field_laws(rng)
    check_neutrix_ops(rng)
    check_external_laws(rng)
