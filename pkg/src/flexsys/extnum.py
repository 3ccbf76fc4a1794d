"""Neutrices and external numbers over Q(eps).

The neutrices handled here form the chain

    {0} < ... < eps*o < eps*L < o < L < o/eps < L/eps < ... < R

where ``o`` is the group of infinitesimals and ``L`` the group of limited
numbers.  ``eps**m * o`` contains exactly the reals of order ``> m``, and
``eps**m * L`` those of order ``>= m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotZeroless
from .scalar import INF, ZERO, EpsScalar, Number, as_eps, classify, format_eps, format_power

OSLASH = "o"
POUND = "L"


@dataclass(frozen=True)
class Neutrix:
    """One neutrix of the chain.

    ``kind`` is ``"zero"``, ``"o"``, ``"L"`` or ``"R"``; ``order`` is the
    eps-exponent of the scaled kinds and 0 otherwise.
    """

    kind: str
    order: int = 0

    def __post_init__(self):
        if self.kind not in ("zero", OSLASH, POUND, "R"):
            raise ValueError(f"bad neutrix kind {self.kind!r}")
        if self.kind in ("zero", "R") and self.order != 0:
            raise ValueError("order only applies to scaled neutrices")

    @property
    def level(self) -> float:
        """Monotone key: larger level means larger set."""
        if self.kind == "zero":
            return -INF
        if self.kind == "R":
            return INF
        return -2 * self.order - (1 if self.kind == OSLASH else 0)

    def is_zero(self) -> bool:
        return self.kind == "zero"

    def is_full(self) -> bool:
        return self.kind == "R"

    def is_scaled(self) -> bool:
        return self.kind in (OSLASH, POUND)

    def contains(self, f: Number) -> bool:
        """Membership of a single element of Q(eps)."""
        f = as_eps(f)
        if self.kind == "R":
            return True
        if f.is_zero():
            return True
        if self.kind == "zero":
            return False
        v = f.valuation()
        return v > self.order if self.kind == OSLASH else v >= self.order

    def __le__(self, other: Neutrix) -> bool:
        return self.level <= other.level

    def __lt__(self, other: Neutrix) -> bool:
        return self.level < other.level

    def __ge__(self, other: Neutrix) -> bool:
        return self.level >= other.level

    def __gt__(self, other: Neutrix) -> bool:
        return self.level > other.level

    def __add__(self, other: Neutrix) -> Neutrix:
        return ntx_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, Neutrix):
            return ntx_mul(self, other)
        return ntx_scale(other, self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_neutrix(self)

    def __repr__(self) -> str:
        return f"Neutrix({format_neutrix(self)!r})"


ZERO_N = Neutrix("zero")
FULL = Neutrix("R")


def oslash(order: int = 0) -> Neutrix:
    """``eps**order * o``."""
    return Neutrix(OSLASH, order)


def pound(order: int = 0) -> Neutrix:
    """``eps**order * L``."""
    return Neutrix(POUND, order)


def format_neutrix(n: Neutrix) -> str:
    if n.kind == "zero":
        return "0"
    if n.kind == "R":
        return "R"
    pw = format_power(n.order)
    return f"{pw}*{n.kind}" if pw else n.kind


def ntx_sum(a: Neutrix, b: Neutrix) -> Neutrix:
    return a if a.level >= b.level else b


def ntx_max(items: Iterable[Neutrix]) -> Neutrix:
    out = ZERO_N
    for n in items:
        if n.level > out.level:
            out = n
    return out


def ntx_min(items: Iterable[Neutrix]) -> Neutrix:
    out = FULL
    for n in items:
        if n.level < out.level:
            out = n
    return out


def ntx_mul(a: Neutrix, b: Neutrix) -> Neutrix:
    if a.is_zero() or b.is_zero():
        return ZERO_N
    if a.is_full() or b.is_full():
        return FULL
    kind = OSLASH if OSLASH in (a.kind, b.kind) else POUND
    return Neutrix(kind, a.order + b.order)


def ntx_scale(f: Number, n: Neutrix) -> Neutrix:
    """The neutrix ``f * n`` for a single scalar ``f``."""
    f = as_eps(f)
    if f.is_zero() or n.is_zero():
        return ZERO_N
    if n.is_full():
        return FULL
    return Neutrix(n.kind, n.order + f.valuation())


def ntx_shift(n: Neutrix, k: int) -> Neutrix:
    """``eps**k * n``."""
    if not n.is_scaled():
        return n
    return Neutrix(n.kind, n.order + k)


def ntx_div(a: Neutrix, b: Neutrix) -> Neutrix:
    """``a : b``, the set of reals ``c`` with ``c*b`` inside ``a``."""
    if b.is_zero() or a.is_full():
        return FULL
    if a.is_zero() or b.is_full():
        return ZERO_N
    kind = OSLASH if (a.kind, b.kind) == (OSLASH, POUND) else POUND
    return Neutrix(kind, a.order - b.order)


def is_absorber(f: Number, n: Neutrix) -> bool:
    """True when ``f * n`` is strictly inside ``n``.

    Zero absorbs every nonzero neutrix; nothing absorbs ``{0}`` or ``R``
    except that ``0 * R = {0}``.
    """
    f = as_eps(f)
    if n.is_zero():
        return False
    if f.is_zero():
        return True
    if n.is_full():
        return False
    return f.valuation() > 0


def is_exploder(f: Number, n: Neutrix) -> bool:
    """True when ``f * n`` strictly contains ``n``."""
    f = as_eps(f)
    if not n.is_scaled() or f.is_zero():
        return False
    return f.valuation() < 0


# --- external numbers --------------------------------------------------------


def _canonical_rep(rep: EpsScalar, n: Neutrix) -> EpsScalar:
    if n.is_zero():
        return rep
    if n.is_full():
        return ZERO
    if n.kind == OSLASH:
        return rep.truncate(n.order + 1)
    return rep.truncate(n.order)


class ExternalScalar:
    """``rep + neutrix`` with ``rep`` in canonical (truncated) form."""

    __slots__ = ("rep", "neutrix")

    def __init__(self, rep: Number | str = 0, neutrix: Neutrix = ZERO_N):
        object.__setattr__(self, "neutrix", neutrix)
        object.__setattr__(self, "rep", _canonical_rep(as_eps(rep), neutrix))

    def __setattr__(self, name, value):
        raise AttributeError("ExternalScalar is immutable")

    @classmethod
    def exact(cls, rep: Number | str) -> ExternalScalar:
        return cls(rep, ZERO_N)

    def is_exact(self) -> bool:
        return self.neutrix.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, ExternalScalar):
            return self.neutrix == other.neutrix and self.rep == other.rep
        if isinstance(other, (int, Fraction, EpsScalar)):
            return self.neutrix.is_zero() and self.rep == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rep, self.neutrix))

    def __add__(self, other) -> ExternalScalar:
        return ext_add(self, _ext(other))

    __radd__ = __add__

    def __sub__(self, other) -> ExternalScalar:
        return ext_add(self, ext_neg(_ext(other)))

    def __rsub__(self, other) -> ExternalScalar:
        return ext_add(_ext(other), ext_neg(self))

    def __neg__(self) -> ExternalScalar:
        return ext_neg(self)

    def __mul__(self, other) -> ExternalScalar:
        return ext_mul(self, _ext(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> ExternalScalar:
        return ext_mul(self, ext_inv(_ext(other)))

    def __contains__(self, f) -> bool:
        return ext_member(f, self)

    def __repr__(self) -> str:
        return f"ExternalScalar({format_ext(self)!r})"

    def __str__(self) -> str:
        return format_ext(self)


def _ext(x) -> ExternalScalar:
    if isinstance(x, ExternalScalar):
        return x
    if isinstance(x, Neutrix):
        return ExternalScalar(ZERO, x)
    return ExternalScalar(as_eps(x), ZERO_N)


def ext(rep: Number | str = 0, neutrix: Neutrix = ZERO_N) -> ExternalScalar:
    return ExternalScalar(rep, neutrix)


def canonicalize(rep: Number, neutrix: Neutrix) -> ExternalScalar:
    """Drop every Laurent term of ``rep`` that lies in ``neutrix``."""
    return ExternalScalar(rep, neutrix)


def format_ext(a: ExternalScalar) -> str:
    n = a.neutrix
    if n.is_zero():
        return format_eps(a.rep)
    ntx = format_neutrix(n)
    if a.rep.is_zero():
        return ntx
    return f"{format_eps(a.rep)}+{ntx}"


def ext_neg(a: ExternalScalar) -> ExternalScalar:
    return ExternalScalar(-a.rep, a.neutrix)


def ext_add(a: ExternalScalar, b: ExternalScalar) -> ExternalScalar:
    return ExternalScalar(a.rep + b.rep, ntx_sum(a.neutrix, b.neutrix))


def ext_sub(a: ExternalScalar, b: ExternalScalar) -> ExternalScalar:
    return ExternalScalar(a.rep - b.rep, ntx_sum(a.neutrix, b.neutrix))


def ext_mul(a: ExternalScalar, b: ExternalScalar) -> ExternalScalar:
    n = ntx_max((ntx_scale(b.rep, a.neutrix), ntx_scale(a.rep, b.neutrix), ntx_mul(a.neutrix, b.neutrix)))
    return ExternalScalar(a.rep * b.rep, n)


def ext_scale(f: Number, a: ExternalScalar) -> ExternalScalar:
    """Product with a single scalar; distributive, no neutrix product term."""
    f = as_eps(f)
    return ExternalScalar(f * a.rep, ntx_scale(f, a.neutrix))


def ext_member(f: Number, a: ExternalScalar) -> bool:
    return a.neutrix.contains(as_eps(f) - a.rep)


def is_zeroless(a: ExternalScalar) -> bool:
    return not ext_member(ZERO, a)


def is_neutricial(a: ExternalScalar) -> bool:
    return a.rep.is_zero()


def ext_inv(a: ExternalScalar) -> ExternalScalar:
    if not is_zeroless(a):
        raise NotZeroless(f"{format_ext(a)} contains 0")
    inv = a.rep.inverse()
    return ExternalScalar(inv, ntx_scale(inv * inv, a.neutrix))


def ext_div(a: ExternalScalar, b: ExternalScalar) -> ExternalScalar:
    return ext_mul(a, ext_inv(b))


def relative_imprecision(a: ExternalScalar) -> Neutrix:
    if not is_zeroless(a):
        raise NotZeroless(f"{format_ext(a)} contains 0")
    return ntx_scale(a.rep.inverse(), a.neutrix)


def ext_subset(a: ExternalScalar, b: ExternalScalar) -> bool:
    """Set inclusion ``a <= b``."""
    return a.neutrix <= b.neutrix and ext_member(a.rep, b)


def ext_intersects(a: ExternalScalar, b: ExternalScalar) -> bool:
    return ntx_sum(a.neutrix, b.neutrix).contains(a.rep - b.rep)


def ext_leq(a: ExternalScalar, b: ExternalScalar) -> bool:
    """Every element of ``a`` is below some element of ``b``."""
    if ext_intersects(a, b):
        return a.neutrix <= b.neutrix
    return a.rep < b.rep


def ext_lt(a: ExternalScalar, b: ExternalScalar) -> bool:
    """Disjoint, with every element of ``a`` below every element of ``b``."""
    return not ext_intersects(a, b) and a.rep < b.rep


def ext_abs(a: ExternalScalar) -> ExternalScalar:
    return ext_neg(a) if a.rep.sign() < 0 else a


def abs_key(a: ExternalScalar) -> tuple:
    """Sort key for magnitude: absolute representative, then neutrix size."""
    return (_AbsRep(abs(a.rep)), a.neutrix.level)


class _AbsRep:
    __slots__ = ("v",)

    def __init__(self, v: EpsScalar):
        self.v = v

    def __lt__(self, other: _AbsRep) -> bool:
        return self.v < other.v

    def __eq__(self, other) -> bool:
        return self.v == other.v


def ext_max_abs(items: Iterable[ExternalScalar]) -> ExternalScalar:
    best = None
    for a in items:
        if best is None or abs_key(best) < abs_key(a):
            best = a
    if best is None:
        raise ValueError("empty sequence")
    return best


def is_ext_absorber(a: ExternalScalar, n: Neutrix) -> bool:
    """Absorber test for a zeroless external number via its order of magnitude."""
    if not is_zeroless(a):
        raise NotZeroless(f"{format_ext(a)} contains 0")
    return is_absorber(a.rep, n)


def ext_classify(a: ExternalScalar) -> str:
    if not is_zeroless(a):
        raise NotZeroless(f"{format_ext(a)} contains 0")
    return classify(a.rep)


ZERO_EXT = ExternalScalar(ZERO, ZERO_N)
ONE_EXT = ExternalScalar(1, ZERO_N)
