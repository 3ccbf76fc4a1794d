"""Exact elements of the ordered field Q(eps), eps a positive infinitesimal.

An :class:`EpsScalar` is stored as ``eps**shift * num / den`` where ``num``
and ``den`` are coprime polynomials with rational coefficients,
``num(0) != 0`` and ``den(0) == 1``.  With this normal form the valuation is
just ``shift`` and the sign is the sign of ``num(0)``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Union

import flint

_Poly = flint.fmpq_poly
_ONE_POLY = _Poly([1])
_ZERO_POLY = _Poly([])

INF = float("inf")

Number = Union[int, Fraction, "EpsScalar"]


def _fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Rational):
        return flint.fmpq(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def _to_fraction(c: flint.fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _low_order(p: _Poly) -> int:
    """Index of the lowest nonzero coefficient (p must be nonzero)."""
    k = 0
    while p[k] == 0:
        k += 1
    return k


def _drop_low(p: _Poly, k: int) -> _Poly:
    if k == 0:
        return p
    return _Poly(p.coeffs()[k:])


def _times_eps(p: _Poly, k: int) -> _Poly:
    if k == 0:
        return p
    return _Poly([0] * k + p.coeffs())


class EpsScalar:
    """A rational function of eps, ordered with eps > 0 infinitesimal."""

    __slots__ = ("_shift", "_num", "_den", "_hash")

    def __init__(self, value: Number | str = 0):
        if isinstance(value, EpsScalar):
            self._shift, self._num, self._den = value._shift, value._num, value._den
        else:
            if isinstance(value, str):
                value = Fraction(value)
            c = _fmpq(value)
            self._shift = 0
            self._num = _Poly([c]) if c != 0 else _ZERO_POLY
            self._den = _ONE_POLY
        self._hash = None

    @classmethod
    def _raw(cls, shift: int, num: _Poly, den: _Poly) -> EpsScalar:
        obj = cls.__new__(cls)
        obj._shift, obj._num, obj._den, obj._hash = shift, num, den, None
        return obj

    @classmethod
    def _make(cls, shift: int, num: _Poly, den: _Poly) -> EpsScalar:
        """Normalize ``eps**shift * num / den`` (den nonzero)."""
        if num == 0:
            return ZERO
        k = _low_order(num)
        num = _drop_low(num, k)
        shift += k
        if den.degree() > 0:
            k = _low_order(den)
            den = _drop_low(den, k)
            shift -= k
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        c = den[0]
        if c != 1:
            num = num / c
            den = den / c
        return cls._raw(shift, num, den)

    @classmethod
    def monomial(cls, coeff, power: int) -> EpsScalar:
        """``coeff * eps**power``."""
        c = _fmpq(coeff)
        if c == 0:
            return ZERO
        return cls._raw(power, _Poly([c]), _ONE_POLY)

    @classmethod
    def from_laurent(cls, coeffs: dict[int, Fraction]) -> EpsScalar:
        """Build a Laurent polynomial from ``{power: coefficient}``."""
        items = {k: c for k, c in coeffs.items() if c != 0}
        if not items:
            return ZERO
        lo = min(items)
        hi = max(items)
        poly = _Poly([_fmpq(items.get(k, 0)) for k in range(lo, hi + 1)])
        return cls._raw(lo, poly, _ONE_POLY)

    @classmethod
    def from_polys(cls, num: list, den: list, shift: int = 0) -> EpsScalar:
        """``eps**shift * sum(num[i] eps^i) / sum(den[i] eps^i)``."""
        d = _Poly([_fmpq(c) for c in den])
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        return cls._make(shift, _Poly([_fmpq(c) for c in num]), d)

    # --- structure -------------------------------------------------------

    def __bool__(self) -> bool:
        return self._num != 0

    def is_zero(self) -> bool:
        return self._num == 0

    def valuation(self) -> int | float:
        """Lowest exponent of the Laurent expansion; ``inf`` for zero."""
        return INF if self._num == 0 else self._shift

    def sign(self) -> int:
        if self._num == 0:
            return 0
        return 1 if self._num[0] > 0 else -1

    def is_laurent_polynomial(self) -> bool:
        return self._den.degree() == 0

    def is_rational(self) -> bool:
        """True for plain rational constants (no eps dependence)."""
        return self._num == 0 or (self._shift == 0 and self._num.degree() == 0 and self._den.degree() == 0)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} depends on eps")
        return _to_fraction(self._num[0]) if self._num != 0 else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the lowest-order Laurent term (0 for zero)."""
        return _to_fraction(self._num[0]) if self._num != 0 else Fraction(0)

    def polys(self) -> tuple[list[Fraction], list[Fraction]]:
        """Numerator and denominator coefficient lists (lowest degree first).

        A negative valuation is carried as a power of eps in the denominator.
        """
        if self._num == 0:
            return [Fraction(0)], [Fraction(1)]
        num = self._num.coeffs()
        den = self._den.coeffs()
        if self._shift > 0:
            num = [0] * self._shift + num
        elif self._shift < 0:
            den = [0] * (-self._shift) + den
        return [_to_fraction(_fmpq(c)) for c in num], [_to_fraction(_fmpq(c)) for c in den]

    def series(self, upto: int) -> dict[int, Fraction]:
        """Laurent coefficients of all orders ``<= upto`` (nonzero ones only)."""
        out: dict[int, Fraction] = {}
        if self._num == 0 or upto < self._shift:
            return out
        n = upto - self._shift + 1
        num = self._num.coeffs()
        den = self._den.coeffs()
        if len(den) == 1:
            for i, c in enumerate(num[:n]):
                if c != 0:
                    out[self._shift + i] = _to_fraction(c)
            return out
        coeffs: list[flint.fmpq] = []
        for i in range(n):
            c = num[i] if i < len(num) else flint.fmpq(0)
            for j in range(1, min(i, len(den) - 1) + 1):
                c -= den[j] * coeffs[i - j]
            coeffs.append(c)
            if c != 0:
                out[self._shift + i] = _to_fraction(c)
        return out

    def truncate(self, below: int) -> EpsScalar:
        """Laurent polynomial of the terms of order strictly less than ``below``."""
        if self._num == 0 or below <= self._shift:
            return ZERO
        if self._den.degree() == 0 and self._shift + self._num.degree() < below:
            return self
        return EpsScalar.from_laurent(self.series(below - 1))

    # --- arithmetic ------------------------------------------------------

    def __neg__(self) -> EpsScalar:
        if self._num == 0:
            return self
        return EpsScalar._raw(self._shift, -self._num, self._den)

    def __pos__(self) -> EpsScalar:
        return self

    def __abs__(self) -> EpsScalar:
        return -self if self.sign() < 0 else self

    def __add__(self, other: Number) -> EpsScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num == 0:
            return other
        if other._num == 0:
            return self
        a, b = self, other
        if a._shift > b._shift:
            a, b = b, a
        gap = b._shift - a._shift
        if a._den.degree() == 0 and b._den.degree() == 0:
            num = a._num + _times_eps(b._num, gap)
            if num == 0:
                return ZERO
            k = _low_order(num)
            return EpsScalar._raw(a._shift + k, _drop_low(num, k), _ONE_POLY)
        num = a._num * b._den + _times_eps(b._num * a._den, gap)
        return EpsScalar._make(a._shift, num, a._den * b._den)

    __radd__ = __add__

    def __sub__(self, other: Number) -> EpsScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> EpsScalar:
        return _coerce(other) - self

    def __mul__(self, other: Number) -> EpsScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num == 0 or other._num == 0:
            return ZERO
        shift = self._shift + other._shift
        if self._den.degree() == 0 and other._den.degree() == 0:
            return EpsScalar._raw(shift, self._num * other._num, _ONE_POLY)
        return EpsScalar._make(shift, self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> EpsScalar:
        if self._num == 0:
            raise ZeroDivisionError("division by zero in Q(eps)")
        c = self._num[0]
        return EpsScalar._raw(-self._shift, self._den / c, self._num / c)

    def __truediv__(self, other: Number) -> EpsScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> EpsScalar:
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int) -> EpsScalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- order and identity ----------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._shift == other._shift and self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            if self._den.degree() == 0 and self._shift == 0 and self._num.degree() <= 0:
                # agree with hash(Fraction) for constants
                self._hash = hash(self.as_fraction())
            else:
                self._hash = hash((self._shift, tuple(self._num.coeffs()), tuple(self._den.coeffs())))
        return self._hash

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).sign() >= 0

    def __repr__(self) -> str:
        return f"EpsScalar({format_eps(self)!r})"

    def __str__(self) -> str:
        return format_eps(self)


def _coerce(x) -> EpsScalar:
    if isinstance(x, EpsScalar):
        return x
    if isinstance(x, (int, Rational)):
        return EpsScalar(x)
    return NotImplemented


ZERO = EpsScalar._raw(0, _ZERO_POLY, _ONE_POLY)
ONE = EpsScalar._raw(0, _ONE_POLY, _ONE_POLY)
EPS = EpsScalar._raw(1, _ONE_POLY, _ONE_POLY)
OMEGA = EpsScalar._raw(-1, _ONE_POLY, _ONE_POLY)


def as_eps(x: Number | str) -> EpsScalar:
    return x if isinstance(x, EpsScalar) else EpsScalar(x)


def es_arith(f: EpsScalar, g: EpsScalar, op: str) -> EpsScalar:
    """Field operation by name: ``add``, ``sub``, ``mul`` or ``div``."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def valuation(f: EpsScalar) -> int | float:
    return as_eps(f).valuation()


def es_compare(f: Number, g: Number) -> int:
    """-1, 0 or 1 according to the sign of ``f - g``."""
    return (as_eps(f) - as_eps(g)).sign()


def classify(f: Number) -> str:
    """``infinitesimal``, ``appreciable`` or ``unlimited``.

    Zero counts as infinitesimal.  Limited means not unlimited.
    """
    v = as_eps(f).valuation()
    if v > 0:
        return "infinitesimal"
    if v == 0:
        return "appreciable"
    return "unlimited"


def is_limited(f: Number) -> bool:
    return as_eps(f).valuation() >= 0


# --- formatting ------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    """Terminating decimals print as decimals, everything else as ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    scaled = abs(q.numerator) * 10**digits // q.denominator
    sign = "-" if q < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_power(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "eps"
    return f"eps^{k}"


def _format_terms(terms: Iterator[tuple[int, Fraction]]) -> str:
    out = []
    for k, c in terms:
        mag = abs(c)
        pw = format_power(k)
        if not pw:
            body = format_rational(mag)
        elif mag == 1:
            body = pw
        else:
            body = f"{format_rational(mag)}*{pw}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out) if out else "0"


def format_laurent(coeffs: dict[int, Fraction]) -> str:
    """Render ``{power: coeff}`` lowest order first, e.g. ``-1+eps^2``."""
    return _format_terms((k, coeffs[k]) for k in sorted(coeffs) if coeffs[k] != 0)


def format_eps(f: EpsScalar) -> str:
    """Exact text form: a Laurent polynomial or ``(num)/(den)``."""
    if f.is_zero():
        return "0"
    if f.is_laurent_polynomial():
        return format_laurent(f.series(f.valuation() + f._num.degree()))
    num, den = f.polys()
    n = format_laurent(dict(enumerate(num)))
    d = format_laurent(dict(enumerate(den)))
    return f"({n})/({d})"
