"""Text format for flexible systems and solution output.

One inclusion per line, ``#`` starts a comment::

    (-1+eps*o) x1 + x2 + (-0.2+eps^2*L) x3 in 2+eps*L

Atoms are exact rationals (decimals included), ``eps`` (optionally
``eps^k``), ``w`` for ``eps^-1``, the neutrices ``o`` (infinitesimals),
``L`` (limited numbers) and ``R``, parenthesized expressions and variables
``x1, x2, ...``.  Factors multiply by ``*`` or juxtaposition and divide by
``/``.  The Unicode spellings ``ε ω ⌀ £ ⊆`` are accepted as well.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParseError, ValidationError
from .extlinalg import ExternalMatrix, ExternalVector
from .extnum import (
    FULL,
    ExternalScalar,
    ZERO_EXT,
    ext_add,
    ext_div,
    ext_mul,
    ext_neg,
    format_ext,
    format_neutrix,
    is_zeroless,
    oslash,
    pound,
)
from .scalar import EPS, EpsScalar, format_eps, format_rational
from .solutions import SolutionSet
from .solver import FlexibleSystem

_ALIASES = {"⊆": "in", "∈": "in", "ε": "eps", "ω": "w", "⌀": "o", "∅": "o", "£": "L", "·": "*", "−": "-"}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<num>\d+(?:\.\d+)?)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^(),])|(?P<uni>[⊆∈εω⌀∅£·−])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(line: str, lineno: int = 1) -> list[Token]:
    out = []
    pos = 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m:
            raise ParseError(lineno, pos + 1, "a token", line[pos])
        kind = m.lastgroup
        text = m.group()
        if kind == "uni":
            text = _ALIASES[text]
            kind = "op" if text in "*-" else "id"
        if kind != "ws":
            out.append(Token(kind, text, lineno, pos + 1))
        pos = m.end()
    out.append(Token("end", "", lineno, len(line) + 1))
    return out


_VAR = re.compile(r"x([1-9]\d*)$")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: str):
        t = self.cur
        raise ParseError(t.line, t.col, expected, t.text or "end of line")

    def take(self, text: str) -> Token:
        if self.cur.text != text:
            self.fail(repr(text))
        t = self.cur
        self.i += 1
        return t

    def starts_factor(self) -> bool:
        t = self.cur
        return t.kind in ("num", "id") and t.text != "in" or t.text == "("

    def sum(self, allow_vars: bool) -> dict:
        """Parse ``[sign] term (sign term)*`` into ``{var index or None: coefficient}``."""
        acc: dict = {}
        neg = False
        if self.cur.kind == "op" and self.cur.text in ("+", "-"):
            neg = self.cur.text == "-"
            self.i += 1
        while True:
            var, val = self.term(allow_vars)
            if neg:
                val = ext_neg(val)
            acc[var] = ext_add(acc[var], val) if var in acc else val
            if self.cur.kind == "op" and self.cur.text in ("+", "-"):
                neg = self.cur.text == "-"
                self.i += 1
                continue
            return acc

    def term(self, allow_vars: bool):
        var = None
        val = None
        first = True
        while True:
            op = "*"
            if not first:
                if self.cur.text in ("*", "/"):
                    op = self.cur.text
                    self.i += 1
                elif not self.starts_factor():
                    break
            start = self.cur
            fvar, fval = self.factor(allow_vars)
            if fvar is not None:
                if var is not None:
                    raise ParseError(start.line, start.col, "at most one variable per term", start.text)
                if op == "/":
                    raise ParseError(start.line, start.col, "a non-variable divisor", start.text)
                var = fvar
            else:
                if op == "/":
                    if not is_zeroless(fval):
                        raise ParseError(start.line, start.col, "a zeroless divisor", start.text)
                    val = ext_div(val if val is not None else ExternalScalar(1), fval)
                else:
                    val = fval if val is None else ext_mul(val, fval)
            first = False
        return var, val if val is not None else ExternalScalar(1)

    def exponent(self) -> int:
        sign = 1
        if self.cur.kind == "op" and self.cur.text in ("+", "-"):
            sign = -1 if self.cur.text == "-" else 1
            self.i += 1
        t = self.cur
        if t.kind != "num" or "." in t.text:
            self.fail("an integer exponent")
        self.i += 1
        return sign * int(t.text)

    def factor(self, allow_vars: bool):
        t = self.cur
        if t.kind == "num":
            self.i += 1
            return None, ExternalScalar(Fraction(t.text))
        if t.text == "(":
            self.i += 1
            inner = self.sum(allow_vars=False)
            self.take(")")
            return None, inner[None]
        if t.kind == "id":
            self.i += 1
            if t.text in ("eps", "w"):
                base = EPS if t.text == "eps" else EPS.inverse()
                k = 1
                if self.cur.text == "^":
                    self.i += 1
                    k = self.exponent()
                return None, ExternalScalar(base**k)
            if t.text == "o":
                return None, ExternalScalar(0, oslash())
            if t.text == "L":
                return None, ExternalScalar(0, pound())
            if t.text == "R":
                return None, ExternalScalar(0, FULL)
            m = _VAR.match(t.text)
            if m:
                if not allow_vars:
                    raise ParseError(t.line, t.col, "a constant", t.text)
                return int(m.group(1)) - 1, None
            self.i -= 1
        self.fail("a number, eps, w, o, L, R, a variable or '('")


@dataclass(frozen=True)
class SystemSource:
    """A parsed system with the source line of each row."""

    text: str
    system: FlexibleSystem
    row_lines: tuple[int, ...]


def parse_source(text: str) -> SystemSource:
    parsed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        p = _Parser(tokenize(line, lineno))
        lhs = p.sum(allow_vars=True)
        p.take("in")
        rhs_terms = p.sum(allow_vars=False)
        if p.cur.kind != "end":
            p.fail("end of line")
        parsed.append((lineno, lhs, rhs_terms[None]))
    if not parsed:
        raise ValidationError("InconsistentArity", "no inclusions found")
    n = max((k + 1 for _, lhs, _ in parsed for k in lhs if k is not None), default=0)
    if n == 0:
        raise ValidationError("InconsistentArity", "no variables found")
    rows, rhs, lines = [], [], []
    for lineno, lhs, beta in parsed:
        const = lhs.pop(None, None)
        if beta.neutrix.is_full():
            raise ValidationError("FullLineRHS", f"line {lineno}")
        if const is not None:
            if not const.neutrix <= beta.neutrix:
                raise ValidationError("ConstantNeutrix", f"line {lineno}: constant neutrix exceeds the right-hand side")
            beta = ExternalScalar(beta.rep - const.rep, beta.neutrix)
        rows.append([lhs.get(j, ZERO_EXT) for j in range(n)])
        rhs.append(beta)
        lines.append(lineno)
    system = FlexibleSystem(ExternalMatrix(rows), ExternalVector(rhs))
    return SystemSource(text, system, tuple(lines))


def parse_system(text: str) -> FlexibleSystem:
    return parse_source(text).system


def parse_scalar(text: str) -> ExternalScalar:
    """Parse a single constant expression such as ``1+eps*o``."""
    p = _Parser(tokenize(text))
    val = p.sum(allow_vars=False)[None]
    if p.cur.kind != "end":
        p.fail("end of input")
    return val


def parse_point(text: str) -> list[EpsScalar]:
    """Comma separated exact scalars, e.g. ``4, 0, -30``."""
    out = []
    for part in text.split(","):
        v = parse_scalar(part)
        if not v.neutrix.is_zero():
            raise ValidationError("InexactPoint", f"{part.strip()} is not an exact number")
        out.append(v.rep)
    return out


# --- formatting --------------------------------------------------------------


def _coef_term(a: ExternalScalar, name: str) -> str:
    if a.neutrix.is_zero() and a.rep == 1:
        return name
    return f"({format_ext(a)}) {name}"


def format_system(S: FlexibleSystem) -> str:
    """Text that :func:`parse_system` reads back to ``S``."""
    m, n = S.shape
    names = [f"x{j + 1}" for j in range(n)]
    empty_cols = [j for j in range(n) if all(S.A[i, j] == ZERO_EXT for i in range(m))]
    lines = []
    for i in range(m):
        terms = [_coef_term(S.A[i, j], names[j]) for j in range(n) if S.A[i, j] != ZERO_EXT]
        if i == 0:
            terms += [f"0 {names[j]}" for j in empty_cols]
        if not terms:
            terms = [f"0 {names[0]}"]
        lines.append(" + ".join(terms) + " in " + format_ext(S.B[i]))
    return "\n".join(lines) + "\n"


def _vector_text(v: Sequence[EpsScalar]) -> str:
    return "(" + ",".join(format_eps(x) for x in v) + ")"


def format_solution_text(Z: SolutionSet) -> str:
    if not Z.consistent:
        return f"INCONSISTENT (rows: {', '.join(map(str, Z.offending_rows))})"
    parts = [_vector_text(Z.support)]
    for N, v in Z.modular:
        parts.append(f"{format_neutrix(N)}*{_vector_text(v)}")
    for w in Z.linear:
        parts.append(f"R*{_vector_text(w)}")
    return " + ".join(parts)


def scalar_json(f: EpsScalar, exact: bool = False):
    if not exact:
        return format_eps(f)
    num, den = f.polys()
    return {"num": [format_rational(c) for c in num], "den": [format_rational(c) for c in den]}


def solution_dict(Z: SolutionSet, exact: bool = False) -> dict:
    def vec(v):
        return [scalar_json(x, exact) for x in v]

    return {
        "status": Z.status,
        "rank": Z.rank,
        "support": vec(Z.support),
        "modular": [{"neutrix": format_neutrix(N), "direction": vec(v)} for N, v in Z.modular],
        "linear": [vec(w) for w in Z.linear],
        "permutation": [p + 1 for p in Z.permutation],
        "offending_rows": list(Z.offending_rows),
    }


def format_solution(Z: SolutionSet, mode: str = "text", exact: bool = False) -> str:
    """Render a solution as one line of text or as indented JSON."""
    if mode == "text":
        return format_solution_text(Z)
    if mode == "json":
        return json.dumps(solution_dict(Z, exact), indent=2, ensure_ascii=False)
    raise ValueError(f"unknown format {mode!r}")


__all__ = [
    "SystemSource",
    "Token",
    "format_solution",
    "format_solution_text",
    "format_system",
    "parse_point",
    "parse_scalar",
    "parse_source",
    "parse_system",
    "scalar_json",
    "solution_dict",
    "tokenize",
]
