"""Solution sets of flexible systems.

A consistent solution set is a coset

    support + Σ N_i v_i + Σ R w_j

with linearly independent directions ``v_i`` (modular part, neutrices
``N_i`` bounded and nonzero) and ``w_j`` (linear part).  Membership,
inclusion and the normal form below all reduce to exact linear algebra over
Q(eps) plus neutrix comparisons.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch
from .extlinalg import rank, solve_in_basis
from .extnum import FULL, ExternalScalar, Neutrix, ntx_div, ntx_scale
from .scalar import EpsScalar, Number, as_eps

Vector = tuple[EpsScalar, ...]


def _vec(v: Sequence[Number]) -> Vector:
    return tuple(as_eps(x) for x in v)


@dataclass(frozen=True)
class SolutionSet:
    """Solution of a flexible system, or the inconsistent marker.

    ``permutation[p]`` is the 0-based original column placed at echelon
    position ``p``; ``offending_rows`` lists 1-based echelon rows whose
    right-hand side is zeroless.
    """

    consistent: bool
    n: int
    support: Vector = ()
    modular: tuple[tuple[Neutrix, Vector], ...] = ()
    linear: tuple[Vector, ...] = ()
    rank: int = 0
    permutation: tuple[int, ...] = ()
    offending_rows: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def make(cls, support, modular=(), linear=(), rank: int | None = None, permutation=None) -> SolutionSet:
        support = _vec(support)
        n = len(support)
        modular = tuple((N, _vec(v)) for N, v in modular if not N.is_zero())
        linear = tuple(_vec(w) for w in linear)
        for N, v in modular:
            if N.is_full():
                raise ValueError("full-line generators belong to the linear part")
        if any(len(v) != n for _, v in modular) or any(len(w) != n for w in linear):
            raise DimensionMismatch("generator length differs from support length")
        if rank is None:
            rank = n - len(linear)
        perm = tuple(range(n)) if permutation is None else tuple(permutation)
        return cls(True, n, support, modular, linear, rank, perm)

    @classmethod
    def inconsistent(cls, n: int, rank: int, offending_rows=(), permutation=()) -> SolutionSet:
        return cls(False, n, rank=rank, permutation=tuple(permutation), offending_rows=tuple(offending_rows))

    @property
    def status(self) -> str:
        return "consistent" if self.consistent else "inconsistent"

    def generators(self) -> list[tuple[Neutrix, Vector]]:
        """Modular and linear generators together; linear ones carry ``R``."""
        return list(self.modular) + [(FULL, w) for w in self.linear]

    def __contains__(self, x) -> bool:
        return solution_membership(self, x)


def _coordinates(Z: SolutionSet, x: Sequence[EpsScalar]) -> list[EpsScalar] | None:
    gens = Z.generators()
    return solve_in_basis([v for _, v in gens], x)


def solution_membership(Z: SolutionSet, x: Sequence[Number]) -> bool:
    """Whether the point ``x`` lies in ``Z``."""
    if not Z.consistent:
        return False
    x = _vec(x)
    if len(x) != Z.n:
        raise DimensionMismatch(f"point of length {len(x)} for {Z.n} variables")
    diff = [a - b for a, b in zip(x, Z.support)]
    coeffs = _coordinates(Z, diff)
    if coeffs is None:
        return False
    return all(N.contains(c) for (N, _), c in zip(Z.generators(), coeffs))


def solution_subset(Z1: SolutionSet, Z2: SolutionSet) -> bool:
    """Set inclusion ``Z1 ⊆ Z2``."""
    if Z1.n != Z2.n:
        raise DimensionMismatch("solution sets live in different dimensions")
    if not Z1.consistent:
        return True
    if not Z2.consistent:
        return False
    if not solution_membership(Z2, Z1.support):
        return False
    target = Z2.generators()
    basis = [v for _, v in target]
    for N, v in Z1.generators():
        coeffs = solve_in_basis(basis, v)
        if coeffs is None:
            return False
        for (M, _), c in zip(target, coeffs):
            if not ntx_scale(c, N) <= M:
                return False
    return True


class Relation(enum.Enum):
    EQUAL = "Equal"
    FIRST_IN_SECOND = "ProperSubset(first ⊂ second)"
    SECOND_IN_FIRST = "ProperSubset(second ⊂ first)"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


def solution_equiv(Z1: SolutionSet, Z2: SolutionSet) -> Relation:
    a = solution_subset(Z1, Z2)
    b = solution_subset(Z2, Z1)
    if a and b:
        return Relation.EQUAL
    if a:
        return Relation.FIRST_IN_SECOND
    if b:
        return Relation.SECOND_IN_FIRST
    return Relation.INCOMPARABLE


def _reduce_mod(value: EpsScalar, N: Neutrix) -> EpsScalar:
    """Part of ``value`` lying outside the neutrix ``N``."""
    return ExternalScalar(value, N).rep


def canonicalize_solution(Z: SolutionSet) -> SolutionSet:
    """Normal form of a solution set; equal sets give equal results.

    Coordinates are swept from last to first.  At each coordinate the
    generator reaching farthest along it becomes the pivot and clears that
    coordinate from the others, which is valid because the others' reach is
    contained in the pivot's.  Pivot generators are then reduced modulo the
    later pivots, and the support modulo all pivots.
    """
    if not Z.consistent:
        return Z
    n = Z.n
    remaining = [(N, list(v)) for N, v in Z.generators() if not N.is_zero()]
    pivots: list[tuple[int, Neutrix, list[EpsScalar]]] = []
    for p in reversed(range(n)):
        best = None
        for k, (N, v) in enumerate(remaining):
            if v[p].is_zero():
                continue
            reach = ntx_scale(v[p], N)
            if best is None or reach > best[1]:
                best = (k, reach)
        if best is None:
            continue
        k, reach = best
        _, v = remaining.pop(k)
        inv = v[p].inverse()
        w = [x * inv for x in v]
        nxt = []
        for M, u in remaining:
            f = u[p]
            if not f.is_zero():
                u = [a - f * b for a, b in zip(u, w)]
            if any(not a.is_zero() for a in u):
                nxt.append((M, u))
        remaining = nxt
        pivots.append((p, reach, w))
    # pivots are ordered by decreasing coordinate
    for gi, (p, N, w) in enumerate(pivots):
        for q, M, h in pivots[gi + 1:]:
            kept = _reduce_mod(w[q], ntx_div(M, N))
            delta = w[q] - kept
            if not delta.is_zero():
                w[:] = [a - delta * b for a, b in zip(w, h)]
    s = list(Z.support)
    for p, N, w in pivots:
        delta = s[p] - _reduce_mod(s[p], N)
        if not delta.is_zero():
            s = [a - delta * b for a, b in zip(s, w)]
    modular = sorted(((N, p, tuple(w)) for p, N, w in pivots if not N.is_full()), key=lambda t: (t[0].level, t[1]))
    linear = sorted((p, tuple(w)) for p, N, w in pivots if N.is_full())
    return SolutionSet(
        True,
        n,
        tuple(s),
        tuple((N, w) for N, _, w in modular),
        tuple(w for _, w in linear),
        Z.rank,
        Z.permutation,
    )


def linear_part(Z: SolutionSet) -> tuple[Vector, ...]:
    """Canonical basis of the largest linear subspace of the neutrix part."""
    return canonicalize_solution(Z).linear


def modular_dimension(Z: SolutionSet) -> int:
    return len(canonicalize_solution(Z).modular)


def generators_independent(Z: SolutionSet) -> bool:
    vecs = [v for _, v in Z.generators()]
    return rank(vecs) == len(vecs) if vecs else True


__all__ = [
    "Relation",
    "SolutionSet",
    "canonicalize_solution",
    "generators_independent",
    "linear_part",
    "modular_dimension",
    "solution_equiv",
    "solution_membership",
    "solution_subset",
]
