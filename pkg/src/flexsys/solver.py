"""Solving flexible systems ``A x ⊆ B``.

Pipeline: feasibility space, integrated system (representative rows plus
constraint rows), increasing row-echelon form by Gaussian elimination with
column swaps, consistency test, and the closed-form parameter-method
solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, InconsistentSystem, ValidationError
from .extlinalg import ExternalMatrix, ExternalVector, representative
from .extnum import (
    ExternalScalar,
    Neutrix,
    ext_add,
    ext_member,
    ext_neg,
    ext_scale,
    is_neutricial,
    ntx_div,
    ntx_min,
    ntx_scale,
)
from .scalar import ONE, ZERO, EpsScalar
from .solutions import SolutionSet

Matrix = list[list[EpsScalar]]


@dataclass(frozen=True)
class FlexibleSystem:
    """The system ``A x ⊆ B``; right-hand neutrices must differ from ``R``."""

    A: ExternalMatrix
    B: ExternalVector
    names: tuple[str, ...] = ()

    def __post_init__(self):
        A, B = self.A, self.B
        if not isinstance(A, ExternalMatrix):
            object.__setattr__(self, "A", A := ExternalMatrix(A))
        if not isinstance(B, ExternalVector):
            object.__setattr__(self, "B", B := ExternalVector(B))
        m, n = A.shape
        if m == 0 or n == 0:
            raise ValidationError("InconsistentArity", "a system needs at least one row and one variable")
        if len(B) != m:
            raise ValidationError("InconsistentArity", f"{m} rows but {len(B)} right-hand sides")
        for i, b in enumerate(B):
            if b.neutrix.is_full():
                raise ValidationError("FullLineRHS", f"row {i + 1} has right-hand side R")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{j + 1}" for j in range(n)))
        elif len(self.names) != n:
            raise ValidationError("InconsistentArity", "wrong number of variable names")

    @property
    def shape(self) -> tuple[int, int]:
        return self.A.shape


@dataclass(frozen=True)
class IntegratedSystem:
    """Representative rows followed by one constraint row per constrained column."""

    P: tuple[tuple[EpsScalar, ...], ...]
    rhs: tuple[ExternalScalar, ...]
    m: int
    constrained: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.constrained)

    @property
    def constraint_rows(self) -> tuple[int, ...]:
        return tuple(range(self.m, self.m + self.k))

    @property
    def constraint_neutrices(self) -> tuple[Neutrix, ...]:
        return tuple(self.rhs[i].neutrix for i in self.constraint_rows)

    @property
    def n(self) -> int:
        return len(self.P[0])


@dataclass(frozen=True)
class EchelonSystem:
    """``Q y ⊆ C`` with ``x[permutation[p]] = y[p]``.

    ``origin[i]`` is the 0-based integrated-system row that ended up as
    echelon row ``i``.
    """

    Q: tuple[tuple[EpsScalar, ...], ...]
    C: tuple[ExternalScalar, ...]
    permutation: tuple[int, ...]
    r: int
    origin: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.permutation)


def feasibility_space(S: FlexibleSystem) -> list[Neutrix]:
    """``F_j = min_i B_i : A_ij``."""
    m, n = S.shape
    return [ntx_min(ntx_div(S.B[i].neutrix, S.A[i, j].neutrix) for i in range(m)) for j in range(n)]


def integrate(S: FlexibleSystem, rep: Sequence[Sequence[EpsScalar]] | None = None) -> IntegratedSystem:
    """Append constraint rows to a representative system.

    ``rep`` overrides the canonical representative matrix; each entry must
    lie in the corresponding coefficient.
    """
    m, n = S.shape
    F = feasibility_space(S)
    if rep is None:
        P = [tuple(r) for r in representative(S.A)]
    else:
        P = [tuple(r) for r in rep]
        if len(P) != m or any(len(r) != n for r in P):
            raise DimensionMismatch("representative matrix has the wrong shape")
        if not all(ext_member(P[i][j], S.A[i, j]) for i in range(m) for j in range(n)):
            raise ValueError("representative entry outside its coefficient")
    rhs = list(S.B)
    constrained = []
    for j, f in enumerate(F):
        if not f.is_full():
            P.append(tuple(ONE if c == j else ZERO for c in range(n)))
            rhs.append(ExternalScalar(ZERO, f))
            constrained.append(j)
    return IntegratedSystem(tuple(P), tuple(rhs), m, tuple(constrained))


def _row_scaler(row: Sequence[EpsScalar], start: int) -> EpsScalar:
    """Entry of maximal magnitude from ``start`` on; positive, then leftmost, on ties."""
    best = None
    for v in row[start:]:
        if v.is_zero():
            continue
        if best is None:
            best = v
            continue
        c = abs(v) - abs(best)
        if c.sign() > 0 or (c.is_zero() and v.sign() > 0 > best.sign()):
            best = v
    return best


def to_increasing_echelon(I: IntegratedSystem) -> EchelonSystem:
    """Gaussian elimination keeping pivot right-hand neutrices increasing.

    At step ``s`` every remaining row is virtually divided by its entry of
    largest magnitude; the row whose scaled right-hand neutrix is smallest
    becomes the pivot (a neutricial right-hand side wins ties, then the
    upper row).  Only the pivot row is actually scaled, so the multipliers
    used below it never enlarge a neutrix.
    """
    rows: Matrix = [list(r) for r in I.P]
    rhs = list(I.rhs)
    origin = list(range(len(rows)))
    n = I.n
    perm = list(range(n))
    s = 0
    while s < min(len(rows), n):
        live = [i for i in range(s, len(rows)) if any(not v.is_zero() for v in rows[i][s:])]
        dead = [i for i in range(s, len(rows)) if i not in live]
        order = live + dead
        rows[s:] = [rows[i] for i in order]
        rhs[s:] = [rhs[i] for i in order]
        origin[s:] = [origin[i] for i in order]
        if not live:
            break
        best = None
        for i in range(s, s + len(live)):
            a = _row_scaler(rows[i], s)
            key = (ntx_scale(a.inverse(), rhs[i].neutrix).level, 0 if is_neutricial(rhs[i]) else 1)
            if best is None or key < best[0]:
                best = (key, i, a)
        _, i, a = best
        for lst in (rows, rhs, origin):
            lst.insert(s, lst.pop(i))
        inv = a.inverse()
        rows[s] = [v * inv for v in rows[s]]
        rhs[s] = ext_scale(inv, rhs[s])
        c = next(j for j in range(s, n) if abs(rows[s][j]) == 1)
        if rows[s][c].sign() < 0:
            rows[s] = [-v for v in rows[s]]
            rhs[s] = ext_neg(rhs[s])
        if c != s:
            for r in rows:
                r[s], r[c] = r[c], r[s]
            perm[s], perm[c] = perm[c], perm[s]
        for i in range(s + 1, len(rows)):
            f = rows[i][s]
            if f.is_zero():
                continue
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[s])]
            rhs[i] = ext_add(rhs[i], ext_scale(-f, rhs[s]))
        s += 1
    return EchelonSystem(tuple(tuple(r) for r in rows), tuple(rhs), tuple(perm), s, tuple(origin))


def consistency_check(E: EchelonSystem) -> tuple[int, ...]:
    """1-based echelon rows below the rank with zeroless right-hand side; empty when consistent."""
    return tuple(i + 1 for i in range(E.r, len(E.C)) if not is_neutricial(E.C[i]))


def _back_substitute(E: EchelonSystem, rhs: Sequence[EpsScalar]) -> list[EpsScalar]:
    """Solve the unit upper-triangular block ``Q^(r) y = rhs``."""
    r = E.r
    y = [ZERO] * r
    for i in reversed(range(r)):
        acc = rhs[i]
        row = E.Q[i]
        for j in range(i + 1, r):
            if not row[j].is_zero():
                acc = acc - row[j] * y[j]
        y[i] = acc
    return y


def _unpermute(E: EchelonSystem, y: Sequence[EpsScalar]) -> tuple[EpsScalar, ...]:
    x = [ZERO] * E.n
    for p, v in enumerate(y):
        x[E.permutation[p]] = v
    return tuple(x)


def solve_closed_form(E: EchelonSystem) -> SolutionSet:
    """Parameter-method solution of a consistent echelon system."""
    bad = consistency_check(E)
    if bad:
        raise InconsistentSystem(f"zeroless right-hand side in rows {', '.join(map(str, bad))}")
    r, n = E.r, E.n
    pad = [ZERO] * (n - r)
    support = _unpermute(E, _back_substitute(E, [c.rep for c in E.C[:r]]) + pad)
    modular = []
    for i in range(r):
        N = E.C[i].neutrix
        if N.is_zero():
            continue
        unit = [ONE if k == i else ZERO for k in range(r)]
        modular.append((N, _unpermute(E, _back_substitute(E, unit) + pad)))
    linear = []
    for k in range(r, n):
        col = [-E.Q[i][k] for i in range(r)]
        tail = [ONE if j == k else ZERO for j in range(r, n)]
        linear.append(_unpermute(E, _back_substitute(E, col) + tail))
    return SolutionSet.make(support, modular, linear, rank=r, permutation=E.permutation)


def solve(S: FlexibleSystem, rep: Sequence[Sequence[EpsScalar]] | None = None) -> SolutionSet:
    """Full pipeline; the result does not depend on ``rep``."""
    E = to_increasing_echelon(integrate(S, rep))
    bad = consistency_check(E)
    if bad:
        return SolutionSet.inconsistent(E.n, E.r, bad, E.permutation)
    return solve_closed_form(E)


def system_from_rows(rows: Sequence[Sequence], rhs: Sequence) -> FlexibleSystem:
    """Convenience constructor from nested sequences of scalars or external numbers."""
    A = ExternalMatrix(rows)
    B = ExternalVector(rhs)
    if A.shape[0] != len(B):
        raise DimensionMismatch("row count differs from right-hand side length")
    return FlexibleSystem(A, B)


__all__ = [
    "EchelonSystem",
    "FlexibleSystem",
    "IntegratedSystem",
    "consistency_check",
    "feasibility_space",
    "integrate",
    "solve",
    "solve_closed_form",
    "system_from_rows",
    "to_increasing_echelon",
]
