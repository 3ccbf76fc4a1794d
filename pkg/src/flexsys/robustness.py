"""Essential parts, feasible systems and robustness matrices.

The criteria here are sufficient conditions.  Every hypothesis is checked
explicitly; a failed hypothesis yields an ``Inconclusive`` verdict or an
exception, never a silently wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AbsorberDeterminant, BadRank, DimensionMismatch, NotReduced, PreconditionFailed, Singular
from .extlinalg import (
    DEFAULT_MAX_DET_ORDER,
    ExternalMatrix,
    ExternalVector,
    column_max_neutrix,
    ext_det,
    is_limited,
    is_nonsingular,
    is_reduced,
    minors,
    rank,
    solve_in_basis,
)
from .extnum import (
    ExternalScalar,
    FULL,
    Neutrix,
    abs_key,
    is_absorber,
    is_ext_absorber,
    is_zeroless,
    ntx_div,
    ntx_max,
    ntx_min,
    ntx_scale,
    oslash,
)
from .scalar import ZERO, EpsScalar, Number, as_eps
from .solutions import Relation, solution_equiv
from .solver import FlexibleSystem, feasibility_space, solve

ESSENTIAL = "Essential"
FEASIBLE = "Feasible"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class EssentialReport:
    """Outcome of the essential-part criterion for the first ``r`` rows.

    ``conditions`` holds, in order: the leading ``r x r`` block is
    non-singular; the canonical ``(P|b)`` has rank ``r``; its determinant
    does not absorb the largest upper right-hand neutrix; upper right-hand
    neutrices are inside the lower ones; lower column neutrices are inside
    the upper ones.
    """

    r: int
    limited: bool
    conditions: tuple[bool, bool, bool, bool, bool]
    verdict: str


def essential_part_check(S: FlexibleSystem, r: int, max_order: int = DEFAULT_MAX_DET_ORDER) -> EssentialReport:
    m, n = S.shape
    if not 1 <= r < m:
        raise BadRank(f"need 1 <= r < {m}, got {r}")
    A, B = S.A, S.B
    limited = is_limited(A)
    lead = A.submatrix(range(r), range(r)) if r <= n else None
    c1 = lead is not None and is_nonsingular(lead, max_order)
    aug = [[e.rep for e in row] + [b.rep] for row, b in zip(A.rows, B)]
    c2 = rank(aug) == r
    b_up = ntx_max(B[i].neutrix for i in range(r))
    b_low = ntx_min(B[i].neutrix for i in range(r, m))
    c3 = c1 and not is_ext_absorber(ext_det(lead, max_order), b_up)
    c4 = b_up <= b_low
    c5 = all(column_max_neutrix(A, j, range(r, m)) <= column_max_neutrix(A, j, range(r)) for j in range(n))
    conds = (c1, c2, c3, c4, c5)
    verdict = ESSENTIAL if limited and all(conds) else INCONCLUSIVE
    return EssentialReport(r, limited, conds, verdict)


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the feasibility criterion.

    ``max_minor`` is the order-``m`` minor of largest magnitude, ``F_low``
    the smallest constraining feasibility neutrix (``R`` if none) and
    ``B_max`` the largest right-hand neutrix.  ``constraints_implied``
    records that every constraint row ``x_j ∈ F_j`` follows from the
    representative rows: ``e_j = t P`` with ``t b ∈ F_j`` and ``t B ⊆ F_j``.
    """

    limited: bool
    max_minor: ExternalScalar
    minor_zeroless: bool
    F_low: Neutrix
    B_max: Neutrix
    B_inside_F: bool
    minor_not_absorber: bool
    constraints_implied: bool
    verdict: str


def is_feasible_system(S: FlexibleSystem, max_order: int = DEFAULT_MAX_DET_ORDER) -> FeasibilityReport:
    m, n = S.shape
    if m > n:
        raise DimensionMismatch(f"feasibility criterion needs m <= n, got {m} > {n}")
    limited = is_limited(S.A)
    top = max((mn for _, _, mn in minors(S.A, m, max_order)), key=abs_key)
    zeroless = is_zeroless(top)
    space = feasibility_space(S)
    F_low = ntx_min(f for f in space if not f.is_full())
    B_max = ntx_max(S.B.neutrices)
    inside = B_max <= F_low
    not_abs = zeroless and not is_ext_absorber(top, B_max)
    implied = _constraints_implied(S, space)
    ok = limited and zeroless and inside and not_abs and implied
    return FeasibilityReport(limited, top, zeroless, F_low, B_max, inside, not_abs, implied, FEASIBLE if ok else INCONCLUSIVE)


def _constraints_implied(S: FlexibleSystem, space: Sequence[Neutrix]) -> bool:
    """Each constraint ``x_j ∈ F_j`` follows from the canonical representative system."""
    P = [[e.rep for e in row] for row in S.A.rows]
    b = S.B.reps
    m, n = S.shape
    if rank(P) < m:
        return all(f.is_full() for f in space)
    for j, Fj in enumerate(space):
        if Fj.is_full():
            continue
        t = solve_in_basis(P, [1 if c == j else 0 for c in range(n)])
        if t is None:
            return False
        support = sum((ti * bi for ti, bi in zip(t, b)), ZERO)
        spread = ntx_max(ntx_scale(ti, Bi) for ti, Bi in zip(t, S.B.neutrices))
        if not (Fj.contains(support) and spread <= Fj):
            return False
    return True


@dataclass(frozen=True)
class RobustnessReport:
    """Robustness matrix ``R = P + E`` with its hypothesis record.

    ``preconditions`` maps a check name to its outcome: ``"row i"`` for
    ``B_i : Ē_i ⊇ B̄`` and ``"d+E zeroless"``.
    """

    E: tuple[tuple[Neutrix, ...], ...]
    R: ExternalMatrix
    d: EpsScalar
    d_cols: tuple[EpsScalar, ...]
    preconditions: dict
    verified_equivalent: bool

    @property
    def all_preconditions(self) -> bool:
        return all(self.preconditions.values())


def _exact_matrix(P) -> ExternalMatrix:
    M = P if isinstance(P, ExternalMatrix) else ExternalMatrix.from_reps(P)
    if not M.is_exact():
        raise ValueError("robustness needs a real coefficient matrix")
    return M


def _check_input(M: ExternalMatrix, B: ExternalVector, max_order: int) -> EpsScalar:
    n, k = M.shape
    if n != k:
        raise DimensionMismatch(f"robustness needs a square matrix, got {n}x{k}")
    if len(B) != n:
        raise DimensionMismatch("right-hand side length differs from matrix order")
    if any(N.is_full() for N in B.neutrices):
        raise PreconditionFailed("FullLineRHS")
    d = ext_det(M, max_order).rep
    if d.is_zero():
        raise Singular("det P = 0")
    b_max = ntx_max(B.neutrices)
    if is_absorber(d, b_max):
        raise AbsorberDeterminant(f"det P = {d} absorbs {b_max}")
    if not is_reduced(M):
        raise NotReduced("P is not reduced")
    return d


def _cramer(M: ExternalMatrix, b: Sequence[EpsScalar], max_order: int) -> tuple[EpsScalar, ...]:
    return tuple(ext_det(M.with_column(j, b), max_order).rep for j in range(M.shape[1]))


def _finish(M, B, E, d, d_cols, strict: bool) -> RobustnessReport:
    n = M.shape[0]
    b_max = ntx_max(B.neutrices)
    pre = {}
    for i in range(n):
        pre[f"row {i + 1}"] = b_max <= ntx_div(B[i].neutrix, ntx_max(E[i]))
    e_max = ntx_max(N for row in E for N in row)
    pre["d+E zeroless"] = is_zeroless(ExternalScalar(d, e_max))
    if strict:
        failed = [k for k, v in pre.items() if not v]
        if failed:
            raise PreconditionFailed(failed[0])
    R = M.add_neutrices(E)
    same = solution_equiv(solve(FlexibleSystem(M, B)), solve(FlexibleSystem(R, B))) is Relation.EQUAL
    return RobustnessReport(tuple(tuple(r) for r in E), R, d, d_cols, pre, same)


def robustness_matrix(P, B, max_order: int = DEFAULT_MAX_DET_ORDER, strict: bool = True) -> RobustnessReport:
    """Maximal limited neutrix perturbation ``E`` of ``P`` keeping the solution of ``P|B``.

    ``E_ij = B_i d/d_j`` when ``d_j != 0`` and that neutrix is strictly
    inside ``o``; otherwise ``E_ij = o``.  With ``strict`` a failed
    hypothesis raises :class:`PreconditionFailed`; otherwise it is only
    recorded in the report.
    """
    M = _exact_matrix(P)
    B = B if isinstance(B, ExternalVector) else ExternalVector(B)
    d = _check_input(M, B, max_order)
    d_cols = _cramer(M, B.reps, max_order)
    o = oslash()
    E = []
    for Bi in B.neutrices:
        row = []
        for dj in d_cols:
            cand = ntx_scale(d / dj, Bi) if not dj.is_zero() else FULL
            row.append(cand if cand < o else o)
        E.append(row)
    return _finish(M, B, E, d, d_cols, strict)


def robustness_matrix_uniform(P, b: Sequence[Number], B: Neutrix, max_order: int = DEFAULT_MAX_DET_ORDER, strict: bool = True) -> RobustnessReport:
    """Robustness matrix of ``P|(b + B)`` with one right-hand neutrix ``B``.

    Column ``i`` of ``E`` is constant, equal to ``min(o, B d/d_i)``.
    """
    M = _exact_matrix(P)
    Bv = ExternalVector(ExternalScalar(as_eps(v), B) for v in b)
    d = _check_input(M, Bv, max_order)
    d_cols = _cramer(M, Bv.reps, max_order)
    o = oslash()
    cols = [ntx_min((o, ntx_scale(d / dj, B))) if not dj.is_zero() else o for dj in d_cols]
    E = [list(cols) for _ in range(M.shape[0])]
    return _finish(M, Bv, E, d, d_cols, strict)


def is_strict_perturbation(P, Qn: Sequence[Sequence[Neutrix]], B) -> bool:
    """Whether ``(P + Qn)|B`` has exactly the solutions of ``P|B``."""
    M = _exact_matrix(P)
    B = B if isinstance(B, ExternalVector) else ExternalVector(B)
    if len(Qn) != M.shape[0] or any(len(r) != M.shape[1] for r in Qn):
        raise DimensionMismatch("perturbation shape differs from matrix shape")
    base = solve(FlexibleSystem(M, B))
    pert = solve(FlexibleSystem(M.add_neutrices(Qn), B))
    return solution_equiv(base, pert) is Relation.EQUAL


__all__ = [
    "ESSENTIAL",
    "EssentialReport",
    "FEASIBLE",
    "FeasibilityReport",
    "INCONCLUSIVE",
    "RobustnessReport",
    "essential_part_check",
    "is_feasible_system",
    "is_strict_perturbation",
    "robustness_matrix",
    "robustness_matrix_uniform",
]
