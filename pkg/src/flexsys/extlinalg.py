"""External vectors and matrices.

Entries are :class:`ExternalScalar` values.  Besides container plumbing this
module provides representatives, reducedness and limitedness tests,
determinants by signed-product expansion, and the inclusion test
``A x ⊆ B`` for a point ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .extnum import (
    ExternalScalar,
    Neutrix,
    ONE_EXT,
    ZERO_EXT,
    _ext,
    abs_key,
    ext_add,
    ext_mul,
    ext_scale,
    ext_subset,
    is_zeroless,
    ntx_max,
    oslash,
    pound,
)
from .scalar import ZERO, EpsScalar, Number, as_eps

DEFAULT_MAX_DET_ORDER = 8


class ExternalVector:
    """Immutable sequence of external scalars."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable = ()):
        object.__setattr__(self, "entries", tuple(_ext(e) for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("ExternalVector is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, ExternalVector):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"ExternalVector([{', '.join(str(e) for e in self.entries)}])"

    @property
    def neutrices(self) -> tuple[Neutrix, ...]:
        return tuple(e.neutrix for e in self.entries)

    @property
    def reps(self) -> tuple[EpsScalar, ...]:
        return tuple(e.rep for e in self.entries)


class ExternalMatrix:
    """Immutable rectangular grid of external scalars."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(_ext(e) for e in row) for row in rows)
        widths = {len(r) for r in grid}
        if len(widths) > 1:
            raise DimensionMismatch("rows of unequal length")
        ncols = widths.pop() if widths else 0
        object.__setattr__(self, "rows", grid)
        object.__setattr__(self, "shape", (len(grid), ncols))

    def __setattr__(self, name, value):
        raise AttributeError("ExternalMatrix is immutable")

    @classmethod
    def from_reps(cls, reps: Iterable[Iterable[Number]]) -> ExternalMatrix:
        return cls([[as_eps(x) for x in row] for row in reps])

    @classmethod
    def from_parts(cls, reps, neutrices) -> ExternalMatrix:
        """Entrywise ``reps[i][j] + neutrices[i][j]``."""
        return cls(
            [[ExternalScalar(a, n) for a, n in zip(rr, nr)] for rr, nr in zip(reps, neutrices)]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return self.shape[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, ExternalMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"ExternalMatrix([{body}])"

    def row(self, i: int) -> ExternalVector:
        return ExternalVector(self.rows[i])

    def column(self, j: int) -> ExternalVector:
        return ExternalVector(r[j] for r in self.rows)

    def neutrices(self) -> tuple[tuple[Neutrix, ...], ...]:
        return tuple(tuple(e.neutrix for e in r) for r in self.rows)

    def is_exact(self) -> bool:
        return all(e.neutrix.is_zero() for r in self.rows for e in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> ExternalMatrix:
        return ExternalMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def transpose(self) -> ExternalMatrix:
        m, n = self.shape
        return ExternalMatrix([[self.rows[i][j] for i in range(m)] for j in range(n)])

    def with_column(self, j: int, col: Iterable) -> ExternalMatrix:
        col = list(col)
        return ExternalMatrix(
            [[col[i] if k == j else e for k, e in enumerate(r)] for i, r in enumerate(self.rows)]
        )

    def add_neutrices(self, ntx: Sequence[Sequence[Neutrix]]) -> ExternalMatrix:
        """Entrywise ``self + ntx`` (the perturbed matrix ``P + E``)."""
        return ExternalMatrix(
            [[ExternalScalar(e.rep, n + e.neutrix) for e, n in zip(r, nr)] for r, nr in zip(self.rows, ntx)]
        )


def identity(n: int) -> ExternalMatrix:
    return ExternalMatrix([[ONE_EXT if i == j else ZERO_EXT for j in range(n)] for i in range(n)])


def representative(M: ExternalMatrix) -> list[list[EpsScalar]]:
    """The canonical representative matrix."""
    return [[e.rep for e in r] for r in M.rows]


@dataclass(frozen=True)
class MatrixStats:
    """Magnitude and neutrix summaries of a matrix."""

    max_abs_entry: ExternalScalar
    max_neutrix: Neutrix
    row_max_neutrix: tuple[Neutrix, ...]
    col_max_neutrix: tuple[Neutrix, ...]

    @classmethod
    def of(cls, M: ExternalMatrix) -> MatrixStats:
        m, n = M.shape
        if m == 0 or n == 0:
            raise DimensionMismatch("empty matrix")
        best = max((e for r in M.rows for e in r), key=abs_key)
        rows = tuple(ntx_max(e.neutrix for e in r) for r in M.rows)
        cols = tuple(column_max_neutrix(M, j) for j in range(n))
        return cls(best, ntx_max(rows), rows, cols)


def column_max_neutrix(M: ExternalMatrix, j: int, rows: Iterable[int] | None = None) -> Neutrix:
    """Largest neutrix in column ``j`` over ``rows`` (all rows by default)."""
    idx = range(M.shape[0]) if rows is None else rows
    return ntx_max(M.rows[i][j].neutrix for i in idx)


def is_reduced(M: ExternalMatrix) -> bool:
    """``α11`` has maximal magnitude and equals ``1`` up to an infinitesimal neutrix."""
    m, n = M.shape
    if m == 0 or n == 0:
        return False
    a11 = M.rows[0][0]
    if a11.rep != 1 or not a11.neutrix <= oslash():
        return False
    top = abs(a11.rep)
    return all(abs(e.rep) <= top for r in M.rows for e in r)


def is_limited(M: ExternalMatrix) -> bool:
    """Every entry lies strictly inside the limited numbers."""
    lim = ExternalScalar(ZERO, pound())
    return all(ext_subset(e, lim) and e.neutrix < pound() for r in M.rows for e in r)


def ext_det(M: ExternalMatrix, max_order: int = DEFAULT_MAX_DET_ORDER) -> ExternalScalar:
    """Determinant as a sum of signed products in external arithmetic."""
    m, n = M.shape
    if m != n:
        raise DimensionMismatch(f"determinant of a {m}x{n} matrix")
    if n > max_order:
        raise DimensionMismatch(f"order {n} exceeds the determinant bound {max_order}")
    if n == 0:
        return ONE_EXT
    rows = M.rows
    total = ZERO_EXT
    for perm in permutations(range(n)):
        term = ONE_EXT
        for i, j in enumerate(perm):
            e = rows[i][j]
            if e.neutrix.is_zero():
                if e.rep.is_zero():
                    term = None
                    break
                term = ext_scale(e.rep, term)
            else:
                term = ext_mul(term, e)
        if term is None:
            continue
        if _perm_sign(perm) < 0:
            term = ExternalScalar(-term.rep, term.neutrix)
        total = ext_add(total, term)
    return total


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def ext_minor(M: ExternalMatrix, rows: Sequence[int], cols: Sequence[int], max_order: int = DEFAULT_MAX_DET_ORDER) -> ExternalScalar:
    if len(rows) != len(cols):
        raise DimensionMismatch("minor needs as many rows as columns")
    return ext_det(M.submatrix(rows, cols), max_order)


def minors(M: ExternalMatrix, order: int, max_order: int = DEFAULT_MAX_DET_ORDER):
    """Yield ``(rows, cols, minor)`` for every square selection of the given order."""
    m, n = M.shape
    for rows in combinations(range(m), order):
        for cols in combinations(range(n), order):
            yield rows, cols, ext_minor(M, rows, cols, max_order)


def is_nonsingular(M: ExternalMatrix, max_order: int = DEFAULT_MAX_DET_ORDER) -> bool:
    return is_zeroless(ext_det(M, max_order))


def mat_apply(M: ExternalMatrix, x: Sequence[Number]) -> ExternalVector:
    """Row sums ``Σ α_ij x_j`` for a point ``x``."""
    m, n = M.shape
    if len(x) != n:
        raise DimensionMismatch(f"point of length {len(x)} for {n} columns")
    xs = [as_eps(v) for v in x]
    out = []
    for r in M.rows:
        acc = ZERO_EXT
        for e, v in zip(r, xs):
            acc = ext_add(acc, ext_scale(v, e))
        out.append(acc)
    return ExternalVector(out)


def inclusion_check(M: ExternalMatrix, x: Sequence[Number], B: Sequence[ExternalScalar]) -> bool:
    """True iff ``M x ⊆ B`` row by row."""
    if len(B) != M.shape[0]:
        raise DimensionMismatch("right-hand side length differs from row count")
    return all(ext_subset(g, b) for g, b in zip(mat_apply(M, x), B))


# --- exact linear algebra over Q(eps) ------------------------------------------


def rank(rows: Sequence[Sequence[EpsScalar]]) -> int:
    """Rank of a matrix of exact scalars."""
    return len(_rref(rows)[1])


def _rref(rows: Sequence[Sequence[EpsScalar]]):
    work = [[as_eps(v) for v in r] for r in rows]
    pivots: list[int] = []
    if not work:
        return work, pivots
    n = len(work[0])
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(work)) if not work[i][c].is_zero()), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = work[r][c].inverse()
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def solve_in_basis(basis: Sequence[Sequence[EpsScalar]], target: Sequence[EpsScalar]) -> list[EpsScalar] | None:
    """Coefficients ``c`` with ``Σ c_k basis[k] = target``, or ``None`` outside the span.

    ``basis`` must be linearly independent.
    """
    n = len(target)
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, piv = _rref(aug)
    if k in piv:
        return None
    coeffs = [ZERO] * k
    for row, c in zip(red, piv):
        coeffs[c] = row[k]
    return coeffs


__all__ = [
    "DEFAULT_MAX_DET_ORDER",
    "ExternalMatrix",
    "ExternalVector",
    "MatrixStats",
    "column_max_neutrix",
    "ext_det",
    "ext_minor",
    "identity",
    "inclusion_check",
    "is_limited",
    "is_nonsingular",
    "is_reduced",
    "mat_apply",
    "minors",
    "rank",
    "representative",
    "solve_in_basis",
]
