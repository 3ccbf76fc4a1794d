"""How much can a real matrix be blurred without changing the solutions?

For a real matrix ``P`` and external right-hand side ``B``, the robustness
matrix ``R = P + E`` carries the largest entrywise neutrices ``E`` for which
``R x in B`` has the same solutions as ``P x in B``.

Run with ``python demos/03_robustness.py``.
"""

from __future__ import annotations

from flexsys import (
    AbsorberDeterminant,
    ExternalMatrix,
    FlexibleSystem,
    format_solution,
    is_feasible_system,
    parse_system,
    robustness_matrix,
    solution_equiv,
    solve,
)


def show(text: str) -> None:
    S = parse_system(text)
    P = [[a.rep for a in row] for row in S.A.rows]
    rep = robustness_matrix(P, S.B)
    print("R =", [[str(a) for a in row] for row in rep.R.rows])
    print("  determinant", rep.d, " checked equivalent:", rep.verified_equivalent)


# %% Bounded right-hand sides: every entry may carry an infinitesimal error
show("x1 + x2 in 3+o\nx1 - x2 in 1+o")

# %% Unlimited solutions shrink the admissible error in their columns
show("x1 + x2 in w+2+eps*L\nx1 - x2 in w+o")
show("x1 + x2 in w+2+o\nx1 - x2 in w+o")

# %% A near-singular matrix: the determinant eps absorbs the right-hand neutrix
near = parse_system("x1 + x2 in 1+o\nx1 + (1+eps) x2 in 1+o")
P = [[a.rep for a in row] for row in near.A.rows]
try:
    robustness_matrix(P, near.B)
except AbsorberDeterminant as exc:
    print("no robustness matrix:", exc)

# blurring every entry by o shrinks the solution set
blurred = parse_system("(1+o) x1 + (1+o) x2 in 1+o\n(1+o) x1 + (1+o) x2 in 1+o")
print("original:", format_solution(solve(near)))
print("blurred: ", format_solution(solve(blurred)))
print(solution_equiv(solve(blurred), solve(near)))

# %% Feasibility: when does the representative matrix alone suffice?
S = parse_system("(1+eps*o) x1 in 1+o\nx2 in 1+o")
report = is_feasible_system(S)
print("verdict:", report.verdict)
plain = FlexibleSystem(ExternalMatrix.from_reps([[a.rep for a in r] for r in S.A.rows]), S.B)
print(solution_equiv(solve(S), solve(plain)))
