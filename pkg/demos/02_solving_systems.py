"""Solving a flexible system step by step.

Each coefficient and right-hand side of the system below is an external
number, so the solution set is a coset ``support + sum N_k * v_k`` rather
than a point.

Run with ``python demos/02_solving_systems.py``.
"""

from __future__ import annotations

from flexsys import (
    consistency_check,
    feasibility_space,
    format_solution,
    format_system,
    integrate,
    parse_system,
    solution_membership,
    solve,
    to_increasing_echelon,
)

TEXT = """
(-1+eps*o) x1 + x2 + (-0.2+eps^2*L) x3 in 2+eps*L
(1+eps^2*L) x1 - x2 + (0.1+eps^2*o) x3 in 1+eps*o
(1+o) x1 - x2 + (0.15+eps*o) x3 in -0.5+o
"""

S = parse_system(TEXT)
print(format_system(S))

# %% Coefficient neutrices restrict how large each unknown may be
print("feasibility space:", ", ".join(map(str, feasibility_space(S))))

# %% The integrated system adds one constraint row per restricted unknown
I = integrate(S)
for row, rhs in zip(I.P, I.rhs):
    print("  ", [str(v) for v in row], "|", rhs)

# %% Gaussian elimination ordered by increasing right-hand neutrices
E = to_increasing_echelon(I)
print("rank", E.r, " column order", [p + 1 for p in E.permutation])
for row, rhs in zip(E.Q, E.C):
    print("  ", [str(v) for v in row], "|", rhs)

# %% Every tail right-hand side is neutricial, so the system is consistent
print("offending rows:", consistency_check(E))
Z = solve(S)
print("solution:", format_solution(Z))
for x in [(5, 1, -30), (4, 0, -29)]:
    print(x, "solves the system:", solution_membership(Z, x))

# %% Larger coefficient neutrices can make the same representative inconsistent
T = parse_system("""
(-1+eps*o) x1 + (1+o) x2 + (-0.2+eps*L) x3 in 2+eps*L
(1+eps*L) x1 + (-1+eps*L) x2 + (0.1+o) x3 in 1+eps*o
(1+o) x1 + (-1+o) x2 + (0.15+eps*o) x3 in -0.5+o
""")
E2 = to_increasing_echelon(integrate(T))
print("tail right-hand sides:", [str(c) for c in E2.C[E2.r:]])
print(format_solution(solve(T)))
