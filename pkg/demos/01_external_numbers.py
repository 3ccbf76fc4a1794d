"""External numbers: a tour.

An external number ``a + A`` is a scalar ``a`` in Q(eps), with ``eps`` a
positive infinitesimal, blurred by a neutrix ``A``.  The neutrices used here
form a chain of convex groups: ``eps^m*o`` (everything smaller than eps^m in
order) and ``eps^m*L`` (everything of order eps^m or smaller).

Run with ``python demos/01_external_numbers.py``.
"""

from __future__ import annotations

from flexsys import (
    EPS,
    OMEGA,
    ext_inv,
    ext_leq,
    ext_member,
    ext_subset,
    is_zeroless,
    ntx_div,
    ntx_mul,
    oslash,
    parse_scalar,
    pound,
    relative_imprecision,
)

# %% Scalars live in Q(eps); w is 1/eps
print("eps * w =", EPS * OMEGA)
print("(1 + eps)^-1 =", 1 / (1 + EPS))

# %% External numbers can be written in the same text syntax the CLI reads
a = parse_scalar("1 + eps*o")
b = parse_scalar("w + 2 + L")
print("2 + L is stored as", parse_scalar("2 + L"), "since 2 is limited")
print("a =", a, "  b =", b)
print("a + b =", a + b)
print("a * b =", a * b)
print("1 / a =", ext_inv(a))

# %% The representative is only one choice among many
print("1 + eps^2 in a:", ext_member(1 + EPS**2, a))
print("1 + eps in a:  ", ext_member(1 + EPS, a))
print("a is zeroless: ", is_zeroless(a))
print("relative imprecision of b:", relative_imprecision(b))

# %% Neutrix arithmetic follows the chain
o, L = oslash(0), pound(0)
print("o * L =", ntx_mul(o, L), "  o : L =", ntx_div(o, L), "  L : o =", ntx_div(L, o))

# %% Inclusion and order
print("1 + eps*o inside 1 + o:", ext_subset(parse_scalar("1+eps*o"), parse_scalar("1+o")))
print("1 + o <= 1 + L:", ext_leq(parse_scalar("1+o"), parse_scalar("1+L")))
print("1 + L <= 1 + o:", ext_leq(parse_scalar("1+L"), parse_scalar("1+o")))
