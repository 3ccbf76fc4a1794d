from __future__ import annotations

import random
from fractions import Fraction

import pytest

from flexsys.errors import DimensionMismatch
from flexsys.extnum import FULL, ZERO_N, ntx_scale, oslash, pound
from flexsys.scalar import EPS, OMEGA
from flexsys.solutions import (
    Relation,
    SolutionSet,
    canonicalize_solution,
    generators_independent,
    linear_part,
    modular_dimension,
    solution_equiv,
    solution_membership,
    solution_subset,
)
from flexsys.solver import solve

import gen

o, L = oslash(0), pound(0)
F = Fraction


def test_reference_membership(reference_system):
    Z = solve(reference_system)
    assert solution_membership(Z, Z.support)
    assert solution_membership(Z, (5, 1, -30))
    assert not solution_membership(Z, (4, 0, -29))
    with pytest.raises(DimensionMismatch):
        solution_membership(Z, (1, 2))


def test_membership_boundary():
    rng = random.Random(31)
    for _ in range(200):
        Z = solve(gen.system(rng))
        if not Z.consistent:
            continue
        for N, v in Z.modular:
            inside = N.order + (1 if N.kind == "o" else 0)
            for t in (EPS**inside, -EPS ** (inside + 1)):
                assert solution_membership(Z, [s + t * c for s, c in zip(Z.support, v)])
            t = EPS ** (inside - 1)
            assert not solution_membership(Z, [s + t * c for s, c in zip(Z.support, v)])
        for w in Z.linear:
            assert solution_membership(Z, [s + OMEGA**3 * c for s, c in zip(Z.support, w)])


def test_rewrite_of_generators():
    Z = SolutionSet.make((1, 0), [(oslash(-1), (1 + EPS, -1)), (oslash(-1), (-1, 1))])
    C = canonicalize_solution(Z)
    assert C.support == (1, 0)
    assert C.modular == ((o, (1, 0)), (oslash(-1), (-1, 1)))
    assert solution_equiv(Z, C) is Relation.EQUAL


def test_support_shift_is_absorbed():
    Z = SolutionSet.make((-1, 2), [(L, (-1, 1))])
    C = canonicalize_solution(Z)
    assert C.support == (1, 0)
    assert solution_equiv(C, SolutionSet.make((1, 0), [(L, (-1, 1))])) is Relation.EQUAL


def test_canonical_reference_is_fixed(reference_system):
    Z = solve(reference_system)
    assert canonicalize_solution(Z) == Z
    assert solution_equiv(Z, canonicalize_solution(Z)) is Relation.EQUAL


def test_linear_part_is_reduced():
    Z = SolutionSet.make((0, 0, 0), linear=[(1, 2, 3), (1, 1, 1)])
    basis = linear_part(Z)
    assert len(basis) == 2
    assert solution_equiv(Z, SolutionSet.make((0, 0, 0), linear=basis)) is Relation.EQUAL
    assert canonicalize_solution(Z).support == (0, 0, 0)


def test_dimensions(reference_system, near_singular):
    Z = solve(reference_system)
    assert len(linear_part(Z)) == 0 and modular_dimension(Z) == 3
    P = solve(near_singular)
    assert len(linear_part(P)) == 0 and modular_dimension(P) == 2
    H = SolutionSet.make((0, 0), linear=[(1, 0), (0, 1)])
    assert len(linear_part(H)) == 2 and modular_dimension(H) == 0


def test_near_singular_solutions(near_singular, near_singular_perturbed):
    P = canonicalize_solution(solve(near_singular))
    Q = canonicalize_solution(solve(near_singular_perturbed))
    assert P.support == (1, 0) and P.modular == ((o, (1, 0)), (oslash(-1), (-1, 1)))
    assert Q.support == (1, 0) and Q.modular == ((o, (1, 0)), (L, (-1, 1)))
    assert solution_equiv(Q, P) is Relation.FIRST_IN_SECOND
    assert solution_equiv(P, Q) is Relation.SECOND_IN_FIRST
    assert str(solution_equiv(Q, P)) == "ProperSubset(first ⊂ second)"


def test_incomparable_and_inconsistent():
    A = SolutionSet.make((0, 0), [(o, (1, 0))])
    B = SolutionSet.make((0, 0), [(o, (0, 1))])
    assert solution_equiv(A, B) is Relation.INCOMPARABLE
    empty = SolutionSet.inconsistent(2, 1)
    assert solution_equiv(empty, SolutionSet.inconsistent(2, 2)) is Relation.EQUAL
    assert solution_equiv(empty, A) is Relation.FIRST_IN_SECOND
    assert solution_subset(empty, A) and not solution_subset(A, empty)
    assert not solution_membership(empty, (0, 0))
    with pytest.raises(DimensionMismatch):
        solution_subset(A, SolutionSet.make((0,)))


def test_make_validates():
    with pytest.raises(ValueError):
        SolutionSet.make((0,), [(FULL, (1,))])
    with pytest.raises(DimensionMismatch):
        SolutionSet.make((0, 0), [(o, (1,))])
    assert SolutionSet.make((0,), [(ZERO_N, (1,))]).modular == ()


def test_independence():
    assert generators_independent(SolutionSet.make((0, 0), [(o, (1, 0))], [(1, 1)]))
    assert not generators_independent(SolutionSet.make((0, 0), [(o, (1, 1))], [(2, 2)]))


def test_canonical_form_is_a_normal_form():
    """Two generator sets for the same coset canonicalize identically."""
    rng = random.Random(32)
    for _ in range(200):
        Z = solve(gen.system(rng))
        if not Z.consistent or not Z.generators():
            continue
        gens = Z.generators()
        k = rng.randrange(len(gens))
        N, v = gens[k]
        # add a harmless multiple of v to the support and mix v into a larger generator
        t = gen.member_of(rng, N) if not N.is_full() else gen.rational(rng)
        support = [s + t * c for s, c in zip(Z.support, v)]
        mixed = []
        for j, (M, w) in enumerate(gens):
            if j != k and N.is_full():
                # a linear direction can be mixed in with any coefficient
                c = gen.rational(rng)
                w = tuple(a + c * b for a, b in zip(w, v))
            elif j != k and M.is_scaled() and N.is_scaled():
                # M*(w + c*v) + N*v is the same set whenever c*M lies in N
                c = gen.rational(rng) * EPS ** (N.order - M.order)
                if ntx_scale(c, M) <= N:
                    w = tuple(a + c * b for a, b in zip(w, v))
            mixed.append((M, w))
        W = SolutionSet.make(
            support,
            [(M, w) for M, w in mixed if not M.is_full()],
            [w for M, w in mixed if M.is_full()],
        )
        assert solution_equiv(Z, W) is Relation.EQUAL
        assert canonicalize_solution(Z).support == canonicalize_solution(W).support
        assert canonicalize_solution(Z).modular == canonicalize_solution(W).modular
        assert canonicalize_solution(Z).linear == canonicalize_solution(W).linear
