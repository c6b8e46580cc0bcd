from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from blockforge.finite_field import reduction_context
from blockforge.linalg import (EchelonBasis, charpoly_mod, det, independent_columns, independent_rows,
                               inverse_matrix, matmul, nullspace, nullspace_mod, rank)

ONE = Fraction(1)


def square(n, lo=-3, hi=3):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


matrices = st.integers(1, 5).flatmap(square)
rect = st.tuples(st.integers(1, 4), st.integers(1, 5)).flatmap(
    lambda s: st.lists(st.lists(st.integers(-2, 2), min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0]))


@given(matrices)
def test_det_and_rank_match_sympy(M):
    S = sympy.Matrix(M)
    F = [[Fraction(x) for x in r] for r in M]
    assert det(F, ONE) == S.det()
    assert rank(F, ONE) == S.rank()


@given(matrices)
def test_inverse(M):
    F = [[Fraction(x) for x in r] for r in M]
    if det(F, ONE) == 0:
        return
    inv = inverse_matrix(F, ONE)
    n = len(M)
    assert matmul(F, inv) == [[ONE if i == j else 0 for j in range(n)] for i in range(n)]


@given(rect)
def test_nullspace_and_independence(M):
    F = [[Fraction(x) for x in r] for r in M]
    ns = nullspace(F, ONE)
    assert len(ns) == len(M[0]) - rank(F, ONE)
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in F)
    rows = independent_rows(F, ONE)
    assert rank([F[i] for i in rows], ONE) == len(rows) == rank(F, ONE)
    assert len(independent_columns(F, ONE)) == len(rows)


@given(rect)
def test_echelon_basis(M):
    F = [[Fraction(x) for x in r] for r in M]
    eb = EchelonBasis(ONE)
    added = [eb.add(r) for r in F]
    assert len(eb) == sum(added) == rank(F, ONE)


@given(matrices, st.sampled_from([5, 7, 13, 101]))
def test_charpoly_mod_matches_sympy(M, q):
    x = sympy.Symbol("x")
    cp = sympy.Matrix(M).charpoly(x).all_coeffs()[::-1]
    assert charpoly_mod(M, q) == [int(c) % q for c in cp]


@given(rect, st.sampled_from([3, 7]))
def test_nullspace_mod(M, q):
    for v in nullspace_mod(M, q):
        assert all(sum(a * b for a, b in zip(row, v)) % q == 0 for row in M)


def test_generic_routines_over_extension_field():
    ctx = reduction_context(2, 7)  # F_8
    z = ctx.zeta_image
    M = [[ctx.one, z], [z, z ** 2]]
    assert rank(M, ctx.one) == 1
    assert not det(M, ctx.one)
    N = [[ctx.one, z], [z, ctx.one]]
    assert det(N, ctx.one) == ctx.one - z ** 2
