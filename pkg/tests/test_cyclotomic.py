from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from blockforge.cyclotomic import Cyclotomic, change_order, cyclotomic_polynomial, euler_phi
from blockforge.errors import BlockforgeError, NotInSubfield

ORDERS = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15]


def elements(n):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(coeff, min_size=euler_phi(n), max_size=euler_phi(n)).map(lambda cs: Cyclotomic(n, cs))


@st.composite
def same_order(draw, k=3):
    n = draw(st.sampled_from(ORDERS))
    return tuple(draw(elements(n)) for _ in range(k))


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in expected]
    assert euler_phi(n) == sympy.totient(n)


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 12])
def test_roots_of_unity(n):
    z = Cyclotomic.zeta(n)
    assert z ** n == 1
    assert all(z ** k != 1 for k in range(1, n))
    assert sum((z ** k for k in range(n)), Cyclotomic.rational(0, n)) == 0
    assert z.conjugate() == Cyclotomic.zeta(n, -1)
    assert z * z.conjugate() == 1


def test_string_and_mixed_orders():
    a = Cyclotomic.zeta(6) - 1
    assert str(a) == "-1 + z6"
    assert str(Cyclotomic.rational(0)) == "0"
    # zeta_3 = zeta_6^2, compared across orders
    assert Cyclotomic.zeta(3) == Cyclotomic.zeta(6) ** 2
    assert hash(Cyclotomic.zeta(3)) == hash(Cyclotomic.zeta(6) ** 2)
    s = Cyclotomic.zeta(3) + Cyclotomic.zeta(4)
    assert s.n == 12
    assert Cyclotomic.rational(Fraction(1, 2), 5) == Fraction(1, 2)


def test_change_order_and_subfields():
    r = Cyclotomic.zeta(5) + Cyclotomic.zeta(5, 4)  # (-1 + sqrt5)/2, real
    assert r.minimal().n == 5
    sqrt_m3 = Cyclotomic.zeta(3) - Cyclotomic.zeta(3, 2)
    assert change_order(sqrt_m3.embed(12), 3) == sqrt_m3
    assert change_order(sqrt_m3, 6).n == 6
    with pytest.raises(NotInSubfield):
        change_order(Cyclotomic.zeta(4), 3)
    i = Cyclotomic.zeta(4)
    assert (i * i).minimal().n == 1


def test_bad_construction():
    with pytest.raises(BlockforgeError):
        Cyclotomic(5, [1, 2])
    with pytest.raises(BlockforgeError):
        Cyclotomic.from_json({"n": 3, "terms": [[5, "1/1"]]})
    with pytest.raises(BlockforgeError):
        Cyclotomic.from_json({"n": "x"})
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zeta(3) / Cyclotomic.rational(0, 3)


@given(same_order())
def test_field_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    if b:
        assert (a / b) * b == a


@given(same_order(2), st.integers(1, 40))
def test_galois_conjugation_is_a_ring_map(t, k):
    a, b = t
    n = a.n
    if sympy.gcd(k, n) != 1:
        return
    assert (a * b).galois_conjugate(k) == a.galois_conjugate(k) * b.galois_conjugate(k)
    assert (a + b).galois_conjugate(k) == a.galois_conjugate(k) + b.galois_conjugate(k)


@settings(max_examples=50)
@given(same_order(2))
def test_complex_embedding_agrees(t):
    a, b = t
    assert cmath.isclose((a * b).to_complex(), a.to_complex() * b.to_complex(), abs_tol=1e-9)
    assert cmath.isclose(a.conjugate().to_complex(), a.to_complex().conjugate(), abs_tol=1e-9)


@given(same_order(1), st.sampled_from([2, 3, 4]))
def test_embed_round_trip(t, m):
    (a,) = t
    big = a.embed(a.n * m)
    assert big == a
    assert change_order(big, a.n) == a
    assert Cyclotomic.from_json(a.to_json()) == a
    assert a.minimal() == a
