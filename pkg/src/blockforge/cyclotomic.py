"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored in the power basis ``1, z, ..., z^(phi(n)-1)`` with
:class:`fractions.Fraction` coefficients, reduced modulo the n-th cyclotomic
polynomial. Binary operations on elements of different orders work in
Q(zeta_lcm).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import BlockforgeError, NotInSubfield
from .linalg import inverse_matrix, independent_rows


def euler_phi(n: int) -> int:
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of z^j for j in range(n)."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce with z^phi = -sum cyc[i] z^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _reduce_terms(n: int, terms: dict[int, Fraction]) -> tuple[Fraction, ...]:
    phi = euler_phi(n)
    table = _power_table(n)
    out = [Fraction(0)] * phi
    for k, c in terms.items():
        if not c:
            continue
        row = table[k % n]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return tuple(out)


class Cyclotomic:
    """An element of Q(zeta_n) with exact rational coordinates."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs):
        n = int(n)
        if n < 1:
            raise BlockforgeError("cyclotomic order must be positive")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(n):
            raise BlockforgeError(f"expected {euler_phi(n)} coefficients for order {n}, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    # construction

    @classmethod
    def from_terms(cls, n: int, terms) -> "Cyclotomic":
        """Sum of ``c * zeta_n^k`` over ``{k: c}`` (any exponents, reduced)."""
        if not isinstance(terms, dict):
            acc: dict[int, Fraction] = {}
            for k, c in terms:
                acc[k % n] = acc.get(k % n, Fraction(0)) + Fraction(c)
            terms = acc
        else:
            terms = {k % n: Fraction(c) for k, c in terms.items()}
        obj = cls.__new__(cls)
        obj.n = n
        obj.coeffs = _reduce_terms(n, terms)
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls.from_terms(n, {k: 1})

    @classmethod
    def rational(cls, q, n: int = 1) -> "Cyclotomic":
        return cls.from_terms(n, {0: Fraction(q)})

    @classmethod
    def _wrap(cls, n: int, coeffs: tuple) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj.n = n
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # structure

    def embed(self, m: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_m); requires ``n | m``."""
        if m == self.n:
            return self
        if m % self.n:
            raise BlockforgeError(f"cannot embed order {self.n} into order {m}")
        step = m // self.n
        return Cyclotomic.from_terms(m, {k * step: c for k, c in enumerate(self.coeffs) if c})

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other, self.n)
        elif not isinstance(other, Cyclotomic):
            return None, None
        if other.n == self.n:
            return self, other
        m = self.n * other.n // math.gcd(self.n, other.n)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._wrap(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._wrap(self.n, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return Cyclotomic._wrap(a.n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._wrap(self.n, tuple(x * other for x in self.coeffs))
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        n = a.n
        phi = len(a.coeffs)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        if phi == 1:
            return Cyclotomic._wrap(n, (conv[0],))
        table = _power_table(n)
        out = list(conv[:phi])
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for i, r in enumerate(table[k % n]):
                    if r:
                        out[i] += c * r
        return Cyclotomic._wrap(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of cyclotomics are not supported")
        result = Cyclotomic.rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic by zero")
            return Cyclotomic._wrap(self.n, tuple(x / other for x in self.coeffs))
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse: the other Galois conjugates over the (rational) norm."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        rest = Cyclotomic.rational(1, self.n)
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                rest = rest * self.galois_conjugate(k)
        norm = (self * rest).rational_value()
        return rest / norm

    def galois_conjugate(self, k: int) -> "Cyclotomic":
        """Image under zeta_n -> zeta_n^k."""
        if math.gcd(k, self.n) != 1:
            raise BlockforgeError(f"galois index {k} is not coprime to {self.n}")
        return Cyclotomic.from_terms(self.n, {(j * k) % self.n: c for j, c in enumerate(self.coeffs) if c})

    def conjugate(self) -> "Cyclotomic":
        return self.galois_conjugate(self.n - 1) if self.n > 2 else self

    def change_order(self, m: int) -> "Cyclotomic":
        return change_order(self, m)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_integral(self) -> bool:
        """Algebraic integer test: Z[zeta_n] is the full ring of integers."""
        return all(c.denominator == 1 for c in self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise BlockforgeError(f"{self} is not rational")
        return self.coeffs[0]

    def terms(self) -> list[tuple[int, Fraction]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def minimal(self) -> "Cyclotomic":
        """The same number written at the smallest possible order."""
        if self.is_rational():
            return Cyclotomic._wrap(1, (self.coeffs[0],))
        for m in range(1, self.n + 1):
            if self.n % m == 0:
                try:
                    return change_order(self, m)
                except NotInSubfield:
                    continue
        return self  # pragma: no cover

    def to_complex(self) -> complex:
        return sum((float(c) * cmath.exp(2j * math.pi * k / self.n) for k, c in enumerate(self.coeffs)),
                   0j)

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.n == self.n:
            return self.coeffs == other.coeffs
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            m = self.minimal()
            self._hash = hash(m.coeffs[0]) if m.n == 1 else hash((m.n, m.coeffs))
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self})"

    def __str__(self):
        parts = []
        for k, c in self.terms():
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.n}" + (f"^{k}" if k > 1 else "")
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append("-" + z)
                else:
                    parts.append(f"{c}*{z}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def sort_key(self) -> tuple:
        return tuple(self.coeffs)

    # serialization

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [[k, f"{c.numerator}/{c.denominator}"] for k, c in self.terms()]}

    @classmethod
    def from_json(cls, obj) -> "Cyclotomic":
        try:
            n = int(obj["n"])
            terms = {}
            for k, c in obj["terms"]:
                k = int(k)
                if not 0 <= k < euler_phi(n):
                    raise BlockforgeError(f"power-basis index {k} out of range for order {n}")
                terms[k] = Fraction(c)
        except (KeyError, TypeError, ValueError) as exc:
            raise BlockforgeError(f"bad cyclotomic encoding {obj!r}: {exc}") from None
        return cls(n, [terms.get(k, 0) for k in range(euler_phi(n))])


@lru_cache(maxsize=None)
def _subfield_solver(big: int, m: int):
    """Pivot rows and inverse block for writing Q(zeta_m) inside Q(zeta_big)."""
    step = big // m
    cols = [Cyclotomic.zeta(big, j * step).coeffs for j in range(euler_phi(m))]
    rows = [list(r) for r in zip(*cols)]  # phi(big) x phi(m)
    piv = independent_rows(rows, Fraction(1))
    inv = inverse_matrix([rows[i] for i in piv], Fraction(1))
    return tuple(piv), inv


def _galois_fixers(big: int, m: int) -> list[int]:
    return [k for k in range(1, big) if k % m == 1 % m and math.gcd(k, big) == 1]


def change_order(a: Cyclotomic, m: int) -> Cyclotomic:
    """Rewrite ``a`` at order ``m``; raises :class:`NotInSubfield` if impossible."""
    if m < 1:
        raise BlockforgeError("order must be positive")
    if a.n == m:
        return a
    if a.is_rational():
        return Cyclotomic.rational(a.coeffs[0], m)
    big = a.n * m // math.gcd(a.n, m)
    b = a.embed(big)
    for k in _galois_fixers(big, m):
        if k != 1 and b.galois_conjugate(k) != b:
            raise NotInSubfield(f"not in subfield: {a} is not in Q(zeta_{m})")
    piv, inv = _subfield_solver(big, m)
    rhs = [b.coeffs[i] for i in piv]
    sol = tuple(sum((inv[r][c] * rhs[c] for c in range(len(rhs))), Fraction(0)) for r in range(len(inv)))
    out = Cyclotomic._wrap(m, sol)
    if out.embed(big) != b:  # pragma: no cover - guarded by the Galois test
        raise NotInSubfield(f"not in subfield: {a} is not in Q(zeta_{m})")
    return out


def rational_valuation(q, p: int):
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    q = Fraction(q)
    if q == 0:
        return math.inf
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
