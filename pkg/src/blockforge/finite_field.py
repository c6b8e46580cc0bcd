"""The residue field F_{p^f} and the reduction map from cyclotomic integers.

A :class:`ReductionContext` fixes one prime ideal above ``p`` in
Q(zeta_n_reg) by choosing the image of zeta_n_reg in F_{p^f}; every choice
below is deterministic, so reductions are reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .cyclotomic import Cyclotomic, change_order, cyclotomic_polynomial
from .errors import BlockforgeError, NotInSubfield, ReductionError
from .perm import is_prime, p_valuation, prime_factors


# -- polynomials over Z/m, lowest degree first ----------------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return out


def _pmod(a, g, m):
    """Remainder of ``a`` modulo monic ``g`` with coefficients mod ``m``."""
    a = [x % m for x in a]
    d = len(g) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for i in range(d + 1):
                a[k - d + i] = (a[k - d + i] - c * g[i]) % m
    a = a[:d] + [0] * max(0, d - len(a))
    return a


def _pdivmod_field(a, b, p):
    a = _trim(x % p for x in a)
    b = _trim(x % p for x in b)
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = (a[k + i] - c * y) % p
        a = _trim(a)
    return q, a


def _pgcd(a, b, p):
    a, b = _trim(x % p for x in a), _trim(x % p for x in b)
    while b:
        _, r = _pdivmod_field(a, b, p)
        a, b = b, r
    return a


def _ppowmod(base, e, g, p):
    result = [1]
    base = _pmod(base, g, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), g, p)
        base = _pmod(_pmul(base, base, p), g, p)
        e >>= 1
    return result


def _is_irreducible(g, p) -> bool:
    f = len(g) - 1
    xp = [0, 1]
    for _ in range(f // 2):
        xp = _ppowmod(xp, p, g, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(g, diff, p)) > 1:
            return False
    return True


def multiplicative_order(p: int, n: int) -> int:
    if n == 1:
        return 1
    if math.gcd(p, n) != 1:
        raise BlockforgeError(f"{p} is not a unit modulo {n}")
    k, x = 1, p % n
    while x != 1:
        x = x * p % n
        k += 1
    return k


def smallest_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``f`` with the smallest coefficient encoding."""
    for tail in product(range(p), repeat=f):
        g = list(reversed(tail)) + [1]  # encoding sum c_i p^i ascends with tail order
        if f == 1 or (g[0] != 0 and _is_irreducible(g, p)):
            return tuple(g)
    raise BlockforgeError(f"no irreducible polynomial of degree {f} mod {p}")  # pragma: no cover


class FFElem:
    """Element of F_{p^f} = F_p[x]/(modulus)."""

    __slots__ = ("ctx", "poly")

    def __init__(self, ctx: "ReductionContext", poly):
        self.ctx = ctx
        self.poly = tuple(poly)

    def _coerce(self, other):
        if isinstance(other, FFElem):
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        if isinstance(other, Fraction):
            return self.ctx.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FFElem(self.ctx, ((a + b) % p for a, b in zip(self.poly, o.poly)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FFElem(self.ctx, ((a - b) % p for a, b in zip(self.poly, o.poly)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.ctx.p
        return FFElem(self.ctx, ((-a) % p for a in self.poly))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ctx.mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self ** (self.ctx.size - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return any(self.poly)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.poly == o.poly and self.ctx.key == o.ctx.key

    def __hash__(self):
        return hash(self.poly)

    def encoding(self) -> int:
        p = self.ctx.p
        return sum(c * p ** i for i, c in enumerate(self.poly))

    def multiplicative_order(self) -> int:
        if not self:
            raise BlockforgeError("zero has no multiplicative order")
        n = self.ctx.size - 1
        order = n
        for r in prime_factors(n):
            while order % r == 0 and (self ** (order // r)) == 1:
                order //= r
        return order

    def __repr__(self):
        return f"FFElem({self.encoding()} in F_{self.ctx.p}^{self.ctx.f})"


class ReductionContext:
    """Residue field for ``p`` together with a fixed image of zeta_n_reg.

    ``n_reg`` must be prime to ``p``. ``f`` is the order of ``p`` mod
    ``n_reg``, the modulus is the smallest monic irreducible of degree ``f``,
    and the image of zeta is the smallest-encoded element of exact order
    ``n_reg`` among the powers of the smallest primitive element.
    """

    def __init__(self, p: int, n_reg: int):
        if not is_prime(p):
            raise BlockforgeError(f"{p} is not prime")
        if n_reg < 1 or n_reg % p == 0:
            raise BlockforgeError(f"n_reg={n_reg} must be a positive integer prime to {p}")
        self.p = p
        self.n_reg = n_reg
        self.f = multiplicative_order(p, n_reg)
        self.modulus = smallest_irreducible(p, self.f)
        self.size = p ** self.f
        self.key = (p, n_reg)
        self.zero = FFElem(self, [0] * self.f)
        self.one = self.element(1)
        self.generator = self._find_generator()
        step = (self.size - 1) // n_reg
        g0 = self.generator ** step
        cands = [g0 ** j for j in range(1, n_reg + 1) if math.gcd(j, n_reg) == 1]
        self.zeta_image = min(cands, key=FFElem.encoding)
        if self.zeta_image.multiplicative_order() != n_reg:  # pragma: no cover
            raise BlockforgeError("zeta image has the wrong order")
        self._zeta_powers = [self.one]
        for _ in range(n_reg - 1):
            self._zeta_powers.append(self._zeta_powers[-1] * self.zeta_image)
        self._lifts: dict[int, list[int]] = {}

    def __repr__(self):
        return f"ReductionContext(p={self.p}, n_reg={self.n_reg}, f={self.f})"

    def element(self, c: int) -> FFElem:
        return FFElem(self, [c % self.p] + [0] * (self.f - 1))

    def from_encoding(self, code: int) -> FFElem:
        digits = []
        for _ in range(self.f):
            code, r = divmod(code, self.p)
            digits.append(r)
        return FFElem(self, digits)

    def from_rational(self, q) -> FFElem:
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise ReductionError(f"non p-integral: {q} has denominator divisible by {self.p}")
        return self.element(q.numerator * pow(q.denominator, -1, self.p))

    def mul(self, a: FFElem, b: FFElem) -> FFElem:
        if self.f == 1:
            return FFElem(self, (a.poly[0] * b.poly[0] % self.p,))
        return FFElem(self, _pmod(_pmul(a.poly, b.poly, self.p), self.modulus, self.p))

    def elements(self):
        return (self.from_encoding(c) for c in range(self.size))

    def _find_generator(self) -> FFElem:
        n = self.size - 1
        rs = prime_factors(n)
        for code in range(1, self.size):
            g = self.from_encoding(code)
            if all(g ** (n // r) != 1 for r in rs):
                return g
        raise BlockforgeError("no primitive element")  # pragma: no cover

    def zeta_power(self, k: int) -> FFElem:
        return self._zeta_powers[k % self.n_reg]

    # -- Galois ring lift, used when p appears in a denominator -----------------

    def _gr_mul(self, a, b, mod):
        return _pmod(_pmul(a, b, mod), self.modulus, mod)

    def _gr_inverse(self, u, prec):
        mod = self.p ** prec
        v = list(FFElem(self, [x % self.p for x in u]).inverse().poly)
        k = 1
        while k < prec:
            k = min(2 * k, prec)
            m = self.p ** k
            uv = self._gr_mul(u, v, m)
            two_minus = [(-x) % m for x in uv]
            two_minus[0] = (two_minus[0] + 2) % m
            v = self._gr_mul(v, two_minus, m)
        return [x % mod for x in v]

    def _gr_eval(self, coeffs, z, mod):
        acc = [0] * self.f
        for c in reversed(coeffs):
            acc = self._gr_mul(acc, z, mod)
            acc[0] = (acc[0] + c) % mod
        return acc

    def lifted_zeta(self, prec: int) -> list[int]:
        """Hensel lift of the zeta image to a root of Phi_n_reg modulo p^prec."""
        hit = self._lifts.get(prec)
        if hit is not None:
            return hit
        phi = cyclotomic_polynomial(self.n_reg)
        dphi = [i * c for i, c in enumerate(phi)][1:]
        z = list(self.zeta_image.poly)
        k = 1
        while k < prec:
            k = min(2 * k, prec)
            mod = self.p ** k
            val = self._gr_eval(phi, z, mod)
            der = self._gr_eval(dphi, z, mod)
            corr = self._gr_mul(val, self._gr_inverse(der, k), mod)
            z = [(a - b) % mod for a, b in zip(z, corr)]
        self._lifts[prec] = z
        return z


@lru_cache(maxsize=None)
def reduction_context(p: int, n_reg: int) -> ReductionContext:
    return ReductionContext(p, n_reg)


def p_regular_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def reduce_mod_p(a: Cyclotomic, ctx: ReductionContext) -> FFElem:
    """Image of ``a`` in F_{p^f} under the fixed prime above ``p``.

    ``a`` must lie in Q(zeta_n_reg) and be integral at the chosen prime.
    Denominators divisible by ``p`` are handled through a Galois-ring lift,
    so elements integral at this prime but not at its conjugates reduce
    correctly.
    """
    try:
        b = change_order(a, ctx.n_reg)
    except NotInSubfield:
        raise ReductionError(f"p-singular field element: {a} is not in Q(zeta_{ctx.n_reg})") from None
    p = ctx.p
    den = 1
    for c in b.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ap = p_valuation(den, p)
    if ap == 0:
        acc = ctx.zero
        for k, c in enumerate(b.coeffs):
            if c:
                acc = acc + ctx.zeta_power(k) * (c.numerator * pow(c.denominator, -1, p))
        return acc
    prec = ap + 1
    mod = p ** prec
    z = ctx.lifted_zeta(prec)
    ints = [int(c * den) for c in b.coeffs]
    img = ctx._gr_eval(ints, z, mod)
    pa = p ** ap
    if any(x % pa for x in img):
        raise ReductionError(f"non p-integral: {a} is not integral at the chosen prime above {p}")
    unit = pow(den // pa, -1, p)
    return FFElem(ctx, [(x // pa) * unit % p for x in img])
