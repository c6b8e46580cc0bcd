"""Ordinary character tables by the Dixon-Schneider method.

Common eigenvectors of the class matrices are found over a prime field
F_q with ``q = 1 mod exponent``; each character value is then lifted to
Q(zeta_e) exactly through its eigenvalue multiplicities, which are small
integers and hence determined by their residues mod q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import Cyclotomic
from .errors import BlockforgeError, TableInconsistent
from .linalg import charpoly_mod, eliminate_mod, nullspace_mod
from .perm import ClassTable, PermGroup, is_prime, prime_factors


@dataclass(frozen=True)
class ClassConstants:
    """``a[i][j][k]`` = #{(x, y) in C_i x C_j : x y = z_k} for fixed z_k in C_k."""

    a: tuple

    def __getitem__(self, idx):
        return self.a[idx]

    def __len__(self):
        return len(self.a)


def class_constants(ct: ClassTable) -> ClassConstants:
    G = ct.group
    k = len(ct)
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    inverses = [x.inverse() for x in G.elements]
    for kk, c in enumerate(ct.classes):
        z = c.representative
        for xi, xinv in enumerate(inverses):
            y = xinv * z
            a[ct.element_class[xi]][ct.class_of(y)][kk] += 1
    return ClassConstants(tuple(tuple(tuple(r) for r in m) for m in a))


class CharacterTable:
    """Irreducible characters as rows of cyclotomic values on classes.

    All values are stored at order ``exponent``. Row 0 is the trivial
    character; rows are sorted by degree, then by value encoding.
    """

    def __init__(self, class_table: ClassTable, exponent: int, values: Sequence[Sequence[Cyclotomic]]):
        self.class_table = class_table
        self.exponent = exponent
        self.values = [[v.embed(exponent) if v.n != exponent else v for v in row] for row in values]
        self.degrees = [int(row[0].rational_value()) for row in self.values]
        self._conj = None
        self._constants = None
        self.cache: dict = {}

    @property
    def constants(self) -> ClassConstants:
        if self._constants is None:
            self._constants = class_constants(self.class_table)
        return self._constants

    @property
    def group(self) -> PermGroup:
        return self.class_table.group

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> list[Cyclotomic]:
        return self.values[i]

    @property
    def conjugates(self) -> list[list[Cyclotomic]]:
        if self._conj is None:
            self._conj = [[v.conjugate() for v in row] for row in self.values]
        return self._conj

    def inner_product(self, f: Sequence[Cyclotomic], g: Sequence[Cyclotomic]) -> Cyclotomic:
        sizes = self.class_table.sizes
        acc = Cyclotomic.rational(0, self.exponent)
        for s, x, y in zip(sizes, f, g):
            if x and y:
                acc = acc + x * y.conjugate() * s
        return acc / self.group.order

    def norm(self, f: Sequence[Cyclotomic]) -> Fraction:
        return self.inner_product(f, f).rational_value()

    def kernel_contains(self, chi: int, H: PermGroup) -> bool:
        """Whether ``H`` lies in the kernel of character ``chi``."""
        ct = self.class_table
        deg = self.degrees[chi]
        classes = {ct.class_of(h) for h in H.elements}
        return all(self.values[chi][c] == deg for c in classes)

    def is_trivial_row(self, chi: int) -> bool:
        return all(v == 1 for v in self.values[chi])

    def check(self) -> None:
        """Raise :class:`TableInconsistent` unless both orthogonality relations hold."""
        check_orthogonality(self)


def check_orthogonality(tbl: CharacterTable, column_first: bool = True) -> None:
    order = tbl.group.order
    sizes = tbl.class_table.sizes
    k = len(sizes)
    if len(tbl.values) != k:
        raise TableInconsistent(f"table has {len(tbl.values)} rows but {k} classes")
    conj = [[v.conjugate() for v in row] for row in tbl.values]

    def columns():
        for i in range(k):
            cent = order // sizes[i]
            for j in range(i, k):
                acc = Cyclotomic.rational(0, tbl.exponent)
                for r in range(k):
                    x, y = tbl.values[r][i], conj[r][j]
                    if x and y:
                        acc = acc + x * y
                if acc != (cent if i == j else 0):
                    raise TableInconsistent(f"column orthogonality violated (classes {i},{j})")

    def rows():
        for r in range(k):
            for s in range(r, k):
                acc = Cyclotomic.rational(0, tbl.exponent)
                for j in range(k):
                    x, y = tbl.values[r][j], conj[s][j]
                    if x and y:
                        acc = acc + x * y * sizes[j]
                if acc != (order if r == s else 0):
                    raise TableInconsistent(f"row orthogonality violated (chars {r},{s})")

    if column_first:
        columns()
        rows()
    else:
        rows()
        columns()
    for r, row in enumerate(tbl.values):
        for v in row:
            if not v.is_integral():
                raise TableInconsistent(f"character {r} has a non-integral value {v}")
    if sum(d * d for d in tbl.degrees) != order:
        raise TableInconsistent("degree squares do not sum to the group order")


def row_sort_key(row: Sequence[Cyclotomic]) -> tuple:
    """Canonical row order: degree, trivial character first, then value encoding."""
    deg = row[0].rational_value()
    trivial = all(v == 1 for v in row)
    return (deg, not trivial, tuple(v.sort_key() for v in row))


# -- Dixon-Schneider ---------------------------------------------------------------

def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime ``q = 1 mod exponent`` with ``q > 2 sqrt(order)``."""
    q = exponent + 1
    while not (is_prime(q) and q * q > 4 * order):
        q += exponent
    return q


def _primitive_root(q: int) -> int:
    rs = prime_factors(q - 1)
    for g in range(2, q + 1):
        if all(pow(g, (q - 1) // r, q) != 1 for r in rs):
            return g
    return 1  # q == 2


def _split(space: list[list[int]], M: list[list[int]], q: int) -> list[list[list[int]]]:
    basis, piv = eliminate_mod(space, q)
    d = len(basis)
    images = [[sum(row[t] * w[t] for t in range(len(w)) if w[t]) % q for row in M] for w in basis]
    A = [[images[r][piv[s]] for r in range(d)] for s in range(d)]
    cp = charpoly_mod(A, q)
    roots = []
    for lam in range(q):
        acc = 0
        for c in reversed(cp):
            acc = (acc * lam + c) % q
        if acc == 0:
            roots.append(lam)
    pieces = []
    total = 0
    for lam in roots:
        shifted = [[(A[s][r] - (lam if s == r else 0)) % q for r in range(d)] for s in range(d)]
        coords = nullspace_mod(shifted, q)
        if not coords:
            continue
        total += len(coords)
        pieces.append([[sum(x[r] * basis[r][t] for r in range(d)) % q for t in range(len(basis[0]))]
                       for x in coords])
    if total != d:
        raise TableInconsistent("class matrix is not diagonalizable over the splitting prime")
    return pieces


def character_table(G: PermGroup) -> CharacterTable:
    """Ordinary character table of ``G``."""
    ct = G.class_table
    k = len(ct)
    order = G.order
    e = G.exponent
    q = dixon_prime(e, order)
    consts = class_constants(ct)
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for i in range(1, k):
        if all(len(s) == 1 for s in spaces):
            break
        M = [[consts[i][j][kk] % q for kk in range(k)] for j in range(k)]
        nxt = []
        for s in spaces:
            nxt.extend([s] if len(s) == 1 else _split(s, M, q))
        spaces = nxt
    if len(spaces) != k or any(len(s) != 1 for s in spaces):
        raise TableInconsistent("class matrices did not separate all characters")

    sizes = ct.sizes
    inv_cls = ct.inverse_map
    root = _primitive_root(q)
    z_e = pow(root, (q - 1) // e, q)
    isqrt = math.isqrt(order)
    rows = []
    for (w,) in spaces:
        if w[0] == 0:
            raise TableInconsistent("eigenvector vanishes on the identity class")
        inv0 = pow(w[0], -1, q)
        w = [x * inv0 % q for x in w]
        s = sum(w[j] * w[inv_cls[j]] * pow(sizes[j], -1, q) for j in range(k)) % q
        target = order * pow(s, -1, q) % q
        deg = next((d for d in range(1, isqrt + 1) if d * d % q == target), None)
        if deg is None:
            raise TableInconsistent("no admissible degree for an eigenvector")
        theta = [w[j] * deg * pow(sizes[j], -1, q) % q for j in range(k)]
        row = []
        for j, c in enumerate(ct.classes):
            o = c.element_order
            z_o = pow(z_e, e // o, q)
            inv_o = pow(o, -1, q)
            terms = {}
            for t in range(o):
                acc = 0
                zt = pow(z_o, (-t) % o, q)
                zs = 1
                for s_ in range(o):
                    acc += theta[ct.power_map(j, s_)] * zs
                    zs = zs * zt % q
                m = acc * inv_o % q
                if m > deg:
                    raise TableInconsistent("eigenvalue multiplicity exceeds the degree")
                if m:
                    terms[t * (e // o)] = m
            row.append(Cyclotomic.from_terms(e, terms))
        rows.append(row)

    rows.sort(key=row_sort_key)
    tbl = CharacterTable(ct, e, rows)
    tbl._constants = consts
    check_orthogonality(tbl)
    return tbl


# -- restriction, induction, decomposition ----------------------------------------

def _check_subgroup(G: PermGroup, H: PermGroup) -> None:
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise BlockforgeError("not a subgroup: restriction and induction need H <= G")


def restrict_to_subgroup(tbl: CharacterTable, chi, tbl_H: CharacterTable | ClassTable) -> list[Cyclotomic]:
    """Restrict row ``chi`` (or an explicit class function) of ``tbl`` to ``H``."""
    ct_H = tbl_H.class_table if isinstance(tbl_H, CharacterTable) else tbl_H
    _check_subgroup(tbl.group, ct_H.group)
    row = tbl.values[chi] if isinstance(chi, int) else list(chi)
    ct = tbl.class_table
    return [row[ct.class_of(c.representative)] for c in ct_H.classes]


def decompose(classfn: Sequence[Cyclotomic], tbl_H: CharacterTable) -> list[int]:
    """Multiplicities of each irreducible of ``tbl_H`` in a character."""
    mults = []
    for chi in range(len(tbl_H)):
        ip = tbl_H.inner_product(classfn, tbl_H.values[chi])
        if not ip.is_rational():
            raise TableInconsistent("inner product with an irreducible is not rational")
        v = ip.rational_value()
        if v.denominator != 1 or v < 0:
            raise TableInconsistent(f"class function is not a character (multiplicity {v})")
        mults.append(int(v))
    return mults


def induce_from_subgroup(tbl_H: CharacterTable, phi, G: PermGroup | CharacterTable) -> list[Cyclotomic]:
    """Induced class function on ``G``.

    Evaluates (1/|H|) sum_{x in G} phi(x g x^-1) class by class: the sum
    equals |C_G(g)| times the sum of phi over ``g^G`` intersected with H.
    """
    ct = G.class_table
    G = ct.group
    ct_H = tbl_H.class_table
    H = ct_H.group
    _check_subgroup(G, H)
    row = tbl_H.values[phi] if isinstance(phi, int) else list(phi)
    e = tbl_H.exponent
    sums = [Cyclotomic.rational(0, e) for _ in range(len(ct))]
    for d, cls in enumerate(ct_H.classes):
        gc = ct.class_of(cls.representative)
        sums[gc] = sums[gc] + row[d] * cls.size
    return [sums[i] * ct.centralizer_order(i) / H.order for i in range(len(ct))]


_TABLE_CACHE: dict = {}


def table_for(G: PermGroup) -> CharacterTable:
    """Character table of ``G``, memoized on the element set and name."""
    key = (G, G.name)
    tbl = _TABLE_CACHE.get(key)
    if tbl is None:
        tbl = _TABLE_CACHE[key] = character_table(G)
    return tbl
