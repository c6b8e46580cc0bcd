"""Permutation groups by full element enumeration.

Every group is stored with its complete, lexicographically sorted element
list; that is all the downstream character and block machinery needs for
desk-scale groups. Points are 0-based internally, 1-based in all text I/O.

Products compose left to right: ``(a * b)(i) = b(a(i))``, and conjugation
is ``x ** g == g**-1 * x * g``-style via :meth:`Perm.conj`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BlockforgeError, GroupTooLarge

DEFAULT_CAP = 20000

_raw = tuple.__new__


def default_cap() -> int:
    env = os.environ.get("BLOCKFORGE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise BlockforgeError(f"BLOCKFORGE_CAP is not an integer: {env!r}") from None
    return DEFAULT_CAP


class Perm(tuple):
    """A permutation of ``range(degree)`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise BlockforgeError(f"not a bijection: {images}")
        return _raw(cls, images)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Perm":
        """Build from 1-based images ``i1 i2 ... iN``."""
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        """Build from 1-based cycles, e.g. ``Perm.from_cycles(4, (1, 2, 3))``."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree or pt in seen:
                    raise BlockforgeError(f"bad cycle {cyc} on {degree} points")
                seen.add(pt)
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a - 1] = b - 1
        return _raw(cls, img)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return _raw(cls, range(degree))

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":
        return _raw(Perm, [other[i] for i in self])

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return _raw(Perm, inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, g: "Perm") -> "Perm":
        """Return ``g^-1 * self * g``."""
        ginv = g.inverse()
        return _raw(Perm, [g[self[ginv[i]]] for i in range(len(self))])

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    @property
    def order(self) -> int:
        n = 1
        for c in self.cycle_lengths():
            n = n * c // math.gcd(n, c)
        return n

    def cycle_lengths(self) -> list[int]:
        seen = [False] * len(self)
        lengths = []
        for start in range(len(self)):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self[i]
                length += 1
            lengths.append(length)
        return lengths

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                seen[start] = True
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self[i]
            out.append(tuple(cyc))
        return out

    def images1(self) -> list[int]:
        return [i + 1 for i in self]

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    # tuple's repetition/concatenation make no sense here
    __rmul__ = None
    __add__ = None


def _closure(degree: int, gens: Sequence[Perm], cap: int, seed: Iterable[Perm] = ()) -> set:
    ident = Perm.identity(degree)
    elements = {ident, *seed}
    frontier = list(elements)
    gens = [g for g in gens if not g.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise GroupTooLarge(f"group too large: more than {cap} elements")
        frontier = nxt
    return elements


class PermGroup:
    """A finite permutation group with all elements enumerated.

    ``elements`` is sorted lexicographically on image tuples, so element
    indices are canonical for a given element set.
    """

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Iterable[Perm],
                 name: str | None = None, cap: int | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.order = len(self.elements)
        self.name = name
        self.cap = default_cap() if cap is None else cap

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def subgroup(self, gens: Iterable[Perm], name: str | None = None) -> "PermGroup":
        gens = [Perm(g) for g in gens]
        for g in gens:
            if g not in self.index:
                raise BlockforgeError(f"{g!r} is not an element of {self!r}")
        elements = _closure(self.degree, gens, self.cap)
        return PermGroup(self.degree, gens, elements, name=name, cap=self.cap)

    def subgroup_from_elements(self, elements: Iterable[Perm], name: str | None = None) -> "PermGroup":
        """Wrap an element set already known to be a subgroup."""
        elements = sorted(set(elements))
        return PermGroup(self.degree, _small_generating_set(self.degree, elements), elements,
                         name=name, cap=self.cap)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(x in other.index for x in self.elements)

    def normal_closure(self, subset: Iterable[Perm]) -> "PermGroup":
        gens = list(subset)
        current = _closure(self.degree, gens, self.cap)
        changed = True
        while changed:
            changed = False
            for h in list(gens):
                for g in self.generators:
                    y = h.conj(g)
                    if y not in current:
                        gens.append(y)
                        current = _closure(self.degree, gens, self.cap)
                        changed = True
        return self.subgroup_from_elements(current)

    def derived_subgroup(self) -> "PermGroup":
        comms = []
        gens = self.generators
        for a in gens:
            for b in gens:
                c = a.inverse() * b.inverse() * a * b
                if not c.is_identity():
                    comms.append(c)
        return self.normal_closure(comms)

    @cached_property
    def class_table(self) -> "ClassTable":
        return conjugacy_classes(self)

    @cached_property
    def exponent(self) -> int:
        e = 1
        for x in self.elements:
            o = x.order
            e = e * o // math.gcd(e, o)
        return e


def _small_generating_set(degree: int, elements: Sequence[Perm]) -> list[Perm]:
    gens: list[Perm] = []
    span = {Perm.identity(degree)}
    for x in elements:
        if x not in span:
            gens.append(x)
            span = _closure(degree, gens, len(elements) + 1)
    return gens


def group_from_generators(degree: int, gens: Sequence[Sequence[int] | Perm], cap: int | None = None,
                          name: str | None = None) -> PermGroup:
    """Close ``gens`` under multiplication.

    Raw generators are accepted as 0-based image sequences or :class:`Perm`.
    """
    cap = default_cap() if cap is None else cap
    perms = []
    for g in gens:
        p = Perm(g)
        if p.degree != degree:
            raise BlockforgeError(f"degree mismatch: generator {p!r} has degree {p.degree}, expected {degree}")
        perms.append(p)
    elements = _closure(degree, perms, cap)
    return PermGroup(degree, perms, elements, name=name, cap=cap)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Perm
    members: tuple[int, ...]
    size: int
    element_order: int


class ClassTable:
    """Conjugacy classes in canonical order with power and inverse maps.

    Classes are ordered by (element order, class size, least member index),
    so class 0 is always the identity.
    """

    def __init__(self, group: PermGroup, classes: list[ConjugacyClass]):
        self.group = group
        self.classes = classes
        self.element_class = [0] * group.order
        for ci, c in enumerate(classes):
            for m in c.members:
                self.element_class[m] = ci
        self._power: dict[tuple[int, int], int] = {}
        self.inverse_map = [self.class_of(c.representative.inverse()) for c in classes]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, x: Perm) -> int:
        return self.element_class[self.group.index[x]]

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    @property
    def representatives(self) -> list[Perm]:
        return [c.representative for c in self.classes]

    def power_map(self, i: int, s: int) -> int:
        """Class index of ``rep_i ** s``."""
        c = self.classes[i]
        s %= c.element_order
        key = (i, s)
        hit = self._power.get(key)
        if hit is None:
            hit = self._power[key] = self.class_of(c.representative ** s)
        return hit

    def centralizer_order(self, i: int) -> int:
        return self.group.order // self.classes[i].size


def conjugacy_classes(G: PermGroup) -> ClassTable:
    """Conjugation orbits of ``G``, computed by orbit closure under the generators."""
    unseen = [True] * G.order
    raw = []
    gens = G.generators
    for i, x in enumerate(G.elements):
        if not unseen[i]:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = y.conj(g)
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        members = sorted(G.index[y] for y in orbit)
        for m in members:
            unseen[m] = False
        raw.append(members)
    raw.sort(key=lambda ms: (G.elements[ms[0]].order, len(ms), ms[0]))
    classes = [ConjugacyClass(G.elements[ms[0]], tuple(ms), len(ms), G.elements[ms[0]].order)
               for ms in raw]
    return ClassTable(G, classes)


def centralizer(G: PermGroup, x: Perm) -> PermGroup:
    if x not in G:
        raise BlockforgeError(f"{x!r} is not an element of the group")
    return G.subgroup_from_elements(g for g in G.elements if x * g == g * x)


@dataclass(frozen=True)
class SubgroupTest:
    is_subgroup: bool
    is_normal: bool
    index: int | None


def subgroup_tests(G: PermGroup, H: PermGroup) -> SubgroupTest:
    if H.degree != G.degree or not H.is_subgroup_of(G):
        return SubgroupTest(False, False, None)
    normal = all(h.conj(g) in H for h in H.generators for g in G.generators)
    return SubgroupTest(True, normal, G.order // H.order)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    return subgroup_tests(G, H).is_normal


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == [p]


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _normalizes(g: Perm, H: PermGroup) -> bool:
    return all(h.conj(g) in H for h in H.generators)


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow ``p``-subgroup, grown one normalizing ``p``-element at a time.

    If ``P`` is not yet Sylow then ``p`` divides ``|N_G(P) : P|``, so a
    ``p``-element of the normalizer outside ``P`` always exists.
    """
    if not is_prime(p):
        raise BlockforgeError(f"{p} is not prime")
    target = p ** p_valuation(G.order, p)
    start = None
    best = 1
    for x in G.elements:
        o = x.order
        q = p ** p_valuation(o, p)
        if q > best:
            best, start = q, x ** (o // q)
    if start is None:
        return G.subgroup([])
    P = G.subgroup([start])
    while P.order < target:
        for g in G.elements:
            if g not in P and _is_p_power(g.order, p) and _normalizes(g, P):
                P = G.subgroup(list(P.generators) + [g])
                break
        else:  # pragma: no cover - excluded by Sylow's theorem
            raise BlockforgeError("Sylow search stalled")
    return P


def o_p_prime(G: PermGroup, p: int) -> PermGroup:
    """Largest normal subgroup of order prime to ``p``."""
    ct = G.class_table
    pieces: list[Perm] = []
    for c in ct.classes:
        if c.element_order % p == 0 or c.element_order == 1:
            continue
        if pieces and c.representative in G.subgroup(pieces):
            continue
        closure = G.normal_closure([c.representative])
        if closure.order % p != 0:
            pieces.append(c.representative)
    if not pieces:
        return G.subgroup([])
    return G.normal_closure(pieces)


@dataclass(frozen=True)
class StructureReport:
    is_solvable: bool
    is_nilpotent: bool
    pi: frozenset


def is_solvable(G: PermGroup) -> bool:
    H = G
    while H.order > 1:
        D = H.derived_subgroup()
        if D.order == H.order:
            return False
        H = D
    return True


def quotient_is_solvable(G: PermGroup, N: PermGroup) -> bool:
    """Whether ``G/N`` is solvable, via the derived series of ``G`` falling into ``N``."""
    H = G
    while not H.is_subgroup_of(N):
        D = H.derived_subgroup()
        if D.order == H.order:
            return False
        H = D
    return True


def is_nilpotent(G: PermGroup) -> bool:
    return all(is_normal(G, sylow_subgroup(G, p)) for p in prime_factors(G.order))


def structure_predicates(G: PermGroup) -> StructureReport:
    return StructureReport(is_solvable(G), is_nilpotent(G), frozenset(prime_factors(G.order)))
