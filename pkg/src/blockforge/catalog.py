"""Built-in small groups with named normal subgroups and golden data."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BlockforgeError
from .perm import Perm, PermGroup, group_from_generators


@dataclass(frozen=True)
class Expected:
    order: int
    classes: int
    degrees: tuple[int, ...]
    # prime -> sorted block sizes (number of characters per block)
    block_sizes: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[Perm, ...]
    normal_subgroups: dict
    expected: Expected | None = None

    def group(self) -> PermGroup:
        return load_catalog_group(self.name)

    def normal(self, name: str) -> PermGroup:
        return load_catalog_normal(self.name, name)


def _c(degree, *cycles):
    return Perm.from_cycles(degree, *cycles)


def _cyclic(n: int) -> CatalogEntry:
    # C_n = C_{p^a} x C_m has m blocks of p^a characters at each p
    sizes = {}
    m = n
    p = 2
    while m > 1:
        if m % p == 0:
            pa = 1
            while m % p == 0:
                m //= p
                pa *= p
            sizes[p] = tuple([pa] * (n // pa))
        p += 1
    return CatalogEntry(f"C{n}", n, (_c(n, tuple(range(1, n + 1))),), {},
                        Expected(n, n, (1,) * n, sizes))


def _sl23_generators():
    points = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(points)}

    def perm(m):
        (a, b), (c, d) = m
        return Perm(index[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in points)

    return perm, ((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 2), (1, 0)), ((1, 1), (1, 2))


def _sl23() -> CatalogEntry:
    perm, s, t, i, j = _sl23_generators()
    return CatalogEntry("SL(2,3)", 8, (perm(s), perm(t)), {"Q8": (perm(i), perm(j))},
                        Expected(24, 7, (1, 1, 1, 2, 2, 2, 3), {2: (7,), 3: (1, 3, 3)}))


def _entries() -> list[CatalogEntry]:
    out = [_cyclic(n) for n in range(2, 13)]
    out += [
        CatalogEntry("K4", 4, (_c(4, (1, 2), (3, 4)), _c(4, (1, 3), (2, 4))), {},
                     Expected(4, 4, (1, 1, 1, 1), {2: (4,)})),
        CatalogEntry("D4", 4, (_c(4, (1, 2, 3, 4)), _c(4, (1, 3))), {"C4": (_c(4, (1, 2, 3, 4)),)},
                     Expected(8, 5, (1, 1, 1, 1, 2), {2: (5,)})),
        CatalogEntry("D5", 5, (_c(5, (1, 2, 3, 4, 5)), _c(5, (2, 5), (3, 4))), {"C5": (_c(5, (1, 2, 3, 4, 5)),)},
                     Expected(10, 4, (1, 1, 2, 2), {2: (1, 1, 2), 5: (4,)})),
        CatalogEntry("Q8", 8, (_c(8, (1, 2, 3, 4), (5, 6, 7, 8)), _c(8, (1, 5, 3, 7), (2, 8, 4, 6))),
                     {"C4": (_c(8, (1, 2, 3, 4), (5, 6, 7, 8)),)},
                     Expected(8, 5, (1, 1, 1, 1, 2), {2: (5,)})),
        CatalogEntry("S3", 3, (_c(3, (1, 2, 3)), _c(3, (1, 2))), {"C3": (_c(3, (1, 2, 3)),)},
                     Expected(6, 3, (1, 1, 2), {2: (1, 2), 3: (3,)})),
        CatalogEntry("S4", 4, (_c(4, (1, 2, 3, 4)), _c(4, (1, 2))),
                     {"A4": (_c(4, (1, 2, 3)), _c(4, (1, 2), (3, 4))),
                      "K4": (_c(4, (1, 2), (3, 4)), _c(4, (1, 3), (2, 4)))},
                     Expected(24, 5, (1, 1, 2, 3, 3), {2: (5,), 3: (1, 1, 3)})),
        CatalogEntry("A4", 4, (_c(4, (1, 2, 3)), _c(4, (1, 2), (3, 4))),
                     {"K4": (_c(4, (1, 2), (3, 4)), _c(4, (1, 3), (2, 4)))},
                     Expected(12, 4, (1, 1, 1, 3), {2: (4,), 3: (1, 3)})),
        CatalogEntry("A5", 5, (_c(5, (1, 2, 3, 4, 5)), _c(5, (1, 2, 3))), {},
                     Expected(60, 5, (1, 3, 3, 4, 5), {2: (1, 4), 3: (1, 1, 3), 5: (1, 4)})),
        _sl23(),
        CatalogEntry("C7:C3", 7, (_c(7, (1, 2, 3, 4, 5, 6, 7)), _c(7, (2, 3, 5), (4, 7, 6))),
                     {"C7": (_c(7, (1, 2, 3, 4, 5, 6, 7)),)},
                     Expected(21, 5, (1, 1, 1, 3, 3), {3: (1, 1, 3), 7: (5,)})),
        CatalogEntry("C5:C4", 5, (_c(5, (1, 2, 3, 4, 5)), _c(5, (2, 3, 5, 4))),
                     {"C5": (_c(5, (1, 2, 3, 4, 5)),),
                      "D5": (_c(5, (1, 2, 3, 4, 5)), _c(5, (2, 5), (3, 4)))},
                     Expected(20, 5, (1, 1, 1, 1, 4), {2: (1, 4), 5: (5,)})),
        CatalogEntry("C3xS3", 6, (_c(6, (1, 2, 3)), _c(6, (4, 5, 6)), _c(6, (4, 5))),
                     {"C3xC3": (_c(6, (1, 2, 3)), _c(6, (4, 5, 6)))},
                     Expected(18, 9, (1, 1, 1, 1, 1, 1, 2, 2, 2), {2: (1, 1, 1, 2, 2, 2), 3: (9,)})),
        CatalogEntry("D15", 15, (_c(15, tuple(range(1, 16))),
                                 _c(15, (2, 15), (3, 14), (4, 13), (5, 12), (6, 11), (7, 10), (8, 9))),
                     {"C15": (_c(15, tuple(range(1, 16))),)},
                     Expected(30, 9, (1, 1, 2, 2, 2, 2, 2, 2, 2), {2: (1,) * 7 + (2,), 3: (3, 3, 3),
                                                                   5: (4, 5)})),
    ]
    return out


_ENTRIES = {e.name: e for e in _entries()}


def catalog() -> list[CatalogEntry]:
    return list(_ENTRIES.values())


def catalog_names() -> list[str]:
    return list(_ENTRIES)


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise BlockforgeError(f"unknown catalog group {name!r}") from None


@lru_cache(maxsize=None)
def load_catalog_group(name: str) -> PermGroup:
    e = entry(name)
    return group_from_generators(e.degree, e.generators, name=e.name)


@lru_cache(maxsize=None)
def load_catalog_normal(group: str, normal: str) -> PermGroup:
    e = entry(group)
    if normal not in e.normal_subgroups:
        raise BlockforgeError(f"{group} has no named normal subgroup {normal!r}")
    return load_catalog_group(group).subgroup(e.normal_subgroups[normal], name=normal)


def catalog_pairs() -> list[tuple[str, str]]:
    """All (group, normal subgroup) names in catalog order."""
    return [(e.name, n) for e in catalog() for n in e.normal_subgroups]
