"""p-blocks of a group from its character table.

Pipeline: central characters, linkage of characters on p-regular classes,
block idempotents reduced mod p, the partition of conjugacy classes into
per-block sets Omega_B, and defect groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .chartable import CharacterTable, ClassConstants
from .cyclotomic import Cyclotomic
from .errors import PartitionFailure, ReductionError, TableInconsistent
from .finite_field import FFElem, ReductionContext, p_regular_part, reduce_mod_p, reduction_context
from .linalg import det, independent_columns, rank
from .perm import PermGroup, centralizer, is_prime, p_valuation, sylow_subgroup

DEFAULT_NODE_BUDGET = 20000


@dataclass(frozen=True)
class CentralCharacterTable:
    """``omega[chi][C] = |C| chi(x_C) / chi(1)``."""

    table: CharacterTable
    omega: tuple

    def __getitem__(self, chi):
        return self.omega[chi]


def central_characters(tbl: CharacterTable) -> CentralCharacterTable:
    hit = tbl.cache.get("omega")
    if hit is not None:
        return hit
    sizes = tbl.class_table.sizes
    rows = []
    for chi, row in enumerate(tbl.values):
        deg = tbl.degrees[chi]
        out = []
        for c, v in enumerate(row):
            w = v * sizes[c] / deg
            if not w.is_integral():
                raise TableInconsistent(f"integrality violation: omega[{chi}][{c}] = {w}")
            out.append(w)
        rows.append(tuple(out))
    cc = tbl.cache["omega"] = CentralCharacterTable(tbl, tuple(rows))
    return cc


@dataclass
class Block:
    index: int
    p: int
    char_indices: tuple[int, ...]
    defect: int
    is_principal: bool
    omega_star: list = field(default_factory=list)
    idem_coeffs: list = field(default_factory=list)
    class_set: tuple[int, ...] = ()
    defect_class: int | None = None
    defect_group: PermGroup | None = None

    @property
    def k(self) -> int:
        return len(self.char_indices)


@dataclass
class BlockSystem:
    p: int
    table: CharacterTable
    context: ReductionContext
    blocks: list[Block]
    class_assignment: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def group(self) -> PermGroup:
        return self.table.group

    @property
    def principal(self) -> Block:
        return self.blocks[0]

    def block_of_char(self, chi: int) -> Block:
        for B in self.blocks:
            if chi in B.char_indices:
                return B
        raise KeyError(chi)

    def regular_classes(self) -> list[int]:
        return [i for i, c in enumerate(self.table.class_table.classes) if c.element_order % self.p]


def _regular_classes(tbl: CharacterTable, p: int) -> list[int]:
    return [i for i, c in enumerate(tbl.class_table.classes) if c.element_order % p]


def block_partition_irr(tbl: CharacterTable, p: int) -> BlockSystem:
    """Blocks of ``Irr(G)`` by linkage of reduced central characters on p-regular classes."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    omega = central_characters(tbl)
    ctx = reduction_context(p, p_regular_part(tbl.exponent, p))
    regular = _regular_classes(tbl, p)
    k = len(tbl)
    groups: dict[tuple, list[int]] = {}
    stars = []
    for chi in range(k):
        star = [None] * k
        for c in regular:
            try:
                star[c] = reduce_mod_p(omega[chi][c], ctx)
            except ReductionError as exc:
                raise TableInconsistent(f"central character does not reduce: {exc}") from None
        stars.append(star)
        key = tuple(star[c].encoding() for c in regular)
        groups.setdefault(key, []).append(chi)
    nu = p_valuation(tbl.group.order, p)
    trivial = next(chi for chi in range(k) if tbl.is_trivial_row(chi))
    raw = []
    for chars in groups.values():
        d = max(nu - p_valuation(tbl.degrees[chi], p) for chi in chars)
        raw.append((trivial not in chars, -d, min(chars), tuple(chars), d))
    raw.sort()
    blocks = [Block(i, p, chars, d, not nonprincipal, omega_star=stars[chars[0]])
              for i, (nonprincipal, _, _, chars, d) in enumerate(raw)]
    return BlockSystem(p, tbl, ctx, blocks)


def osima_linkage(tbl: CharacterTable, p: int) -> list[tuple[int, ...]]:
    """Character partition from the p-regular character sums.

    ``chi`` and ``psi`` are joined when the sum over p-regular ``x`` of
    ``chi(x) psi(x^-1)`` is nonzero; the blocks are the connected
    components. Works in characteristic zero, so it is an independent
    cross-check of the reduced central character criterion.
    """
    ct = tbl.class_table
    regular = _regular_classes(tbl, p)
    k = len(tbl)
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(k):
        for b in range(a + 1, k):
            if find(a) == find(b):
                continue
            acc = Cyclotomic.rational(0, tbl.exponent)
            for c in regular:
                acc = acc + tbl.values[a][c] * tbl.values[b][ct.inverse_map[c]] * ct.sizes[c]
            if acc:
                parent[find(a)] = find(b)
    comps: dict[int, list[int]] = {}
    for a in range(k):
        comps.setdefault(find(a), []).append(a)
    return sorted(tuple(v) for v in comps.values())


def block_idempotent_mod_p(sys: BlockSystem, B: Block, tbl: CharacterTable | None = None) -> list[FFElem]:
    """Reduced coefficients of ``e_B`` in the class-sum basis."""
    tbl = tbl or sys.table
    ct = tbl.class_table
    ctx = sys.context
    order = tbl.group.order
    coeffs = [ctx.zero] * len(ct)
    for c in _regular_classes(tbl, sys.p):
        inv = ct.inverse_map[c]
        acc = Cyclotomic.rational(0, tbl.exponent)
        for chi in B.char_indices:
            acc = acc + tbl.values[chi][inv] * tbl.degrees[chi]
        try:
            coeffs[c] = reduce_mod_p(acc / order, ctx)
        except ReductionError as exc:
            raise TableInconsistent(f"non p-integral coefficient: {exc}") from None
    B.idem_coeffs = coeffs
    return coeffs


def center_product(x: Sequence, y: Sequence, constants: ClassConstants, zero) -> list:
    """Product in Z(FG) of two elements given in the class-sum basis."""
    k = len(x)
    out = [zero] * k
    for d in range(k):
        if not x[d]:
            continue
        for e in range(k):
            if not y[e]:
                continue
            xy = x[d] * y[e]
            row = constants[d][e]
            for c in range(k):
                if row[c]:
                    out[c] = out[c] + xy * row[c]
    return out


def _coordinate_rows(B: Block, constants: ClassConstants, ctx: ReductionContext) -> list[list[FFElem]]:
    """Row C holds the coordinates of ``e_B * C^`` in the class-sum basis."""
    k = len(constants)
    rows = []
    for c in range(k):
        row = [ctx.zero] * k
        for d, a in enumerate(B.idem_coeffs):
            if not a:
                continue
            consts = constants[d][c]
            for e in range(k):
                if consts[e]:
                    row[e] = row[e] + a * consts[e]
        rows.append(row)
    return rows


@dataclass(frozen=True)
class PartitionAction:
    """A finite group acting compatibly on classes and on blocks.

    ``class_perms[g][c]`` and ``block_perms[g][b]`` are the images under the
    same element ``g``; the list of elements must be closed (a full group of
    permutations, as obtained from a transversal of ``G/N``).
    """

    class_perms: tuple
    block_perms: tuple


@dataclass
class _Unit:
    rep: int
    pieces: list[frozenset]
    images: list[tuple[int, tuple]]


def _units(nblocks: int, nclasses: int, action: PartitionAction | None) -> list[_Unit]:
    ident = tuple(range(nclasses))
    if action is None:
        return [_Unit(b, [frozenset([c]) for c in range(nclasses)], [(b, ident)]) for b in range(nblocks)]
    units = []
    seen = set()
    for b in range(nblocks):
        if b in seen:
            continue
        stab = [cp for cp, bp in zip(action.class_perms, action.block_perms) if bp[b] == b]
        pieces = []
        covered = set()
        for c in range(nclasses):
            if c in covered:
                continue
            orb = frozenset(cp[c] for cp in stab)
            covered |= orb
            pieces.append(orb)
        images = {}
        for cp, bp in zip(action.class_perms, action.block_perms):
            images.setdefault(bp[b], tuple(cp))
        seen |= set(images)
        units.append(_Unit(b, pieces, sorted(images.items())))
    return units


def _search_partition(A, cols, ks, units, one, budget):
    k = len(A)
    nb = len(cols)
    nodes = [0]

    def tick():
        nodes[0] += 1
        if nodes[0] > budget:
            raise PartitionFailure(f"partition failure: search budget of {budget} nodes exhausted")

    def independent(rows, b):
        sub = [[A[r][c] for c in cols[b]] for r in rows]
        return rank(sub, one) == len(rows)

    def rest_ok(used, done):
        rows = [r for r in range(k) if r not in used]
        if not rows:
            return True
        cs = [c for b in range(nb) if b not in done for c in cols[b]]
        if len(cs) != len(rows):
            return False
        return bool(det([[A[r][c] for c in cs] for r in rows], one))

    def candidates(pieces, b, need, start, chosen):
        if need == 0:
            yield chosen
            return
        for i in range(start, len(pieces)):
            pc = pieces[i]
            if len(pc) > need:
                continue
            trial = chosen + sorted(pc)
            tick()
            if independent(trial, b):
                yield from candidates(pieces, b, need - len(pc), i + 1, trial)

    def dfs(ui, used, done, out):
        if ui == len(units):
            return True
        u = units[ui]
        pieces = sorted((pc for pc in u.pieces if not pc & used), key=min)
        for S in candidates(pieces, u.rep, ks[u.rep], 0, []):
            imgs = {}
            taken = set(used)
            ok = True
            for b2, perm in u.images:
                img = frozenset(perm[c] for c in S)
                if img & taken:
                    ok = False
                    break
                taken |= img
                imgs[b2] = img
            if not ok:
                continue
            ndone = done | set(imgs)
            if not rest_ok(taken, ndone):
                continue
            out.update(imgs)
            if dfs(ui + 1, frozenset(taken), ndone, out):
                return True
            for b2 in imgs:
                del out[b2]
        return False

    out: dict[int, frozenset] = {}
    if not dfs(0, frozenset(), frozenset(), out):
        raise PartitionFailure("partition failure: no admissible class selection")
    return out


def class_block_partition(sys: BlockSystem, tbl: CharacterTable | None = None,
                          constants: ClassConstants | None = None,
                          action: PartitionAction | None = None,
                          budget: int = DEFAULT_NODE_BUDGET) -> list[int]:
    """Assign ``k(B)`` classes to each block so ``{e_B C^ : C in Omega_B}`` is a basis of ``e_B Z(FG)``.

    Classes are chosen in canonical order, block by block, keeping the
    complementary minor of the coordinate matrix nonsingular so the
    remaining blocks can always be completed. With ``action`` the result is
    also equivariant: Omega of an image block is the image of Omega.
    """
    tbl = tbl or sys.table
    constants = constants or tbl.constants
    ctx = sys.context
    k = len(constants)
    coords = []
    cols = []
    for B in sys.blocks:
        if not B.idem_coeffs:
            block_idempotent_mod_p(sys, B, tbl)
        rows = _coordinate_rows(B, constants, ctx)
        coords.append(rows)
        piv = independent_columns(rows, ctx.one)
        if len(piv) != B.k:
            raise PartitionFailure(f"partition failure: block {B.index} has rank {len(piv)} != k(B) = {B.k}")
        cols.append(piv)
    offsets = []
    n = 0
    for piv in cols:
        offsets.append(list(range(n, n + len(piv))))
        n += len(piv)
    if n != k:
        raise PartitionFailure("partition failure: block ranks do not add up to the class number")
    A = [[coords[b][c][e] for b in range(len(cols)) for e in cols[b]] for c in range(k)]
    units = _units(len(sys.blocks), k, action)
    chosen = _search_partition(A, offsets, [B.k for B in sys.blocks], units, ctx.one, budget)
    assignment = [-1] * k
    for b, S in chosen.items():
        sys.blocks[b].class_set = tuple(sorted(S))
        for c in S:
            assignment[c] = b
    for B, rows in zip(sys.blocks, coords):
        if rank([rows[c] for c in B.class_set], ctx.one) != B.k:
            raise PartitionFailure(f"partition failure: block {B.index} selection is not a basis")
    sys.class_assignment = assignment
    return assignment


def defect_group(sys: BlockSystem, B: Block, G: PermGroup | None = None) -> tuple[PermGroup, int]:
    """Sylow p-subgroup of the centralizer of a defect class of ``B``."""
    G = G or sys.group
    ct = sys.table.class_table
    p = sys.p
    best = None
    for c, a in enumerate(B.idem_coeffs):
        if a:
            d = p_valuation(ct.centralizer_order(c), p)
            if best is None or d > best[0]:
                best = (d, c)
    if best is None or best[0] != B.defect:
        raise TableInconsistent(f"defect mismatch for block {B.index}: class defect {best and best[0]} "
                                f"vs block defect {B.defect}")
    c = best[1]
    D = sylow_subgroup(centralizer(G, ct.classes[c].representative), p)
    B.defect_class = c
    B.defect_group = D
    return D, c


def block_system(tbl: CharacterTable, p: int) -> BlockSystem:
    """Fully populated block system (cached on the table)."""
    key = ("blocks", p)
    hit = tbl.cache.get(key)
    if hit is not None:
        return hit
    sys = block_partition_irr(tbl, p)
    for B in sys.blocks:
        block_idempotent_mod_p(sys, B, tbl)
    class_block_partition(sys, tbl)
    for B in sys.blocks:
        defect_group(sys, B)
    tbl.cache[key] = sys
    return sys


# -- checks ----------------------------------------------------------------------

def idempotency_report(sys: BlockSystem) -> list[str]:
    """Problems with e_B^2 = e_B, e_B e_B' = 0 and sum e_B = 1 (empty when all hold)."""
    ctx = sys.context
    consts = sys.table.constants
    problems = []
    es = [B.idem_coeffs for B in sys.blocks]
    for i, x in enumerate(es):
        for j in range(i, len(es)):
            prod = center_product(x, es[j], consts, ctx.zero)
            want = x if i == j else [ctx.zero] * len(x)
            if prod != want:
                problems.append(f"e_{i} e_{j} != {'e_' + str(i) if i == j else '0'}")
    total = [ctx.zero] * len(consts)
    for x in es:
        total = [a + b for a, b in zip(total, x)]
    if total != [ctx.one] + [ctx.zero] * (len(consts) - 1):
        problems.append("sum of block idempotents is not 1")
    return problems


def multiplicativity_report(tbl: CharacterTable) -> list[str]:
    """Problems with omega(C_i) omega(C_j) = sum_k a_ijk omega(C_k)."""
    omega = central_characters(tbl)
    consts = tbl.constants
    k = len(tbl)
    problems = []
    for chi in range(k):
        w = omega[chi]
        for i in range(k):
            for j in range(i, k):
                rhs = Cyclotomic.rational(0, tbl.exponent)
                for kk in range(k):
                    if consts[i][j][kk]:
                        rhs = rhs + w[kk] * consts[i][j][kk]
                if w[i] * w[j] != rhs:
                    problems.append(f"char {chi}, classes {i},{j}")
    return problems


def block_report(sys: BlockSystem) -> dict:
    """JSON-ready fragment describing the blocks at one prime."""
    tbl = sys.table
    return {
        "p": sys.p,
        "blocks": [
            {
                "index": B.index,
                "principal": B.is_principal,
                "chars": [{"index": chi, "degree": tbl.degrees[chi]} for chi in B.char_indices],
                "defect": B.defect,
                "omega_class_set": list(B.class_set),
                "defect_class": B.defect_class,
                "defect_group_order": B.defect_group.order if B.defect_group is not None else None,
            }
            for B in sys.blocks
        ],
    }
