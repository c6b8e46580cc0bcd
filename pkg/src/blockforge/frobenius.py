"""Blocks across a normal subgroup: covering, inertia and Frobenius pairs.

For ``N`` normal in ``G`` and a prime ``p`` a block ``B`` of ``G`` covering
a block ``b`` of ``N`` forms a Frobenius pair when every nontrivial
character of ``b`` induces irreducibly to ``G``. This module decides that
both from characters and from centralizers of the classes in Omega_b, and
checks the counting and structural consequences.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .blocks import (BlockSystem, PartitionAction, block_idempotent_mod_p, block_partition_irr,
                     block_system, class_block_partition, defect_group)
from .chartable import CharacterTable, decompose, induce_from_subgroup, restrict_to_subgroup, table_for
from .errors import BlockforgeError, PartitionFailure
from .perm import (Perm, PermGroup, is_nilpotent, is_normal, o_p_prime, prime_factors, quotient_is_solvable,
                   sylow_subgroup)

COMPLEMENT_ATTEMPTS = 200


def right_transversal(G: PermGroup, N: PermGroup) -> list[Perm]:
    """First element (in canonical order) of every right coset ``N g``."""
    seen = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(n * g for n in N.elements)
    return reps


class NormalEmbedding:
    """``N`` normal in ``G`` with the conjugation action of ``G`` on Irr(N) and Cl(N).

    ``class_action[t][i]`` is the class of ``t^-1 x_i t`` and
    ``char_action[t][chi]`` the row of ``chi^t``, where
    ``chi^t(x) = chi(t x t^-1)``; both are right actions and
    ``chi^t(x^t) = chi(x)``.
    """

    def __init__(self, G: PermGroup, N: PermGroup, tbl_G: CharacterTable | None = None,
                 tbl_N: CharacterTable | None = None):
        if N.degree != G.degree or not N.is_subgroup_of(G) or not is_normal(G, N):
            raise BlockforgeError("not normal: the subgroup is not a normal subgroup of the group")
        self.G = G
        self.N = N
        self.tbl_G = tbl_G or table_for(G)
        self.tbl_N = tbl_N or table_for(N)
        ctN = self.tbl_N.class_table
        ctG = self.tbl_G.class_table
        self.class_map = [ctG.class_of(c.representative) for c in ctN.classes]
        self.transversal = right_transversal(G, N)
        self.index = len(self.transversal)
        rows = {tuple(r): i for i, r in enumerate(self.tbl_N.values)}
        self.class_action = []
        self.char_action = []
        for t in self.transversal:
            tinv = t.inverse()
            cperm = [ctN.class_of(c.representative.conj(t)) for c in ctN.classes]
            # class of t x t^-1 is the preimage of class x under cperm
            back = [ctN.class_of(c.representative.conj(tinv)) for c in ctN.classes]
            chperm = []
            for row in self.tbl_N.values:
                image = tuple(row[back[i]] for i in range(len(row)))
                if image not in rows:
                    raise BlockforgeError("conjugate character not found in the table")
                chperm.append(rows[image])
            self.class_action.append(cperm)
            self.char_action.append(chperm)
        self._blocks_N: dict[int, BlockSystem] = {}
        self._restrictions: dict[int, list[int]] = {}
        self.notes: list[str] = []
        self.cache: dict = {}

    # -- block systems ---------------------------------------------------------

    def blocks_G(self, p: int) -> BlockSystem:
        return block_system(self.tbl_G, p)

    def block_perms(self, sys: BlockSystem) -> list[list[int]]:
        owner = {}
        for B in sys.blocks:
            for chi in B.char_indices:
                owner[chi] = B.index
        perms = []
        for chperm in self.char_action:
            bp = []
            for B in sys.blocks:
                images = {owner[chperm[chi]] for chi in B.char_indices}
                if len(images) != 1:
                    raise BlockforgeError("conjugation does not permute blocks")
                bp.append(images.pop())
            perms.append(bp)
        return perms

    def blocks_N(self, p: int) -> BlockSystem:
        """Blocks of ``N`` with a ``G``-equivariant class partition when one is found."""
        sys = self._blocks_N.get(p)
        if sys is not None:
            return sys
        sys = block_partition_irr(self.tbl_N, p)
        for B in sys.blocks:
            block_idempotent_mod_p(sys, B)
        action = PartitionAction(tuple(tuple(c) for c in self.class_action),
                                 tuple(tuple(b) for b in self.block_perms(sys)))
        try:
            class_block_partition(sys, action=action)
        except PartitionFailure as exc:
            class_block_partition(sys)
            sys.notes.append(f"no G-equivariant class partition found ({exc}); canonical partition used")
        for B in sys.blocks:
            defect_group(sys, B, self.N)
        self._blocks_N[p] = sys
        return sys

    # -- characters ------------------------------------------------------------

    def restriction(self, chi: int) -> list[int]:
        """Multiplicities of Irr(N) in the restriction of Irr(G) row ``chi``."""
        hit = self._restrictions.get(chi)
        if hit is None:
            hit = decompose(restrict_to_subgroup(self.tbl_G, chi, self.tbl_N), self.tbl_N)
            self._restrictions[chi] = hit
        return hit

    def kernel_chars(self) -> list[int]:
        """Rows of Irr(G) with ``N`` in the kernel, i.e. Irr(G/N)."""
        return [chi for chi in range(len(self.tbl_G)) if self.tbl_G.kernel_contains(chi, self.N)]

    def stabilizer(self, fixes) -> PermGroup:
        gens = list(self.N.generators) + [t for i, t in enumerate(self.transversal) if fixes(i)]
        return self.G.subgroup(gens)

    def compatibility_failures(self) -> list[str]:
        """Triples (t, chi, class) violating chi^t(C^t) = chi(C)."""
        out = []
        vals = self.tbl_N.values
        for ti, (cp, chp) in enumerate(zip(self.class_action, self.char_action)):
            for chi, row in enumerate(vals):
                for c in range(len(row)):
                    if vals[chp[chi]][cp[c]] != row[c]:
                        out.append(f"t={ti}, chi={chi}, class={c}")
        for ti, t in enumerate(self.transversal):
            if t in self.N and (self.class_action[ti] != list(range(len(vals)))
                                or self.char_action[ti] != list(range(len(vals)))):
                out.append(f"element {ti} of N acts nontrivially")
        return out


_EMBEDDINGS: dict = {}


def build_embedding(G: PermGroup, N: PermGroup) -> NormalEmbedding:
    """Memoized :class:`NormalEmbedding` for the pair."""
    key = (G, N, G.name, N.name)
    emb = _EMBEDDINGS.get(key)
    if emb is None:
        emb = _EMBEDDINGS[key] = NormalEmbedding(G, N)
    return emb


def inertia_of_character(emb: NormalEmbedding, phi: int) -> PermGroup:
    return emb.stabilizer(lambda i: emb.char_action[i][phi] == phi)


@dataclass
class InertiaFamily:
    p: int
    base: int
    orbit: list[int]
    T: PermGroup
    chars: list[int]
    classes: list[int]


def inertia_family(emb: NormalEmbedding, p: int, b: int) -> InertiaFamily:
    sys = emb.blocks_N(p)
    perms = emb.block_perms(sys)
    orbit = sorted({bp[b] for bp in perms})
    T = emb.stabilizer(lambda i: perms[i][b] == b)
    chars = sorted(chi for x in orbit for chi in sys.blocks[x].char_indices)
    classes = sorted(c for x in orbit for c in sys.blocks[x].class_set)
    return InertiaFamily(p, b, orbit, T, chars, classes)


def inertia_families(emb: NormalEmbedding, p: int) -> list[InertiaFamily]:
    sys = emb.blocks_N(p)
    seen = set()
    fams = []
    for B in sys.blocks:
        if B.index in seen:
            continue
        fam = inertia_family(emb, p, B.index)
        seen.update(fam.orbit)
        fams.append(fam)
    return fams


def covering_blocks(emb: NormalEmbedding, p: int, b: int) -> list[int]:
    """Indices of blocks of ``G`` with a character whose restriction meets Irr(b)."""
    sysG = emb.blocks_G(p)
    targets = set(emb.blocks_N(p).blocks[b].char_indices)
    out = []
    for B in sysG.blocks:
        if any(emb.restriction(chi)[phi] for chi in B.char_indices for phi in targets):
            out.append(B.index)
    return out


def constituent_orbit_failures(emb: NormalEmbedding, p: int) -> list[str]:
    """Constituents of each chi_N lie in one orbit of blocks and meet every orbit member."""
    sysN = emb.blocks_N(p)
    sysG = emb.blocks_G(p)
    perms = emb.block_perms(sysN)
    owner = {chi: B.index for B in sysN.blocks for chi in B.char_indices}
    out = []
    for B in sysG.blocks:
        for chi in B.char_indices:
            mults = emb.restriction(chi)
            hit = {owner[phi] for phi, m in enumerate(mults) if m}
            b = min(hit)
            orbit = {bp[b] for bp in perms}
            if hit != orbit:
                out.append(f"p={p}, chi={chi}: constituent blocks {sorted(hit)} vs orbit {sorted(orbit)}")
    return out


def is_frobenius_pair_char(emb: NormalEmbedding, p: int, b: int, B: int) -> tuple[bool, int | None]:
    """Every nontrivial character of ``b`` induces irreducibly; returns (verdict, witness row)."""
    if B not in covering_blocks(emb, p, b):
        raise BlockforgeError(f"B does not cover b (p={p}, b={b}, B={B})")
    blk = emb.blocks_N(p).blocks[b]
    for phi in blk.char_indices:
        if emb.tbl_N.is_trivial_row(phi):
            continue
        induced = induce_from_subgroup(emb.tbl_N, phi, emb.tbl_G)
        if emb.tbl_G.norm(induced) != 1:
            return False, phi
    return True, None


def _centralizer_inside(G: PermGroup, N: PermGroup, a: Perm) -> bool:
    return all(g in N for g in G.elements if a * g == g * a)


def is_frobenius_pair_class(emb: NormalEmbedding, p: int, b: int) -> tuple[bool, Perm | None, bool]:
    """``C_G(a)`` lies in ``N`` for every ``a != 1`` in the classes of Omega_b.

    Returns (verdict, witness element, agreement of the element-wise,
    representative-wise and class-stabilizer forms).
    """
    G, N = emb.G, emb.N
    ctN = emb.tbl_N.class_table
    blk = emb.blocks_N(p).blocks[b]
    verdict, witness = True, None
    reps_ok = True
    stab_ok = True
    for c in blk.class_set:
        cls = ctN.classes[c]
        if cls.element_order == 1:
            continue
        for m in cls.members:
            a = N.elements[m]
            if not _centralizer_inside(G, N, a):
                if verdict:
                    verdict, witness = False, a
                break
        if not _centralizer_inside(G, N, cls.representative):
            reps_ok = False
        moved = all(emb.class_action[i][c] != c for i, t in enumerate(emb.transversal) if t not in N)
        if not moved:
            stab_ok = False
    return verdict, witness, verdict == reps_ok == stab_ok


# -- counting and structure --------------------------------------------------------

def _count_fixed(perm, items) -> int:
    return sum(1 for x in items if perm[x] == x)


def _orbit_count(perms, items) -> int:
    items = set(items)
    seen = set()
    count = 0
    for x in sorted(items):
        if x in seen:
            continue
        count += 1
        seen |= {pm[x] for pm in perms}
    return count


def _cyclic_perms(perm, n):
    out = [list(range(n))]
    cur = list(perm)
    while cur != out[0]:
        out.append(cur)
        cur = [perm[i] for i in cur]
    return out


def brauer_counts(emb: NormalEmbedding, p: int, fam: InertiaFamily) -> dict:
    """Fixed points and orbit counts of conjugation on Irr(f_b) versus Omega_{f_b}."""
    n = len(emb.tbl_N)
    per_element = []
    ok = True
    for i, t in enumerate(emb.transversal):
        fc = _count_fixed(emb.char_action[i], fam.chars)
        fk = _count_fixed(emb.class_action[i], fam.classes)
        oc = _orbit_count(_cyclic_perms(emb.char_action[i], n), fam.chars)
        ok_ = _orbit_count(_cyclic_perms(emb.class_action[i], n), fam.classes)
        per_element.append({"element": t.images1(), "fixed_chars": fc, "fixed_classes": fk,
                            "cyclic_orbits_chars": oc, "cyclic_orbits_classes": ok_})
        ok = ok and fc == fk and oc == ok_
    orbits_chars = _orbit_count(emb.char_action, fam.chars)
    orbits_classes = _orbit_count(emb.class_action, fam.classes)
    sys = emb.blocks_N(p)
    blk = sys.blocks[fam.base]
    stab = [i for i, t in enumerate(emb.transversal) if t in fam.T]
    stabilized = [(_count_fixed(emb.char_action[i], blk.char_indices),
                   _count_fixed(emb.class_action[i], blk.class_set)) for i in stab]
    ok = ok and orbits_chars == orbits_classes and all(a == b for a, b in stabilized)
    return {"base_block": fam.base, "orbit": fam.orbit, "inertia_order": fam.T.order,
            "per_element": per_element, "orbits_chars": orbits_chars, "orbits_classes": orbits_classes,
            "stabilized_fixed": [list(x) for x in stabilized], "ok": ok}


def global_brauer_counts(emb: NormalEmbedding) -> dict:
    n = len(emb.tbl_N)
    rows = [(_count_fixed(c, range(n)), _count_fixed(k, range(n)))
            for c, k in zip(emb.char_action, emb.class_action)]
    return {"fixed": [list(r) for r in rows], "ok": all(a == b for a, b in rows)}


def counting_checks(emb: NormalEmbedding, p: int, b: int, B: int) -> dict:
    sysN = emb.blocks_N(p)
    sysG = emb.blocks_G(p)
    blk_b = sysN.blocks[b]
    blk_B = sysG.blocks[B]
    quotient = emb.kernel_chars()
    k_quot = len(quotient)
    index = emb.index
    if blk_b.is_principal:
        extra = Fraction(blk_b.k - 1, index)
        rhs = k_quot + extra
        inside = set(quotient) <= set(blk_B.char_indices)
        return {"kind": "principal", "k_B": blk_B.k, "k_G_mod_N": k_quot, "k_b": blk_b.k,
                "index": index, "rhs": str(rhs), "divisible": extra.denominator == 1,
                "quotient_in_principal": inside,
                "ok": rhs == blk_B.k and inside and blk_B.is_principal}
    fam = inertia_family(emb, p, b)
    rhs = Fraction(emb.N.order * blk_b.k, fam.T.order)
    return {"kind": "nonprincipal", "k_B": blk_B.k, "k_b": blk_b.k, "N_order": emb.N.order,
            "T_order": fam.T.order, "rhs": str(rhs), "divisible": rhs.denominator == 1,
            "ok": rhs == blk_B.k}


def _conjugate_in(G: PermGroup, A: PermGroup, B: PermGroup) -> bool:
    if A.order != B.order:
        return False
    target = set(B.elements)
    return any({x.conj(g) for x in A.elements} == target for g in G.elements)


def structural_checks(emb: NormalEmbedding, p: int, b: int, B: int) -> dict:
    G, N = emb.G, emb.N
    sysN = emb.blocks_N(p)
    sysG = emb.blocks_G(p)
    blk_b = sysN.blocks[b]
    blk_B = sysG.blocks[B]
    if blk_b.is_principal:
        if N.order % p:
            return {"kind": "principal", "applicable": False,
                    "reason": f"p={p} does not divide |N|; Irr(b0) is trivial and the pair holds vacuously",
                    "ok": True}
        p_prime_quotient = emb.index % p != 0
        sylow_inside = sylow_subgroup(G, p).is_subgroup_of(N)
        return {"kind": "principal", "applicable": True, "p_prime_quotient": p_prime_quotient,
                "sylow_in_N": sylow_inside, "ok": p_prime_quotient and sylow_inside}
    D_B = blk_B.defect_group
    D_b = blk_b.defect_group
    fam = inertia_family(emb, p, b)
    inertia_index = fam.T.order // N.order
    inside = D_B.is_subgroup_of(N)
    same_order = D_b.order == D_B.order
    conj = _conjugate_in(G, D_b, D_B)
    return {"kind": "nonprincipal", "applicable": True, "defect_group_in_N": inside,
            "inertia_index": inertia_index, "inertia_index_p_prime": inertia_index % p != 0,
            "defect_orders": [D_b.order, D_B.order], "defect_groups_conjugate": conj,
            "ok": inside and inertia_index % p != 0 and same_order and conj}


def find_complement(G: PermGroup, N: PermGroup, seed: int = 0,
                    attempts: int = COMPLEMENT_ATTEMPTS) -> PermGroup | None:
    """Seeded random search for ``H`` with ``G = NH`` and ``N`` meet ``H`` trivial."""
    m = G.order // N.order
    if math.gcd(m, N.order) != 1:
        return None
    if m == 1:
        return G.subgroup([])
    rng = random.Random(seed)
    cands = [g for g in G.elements if m % g.order == 0 and not g.is_identity()]
    for _ in range(attempts):
        H = G.subgroup([])
        for _ in range(8):
            g = rng.choice(cands)
            H2 = G.subgroup(list(H.generators) + [g])
            if m % H2.order == 0:
                H = H2
            if H.order == m:
                return H
    return None


@dataclass
class FrobeniusPairReport:
    p: int
    b: int
    B: int
    b_chars: list[int]
    B_chars: list[int]
    verdict_char: bool
    witness_char: int | None
    verdict_class: bool
    witness_class: list[int] | None
    class_forms_agree: bool
    coverers: list[int]
    counting: dict | None = None
    structural: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def cover_unique(self) -> bool:
        return len(self.coverers) == 1

    @property
    def consistent(self) -> bool:
        if self.verdict_char != self.verdict_class or not self.class_forms_agree:
            return False
        if self.verdict_char:
            if not self.cover_unique:
                return False
            if self.counting is not None and not self.counting["ok"]:
                return False
            if self.structural is not None and not self.structural["ok"]:
                return False
        return True

    def to_json(self, emb: NormalEmbedding) -> dict:
        return {
            "b": self.b, "B": self.B,
            "b_chars": [{"index": i, "degree": emb.tbl_N.degrees[i]} for i in self.b_chars],
            "B_chars": [{"index": i, "degree": emb.tbl_G.degrees[i]} for i in self.B_chars],
            "verdict_char": self.verdict_char,
            "witness_char": None if self.witness_char is None else
            {"index": self.witness_char, "degree": emb.tbl_N.degrees[self.witness_char]},
            "verdict_class": self.verdict_class,
            "witness_class": self.witness_class,
            "class_forms_agree": self.class_forms_agree,
            "coverers": self.coverers,
            "cover_unique": self.cover_unique,
            "counting": self.counting,
            "structural": self.structural,
            "consistent": self.consistent,
            "notes": self.notes,
        }


def pair_reports(emb: NormalEmbedding, p: int) -> list[FrobeniusPairReport]:
    hit = emb.cache.get(("pairs", p))
    if hit is None:
        hit = emb.cache[("pairs", p)] = _pair_reports(emb, p)
    return hit


def _pair_reports(emb: NormalEmbedding, p: int) -> list[FrobeniusPairReport]:
    sysN = emb.blocks_N(p)
    sysG = emb.blocks_G(p)
    out = []
    for blk in sysN.blocks:
        coverers = covering_blocks(emb, p, blk.index)
        v_class, wit, agree = is_frobenius_pair_class(emb, p, blk.index)
        for B in coverers:
            v_char, wchar = is_frobenius_pair_char(emb, p, blk.index, B)
            rep = FrobeniusPairReport(p, blk.index, B, list(blk.char_indices), list(sysG.blocks[B].char_indices),
                                      v_char, wchar, v_class, None if wit is None else wit.images1(),
                                      agree, coverers)
            if v_char or v_class:
                rep.counting = counting_checks(emb, p, blk.index, B)
                rep.structural = structural_checks(emb, p, blk.index, B)
            if not blk.is_principal and rep.structural is not None:
                rep.notes.append("defect groups of b and B compared by order and G-conjugacy")
            out.append(rep)
    return out


def principal_pair_holds(emb: NormalEmbedding, p: int) -> bool:
    return is_frobenius_pair_char(emb, p, 0, 0)[0]


def hall_checks(emb: NormalEmbedding, seed: int = 0) -> dict:
    """When every principal pair over p in pi(N) holds: coprimality and a complement."""
    piN = prime_factors(emb.N.order)
    held = {p: principal_pair_holds(emb, p) for p in piN}
    if not piN or not all(held.values()):
        return {"applicable": False, "principal_pairs": {str(p): v for p, v in held.items()}, "ok": True}
    coprime = math.gcd(emb.N.order, emb.index) == 1
    H = find_complement(emb.G, emb.N, seed) if coprime else None
    return {"applicable": True, "coprime": coprime,
            "complement_order": None if H is None else H.order,
            "complement_generators": None if H is None else [g.images1() for g in H.generators],
            "complement_note": None if H is not None else "complement not found within budget",
            "ok": coprime}


def separation_analysis(emb: NormalEmbedding) -> dict:
    G, N = emb.G, emb.N
    piN = prime_factors(N.order)
    piG = prime_factors(G.order)
    quotient = set(emb.kernel_chars())
    held = {p: principal_pair_holds(emb, p) for p in piN}
    rec: dict = {"pi_N": piN, "principal_pairs": {str(p): v for p, v in held.items()},
                 "irr_G_mod_N": sorted(quotient)}
    B0 = {p: set(emb.blocks_G(p).principal.char_indices) for p in piG}
    b0 = {p: set(emb.blocks_N(p).principal.char_indices) for p in piN}
    trivial_N = {next(i for i in range(len(emb.tbl_N)) if emb.tbl_N.is_trivial_row(i))}
    nilpotent = is_nilpotent(N)
    rec["N_nilpotent"] = nilpotent
    if not all(held.values()):
        rec["status"] = "precondition failed"
        rec["ok"] = True
        return rec
    rec["status"] = "evaluated"
    ok = True
    props = []
    for p, q in combinations(piN, 2):
        lhs = quotient == (B0[p] & B0[q])
        rhs = (b0[p] & b0[q]) == trivial_N
        props.append({"p": p, "q": q, "quotient_is_intersection": lhs, "trivial_intersection": rhs,
                      "ok": lhs == rhs})
        ok = ok and lhs == rhs
    rec["prop_pairs"] = props if len(piN) >= 2 else "vacuous"
    if len(piN) >= 2:
        all_sep = all(x["quotient_is_intersection"] for x in props)
        rec["nilpotency"] = {"nilpotent": nilpotent, "all_pairs_separate": all_sep, "ok": nilpotent == all_sep}
        ok = ok and nilpotent == all_sep
    else:
        rec["nilpotency"] = "vacuous"
    inter = set.intersection(*(B0[p] for p in piN)) if piN else set()
    cor = {"intersection": sorted(inter), "equal": inter == quotient}
    if nilpotent and len(piN) >= 2:
        cor["asserted"] = True
        ok = ok and inter == quotient
    else:
        cor["asserted"] = False
    rec["nilpotent_corollary"] = cor
    if 1 < N.order < G.order and quotient_is_solvable(G, N):
        piQ = prime_factors(emb.index)
        gens = []
        for p in piQ:
            gens.extend(o_p_prime(G, p).generators)
        H = G.normal_closure(gens) if gens else G.subgroup([])
        tbl = emb.tbl_G
        irr_quot_H = {chi for chi in range(len(tbl)) if tbl.kernel_contains(chi, H)}
        full = set.intersection(*B0.values())
        rec["principal_separation"] = {"H_order": H.order, "irr_G_mod_H": sorted(irr_quot_H),
                                       "principal_intersection": sorted(full), "ok": irr_quot_H == full}
        ok = ok and irr_quot_H == full
    else:
        rec["principal_separation"] = "not applicable"
    rec["ok"] = ok
    return rec


@dataclass
class FrobeniusAnalysis:
    embedding: NormalEmbedding
    primes: list[int]
    pairs: dict[int, list[FrobeniusPairReport]]
    brauer: dict[int, dict]
    hall: dict
    separation: dict

    @property
    def consistent(self) -> bool:
        if not all(r.consistent for reps in self.pairs.values() for r in reps):
            return False
        if not all(b["ok"] for b in self.brauer.values()):
            return False
        return self.hall["ok"] and self.separation["ok"]

    def to_json(self) -> dict:
        emb = self.embedding
        return {
            "group": emb.G.name,
            "normal_subgroup": emb.N.name,
            "primes": [
                {"p": p,
                 "pairs": [r.to_json(emb) for r in self.pairs[p]],
                 "brauer_counts": self.brauer[p],
                 "partition_notes": emb.blocks_N(p).notes}
                for p in self.primes
            ],
            "hall": self.hall,
            "separation": self.separation,
            "consistent": self.consistent,
        }


def analyze(G: PermGroup, N: PermGroup, primes: list[int] | None = None, seed: int = 0) -> FrobeniusAnalysis:
    emb = build_embedding(G, N)
    primes = primes or prime_factors(G.order)
    pairs = {}
    brauer = {}
    for p in primes:
        pairs[p] = pair_reports(emb, p)
        fams = [brauer_counts(emb, p, f) for f in inertia_families(emb, p)]
        glob = global_brauer_counts(emb)
        brauer[p] = {"families": fams, "global": glob, "ok": glob["ok"] and all(f["ok"] for f in fams)}
    return FrobeniusAnalysis(emb, primes, pairs, brauer, hall_checks(emb, seed), separation_analysis(emb))
