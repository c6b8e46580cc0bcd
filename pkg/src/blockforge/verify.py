"""Invariant suites run by ``blockforge verify`` and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import (_coordinate_rows, block_system, central_characters, osima_linkage, idempotency_report,
                     multiplicativity_report)
from .chartable import check_orthogonality, table_for
from .errors import BlockforgeError
from .finite_field import reduce_mod_p
from .frobenius import (NormalEmbedding, brauer_counts, build_embedding, global_brauer_counts, hall_checks, inertia_families,
                        constituent_orbit_failures, pair_reports, separation_analysis)
from .linalg import rank
from .perm import PermGroup, p_valuation, prime_factors

GROUP_SUITES = ("orthogonality", "linkage", "idempotency", "partition")
PAIR_SUITES = ("brauer", "covering", "counting", "structural", "separation")
ALL_SUITES = GROUP_SUITES + PAIR_SUITES
ALIASES = {"brauer-counts": "brauer"}


@dataclass
class SuiteResult:
    suite: str
    subject: str
    ok: bool
    details: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"suite": self.suite, "subject": self.subject, "ok": self.ok, "details": self.details}


def normalize_suites(names: list[str]) -> list[str]:
    out = []
    for name in names:
        name = ALIASES.get(name, name)
        if name == "all":
            return list(ALL_SUITES)
        if name not in ALL_SUITES:
            raise BlockforgeError(f"unknown suite {name!r}")
        out.append(name)
    return out


# -- single-group suites ---------------------------------------------------------

def suite_orthogonality(G: PermGroup) -> SuiteResult:
    tbl = table_for(G)
    details = []
    try:
        check_orthogonality(tbl)
        details.append(f"{len(tbl)} characters, both relations exact")
    except BlockforgeError as exc:
        return SuiteResult("orthogonality", G.name, False, [str(exc)])
    bad = multiplicativity_report(tbl)
    details.append("omega multiplicative against class constants" if not bad else f"multiplicativity: {bad[:3]}")
    return SuiteResult("orthogonality", G.name, not bad, details)


def suite_linkage(G: PermGroup) -> SuiteResult:
    tbl = table_for(G)
    ok = True
    details = []
    sizes = tbl.class_table.sizes
    for p in prime_factors(G.order):
        sys = block_system(tbl, p)
        parts = sorted(B.char_indices for B in sys.blocks)
        same = parts == osima_linkage(tbl, p)
        omega = central_characters(tbl)
        const = all(reduce_mod_p(omega[chi][c], sys.context) == B.omega_star[c]
                    for B in sys.blocks for chi in B.char_indices for c in sys.regular_classes())
        principal = all(sys.principal.omega_star[c] == sys.context.element(sizes[c]) for c in sys.regular_classes())
        identity = all(B.omega_star[0] == sys.context.one for B in sys.blocks)
        good = same and const and principal and identity
        ok = ok and good
        details.append(f"p={p}: {len(sys.blocks)} blocks; character-sum linkage agrees={same}, "
                       f"omega* constant={const}, principal omega*=|C|={principal}")
    return SuiteResult("linkage", G.name, ok, details)


def suite_idempotency(G: PermGroup) -> SuiteResult:
    tbl = table_for(G)
    ok = True
    details = []
    for p in prime_factors(G.order):
        sys = block_system(tbl, p)
        regular = set(sys.regular_classes())
        vanish = all(not a for B in sys.blocks for c, a in enumerate(B.idem_coeffs) if c not in regular)
        probs = idempotency_report(sys)
        good = vanish and not probs
        ok = ok and good
        details.append(f"p={p}: e_B^2=e_B, e_B e_B'=0, sum=1: {'ok' if not probs else probs}; "
                       f"zero on p-singular classes={vanish}")
    return SuiteResult("idempotency", G.name, ok, details)


def suite_partition(G: PermGroup) -> SuiteResult:
    tbl = table_for(G)
    ok = True
    details = []
    for p in prime_factors(G.order):
        sys = block_system(tbl, p)
        total = sum(B.k for B in sys.blocks)
        sets = [c for B in sys.blocks for c in B.class_set]
        exhaust = sorted(sets) == list(range(len(tbl)))
        sizes_ok = all(len(B.class_set) == B.k for B in sys.blocks)
        basis = all(rank([row for c, row in enumerate(_coordinate_rows(B, tbl.constants, sys.context))
                          if c in B.class_set], sys.context.one) == B.k for B in sys.blocks)
        defects = all(0 <= B.defect <= p_valuation(G.order, p) for B in sys.blocks)
        dclass = all(p_valuation(tbl.class_table.centralizer_order(B.defect_class), p) == B.defect
                     and B.defect_group.order == p ** B.defect for B in sys.blocks)
        good = total == len(tbl) and exhaust and sizes_ok and basis and defects and dclass
        ok = ok and good
        shape = ", ".join(f"|Omega|={len(B.class_set)}/k={B.k}/d={B.defect}" for B in sys.blocks)
        details.append(f"p={p}: {shape}; basis={basis}, defect classes match={dclass}")
    return SuiteResult("partition", G.name, ok, details)


# -- normal-pair suites ------------------------------------------------------------

def _subject(emb: NormalEmbedding) -> str:
    return f"{emb.G.name} > {emb.N.name}"


def suite_brauer(emb: NormalEmbedding) -> SuiteResult:
    details = []
    glob = global_brauer_counts(emb)
    ok = glob["ok"]
    details.append(f"global fixed (chars, classes) per coset: {glob['fixed']}")
    for p in prime_factors(emb.G.order):
        for fam in inertia_families(emb, p):
            rec = brauer_counts(emb, p, fam)
            ok = ok and rec["ok"]
            tallies = [(e["fixed_chars"], e["fixed_classes"]) for e in rec["per_element"]]
            details.append(f"p={p} family of b{fam.base} (orbit {fam.orbit}, |T|={fam.T.order}): "
                           f"fixed {tallies}, orbits {rec['orbits_chars']}/{rec['orbits_classes']}")
    return SuiteResult("brauer", _subject(emb), ok, details)


def suite_covering(emb: NormalEmbedding) -> SuiteResult:
    details = []
    ok = True
    compat = emb.compatibility_failures()
    if compat:
        ok = False
        details.append(f"action compatibility failures: {compat[:3]}")
    for p in prime_factors(emb.G.order):
        bad = constituent_orbit_failures(emb, p)
        reports = pair_reports(emb, p)
        unique = all(r.cover_unique for r in reports if r.verdict_char)
        agree = all(r.verdict_char == r.verdict_class and r.class_forms_agree for r in reports)
        ok = ok and not bad and unique and agree
        verdicts = ", ".join(f"(b{r.b},B{r.B})={'F' if r.verdict_char else '-'}" for r in reports)
        details.append(f"p={p}: {verdicts}; criteria agree={agree}, unique coverer={unique}"
                       + (f"; orbit failures {bad}" if bad else ""))
    return SuiteResult("covering", _subject(emb), ok, details)


def suite_counting(emb: NormalEmbedding) -> SuiteResult:
    ok = True
    details = []
    for p in prime_factors(emb.G.order):
        for r in pair_reports(emb, p):
            if r.counting is None:
                continue
            c = r.counting
            ok = ok and c["ok"]
            if c["kind"] == "principal":
                details.append(f"p={p} (b{r.b},B{r.B}): k(B0)={c['k_B']} vs {c['k_G_mod_N']}+"
                               f"({c['k_b']}-1)/{c['index']}={c['rhs']}")
            else:
                details.append(f"p={p} (b{r.b},B{r.B}): k(B)={c['k_B']} vs {c['N_order']}*{c['k_b']}/"
                               f"{c['T_order']}={c['rhs']}")
    return SuiteResult("counting", _subject(emb), ok, details)


def suite_structural(emb: NormalEmbedding, seed: int = 0) -> SuiteResult:
    ok = True
    details = []
    for p in prime_factors(emb.G.order):
        for r in pair_reports(emb, p):
            if r.structural is None or not r.verdict_char:
                continue
            s = r.structural
            ok = ok and s["ok"]
            details.append(f"p={p} (b{r.b},B{r.B}): {s}")
    hall = hall_checks(emb, seed)
    ok = ok and hall["ok"]
    details.append(f"hall: {hall}")
    return SuiteResult("structural", _subject(emb), ok, details)


def suite_separation(emb: NormalEmbedding) -> SuiteResult:
    rec = separation_analysis(emb)
    return SuiteResult("separation", _subject(emb), rec["ok"], [str({k: v for k, v in sorted(rec.items())})])


def run_suites(G: PermGroup, normals: list[PermGroup], suites: list[str], seed: int = 0) -> list[SuiteResult]:
    out = []
    for s in suites:
        if s in GROUP_SUITES:
            out.append(globals()[f"suite_{s}"](G))
    embs = [build_embedding(G, N) for N in normals]
    for s in suites:
        if s in PAIR_SUITES:
            for emb in embs:
                if s == "structural":
                    out.append(suite_structural(emb, seed))
                else:
                    out.append(globals()[f"suite_{s}"](emb))
    return out
