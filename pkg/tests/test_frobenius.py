from __future__ import annotations

import json

import pytest

from blockforge.catalog import catalog_pairs, load_catalog_group, load_catalog_normal
from blockforge.errors import BlockforgeError
from blockforge.frobenius import (NormalEmbedding, analyze, covering_blocks, find_complement,
                                  inertia_of_character, inertia_families, is_frobenius_pair_char,
                                  constituent_orbit_failures, pair_reports, right_transversal, separation_analysis)
from blockforge.perm import Perm, prime_factors

PAIRS = catalog_pairs()
# N is a Frobenius kernel: every nontrivial character of N induces irreducibly
FROBENIUS_KERNELS = [("A4", "K4"), ("C7:C3", "C7"), ("D5", "C5"), ("C5:C4", "C5"), ("S3", "C3"),
                     ("D15", "C15")]


@pytest.mark.parametrize("g,n", PAIRS)
def test_transversal_and_actions(g, n, embedding):
    emb = embedding(g, n)
    G, N = emb.G, emb.N
    T = right_transversal(G, N)
    assert len(T) == G.order // N.order == emb.index
    assert len({frozenset(x * t for x in N) for t in T}) == len(T)
    assert T[0] == G.identity
    assert not emb.compatibility_failures()
    # class_map sends N-classes into G-classes of the same element order
    ctG, ctN = emb.tbl_G.class_table, emb.tbl_N.class_table
    for i, c in enumerate(ctN.classes):
        assert ctG.classes[emb.class_map[i]].element_order == c.element_order


def test_not_normal_rejected():
    S4 = load_catalog_group("S4")
    H = S4.subgroup([Perm.from_cycles(4, (1, 2))])
    with pytest.raises(BlockforgeError, match="not normal"):
        NormalEmbedding(S4, H)


@pytest.mark.parametrize("g,n", PAIRS)
def test_char_criterion_matches_inertia(g, n, embedding):
    # independent route: phi^G is irreducible iff the inertia group of phi is N
    emb = embedding(g, n)
    for p in prime_factors(emb.G.order):
        for r in pair_reports(emb, p):
            nontrivial = [phi for phi in r.b_chars if not emb.tbl_N.is_trivial_row(phi)]
            expected = all(inertia_of_character(emb, phi).order == emb.N.order for phi in nontrivial)
            assert r.verdict_char == expected


@pytest.mark.parametrize("g,n", PAIRS)
def test_class_criterion_brute_force(g, n, embedding):
    emb = embedding(g, n)
    G, N = emb.G, emb.N
    ctN = emb.tbl_N.class_table
    for p in prime_factors(G.order):
        blocks = emb.blocks_N(p).blocks
        for r in pair_reports(emb, p):
            elems = [N.elements[m] for c in blocks[r.b].class_set for m in ctN.classes[c].members]
            expected = all(g2 in N for a in elems if not a.is_identity() for g2 in G if a * g2 == g2 * a)
            assert r.verdict_class == expected


@pytest.mark.parametrize("g,n", FROBENIUS_KERNELS)
def test_frobenius_groups_give_pairs_everywhere(g, n, embedding):
    emb = embedding(g, n)
    for p in prime_factors(emb.G.order):
        assert all(r.verdict_char and r.consistent for r in pair_reports(emb, p))


def test_covering_and_errors(embedding):
    emb = embedding("S4", "A4")
    assert covering_blocks(emb, 3, 0) == [0]
    assert covering_blocks(emb, 3, 1) == [1, 2]
    with pytest.raises(BlockforgeError, match="does not cover"):
        is_frobenius_pair_char(emb, 3, 0, 1)
    for p in (2, 3):
        assert not constituent_orbit_failures(emb, p)


def test_inertia_families_a4(embedding):
    emb = embedding("A4", "K4")
    fams = inertia_families(emb, 3)
    assert [len(f.orbit) for f in fams] == [1, 3]
    assert [f.T.order for f in fams] == [12, 4]


def test_s4_over_a4_witnesses(embedding):
    emb = embedding("S4", "A4")
    (r,) = pair_reports(emb, 2)
    assert not r.verdict_char and not r.verdict_class
    assert emb.tbl_N.degrees[r.witness_char] == 3
    w = Perm.from_images(r.witness_class)
    assert w in emb.N and not w.is_identity()


def test_find_complement():
    G = load_catalog_group("A4")
    N = load_catalog_normal("A4", "K4")
    H = find_complement(G, N, seed=3)
    assert H.order == 3 and all(x not in N for x in H if not x.is_identity())
    assert find_complement(load_catalog_group("S4"), load_catalog_normal("S4", "K4")) is None


def test_separation_for_d15(embedding):
    rec = separation_analysis(embedding("D15", "C15"))
    assert rec["status"] == "evaluated" and rec["ok"]
    assert rec["pi_N"] == [3, 5]
    (pair,) = rec["prop_pairs"]
    assert pair["quotient_is_intersection"] == pair["trivial_intersection"]
    assert rec["nilpotent_corollary"]["asserted"]


def test_separation_precondition(embedding):
    rec = separation_analysis(embedding("S4", "A4"))
    assert rec["status"] == "precondition failed" and rec["principal_pairs"]["2"] is False


def test_analysis_json_is_stable():
    G = load_catalog_group("A4")
    N = load_catalog_normal("A4", "K4")
    a = json.dumps(analyze(G, N).to_json(), sort_keys=True)
    b = json.dumps(analyze(G, N).to_json(), sort_keys=True)
    assert a == b
    rec = json.loads(a)
    assert rec["consistent"] and [x["p"] for x in rec["primes"]] == [2, 3]
    assert rec["hall"]["applicable"] and rec["hall"]["complement_order"] == 3
