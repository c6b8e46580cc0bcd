from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from blockforge.catalog import catalog, catalog_pairs, load_catalog_group, load_catalog_normal
from blockforge.chartable import (CharacterTable, check_orthogonality, class_constants, decompose, dixon_prime,
                                  induce_from_subgroup, restrict_to_subgroup, row_sort_key, table_for)
from blockforge.cyclotomic import Cyclotomic
from blockforge.errors import BlockforgeError, TableInconsistent
from blockforge.perm import sylow_subgroup


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.name)
def test_catalog_tables(e):
    tbl = table_for(load_catalog_group(e.name))
    assert sorted(tbl.degrees) == list(e.expected.degrees)
    assert tbl.is_trivial_row(0)
    assert [row_sort_key(r) for r in tbl.values] == sorted(row_sort_key(r) for r in tbl.values)
    check_orthogonality(tbl, column_first=False)


@pytest.mark.parametrize("n", range(2, 13))
def test_cyclic_groups_match_dual_group(n):
    # independent oracle: Irr(C_n) = {g^k -> zeta_n^(jk)}
    G = load_catalog_group(f"C{n}")
    tbl = table_for(G)
    g = G.generators[0]
    ct = tbl.class_table
    logs = [next(k for k in range(n) if g ** k == c.representative) for c in ct.classes]
    expected = {tuple(Cyclotomic.zeta(n, j * k) for k in logs) for j in range(n)}
    assert {tuple(r) for r in tbl.values} == expected


def test_s4_values():
    tbl = table_for(load_catalog_group("S4"))
    ct = tbl.class_table
    # columns ordered by element order: 1, (12)(34) or (12), ...
    by_rep = {}
    for i, c in enumerate(ct.classes):
        by_rep[tuple(sorted(c.representative.cycle_lengths()))] = i
    col = [by_rep[k] for k in [(1, 1, 1, 1), (1, 1, 2), (2, 2), (1, 3), (4,)]]
    rows = sorted(tuple(int(r[c].rational_value()) for c in col) for r in tbl.values)
    assert rows == sorted([(1, 1, 1, 1, 1), (1, -1, 1, 1, -1), (2, 0, 2, -1, 0),
                           (3, 1, -1, 0, -1), (3, -1, -1, 0, 1)])


def test_a5_irrationalities():
    tbl = table_for(load_catalog_group("A5"))
    golden = (1 + sympy.sqrt(5)) / 2
    vals = {complex(v.to_complex()) for row in tbl.values for v in row if not v.is_rational()}
    assert len(vals) == 2
    assert any(abs(v - complex(golden)) < 1e-9 for v in vals)


def test_dixon_prime():
    for e, n in [(12, 24), (6, 6), (30, 60), (2, 4)]:
        q = dixon_prime(e, n)
        assert sympy.isprime(q) and q % e == 1 and q * q > 4 * n
        assert all(not (sympy.isprime(r) and r % e == 1 and r * r > 4 * n) for r in range(2, q))


def test_class_constants_identities():
    G = load_catalog_group("S4")
    ct = G.class_table
    a = class_constants(ct)
    k = len(ct)
    for i in range(k):
        for j in range(k):
            # sum over l of a_ijl |C_l| = |C_i| |C_j|
            assert sum(a[i][j][l] * ct.sizes[l] for l in range(k)) == ct.sizes[i] * ct.sizes[j]
            assert a[0][i][j] == (1 if i == j else 0)


def test_perturbed_table_rejected():
    tbl = table_for(load_catalog_group("S3"))
    values = [list(r) for r in tbl.values]
    values[1][1] = values[1][1] + 1
    bad = CharacterTable(tbl.class_table, tbl.exponent, values)
    with pytest.raises(TableInconsistent, match="column orthogonality violated"):
        check_orthogonality(bad)
    with pytest.raises(TableInconsistent, match="row orthogonality violated"):
        check_orthogonality(bad, column_first=False)


def test_permutation_character_decomposes():
    for name in ("S4", "A5", "D15", "C7:C3"):
        G = load_catalog_group(name)
        tbl = table_for(G)
        fixed = [Cyclotomic.rational(sum(1 for i, j in enumerate(c.representative) if i == j))
                 for c in tbl.class_table.classes]
        mult = decompose(fixed, tbl)
        assert mult[0] == 1  # transitive action
        assert sum(m * d for m, d in zip(mult, tbl.degrees)) == G.degree


def test_induced_trivial_is_coset_action():
    G = load_catalog_group("S4")
    H = sylow_subgroup(G, 3)
    tbl, tbl_H = table_for(G), table_for(H)
    ind = induce_from_subgroup(tbl_H, 0, tbl)
    # independent oracle: fixed right cosets Hx under right multiplication
    cosets = {frozenset(h * x for h in H) for x in G}
    for i, c in enumerate(tbl.class_table.classes):
        g = c.representative
        fixed = sum(1 for co in cosets if frozenset(y * g for y in co) == co)
        assert ind[i] == fixed


def test_restriction_needs_subgroup():
    S4 = table_for(load_catalog_group("S4"))
    other = load_catalog_group("A5")
    with pytest.raises(BlockforgeError, match="not a subgroup"):
        restrict_to_subgroup(S4, 0, table_for(other))
    with pytest.raises(TableInconsistent):
        decompose([Cyclotomic.rational(1, 1)] * 2 + [Cyclotomic.rational(0)], table_for(load_catalog_group("S3")))


PAIRS = [(g, n) for g, n in catalog_pairs()]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PAIRS), st.integers(0, 20), st.integers(0, 20))
def test_frobenius_reciprocity(pair, i, j):
    G = load_catalog_group(pair[0])
    N = load_catalog_normal(*pair)
    tbl, tbl_N = table_for(G), table_for(N)
    chi = i % len(tbl)
    phi = j % len(tbl_N)
    res = restrict_to_subgroup(tbl, chi, tbl_N)
    ind = induce_from_subgroup(tbl_N, phi, tbl)
    assert tbl_N.inner_product(res, tbl_N.values[phi]) == tbl.inner_product(tbl.values[chi], ind)
    assert sum(m * d for m, d in zip(decompose(res, tbl_N), tbl_N.degrees)) == tbl.degrees[chi]
    assert ind[0] == tbl_N.degrees[phi] * (G.order // N.order)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([e.name for e in catalog()]), st.integers(0, 20), st.integers(0, 20))
def test_products_of_characters_are_characters(name, i, j):
    tbl = table_for(load_catalog_group(name))
    a, b = tbl.values[i % len(tbl)], tbl.values[j % len(tbl)]
    prod = [x * y for x, y in zip(a, b)]
    mult = decompose(prod, tbl)
    assert sum(m * d for m, d in zip(mult, tbl.degrees)) == tbl.degrees[i % len(tbl)] * tbl.degrees[j % len(tbl)]
    assert tbl.norm(a) == 1


def test_kernel_contains():
    S4 = load_catalog_group("S4")
    K4 = load_catalog_normal("S4", "K4")
    tbl = table_for(S4)
    assert [tbl.kernel_contains(c, K4) for c in range(len(tbl))] == [True, True, True, False, False]
