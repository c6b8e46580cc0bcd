"""Frobenius pairs of blocks across a normal subgroup.

Walks through A4 over K4, S4 over A4 and C7:C3 over C7. For each pair
(b, B) the character criterion (every nontrivial character of b induces
irreducibly) and the centralizer criterion are printed side by side,
together with the class counting identity when the pair holds.
"""

from __future__ import annotations

from blockforge.catalog import load_catalog_group, load_catalog_normal
from blockforge.frobenius import analyze


def walk(g, n):
    result = analyze(load_catalog_group(g), load_catalog_normal(g, n))
    emb = result.embedding
    print(f"{g} over {n}: |G:N| = {emb.index}")
    for p in result.primes:
        for r in result.pairs[p]:
            line = f"  p={p} (b{r.b}, B{r.B}): characters {r.verdict_char}, centralizers {r.verdict_class}"
            if r.witness_char is not None:
                line += f", witness of degree {emb.tbl_N.degrees[r.witness_char]}"
            c = r.counting
            if c and c["kind"] == "principal":
                line += f", k(B0) = {c['k_B']} = {c['k_G_mod_N']} + ({c['k_b']}-1)/{c['index']}"
            elif c:
                line += f", k(B) = {c['k_B']} = {c['N_order']}*{c['k_b']}/{c['T_order']}"
            print(line)
    print("  consistent:", result.consistent)


def main():
    walk("A4", "K4")
    walk("S4", "A4")
    walk("C7:C3", "C7")


if __name__ == "__main__":
    main()
