"""Conjugation on characters versus conjugation on classes.

An element of G permutes the irreducible characters of N and the classes
of N. Inside each family of conjugate blocks the two permutations fix the
same number of points, provided the class sets come from an equivariant
partition. This script prints the tallies for C5:C4 over C5 and S4 over K4.
"""

from __future__ import annotations

from blockforge.catalog import load_catalog_group, load_catalog_normal
from blockforge.frobenius import brauer_counts, build_embedding, inertia_families
from blockforge.perm import prime_factors


def tallies(g, n):
    emb = build_embedding(load_catalog_group(g), load_catalog_normal(g, n))
    print(f"{g} over {n}")
    for p in prime_factors(emb.G.order):
        for fam in inertia_families(emb, p):
            rec = brauer_counts(emb, p, fam)
            fixed = [(e["fixed_chars"], e["fixed_classes"]) for e in rec["per_element"]]
            print(f"  p={p} family {fam.orbit} (|T| = {fam.T.order}): fixed per coset {fixed}, "
                  f"orbits {rec['orbits_chars']}/{rec['orbits_classes']}")


def main():
    tallies("C5:C4", "C5")
    tallies("S4", "K4")


if __name__ == "__main__":
    main()
