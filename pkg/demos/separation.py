"""Principal blocks for several primes at once.

D15 over C15 has principal Frobenius pairs at 3 and 5, so the characters
shared by the principal blocks at 3 and 5 are exactly those of G/N. For
A4 over K4 the subgroup H generated by the O_p' pieces recovers the
intersection of all principal blocks as Irr(G/H).
"""

from __future__ import annotations

from blockforge.catalog import load_catalog_group, load_catalog_normal
from blockforge.frobenius import build_embedding, hall_checks, separation_analysis


def report(g, n):
    emb = build_embedding(load_catalog_group(g), load_catalog_normal(g, n))
    rec = separation_analysis(emb)
    print(f"{g} over {n}: status {rec['status']}, pi(N) = {rec['pi_N']}")
    if isinstance(rec.get("prop_pairs"), list):
        for pair in rec["prop_pairs"]:
            print(f"  primes {pair['p']},{pair['q']}: Irr(G/N) is the intersection = "
                  f"{pair['quotient_is_intersection']}, trivial intersection in N = {pair['trivial_intersection']}")
    ps = rec.get("principal_separation")
    if isinstance(ps, dict):
        print(f"  |H| = {ps['H_order']}, Irr(G/H) = {ps['irr_G_mod_H']}, "
              f"intersection of principal blocks = {ps['principal_intersection']}")
    hall = hall_checks(emb, seed=0)
    if hall["applicable"]:
        print(f"  coprime index: {hall['coprime']}, complement of order {hall['complement_order']}")


def main():
    report("D15", "C15")
    report("A4", "K4")
    report("S4", "A4")


if __name__ == "__main__":
    main()
