"""p-blocks of small groups.

For each prime dividing the order, print the blocks with their defects,
the class set Omega_B chosen for each block and a defect group. A5 at
p = 2 shows a defect zero block next to the principal block.
"""

from __future__ import annotations

from blockforge.blocks import block_system, idempotency_report
from blockforge.catalog import load_catalog_group
from blockforge.chartable import table_for
from blockforge.perm import prime_factors


def describe(name):
    G = load_catalog_group(name)
    tbl = table_for(G)
    print(f"{name} (order {G.order})")
    for p in prime_factors(G.order):
        sys = block_system(tbl, p)
        print(f"  p = {p}")
        for B in sys.blocks:
            degs = [tbl.degrees[c] for c in B.char_indices]
            tag = "B0" if B.is_principal else f"B{B.index}"
            print(f"    {tag}: degrees {degs}, defect {B.defect}, Omega_B {list(B.class_set)}, "
                  f"|D| = {B.defect_group.order}")
        assert not idempotency_report(sys)


def main():
    for name in ("S4", "A5", "SL(2,3)", "D15"):
        describe(name)


if __name__ == "__main__":
    main()
