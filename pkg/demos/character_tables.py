"""Character tables from generators.

Builds S4 and A5 from two generators each, computes their tables and
shows the checks every table passes before it is returned.
"""

from __future__ import annotations

from blockforge.catalog import load_catalog_group
from blockforge.chartable import check_orthogonality, table_for
from blockforge.perm import Perm, group_from_generators


def show(tbl):
    ct = tbl.class_table
    print(f"{tbl.group.name}: order {tbl.group.order}, {len(ct)} classes, exponent {tbl.exponent}")
    print("  class sizes:", ct.sizes)
    print("  element orders:", [c.element_order for c in ct.classes])
    for r, row in enumerate(tbl.values):
        print(f"  chi{r}:", " | ".join(str(v.minimal()) for v in row))


def main():
    s4 = group_from_generators(4, [Perm.from_cycles(4, (1, 2, 3, 4)), Perm.from_cycles(4, (1, 2))], name="S4")
    tbl = table_for(s4)
    show(tbl)
    check_orthogonality(tbl)
    print("  degree squares:", [d * d for d in tbl.degrees], "sum", sum(d * d for d in tbl.degrees))

    # A5 needs Q(sqrt 5): the two 3-dimensional characters are Galois conjugate
    a5 = table_for(load_catalog_group("A5"))
    show(a5)
    irr = [v for row in a5.values for v in row if not v.is_rational()]
    print("  irrational values:", sorted({str(v.minimal()) for v in irr}))


if __name__ == "__main__":
    main()
