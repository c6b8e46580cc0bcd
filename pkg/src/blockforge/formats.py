"""File formats: generator text files, character-table JSON and reports."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .catalog import catalog_names, load_catalog_group
from .chartable import CharacterTable, check_orthogonality, row_sort_key
from .cyclotomic import Cyclotomic, change_order
from .errors import BlockforgeError, GroupTooLarge, NotInSubfield, ParseError, ValidationError
from .perm import Perm, PermGroup, group_from_generators

SCHEMA = 1


# -- generator files -----------------------------------------------------------

def parse_generators(text: str, cap: int | None = None) -> PermGroup:
    """Parse the ``degree N`` / ``# name`` / image-line format and close the group."""
    degree = None
    name = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("name ") or body == "name":
                name = body[4:].strip() or None
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise ParseError("expected 'degree N'", lineno, 1)
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"bad degree {parts[1]!r}", lineno, raw.index(parts[1]) + 1) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno, raw.index(parts[1]) + 1)
            continue
        images = []
        col = 0
        for tok in line.split():
            col = raw.index(tok, col) + 1
            try:
                images.append(int(tok))
            except ValueError:
                raise ParseError(f"bad image {tok!r}", lineno, col) from None
            col += len(tok) - 1
        if len(images) != degree:
            raise ParseError(f"expected {degree} images, got {len(images)}", lineno)
        if sorted(images) != list(range(1, degree + 1)):
            raise ParseError("not a bijection", lineno)
        gens.append(Perm.from_images(images))
    if degree is None:
        raise ParseError("missing 'degree N' header", 1)
    return group_from_generators(degree, gens, cap=cap, name=name)


def format_generators(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    if G.name:
        lines.append(f"# name {G.name}")
    for g in G.generators:
        lines.append(" ".join(map(str, g.images1())))
    return "\n".join(lines) + "\n"


def load_group(spec: str, cap: int | None = None) -> PermGroup:
    """A catalog name or a path to a generator file."""
    if spec in catalog_names():
        G = load_catalog_group(spec)
        if cap is not None and G.order > cap:
            raise GroupTooLarge(f"group too large: {spec} has order {G.order} > cap {cap}")
        return G
    path = Path(spec)
    if not path.exists():
        raise BlockforgeError(f"unknown group {spec!r}: not a catalog name or an existing file")
    G = parse_generators(path.read_text(encoding="utf-8"), cap=cap)
    if G.name is None:
        G.name = path.stem
    return G


# -- character tables ----------------------------------------------------------

def table_to_json(tbl: CharacterTable) -> dict:
    ct = tbl.class_table
    return {
        "schema": SCHEMA,
        "group": tbl.group.name,
        "exponent": tbl.exponent,
        "classes": [{"rep": c.representative.images1(), "size": c.size, "order": c.element_order}
                    for c in ct.classes],
        "chars": [[v.to_json() for v in row] for row in tbl.values],
    }


def table_from_json(obj: dict, cap: int | None = None) -> CharacterTable:
    """Rebuild and re-validate a table; classes are matched by closing their representatives."""
    try:
        if obj.get("schema", SCHEMA) != SCHEMA:
            raise ValidationError(f"unsupported schema {obj.get('schema')!r}")
        classes = obj["classes"]
        chars = obj["chars"]
        exponent = int(obj["exponent"])
        reps = [Perm.from_images(c["rep"]) for c in classes]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, BlockforgeError):
            raise
        raise ValidationError(f"malformed table file: {exc}") from None
    if not reps:
        raise ValidationError("table has no classes")
    degree = reps[0].degree
    G = group_from_generators(degree, reps, cap=cap, name=obj.get("group"))
    ct = G.class_table
    if len(ct) != len(classes):
        raise ValidationError(f"table lists {len(classes)} classes but the group has {len(ct)}")
    perm = []
    for i, (c, rep) in enumerate(zip(classes, reps)):
        j = ct.class_of(rep)
        if ct.classes[j].size != c["size"] or ct.classes[j].element_order != c["order"]:
            raise ValidationError(f"class {i}: size/order do not match its representative")
        perm.append(j)
    if sorted(perm) != list(range(len(ct))):
        raise ValidationError("class representatives are not pairwise non-conjugate")
    if exponent != G.exponent:
        raise ValidationError(f"exponent {exponent} differs from the group exponent {G.exponent}")
    rows = []
    for r in chars:
        if len(r) != len(ct):
            raise ValidationError("character row has the wrong length")
        vals = [None] * len(ct)
        for i, v in enumerate(r):
            vals[perm[i]] = _at_order(Cyclotomic.from_json(v), exponent)
        rows.append(vals)
    rows.sort(key=row_sort_key)
    tbl = CharacterTable(ct, exponent, rows)
    check_orthogonality(tbl, column_first=True)
    return tbl


def _at_order(v: Cyclotomic, n: int) -> Cyclotomic:
    if n % v.n == 0:
        return v.embed(n)
    try:
        return change_order(v, n)
    except NotInSubfield:
        raise ValidationError(f"value {v} does not lie in Q(zeta_{n})") from None


def load_table(path: str | os.PathLike, cap: int | None = None) -> CharacterTable:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return table_from_json(obj, cap=cap)


# -- reports -------------------------------------------------------------------

def dumps(record) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(record, path: str | os.PathLike | None = None, fmt: str = "json", text: str | None = None) -> str:
    """Serialize ``record`` (JSON) or emit ``text`` verbatim; write to ``path`` when given."""
    if fmt == "json":
        out = dumps(record)
    elif fmt == "text":
        out = text if text is not None else dumps(record)
    else:
        raise BlockforgeError(f"unknown format {fmt!r}")
    if path is not None:
        Path(path).write_text(out, encoding="utf-8")
    return out
