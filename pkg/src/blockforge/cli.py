"""Command-line front end: ``blockforge chartab|blocks|frobenius|verify|catalog``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .blocks import block_report, block_system
from .catalog import catalog, catalog_pairs, entry, load_catalog_group, load_catalog_normal
from .chartable import table_for
from .errors import BlockforgeError, PartitionFailure, TableInconsistent
from .formats import load_group, parse_generators, table_to_json, write_report
from .frobenius import analyze
from .perm import PermGroup, is_prime, prime_factors
from .verify import normalize_suites, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--cap", type=int, help="element cap for group enumeration (default 20000 or $BLOCKFORGE_CAP)")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized complement search")


def _primes_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("-p", dest="primes", type=int, action="append", help="prime (repeatable)")
    p.add_argument("--all-primes", action="store_true", help="every prime dividing the group order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockforge", description="p-blocks and Frobenius pairs of small groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartab", help="character table")
    p.add_argument("group", help="catalog name or generator file")
    _common(p)

    p = sub.add_parser("blocks", help="p-blocks with defects and class sets")
    p.add_argument("group")
    _primes_opts(p)
    _common(p)

    p = sub.add_parser("frobenius", help="Frobenius corresponding pairs over a normal subgroup")
    p.add_argument("group")
    p.add_argument("--normal", required=True, help="named normal subgroup or generator file")
    _primes_opts(p)
    _common(p)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("group", nargs="?")
    p.add_argument("--catalog", action="store_true", help="run over every catalog group")
    p.add_argument("--normal", help="normal subgroup (default: the catalog's named ones)")
    p.add_argument("--suite", action="append", help="suite name or 'all' (repeatable; default all)")
    _common(p)

    p = sub.add_parser("catalog", help="list built-in groups")
    _common(p)
    return parser


# -- helpers -------------------------------------------------------------------------

def _group(spec: str, cap: int | None) -> PermGroup:
    return load_group(spec, cap=cap)


def _normal(G: PermGroup, gspec: str, nspec: str, cap: int | None) -> PermGroup:
    try:
        e = entry(gspec)
    except BlockforgeError:
        e = None
    if e is not None and nspec in e.normal_subgroups:
        return load_catalog_normal(gspec, nspec)
    path = Path(nspec)
    if not path.exists():
        raise InputError(f"unknown normal subgroup {nspec!r}: not a named subgroup of {gspec} or a file")
    N = parse_generators(path.read_text(encoding="utf-8"), cap=cap)
    if N.degree != G.degree or not N.is_subgroup_of(G):
        raise InputError(f"{nspec} does not generate a subgroup of {G.name}")
    if N.name is None:
        N.name = path.stem
    return N


def _primes(G: PermGroup, args, warn) -> list[int]:
    if args.all_primes or not args.primes:
        return prime_factors(G.order)
    out = []
    for p in args.primes:
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if G.order % p:
            warn(f"warning: {p} does not divide |G| = {G.order}")
        if p not in out:
            out.append(p)
    return out


def _fmt_table(tbl) -> str:
    ct = tbl.class_table
    G = tbl.group
    lines = [f"Character table of {G.name} (order {G.order}, {len(ct)} classes, exponent {tbl.exponent})"]
    for i, c in enumerate(ct.classes):
        lines.append(f"  class {i}: rep {c.representative!r}, size {c.size}, order {c.element_order}")
    for r, row in enumerate(tbl.values):
        lines.append(f"  chi{r} (degree {tbl.degrees[r]}): " + " | ".join(str(v.minimal()) for v in row))
    return "\n".join(lines) + "\n"


def _fmt_blocks(G: PermGroup, reports: list[dict]) -> str:
    lines = [f"Blocks of {G.name} (order {G.order})"]
    for rep in reports:
        lines.append(f"p = {rep['p']}: {len(rep['blocks'])} block(s)")
        for B in rep["blocks"]:
            chars = ", ".join(f"chi{c['index']}({c['degree']})" for c in B["chars"])
            tag = " principal" if B["principal"] else ""
            lines.append(f"  B{B['index']}{tag}: chars [{chars}], defect {B['defect']}, "
                         f"Omega_B {B['omega_class_set']}, defect class {B['defect_class']}, "
                         f"|D(B)| = {B['defect_group_order']}")
    return "\n".join(lines) + "\n"


def _fmt_frobenius(rec: dict) -> str:
    lines = [f"Frobenius analysis of {rec['group']} over {rec['normal_subgroup']}"]
    for pr in rec["primes"]:
        lines.append(f"p = {pr['p']}:")
        for r in pr["pairs"]:
            verdict = "Frobenius pair" if r["verdict_char"] else "not a Frobenius pair"
            line = f"  (b{r['b']}, B{r['B']}): {verdict}; class criterion {r['verdict_class']}"
            if r["witness_char"] is not None:
                w = r["witness_char"]
                line += f"; witness chi{w['index']} of N (degree {w['degree']})"
            if r["witness_class"] is not None:
                line += f"; centralizer witness {r['witness_class']}"
            line += f"; coverers {r['coverers']}"
            if r["counting"] is not None:
                c = r["counting"]
                if c["kind"] == "principal":
                    line += f"; k(B0) = {c['k_B']} = {c['k_G_mod_N']} + ({c['k_b']}-1)/{c['index']}"
                else:
                    line += f"; k(B) = {c['k_B']} = {c['N_order']}*{c['k_b']}/{c['T_order']}"
                line += " ok" if c["ok"] else " FAILED"
            if not r["consistent"]:
                line += "  [INCONSISTENT]"
            lines.append(line)
        lines.append(f"  Brauer counts: {'ok' if pr['brauer_counts']['ok'] else 'FAILED'}")
        for note in pr["partition_notes"]:
            lines.append(f"  note: {note}")
    sep = rec["separation"]
    lines.append(f"Separation: {sep.get('status')}; ok={sep['ok']}")
    lines.append(f"Hall condition: {rec['hall']}")
    lines.append("consistent" if rec["consistent"] else "INCONSISTENT")
    return "\n".join(lines) + "\n"


def _emit(args, record, text: str) -> None:
    out = write_report(record, args.out, args.format, text)
    if args.out is None:
        sys.stdout.write(out)


# -- commands ------------------------------------------------------------------------

def cmd_chartab(args) -> int:
    G = _group(args.group, args.cap)
    tbl = table_for(G)
    _emit(args, table_to_json(tbl), _fmt_table(tbl))
    return EXIT_OK


def cmd_blocks(args) -> int:
    G = _group(args.group, args.cap)
    primes = _primes(G, args, lambda m: print(m, file=sys.stderr))
    tbl = table_for(G)
    reports = [block_report(block_system(tbl, p)) for p in primes]
    _emit(args, {"schema": 1, "group": G.name, "primes": reports}, _fmt_blocks(G, reports))
    return EXIT_OK


def cmd_frobenius(args) -> int:
    G = _group(args.group, args.cap)
    N = _normal(G, args.group, args.normal, args.cap)
    primes = _primes(G, args, lambda m: print(m, file=sys.stderr))
    try:
        result = analyze(G, N, primes, seed=args.seed)
    except BlockforgeError as exc:
        if str(exc).startswith("not normal"):
            raise InputError(str(exc)) from None
        raise
    rec = result.to_json()
    rec["schema"] = 1
    _emit(args, rec, _fmt_frobenius(rec))
    return EXIT_OK if result.consistent else EXIT_FAIL


def cmd_verify(args) -> int:
    suites = normalize_suites(args.suite or ["all"])
    if args.catalog == bool(args.group):
        raise InputError("give exactly one of a group or --catalog")
    jobs = []
    if args.catalog:
        for e in catalog():
            G = load_catalog_group(e.name)
            jobs.append((G, [load_catalog_normal(e.name, n) for n in e.normal_subgroups]))
    else:
        G = _group(args.group, args.cap)
        if args.normal:
            normals = [_normal(G, args.group, args.normal, args.cap)]
        else:
            try:
                normals = [load_catalog_normal(args.group, n) for n in entry(args.group).normal_subgroups]
            except BlockforgeError:
                normals = []
        jobs.append((G, normals))
    results = []
    for G, normals in jobs:
        results.extend(run_suites(G, normals, suites, seed=args.seed))
    ok = all(r.ok for r in results)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.suite:<13} {r.subject}")
        lines.extend(f"    {d}" for d in r.details)
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} suites passed")
    _emit(args, {"schema": 1, "results": [r.to_json() for r in results], "ok": ok}, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args) -> int:
    rows = []
    for e in catalog():
        rows.append({"name": e.name, "degree": e.degree, "order": e.expected.order if e.expected else None,
                     "normal_subgroups": list(e.normal_subgroups)})
    text = "\n".join(f"{r['name']:<8} order {r['order']:<3} degree {r['degree']:<3} normal: "
                     f"{', '.join(r['normal_subgroups']) or '-'}" for r in rows) + "\n"
    _emit(args, {"schema": 1, "groups": rows, "pairs": [list(p) for p in catalog_pairs()]}, text)
    return EXIT_OK


COMMANDS = {"chartab": cmd_chartab, "blocks": cmd_blocks, "frobenius": cmd_frobenius,
            "verify": cmd_verify, "catalog": cmd_catalog}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.cap is not None and args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TableInconsistent, PartitionFailure) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BlockforgeError as exc:
        # library errors raised while loading or validating inputs
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
