"""Command-line front end.

Exit codes: 0 = success / certified, 1 = a witness falsified the property
under test (or a non-abelian group was found), 2 = budget exhausted /
partial result.  Malformed input files report the offending field and
exit 1.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fixtures as fx
from .embedding import regular_embed, verify_distributive, verify_inverse_images
from .formats import (
    SchemaError,
    group_document,
    load_group,
    load_set,
    load_table,
    save_table,
    set_document,
    table_document,
)
from .groups import FiniteGroup, cyclic, dihedral, symmetric
from .homology import CONVENTION, ChainSpec, homology_groups, verify_differential
from .shelves import DistributivityError, make_distributive_set
from .search import certify_no_nonabelian
from .tables import compose
from .translate import alpha, conjugation_condition

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_PARTIAL = 2


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_group(spec: str) -> FiniteGroup:
    for prefix, factory in (("cyclic", cyclic), ("dihedral", dihedral), ("symmetric", symmetric)):
        if spec.startswith(prefix + ":"):
            return factory(int(spec.split(":", 1)[1]))
    return load_group(spec)


def _cmd_fixtures(args) -> int:
    if args.name == "list":
        for name in fx.fixture_names():
            print(f"{name}  sha256={fx.fixture_checksum(name)}")
        return EXIT_OK
    ops = fx.fixture_ops(args.name)
    doc = fx.fixture_set_document(args.name)
    checksum = fx.fixture_checksum(args.name)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        set_path = outdir / f"{args.name}.json"
        set_path.write_text(json.dumps(doc, indent=2) + "\n")
        names = ["tau", "sigma"] if args.name == "berman-d6" else [
            f"op{i}" for i in range(len(ops))
        ]
        for name, op in zip(names, ops):
            save_table(op, outdir / f"{name}.json")
        # written bytes must hash back to the bundled checksum
        reread = json.loads(set_path.read_text())
        import hashlib

        if hashlib.sha256(json.dumps(reread, sort_keys=True).encode()).hexdigest() != checksum:
            print("checksum mismatch between bundled and written fixture", file=sys.stderr)
            return EXIT_WITNESS
        print(f"wrote {set_path}  sha256={checksum}")
    else:
        _emit(doc, None)
    return EXIT_OK


def _cmd_validate(args) -> int:
    S = load_set(args.set, validate=False)
    try:
        make_distributive_set(S.ops, n=S.n)
    except DistributivityError as e:
        _emit({"valid": False, "pair": list(e.pair), "witness": list(e.triple)}, args.out)
        return EXIT_WITNESS
    _emit({"valid": True, "n": S.n, "count": len(S.ops)}, args.out)
    return EXIT_OK


def _cmd_compose(args) -> int:
    op1 = load_table(args.ops[0])
    op2 = load_table(args.ops[1])
    _emit(table_document(compose(op1, op2)), args.out)
    return EXIT_OK


def _cmd_embed_regular(args) -> int:
    G = _parse_group(args.group)
    E = regular_embed(G)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    files = []
    for g, op in enumerate(E.images):
        name = f"op_{g}.json"
        save_table(op, outdir / name)
        files.append(name)
    manifest = {
        "group": group_document(G),
        "images": files,
        "verification": {
            "distributive": verify_distributive(E.images) is None,
            "inverse_images": verify_inverse_images(E),
        },
    }
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(files)} tables and manifest to {outdir}")
    return EXIT_OK


def _cmd_alpha(args) -> int:
    op = load_table(args.op)
    v = alpha(op)
    for y in range(v.n):
        print(" ".join(str(x) for x in v[y]))
    return EXIT_OK


def _cmd_check_conjugation(args) -> int:
    op1 = load_table(args.ops[0])
    op2 = load_table(args.ops[1])
    w = conjugation_condition(alpha(op1), alpha(op2))
    if w is None:
        _emit({"holds": True}, args.out)
        return EXIT_OK
    _emit({"holds": False, "witness": list(w)}, args.out)
    return EXIT_WITNESS


def _cmd_search(args) -> int:
    seed = None
    if args.seed_pair:
        seed = (load_table(args.seed_pair[0]), load_table(args.seed_pair[1]))
    report = certify_no_nonabelian(
        args.n, budget=args.budget, seed_pair=seed, use_pruning=args.prune
    )
    _emit(report.to_document(), args.report)
    if report.conclusion == "nonabelian-found":
        return EXIT_WITNESS
    if report.conclusion == "partial":
        return EXIT_PARTIAL
    return EXIT_OK


def _cmd_homology(args) -> int:
    S = load_set(args.set)
    weights = tuple(int(w) for w in args.weights.split(","))
    spec = ChainSpec(S, weights, args.max_degree)
    if not verify_differential(spec):
        _emit({"error": "differential does not square to zero"}, args.out)
        return EXIT_WITNESS
    groups = homology_groups(spec, dim_budget=args.dim_budget)
    doc = {
        "convention": CONVENTION,
        "basis_order": "lexicographic tuples over {0..n-1}",
        "n": S.n,
        "weights": list(weights),
        "groups": [
            {"degree": h.degree, "free_rank": h.free_rank, "torsion": list(h.torsion)}
            for h in groups
        ],
    }
    _emit(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multishelf")
    p.add_argument("--jobs", type=int, default=1, help="worker bound (currently sequential)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("fixtures", help="emit a bundled fixture (or 'list')")
    sp.add_argument("name")
    sp.add_argument("--out", help="directory to write table/set files into")
    sp.set_defaults(func=_cmd_fixtures)

    sp = sub.add_parser("validate", help="validate a set file as a distributive set")
    sp.add_argument("--set", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("compose", help="compose two tables (left applied first)")
    sp.add_argument("--ops", nargs=2, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_compose)

    sp = sub.add_parser("embed-regular", help="regular embedding of a group")
    sp.add_argument("--group", required=True, help="cyclic:k | dihedral:k | symmetric:k | file")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=_cmd_embed_regular)

    sp = sub.add_parser("alpha", help="print column permutations of an invertible table")
    sp.add_argument("--op", required=True)
    sp.set_defaults(func=_cmd_alpha)

    sp = sub.add_parser("check-conjugation", help="conjugation form of distributivity")
    sp.add_argument("--ops", nargs=2, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_check_conjugation)

    sp = sub.add_parser("search", help="certify absence of non-abelian subgroups")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--prune", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--budget", type=float, help="seconds before reporting partial")
    sp.add_argument("--seed-pair", nargs=2, metavar="FILE")
    sp.add_argument("--report", help="report file (default stdout)")
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("homology", help="multi-term distributive homology")
    sp.add_argument("--set", required=True)
    sp.add_argument("--weights", required=True, help="comma-separated integers")
    sp.add_argument("--max-degree", type=int, default=3)
    sp.add_argument("--dim-budget", type=int, default=50_000)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_homology)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_WITNESS
    except DistributivityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_WITNESS
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_WITNESS


if __name__ == "__main__":
    raise SystemExit(main())
