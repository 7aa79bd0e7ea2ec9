"""The ``tk`` command line: enumeration, verification, statistics, mappings.

Grammar: ``tk <command> <subcommand> [flags]``.

- ``tk enumerate {spct|srt|ldyck|ltree}`` counts a family, optionally
  writing the full listing to a file.
- ``tk verify {hecke|counts|bijections|classes|pairs}`` runs an invariant
  suite and exits nonzero with a counterexample on failure.
- ``tk stats quadruple --n N`` compares the joint distribution of the
  four descent statistics on two-column standard tableaux with the four
  edge statistics on labeled binary trees.
- ``tk map <transform>`` applies one bijection to a JSON object.

Every command accepts ``--format {json,csv,text}`` (JSON is canonical) and
``--seed`` for the sampled portions of large verifications.  Enumerations
refuse to produce more than ``--max-objects`` objects (default 10**7,
overridable also via the TK_MAX_OBJECTS environment variable).  Exit codes:
0 pass, 1 invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from collections import Counter
from collections.abc import Iterable, Iterator
from math import factorial

from .allowable import (
    allowable_pairs,
    is_2112_avoiding,
    is_allowable_pair,
    realize_sct,
)
from .core import (
    apply_left_swap,
    compositions_of,
    format_composition,
    format_permutation,
    left_cover_swaps,
    parse_composition,
    parse_permutation,
    weak_bruhat_leq,
)
from .dyck import (
    LabeledDyckPath,
    catalan,
    enumerate_ldyck,
    ldyck_from_json,
    ldyck_to_spct,
    random_ldyck,
    spct_to_ldyck,
)
from .hecke import equivalence_classes, verify_hecke_relations
from .tableaux import (
    ReverseTableau,
    Tableau,
    descent_quadruple,
    enumerate_spct,
    enumerate_spct_sigma,
    enumerate_srt,
    from_json,
    pct_to_rt,
    rt_to_pct,
    st_column,
)
from .trees import (
    edge_stats,
    enumerate_ltrees,
    ldyck_to_ltree,
    ltree_to_ldyck,
    random_ltree,
    tree_from_json,
    tree_to_json,
)

__all__ = ["main", "entry", "build_parser"]

DEFAULT_MAX_OBJECTS = 10_000_000


class GuardExceeded(Exception):
    """Raised when a command would enumerate past the configured cap."""


def _object_cap(args: argparse.Namespace) -> int:
    if args.max_objects is not None:
        return args.max_objects
    env = os.environ.get("TK_MAX_OBJECTS")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"TK_MAX_OBJECTS is not an integer: {env!r}") from exc
    return DEFAULT_MAX_OBJECTS


def _guarded(items: Iterable, cap: int, what: str) -> Iterator:
    count = 0
    for item in items:
        count += 1
        if count > cap:
            raise GuardExceeded(
                f"{what} passed {cap} objects; raise --max-objects or TK_MAX_OBJECTS"
            )
        yield item


# ---------------------------------------------------------------------------
# report plumbing


def _report(command: str, parameters: dict, results: dict, started: float) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "results": results,
        "elapsed_seconds": round(time.perf_counter() - started, 6),
    }


def _cell(value) -> str:
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value)
    return str(value)


def _table_lines(rows: list[dict]) -> list[str]:
    if not rows:
        return ["(no rows)"]
    fields: list[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    grid = [fields] + [[_cell(row.get(f, "")) for f in fields] for row in rows]
    widths = [max(len(line[i]) for line in grid) for i in range(len(fields))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
            for line in grid]


def _emit(args: argparse.Namespace, report: dict, rows: list[dict]) -> None:
    if args.format == "json":
        print(json.dumps(report, indent=2))
    elif args.format == "csv":
        fields: list[str] = []
        for row in rows:
            for key in row:
                if key not in fields:
                    fields.append(key)
        writer = csv.DictWriter(sys.stdout, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
    else:
        print(f"command: {report['command']}")
        params = " ".join(f"{k}={_cell(v)}" for k, v in report["parameters"].items())
        print(f"parameters: {params}" if params else "parameters: (none)")
        for line in _table_lines(rows):
            print(line)
        for key, value in report["results"].items():
            if not isinstance(value, (list, dict)):
                print(f"{key}: {value}")
        print(f"elapsed: {report['elapsed_seconds']}s")


# ---------------------------------------------------------------------------
# tk enumerate


def cmd_enumerate(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    cap = _object_cap(args)
    kind = args.kind
    params: dict = {}
    if kind in ("spct", "srt"):
        if not args.shape:
            raise ValueError(f"enumerate {kind} requires --shape")
        shape = parse_composition(args.shape)
        params["shape"] = list(shape)
        if kind == "spct":
            if args.sigma:
                sigma = parse_permutation(args.sigma)
                params["sigma"] = list(sigma)
                objects = enumerate_spct_sigma(shape, sigma)
            else:
                objects = enumerate_spct(shape)
            as_json = Tableau.to_json
        else:
            objects = enumerate_srt(shape)
            as_json = ReverseTableau.to_json
    else:
        if args.n is None:
            raise ValueError(f"enumerate {kind} requires --n")
        params["n"] = args.n
        if kind == "ldyck":
            objects = enumerate_ldyck(args.n)
            as_json = LabeledDyckPath.to_json
        else:
            objects = enumerate_ltrees(args.n)
            as_json = tree_to_json

    listing: list[dict] | None = [] if args.list else None
    count = 0
    for obj in _guarded(objects, cap, f"enumerate {kind}"):
        count += 1
        if listing is not None:
            listing.append(as_json(obj))
    results: dict = {"kind": kind, "count": count}
    if args.list:
        with open(args.list, "w", encoding="utf-8") as fh:
            json.dump(listing, fh, indent=2)
            fh.write("\n")
        results["listing_file"] = args.list
    rows = [{"kind": kind, **params, "count": count}]
    _emit(args, _report("enumerate", params | {"kind": kind}, results, started), rows)
    return 0


# ---------------------------------------------------------------------------
# tk verify


def _suite_hecke(args: argparse.Namespace, cap: int) -> tuple[list[dict], bool, str | None]:
    if args.shape:
        shapes = [parse_composition(args.shape)]
    else:
        max_n = args.max_n if args.max_n is not None else 4
        shapes = [a for n in range(1, max_n + 1) for a in compositions_of(n)]
    rows = []
    witness = None
    ok = True
    for shape in _guarded(shapes, cap, "verify hecke"):
        rep = verify_hecke_relations(shape)
        rows.append(
            {
                "shape": format_composition(shape),
                "tableaux": rep.tableaux,
                "checks": rep.checks,
                "pass": rep.passed,
            }
        )
        if not rep.passed:
            ok = False
            if witness is None:
                witness = f"shape {format_composition(shape)}: {rep.counterexample}"
    return rows, ok, witness


def _suite_counts(args: argparse.Namespace, cap: int) -> tuple[list[dict], bool, str | None]:
    max_n = args.max_n if args.max_n is not None else 4
    rows = []
    witness = None
    ok = True
    for n in range(1, max_n + 1):
        shape = (2,) * n
        spct_count = sum(1 for _ in _guarded(enumerate_spct(shape), cap, "verify counts"))
        class_count = len(equivalence_classes(shape))
        ldyck_count = sum(1 for _ in _guarded(enumerate_ldyck(n), cap, "verify counts"))
        ltree_count = sum(1 for _ in _guarded(enumerate_ltrees(n), cap, "verify counts"))
        want_objects = factorial(n) * catalan(n)
        want_classes = (n + 1) ** (n - 1)
        passed = (
            spct_count == ldyck_count == ltree_count == want_objects
            and class_count == want_classes
        )
        rows.append(
            {
                "n": n,
                "spct": spct_count,
                "ldyck": ldyck_count,
                "ltree": ltree_count,
                "expected_objects": want_objects,
                "classes": class_count,
                "expected_classes": want_classes,
                "pass": passed,
            }
        )
        if not passed:
            ok = False
            if witness is None:
                witness = f"n={n}: {rows[-1]}"
    return rows, ok, witness


def _suite_bijections(args: argparse.Namespace, cap: int) -> tuple[list[dict], bool, str | None]:
    n = args.n if args.n is not None else 4
    rng = random.Random(args.seed)
    rows = []
    witness = None
    ok = True

    def record(check: str, size: int, cases: int, bad: str | None) -> None:
        nonlocal ok, witness
        rows.append({"check": check, "size": size, "cases": cases, "pass": bad is None})
        if bad is not None:
            ok = False
            if witness is None:
                witness = bad

    for m in range(1, n + 1):
        cases = 0
        bad = None
        for alpha in compositions_of(m):
            for t in _guarded(enumerate_spct(alpha), cap, "verify bijections"):
                cases += 1
                back = rt_to_pct(pct_to_rt(t), st_column(t, 1))
                if back != t:
                    bad = f"tableau/reverse-tableau round trip moved {t.rows}"
                    break
            if bad:
                break
        record("pct-rt", m, cases, bad)

    for m in range(1, min(n, 4) + 1):
        cases = 0
        bad = None
        for d in _guarded(enumerate_ldyck(m), cap, "verify bijections"):
            cases += 1
            t = ldyck_to_spct(d)
            if spct_to_ldyck(t) != d:
                bad = f"path/tableau round trip moved {d.steps}"
                break
            if ltree_to_ldyck(ldyck_to_ltree(d)) != d:
                bad = f"path/tree round trip moved {d.steps}"
                break
        record("ldyck-spct-ltree", m, cases, bad)

    for m in range(5, n + 1):
        cases = 0
        bad = None
        for _ in range(args.samples):
            d = random_ldyck(m, rng)
            cases += 1
            if spct_to_ldyck(ldyck_to_spct(d)) != d:
                bad = f"path/tableau round trip moved {d.steps}"
                break
            if ltree_to_ldyck(ldyck_to_ltree(d)) != d:
                bad = f"path/tree round trip moved {d.steps}"
                break
            tree = random_ltree(m, rng)
            if ldyck_to_ltree(ltree_to_ldyck(tree)) != tree:
                bad = f"tree/path round trip moved {tree}"
                break
        record("sampled", m, cases, bad)

    return rows, ok, witness


def _suite_classes(args: argparse.Namespace, cap: int) -> tuple[list[dict], bool, str | None]:
    max_size = args.max_size if args.max_size is not None else 5
    rows = []
    witness = None
    ok = True
    shapes = [a for m in range(1, max_size + 1) for a in compositions_of(m)]
    for shape in _guarded(shapes, cap, "verify classes"):
        try:
            classes = equivalence_classes(shape)
        except AssertionError as exc:
            rows.append({"shape": format_composition(shape), "classes": 0, "pass": False})
            ok = False
            if witness is None:
                witness = f"shape {format_composition(shape)}: {exc}"
            continue
        rows.append(
            {
                "shape": format_composition(shape),
                "classes": len(classes),
                "connected": sum(1 for c in classes if c.moved_connected),
                "pass": True,
            }
        )
    return rows, ok, witness


def _suite_pairs(args: argparse.Namespace, cap: int) -> tuple[list[dict], bool, str | None]:
    from itertools import permutations

    max_n = args.max_n if args.max_n is not None else 4
    rows = []
    witness = None
    ok = True
    for n in range(1, max_n + 1):
        perms = list(permutations(range(1, n + 1)))
        pairs = set()
        agree = True
        for a in perms:
            for b in perms:
                if is_2112_avoiding(a, b) != weak_bruhat_leq(a, b):
                    agree = False
                if is_allowable_pair(a, b):
                    pairs.add((a, b))
        covers_ok = all(
            is_allowable_pair(p, apply_left_swap(p, v))
            for p in perms
            for v in left_cover_swaps(p)
        )
        want = (n + 1) ** (n - 1)
        row = {
            "n": n,
            "pairs": len(pairs),
            "expected": want,
            "weak_order_agrees": agree,
            "covers_allowable": covers_ok,
        }
        passed = len(pairs) == want and agree and covers_ok
        if n <= 4:
            st_pairs = {
                (st_column(t, 1), st_column(t, 2))
                for t in _guarded(enumerate_spct((2,) * n), cap, "verify pairs")
            }
            row["matches_tableau_pairs"] = st_pairs == pairs
            passed = passed and st_pairs == pairs
        row["pass"] = passed
        rows.append(row)
        if not passed:
            ok = False
            if witness is None:
                witness = f"n={n}: {row}"
    return rows, ok, witness


_SUITES = {
    "hecke": _suite_hecke,
    "counts": _suite_counts,
    "bijections": _suite_bijections,
    "classes": _suite_classes,
    "pairs": _suite_pairs,
}


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    cap = _object_cap(args)
    rows, ok, witness = _SUITES[args.suite](args, cap)
    params = {
        k: v
        for k, v in (
            ("suite", args.suite),
            ("shape", args.shape),
            ("max_n", args.max_n),
            ("n", args.n),
            ("max_size", args.max_size),
            ("seed", args.seed),
        )
        if v is not None
    }
    results: dict = {"checks": rows, "passed": ok}
    if witness is not None:
        results["counterexample"] = witness
    _emit(args, _report("verify", params, results, started), rows)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# tk stats


def cmd_stats(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    cap = _object_cap(args)
    n = args.n
    if n is None:
        raise ValueError("stats quadruple requires --n")
    expected = factorial(n) * catalan(n)
    if 2 * expected > cap:
        raise GuardExceeded(
            f"stats quadruple at n={n} needs {2 * expected} objects"
        )
    tableau_side = Counter(
        descent_quadruple(t) for t in enumerate_spct((2,) * n)
    )
    tree_side = Counter(edge_stats(t) for t in enumerate_ltrees(n))
    quadruples = sorted(set(tableau_side) | set(tree_side))
    rows = [
        {
            "quadruple": ",".join(map(str, q)),
            "tableaux": tableau_side.get(q, 0),
            "trees": tree_side.get(q, 0),
        }
        for q in quadruples
    ]
    equal = tableau_side == tree_side
    results = {
        "distribution": rows,
        "objects_per_side": expected,
        "distinct_quadruples": len(quadruples),
        "equal": equal,
    }
    _emit(args, _report("stats", {"kind": "quadruple", "n": n}, results, started), rows)
    return 0 if equal else 1


# ---------------------------------------------------------------------------
# tk map


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _require_tableau(obj: Tableau | ReverseTableau) -> Tableau:
    if not isinstance(obj, Tableau):
        raise ValueError('expected a plain tableau, got one marked "reverse"')
    return obj


def _require_reverse(obj: Tableau | ReverseTableau) -> ReverseTableau:
    if not isinstance(obj, ReverseTableau):
        raise ValueError('expected a reverse tableau (JSON key "reverse": true)')
    return obj


def cmd_map(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    transform = args.transform
    params: dict = {"transform": transform}

    if transform == "realize-pair":
        if not args.a or not args.b:
            raise ValueError("map realize-pair requires --a and --b")
        a = parse_permutation(args.a)
        b = parse_permutation(args.b)
        params["a"] = format_permutation(a)
        params["b"] = format_permutation(b)
        produced = realize_sct(a, b).to_json()
    else:
        if not args.infile:
            raise ValueError(f"map {transform} requires --in FILE (or --in -)")
        params["in"] = args.infile
        data = _load_json(args.infile)
        if transform == "pct-to-rt":
            produced = pct_to_rt(_require_tableau(from_json(data))).to_json()
        elif transform == "rt-to-pct":
            if not args.sigma:
                raise ValueError("map rt-to-pct requires --sigma")
            sigma = parse_permutation(args.sigma)
            params["sigma"] = format_permutation(sigma)
            produced = rt_to_pct(_require_reverse(from_json(data)), sigma).to_json()
        elif transform == "spct-to-ldyck":
            produced = spct_to_ldyck(_require_tableau(from_json(data))).to_json()
        elif transform == "ldyck-to-spct":
            produced = ldyck_to_spct(ldyck_from_json(data)).to_json()
        elif transform == "ldyck-to-ltree":
            produced = tree_to_json(ldyck_to_ltree(ldyck_from_json(data)))
        else:  # ltree-to-ldyck
            produced = ltree_to_ldyck(tree_from_json(data)).to_json()

    results: dict = {"result": produced}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(produced, fh, indent=2)
            fh.write("\n")
        results["output_file"] = args.out
    rows = [{"key": k, "value": v} for k, v in produced.items()]
    _emit(args, _report("map", params, results, started), rows)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default="json",
        help="output format (default json)",
    )
    common.add_argument(
        "--seed", type=int, default=0,
        help="seed for any sampled verification (default 0)",
    )
    common.add_argument(
        "--max-objects", type=int, default=None, metavar="N",
        help=f"object cap per command (default {DEFAULT_MAX_OBJECTS}; "
        "env TK_MAX_OBJECTS also applies)",
    )

    parser = argparse.ArgumentParser(
        prog="tk",
        description="Composition tableaux, labeled Dyck paths, labeled "
        "binary trees, and the bijections connecting them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="count a family")
    p.add_argument("kind", choices=("spct", "srt", "ldyck", "ltree"))
    p.add_argument("--shape", help="composition such as 2,2,2 (spct/srt)")
    p.add_argument("--sigma", help="restrict spct to one type, e.g. '3 1 2'")
    p.add_argument("--n", type=int, help="semi-length or node count (ldyck/ltree)")
    p.add_argument("--list", metavar="FILE", help="write the full listing as JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("suite", choices=tuple(_SUITES))
    p.add_argument("--shape", help="single shape for the hecke suite")
    p.add_argument("--max-n", type=int, help="largest size (hecke/counts/pairs)")
    p.add_argument("--n", type=int, help="largest size (bijections)")
    p.add_argument("--max-size", type=int, help="largest shape size (classes)")
    p.add_argument("--samples", type=int, default=200,
                   help="sample count beyond the exhaustive range (default 200)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", parents=[common],
                       help="joint distribution tables with equality verdict")
    p.add_argument("kind", choices=("quadruple",))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", parents=[common], help="apply one bijection")
    p.add_argument(
        "transform",
        choices=(
            "pct-to-rt",
            "rt-to-pct",
            "spct-to-ldyck",
            "ldyck-to-spct",
            "ldyck-to-ltree",
            "ltree-to-ldyck",
            "realize-pair",
        ),
    )
    p.add_argument("--in", dest="infile", metavar="FILE",
                   help="input JSON file, or - for stdin")
    p.add_argument("--out", metavar="FILE", help="write the result JSON here")
    p.add_argument("--sigma", help="row type for rt-to-pct, e.g. '3 1 4 2'")
    p.add_argument("--a", help="first permutation for realize-pair")
    p.add_argument("--b", help="second permutation for realize-pair")
    p.set_defaults(func=cmd_map)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
