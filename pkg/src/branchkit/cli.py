"""Command line interface.

Subcommands: branch, fundamental, table, pieri, triple, verify.  Data goes to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 verification
mismatch, 2 invalid input, 3 internal consistency failure, 4 oracle budget
exceeded.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .branching import BranchEngine, branch
from .fundamental import fundamental_branching
from .oracle import DEFAULT_BUDGET, BudgetExceededError, oracle_branch
from .pieri import pieri_set
from .sl2 import (
    InternalConsistencyError,
    highest_component,
    lowest_component,
    rep_dimension,
)
from .subalgebra import SubalgebraType, all_types, build_triple
from .weights import (
    DominantWeight,
    dim_irrep,
    iter_dominant_weights,
    omega_to_partition,
    partition_to_omega,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_BUDGET = 4

CACHE_ENV_VAR = "BRANCHKIT_CACHE"
CACHE_VERSION = 1


def _parse_ints(text, what):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma separated integers, got {text!r}")


def _parse_type(args) -> SubalgebraType:
    blocks = _parse_ints(args.type, "--type")
    t = SubalgebraType(blocks)
    if t.n != args.n:
        raise ValueError(f"type {t} is a partition of {t.n}, not of n={args.n}")
    return t


def _parse_weight(args) -> DominantWeight:
    if args.weight is not None and args.partition is not None:
        raise ValueError("supply --weight or --partition, not both")
    if args.weight is not None:
        return DominantWeight(args.n, _parse_ints(args.weight, "--weight"))
    if args.partition is not None:
        return partition_to_omega(_parse_ints(args.partition, "--partition"), args.n)
    raise ValueError("one of --weight or --partition is required")


# ---------------------------------------------------------------- formatting

def canonical_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _latex_multvector(mv) -> str:
    terms = []
    for j in sorted(mv):
        m = mv[j]
        terms.append(("" if m == 1 else str(m)) + f"F_{{{j}}}")
    return "\\oplus ".join(terms) if terms else "0"


def _pretty_multvector(mv) -> list[str]:
    lines = ["j  multiplicity"]
    for j in sorted(mv):
        lines.append(f"{j}  {mv[j]}")
    return lines


def _csv_multvector(mv) -> list[str]:
    lines = ["j,multiplicity"]
    for j in sorted(mv):
        lines.append(f"{j},{mv[j]}")
    return lines


def _emit_multvector(fmt, mv, dimension, json_extra):
    if fmt == "json":
        payload = dict(json_extra)
        payload["multiplicities"] = {str(j): mv[j] for j in sorted(mv)}
        payload["dimension"] = str(dimension)
        payload["highest"] = highest_component(mv)
        payload["lowest"] = lowest_component(mv)
        print(canonical_json(payload))
    elif fmt == "csv":
        print("\n".join(_csv_multvector(mv)))
    elif fmt == "latex":
        print(_latex_multvector(mv))
    else:
        print("\n".join(_pretty_multvector(mv)))
        print(f"dimension {dimension}")
        print(f"highest {highest_component(mv)}")
        print(f"lowest {lowest_component(mv)}")


# ------------------------------------------------------------------ caching

def _cache_key_str(key) -> str:
    n, blocks, lam = key
    return f"{n}|{','.join(map(str, blocks))}|{','.join(map(str, lam))}"


def _cache_key_parse(text):
    n_str, blocks_str, lam_str = text.split("|")
    blocks = tuple(int(x) for x in blocks_str.split(",")) if blocks_str else ()
    lam = tuple(int(x) for x in lam_str.split(",")) if lam_str else ()
    return int(n_str), blocks, lam


def load_cache(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("version") != CACHE_VERSION:
        raise ValueError(f"cache {path} has version {data.get('version')}, expected {CACHE_VERSION}")
    cache = {}
    for key_str, mults in data["entries"].items():
        cache[_cache_key_parse(key_str)] = {int(j): int(m) for j, m in mults.items()}
    return cache


def save_cache(path, cache):
    entries = {
        _cache_key_str(key): {str(j): m for j, m in sorted(mv.items())}
        for key, mv in cache.items()
    }
    payload = {"version": CACHE_VERSION, "entries": entries}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(payload))
        fh.write("\n")


# ----------------------------------------------------------------- commands

def cmd_branch(args) -> int:
    t = _parse_type(args)
    w = _parse_weight(args)
    cache_path = args.cache or os.environ.get(CACHE_ENV_VAR)
    engine = BranchEngine()
    if cache_path and os.path.exists(cache_path):
        engine.cache = load_cache(cache_path)
    mv = engine.branch(t, w)
    dim = dim_irrep(w)
    if rep_dimension(mv) != dim:
        raise InternalConsistencyError(
            f"dimension mismatch: sum m_j(j+1) = {rep_dimension(mv)}, dim L(lambda) = {dim}"
        )
    lam = omega_to_partition(w)
    _emit_multvector(
        args.format,
        mv,
        dim,
        {
            "n": args.n,
            "type": list(t.blocks),
            "lambda_omega": list(w.coeffs),
            "lambda_partition": list(lam),
        },
    )
    if cache_path:
        save_cache(cache_path, engine.cache)
    if args.stats:
        print(
            f"computed={engine.stats['computed']} hits={engine.stats['hits']} "
            f"cache_entries={len(engine.cache)}",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_fundamental(args) -> int:
    t = _parse_type(args)
    mv = fundamental_branching(t, args.k, verify=args.verify)
    _emit_multvector(
        args.format,
        mv,
        rep_dimension(mv),
        {"n": args.n, "type": list(t.blocks), "k": args.k},
    )
    return EXIT_OK


def cmd_table(args) -> int:
    t = _parse_type(args)
    table = {k: fundamental_branching(t, k) for k in range(1, args.n)}
    if args.format == "json":
        payload = {
            "n": args.n,
            "type": list(t.blocks),
            "table": {
                str(k): {str(j): mv[j] for j in sorted(mv)} for k, mv in table.items()
            },
        }
        print(canonical_json(payload))
    elif args.format == "csv":
        print("k,j,multiplicity")
        for k, mv in table.items():
            for j in sorted(mv):
                print(f"{k},{j},{mv[j]}")
    elif args.format == "latex":
        for k, mv in table.items():
            print(f"L(\\omega_{{{k}}}): {_latex_multvector(mv)}")
    else:
        for k, mv in table.items():
            body = " + ".join(
                (f"{mv[j]}F_{j}" if mv[j] > 1 else f"F_{j}") for j in sorted(mv)
            )
            print(f"k={k}: {body}  (dim {rep_dimension(mv)})")
    return EXIT_OK


def cmd_pieri(args) -> int:
    w = DominantWeight(args.n, _parse_ints(args.weight, "--weight"))
    members = pieri_set(w, args.k)
    decorated = sorted(
        ((omega_to_partition(m), m) for m in members), reverse=True
    )
    for lam, m in decorated:
        omega_str = ",".join(str(a) for a in m.coeffs)
        part_str = "(" + ",".join(str(x) for x in lam) + ")"
        print(f"{omega_str}  {part_str}")
    return EXIT_OK


def cmd_triple(args) -> int:
    t = _parse_type(args)
    H, X, Y = build_triple(t)
    payload = {
        "n": args.n,
        "type": list(t.blocks),
        "H": H.tolist(),
        "X": X.tolist(),
        "Y": Y.tolist(),
    }
    print(canonical_json(payload))
    return EXIT_OK


def _verify_task(task):
    blocks, lam, budget = task
    t = SubalgebraType(blocks)
    w = partition_to_omega(lam, t.n)
    try:
        got = branch(t, w)
        want = oracle_branch(t, w, budget=budget)
    except BudgetExceededError as exc:
        raise BudgetExceededError(f"type {t}, lambda {lam or '()'}: {exc}") from None
    return lam, got, want


def cmd_verify(args) -> int:
    if args.types == "all":
        types = all_types(args.n)
    else:
        types = []
        for part in args.types.split(";"):
            t = SubalgebraType(_parse_ints(part, "--types"))
            if t.n != args.n:
                raise ValueError(f"type {t} is not a partition of n={args.n}")
            types.append(t)
    lambdas = [omega_to_partition(w) for w in iter_dominant_weights(args.n, args.max_boxes)]
    mismatches = 0
    for t in types:
        tasks = [(t.blocks, lam, args.budget) for lam in lambdas]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_verify_task, tasks))
        else:
            results = [_verify_task(task) for task in tasks]
        bad = [(lam, got, want) for lam, got, want in results if got != want]
        if bad:
            mismatches += len(bad)
            print(f"type {t}: {len(bad)} MISMATCH of {len(lambdas)}")
            for lam, got, want in bad:
                print(f"  key ({args.n}, {t.blocks}, {lam})")
                print(f"    recursion: {got}")
                print(f"    oracle:    {want}")
        else:
            print(f"type {t}: {len(lambdas)} weights ok")
    print("OK" if mismatches == 0 else f"FAILED: {mismatches} mismatches")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


# ------------------------------------------------------------------- parser

def _add_format(p):
    p.add_argument(
        "--format",
        choices=("pretty", "json", "csv", "latex"),
        default="pretty",
        help="output format (default pretty)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchkit",
        description="Exact branching of irreducible sl_n representations to sl_2 subalgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("branch", help="decompose Res L(lambda) for a dominant weight")
    p.add_argument("--n", type=int, required=True, help="rank of sl_n")
    p.add_argument("--type", required=True, help="subalgebra type, e.g. 3,2")
    p.add_argument("--weight", help="fundamental-weight coordinates a_1,...,a_{n-1}")
    p.add_argument("--partition", help="highest weight as a partition l_1,l_2,...")
    p.add_argument("--cache", help=f"JSON memo cache path (default ${CACHE_ENV_VAR})")
    p.add_argument("--stats", action="store_true", help="print cache statistics to stderr")
    _add_format(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("fundamental", help="decompose Res L(omega_k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--verify", action="store_true",
        help="cross-check every applicable closed form against the weight multiset",
    )
    _add_format(p)
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("table", help="fundamental branchings for every k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("pieri", help="list P(lambda, k), lex-descending")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("triple", help="export the (H, X, Y) matrices as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("verify", help="sweep branch against the tableau oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--types", default="all",
        help="'all' or a semicolon separated list of partitions, e.g. '5;3,2'",
    )
    p.add_argument("--max-boxes", type=int, default=6, help="largest lambda size (default 6)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle tableau cap")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
