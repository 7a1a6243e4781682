"""Command line entry point: ``blockade <command> ...``.

Exit codes: 0 success, 2 usage or parameter error, 3 budget exceeded,
4 internal consistency failure (including a failed verification or an
oracle that disagrees with the closed form).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hyper, oracle, seqcore, setfam
from .errors import BlockadeError, BudgetExceeded, ParameterError
from .formats import table_to_csv, table_to_json
from .hyper import GroundSpace, Hypergraph
from .verify import SUITES, run_suite
from .words import parse_word, render

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_CONSISTENCY = 0, 2, 3, 4


def _space_args(p, require_t=False):
    p.add_argument("--space", choices=["partite", "subsets"], default="partite")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    if require_t:
        p.add_argument("-t", type=int, required=True)


def _output_args(p, formats=("csv", "json")):
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("-o", "--output", default="-", help="file path, '-' for stdout")


def _budget_args(p):
    p.add_argument("--max-universe-bits", type=int, default=None)
    p.add_argument("--max-families", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockade", description="Exact blocker sizes of cross-intersecting pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit the N (partite) or M (subsets) table")
    _space_args(p)
    _output_args(p)

    p = sub.add_parser("mtable", help="emit the M table (same as table --space subsets)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    _output_args(p)

    p = sub.add_parser("blocker-max", help="closed-form b(t) with witness words")
    _space_args(p, require_t=True)
    _output_args(p)

    p = sub.add_parser("family", help="materialize the family of a word as hypergraph JSON")
    _space_args(p)
    p.add_argument("--word", required=True, help="string over '&' and '|', or ALPHA/OMEGA; '' or () for empty")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("blocker", help="blocker of a hypergraph given as JSON")
    p.add_argument("--input", default="-", help="hypergraph JSON file, '-' for stdin")
    p.add_argument("--via-shadow", action="store_true", help="use the shadow identity (subsets, r <= n-r)")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--space", choices=["partite", "subsets"], default="partite")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _budget_args(p)

    p = sub.add_parser("oracle", help="run a brute-force oracle and compare with the closed form")
    p.add_argument("name", choices=["blocker-max", "min-shadow", "rainbow", "matching"])
    p.add_argument("--space", choices=["partite", "subsets"], default="partite")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, default=None)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--reduce", action="store_true", help="fix the first edge (symmetry reduction)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", default="-")
    _budget_args(p)
    return parser


def _emit(text: str, path: str):
    if not text.endswith("\n"):
        text += "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _budget(args) -> oracle.SearchBudget:
    overrides = {
        k: v
        for k, v in (
            ("max_universe_bits", args.max_universe_bits),
            ("max_families", args.max_families),
            ("time_limit", args.time_limit),
        )
        if v is not None
    }
    return oracle.SearchBudget.from_env(**overrides)


def _need(value, flag):
    if value is None:
        raise ParameterError(f"{flag} is required for this command")
    return value


def _check_nr(n, r):
    if n < 2:
        raise ParameterError("n must be >= 2")
    if r < 1:
        raise ParameterError("r must be >= 1")


def cmd_table(args) -> int:
    _check_nr(args.n, args.r)
    if args.space == "partite":
        table = seqcore.n_table(args.n, args.r)
    else:
        table = setfam.m_table(args.n, args.r)
    _emit(table_to_csv(table) if args.format == "csv" else table_to_json(table), args.output)
    return EXIT_OK


def cmd_blocker_max(args) -> int:
    _check_nr(args.n, args.r)
    if args.space == "partite":
        ans = seqcore.blocker_max_partite(args.t, args.n, args.r)
    else:
        ans = setfam.blocker_max_subsets(args.t, args.n, args.r)
    row = {
        "t": str(args.t),
        "value": str(ans.value),
        "index": ans.index,
        "word": render(ans.word),
        "blocker_word": render(ans.blocker_word),
    }
    if args.format == "json":
        text = json.dumps(row)
    else:
        text = "t,value,index,word,blocker_word\n" + ",".join(str(v) for v in row.values())
    _emit(text, args.output)
    return EXIT_OK


def cmd_family(args) -> int:
    w = parse_word(args.word)
    if args.space == "partite":
        F = hyper.materialize_partite_family(w, args.n, args.r)
    else:
        F = setfam.materialize_subset_family(w, args.n, args.r)
    _emit(F.to_json(), args.output)
    return EXIT_OK


def cmd_blocker(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    H = Hypergraph.from_json(text)
    B = setfam.blocker_via_shadow(H) if args.via_shadow else hyper.blocker(H)
    _emit(B.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(
        args.suite,
        n=args.n,
        r=args.r,
        k=args.k,
        space=args.space,
        samples=args.samples,
        seed=args.seed,
        budget=_budget(args),
    )
    for c in checks:
        print(c.line())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CONSISTENCY


def cmd_oracle(args) -> int:
    budget = _budget(args)
    closed = None
    if args.name == "blocker-max":
        space = GroundSpace(args.space, args.n, args.r)
        t = _need(args.t, "-t")
        res = oracle.brute_blocker_max(space, t, budget, reduce=args.reduce, workers=args.workers)
        if args.space == "partite" and args.n >= 2:
            closed = seqcore.blocker_max_partite(t, args.n, args.r).value
        elif args.space == "subsets" and args.n >= 2 * args.r:
            closed = setfam.blocker_max_subsets(t, args.n, args.r).value
        payload = res.to_dict()
    elif args.name == "min-shadow":
        k, m = _need(args.k, "-k"), _need(args.m, "-m")
        res = oracle.brute_min_shadow(args.n, k, m, args.r, budget)
        closed = oracle.min_cascade_shadow(args.n, k, m, args.r)
        payload = res.to_dict()
    elif args.name == "matching":
        k = _need(args.k, "-k")
        space = GroundSpace(args.space, args.n, args.r)
        res = oracle.brute_extremal_matching_number(space, k, budget)
        if args.space == "partite":
            closed = (k - 1) * args.n ** (args.r - 1)
        payload = res.to_dict()
    else:
        k = _need(args.k, "-k")
        rep = oracle.rainbow_counterexample_search(args.n, args.r, k, budget)
        payload = rep.to_dict()
        payload["verdict"] = "verified" if rep.verified else ("counterexample" if rep.exhaustive else "partial")
        _emit(json.dumps(payload), args.output)
        if not rep.exhaustive:
            return EXIT_BUDGET
        if k == 2 and not rep.verified:
            return EXIT_CONSISTENCY
        return EXIT_OK

    if not res.exhaustive:
        payload["verdict"] = "PARTIAL"
        _emit(json.dumps(payload), args.output)
        return EXIT_BUDGET
    payload["closed_form"] = None if closed is None else str(closed)
    payload["verdict"] = "N/A" if closed is None else ("AGREE" if closed == res.value else "DISAGREE")
    _emit(json.dumps(payload), args.output)
    return EXIT_CONSISTENCY if payload["verdict"] == "DISAGREE" else EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "mtable": cmd_table,
    "blocker-max": cmd_blocker_max,
    "family": cmd_family,
    "blocker": cmd_blocker,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "mtable":
        args.space = "subsets"
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error[{exc.exit_code}]: {exc}", file=sys.stderr)
        partial = exc.partial
        if partial is not None and hasattr(partial, "to_json"):
            _emit(partial.to_json(), "-")
        return EXIT_BUDGET
    except BlockadeError as exc:
        print(f"error[{exc.exit_code}]: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError, KeyError) as exc:
        print(f"error[{EXIT_USAGE}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
