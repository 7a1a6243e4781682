"""Brute-force b(t) against the closed form over every t of one ground space.

Usage: python3 scripts/oracle_sweep.py --space partite -n 3 -r 2 [--workers 4]
"""

import argparse
import time

from blockade.hyper import GroundSpace
from blockade.oracle import SearchBudget, brute_blocker_max
from blockade.seqcore import blocker_max_partite
from blockade.setfam import blocker_max_subsets


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--space", choices=["partite", "subsets"], default="partite")
    ap.add_argument("-n", type=int, required=True)
    ap.add_argument("-r", type=int, required=True)
    ap.add_argument("--t-max", type=int, default=None)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--reduce", action="store_true")
    args = ap.parse_args()
    U = GroundSpace(args.space, args.n, args.r)
    closed = blocker_max_partite if U.kind == "partite" else blocker_max_subsets
    t_max = U.size if args.t_max is None else min(args.t_max, U.size)
    budget = SearchBudget()
    mismatches = 0
    print("t  brute  closed  exhaustive  seconds")
    for t in range(t_max + 1):
        t0 = time.perf_counter()
        res = brute_blocker_max(U, t, budget, reduce=args.reduce, workers=args.workers)
        want = closed(t, U.n, U.r).value
        mismatches += res.exhaustive and res.value != want
        print(f"{t}  {res.value}  {want}  {res.exhaustive}  {time.perf_counter() - t0:.2f}")
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
