"""Exact f(n, r, k) on tiny subset spaces: the largest family in C([n], r) with no k pairwise disjoint edges.

Two constructions are printed alongside for comparison: all edges meeting
{1, ..., k-1}, and the clique C([kr-1], r).
"""

import argparse
from math import comb

from blockade.hyper import GroundSpace
from blockade.oracle import SearchBudget, brute_extremal_matching_number


def star_union(n, r, k):
    # edges meeting {1, ..., k-1}
    return comb(n, r) - comb(n - k + 1, r)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-families", type=int, default=20_000_000)
    args = ap.parse_args()
    budget = SearchBudget(max_families=args.max_families)
    print("n  r  k  f(n,r,k)  stars  clique  exhaustive")
    for n in range(2, args.max_n + 1):
        for r in range(1, n + 1):
            for k in range(2, n // r + 2):
                U = GroundSpace.subsets(n, r)
                if U.size > 15:
                    continue
                res = brute_extremal_matching_number(U, k, budget)
                clique = comb(min(n, k * r - 1), r)
                print(f"{n}  {r}  {k}  {res.value}  {star_union(n, r, k)}  {clique}  {res.exhaustive}")


if __name__ == "__main__":
    main()
