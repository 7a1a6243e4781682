"""Where the literal two-level fractal identity breaks, and the form that holds instead.

For each n, counts index triples (p, b, c) where
    N(2^{p+1}+b) - N(2^p+c) != (n-1)(N(2^p+b) - N(c))
and confirms
    N(2^{p+1}+b) - N(2^p+c) == (n-1)(N(2^p+b) - (n-2)N(b) - N(c)).
"""

import argparse

from blockade.seqcore import n_table


def triples(r):
    for p in range(r):
        for b in range(min(2**p, 2**r - 2 ** (p + 1)) + 1):
            for c in range(2**p + 1):
                yield p, b, c


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-r", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print("n  triples  literal_failures  first_failure  corrected_failures")
    for n in range(2, args.max_n + 1):
        N = n_table(n, args.r).values
        total = lit = fixed = 0
        first = None
        for p, b, c in triples(args.r):
            total += 1
            lhs = N[2 ** (p + 1) + b] - N[2**p + c]
            if lhs != (n - 1) * (N[2**p + b] - N[c]):
                lit += 1
                first = first or (p, b, c)
            if lhs != (n - 1) * (N[2**p + b] - (n - 2) * N[b] - N[c]):
                fixed += 1
        print(f"{n}  {total}  {lit}  {first}  {fixed}")


if __name__ == "__main__":
    main()
