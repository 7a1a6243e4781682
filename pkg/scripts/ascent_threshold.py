"""Smallest n at which the M table ascends strictly, for r = 1..R.

Usage: python3 scripts/ascent_threshold.py --max-r 5 --span 6
"""

import argparse

from blockade.setfam import m_table


def strictly_ascending(values):
    return all(a < b for a, b in zip(values, values[1:]))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=4)
    ap.add_argument("--span", type=int, default=6, help="how many n beyond 2r to confirm")
    args = ap.parse_args()
    print("r  first_ascending_n  ascends_on_[2r, 2r+span]")
    for r in range(1, args.max_r + 1):
        first = None
        for n in range(max(2, 2 * r - 1), 2 * r + args.span + 1):
            if strictly_ascending(m_table(n, r, check=False).values):
                first = n
                break
        tail = all(strictly_ascending(m_table(n, r, check=False).values) for n in range(2 * r, 2 * r + args.span + 1))
        print(f"{r}  {first}  {tail}")


if __name__ == "__main__":
    main()
