#!/usr/bin/env python3
"""Growth analysis of the five-edge move graph's count columns.

Prints consecutive-count ratios against the two candidate constants:
the greatest real root of the generating-function denominator cubic
(2x^3 - 4x^2 - x + 1, ~2.12) and the greatest real root of its
coefficient-reversed companion (x^3 - x^2 - 4x + 2, ~2.34).  The data
settles which one governs.
"""

import argparse
from fractions import Fraction

from hanoilab.recurrence import FIVE_EDGE_GRAPH, eval_move_counts, growth_rate_5edge


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=40)
    parser.add_argument("--pair", default="2>1")
    parser.add_argument("--tolerance", type=float, default=1e-9)
    args = parser.parse_args()
    i, j = (int(p) for p in args.pair.split(">"))

    report = growth_rate_5edge(
        Fraction(args.tolerance).limit_denominator(10**15),
        ratio_n=args.n,
        pair=(i, j),
    )
    denom = float(report.denominator_root)
    recip = float(report.reciprocal_root)
    print(f"denominator cubic root : {denom:.9f}")
    print(f"reciprocal cubic root  : {recip:.9f}")
    print()

    column = eval_move_counts(FIVE_EDGE_GRAPH, args.n).column((i, j))
    print(f"n  N({i},{j},n)ratio      vs denominator   vs reciprocal")
    for n in range(2, args.n + 1, max(1, args.n // 20)):
        ratio = column[n] / column[n - 1]
        print(
            f"{n:>2} {ratio:.9f}   {abs(ratio - denom):.3e}       "
            f"{abs(ratio - recip):.3e}"
        )
    print()
    print(f"measured ratio at n={args.n}: {float(report.ratio):.9f}")
    print(f"governing constant: {report.governing} root")
    if not report.matches_denominator_root:
        print(
            "note: the denominator's own greatest root (~2.12) does NOT "
            "govern growth; the reciprocal root (~2.34) does"
        )


if __name__ == "__main__":
    main()
