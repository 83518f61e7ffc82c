#!/usr/bin/env python3
"""Run the conjecture probe across several distances and summarize.

Besides the per-distance MATCH/MISMATCH tables, prints how the two
constructive standard-to-standard transfers compare: whether the
five-step procedure ever undercuts the symmetric one at the probed
sizes.
"""

import argparse

from hanoilab.oracle import conjecture_probe


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--distances", default="2,3", help="comma-separated C values")
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--max-states", type=int, default=2_000_000)
    args = parser.parse_args()

    q_shorter = []
    for C in (int(c) for c in args.distances.split(",")):
        report = conjecture_probe(C, args.n_max, max_states=args.max_states)
        print(f"# distance C={C}")
        print(report.to_csv())
        q_shorter.extend(
            (C, row.n) for row in report.rows if row.len_q < row.len_a_sym
        )
        mismatches = [row.n for row in report.rows if not row.match]
        if mismatches:
            print(f"conjecture MISMATCH at n={mismatches}")
        else:
            print("all rows MATCH the conjectured recurrences")
        print()

    if q_shorter:
        print(f"five-step transfer beat the symmetric one at: {q_shorter}")
    else:
        print(
            "the five-step transfer never beat the symmetric one at the "
            "probed sizes"
        )


if __name__ == "__main__":
    main()
