#!/usr/bin/env python3
"""Enumerate the strongly connected move graphs and certify optimality.

For every isomorphism class representative, checks that the constructive
transfer, the recurrence system, and the exhaustive search agree on all
six ordered peg pairs up to the requested disc count.
"""

import argparse

from hanoilab.cli import enumerate_graph_classes
from hanoilab.oracle import verify_optimality


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--all-members", action="store_true")
    args = parser.parse_args()

    failures = 0
    for cls in enumerate_graph_classes():
        graphs = cls.members if args.all_members else (cls.representative,)
        for graph in graphs:
            for n in range(1, args.n + 1):
                report = verify_optimality(graph, n)
                failures += len(report.failures())
        counts = [
            verify_optimality(cls.representative, n).checks[0].bfs
            for n in range(1, args.n + 1)
        ]
        print(
            f"{cls.name:<12} members={cls.size} rep={cls.representative.format():<28}"
            f" N(1,2,n)={counts}"
        )
    print()
    print("mismatches:", failures)
    raise SystemExit(0 if failures == 0 else 1)


if __name__ == "__main__":
    main()
