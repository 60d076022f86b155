#!/usr/bin/env python3
"""Survey of balanced-labeling counts across simple graph families.

Prints the closed-form count for every (target, mode) combination over
directed paths, directed cycles and inward stars of growing size.  The
cycle family alternates parity with its length, which makes the
involution factor in the full/flexible column come and go; the path and
star families are acyclic, so their rigid counts are driven entirely by
the component structure.

    python3 scripts/count_survey.py
    python3 scripts/count_survey.py --max-size 8 --groups symmetric:3 quaternion:8
"""

import argparse
import sys

from bgains.balance import EDGES, FLEXIBLE, FULL, RIGID
from bgains.digraph import Digraph, analyze
from bgains.enumeration import count
from bgains.groups import make_group

COMBOS = tuple((target, mode) for target in (EDGES, FULL) for mode in (FLEXIBLE, RIGID))


def path(n: int) -> Digraph:
    return Digraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Digraph:
    return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Digraph:
    return Digraph(n, tuple((i, 0) for i in range(1, n)))


FAMILIES = (("path", path), ("cycle", cycle), ("star", star))


def factored(result, group) -> str:
    inv = len(group.involutions())
    parts = []
    if result.s:
        parts.append(f"{inv}^{result.s}")
    if result.t:
        parts.append(f"{group.order}^{result.t}")
    formula = " * ".join(parts) if parts else "1"
    return f"{formula} = {result.value}"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-size", type=int, default=2)
    parser.add_argument("--max-size", type=int, default=6)
    parser.add_argument(
        "--groups",
        nargs="+",
        default=["cyclic:2", "symmetric:3"],
        metavar="SPEC",
    )
    args = parser.parse_args()
    groups = [make_group(spec) for spec in args.groups]

    for name, build in FAMILIES:
        for n in range(max(args.min_size, 2), args.max_size + 1):
            d = build(n)
            report = analyze(d)
            shape = "bipartite" if report.bipartite else "odd"
            print(
                f"{name} n={n}: {d.n_edges} edges, {shape}, "
                f"{report.scc_count} components, {report.cross_scc_edges} cross edges"
            )
            for group in groups:
                cells = "   ".join(
                    f"{target}/{mode}: {factored(count(group, d, target, mode), group)}"
                    for target, mode in COMBOS
                )
                print(f"  {group.name:<14} {cells}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
