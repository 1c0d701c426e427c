"""Summarise the verdict table of one or more graphs by isomorphism type.

For each type, count conjugacy classes and how many of them are positively
realizable.  Useful for eyeballing the mixed P(10,3) table.

    python3 scripts/verdict_summary.py 10 3 13 5
"""
import argparse
import sys
import time
from collections import defaultdict

from gpsym.classifier import Answer, classify_all


def summarise(n: int, k: int) -> None:
    t0 = time.perf_counter()
    rows = classify_all(n, k)
    by_label = defaultdict(lambda: [0, 0, 0, set()])
    for r in rows:
        entry = by_label[(r.subgroup_class.order, r.subgroup_class.iso_label.name)]
        entry[0] += 1
        entry[1] += r.verdict.positively_realizable is Answer.YES
        entry[2] += r.subgroup_class.class_size
        if r.verdict.witness is not None:
            entry[3].add(r.verdict.witness.kind.value)
    print(f"P({n},{k}): {len(rows)} classes in {time.perf_counter() - t0:.1f}s")
    print(f"  {'order':>5}  {'type':<24} {'classes':>7} {'positive':>8} {'subgroups':>9}  witnesses")
    for (order, name), (classes, pos, subs, kinds) in sorted(by_label.items()):
        print(f"  {order:>5}  {name:<24} {classes:>7} {pos:>8} {subs:>9}  {', '.join(sorted(kinds))}")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("pairs", nargs="+", type=int, help="n k [n k ...]")
    args = ap.parse_args(argv)
    if len(args.pairs) % 2:
        ap.error("give n and k in pairs")
    for n, k in zip(args.pairs[::2], args.pairs[1::2]):
        summarise(n, k)
    return 0


if __name__ == "__main__":
    sys.exit(main())
