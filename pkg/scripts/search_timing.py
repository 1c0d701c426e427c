"""Time the automorphism search and the subgroup lattice on a range of graphs.

    python3 scripts/search_timing.py --max-n 50 --repeat 3
"""
import argparse
import statistics
import sys
import time

from gpsym.autsearch import automorphism_group
from gpsym.grouplab import SubgroupLattice
from gpsym.petersen import admissible_pairs, build


def _time(fn, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=50)
    ap.add_argument("--step", type=int, default=5, help="sample every STEP-th n")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--lattice", action="store_true", help="also time subgroup enumeration")
    args = ap.parse_args(argv)

    print(f"{'graph':>10} {'|Aut|':>6} {'search ms':>10} {'lattice ms':>11}")
    for n, k in admissible_pairs(args.max_n):
        if n % args.step:
            continue
        g = build(n, k)
        ms = 1000 * _time(lambda: automorphism_group(g), args.repeat)
        aut = automorphism_group(g)
        lat = ""
        if args.lattice and aut.order <= 480:
            lat = f"{1000 * _time(lambda: SubgroupLattice(aut), 1):.0f}"
        print(f"{f'P({n},{k})':>10} {aut.order:>6} {ms:>10.1f} {lat:>11}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
