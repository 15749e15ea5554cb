"""Count topologies on n points, labelled and up to homeomorphism, with timings."""

import argparse
import time

from topsep.enumeration import MAX_ISO_N, count_topologies


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'n':>2} {'labelled':>9} {'classes':>8} {'seconds':>8}")
    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        lab = count_topologies(n)
        iso = count_topologies(n, up_to_iso=True) if n <= MAX_ISO_N else None
        dt = time.perf_counter() - t0
        print(f"{n:>2} {lab:>9} {iso if iso is not None else '-':>8} {dt:>8.2f}")


if __name__ == "__main__":
    main()
