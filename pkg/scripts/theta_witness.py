"""Smallest spaces where the theta cluster closure is not idempotent.

The cluster closure collects points every open neighbourhood of which has
closure meeting A.  Applying it twice can add more points; the theta-closed
hull (smallest theta-closed superset) is what the T(kappa, theta) property
and the generic operator interface use.
"""

import argparse

from topsep.core import fmt_set
from topsep.enumeration import enumerate_topologies
from topsep.operators import THETA, apply, theta_closure


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    for n in range(args.max_n + 1):
        total = bad = 0
        first = None
        for s in enumerate_topologies(n, up_to_iso=True):
            total += 1
            for a in s.subsets():
                once = theta_closure(s, a)
                if theta_closure(s, once) != once:
                    bad += 1
                    first = first or (s, a, once)
                    break
        print(f"n={n}: {bad}/{total} classes have a non-idempotent cluster closure")
        if first:
            s, a, once = first
            print(f"    e.g. {s!r}, A={fmt_set(a)}: cl_theta(A)={fmt_set(once)}, "
                  f"cl_theta twice={fmt_set(theta_closure(s, once))}, hull={fmt_set(apply(s, THETA, a))}")


if __name__ == "__main__":
    main()
