"""Implication matrix between separation axioms on small finite spaces.

Prints one row per axiom; a cell is '=>' when no counterexample exists up to
--max-n points, otherwise the size of the smallest counterexample.  With
--witnesses the counterexamples themselves are listed.
"""

import argparse

from topsep.core import fmt_set
from topsep.enumeration import implication_matrix

DEFAULT = ("T0", "TD", "T_half", "T1", "weakly_hausdorff", "kd", "kc", "US", "hausdorff", "regular", "semi_regular")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--axioms", default=",".join(DEFAULT))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--witnesses", action="store_true")
    args = ap.parse_args()

    axioms = tuple(a.strip() for a in args.axioms.split(",") if a.strip())
    m = implication_matrix(axioms, args.max_n, jobs=args.jobs)
    width = max(map(len, axioms))
    print(" " * width + " | " + " ".join(f"{a[:6]:>6}" for a in axioms))
    for p in axioms:
        cells = []
        for q in axioms:
            if p == q:
                cells.append(f"{'.':>6}")
            else:
                e = m[p, q]
                cells.append(f"{'=>' if e.implies else 'n=' + str(e.witness[0]):>6}")
        print(f"{p:>{width}} | " + " ".join(cells))

    if args.witnesses:
        print()
        for (p, q), e in sorted(m.status.items()):
            if not e.implies:
                s = m.witness_space(p, q)
                print(f"{p} but not {q}: n={s.n} opens " + " ".join(fmt_set(u) for u in s.opens))


if __name__ == "__main__":
    main()
