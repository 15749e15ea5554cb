"""Verdict table for the catalogued infinite spaces, marking documented entries."""

import argparse

from topsep.catalog import FAMILY_NAMES, DescribedSpace, check_family, d_classify_all
from topsep.classify import AXIOMS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--notes", action="store_true", help="print proof sketches of documented verdicts")
    args = ap.parse_args()

    table = {name: d_classify_all(DescribedSpace(name)) for name in FAMILY_NAMES}
    short = [n.replace("-", " ")[:14] for n in FAMILY_NAMES]
    print(f"{'axiom':<22}" + "".join(f"{s:>16}" for s in short))
    for ax in AXIOMS:
        row = []
        for name in FAMILY_NAMES:
            v = table[name][ax]
            word = "?" if v.value is None else ("yes" if v.value else "no")
            row.append(f"{word + ('*' if v.kind == 'documented' else ''):>16}")
        print(f"{ax:<22}" + "".join(row))
    print("(* documented verdict)")

    print()
    for name in FAMILY_NAMES:
        lines = check_family(name)
        ok = sum(l.ok for l in lines)
        print(f"{name}: {ok}/{len(lines)} example verdicts reproduced")

    if args.notes:
        print()
        for name in FAMILY_NAMES:
            for ax, v in table[name].items():
                if v.kind == "documented":
                    print(f"{name} {ax}: {v.note}")


if __name__ == "__main__":
    main()
