"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails or an input file is
rejected, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import catalog as cat
from .classify import AXIOMS, check_axiom, classify, t_kappa_xi
from .core import FinSpace, bits, fmt_set, mask_of
from .dsl import SpaceFormatError, describe_opens, emit_space, load_space
from .enumeration import SearchQuery, enumerate_topologies, search
from .errors import TopsepError
from .operators import apply, delta_closure, operator, theta_closure, theta_interior
from .verify import family_entries, verify_paper

SCHEMA_VERSION = 1

OPS = {
    "closure": lambda s, a: apply(s, operator("c"), a),
    "delta": delta_closure,
    "theta": theta_closure,
    "theta-int": theta_interior,
    "lambda": lambda s, a: apply(s, operator("lambda"), a),
    "zero": lambda s, a: apply(s, operator("zero"), a),
    "urysohn": lambda s, a: apply(s, operator("urysohn"), a),
    "quasi": lambda s, a: apply(s, operator("quasi"), a),
}
XI = ("c", "delta", "theta", "lambda", "zero", "urysohn", "quasi")


class InputError(Exception):
    pass


def _report(command: str, ok: bool, result: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "ok": ok, "result": result}


def _emit(args, report: dict, lines: list[str]) -> int:
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0 if report["ok"] else 1


def _load(path: str):
    try:
        doc = load_space(path)
        return doc, doc.build()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except SpaceFormatError as exc:
        raise InputError(f"{path}:{exc}") from None
    except (TopsepError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _finite(path: str) -> tuple[str, FinSpace]:
    doc, space = _load(path)
    if not isinstance(space, FinSpace):
        raise InputError(f"{path}: this command needs a finite space, got catalog family {doc.family}")
    return doc.label, space


def _parse_set(text: str, n: int) -> int:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InputError(f"--set must look like {{0,2}}, got {text!r}")
    items = [t.strip() for t in body[1:-1].split(",") if t.strip()]
    try:
        pts = [int(t) for t in items]
    except ValueError:
        raise InputError(f"--set has a non-integer member: {text!r}") from None
    bad = [p for p in pts if not 0 <= p < n]
    if bad:
        raise InputError(f"--set members {bad} lie outside 0..{n - 1}")
    return mask_of(pts)


def _axiom_list(text: str | None) -> list[str]:
    if not text:
        return []
    return [check_axiom(a.strip()) for a in text.split(",") if a.strip()]


def _verdict_word(v) -> str:
    return "unsupported" if v is None else str(v).lower()


def cmd_classify(args) -> int:
    doc, space = _load(args.file)
    axioms = [check_axiom(a) for a in args.axiom] if args.axiom else list(AXIOMS)
    verdicts = []
    if isinstance(space, FinSpace):
        for a in axioms:
            verdicts.append({"axiom": a, "value": classify(space, a), "source": "computed"})
        result = {"space": doc.label, "kind": "finite", "n": space.n, "verdicts": verdicts}
    else:
        for a in axioms:
            v = cat.d_classify(space, a)
            entry = {"axiom": a, "value": v.value, "source": v.kind}
            if v.note:
                entry["note"] = v.note
            verdicts.append(entry)
        result = {"space": doc.label, "kind": "catalog", "verdicts": verdicts}
    lines = []
    for v in verdicts:
        suffix = "" if v["source"] == "computed" else f" ({v['source']})"
        lines.append(f"{v['axiom']}: {_verdict_word(v['value'])}{suffix}")
    return _emit(args, _report("classify", True, result), lines)


def cmd_op(args) -> int:
    label, space = _finite(args.file)
    a = _parse_set(args.set, space.n)
    value = OPS[args.op](space, a)
    result = {"space": label, "op": args.op, "set": list(bits(a)), "value": list(bits(value))}
    return _emit(args, _report("op", True, result), [fmt_set(value)])


def cmd_tkx(args) -> int:
    label, space = _finite(args.file)
    if args.kappa == "all":
        kappa = "all"
    else:
        try:
            kappa = int(args.kappa)
        except ValueError:
            raise InputError(f"--kappa must be a natural number or 'all', got {args.kappa!r}") from None
        if kappa < 0:
            raise InputError("--kappa must be non-negative")
    value = t_kappa_xi(space, kappa, operator(args.xi))
    result = {"space": label, "kappa": str(kappa), "xi": args.xi, "value": value}
    return _emit(args, _report("tkx", True, result), [str(value).lower()])


def cmd_enumerate(args) -> int:
    spaces = list(enumerate_topologies(args.n, up_to_iso=args.iso))
    result = {"n": args.n, "up_to_iso": args.iso, "count": len(spaces)}
    if args.count_only:
        lines = [str(len(spaces))]
    else:
        result["spaces"] = [describe_opens(s) for s in spaces]
        lines = [" ".join(fmt_set(u) for u in s.opens) for s in spaces] + [f"count: {len(spaces)}"]
    return _emit(args, _report("enumerate", True, result), lines)


def cmd_search(args) -> int:
    query = SearchQuery(tuple(_axiom_list(args.holds)), tuple(_axiom_list(args.fails)), args.max_n)
    w = search(query, jobs=args.jobs)
    result = {"holds": list(query.holds), "fails": list(query.fails), "max_n": args.max_n, "witness": None}
    if w is None:
        lines = [f"no witness with at most {args.max_n} points"]
    else:
        result["witness"] = {"n": w.space.n, "opens": describe_opens(w.space), "properties": w.properties}
        lines = [f"witness n={w.space.n}: " + " ".join(fmt_set(u) for u in w.space.opens)]
        lines += [f"  {a}: {str(v).lower()}" for a, v in w.properties.items()]
    return _emit(args, _report("search", True, result), lines)


def _entry_lines(entries) -> list[str]:
    lines = []
    for e in entries:
        status = "PASS" if e.passed else "FAIL"
        line = f"{status} {e.theorem} [{e.scope}] checked={e.checked}"
        if e.witness:
            line += f" witness: {e.witness}"
        lines.append(line)
    return lines


def cmd_verify(args) -> int:
    report = verify_paper(args.max_n, jobs=args.jobs, seed=args.seed)
    result = {
        "max_n": report.max_n, "seed": args.seed, "failures": report.failures,
        "entries": [e.to_json() for e in report.entries],
    }
    lines = _entry_lines(report.entries) + [f"failures: {report.failures}"]
    return _emit(args, _report("verify-paper", report.ok, result), lines)


def cmd_catalog(args) -> int:
    if args.action == "list":
        return _emit(args, _report("catalog-list", True, {"families": list(cat.FAMILY_NAMES)}), list(cat.FAMILY_NAMES))
    if not args.name:
        raise InputError("catalog check needs a family name")
    if args.name not in cat.FAMILY_NAMES:
        raise InputError(f"unknown catalog family {args.name!r}; expected one of {', '.join(cat.FAMILY_NAMES)}")
    entries = family_entries(args.name, random.Random(args.seed))
    failures = sum(not e.passed for e in entries)
    result = {
        "family": args.name, "seed": args.seed, "failures": failures,
        "entries": [e.to_json() for e in entries],
    }
    lines = _entry_lines(entries) + [f"failures: {failures}"]
    return _emit(args, _report("catalog-check", failures == 0, result), lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topsep", description="Separation axioms on finite and catalogued spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, jobs=False, seed=False):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="seed for sampled catalog sets")
        return sp

    sp = common(sub.add_parser("classify", help="decide separation axioms for a space"))
    sp.add_argument("file")
    sp.add_argument("--axiom", action="append", choices=AXIOMS, metavar="AXIOM")
    sp.set_defaults(func=cmd_classify)

    sp = common(sub.add_parser("op", help="apply a closure-type operator to a set"))
    sp.add_argument("file")
    sp.add_argument("--set", required=True)
    sp.add_argument("--op", required=True, choices=sorted(OPS))
    sp.set_defaults(func=cmd_op)

    sp = common(sub.add_parser("tkx", help="test the T(kappa, xi) property"))
    sp.add_argument("file")
    sp.add_argument("--kappa", required=True)
    sp.add_argument("--xi", required=True, choices=XI)
    sp.set_defaults(func=cmd_tkx)

    sp = common(sub.add_parser("enumerate", help="list topologies on n points"), jobs=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--iso", action="store_true", help="one space per homeomorphism class")
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = common(sub.add_parser("search", help="find a smallest counterexample"), jobs=True)
    sp.add_argument("--holds", default="")
    sp.add_argument("--fails", default="")
    sp.add_argument("--max-n", type=int, default=4)
    sp.set_defaults(func=cmd_search)

    sp = common(sub.add_parser("verify-paper", help="run every theorem suite"), jobs=True, seed=True)
    sp.add_argument("--max-n", type=int, default=4)
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("catalog", help="list or check catalogued infinite spaces"), seed=True)
    sp.add_argument("action", choices=("list", "check"))
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TopsepError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run(argv: Sequence[str]) -> int:
    """Run the CLI in-process and return its exit status (usage errors included)."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
