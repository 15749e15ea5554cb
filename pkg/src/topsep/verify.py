"""The verify-paper sweep: every property suite over all small spaces, plus the catalog.

Each suite walks the labelled topologies on at most ``max_n`` points and
stops at its first counterexample.  Results come back as :class:`Entry`
records in a fixed order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Iterator

from . import catalog as cat
from .classify import classify, classify_all, regular_by_theta, singletons_open_or_closed, t_kappa_xi
from .core import (
    FinSpace,
    closure,
    compress,
    fmt_set,
    is_locally_dense,
    is_subset,
    subspace,
    topological_sum,
)
from .enumeration import enumerate_topologies
from .errors import BoundExceeded
from .maps import (
    bijections,
    enumerate_continuous_maps,
    is_continuous,
    is_homeomorphism,
    is_perfect,
    is_super_closed,
    is_super_continuous,
    is_super_homeomorphism,
)
from .operators import (
    BUILTIN,
    C,
    DELTA,
    LAMBDA,
    THETA,
    URYSOHN,
    ZERO,
    check_closure_axioms,
    delta_closure,
    derived_topology,
    is_delta_closed,
    is_lambda_closed,
    lambda_sets,
    lambda_sets_shortcut,
    regular_opens,
    semi_regularization,
    theta_closure,
)

MAX_VERIFY_N = 5

DIAGRAM_EDGES = (
    ("hausdorff", "kd"),
    ("kd", "kc"),
    ("kc", "US"),
    ("US", "T1"),
    ("hausdorff", "hTR1"),
    ("hTR1", "weakly_hausdorff"),
    ("weakly_hausdorff", "T1"),
    ("kd", "weakly_hausdorff"),
    ("kc", "C_prime"),
)


@dataclass
class Entry:
    theorem: str
    scope: str
    passed: bool
    checked: int
    witness: str | None = None

    def to_json(self) -> dict:
        return asdict(self)


# A check yields (ok, witness-description) pairs; the first failure ends it.
Check = Iterator[tuple[bool, str]]


def _run(theorem: str, scope: str, checks: Check) -> Entry:
    count = 0
    for ok, where in checks:
        count += 1
        if not ok:
            return Entry(theorem, scope, False, count, where)
    return Entry(theorem, scope, True, count)


def _spaces(max_n: int) -> list[FinSpace]:
    return [s for n in range(max_n + 1) for s in enumerate_topologies(n)]


def delta_is_semi_regularization(spaces):
    for s in spaces:
        yield derived_topology(s, "delta") == semi_regularization(s).opens, repr(s)


def locally_dense_traces(spaces):
    for s in spaces:
        ro = regular_opens(s)
        for a in range(1, 1 << s.n):
            if not is_locally_dense(s, a):
                continue
            sub = subspace(s, a)
            ok_a = set(regular_opens(sub)) == {compress(r & a, sub.origin) for r in ro}
            ok_b = semi_regularization(sub) == subspace(semi_regularization(s), a)
            yield ok_a and ok_b, f"{s!r} on {fmt_set(a)}"


def operator_relations(spaces):
    for s in spaces:
        tau = set(s.opens)
        theta, delta = set(derived_topology(s, "theta")), set(derived_topology(s, "delta"))
        quasi, ury = set(derived_topology(s, "quasi")), set(derived_topology(s, "urysohn"))
        yield theta <= delta <= tau, f"theta <= delta <= tau on {s!r}"
        yield quasi <= ury <= tau, f"quasi <= Urysohn <= tau on {s!r}"
        yield set(derived_topology(s, "zero")) == quasi, f"zero-open = quasi on {s!r}"
        yield classify(s, "regular") == regular_by_theta(s), f"regular iff tau = tau_theta on {s!r}"
        yield lambda_sets(s) == lambda_sets_shortcut(s), f"Lambda-sets on {s!r}"
        for a in s.subsets():
            c, d, t = closure(s, a), delta_closure(s, a), theta_closure(s, a)
            yield is_subset(c, d) and is_subset(d, t), f"Cl <= Cl_delta <= Cl_theta at {fmt_set(a)} in {s!r}"
            yield is_delta_closed(s, t), f"Cl_theta({fmt_set(a)}) not delta-closed in {s!r}"


def closure_axioms(spaces):
    for s in spaces:
        for op in BUILTIN:
            report = check_closure_axioms(s, op)
            yield report.ok, f"{op} on {s!r}: {report.describe()}"


TKX_TABLE = (
    ("i", "completely_hausdorff", "all", ZERO),
    ("ii", "urysohn", "all", URYSOHN),
    ("iii", "hausdorff", "all", THETA),
    ("iv", "kc", "all", C),
    ("v", "weakly_hausdorff", 1, DELTA),
    ("vi", "T1", 1, C),
    ("vii", "T0", 1, LAMBDA),
)


def tkx_equivalences(spaces):
    for s in spaces:
        for part, axiom, kappa, xi in TKX_TABLE:
            yield classify(s, axiom) == t_kappa_xi(s, kappa, xi), f"({part}) on {s!r}"


def _implies(props, p, q):
    return not props[p] or props[q]


def implication_diagram(spaces):
    for s in spaces:
        props = classify_all(s)
        for p, q in DIAGRAM_EDGES:
            yield _implies(props, p, q), f"{p} -> {q} fails on {s!r}"
    for name in cat.FAMILY_NAMES:
        space = cat.DescribedSpace(name)
        for p, q in DIAGRAM_EDGES:
            vp, vq = cat.d_classify(space, p).value, cat.d_classify(space, q).value
            if vp is None or vq is None:
                continue
            yield not vp or vq, f"{p} -> {q} fails on {name}"


def anti_compact_kd(spaces):
    for s in spaces:
        yield classify(s, "kd") == classify(s, "weakly_hausdorff"), repr(s)
    for name in cat.FAMILY_NAMES:
        space = cat.DescribedSpace(name)
        if cat.d_classify(space, "anti_compact").value:
            kd = cat.d_classify(space, "kd").value
            yield kd == cat.d_classify(space, "weakly_hausdorff").value, name


def semi_regular_kd_kc(spaces):
    for s in spaces:
        if classify(s, "semi_regular"):
            yield classify(s, "kd") == classify(s, "kc"), repr(s)


def first_countable(spaces):
    for s in spaces:
        vals = {classify(s, a) for a in ("hausdorff", "kd", "kc", "US")}
        yield len(vals) == 1, repr(s)


def t_third_placement(spaces):
    for s in spaces:
        p = classify_all(s)
        yield _implies(p, "T_half", "T_third") and _implies(p, "T_third", "T_quarter") and _implies(p, "T_quarter", "T0"), f"chain on {s!r}"
        yield p["T_third"] == p["T_quarter"], f"T_third vs T_quarter on {s!r}"
        yield p["T1"] == (p["T0"] and p["R0"]) == (p["T0"] and p["weak_R0"]), f"T1 = T0 + R0 on {s!r}"
        yield p["T_half"] == singletons_open_or_closed(s), f"T_half vs singletons open-or-closed on {s!r}"
    for name in cat.FAMILY_NAMES:
        space = cat.DescribedSpace(name)
        if cat.d_classify(space, "anti_compact").value:
            yield cat.d_classify(space, "T_third").value == cat.d_classify(space, "T_quarter").value, name


def _separable(s: FinSpace, f: int, y: int) -> bool:
    return any(
        is_subset(f, a) and not a >> y & 1
        for a in s.opens + s.closeds
    )


def t_third_characterization(spaces):
    for s in spaces:
        for f in s.subsets():
            sep = all(_separable(s, f, y) for y in s.points if not f >> y & 1)
            yield sep == is_lambda_closed(s, f), f"{fmt_set(f)} in {s!r}"


def kd_permanence(spaces):
    for s in spaces:
        if not classify(s, "kd"):
            continue
        for a in range(1, 1 << s.n):
            if is_locally_dense(s, a):
                yield classify(subspace(s, a), "kd"), f"subspace {fmt_set(a)} of {s!r}"
    small = [s for s in spaces if 1 <= s.n <= 3]
    for x in small:
        for y in small:
            both = classify(x, "kd") and classify(y, "kd")
            yield classify(topological_sum([x, y]), "kd") == both, f"sum of {x!r} and {y!r}"


def perfect_maps(spaces):
    small = [s for s in spaces if 1 <= s.n <= 3]
    for y in small:
        if not classify(y, "kd"):
            continue
        for x in small:
            for f in enumerate_continuous_maps(x, y):
                yield is_super_closed(f) and is_perfect(f), f"{f.values}: {x!r} -> {y!r}"
            for f in bijections(x, y):
                if is_continuous(f):
                    yield is_homeomorphism(f), f"continuous bijection {f.values}: {x!r} -> {y!r}"
                if is_super_continuous(f):
                    yield is_super_homeomorphism(f), f"super-continuous bijection {f.values}"


SUITES: tuple[tuple[str, Callable[[list], Check]], ...] = (
    ("delta-semi-regularization", delta_is_semi_regularization),
    ("locally-dense-traces", locally_dense_traces),
    ("operator-relations", operator_relations),
    ("closure-axioms", closure_axioms),
    ("tkx-equivalences", tkx_equivalences),
    ("implication-diagram", implication_diagram),
    ("anti-compact-kd", anti_compact_kd),
    ("semi-regular-kd-kc", semi_regular_kd_kc),
    ("first-countable", first_countable),
    ("t-third-placement", t_third_placement),
    ("t-third-characterization", t_third_characterization),
    ("kd-permanence", kd_permanence),
    ("perfect-maps", perfect_maps),
)


def run_suite(name: str, max_n: int) -> Entry:
    fn = dict(SUITES)[name]
    return _run(name, f"n<={max_n}", fn(_spaces(max_n)))


def family_entries(name: str, rng: random.Random, samples: int = 200, axiom_samples: int = 1000) -> list[Entry]:
    """Stated example verdicts and seeded law sweeps for one catalog family."""
    space = cat.DescribedSpace(name)
    out = []
    for line in cat.check_family(name):
        out.append(Entry(
            f"catalog:{name}:{line.label}", "example verdict", line.ok, 1,
            None if line.ok else f"expected {line.expected}, got {line.got}",
        ))
    for label, sweep in (
        ("characterization", cat.characterization_sweep(space, samples, rng)),
        ("closure-axioms", cat.closure_axiom_sweep(space, axiom_samples, rng)),
    ):
        out.append(Entry(
            f"catalog-{label}:{name}", f"{sweep.checked} sampled sets",
            sweep.ok, sweep.checked, sweep.failures[0] if sweep.failures else None,
        ))
    return out


def catalog_entries(seed: int = 0) -> list[Entry]:
    rng = random.Random(seed)
    return [e for name in cat.FAMILY_NAMES for e in family_entries(name, rng)]


@dataclass
class VerifyReport:
    max_n: int
    entries: list[Entry]

    @property
    def failures(self) -> int:
        return sum(not e.passed for e in self.entries)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def verify_paper(max_n: int = 4, jobs: int = 1, seed: int = 0, suites: Iterable[str] | None = None) -> VerifyReport:
    if not 0 <= max_n <= MAX_VERIFY_N:
        raise BoundExceeded(f"verify-paper supports max_n <= {MAX_VERIFY_N}")
    names = [n for n, _ in SUITES] if suites is None else list(suites)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            entries = list(ex.map(run_suite, names, [max_n] * len(names)))
    else:
        entries = [run_suite(n, max_n) for n in names]
    entries += catalog_entries(seed)
    return VerifyReport(max_n, entries)
