"""Closure operators and derived topologies on finite spaces.

Every built-in operator is realised as "closure in some coarser family":
the ordinary closure, the delta-closure (regular-open clusters), closure in
the theta-open topology, the lambda-closure, and closure in the zero-open,
Urysohn-open and quasi topologies.

Zero-sets on a finite space.  A continuous ``f: X -> R`` is monotone from the
specialization preorder into the discrete order of ``R``, so it is constant on
each connected component of the comparability graph.  Hence zero-sets and
cozero-sets are both exactly the clopen sets, and the zero-open topology
coincides with the quasi-topology.  The two are still computed separately
(``zero`` by the point-wise ``x in C <= Z <= A`` test, ``quasi`` as the
union-closure of the clopens) so that their agreement can be tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .core import FinSpace, PointSet, bits, closure, fmt_set, generate_topology, interior, is_subset
from .errors import NotAClosureOperator

DERIVED = ("theta", "delta", "lambda", "zero", "urysohn", "quasi")


@dataclass(frozen=True)
class Operator:
    """A general closure operator, identified by ``tag``.

    ``custom`` operators carry ``func``, a map on point sets of one fixed
    space; they are axiom-checked before :func:`apply` uses them.
    """

    tag: str
    name: str = ""
    func: Callable[[PointSet], PointSet] | None = field(default=None, repr=False)

    def __str__(self):
        return self.name or self.tag


C = Operator("c", "closure")
DELTA = Operator("delta")
THETA = Operator("theta")
LAMBDA = Operator("lambda")
ZERO = Operator("zero")
URYSOHN = Operator("urysohn")
QUASI = Operator("quasi")

BUILTIN = (C, DELTA, THETA, LAMBDA, ZERO, URYSOHN, QUASI)
BY_NAME = {op.tag: op for op in BUILTIN} | {"closure": C}


def custom(name: str, func: Callable[[PointSet], PointSet]) -> Operator:
    return Operator("custom", name, func)


def operator(name: str) -> Operator:
    try:
        return BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown operator {name!r}; expected one of {sorted(BY_NAME)}") from None


# -- regular opens, semi-regularization, delta ------------------------------


@lru_cache(maxsize=8192)
def regular_opens(space: FinSpace) -> tuple[PointSet, ...]:
    return tuple(u for u in space.opens if interior(space, closure(space, u)) == u)


@lru_cache(maxsize=8192)
def semi_regularization(space: FinSpace) -> FinSpace:
    # regular opens are closed under finite intersection, so they form a base
    return generate_topology(space.n, regular_opens(space))


def delta_closure(space: FinSpace, a: PointSet) -> PointSet:
    out = 0
    ro = regular_opens(space)
    for x in space.points:
        if all(u & a for u in ro if u >> x & 1):
            out |= 1 << x
    return out


def is_delta_closed(space: FinSpace, a: PointSet) -> bool:
    return delta_closure(space, a) == a


# -- theta -------------------------------------------------------------------


def theta_closure(space: FinSpace, a: PointSet) -> PointSet:
    """Points every open neighbourhood of which has closure meeting ``a``.

    This is the cluster-point operator; it need not be idempotent.  For the
    theta-closed hull use ``apply(space, THETA, a)``.
    """
    out = 0
    for x in space.points:
        if all(closure(space, u) & a for u in space.opens if u >> x & 1):
            out |= 1 << x
    return out


def theta_interior(space: FinSpace, a: PointSet) -> PointSet:
    return space.full ^ theta_closure(space, space.full ^ a)


# -- lambda ------------------------------------------------------------------


def kernel(space: FinSpace, a: PointSet) -> PointSet:
    """Intersection of all open supersets of ``a`` (the smallest Lambda-set over ``a``)."""
    out = space.full
    for u in space.opens:
        if is_subset(a, u):
            out &= u
    return out


@lru_cache(maxsize=8192)
def lambda_sets(space: FinSpace) -> tuple[PointSet, ...]:
    """All intersections of families of open sets, the empty family giving X."""
    family = {space.full}
    frontier = set(space.opens)
    while frontier:
        family |= frontier
        frontier = {u & v for u in frontier for v in family} - family
    return tuple(sorted(family))


def lambda_sets_shortcut(space: FinSpace) -> tuple[PointSet, ...]:
    # finite intersections of opens are open, and X is open
    return space.opens


def is_lambda_closed(space: FinSpace, a: PointSet) -> bool:
    """``a`` is a Lambda-set intersected with a closed set.

    The smallest candidates are ``kernel(a)`` and ``closure(a)``, so it is
    enough to test that pair.
    """
    return kernel(space, a) & closure(space, a) == a


@lru_cache(maxsize=8192)
def lambda_closed_sets(space: FinSpace) -> tuple[PointSet, ...]:
    return tuple(a for a in space.subsets() if is_lambda_closed(space, a))


def is_lambda_space(space: FinSpace) -> bool:
    family = set(derived_topology(space, "lambda"))
    if 0 not in family or space.full not in family:
        return False
    return all(u | v in family and u & v in family for u in family for v in family)


# -- derived topologies ------------------------------------------------------


def _theta_open(space: FinSpace, a: PointSet) -> bool:
    return all(
        any(is_subset(closure(space, u), a) for u in space.opens if u >> x & 1)
        for x in bits(a)
    )


def _zero_open(space: FinSpace, a: PointSet) -> bool:
    zs = space.clopens
    return all(
        any(c >> x & 1 and is_subset(c, z) and is_subset(z, a) for c in zs for z in zs)
        for x in bits(a)
    )


def _urysohn_targets(space: FinSpace) -> list[set[PointSet]]:
    """For each point, every ``cl(V)`` over chains ``x in U <= cl(U) <= V``."""
    targets = [set() for _ in space.points]
    cl = {u: closure(space, u) for u in space.opens}
    for u in space.opens:
        for v in space.opens:
            if is_subset(cl[u], v):
                for x in bits(u):
                    targets[x].add(cl[v])
    return targets


def _union_closure(n: int, base) -> tuple[PointSet, ...]:
    opens = {0}
    for b in base:
        opens |= {b | u for u in opens}
    return tuple(sorted(opens))


@lru_cache(maxsize=16384)
def derived_topology(space: FinSpace, which: str) -> tuple[PointSet, ...]:
    """The full family of theta/delta/lambda/zero/Urysohn/quasi-open sets.

    The lambda family is returned even when it is not a topology.
    """
    full = space.full
    if which == "theta":
        return tuple(a for a in space.subsets() if _theta_open(space, a))
    if which == "delta":
        return tuple(sorted(full ^ a for a in space.subsets() if is_delta_closed(space, a)))
    if which == "lambda":
        return tuple(sorted(full ^ a for a in lambda_closed_sets(space)))
    if which == "zero":
        return tuple(a for a in space.subsets() if _zero_open(space, a))
    if which == "urysohn":
        targets = _urysohn_targets(space)
        return tuple(
            a for a in space.subsets()
            if all(any(is_subset(t, a) for t in targets[x]) for x in bits(a))
        )
    if which == "quasi":
        return _union_closure(space.n, space.clopens)
    raise ValueError(f"unknown derived topology {which!r}; expected one of {DERIVED}")


def closure_in(space: FinSpace, open_family, a: PointSet) -> PointSet:
    """Intersection of every superset of ``a`` whose complement is in ``open_family``."""
    out = space.full
    full = space.full
    for u in open_family:
        if not u & a:
            out &= full ^ u
    return out


# -- generic interface -------------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    ok: bool
    axiom: str | None = None
    witness: tuple[PointSet, ...] = ()

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "all closure axioms hold"
        return f"{self.axiom} fails at {', '.join(fmt_set(w) for w in self.witness)}"


def _raw(space: FinSpace, xi: Operator) -> Callable[[PointSet], PointSet]:
    if xi.tag == "c":
        return lambda a: closure(space, a)
    if xi.tag == "delta":
        return lambda a: delta_closure(space, a)
    if xi.tag == "custom":
        return xi.func
    if xi.tag in DERIVED:
        family = derived_topology(space, xi.tag)
        return lambda a: closure_in(space, family, a)
    raise ValueError(f"unknown operator tag {xi.tag!r}")


def check_closure_axioms(space: FinSpace, xi: Operator) -> ClosureReport:
    """Check ``xi(0) == 0``, extensivity, monotonicity and idempotence on every subset."""
    f = _raw(space, xi)
    image = [f(a) for a in space.subsets()]
    if image and image[0] != 0:
        return ClosureReport(False, "empty", (0,))
    for a, fa in enumerate(image):
        if fa < 0 or fa & ~space.full:
            return ClosureReport(False, "range", (a,))
        if not is_subset(a, fa):
            return ClosureReport(False, "extensive", (a,))
    for a, fa in enumerate(image):
        if image[fa] != fa:
            return ClosureReport(False, "idempotent", (a,))
    for b in space.subsets():
        # enumerate proper subsets a of b
        a = (b - 1) & b
        while True:
            if not is_subset(image[a], image[b]):
                return ClosureReport(False, "monotone", (a, b))
            if a == 0:
                break
            a = (a - 1) & b
    return ClosureReport(True)


@lru_cache(maxsize=1024)
def _checked(space: FinSpace, xi: Operator) -> ClosureReport:
    return check_closure_axioms(space, xi)


def require_closure_operator(space: FinSpace, xi: Operator) -> None:
    if xi.tag != "custom":
        return
    report = _checked(space, xi)
    if not report:
        raise NotAClosureOperator(f"{xi} is not a closure operator: {report.describe()}", report)


def apply(space: FinSpace, xi: Operator, a: PointSet) -> PointSet:
    require_closure_operator(space, xi)
    return _raw(space, xi)(a)
