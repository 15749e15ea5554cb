"""Symbolic infinite spaces and an exact algebra of described sets.

Set algebra
-----------
The universe is split into finitely many infinite *regions*.  Named points are
integers and each has a home region:

* countable universe (``N``): ``even`` and ``odd`` non-negative integers;
* uncountable universe (a copy of ``R``): ``even`` and ``odd`` non-negative
  integers, plus ``rest`` = everything else, whose named points are the
  negative integers.

A :class:`DescribedSet` is a union of regions with finitely many named points
flipped in or out.  Unions, intersections and complements act region-wise and
point-wise, so the algebra is closed and every membership question about a
named point is decidable.  ``FIN`` (no region), ``COFIN`` (every region),
``CTBL`` (infinite but countable, or infinite and co-infinite in ``N``) and
``COCTBL`` (countable complement) are read off the region set.

Families
--------
Each family is a rule table: closure, interior, open/closed tests, the
Lambda-hull (kernel), the lambda-closed test and compactness, each written
as a function of the shape of the set and of the distinguished point.  The
derivations are short:

``cofinite-line``
    Opens are the empty set and the cofinite sets.  Closed sets are the finite
    sets and X.  Every subset is compact: one member of a cover already
    misses only finitely many points.  Singletons are closed so every set is
    a Lambda-set and lambda-closed.
``cocountable-line``
    Opens are the empty set and the co-countable sets; closed sets are the
    countable sets and X.  An infinite set contains a countably infinite
    ``A``; removing all but one point of ``A`` from X gives a cover with no
    finite subcover, so compact means finite.
``point-cocountable``
    Opens are the empty set and the co-countable sets containing ``p``.
    Closed sets are X and the countable sets missing ``p``.  The Lambda-sets
    are the empty set and every set containing ``p``, so ``A`` is
    lambda-closed iff ``p`` is in ``A`` or ``A`` is countable.  Compact means
    finite by the same cover argument as the cocountable line.
``included-point-cofinite``
    Universe ``N``; opens are the empty set and the cofinite sets containing
    ``0``.  Closed sets are X and the finite sets missing ``0``.  Every
    subset is compact.  ``A`` is lambda-closed iff ``0`` is in ``A`` or ``A``
    is finite.

In all four families any two nonempty open sets meet and every nonempty open
set is dense.  Hence the regular open sets are the empty set and X, every
delta-, theta-, Urysohn- and quasi-closure of a nonempty set is X, and every
continuous real function is constant (a hyperconnected subspace of ``R`` is a
point), so zero-sets are just the empty set and X.

Verdicts
--------
The rule tables are invariant under permutations of X that fix the
distinguished point and the region structure, and every predicate here
depends only on whether a set contains the distinguished point, whether it
is empty, finite or countable, and the same for its complement.  The *type
basis* of a family realises every such type, so quantifying over it decides
the axiom.  Verdicts that the rule tables cannot reach are stored as
documented verdicts with a proof sketch.

The lambda-space test only checks finite unions and intersections.  That
suffices here: each family's lambda-open sets are either all sets or those
that miss the distinguished point or have small complement, and both
conditions survive arbitrary unions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator

from .errors import Unsupported

FAMILY_NAMES = ("cofinite-line", "cocountable-line", "point-cocountable", "included-point-cofinite")


@dataclass(frozen=True)
class Universe:
    uncountable: bool

    @property
    def regions(self) -> tuple[str, ...]:
        return ("even", "odd", "rest") if self.uncountable else ("even", "odd")

    def home(self, x: int) -> str:
        if x < 0:
            if not self.uncountable:
                raise ValueError(f"{x} is not a point of N")
            return "rest"
        return "odd" if x % 2 else "even"

    def contains_point(self, x: int) -> bool:
        return x >= 0 or self.uncountable

    def fresh(self, region: str, avoid: Iterable[int] = ()) -> int:
        """Smallest named point of ``region`` (by absolute value) not in ``avoid``."""
        avoid = set(avoid)
        x = {"even": 0, "odd": 1, "rest": -1}[region]
        step = -1 if region == "rest" else 2
        while x in avoid:
            x += step
        return x

    @property
    def uncountable_regions(self) -> frozenset:
        return frozenset({"rest"}) if self.uncountable else frozenset()


NATURALS = Universe(False)
REALS = Universe(True)


@dataclass(frozen=True)
class DescribedSet:
    """``(union of regions) symmetric-difference flips``, kept canonical."""

    universe: Universe
    regions: frozenset = frozenset()
    flips: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "regions", frozenset(self.regions))
        object.__setattr__(self, "flips", frozenset(self.flips))
        bad = self.regions - set(self.universe.regions)
        if bad:
            raise ValueError(f"unknown regions {sorted(bad)}")
        for x in self.flips:
            if not self.universe.contains_point(x):
                raise ValueError(f"{x} is not a point of this universe")

    def __contains__(self, x: int) -> bool:
        return (self.universe.home(x) in self.regions) != (x in self.flips)

    def _combine(self, other: "DescribedSet", op: Callable[[bool, bool], bool]) -> "DescribedSet":
        if self.universe != other.universe:
            raise ValueError("described sets live in different universes")
        regions = frozenset(r for r in self.universe.regions if op(r in self.regions, r in other.regions))
        flips = frozenset(
            x for x in self.flips | other.flips
            if op(x in self, x in other) != (self.universe.home(x) in regions)
        )
        return DescribedSet(self.universe, regions, flips)

    def __or__(self, other):
        return self._combine(other, lambda a, b: a or b)

    def __and__(self, other):
        return self._combine(other, lambda a, b: a and b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a and not b)

    def __invert__(self):
        return DescribedSet(self.universe, frozenset(self.universe.regions) - self.regions, self.flips)

    def __le__(self, other):
        return (self - other).is_empty

    @property
    def is_empty(self) -> bool:
        return not self.regions and not self.flips

    @property
    def is_whole(self) -> bool:
        return self.regions == frozenset(self.universe.regions) and not self.flips

    @property
    def is_finite(self) -> bool:
        return not self.regions

    @property
    def is_cofinite(self) -> bool:
        return self.regions == frozenset(self.universe.regions)

    @property
    def is_countable(self) -> bool:
        return not (self.regions & self.universe.uncountable_regions)

    @property
    def is_cocountable(self) -> bool:
        return (~self).is_countable

    @property
    def shape(self) -> str:
        if self.is_finite:
            return "FIN"
        if self.is_cofinite:
            return "COFIN"
        if self.universe.uncountable and self.is_cocountable:
            return "COCTBL"
        return "CTBL"

    def points(self) -> tuple[int, ...]:
        """Members of a FIN set."""
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return tuple(sorted(self.flips))

    def __str__(self):
        if self.is_finite:
            return "FIN{" + ",".join(map(str, sorted(self.flips))) + "}"
        if self.is_cofinite:
            return "COFIN{" + ",".join(map(str, sorted(self.flips))) + "}"
        plus = sorted(x for x in self.flips if x in self)
        minus = sorted(x for x in self.flips if x not in self)
        out = f"{self.shape}[{'+'.join(sorted(self.regions))}]"
        if plus:
            out += "+{" + ",".join(map(str, plus)) + "}"
        if minus:
            out += "-{" + ",".join(map(str, minus)) + "}"
        return out


def fin(universe: Universe, points: Iterable[int] = ()) -> DescribedSet:
    return DescribedSet(universe, frozenset(), frozenset(points))


def cofin(universe: Universe, missing: Iterable[int] = ()) -> DescribedSet:
    return DescribedSet(universe, frozenset(universe.regions), frozenset(missing))


def region_set(universe: Universe, regions: Iterable[str], plus=(), minus=()) -> DescribedSet:
    base = DescribedSet(universe, frozenset(regions))
    return (base | fin(universe, plus)) - fin(universe, minus)


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    axiom: str
    value: bool | None
    kind: str  # "computed" | "documented" | "unsupported"
    note: str = ""

    def require(self) -> bool:
        if self.value is None:
            raise Unsupported(f"no verdict for {self.axiom}: {self.note}")
        return self.value


@dataclass(frozen=True)
class DescribedSpace:
    family: str
    point: int | None = None

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ValueError(f"unknown catalog family {self.family!r}; expected one of {FAMILY_NAMES}")
        if self.family == "included-point-cofinite":
            if self.point not in (None, 0):
                raise ValueError("included-point-cofinite is pinned to the point 0")
            object.__setattr__(self, "point", 0)
        elif self.family == "point-cocountable":
            if self.point is None:
                object.__setattr__(self, "point", 0)
        elif self.point is not None:
            raise ValueError(f"{self.family} has no distinguished point")

    @property
    def universe(self) -> Universe:
        return NATURALS if self.family == "included-point-cofinite" else REALS

    @property
    def whole(self) -> DescribedSet:
        return cofin(self.universe)

    @property
    def empty(self) -> DescribedSet:
        return fin(self.universe)

    def singleton(self, x: int) -> DescribedSet:
        return fin(self.universe, [x])

    def __str__(self):
        return self.family if self.point is None or self.family != "point-cocountable" else f"{self.family}(p={self.point})"

    @cached_property
    def named_points(self) -> tuple[int, ...]:
        """Distinguished point plus two representatives per region."""
        pts = [] if self.point is None else [self.point]
        for r in self.universe.regions:
            for _ in range(2):
                pts.append(self.universe.fresh(r, pts))
        return tuple(pts)

    @cached_property
    def type_basis(self) -> tuple[DescribedSet, ...]:
        reps = [] if self.point is None else [self.point]
        for r in self.universe.regions:
            reps.append(self.universe.fresh(r, reps))
        out = []
        regions = self.universe.regions
        for rmask in range(1 << len(regions)):
            rs = frozenset(r for i, r in enumerate(regions) if rmask >> i & 1)
            for fmask in range(1 << len(reps)):
                base = DescribedSet(self.universe, rs)
                flipped = fin(self.universe, (p for i, p in enumerate(reps) if fmask >> i & 1))
                out.append((base - flipped) | (flipped - base))
        return tuple(dict.fromkeys(out))


def _has(space: DescribedSpace, a: DescribedSet) -> bool:
    return space.point is not None and space.point in a


def d_is_open(space: DescribedSpace, a: DescribedSet) -> bool:
    if a.is_empty:
        return True
    f = space.family
    if f == "cofinite-line":
        return a.is_cofinite
    if f == "cocountable-line":
        return a.is_cocountable
    if f == "point-cocountable":
        return _has(space, a) and a.is_cocountable
    return _has(space, a) and a.is_cofinite


def d_is_closed(space: DescribedSpace, a: DescribedSet) -> bool:
    return d_is_open(space, ~a)


def d_closure(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    f = space.family
    if f == "cofinite-line":
        keep = a.is_finite
    elif f == "cocountable-line":
        keep = a.is_countable
    elif f == "point-cocountable":
        keep = a.is_countable and not _has(space, a)
    else:
        keep = a.is_finite and not _has(space, a)
    return a if keep else space.whole


def d_interior(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    f = space.family
    if f == "cofinite-line":
        keep = a.is_cofinite
    elif f == "cocountable-line":
        keep = a.is_cocountable
    elif f == "point-cocountable":
        keep = _has(space, a) and a.is_cocountable
    else:
        keep = _has(space, a) and a.is_cofinite
    return a if keep else space.empty


def d_kernel(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    """Smallest Lambda-set (intersection of opens) containing ``a``."""
    if space.point is None or a.is_empty:
        return a
    return a | space.singleton(space.point)


def d_is_lambda_set(space: DescribedSpace, a: DescribedSet) -> bool:
    return d_kernel(space, a) == a


def d_is_lambda_closed(space: DescribedSpace, a: DescribedSet) -> bool:
    f = space.family
    if f in ("cofinite-line", "cocountable-line"):
        return True
    if f == "point-cocountable":
        return _has(space, a) or a.is_countable
    return _has(space, a) or a.is_finite


def d_lambda_closure(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    return d_kernel(space, a) & d_closure(space, a)


def d_is_compact(space: DescribedSpace, a: DescribedSet) -> bool:
    if space.family in ("cofinite-line", "included-point-cofinite"):
        return True
    return a.is_finite


@lru_cache(maxsize=None)
def d_regular_opens(space: DescribedSpace) -> tuple[DescribedSet, ...]:
    """Regular open sets, found among the type basis (exact by invariance)."""
    found = [
        u for u in space.type_basis
        if d_is_open(space, u) and d_interior(space, d_closure(space, u)) == u
    ]
    return tuple(sorted(found, key=lambda u: (len(u.regions), str(u))))


@lru_cache(maxsize=None)
def dense_opens(space: DescribedSpace) -> bool:
    """Every nonempty open set of the type basis is dense."""
    return all(
        d_closure(space, u).is_whole
        for u in space.type_basis if d_is_open(space, u) and not u.is_empty
    )


def d_delta_closure(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    out = space.whole
    for u in d_regular_opens(space):
        if (u & a).is_empty:
            out = out - u
    return out


def _dense_hull(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    if not dense_opens(space):
        raise Unsupported(f"{space} has non-dense open sets")
    return space.empty if a.is_empty else space.whole


def d_theta_closure(space: DescribedSpace, a: DescribedSet) -> DescribedSet:
    return _dense_hull(space, a)


D_OPERATORS: dict[str, Callable[[DescribedSpace, DescribedSet], DescribedSet]] = {
    "c": d_closure,
    "delta": d_delta_closure,
    "theta": d_theta_closure,
    "lambda": d_lambda_closure,
    "zero": _dense_hull,
    "urysohn": _dense_hull,
    "quasi": _dense_hull,
}


def d_apply(space: DescribedSpace, op: str, a: DescribedSet) -> DescribedSet:
    try:
        fn = D_OPERATORS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; expected one of {sorted(D_OPERATORS)}") from None
    return fn(space, a)


# -- classification ----------------------------------------------------------

_HYPERCONNECTED_NOTE = "any two nonempty open sets meet, so no two points have disjoint neighbourhoods"

DOCUMENTED = {
    "cofinite-line": {
        "US": (False, "a sequence of distinct points converges to every point"),
        "hausdorff": (False, _HYPERCONNECTED_NOTE),
        "urysohn": (False, _HYPERCONNECTED_NOTE),
        "completely_hausdorff": (False, _HYPERCONNECTED_NOTE),
        "regular": (False, "a point and a disjoint nonempty finite closed set have no disjoint neighbourhoods"),
    },
    "cocountable-line": {
        "US": (True, "a convergent sequence is eventually constant and singletons are closed"),
        "hausdorff": (False, _HYPERCONNECTED_NOTE),
        "urysohn": (False, _HYPERCONNECTED_NOTE),
        "completely_hausdorff": (False, _HYPERCONNECTED_NOTE),
        "regular": (False, "a point and a disjoint nonempty countable closed set have no disjoint neighbourhoods"),
    },
    "point-cocountable": {
        "US": (False, "the constant sequence at p converges to every point"),
        "hausdorff": (False, _HYPERCONNECTED_NOTE),
        "urysohn": (False, _HYPERCONNECTED_NOTE),
        "completely_hausdorff": (False, _HYPERCONNECTED_NOTE),
        "regular": (False, "p and a closed singleton {x} have no disjoint neighbourhoods"),
    },
    "included-point-cofinite": {
        "US": (False, "the constant sequence at 0 converges to every point"),
        "hausdorff": (False, _HYPERCONNECTED_NOTE),
        "urysohn": (False, _HYPERCONNECTED_NOTE),
        "completely_hausdorff": (False, _HYPERCONNECTED_NOTE),
        "regular": (False, "0 and a closed singleton {x} have no disjoint neighbourhoods"),
    },
}


def _singletons(space):
    return [space.singleton(x) for x in space.named_points]


def _compact_basis(space):
    return [a for a in space.type_basis if d_is_compact(space, a)]


def _t0(space):
    pts = space.named_points
    return all(
        x not in d_closure(space, space.singleton(y)) or y not in d_closure(space, space.singleton(x))
        for i, x in enumerate(pts) for y in pts[i + 1:]
    )


def _td(space):
    return all(d_is_closed(space, d_closure(space, s) - s) for s in _singletons(space))


def _r0(space):
    return all(
        d_closure(space, space.singleton(x)) <= u
        for u in space.type_basis if d_is_open(space, u)
        for x in space.named_points if x in u
    )


def _weak_r0(space):
    return all(d_is_lambda_set(space, s) for s in _singletons(space) if d_is_lambda_closed(space, s))


def _lambda_space(space):
    # finite unions and intersections only; see module notes
    family = [~a for a in space.type_basis if d_is_lambda_closed(space, a)]
    members = set(family)
    return all(
        d_is_lambda_closed(space, ~(u | v)) and d_is_lambda_closed(space, ~(u & v))
        for u in family for v in family
    ) and space.empty in members and space.whole in members


def _semi_regular(space):
    return all(
        d_delta_closure(space, ~u) == ~u
        for u in space.type_basis if d_is_open(space, u)
    )


COMPUTED = {
    "T0": _t0,
    "T1": lambda s: all(d_is_closed(s, x) for x in _singletons(s)),
    "TD": _td,
    "T_quarter": lambda s: all(d_is_lambda_closed(s, a) for a in s.type_basis if a.is_finite),
    "T_third": lambda s: all(d_is_lambda_closed(s, a) for a in _compact_basis(s)),
    "T_half": lambda s: all(d_is_lambda_closed(s, a) for a in s.type_basis),
    "weakly_hausdorff": lambda s: all(d_delta_closure(s, x) == x for x in _singletons(s)),
    "semi_regular": _semi_regular,
    "kc": lambda s: all(d_is_closed(s, a) for a in _compact_basis(s)),
    "kd": lambda s: all(d_delta_closure(s, a) == a for a in _compact_basis(s)),
    "anti_compact": lambda s: all(a.is_finite for a in _compact_basis(s)),
    "C_prime": lambda s: all(d_is_compact(s, a & k) for a in _compact_basis(s) for k in _compact_basis(s)),
    "R0": _r0,
    "weak_R0": _weak_r0,
    "lambda_space": _lambda_space,
}


def d_classify(space: DescribedSpace, axiom: str) -> Verdict:
    from .classify import check_axiom

    check_axiom(axiom)
    if axiom in COMPUTED:
        return Verdict(axiom, bool(COMPUTED[axiom](space)), "computed")
    if axiom == "hTR1":
        if not COMPUTED["weakly_hausdorff"](space):
            return Verdict(axiom, False, "computed", "the space itself is a subspace that is not weakly Hausdorff")
        return Verdict(axiom, None, "unsupported", "needs a scan of infinite subspaces")
    if axiom in DOCUMENTED[space.family]:
        value, proof = DOCUMENTED[space.family][axiom]
        return Verdict(axiom, value, "documented", proof)
    return Verdict(axiom, None, "unsupported", "no rule-table derivation")


def d_classify_all(space: DescribedSpace) -> dict[str, Verdict]:
    from .classify import AXIOMS

    return {a: d_classify(space, a) for a in AXIOMS}


# -- expected verdicts, sampling and sweeps -------------------------------------

EXPECTED = {
    "included-point-cofinite": {"T0": True, "T_quarter": True, "T_third": False, "T_half": False, "TD": False},
    "point-cocountable": {"T_third": True, "T_half": False, "T0": True, "T1": False},
    "cocountable-line": {"kc": True, "kd": False, "anti_compact": True, "T1": True},
    "cofinite-line": {"C_prime": True, "kc": False},
}


@dataclass
class CheckLine:
    label: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def check_family(name: str) -> list[CheckLine]:
    """Compare the family's verdicts with the values stated for the example."""
    space = DescribedSpace(name)
    lines = [CheckLine(ax, val, d_classify(space, ax).value) for ax, val in EXPECTED[name].items()]
    if name == "cocountable-line":
        ro = [str(u) for u in d_regular_opens(space)]
        lines.append(CheckLine("regular_opens", [str(space.empty), str(space.whole)], ro))
    return lines


def random_set(universe: Universe, rng: random.Random, span: range = range(-4, 10)) -> DescribedSet:
    regions = frozenset(r for r in universe.regions if rng.random() < 0.5)
    flips = frozenset(x for x in span if universe.contains_point(x) and rng.random() < 0.3)
    return DescribedSet(universe, regions, flips)


def random_compact_set(space: DescribedSpace, rng: random.Random) -> DescribedSet:
    while True:
        a = random_set(space.universe, rng)
        if d_is_compact(space, a):
            return a
        if rng.random() < 0.5:
            return DescribedSet(space.universe, frozenset(), a.flips)


def representatives_outside(space: DescribedSpace, a: DescribedSet) -> Iterator[int]:
    """Named points outside ``a`` covering every position a point can take."""
    cand = set(a.flips) | set(space.named_points)
    for r in space.universe.regions:
        cand.add(space.universe.fresh(r, cand))
    for y in sorted(cand):
        if y not in a:
            yield y


def separated_from_outside(space: DescribedSpace, a: DescribedSet) -> bool:
    """Every point ``y`` outside ``a`` is excluded by an open or a closed superset of ``a``.

    The largest open set missing ``y`` is the interior of its complement; the
    smallest closed superset of ``a`` is its closure.
    """
    for y in representatives_outside(space, a):
        open_ok = a <= d_interior(space, ~space.singleton(y))
        closed_ok = y not in d_closure(space, a)
        if not (open_ok or closed_ok):
            return False
    return True


@dataclass
class SweepResult:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def closure_axiom_sweep(space: DescribedSpace, count: int, rng: random.Random) -> SweepResult:
    res = SweepResult()
    for op, fn in D_OPERATORS.items():
        if not fn(space, space.empty).is_empty:
            res.failures.append(f"{op}: image of the empty set is nonempty")
    for _ in range(count):
        a = random_set(space.universe, rng)
        b = a | random_set(space.universe, rng)
        for op, fn in D_OPERATORS.items():
            fa = fn(space, a)
            if not a <= fa:
                res.failures.append(f"{op}: not extensive at {a}")
            if fn(space, fa) != fa:
                res.failures.append(f"{op}: not idempotent at {a}")
            if not fa <= fn(space, b):
                res.failures.append(f"{op}: not monotone at {a} <= {b}")
        res.checked += 1
    return res


def characterization_sweep(space: DescribedSpace, count: int, rng: random.Random) -> SweepResult:
    res = SweepResult()
    for i in range(count):
        a = random_compact_set(space, rng) if i % 2 else random_set(space.universe, rng)
        lam = d_is_lambda_closed(space, a)
        if lam != separated_from_outside(space, a):
            res.failures.append(f"separation test disagrees with lambda-closedness at {a}")
        if lam != (d_lambda_closure(space, a) == a):
            res.failures.append(f"rule table disagrees with kernel/closure at {a}")
        res.checked += 1
    return res


def truncation(space: DescribedSpace, points: Iterable[int]):
    """Subspace on finitely many named points, as a :class:`FinSpace`.

    Nonempty open sets of every family here are upward closed, so a subset
    ``S`` of the carrier ``T`` is a trace of an open set iff ``S`` is empty or
    ``S`` together with the complement of ``T`` is open.
    """
    from .core import FinSpace

    pts = tuple(sorted(set(points)))
    carrier = fin(space.universe, pts)
    traces = []
    for m in range(1 << len(pts)):
        s = fin(space.universe, (p for i, p in enumerate(pts) if m >> i & 1))
        if s.is_empty or d_is_open(space, s | ~carrier):
            traces.append(m)
    return FinSpace(len(pts), traces, origin=pts)
