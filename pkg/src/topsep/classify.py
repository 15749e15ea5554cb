"""Separation and structural predicates, and the generic T(kappa, xi) test.

Each axiom is decided straight from its own definition; none of them is
routed through :func:`t_kappa_xi`, so the equivalences between the two can be
checked rather than assumed.

US on a finite space: a sequence converges to ``x`` iff it is eventually in
``min_nbhd[x]``, so two distinct limits exist iff some point lies in two
minimal neighbourhoods (take the constant sequence at it).  US therefore
means the minimal neighbourhoods are pairwise disjoint.
"""

from __future__ import annotations

import os
import threading
from typing import Literal, Union

from .core import FinSpace, PointSet, bits, closure, is_subset, subspace
from .operators import (
    Operator,
    apply,
    delta_closure,
    is_lambda_closed,
    is_lambda_space,
    lambda_sets,
    require_closure_operator,
    semi_regularization,
)

AXIOMS = (
    "T0", "T1", "TD", "T_quarter", "T_third", "T_half",
    "weakly_hausdorff", "hausdorff", "urysohn", "completely_hausdorff",
    "regular", "semi_regular", "kc", "kd", "US", "C_prime", "anti_compact",
    "R0", "weak_R0", "hTR1", "lambda_space",
)

KappaBound = Union[int, Literal["all"]]


def check_axiom(name: str) -> str:
    if name not in AXIOMS:
        raise ValueError(f"unknown axiom {name!r}; expected one of {', '.join(AXIOMS)}")
    return name


def is_compact(space: FinSpace, a: PointSet) -> bool:
    """Every open cover of ``a`` has a finite subcover.

    Given any cover, choosing one member containing each point of ``a``
    gives a subcover with at most ``|a|`` members; on a finite space that
    choice always exists because ``X`` is open.
    """
    chosen = []
    for x in bits(a):
        member = next(u for u in space.opens if u >> x & 1)
        chosen.append(member)
    assert len(chosen) <= space.n
    return True


def _compact_sets(space: FinSpace):
    return (a for a in space.subsets() if is_compact(space, a))


def _pairs(space: FinSpace):
    for x in space.points:
        for y in range(x + 1, space.n):
            yield x, y


def _t0(s):
    return all(any((u >> x & 1) != (u >> y & 1) for u in s.opens) for x, y in _pairs(s))


def _t1(s):
    for x in s.points:
        for y in s.points:
            if x != y and not any(u >> x & 1 and not u >> y & 1 for u in s.opens):
                return False
    return True


def _td(s):
    return all(s.is_closed(closure(s, 1 << x) & ~(1 << x)) for x in s.points)


def _t_half(s):
    return all(is_lambda_closed(s, a) for a in s.subsets())


def _t_quarter(s):
    # every subset of a finite space is a finite set
    return all(is_lambda_closed(s, a) for a in s.subsets())


def _t_third(s):
    return all(is_lambda_closed(s, a) for a in _compact_sets(s))


def _weakly_hausdorff(s):
    return _t1(semi_regularization(s))


def _hausdorff(s):
    return all(
        any(u >> x & 1 and v >> y & 1 and not u & v for u in s.opens for v in s.opens)
        for x, y in _pairs(s)
    )


def _urysohn(s):
    cl = {u: closure(s, u) for u in s.opens}
    return all(
        any(u >> x & 1 and v >> y & 1 and not cl[u] & cl[v] for u in s.opens for v in s.opens)
        for x, y in _pairs(s)
    )


def _completely_hausdorff(s):
    # cozero sets of a finite space are its clopen sets
    cz = s.clopens
    return all(
        any(u >> x & 1 and v >> y & 1 and not u & v for u in cz for v in cz)
        for x, y in _pairs(s)
    )


def _regular(s):
    for f in s.closeds:
        for x in s.points:
            if f >> x & 1:
                continue
            if not any(u >> x & 1 and is_subset(f, v) and not u & v for u in s.opens for v in s.opens):
                return False
    return True


def _semi_regular(s):
    return semi_regularization(s).opens == s.opens


def _kc(s):
    return all(s.is_closed(a) for a in _compact_sets(s))


def _kd(s):
    return all(delta_closure(s, a) == a for a in _compact_sets(s))


def _us(s):
    seen = 0
    for m in s.min_nbhd:
        if seen & m:
            return False
        seen |= m
    return True


def _c_prime(s):
    compact = list(_compact_sets(s))
    return all(is_compact(s, a & k) for a in compact for k in compact)


def _anti_compact(s):
    # compact subsets of a finite space are finite
    return all(a.bit_count() <= s.n for a in _compact_sets(s))


def _r0(s):
    return all(
        is_subset(s.spec[x], u) for u in s.opens for x in bits(u)
    )


def _weak_r0(s):
    lam = set(lambda_sets(s))
    return all((1 << x) in lam for x in s.points if is_lambda_closed(s, 1 << x))


def _htr1(s):
    return all(classify(subspace(s, a), "weakly_hausdorff") for a in range(1, 1 << s.n))


PREDICATES = {
    "T0": _t0,
    "T1": _t1,
    "TD": _td,
    "T_quarter": _t_quarter,
    "T_third": _t_third,
    "T_half": _t_half,
    "weakly_hausdorff": _weakly_hausdorff,
    "hausdorff": _hausdorff,
    "urysohn": _urysohn,
    "completely_hausdorff": _completely_hausdorff,
    "regular": _regular,
    "semi_regular": _semi_regular,
    "kc": _kc,
    "kd": _kd,
    "US": _us,
    "C_prime": _c_prime,
    "anti_compact": _anti_compact,
    "R0": _r0,
    "weak_R0": _weak_r0,
    "hTR1": _htr1,
    "lambda_space": is_lambda_space,
}
assert tuple(PREDICATES) == AXIOMS

_memo: dict[tuple[FinSpace, str], bool] = {}
_memo_lock = threading.Lock()
REVALIDATE = os.environ.get("TOPSEP_REVALIDATE") == "1"


def classify(space: FinSpace, axiom: str) -> bool:
    key = (space, axiom)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        if REVALIDATE:
            assert PREDICATES[axiom](space) == hit, f"stale memo for {axiom} on {space}"
        return hit
    value = bool(PREDICATES[check_axiom(axiom)](space))
    with _memo_lock:
        _memo.setdefault(key, value)
    return value


def classify_all(space: FinSpace) -> dict[str, bool]:
    return {a: classify(space, a) for a in AXIOMS}


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def t_kappa_xi(space: FinSpace, kappa: KappaBound, xi: Operator) -> bool:
    """Every compact subset of size at most ``kappa`` is ``xi``-closed."""
    require_closure_operator(space, xi)
    bound = space.n if kappa == "all" else int(kappa)
    return all(
        apply(space, xi, a) == a
        for a in _compact_sets(space)
        if a.bit_count() <= bound
    )


def singletons_open_or_closed(space: FinSpace) -> bool:
    """Classical characterization of T_half, kept as an external cross-check."""
    return all(space.is_open(1 << x) or space.is_closed(1 << x) for x in space.points)


def regular_by_theta(space: FinSpace) -> bool:
    from .operators import derived_topology

    return derived_topology(space, "theta") == space.opens

