"""Exhaustive enumeration of finite topologies and counterexample search.

Topologies on ``n`` labelled points are the up-set families of preorders.
Preorders are grown one point at a time: a new point ``k`` joins a preorder
on ``0..k-1`` by choosing the down-set ``D`` of points below it and the up-set
``U`` of points above it, subject to ``d <= u`` for all ``d`` in ``D`` and
``u`` in ``U``.  Every preorder on ``0..k`` arises from exactly one such
choice, so the stream is duplicate-free.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .classify import AXIOMS, check_axiom, classify, classify_all
from .core import FinSpace, _up_sets, bits, canonical_form, canonical_space, is_subset
from .errors import BoundExceeded

MAX_LABELED_N = 7
MAX_ISO_N = 5
MAX_MATRIX_N = 5


def _preorders(n: int) -> Iterator[tuple[int, ...]]:
    """Yield ``up`` tables (``up[x]`` = points ``>= x``) of every preorder on ``n`` points."""
    if n == 0:
        yield ()
        return
    for up in _preorders(n - 1):
        k = n - 1
        opens = sorted(_up_sets(k, up))
        down = [0] * k
        for x in range(k):
            for y in bits(up[x]):
                down[y] |= 1 << x
        closeds = sorted(_up_sets(k, down))
        for d in closeds:
            # every u in U must lie above every d in D
            allowed = (1 << k) - 1
            for x in bits(d):
                allowed &= up[x]
            for u in opens:
                if not is_subset(u, allowed):
                    continue
                new = list(up)
                for x in bits(d):
                    new[x] |= 1 << k
                new.append(u | 1 << k)
                yield tuple(new)


def enumerate_topologies(n: int, up_to_iso: bool = False) -> Iterator[FinSpace]:
    """Every topology on ``n`` labelled points, or one per homeomorphism class.

    With ``up_to_iso`` the representatives are canonical spaces, in increasing
    order of their canonical key.
    """
    if n > MAX_LABELED_N:
        raise BoundExceeded(f"labelled enumeration supports n <= {MAX_LABELED_N}")
    if up_to_iso:
        if n > MAX_ISO_N:
            raise BoundExceeded(f"enumeration up to homeomorphism supports n <= {MAX_ISO_N}")
        return iter(_iso_classes(n))
    return (FinSpace(n, _up_sets(n, up)) for up in _preorders(n))


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[FinSpace, ...]:
    keys = sorted({canonical_form(s) for s in enumerate_topologies(n)})
    return tuple(canonical_space(_space_from(k)) for k in keys)


def _space_from(key):
    n, code = key
    return FinSpace(n, (m for m in range(1 << n) if code >> m & 1))


def count_topologies(n: int, up_to_iso: bool = False) -> int:
    return sum(1 for _ in enumerate_topologies(n, up_to_iso))


# -- independent oracles -----------------------------------------------------


def topologies_by_family_closure(n: int) -> Iterator[frozenset]:
    """Brute force: every family of subsets containing the empty set and X
    that is closed under pairwise union and intersection."""
    if n > 4:
        raise BoundExceeded("the family-closure oracle is limited to n <= 4")
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    for choice in range(1 << len(middle)):
        fam = {0, full} | {m for i, m in enumerate(middle) if choice >> i & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            yield frozenset(fam)


def preorders_by_brute_force(n: int) -> Iterator[frozenset]:
    """Brute force over all relations: reflexive transitive ones, as pair sets."""
    if n > 4:
        raise BoundExceeded("the relation brute force is limited to n <= 4")
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in range(1 << len(off)):
        rel = {(i, i) for i in range(n)} | {p for k, p in enumerate(off) if choice >> k & 1}
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            yield frozenset(rel)


# -- search ------------------------------------------------------------------


@dataclass(frozen=True)
class SearchQuery:
    holds: tuple[str, ...] = ()
    fails: tuple[str, ...] = ()
    max_n: int = 4
    up_to_iso: bool = True

    def __post_init__(self):
        object.__setattr__(self, "holds", tuple(check_axiom(a) for a in self.holds))
        object.__setattr__(self, "fails", tuple(check_axiom(a) for a in self.fails))
        if set(self.holds) & set(self.fails):
            raise ValueError(f"axioms both required and excluded: {sorted(set(self.holds) & set(self.fails))}")
        if not 0 <= self.max_n <= MAX_LABELED_N:
            raise BoundExceeded(f"max_n must lie in 0..{MAX_LABELED_N}")

    def matches(self, space: FinSpace) -> bool:
        return all(classify(space, a) for a in self.holds) and not any(classify(space, a) for a in self.fails)


@dataclass(frozen=True)
class Witness:
    space: FinSpace
    properties: dict[str, bool] = field(compare=False)

    @property
    def key(self):
        return canonical_form(self.space)


def _match_keys(query: SearchQuery, spaces: Sequence[FinSpace]):
    return [canonical_form(s) for s in spaces if query.matches(s)]


def _chunks(seq, k):
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def search(query: SearchQuery, jobs: int = 1) -> Witness | None:
    """Smallest space satisfying every ``holds`` axiom and no ``fails`` axiom.

    Ties within the smallest size go to the least canonical key, so the
    answer does not depend on ``jobs``.
    """
    for n in range(query.max_n + 1):
        iso = query.up_to_iso and n <= MAX_ISO_N
        spaces = list(enumerate_topologies(n, up_to_iso=iso))
        if jobs > 1 and len(spaces) > 64:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                keys = [k for part in ex.map(_match_keys, itertools.repeat(query), _chunks(spaces, jobs)) for k in part]
        else:
            keys = _match_keys(query, spaces)
        if keys:
            best = canonical_space(_space_from(min(keys)))
            return Witness(best, classify_all(best))
    return None


# -- implication matrix ------------------------------------------------------


@dataclass(frozen=True)
class Entry:
    """Outcome for "P implies Q": either no counterexample up to ``bound``
    or a witness key."""

    bound: int
    witness: tuple[int, int] | None = None

    @property
    def implies(self) -> bool:
        return self.witness is None


@dataclass
class ImplicationMatrix:
    axioms: tuple[str, ...]
    status: dict[tuple[str, str], Entry]

    def __getitem__(self, pair):
        return self.status[pair]

    def witness_space(self, p: str, q: str) -> FinSpace | None:
        e = self.status[p, q]
        return None if e.witness is None else _space_from(e.witness)


def implication_matrix(axioms: Sequence[str] = AXIOMS, max_n: int = 4, jobs: int = 1) -> ImplicationMatrix:
    if max_n > MAX_MATRIX_N:
        raise BoundExceeded(f"implication matrix supports max_n <= {MAX_MATRIX_N}")
    axioms = tuple(check_axiom(a) for a in axioms)
    status = {}
    for p in axioms:
        for q in axioms:
            if p == q:
                continue
            w = search(SearchQuery((p,), (q,), max_n), jobs=jobs)
            status[p, q] = Entry(max_n, None if w is None else w.key)
    return ImplicationMatrix(axioms, status)
