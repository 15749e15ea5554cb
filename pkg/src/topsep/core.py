"""Finite topological spaces over bitmask point sets.

Points of an ``n``-point space are ``0..n-1`` and a point set is an ``int``
whose bit ``i`` marks membership of point ``i``.  A space stores its whole
open family; the specialization preorder (``y <= x`` iff ``y`` lies in the
closure of ``{x}``) and the minimal neighbourhoods are derived once when the
space is built, and every construction path goes through validation.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceeded, EmptyCarrier, NotATopology

PointSet = int

MAX_CANONICAL_N = 7


def bits(mask: PointSet) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(points: Iterable[int]) -> PointSet:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def fmt_set(mask: PointSet) -> str:
    return "{" + ",".join(str(i) for i in bits(mask)) + "}"


def is_subset(a: PointSet, b: PointSet) -> bool:
    return a & ~b == 0


def compress(mask: PointSet, points: Sequence[int]) -> PointSet:
    """Rewrite ``mask`` in the coordinates of ``points`` (point ``points[i]`` -> ``i``)."""
    out = 0
    for i, p in enumerate(points):
        if mask >> p & 1:
            out |= 1 << i
    return out


def expand(mask: PointSet, points: Sequence[int]) -> PointSet:
    """Inverse of :func:`compress`."""
    out = 0
    for i in bits(mask):
        out |= 1 << points[i]
    return out


class FinSpace:
    """A validated finite topological space.

    Attributes
    ----------
    n : int
        Number of points.
    opens : tuple of int
        The open sets, deduplicated and sorted.
    min_nbhd : tuple of int
        ``min_nbhd[x]`` is the smallest open set containing ``x``.
    spec : tuple of int
        ``spec[x]`` is the closure of ``{x}``, i.e. the points ``y <= x`` in
        the specialization preorder.
    origin : tuple of int or None
        For spaces produced by :func:`subspace`, the ambient point behind each
        local point.
    """

    def __init__(self, n: int, opens: Iterable[PointSet], origin: Sequence[int] | None = None):
        if n < 0:
            raise ValueError(f"point count must be non-negative, got {n}")
        full = (1 << n) - 1
        family = sorted(set(opens))
        for s in family:
            if s < 0 or s & ~full:
                raise ValueError(f"set {fmt_set(s)} is not contained in 0..{n - 1}")
        members = frozenset(family)
        if 0 not in members:
            raise NotATopology("the empty set is not open", (0,))
        if full not in members:
            raise NotATopology("the whole space is not open", (full,))

        min_nbhd = []
        for x in range(n):
            m = full
            for u in family:
                if u >> x & 1:
                    m &= u
            min_nbhd.append(m)
        if _up_sets(n, min_nbhd) != members:
            raise NotATopology(*_closure_witness(family, members))

        spec = [0] * n
        for x in range(n):
            for y in bits(min_nbhd[x]):
                spec[y] |= 1 << x

        self.n = n
        self.opens = tuple(family)
        self.min_nbhd = tuple(min_nbhd)
        self.spec = tuple(spec)
        self.origin = tuple(origin) if origin is not None else None
        self._open_set = members

    def __eq__(self, other):
        if not isinstance(other, FinSpace):
            return NotImplemented
        return self.n == other.n and self.opens == other.opens

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        return f"FinSpace({self.n}, [{', '.join(fmt_set(u) for u in self.opens)}])"

    @property
    def full(self) -> PointSet:
        return (1 << self.n) - 1

    @property
    def points(self) -> range:
        return range(self.n)

    @cached_property
    def closeds(self) -> tuple[PointSet, ...]:
        return tuple(sorted(self.full ^ u for u in self.opens))

    @cached_property
    def clopens(self) -> tuple[PointSet, ...]:
        return tuple(u for u in self.opens if (self.full ^ u) in self._open_set)

    def subsets(self) -> range:
        return range(1 << self.n)

    def is_open(self, a: PointSet) -> bool:
        return a in self._open_set

    def is_closed(self, a: PointSet) -> bool:
        return (self.full ^ a) in self._open_set

    def leq(self, y: int, x: int) -> bool:
        """``y <= x`` in the specialization preorder."""
        return bool(self.spec[x] >> y & 1)


def _up_sets(n: int, min_nbhd: Sequence[PointSet]) -> frozenset:
    out = []
    for a in range(1 << n):
        for x in bits(a):
            if min_nbhd[x] & ~a:
                break
        else:
            out.append(a)
    return frozenset(out)


def _closure_witness(family, members):
    for a, b in itertools.combinations(family, 2):
        if a | b not in members:
            return f"union of {fmt_set(a)} and {fmt_set(b)} is not open", (a, b)
        if a & b not in members:
            return f"intersection of {fmt_set(a)} and {fmt_set(b)} is not open", (a, b)
    raise AssertionError("family failed the up-set test but is closed under union and intersection")


def build_from_opens(n: int, family: Iterable[PointSet]) -> FinSpace:
    return FinSpace(n, family)


def generate_topology(n: int, subbase: Iterable[PointSet]) -> FinSpace:
    """Smallest topology on ``n`` points containing ``subbase``."""
    full = (1 << n) - 1
    base = {full}
    for s in subbase:
        if s & ~full:
            raise ValueError(f"set {fmt_set(s)} is not contained in 0..{n - 1}")
        base |= {s & b for b in base}
        base.add(s)
    opens = {0}
    for b in base:
        opens |= {b | u for u in opens}
    return FinSpace(n, opens)


def from_preorder(n: int, pairs: Iterable[tuple[int, int]]) -> FinSpace:
    """Space whose specialization preorder is generated by ``pairs``.

    A pair ``(i, j)`` asserts ``i <= j``, i.e. ``i`` lies in the closure of ``{j}``.
    """
    up = [1 << x for x in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"pair {i}<={j} outside 0..{n - 1}")
        up[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for x in range(n):
            m = up[x]
            for y in bits(m):
                m |= up[y]
            if m != up[x]:
                up[x] = m
                changed = True
    return FinSpace(n, _up_sets(n, up))


def discrete(n: int) -> FinSpace:
    return FinSpace(n, range(1 << n))


def indiscrete(n: int) -> FinSpace:
    return FinSpace(n, {0, (1 << n) - 1})


def sierpinski() -> FinSpace:
    """Two points, ``{1}`` open and ``{0}`` closed."""
    return FinSpace(2, [0b00, 0b10, 0b11])


def closure(space: FinSpace, a: PointSet) -> PointSet:
    out = 0
    for x in bits(a):
        out |= space.spec[x]
    return out


def interior(space: FinSpace, a: PointSet) -> PointSet:
    return space.full ^ closure(space, space.full ^ a)


def is_locally_dense(space: FinSpace, a: PointSet) -> bool:
    return is_subset(a, interior(space, closure(space, a)))


def subspace(space: FinSpace, a: PointSet) -> FinSpace:
    """Relative topology on ``a``, relabelled ``0..|a|-1`` in increasing order.

    The ambient labels are kept in ``origin`` so sets can be carried back
    with :func:`expand`.
    """
    if a == 0:
        raise EmptyCarrier("subspace carrier must be nonempty")
    if a & ~space.full:
        raise ValueError(f"{fmt_set(a)} is not a subset of the space")
    pts = tuple(bits(a))
    return FinSpace(len(pts), {compress(u & a, pts) for u in space.opens}, origin=pts)


def topological_sum(spaces: Sequence[FinSpace]) -> FinSpace:
    if not spaces:
        raise ValueError("topological sum of an empty list")
    opens = [0]
    offset = 0
    for s in spaces:
        opens = [u | (v << offset) for u in opens for v in s.opens]
        offset += s.n
    return FinSpace(offset, opens)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append(tuple(mask_of(perm[i] for i in bits(m)) for m in range(1 << n)))
    return tuple(tables)


def _encode(opens: Iterable[PointSet], table: Sequence[int] | None = None) -> int:
    code = 0
    if table is None:
        for u in opens:
            code |= 1 << u
    else:
        for u in opens:
            code |= 1 << table[u]
    return code


def canonical_form(space: FinSpace) -> tuple[int, int]:
    """Homeomorphism-invariant key ``(n, code)``.

    ``code`` has bit ``m`` set iff point set ``m`` is open; the key takes
    the minimum code over all relabellings of the points.
    """
    if space.n > MAX_CANONICAL_N:
        raise BoundExceeded(f"canonical_form supports n <= {MAX_CANONICAL_N}, got {space.n}")
    return space.n, min(_encode(space.opens, t) for t in _perm_tables(space.n))


def canonical_space(space: FinSpace) -> FinSpace:
    """The relabelling of ``space`` whose encoding is ``canonical_form(space)``."""
    n, code = canonical_form(space)
    return FinSpace(n, (m for m in range(1 << n) if code >> m & 1))


def space_from_key(key: tuple[int, int]) -> FinSpace:
    n, code = key
    return FinSpace(n, (m for m in range(1 << n) if code >> m & 1))
