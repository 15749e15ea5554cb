"""Maps between finite spaces and the super-continuous / super-closed classes.

Fibres of a map out of a finite space are finite and therefore compact, so a
map is perfect exactly when it is closed; the fibre check is kept as an
assertion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .classify import is_compact
from .core import FinSpace, PointSet, bits
from .errors import BoundExceeded, NotABijection
from .operators import derived_topology, is_delta_closed

MAX_MAP_N = 4


@dataclass(frozen=True)
class SpaceMap:
    dom: FinSpace
    cod: FinSpace
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom.n:
            raise ValueError(f"map needs {self.dom.n} values, got {len(self.values)}")
        if any(not 0 <= v < self.cod.n for v in self.values):
            raise ValueError(f"values {self.values} fall outside the codomain 0..{self.cod.n - 1}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def image(self, a: PointSet) -> PointSet:
        out = 0
        for x in bits(a):
            out |= 1 << self.values[x]
        return out

    def preimage(self, b: PointSet) -> PointSet:
        out = 0
        for x, y in enumerate(self.values):
            if b >> y & 1:
                out |= 1 << x
        return out

    def is_bijective(self) -> bool:
        return self.dom.n == self.cod.n and len(set(self.values)) == self.dom.n

    def compose(self, inner: "SpaceMap") -> "SpaceMap":
        """``self`` after ``inner``."""
        return SpaceMap(inner.dom, self.cod, tuple(self.values[v] for v in inner.values))


def identity(space: FinSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.n)))


def is_continuous(f: SpaceMap) -> bool:
    return all(f.dom.is_open(f.preimage(v)) for v in f.cod.opens)


def is_super_continuous(f: SpaceMap) -> bool:
    delta_opens = set(derived_topology(f.dom, "delta"))
    return all(f.preimage(v) in delta_opens for v in f.cod.opens)


def is_open_map(f: SpaceMap) -> bool:
    return all(f.cod.is_open(f.image(u)) for u in f.dom.opens)


def is_closed_map(f: SpaceMap) -> bool:
    return all(f.cod.is_closed(f.image(c)) for c in f.dom.closeds)


def is_super_closed(f: SpaceMap) -> bool:
    return all(is_delta_closed(f.cod, f.image(c)) for c in f.dom.closeds)


def is_perfect(f: SpaceMap) -> bool:
    for y in f.cod.points:
        assert is_compact(f.dom, f.preimage(1 << y))
    return is_closed_map(f)


def is_homeomorphism(f: SpaceMap) -> bool:
    return f.is_bijective() and is_continuous(f) and is_open_map(f)


def is_super_homeomorphism(f: SpaceMap) -> bool:
    if not f.is_bijective():
        raise NotABijection(f"{f.values} is not a bijection")
    return is_super_closed(f) and is_super_continuous(f)


def all_maps(dom: FinSpace, cod: FinSpace) -> Iterator[SpaceMap]:
    for values in itertools.product(range(cod.n), repeat=dom.n):
        yield SpaceMap(dom, cod, values)


def enumerate_continuous_maps(dom: FinSpace, cod: FinSpace) -> Iterator[SpaceMap]:
    if dom.n > MAX_MAP_N or cod.n > MAX_MAP_N:
        raise BoundExceeded(f"map enumeration supports spaces of at most {MAX_MAP_N} points")
    return (f for f in all_maps(dom, cod) if is_continuous(f))


def bijections(dom: FinSpace, cod: FinSpace) -> Sequence[SpaceMap]:
    if dom.n != cod.n:
        return []
    return [SpaceMap(dom, cod, p) for p in itertools.permutations(range(cod.n))]
