"""The line-oriented ``.space`` format.

::

    # Sierpinski space
    space sierpinski
    points 2
    open {}
    open {1}
    open {0,1}

A document uses exactly one construction style: ``open`` lines (the whole
open family), ``subbase`` lines, ``preorder i<=j`` lines (``i`` lies in the
closure of ``{j}``), or a single ``catalog <family> [point=<k>]`` line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .catalog import FAMILY_NAMES, DescribedSpace
from .core import FinSpace, bits, fmt_set, from_preorder, generate_topology


class SpaceFormatError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class SpaceSyntaxError(SpaceFormatError):
    pass


class SpaceSemanticError(SpaceFormatError):
    pass


STYLES = ("open", "subbase", "preorder", "catalog")


@dataclass(frozen=True)
class SpaceDoc:
    kind: str
    name: str | None = None
    n: int | None = None
    sets: tuple[int, ...] = ()
    pairs: tuple[tuple[int, int], ...] = ()
    family: str | None = None
    point: int | None = None
    source: str = field(default="", compare=False, repr=False)

    @property
    def label(self) -> str:
        return self.name or "unnamed"

    def build(self) -> FinSpace | DescribedSpace:
        if self.kind == "open":
            return FinSpace(self.n, self.sets)
        if self.kind == "subbase":
            return generate_topology(self.n, self.sets)
        if self.kind == "preorder":
            return from_preorder(self.n, self.pairs)
        return DescribedSpace(self.family, self.point)


_NAME = re.compile(r"[A-Za-z0-9_.\-]+")
_INT = re.compile(r"\d+")
_KEYWORDS = ("space", "points") + STYLES


class _Line:
    """Cursor over one source line; columns are 1-based."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    @property
    def col(self) -> int:
        return self.pos + 1

    def error(self, msg: str, col: int | None = None):
        return SpaceSyntaxError(self.lineno, col or self.col, msg)

    def expect(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            found = self.text[self.pos:self.pos + 1] or "end of line"
            raise self.error(f"expected {what}, found {found!r}")
        self.pos = m.end()
        return m.group()

    def literal(self, s: str):
        self.skip_ws()
        if not self.text.startswith(s, self.pos):
            found = self.text[self.pos:self.pos + 1] or "end of line"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos:self.pos + 1]

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}; expected end of line")

    def int_token(self) -> tuple[int, int]:
        self.skip_ws()
        col = self.col
        return int(self.expect(_INT, "a point index")), col

    def point_set(self) -> list[tuple[int, int]]:
        self.literal("{")
        out = []
        if self.peek() == "}":
            self.pos += 1
            return out
        while True:
            out.append(self.int_token())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.literal("}")
            return out


def parse_space(text: str) -> SpaceDoc:
    name = n = None
    n_pos = (1, 1)
    kind = None
    sets, pairs, family, point = [], [], None, None
    refs: list[tuple[int, int, int]] = []  # (index, line, col) to range-check
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _Line(raw.split("#", 1)[0].rstrip(), lineno)
        line.skip_ws()
        if line.pos == len(line.text):
            continue
        kw_col = line.col
        kw = line.expect(_NAME, "a keyword")
        if kw not in _KEYWORDS:
            raise SpaceSyntaxError(lineno, kw_col, f"unknown keyword {kw!r}; expected one of {', '.join(_KEYWORDS)}")
        if kw == "space":
            if name is not None:
                raise SpaceSemanticError(lineno, kw_col, "duplicate 'space' line")
            name = line.expect(_NAME, "a space name")
        elif kw == "points":
            if n is not None:
                raise SpaceSemanticError(lineno, kw_col, "duplicate 'points' line")
            n = int(line.expect(_INT, "a point count"))
            n_pos = (lineno, kw_col)
        else:
            if kind is not None and kind != kw:
                raise SpaceSemanticError(lineno, kw_col, f"cannot mix '{kw}' with '{kind}' lines")
            if kw == "catalog" and kind == "catalog":
                raise SpaceSemanticError(lineno, kw_col, "duplicate 'catalog' line")
            kind = kw
            if kw in ("open", "subbase"):
                members = line.point_set()
                refs.extend((i, lineno, c) for i, c in members)
                m = 0
                for i, _ in members:
                    m |= 1 << i
                sets.append(m)
            elif kw == "preorder":
                i, ci = line.int_token()
                line.literal("<=")
                j, cj = line.int_token()
                refs.extend([(i, lineno, ci), (j, lineno, cj)])
                pairs.append((i, j))
            else:
                line.skip_ws()
                fam_col = line.col
                family = line.expect(_NAME, "a catalog family name")
                if family not in FAMILY_NAMES:
                    raise SpaceSemanticError(lineno, fam_col, f"unknown catalog family {family!r}")
                if line.peek():
                    line.literal("point")
                    line.literal("=")
                    point = int(line.expect(_INT, "a point"))
        line.end()

    if kind is None:
        raise SpaceSemanticError(1, 1, "document has no open, subbase, preorder or catalog lines")
    if kind == "catalog":
        if n is not None:
            raise SpaceSemanticError(*n_pos, "catalog documents take no 'points' line")
    else:
        if n is None:
            raise SpaceSemanticError(1, 1, "missing 'points' line")
        for i, lineno, col in refs:
            if i >= n:
                raise SpaceSemanticError(lineno, col, f"point index {i} >= {n}")
    return SpaceDoc(kind, name, n, tuple(sets), tuple(pairs), family, point, source=text)


def emit_space(doc: SpaceDoc) -> str:
    out = []
    if doc.name is not None:
        out.append(f"space {doc.name}")
    if doc.kind == "catalog":
        out.append(f"catalog {doc.family}" + (f" point={doc.point}" if doc.point is not None else ""))
        return "\n".join(out) + "\n"
    out.append(f"points {doc.n}")
    if doc.kind == "preorder":
        out += [f"preorder {i}<={j}" for i, j in doc.pairs]
    else:
        out += [f"{doc.kind} {fmt_set(m)}" for m in doc.sets]
    return "\n".join(out) + "\n"


def doc_from_space(space: FinSpace, name: str | None = None) -> SpaceDoc:
    return SpaceDoc("open", name, space.n, space.opens)


def load_space(path: str) -> SpaceDoc:
    with open(path) as fh:
        return parse_space(fh.read())


def describe_opens(space: FinSpace) -> list[list[int]]:
    return [list(bits(u)) for u in space.opens]
