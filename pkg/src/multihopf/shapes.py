"""Partitions, compositions, skew shapes and ribbons.

Cells are 1-indexed ``(row, column)`` pairs in English notation; the cell
``(i, j)`` lies on diagonal ``j - i``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

Cell = tuple[int, int]


class ShapeError(ValueError):
    """Raised for malformed shapes or failed containment."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ShapeError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Length of row ``i`` (1-indexed), zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def column_length(self, j: int) -> int:
        return sum(1 for p in self if p >= j)

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(o <= self.part(i + 1) for i, o in enumerate(other))

    def cells(self) -> Iterator[Cell]:
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


class Composition(tuple):
    """Tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ShapeError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"

    def __str__(self) -> str:
        return format_composition(self)


@dataclass(frozen=True)
class DescentSet:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(sorted(set(self.elements)))
        if any(e < 1 or e > self.n - 1 for e in els):
            raise ShapeError(f"descents {els} not inside [1, {self.n - 1}]")
        object.__setattr__(self, "elements", els)

    def __contains__(self, i) -> bool:
        return i in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def comp_to_descents(alpha) -> DescentSet:
    alpha = Composition(alpha)
    partial, acc = [], 0
    for a in alpha[:-1]:
        acc += a
        partial.append(acc)
    return DescentSet(alpha.size, tuple(partial))


def descents_to_comp(d: DescentSet) -> Composition:
    if d.n == 0:
        return Composition()
    cuts = [0, *d.elements, d.n]
    return Composition(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def composition_of_word(w) -> Composition:
    """The composition recording the descent set of a word of distinct-adjacent letters."""
    des = tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])
    return descents_to_comp(DescentSet(len(w), des))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ShapeError(f"{format_partition(self.inner)} is not inside {format_partition(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __contains__(self, cell) -> bool:
        i, j = cell
        return self.inner.part(i) < j <= self.outer.part(i)

    def row_range(self, i: int) -> range:
        return range(self.inner.part(i) + 1, self.outer.part(i) + 1)

    def cells(self) -> Iterator[Cell]:
        """Cells in row-major order, top to bottom."""
        for i in range(1, len(self.outer) + 1):
            for j in self.row_range(i):
                yield (i, j)

    def is_straight(self) -> bool:
        return not self.inner

    def is_connected(self) -> bool:
        cells = set(self.cells())
        if not cells:
            return True
        seen, stack = set(), [next(iter(cells))]
        while stack:
            i, j = stack.pop()
            if (i, j) in seen:
                continue
            seen.add((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    stack.append(nb)
        return len(seen) == len(cells)

    def has_2x2(self) -> bool:
        cells = set(self.cells())
        return any((i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells for i, j in cells)

    def is_ribbon(self) -> bool:
        return self.size > 0 and self.is_connected() and not self.has_2x2()

    @classmethod
    def from_cells(cls, cells) -> SkewShape:
        """Canonical (minimal outer partition) skew shape with the given cells, up to translation."""
        cells = set(cells)
        if not cells:
            return cls(Partition(), Partition())
        r0 = min(i for i, _ in cells)
        rows = {}
        for i, j in cells:
            rows.setdefault(i - r0 + 1, []).append(j)
        nrows = max(rows)
        spans = []
        for i in range(1, nrows + 1):
            cols = sorted(rows.get(i, []))
            if cols and cols != list(range(cols[0], cols[-1] + 1)):
                raise ShapeError("row of a skew shape must be an interval")
            spans.append((cols[0], cols[-1]) if cols else None)
        # empty middle rows borrow the next nonempty row's left edge
        filled = [s for s in spans if s is not None]
        shift = 1 - filled[-1][0]
        outer, inner = [], []
        for idx, s in enumerate(spans):
            if s is None:
                nxt = next(t for t in spans[idx + 1:] if t is not None)
                edge = nxt[0] - 1 + shift
                outer.append(edge)
                inner.append(edge)
            else:
                outer.append(s[1] + shift)
                inner.append(s[0] - 1 + shift)
        try:
            return cls(Partition(outer), Partition(p for p in inner if p > 0))
        except ShapeError as exc:
            raise ShapeError(f"cells do not form a skew shape: {sorted(cells)}") from exc

    def __str__(self) -> str:
        return format_skew(self)


def ribbon(alpha) -> SkewShape:
    """Ribbon whose top row has alpha[-1] cells, the next alpha[-2], ..., the bottom alpha[0]."""
    alpha = Composition(alpha)
    if not alpha:
        return SkewShape(Partition(), Partition())
    rows = list(reversed(alpha))
    k = len(rows)
    # right ends: bottom row ends at column alpha[0]; each row above ends (len - 1) further right
    right = [0] * k
    right[k - 1] = rows[k - 1]
    for i in range(k - 2, -1, -1):
        right[i] = right[i + 1] + rows[i] - 1
    outer = Partition(right)
    inner = Partition(r - length for r, length in zip(right, rows) if r - length > 0)
    return SkewShape(outer, inner)


def _upper_right(shape: SkewShape) -> Cell:
    i = next(r for r in range(1, len(shape.outer) + 1) if shape.row_range(r))
    return (i, shape.outer.part(i))


def _lower_left(shape: SkewShape) -> Cell:
    i = max(r for r in range(1, len(shape.outer) + 1) if shape.row_range(r))
    return (i, shape.inner.part(i) + 1)


GLUE_MODES = ("right", "above", "overlap")
_GLUE_ALIASES = {"▷": "right", "◁": "above", "·": "overlap", ">": "right", "<": "above", ".": "overlap"}


def ribbon_glue(rho: SkewShape, tau: SkewShape, mode: str) -> SkewShape:
    """Attach ``tau`` to the upper-right cell of ``rho``.

    ``right`` puts the lower-left cell of ``tau`` just right of it, ``above``
    puts it directly above, ``overlap`` makes the two cells coincide.
    """
    mode = _GLUE_ALIASES.get(mode, mode)
    if mode not in GLUE_MODES:
        raise ShapeError(f"unknown glue mode {mode!r}")
    if rho.size == 0 or tau.size == 0:
        raise ShapeError("ribbon_glue needs nonempty shapes")
    ur = _upper_right(rho)
    ll = _lower_left(tau)
    target = {
        "right": (ur[0], ur[1] + 1),
        "above": (ur[0] - 1, ur[1]),
        "overlap": ur,
    }[mode]
    di, dj = target[0] - ll[0], target[1] - ll[1]
    cells = set(rho.cells())
    moved = {(i + di, j + dj) for i, j in tau.cells()}
    if mode == "overlap":
        cells |= moved
    else:
        cells.update(moved)
    return SkewShape.from_cells(cells)


def ribbon_right(alpha, beta) -> Composition:
    if not alpha or not beta:
        return Composition((*alpha, *beta))
    return Composition((*alpha[:-1], alpha[-1] + beta[0], *beta[1:]))


def ribbon_above(alpha, beta) -> Composition:
    return Composition((*alpha, *beta))


def ribbon_overlap(alpha, beta) -> Composition:
    return Composition((*alpha[:-1], alpha[-1] + beta[0] - 1, *beta[1:]))


@dataclass(frozen=True)
class CornerReport:
    outer: tuple[int, ...]
    inner: tuple[int, ...]


def outer_corner_cells(lam: Partition) -> list[Cell]:
    lam = Partition(lam)
    out = []
    for i in range(1, len(lam) + 2):
        j = lam.part(i) + 1
        if i == 1 or lam.part(i - 1) >= j:
            out.append((i, j))
    return out


def inner_corner_cells(lam: Partition) -> list[Cell]:
    lam = Partition(lam)
    return [(i, lam.part(i)) for i in range(1, len(lam) + 1) if lam.part(i + 1) < lam.part(i)]


def corners(lam, nu=()) -> CornerReport:
    lam, nu = Partition(lam), Partition(nu)
    if not lam.contains(nu):
        raise ShapeError(f"{format_partition(nu)} is not contained in {format_partition(lam)}")
    outer = tuple(sorted((j - i for i, j in outer_corner_cells(lam)), reverse=True))
    inner = tuple(sorted((j - i for i, j in inner_corner_cells(lam) if (i, j) not in set(nu.cells())),
                         reverse=True))
    return CornerReport(outer, inner)


# --- enumeration helpers ---------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first, *rest)))
    return tuple(out)


def partitions_upto(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return (Composition(),)
    out = []
    for k in range(n):
        for d in combinations(range(1, n), k):
            out.append(descents_to_comp(DescentSet(n, d)))
    return tuple(out)


def partitions_inside(box: Partition) -> list[Partition]:
    """All partitions contained in ``box`` (row by row bounded)."""
    box = Partition(box)
    out = []

    def rec(i, prev, acc):
        out.append(Partition(acc))
        if i > len(box):
            return
        for p in range(min(prev, box.part(i)), 0, -1):
            rec(i + 1, p, acc + [p])

    rec(1, box.part(1) if box else 0, [])
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i + 1)
        b += mu.part(i + 1)
        if a < b:
            return False
    return True


# --- text forms ------------------------------------------------------------

_INT_LIST = re.compile(r"^\s*[\[(]\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*[\])]\s*$")


def _parse_ints(text: str) -> tuple[int, ...]:
    if not _INT_LIST.match(text):
        raise ShapeError(f"cannot parse integer list {text!r}")
    body = text.strip()[1:-1].strip().rstrip(",")
    return tuple(int(x) for x in body.split(",")) if body else ()


def parse_partition(text: str) -> Partition:
    return Partition(_parse_ints(text))


def parse_composition(text: str) -> Composition:
    return Composition(_parse_ints(text))


def parse_skew(text: str) -> SkewShape:
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text), Partition())


def format_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def format_composition(alpha) -> str:
    return "(" + ",".join(str(p) for p in alpha) + ")"


def format_skew(shape: SkewShape) -> str:
    if not shape.inner:
        return format_partition(shape.outer)
    return f"{format_partition(shape.outer)}/{format_partition(shape.inner)}"
