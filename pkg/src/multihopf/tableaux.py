"""Tableau families, their weights, and the RSK bijection behind the Schur expansion of g.

Every family is a filling of a skew shape; they differ in what a cell holds
and in the row/column inequalities:

=========  ==================  ==============================  ====================
kind       cell value          rows / columns                  weight counts
=========  ==================  ==============================  ====================
ssyt       integer             weak / strict                   letters
svt        set                 max<=min / max<min              letters
rpp        integer             weak / weak                     columns holding i
wsvt       multiset            max<min / max<=min              letters with repeats
vst        integer + groups    strict / weak                   groups holding i
elegant    integer in [1,r-1]  weak / strict                   (counted only)
=========  ==================  ==============================  ====================
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import ClassVar, Iterator

from .poly import TruncPoly
from .shapes import Cell, Partition, ShapeError, SkewShape, parse_skew, format_skew

KINDS = ("ssyt", "svt", "rpp", "wsvt", "vst", "elegant")


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple  # ((cell, value), ...) in row-major order
    kind: ClassVar[str] = ""

    @classmethod
    def from_dict(cls, shape, values: dict, **extra):
        if not isinstance(shape, SkewShape):
            shape = SkewShape(Partition(shape))
        cells = list(shape.cells())
        if set(values) != set(cells):
            raise TableauError("filling does not match the shape")
        return cls(shape, tuple((c, values[c]) for c in cells), **extra)

    @property
    def cells(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, cell):
        return self.cells[cell]

    def letters(self) -> list[int]:
        out = []
        for _, v in self.entries:
            out.extend(v if isinstance(v, tuple) else (v,))
        return out

    def weight(self, nvars: int | None = None) -> tuple:
        counts = self._weight_counts()
        top = max(counts, default=0)
        n = top if nvars is None else nvars
        if top > n:
            raise TableauError(f"letter {top} exceeds {n} variables")
        return tuple(counts.get(i, 0) for i in range(1, n + 1))

    def _weight_counts(self) -> Counter:
        return Counter(self.letters())

    def is_valid(self) -> bool:
        vals = self.cells
        for (i, j), v in vals.items():
            if not _cell_ok(self.kind, v):
                return False
            if (i, j - 1) in vals and not _row_ok(self.kind, vals[(i, j - 1)], v):
                return False
            if (i - 1, j) in vals and not _col_ok(self.kind, vals[(i - 1, j)], v):
                return False
            if self.kind == "elegant" and not 1 <= v <= i - 1:
                return False
        return True

    def rows(self) -> list[list]:
        out: dict[int, list] = {}
        for (i, _), v in self.entries:
            out.setdefault(i, []).append(v)
        return [out[i] for i in sorted(out)]

    def to_json(self) -> dict:
        cells = []
        for (r, c), v in self.entries:
            cells.append({"r": r, "c": c, "v": list(v) if isinstance(v, tuple) else v})
        return {"shape": format_skew(self.shape), "kind": self.kind, "cells": cells}


class SemistandardTableau(Tableau):
    kind = "ssyt"


class SetValuedTableau(Tableau):
    kind = "svt"


class ReversePlanePartition(Tableau):
    kind = "rpp"

    def _weight_counts(self) -> Counter:
        cols: dict[int, set] = {}
        for (_, j), v in self.entries:
            cols.setdefault(j, set()).add(v)
        return Counter(v for s in cols.values() for v in s)


class WeakSetValuedTableau(Tableau):
    kind = "wsvt"


@dataclass(frozen=True)
class ValuedSetTableau(Tableau):
    groups: tuple = ()  # tuple of tuples of cells, each a vertical run of equal entries
    kind: ClassVar[str] = "vst"

    def _weight_counts(self) -> Counter:
        vals = self.cells
        return Counter(vals[g[0]] for g in self.groups)

    def is_valid(self) -> bool:
        if not Tableau.is_valid(self):
            return False
        vals = self.cells
        seen = [c for g in self.groups for c in g]
        if sorted(seen) != sorted(vals):
            return False
        for g in self.groups:
            cols = {j for _, j in g}
            rows = sorted(i for i, _ in g)
            if len(cols) != 1 or rows != list(range(rows[0], rows[0] + len(rows))):
                return False
            if len({vals[c] for c in g}) != 1:
                return False
        return True

    def to_json(self) -> dict:
        out = Tableau.to_json(self)
        out["groups"] = [[[r, c] for r, c in g] for g in self.groups]
        return out


class ElegantFilling(Tableau):
    kind = "elegant"

    def weight(self, nvars=None):
        return Tableau.weight(self, nvars)


_CLASSES = {cls.kind: cls for cls in (SemistandardTableau, SetValuedTableau, ReversePlanePartition,
                                      WeakSetValuedTableau, ValuedSetTableau, ElegantFilling)}


def _lo(v):
    return v[0] if isinstance(v, tuple) else v


def _hi(v):
    return v[-1] if isinstance(v, tuple) else v


def _cell_ok(kind, v) -> bool:
    if kind == "svt":
        return isinstance(v, tuple) and len(v) > 0 and list(v) == sorted(set(v)) and v[0] >= 1
    if kind == "wsvt":
        return isinstance(v, tuple) and len(v) > 0 and list(v) == sorted(v) and v[0] >= 1
    return isinstance(v, int) and v >= 1


def _row_ok(kind, left, right) -> bool:
    if kind in ("ssyt", "rpp", "elegant", "svt"):
        return _hi(left) <= _lo(right)
    return _hi(left) < _lo(right)  # wsvt, vst


def _col_ok(kind, above, below) -> bool:
    if kind in ("ssyt", "elegant", "svt"):
        return _hi(above) < _lo(below)
    return _hi(above) <= _lo(below)  # rpp, wsvt, vst


# --- enumeration -----------------------------------------------------------

def _value_candidates(kind, lo, max_entry, budget):
    """Cell values whose smallest letter is >= lo, in lexicographic order, using <= budget letters."""
    if kind in ("svt", "wsvt"):
        pool = range(lo, max_entry + 1)
        maker = combinations if kind == "svt" else combinations_with_replacement
        out = []
        for size in range(1, budget + 1):
            out.extend(maker(pool, size))
        out.sort()
        return out
    return [v for v in range(lo, max_entry + 1)]


def _fillings(kind: str, shape: SkewShape, max_entry: int, max_letters: int | None) -> Iterator[dict]:
    cells = list(shape.cells())
    n = len(cells)
    vals: dict[Cell, object] = {}
    setlike = kind in ("svt", "wsvt")
    if setlike and max_letters is None:
        raise TableauError("set-valued kinds need max_letters")
    budget0 = max_letters if max_letters is not None else None

    def rec(k, used):
        if k == n:
            yield dict(vals)
            return
        i, j = cells[k]
        left = vals.get((i, j - 1))
        above = vals.get((i - 1, j))
        lo = 1
        if left is not None:
            lo = max(lo, _hi(left) + (0 if _row_ok(kind, 1, 1) else 1))
        if above is not None:
            lo = max(lo, _hi(above) + (0 if _col_ok(kind, 1, 1) else 1))
        top = max_entry
        if kind == "elegant":
            top = min(top, i - 1)
        remaining = n - k - 1
        budget = (budget0 - used - remaining) if setlike else 1
        if setlike and budget < 1:
            return
        for v in _value_candidates(kind, lo, top, budget):
            vals[(i, j)] = v
            yield from rec(k + 1, used + (len(v) if setlike else 1))
        vals.pop((i, j), None)

    yield from rec(0, 0)


def _column_runs(shape: SkewShape, vals: dict) -> list[list[Cell]]:
    runs = []
    cols: dict[int, list[Cell]] = {}
    for c in shape.cells():
        cols.setdefault(c[1], []).append(c)
    for j in sorted(cols):
        col = sorted(cols[j])
        run = [col[0]]
        for c in col[1:]:
            if c[0] == run[-1][0] + 1 and vals[c] == vals[run[-1]]:
                run.append(c)
            else:
                runs.append(run)
                run = [c]
        runs.append(run)
    return runs


def _run_groupings(run: list[Cell]) -> Iterator[list[tuple]]:
    L = len(run)
    for r in range(L):
        for cuts in combinations(range(1, L), r):
            b = (0, *cuts, L)
            yield [tuple(run[b[t]:b[t + 1]]) for t in range(len(b) - 1)]


def _groupings(runs) -> Iterator[tuple]:
    if not runs:
        yield ()
        return
    for first in _run_groupings(runs[0]):
        for rest in _groupings(runs[1:]):
            yield tuple(first) + rest


def enumerate_tableaux(kind: str, shape, max_letters: int | None = None,
                       max_entry: int = 1) -> Iterator[Tableau]:
    """All tableaux of one family on a shape, row-major, candidates in lexicographic order.

    ``max_entry`` bounds the largest letter.  ``max_letters`` bounds the weight
    degree; it is required for the set-valued kinds.
    """
    if kind not in _CLASSES:
        raise TableauError(f"unknown tableau kind {kind!r}")
    if not isinstance(shape, SkewShape):
        shape = parse_skew(shape) if isinstance(shape, str) else SkewShape(Partition(shape))
    cls = _CLASSES[kind]
    cells = list(shape.cells())
    for vals in _fillings(kind, shape, max_entry, max_letters):
        if kind == "vst":
            for groups in _groupings(_column_runs(shape, vals)):
                if max_letters is not None and len(groups) > max_letters:
                    continue
                yield ValuedSetTableau(shape, tuple((c, vals[c]) for c in cells), groups)
            continue
        t = cls(shape, tuple((c, vals[c]) for c in cells))
        if max_letters is not None and sum(t._weight_counts().values()) > max_letters:
            continue
        yield t


def weight(kind: str, T: Tableau, nvars: int | None = None) -> tuple:
    if T.kind != kind:
        raise TableauError(f"expected a {kind} tableau, got {T.kind}")
    return T.weight(nvars)


def generating_function(kind: str, shape, nvars: int, maxdeg: int, signed: bool = False) -> TruncPoly:
    """Sum of x^T over a family, letters <= nvars, weight degree <= maxdeg.

    With ``signed`` every term picks up (-1)^(|T| - |shape|), which turns the
    set-valued sum into the stable Grothendieck polynomial.  Weights are
    accumulated during the search; no tableau objects are built.
    """
    if not isinstance(shape, SkewShape):
        shape = parse_skew(shape) if isinstance(shape, str) else SkewShape(Partition(shape))
    if kind not in _CLASSES:
        raise TableauError(f"unknown tableau kind {kind!r}")
    cells = list(shape.cells())
    n = len(cells)
    size = shape.size
    setlike = kind in ("svt", "wsvt")
    per_cell = 1 if kind in ("ssyt", "svt", "wsvt", "elegant") else 0
    row_weak = _row_ok(kind, 1, 1)
    col_weak = _col_ok(kind, 1, 1)
    acc = Counter()
    vals: dict = {}
    w = [0] * (nvars + 1)

    def add(v, sgn):
        for x in (v if setlike else (v,)):
            w[x] += sgn

    def rec(k, deg, mult):
        if k == n:
            sgn = -1 if signed and (deg - size) % 2 else 1
            acc[tuple(w[1:])] += sgn * mult
            return
        i, j = cells[k]
        left = vals.get((i, j - 1))
        above = vals.get((i - 1, j))
        lo = 1
        if left is not None:
            lo = max(lo, _hi(left) + (0 if row_weak else 1))
        if above is not None:
            lo = max(lo, _hi(above) + (0 if col_weak else 1))
        top = min(nvars, i - 1) if kind == "elegant" else nvars
        room = maxdeg - deg - per_cell * (n - k - 1)
        if room < per_cell:
            return
        for v in _value_candidates(kind, lo, top, room if setlike else 1):
            vals[(i, j)] = v
            if kind == "rpp":
                gain = 0 if above == v else 1
                if gain > room:
                    continue
                w[v] += gain
                rec(k + 1, deg + gain, mult)
                w[v] -= gain
            elif kind == "vst":
                if above == v:
                    rec(k + 1, deg, mult)  # joins the group above
                if room >= 1:
                    w[v] += 1
                    rec(k + 1, deg + 1, mult)
                    w[v] -= 1
            else:
                add(v, 1)
                rec(k + 1, deg + (len(v) if setlike else 1), mult)
                add(v, -1)
        vals.pop((i, j), None)

    rec(0, 0, 1)
    return TruncPoly(nvars, maxdeg, acc)


def generating_function_by_objects(kind: str, shape, nvars: int, maxdeg: int,
                                   signed: bool = False) -> TruncPoly:
    """Same sum as ``generating_function`` but built from enumerated tableaux and their weights."""
    if not isinstance(shape, SkewShape):
        shape = parse_skew(shape) if isinstance(shape, str) else SkewShape(Partition(shape))
    acc = Counter()
    size = shape.size
    for T in enumerate_tableaux(kind, shape, max_letters=maxdeg, max_entry=nvars):
        wt = T.weight(nvars)
        sgn = -1 if signed and (sum(wt) - size) % 2 else 1
        acc[wt] += sgn
    return TruncPoly(nvars, maxdeg, acc)


def schur_poly(lam, nvars: int, maxdeg: int) -> TruncPoly:
    return generating_function("ssyt", SkewShape(Partition(lam)), nvars, maxdeg)


def elegant_count(lam, mu) -> int:
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return 0
    return _elegant_count(lam, mu)


@lru_cache(maxsize=None)
def _elegant_count(lam: Partition, mu: Partition) -> int:
    shape = SkewShape(lam, mu)
    return sum(1 for _ in _fillings("elegant", shape, max(len(lam), 1), None))


# --- Kostka numbers ---------------------------------------------------------

@lru_cache(maxsize=None)
def kostka(lam: tuple, content: tuple) -> int:
    """Number of semistandard tableaux of shape ``lam`` with the given content."""
    lam = tuple(p for p in lam if p)
    content = tuple(content)
    while content and content[-1] == 0:
        content = content[:-1]
    if sum(lam) != sum(content):
        return 0
    if not content:
        return 1 if not lam else 0
    k = content[-1]
    total = 0
    # remove a horizontal strip of size k holding the largest letter
    for inner in _horizontal_strips_inside(lam, k):
        total += kostka(inner, content[:-1])
    return total


def _horizontal_strips_inside(lam: tuple, k: int) -> Iterator[tuple]:
    rows = len(lam)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        below = lam[i + 1] if i + 1 < rows else 0
        for take in range(0, min(left, lam[i] - below) + 1):
            yield from rec(i + 1, left - take, acc + [lam[i] - take])

    yield from rec(0, k, [])


# --- RSK bijection for the Schur expansion of g -------------------------------

def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Insert x by bumping the leftmost entry strictly greater; return the new cell (1-indexed)."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return (r + 1, 1)
        row = rows[r]
        pos = next((p for p, y in enumerate(row) if y > x), None)
        if pos is None:
            row.append(x)
            return (r + 1, len(row))
        row[pos], x = x, row[pos]
        r += 1


def _reverse_bump(rows: list[list[int]], r: int) -> int:
    """Remove the last cell of row r (1-indexed) and bump back up to the first row."""
    y = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop(r - 1)
    for i in range(r - 2, -1, -1):
        row = rows[i]
        pos = max(p for p, z in enumerate(row) if z < y)
        row[pos], y = y, row[pos]
    return y


def _shape_of(rows) -> tuple:
    return tuple(len(r) for r in rows)


def gschur_forward(T: ReversePlanePartition) -> tuple[SemistandardTableau, ElegantFilling]:
    """Split a reverse plane partition of straight shape into (semistandard S, elegant U)."""
    if not T.shape.is_straight():
        raise ShapeError("gschur_forward needs a straight shape")
    lam = T.shape.outer
    m = len(lam)
    if m == 0:
        return (SemistandardTableau(SkewShape(Partition()), ()),
                ElegantFilling(SkewShape(Partition()), ()))
    rows = T.rows()
    S = [list(rows[m - 1])]
    U: dict[Cell, int] = {}
    for k in range(m - 1, 0, -1):  # 1-indexed row k, working upward
        upper, lower = rows[k - 1], rows[k]
        reduced = [v for c, v in enumerate(upper) if not (c < len(lower) and lower[c] == v)]
        old = _shape_of(S)
        shifted = {(r + 1, c): v + 1 for (r, c), v in U.items()}
        new_cells = set()
        for x in reduced:
            new_cells.add(_row_insert(S, x))
        bounds = (lam[k - 1], *old)
        strip = set()
        for r in range(1, len(bounds) + 1):
            inner = old[r - 1] if r - 1 < len(old) else 0
            for c in range(inner + 1, bounds[r - 1] + 1):
                strip.add((r, c))
        if not new_cells <= strip:
            raise TableauError("insertion left the horizontal strip")
        U = shifted
        for cell in strip - new_cells:
            U[cell] = 1
    s_shape = Partition(_shape_of(S))
    S_t = SemistandardTableau.from_dict(
        SkewShape(s_shape), {(r + 1, c + 1): v for r, row in enumerate(S) for c, v in enumerate(row)})
    U_t = ElegantFilling.from_dict(SkewShape(lam, s_shape), U)
    return S_t, U_t


def gschur_backward(S: SemistandardTableau, U: ElegantFilling) -> ReversePlanePartition:
    """Inverse of ``gschur_forward``."""
    if S.shape.inner or U.shape.inner != S.shape.outer:
        raise ShapeError("U must fill the outer shape minus the shape of S")
    lam = U.shape.outer
    m = len(lam)
    rows_S = [list(r) for r in S.rows()]
    u = dict(U.entries)
    T_rows = []
    for k in range(1, m + 1):
        if not rows_S:
            raise ShapeError("ran out of rows while inverting")
        T_rows.append(list(rows_S[0]))
        if k == m:
            if len(rows_S) != 1 or u:
                raise ShapeError("shapes of S and U are incompatible")
            break
        shape = _shape_of(rows_S)
        conj = [sum(1 for p in shape if p >= c) for c in range(1, shape[0] + 1)]
        active = [(conj[c - 1], c) for c in range(1, len(conj) + 1)
                  if u.get((conj[c - 1] + 1, c)) != 1]
        for r, c in sorted(active, key=lambda rc: -rc[1]):
            if len(rows_S[r - 1]) != c or (r < len(rows_S) and len(rows_S[r]) >= c):
                raise ShapeError("active boundary is not removable")
            _reverse_bump(rows_S, r)
        u = {(r - 1, c): v - 1 for (r, c), v in u.items() if v != 1}
        if any(r < 1 for r, _ in u):
            raise ShapeError("elegant filling has an entry that cannot move up")
    values = {(i + 1, j + 1): v for i, row in enumerate(T_rows) for j, v in enumerate(row)}
    return ReversePlanePartition.from_dict(SkewShape(lam), values)


def tableau_from_json(data: dict) -> Tableau:
    kind = data["kind"]
    shape = parse_skew(data["shape"])
    vals = {}
    for cell in data["cells"]:
        v = cell["v"]
        vals[(cell["r"], cell["c"])] = tuple(v) if isinstance(v, list) else v
    if kind == "vst":
        groups = tuple(tuple((r, c) for r, c in g) for g in data.get("groups", []))
        return ValuedSetTableau.from_dict(shape, vals, groups=groups)
    return _CLASSES[kind].from_dict(shape, vals)
