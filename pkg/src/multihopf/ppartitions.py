"""Labeled posets, set-valued P-partitions and linear multi-extensions."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from .poly import TruncPoly
from .series import BasisElement, SeriesError, expand_qsym
from .shapes import Composition, SkewShape, comp_to_descents, composition_of_word
from .tableaux import _value_candidates
from .words import MPermSmall


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledPoset:
    """Elements 1..n, cover pairs (s, t) meaning s is covered by t, and labels theta[x-1]."""
    n: int
    covers: tuple
    theta: tuple
    below: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        covers = tuple(sorted({(int(s), int(t)) for s, t in self.covers}))
        theta = tuple(int(t) for t in self.theta)
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "theta", theta)
        if sorted(theta) != list(range(1, self.n + 1)):
            raise PosetError("labeling must be a bijection onto [n]")
        for s, t in covers:
            if not (1 <= s <= self.n and 1 <= t <= self.n) or s == t:
                raise PosetError(f"bad cover {(s, t)}")
        object.__setattr__(self, "below", self._closure())

    def _closure(self) -> tuple:
        down = {x: set() for x in range(1, self.n + 1)}
        for s, t in self.covers:
            down[t].add(s)
        order = self.linear_extension(down)
        full = {x: set() for x in down}
        for x in order:
            for s in down[x]:
                full[x] |= {s} | full[s]
        return tuple(frozenset(full[x]) for x in range(1, self.n + 1))

    def linear_extension(self, down=None) -> list[int]:
        if down is None:
            down = {x: set() for x in range(1, self.n + 1)}
            for s, t in self.covers:
                down[t].add(s)
        done, order = set(), []
        while len(order) < self.n:
            ready = [x for x in range(1, self.n + 1) if x not in done and down[x] <= done]
            if not ready:
                raise PosetError("cover relation has a cycle")
            order.append(ready[0])
            done.add(ready[0])
        return order

    def less(self, x, y) -> bool:
        return x in self.below[y - 1]

    def lower_covers(self, t) -> list[tuple[int, bool]]:
        """(s, strict) for every s covered by t."""
        return [(s, self.theta[t - 1] < self.theta[s - 1]) for s, tt in self.covers if tt == t]

    @classmethod
    def from_shape(cls, shape) -> "LabeledPoset":
        """Cells of a skew shape (element k = k-th cell in row-major order), labeled bottom row first."""
        if not isinstance(shape, SkewShape):
            from .shapes import Partition, parse_skew
            shape = parse_skew(shape) if isinstance(shape, str) else SkewShape(Partition(shape))
        cells = list(shape.cells())
        index = {c: k + 1 for k, c in enumerate(cells)}
        reading = sorted(cells, key=lambda c: (-c[0], c[1]))
        label = {c: k + 1 for k, c in enumerate(reading)}
        covers = []
        for (i, j) in cells:
            for nb in ((i, j + 1), (i + 1, j)):
                if nb in index:
                    covers.append((index[(i, j)], index[nb]))
        poset = cls(len(cells), tuple(covers), tuple(label[c] for c in cells))
        object.__setattr__(poset, "_cells", tuple(cells))
        return poset

    @classmethod
    def chain(cls, labels) -> "LabeledPoset":
        n = len(labels)
        return cls(n, tuple((k, k + 1) for k in range(1, n)), tuple(labels))

    @classmethod
    def antichain(cls, n, labels=None) -> "LabeledPoset":
        return cls(n, (), tuple(labels or range(1, n + 1)))

    def disjoint_union(self, other: "LabeledPoset") -> "LabeledPoset":
        m = self.n
        covers = self.covers + tuple((s + m, t + m) for s, t in other.covers)
        return LabeledPoset(m + other.n, covers, self.theta + tuple(t + m for t in other.theta))

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers], "theta": list(self.theta)}

    @classmethod
    def from_json(cls, data) -> "LabeledPoset":
        return cls(data["n"], tuple(tuple(c) for c in data["covers"]), tuple(data["theta"]))


def _svpp_search(P: LabeledPoset, max_letters: int, max_entry: int, singletons: bool):
    """Yield (assignment dict, letter count) for every set-valued P-partition within bounds."""
    order = P.linear_extension()
    lowers = {t: P.lower_covers(t) for t in order}
    vals: dict[int, tuple] = {}

    def rec(k, used):
        if k == P.n:
            yield vals, used
            return
        x = order[k]
        lo = 1
        for s, strict in lowers[x]:
            lo = max(lo, vals[s][-1] + (1 if strict else 0))
        budget = max_letters - used - (P.n - k - 1)
        if budget < 1:
            return
        cands = ([(v,) for v in range(lo, max_entry + 1)] if singletons
                 else _value_candidates("svt", lo, max_entry, budget))
        for v in cands:
            vals[x] = v
            yield from rec(k + 1, used + len(v))
        vals.pop(x, None)

    yield from rec(0, 0)


def enumerate_svpp(P: LabeledPoset, max_letters: int, max_entry: int,
                   singletons: bool = False) -> Iterator[dict]:
    for vals, _ in _svpp_search(P, max_letters, max_entry, singletons):
        yield {x: vals[x] for x in sorted(vals)}


def is_svpp(P: LabeledPoset, sigma: dict) -> bool:
    for s, t in P.covers:
        a, b = sigma[s], sigma[t]
        if not a or not b:
            return False
        strict = P.theta[t - 1] < P.theta[s - 1]
        if (max(a) >= min(b)) if strict else (max(a) > min(b)):
            return False
    return True


def gen_Ktilde(P: LabeledPoset, nvars: int, D: int) -> TruncPoly:
    return _gen(P, nvars, D, singletons=False)


def gen_K(P: LabeledPoset, nvars: int, D: int) -> TruncPoly:
    return _gen(P, nvars, D, singletons=True)


def _gen(P, nvars, D, singletons):
    acc = Counter()
    for vals, _ in _svpp_search(P, D, nvars, singletons):
        w = [0] * nvars
        for v in vals.values():
            for a in v:
                w[a - 1] += 1
        acc[tuple(w)] += 1
    return TruncPoly(nvars, D, acc)


def multi_jordan_holder(P: LabeledPoset, N: int) -> list[MPermSmall]:
    """Reading words of all linear multi-extensions of P by [N], sorted."""
    if N < P.n:
        return []
    up = {x: {y for y in range(1, P.n + 1) if P.less(x, y)} for x in range(1, P.n + 1)}
    down = {x: set(P.below[x - 1]) for x in range(1, P.n + 1)}
    out = []
    word: list[int] = []
    started: set[int] = set()

    def rec(pos, prev):
        if len(started) == P.n and pos == N:
            out.append(MPermSmall(P.theta[x - 1] for x in word))
            return
        if N - pos < P.n - len(started) or pos == N:
            return
        for x in range(1, P.n + 1):
            if x == prev or not down[x] <= started or up[x] & started:
                continue
            fresh = x not in started
            started.add(x)
            word.append(x)
            rec(pos + 1, x)
            word.pop()
            if fresh:
                started.discard(x)

    rec(0, None)
    return sorted(out)


def multi_jordan_holder_by_filter(P: LabeledPoset, N: int) -> list[MPermSmall]:
    """Same set, by filtering all m-permutations of length N."""
    from .words import small_mperms
    inv = {t: x for x, t in enumerate(P.theta, start=1)}
    out = []
    for w in small_mperms(N, P.n):
        pos = defaultdict(list)
        for j, a in enumerate(w):
            pos[inv[a]].append(j)
        if all(pos[x][-1] < pos[y][0] for x in range(1, P.n + 1)
               for y in range(1, P.n + 1) if P.less(x, y)):
            out.append(MPermSmall(w))
    return sorted(out)


def multippart_bijection(P: LabeledPoset, sigma: dict) -> tuple[MPermSmall, list[tuple]]:
    """Send a set-valued P-partition to (w, sigma') with w in a multi-Jordan-Holder set."""
    if not is_svpp(P, sigma):
        raise PosetError("not a set-valued P-partition")
    top = max(max(v) for v in sigma.values())
    long_word, source = [], []
    for r in range(1, top + 1):
        layer = sorted(P.theta[x - 1] for x, v in sigma.items() if r in v)
        long_word.extend(layer)
        source.extend([r] * len(layer))
    w, sig = [], []
    for a, r in zip(long_word, source):
        if w and w[-1] == a:
            sig[-1].add(r)
        else:
            w.append(a)
            sig.append({r})
    return MPermSmall(w), [tuple(sorted(s)) for s in sig]


def multippart_inverse(P: LabeledPoset, w, sigma_prime) -> dict:
    inv = {t: x for x, t in enumerate(P.theta, start=1)}
    if len(w) != len(sigma_prime):
        raise PosetError("word and chain partition have different lengths")
    out: dict[int, set] = defaultdict(set)
    for a, s in zip(w, sigma_prime):
        x = inv[a]
        if out[x] & set(s):
            raise PosetError("union is not disjoint")
        out[x] |= set(s)
    return {x: tuple(sorted(out[x])) for x in sorted(out)}


def _balancing_labels(n: int) -> list[tuple]:
    return [(1,) * i + (2,) + (1,) * (n - 2 - i) for i in range(n - 1)]


def balanced_test(f: BasisElement, n: int) -> bool:
    """Whether the coefficients of M at (1..2..1) all agree in a homogeneous degree-n element."""
    if f.basis not in ("L", "M"):
        raise SeriesError("balanced_test takes L or M input")
    if any(sum(k) != n for k in f.coeffs):
        raise SeriesError(f"input is not homogeneous of degree {n}")
    if f.basis == "L":
        mc = defaultdict(int)
        from .series import _refinements
        for a, c in f.coeffs.items():
            for b in _refinements(a):
                mc[b] += c
    else:
        mc = f.coeffs
    vals = {mc.get(lab, 0) for lab in _balancing_labels(n)}
    return len(vals) <= 1


def descent_profile(P: LabeledPoset, N: int) -> tuple[int, ...]:
    words = multi_jordan_holder(P, N)
    return tuple(sum(1 for w in words if w[i - 1] > w[i]) for i in range(1, N))


def ktilde_by_jordan_holder(P: LabeledPoset, D: int) -> BasisElement:
    """Sum of L̃ indexed by the descent compositions of the multi-Jordan-Holder words up to length D."""
    acc = Counter()
    for N in range(P.n, D + 1):
        for w in multi_jordan_holder(P, N):
            acc[tuple(composition_of_word(w))] += 1
    return BasisElement("Lt", acc, D)
