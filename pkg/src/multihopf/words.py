"""Words, multi-permutations and set compositions.

Two families of labels live here:

* small multi-permutations (``MPermSmall``): words over ``1..n`` using every
  letter, with no two equal neighbours;
* big multi-permutations (``MPermBig``): set compositions of ``{1..n}`` whose
  blocks never contain two consecutive integers.

Sums over small multi-permutations are infinite, so every ``WordElement``
produced on that side carries a length cap.  Big-side sums are finite.
"""
from __future__ import annotations

import random
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .shapes import Composition, DescentSet, descents_to_comp


class WordError(ValueError):
    pass


class StandardizationError(WordError):
    """Raised when a word has equal neighbours and so has no standard form."""


class UndecidedAtBound(RuntimeError):
    """The bounded weak-order search ran out of representatives."""


# --- label types -----------------------------------------------------------

class MPermSmall(tuple):
    """A word over 1..n with every letter used and no equal neighbours."""

    def __new__(cls, letters=()):
        letters = tuple(int(x) for x in letters)
        if any(letters[i] == letters[i + 1] for i in range(len(letters) - 1)):
            raise WordError(f"equal adjacent letters in {letters}")
        if letters and set(letters) != set(range(1, max(letters) + 1)):
            raise WordError(f"{letters} does not use every letter of 1..{max(letters)}")
        if any(x <= 0 for x in letters):
            raise WordError("letters must be positive")
        return super().__new__(cls, letters)

    @property
    def n(self) -> int:
        return max(self, default=0)

    def descents(self) -> DescentSet:
        return DescentSet(len(self), tuple(i for i in range(1, len(self)) if self[i - 1] > self[i]))

    def composition(self) -> Composition:
        return descents_to_comp(self.descents())

    def __repr__(self) -> str:
        return f"MPermSmall({format_small(self)!r})"

    def __str__(self) -> str:
        return format_small(self)


class SetComposition(tuple):
    """Sequence of nonempty, pairwise disjoint blocks; each block is a sorted tuple."""

    def __new__(cls, blocks=()):
        bs = []
        for b in blocks:
            if isinstance(b, int):
                b = (b,)
            b = tuple(sorted(int(x) for x in b))
            if not b:
                raise WordError("blocks must be nonempty")
            bs.append(b)
        flat = [x for b in bs for x in b]
        if len(flat) != len(set(flat)):
            raise WordError(f"blocks overlap in {bs}")
        if any(x <= 0 for x in flat):
            raise WordError("letters must be positive")
        return super().__new__(cls, bs)

    def ground(self) -> frozenset:
        return frozenset(x for b in self for x in b)

    def restrict(self, keep) -> SetComposition:
        keep = set(keep)
        return SetComposition(tuple(x for x in b if x in keep) for b in self if any(x in keep for x in b))

    def shift(self, n: int) -> SetComposition:
        return SetComposition(tuple(x + n for x in b) for b in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_big(self)!r})"

    def __str__(self) -> str:
        return format_big(self)


class MPermBig(SetComposition):
    """Set composition of {1..n} with no block holding two consecutive integers."""

    def __new__(cls, blocks=()):
        self = super().__new__(cls, blocks)
        flat = set(self.ground())
        if flat and flat != set(range(1, max(flat) + 1)):
            raise WordError(f"{format_big(self)} is not a set composition of 1..{max(flat)}")
        for b in self:
            if any(b[i + 1] == b[i] + 1 for i in range(len(b) - 1)):
                raise WordError(f"block {b} contains consecutive integers")
        return self

    @property
    def n(self) -> int:
        return max(self.ground(), default=0)

    def inverse(self) -> MPermSmall:
        return invert(self)

    def type(self) -> Composition:
        return mperm_type(self)


# --- elements --------------------------------------------------------------

@dataclass
class WordElement:
    """Finite map from labels (or pairs of labels) to integer coefficients.

    ``cap`` is ``None`` for exact elements; otherwise only terms whose size
    (word length, or summed length for tensors) is at most ``cap`` are known.
    """
    terms: dict = field(default_factory=dict)
    cap: int | None = None

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def from_counter(cls, counts, cap=None) -> WordElement:
        return cls(dict(counts), cap)

    @classmethod
    def basis(cls, label, cap=None) -> WordElement:
        return cls({label: 1}, cap)

    def __getitem__(self, label) -> int:
        return self.terms.get(label, 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def _merge_cap(self, other):
        caps = [c for c in (self.cap, other.cap) if c is not None]
        return min(caps) if caps else None

    def __add__(self, other: WordElement) -> WordElement:
        out = Counter(self.terms)
        out.update(other.terms)
        return WordElement(dict(out), self._merge_cap(other)).truncate()

    def __neg__(self) -> WordElement:
        return WordElement({k: -v for k, v in self.terms.items()}, self.cap)

    def __sub__(self, other: WordElement) -> WordElement:
        return self + (-other)

    def scale(self, c: int) -> WordElement:
        return WordElement({k: c * v for k, v in self.terms.items()}, self.cap)

    def truncate(self, cap: int | None = None, size=None) -> WordElement:
        """Drop terms whose size exceeds ``cap`` (defaults to the element's own cap)."""
        cap = self.cap if cap is None else cap
        if cap is None:
            return self
        size = size or _term_size
        return WordElement({k: v for k, v in self.terms.items() if size(k) <= cap},
                           cap if self.cap is None else min(cap, self.cap))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordElement):
            return NotImplemented
        return self.terms == other.terms and self.cap == other.cap

    def same_terms(self, other: WordElement) -> bool:
        return self.terms == other.terms

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))


def _term_size(key) -> int:
    if _is_tensor(key):
        return len(key[0]) + len(key[1])
    return len(key)


def _is_tensor(key) -> bool:
    return type(key) is tuple and len(key) == 2 and all(isinstance(k, tuple) for k in key)


def tensor(a, b) -> tuple:
    """Key for the simple tensor ``a ⊗ b``."""
    return (a, b)


def _sort_key(key):
    if _is_tensor(key):
        return (0, _sort_key(key[0]), _sort_key(key[1]))
    return (len(key), tuple(str(x) for x in key))


# --- multishuffle and cuut -------------------------------------------------

def _token_multishuffles(k: int, l: int, cap: int) -> Iterator[tuple]:
    """Multishuffles of ``u_1..u_k`` and ``v_1..v_l`` (all distinct) of length <= cap.

    Tokens are ``(0, i)`` for ``u_i`` and ``(1, j)`` for ``v_j``.
    """
    word: list = []

    def rec(i, j):
        if len(word) > cap:
            return
        if i == k and j == l:
            yield tuple(word)
        if len(word) == cap:
            return
        last = word[-1] if word else None
        for side, idx, size in ((0, i, k), (1, j, l)):
            options = []
            if idx >= 1:
                options.append(idx)
            if idx < size:
                options.append(idx + 1)
            for nxt in options:
                tok = (side, nxt)
                if tok == last:
                    continue
                word.append(tok)
                if side == 0:
                    yield from rec(nxt, j)
                else:
                    yield from rec(i, nxt)
                word.pop()

    yield from rec(0, 0)


def multishuffle(u: Sequence, v: Sequence, cap: int) -> WordElement:
    """All multishuffles of two words of length at most ``cap``, with multiplicity."""
    u, v = tuple(u), tuple(v)
    if cap < max(len(u), len(v)):
        raise WordError(f"cap {cap} is below the operand lengths")
    counts = Counter()
    for toks in _token_multishuffles(len(u), len(v), cap):
        counts[tuple(u[i - 1] if side == 0 else v[i - 1] for side, i in toks)] += 1
    return WordElement(dict(counts), cap)


def multishuffle_recursive(u: Sequence, v: Sequence, cap: int) -> WordElement:
    """Multishuffle built from the alternating-prefix recursion; an independent route."""
    u, v = tuple(u), tuple(v)

    @lru_cache(maxsize=None)
    def rec(i: int, j: int, budget: int) -> tuple:
        # token words for u[i:] and v[j:]; tokens are (side, index)
        if i == len(u) or j == len(v):
            rest = tuple((0, t) for t in range(i, len(u))) + tuple((1, t) for t in range(j, len(v)))
            return ((rest, 1),) if len(rest) <= budget else ()
        out = Counter()
        for last, (a, b) in ((0, ((1, j), (0, i))), (1, ((0, i), (1, j)))):
            # prefixes alternate a/b and end with b; b is the token being finished
            for plen in range(1, budget + 1):
                prefix = tuple(b if (plen - k) % 2 == 1 else a for k in range(plen))
                nxt = (i + 1, j) if b[0] == 0 else (i, j + 1)
                for rest, c in rec(*nxt, budget - plen):
                    out[prefix + rest] += c
        return tuple(out.items())

    counts = Counter()
    for toks, c in rec(0, 0, cap):
        counts[tuple(u[t] if side == 0 else v[t] for side, t in toks)] += c
    return WordElement(dict(counts), cap)


def cuut(w: Sequence) -> WordElement:
    """The cut coproduct together with every cut through a single letter."""
    w = tuple(w)
    terms = Counter()
    terms[((), w)] += 1
    for i in range(1, len(w) + 1):
        terms[(w[:i], w[i - 1:])] += 1
        terms[(w[:i], w[i:])] += 1
    return WordElement(dict(terms))


# --- small multi-permutations ---------------------------------------------

def standardize_word(w: Sequence[int]) -> MPermSmall:
    w = tuple(w)
    if any(w[i] == w[i + 1] for i in range(len(w) - 1)):
        raise StandardizationError(f"{w} has equal adjacent letters")
    rank = {x: r for r, x in enumerate(sorted(set(w)), start=1)}
    return MPermSmall(rank[x] for x in w)


def mmr_product(w: Sequence[int], u: Sequence[int], cap: int) -> WordElement:
    """Product of small multi-permutations: multishuffle with the second shifted."""
    w, u = MPermSmall(w), MPermSmall(u)
    n = w.n
    raw = multishuffle(w, tuple(x + n for x in u), max(cap, len(w), len(u)))
    out = WordElement({MPermSmall(k): c for k, c in raw.terms.items()}, cap)
    return out.truncate(cap)


def mmr_coproduct(w: Sequence[int]) -> WordElement:
    w = MPermSmall(w)
    out = Counter()
    for (a, b), c in cuut(w).terms.items():
        out[(standardize_word(a), standardize_word(b))] += c
    return WordElement(dict(out))


def small_mperms(length: int, n: int | None = None) -> Iterator[MPermSmall]:
    """Small multi-permutations of a given length (over 1..n if n is given)."""
    alphabets = [n] if n is not None else range(0 if length == 0 else 1, length + 1)
    for k in alphabets:
        if k > length or (k == 0) != (length == 0):
            continue
        for w in _words_no_repeat(length, k):
            if len(set(w)) == k:
                yield MPermSmall(w)


def _words_no_repeat(length: int, k: int) -> Iterator[tuple]:
    if length == 0:
        yield ()
        return
    for w in _words_no_repeat(length - 1, k):
        for x in range(1, k + 1):
            if not w or w[-1] != x:
                yield (*w, x)


def small_mperms_upto(max_length: int) -> list[MPermSmall]:
    return [w for L in range(max_length + 1) for w in small_mperms(L)]


# --- big multi-permutations -------------------------------------------------

def standardize_setcomp(w) -> MPermBig:
    """Collapse each maximal run of value-consecutive letters sharing a block, then relabel."""
    w = SetComposition(w)
    where = {x: i for i, b in enumerate(w) for x in b}
    letters = sorted(where)
    blocks: list[list[int]] = [[] for _ in w]
    label = 0
    prev_block = None
    for x in letters:
        if where[x] != prev_block:
            label += 1
            blocks[where[x]].append(label)
            prev_block = where[x]
    return MPermBig(blocks)


def standardize_setcomp_by_rules(w, rng: random.Random | None = None) -> MPermBig:
    """Apply the delete/reduce rules one at a time in random order until stuck."""
    rng = rng or random.Random(0)
    blocks = [set(b) for b in SetComposition(w)]
    while True:
        present = set().union(*blocks) if blocks else set()
        moves = []
        for b_idx, b in enumerate(blocks):
            for x in b:
                if x + 1 in b:
                    moves.append(("delete", x + 1, b_idx))
        top = max(present, default=0)
        for i in range(1, top):
            if i not in present:
                moves.append(("reduce", i, None))
        if not present or min(present) > 1:
            if present:
                moves.append(("reduce", min(present) - 1, None))
        if not moves:
            return MPermBig(tuple(b) for b in blocks)
        kind, x, b_idx = rng.choice(moves)
        if kind == "delete":
            blocks[b_idx].discard(x)
        else:
            blocks = [{y - 1 if y > x else y for y in b} for b in blocks]


def invert(w) -> MPermSmall:
    """Big multi-permutation to the small one whose letter i sits at the positions in block i."""
    w = SetComposition(w)
    if not w:
        return MPermSmall()
    L = max(w.ground())
    out = [0] * L
    for i, b in enumerate(w, start=1):
        for p in b:
            out[p - 1] = i
    return MPermSmall(out)


def invert_small(u: Sequence[int]) -> MPermBig:
    u = MPermSmall(u)
    return MPermBig(tuple(p for p, x in enumerate(u, start=1) if x == i) for i in range(1, u.n + 1))


def mperm_type(w) -> Composition:
    return MPermSmall(invert(w)).composition()


@lru_cache(maxsize=None)
def big_mperms(n: int) -> tuple[MPermBig, ...]:
    """All big multi-permutations of {1..n}, sorted by length then blocks."""
    out = []
    for blocks in _set_partitions_no_consecutive(n):
        for order in permutations(blocks):
            out.append(MPermBig(order))
    out.sort(key=lambda w: (len(w), tuple(w)))
    return tuple(out)


def _set_partitions_no_consecutive(n: int) -> Iterator[list[tuple]]:
    def rec(x, blocks):
        if x > n:
            yield [tuple(b) for b in blocks]
            return
        for b in blocks:
            if b[-1] != x - 1:
                b.append(x)
                yield from rec(x + 1, blocks)
                b.pop()
        blocks.append([x])
        yield from rec(x + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def semishuffle(u, v) -> Counter:
    """Semishuffle of two set compositions: prefix choice of u-block, v-block, or their union."""
    u, v = SetComposition(u), SetComposition(v)

    @lru_cache(maxsize=None)
    def rec(i: int, j: int) -> tuple:
        if i == len(u):
            return ((v[j:], 1),)
        if j == len(v):
            return ((u[i:], 1),)
        out = Counter()
        for rest, c in rec(i + 1, j):
            out[(u[i], *rest)] += c
        for rest, c in rec(i, j + 1):
            out[(v[j], *rest)] += c
        merged = tuple(sorted(u[i] + v[j]))
        for rest, c in rec(i + 1, j + 1):
            out[(merged, *rest)] += c
        return tuple(out.items())

    return Counter({SetComposition(k): c for k, c in rec(0, 0)})


def mmr_big_product(w, u) -> WordElement:
    """Product of big multi-permutations: semishuffle with the second shifted, then standardize."""
    w, u = MPermBig(w), MPermBig(u)
    out = Counter()
    for sc, c in semishuffle(w, u.shift(w.n)).items():
        out[standardize_setcomp(sc)] += c
    return WordElement(dict(out))


def mmr_big_product_by_restriction(w, u) -> WordElement:
    """Same product, read off from restrictions of every candidate of the right size."""
    w, u = MPermBig(w), MPermBig(u)
    m, n = w.n, u.n
    out = Counter()
    if m == 0 or n == 0:
        return WordElement({w if n == 0 else u: 1})
    for v in big_mperms(m + n):
        if v.restrict(range(1, m + 1)) == w and standardize_setcomp(v.restrict(range(m + 1, m + n + 1))) == u:
            out[v] += 1
    for v in big_mperms(m + n - 1):
        if v.restrict(range(1, m + 1)) == w and standardize_setcomp(v.restrict(range(m, m + n))) == u:
            out[v] += 1
    return WordElement(dict(out))


def mmr_big_coproduct(w) -> WordElement:
    w = MPermBig(w)
    out = Counter()
    for i in range(len(w) + 1):
        out[(standardize_setcomp(w[:i]), standardize_setcomp(w[i:]))] += 1
    return WordElement(dict(out))


def big_product_element(x: WordElement, y: WordElement) -> WordElement:
    out = Counter()
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for v, c in mmr_big_product(a, b).terms.items():
                out[v] += ca * cb * c
    return WordElement(dict(out))


def _compositions_into(w: MPermBig) -> Iterator[tuple]:
    """All ways to cut ``w`` into nonempty consecutive pieces."""
    k = len(w)
    for r in range(1, k + 1):
        for cuts in combinations(range(1, k), r - 1):
            bounds = (0, *cuts, k)
            yield tuple(w[bounds[i]:bounds[i + 1]] for i in range(r))


def antipode_big(x) -> WordElement:
    """Antipode from the alternating sum of iterated products of reduced coproduct pieces."""
    if not isinstance(x, WordElement):
        x = WordElement({MPermBig(x): 1})
    out = Counter()
    for w, coeff in x.terms.items():
        w = MPermBig(w)
        if not w:
            out[w] += coeff
            continue
        for pieces in _compositions_into(w):
            acc = WordElement({MPermBig(): 1})
            for p in pieces:
                acc = big_product_element(acc, WordElement({standardize_setcomp(p): 1}))
            sign = -1 if len(pieces) % 2 else 1
            for v, c in acc.terms.items():
                out[v] += sign * coeff * c
    return WordElement(dict(out))


def antipode_axiom_big(w) -> WordElement:
    """m(S ⊗ id)Δ(w); equals the counit times the unit when the antipode is right."""
    out = Counter()
    for (a, b), c in mmr_big_coproduct(w).terms.items():
        for v, cv in big_product_element(antipode_big(a), WordElement({b: 1})).terms.items():
            out[v] += c * cv
    return WordElement(dict(out))


def antipode_small_truncated(u: Sequence[int], cap: int) -> WordElement:
    """Small-side antipode read off as the transpose of the big-side antipode, up to length ``cap``."""
    u = MPermSmall(u)
    target = invert_small(u)
    out = {}
    for y in small_mperms_upto(cap):
        c = antipode_big(invert_small(y))[target]
        if c:
            out[y] = c
    return WordElement(out, cap)


# --- irreducible factorization --------------------------------------------

def factor_irreducible(w) -> list:
    """Unique factorization into irreducible pieces, each standardized."""
    if isinstance(w, SetComposition):
        w = MPermBig(w)
        pieces, start, seen = [], 0, set()
        for i, b in enumerate(w):
            seen.update(b)
            if max(seen) == len(seen) and seen == set(range(1, len(seen) + 1)):
                pieces.append(standardize_setcomp(w[start:i + 1]))
                start = i + 1
        return pieces
    w = MPermSmall(w)
    pieces, start = [], 0
    for i in range(1, len(w) + 1):
        if i == len(w) or max(w[:i]) < min(w[i:]):
            if i == len(w) or max(w[start:i]) < min(w[i:]):
                pieces.append(standardize_word(w[start:i]))
                start = i
    return [p for p in pieces if p]


def concat_shifted(pieces) -> SetComposition | MPermSmall:
    """The slash product ``w¹/w²/…``: concatenate, shifting each piece past the previous letters."""
    if not pieces:
        return MPermBig()
    if isinstance(pieces[0], SetComposition):
        out, n = [], 0
        for p in pieces:
            out.extend(tuple(x + n for x in b) for b in p)
            n += p.n
        return MPermBig(out)
    out, n = [], 0
    for p in pieces:
        out.extend(x + n for x in p)
        n += MPermSmall(p).n
    return MPermSmall(out)


def is_irreducible(w) -> bool:
    return len(factor_irreducible(w)) == 1


# --- weak order ------------------------------------------------------------

def _preimages(x: MPermBig, n: int) -> Iterator[SetComposition]:
    """Set compositions of {1..n} that standardize to ``x``: letter j becomes a run of c_j integers."""
    k = x.n
    if k == 0 or n < k:
        return
    where = {v: i for i, b in enumerate(x) for v in b}
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0, *cuts, n)
        blocks = [[] for _ in x]
        for j in range(1, k + 1):
            blocks[where[j]].extend(range(bounds[j - 1] + 1, bounds[j] + 1))
        yield SetComposition(blocks)


def _covers(w: SetComposition) -> Iterator[SetComposition]:
    for i in range(len(w) - 1):
        if w[i][-1] < w[i + 1][0]:
            yield SetComposition((*w[:i], w[i] + w[i + 1], *w[i + 2:]))
    for i, b in enumerate(w):
        for t in range(1, len(b)):
            low, high = b[:t], b[t:]
            yield SetComposition((*w[:i], high, low, *w[i + 1:]))


def weak_order_successors(x, n_bound: int) -> set[MPermBig]:
    x = MPermBig(x)
    out = set()
    for n in range(x.n, n_bound + 1):
        for rep in _preimages(x, n):
            for c in _covers(rep):
                out.add(standardize_setcomp(c))
    out.discard(x)
    return out


def weak_order_upset(w, n_bound: int) -> set[MPermBig]:
    """Everything reachable from ``w`` by covers among representatives on at most ``n_bound`` letters."""
    w = MPermBig(w)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in weak_order_successors(x, n_bound):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def weak_order_leq(w, v, n_bound: int | None = None) -> bool:
    """True when ``w <= v`` is witnessed by representatives on at most ``n_bound`` letters.

    If the bounded search finishes without meeting ``v`` the question is left
    open and ``UndecidedAtBound`` is raised.
    """
    w, v = MPermBig(w), MPermBig(v)
    if w == v:
        return True
    if n_bound is None:
        n_bound = w.n + v.n
    if not w or not v:
        # covers never change emptiness, so the empty one is comparable only to itself
        return False
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in weak_order_successors(x, n_bound):
            if y == v:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    raise UndecidedAtBound(f"{format_big(v)} not reached from {format_big(w)} with n_bound={n_bound}")


# --- text forms ------------------------------------------------------------

def format_small(w: Sequence[int]) -> str:
    if any(x >= 10 for x in w):
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def parse_small(text: str) -> MPermSmall:
    text = text.strip().strip("[]()")
    if text in ("", "∅"):
        return MPermSmall()
    if "," in text:
        return MPermSmall(int(x) for x in text.split(","))
    return MPermSmall(int(c) for c in text)


def parse_word(text: str) -> tuple:
    """Raw word: digits, comma separated integers, or letters."""
    text = text.strip()
    if text in ("", "∅"):
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    if text.isdigit():
        return tuple(int(c) for c in text)
    return tuple(text)


def format_word(w: Sequence) -> str:
    if all(isinstance(x, int) for x in w):
        return format_small(w)
    return "".join(str(x) for x in w)


def format_big(w) -> str:
    parts = []
    for b in w:
        parts.append(str(b[0]) if len(b) == 1 else "(" + ",".join(str(x) for x in b) + ")")
    return "[" + ",".join(parts) + "]"


_BLOCK = re.compile(r"\(([^()]*)\)|(\d+)")


def parse_setcomp(text: str) -> SetComposition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise WordError(f"cannot parse set composition {text!r}")
    body = text[1:-1]
    blocks = []
    pos = 0
    for m in _BLOCK.finditer(body):
        gap = body[pos:m.start()].replace(",", "").strip()
        if gap:
            raise WordError(f"cannot parse set composition {text!r}")
        pos = m.end()
        if m.group(1) is not None:
            blocks.append(tuple(int(x) for x in m.group(1).split(",") if x.strip()))
        else:
            blocks.append((int(m.group(2)),))
    if body[pos:].replace(",", "").strip():
        raise WordError(f"cannot parse set composition {text!r}")
    return SetComposition(blocks)


def parse_big(text: str) -> MPermBig:
    return MPermBig(parse_setcomp(text))


def format_key(key) -> str:
    """Text form of a word, multi-permutation, or tensor of them."""
    if _is_tensor(key):
        return format_key(key[0]) + "|" + format_key(key[1])
    if isinstance(key, SetComposition):
        return format_big(key)
    return format_word(key)


def element_to_json(x: WordElement) -> dict:
    return {"cap": x.cap, "terms": {format_key(k): c for k, c in x.sorted_items()}}


def element_from_json(data: dict, kind: str = "small") -> WordElement:
    parse_one = {"small": parse_small, "big": parse_big, "word": parse_word}[kind]
    terms = {}
    for key, c in data["terms"].items():
        if "|" in key:
            a, b = key.split("|", 1)
            terms[(parse_one(a), parse_one(b))] = c
        else:
            terms[parse_one(key)] = c
    return WordElement(terms, data.get("cap"))
