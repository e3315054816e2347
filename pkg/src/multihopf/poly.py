"""Integer polynomials truncated at a total degree, in a fixed number of variables."""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from math import factorial
from typing import Iterable


class TruncationError(ValueError):
    pass


class TruncPoly:
    """Polynomial in ``x_1..x_nvars`` with every term of total degree <= ``maxdeg``.

    Terms are stored as ``{exponent tuple: coefficient}`` without zeros.
    Products silently drop anything above ``maxdeg``.
    """

    __slots__ = ("nvars", "maxdeg", "terms")

    def __init__(self, nvars: int, maxdeg: int, terms=None):
        self.nvars = int(nvars)
        self.maxdeg = int(maxdeg)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise TruncationError(f"exponent {exps} has the wrong number of variables")
            if c and sum(exps) <= self.maxdeg:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # construction
    @classmethod
    def zero(cls, nvars, maxdeg):
        return cls(nvars, maxdeg)

    @classmethod
    def one(cls, nvars, maxdeg):
        return cls(nvars, maxdeg, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars, maxdeg, exps, coeff=1):
        exps = tuple(exps) + (0,) * (nvars - len(exps))
        return cls(nvars, maxdeg, {exps: coeff})

    @classmethod
    def from_weights(cls, nvars, maxdeg, weights: Iterable, sign=None):
        """Sum of ``x^w`` over an iterable of exponent vectors (or (vector, coeff) pairs)."""
        acc = Counter()
        for w in weights:
            if isinstance(w, tuple) and len(w) == 2 and isinstance(w[0], tuple):
                w, c = w
            else:
                c = 1
            acc[tuple(w)] += c
        return cls(nvars, maxdeg, acc)

    def window(self):
        return (self.nvars, self.maxdeg)

    def _check(self, other):
        if self.window() != other.window():
            raise TruncationError(f"window mismatch {self.window()} vs {other.window()}")

    # arithmetic
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TruncPoly(self.nvars, self.maxdeg, out)

    def __neg__(self):
        return TruncPoly(self.nvars, self.maxdeg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return TruncPoly(self.nvars, self.maxdeg, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        D = self.maxdeg
        out = defaultdict(int)
        by_deg = defaultdict(list)
        for k, v in other.terms.items():
            by_deg[sum(k)].append((k, v))
        for a, ca in self.terms.items():
            room = D - sum(a)
            for d, items in by_deg.items():
                if d > room:
                    continue
                for b, cb in items:
                    out[tuple(x + y for x, y in zip(a, b))] += ca * cb
        return TruncPoly(self.nvars, D, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return self.window() == other.window() and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.maxdeg, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TruncPoly(nvars={self.nvars}, maxdeg={self.maxdeg}, terms={len(self.terms)})"

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> int:
        exps = tuple(exps) + (0,) * (self.nvars - len(exps))
        return self.terms.get(exps, 0)

    # degree handling
    def homogeneous(self, d: int):
        return TruncPoly(self.nvars, self.maxdeg, {k: v for k, v in self.terms.items() if sum(k) == d})

    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self.terms})

    def lowest_component(self):
        ds = self.degrees()
        return self.homogeneous(ds[0]) if ds else self

    def truncate(self, maxdeg: int):
        if maxdeg > self.maxdeg:
            raise TruncationError("cannot widen a truncated polynomial")
        return TruncPoly(self.nvars, maxdeg, self.terms)

    def negate_variables(self):
        """f(-x_1, ..., -x_n)."""
        return TruncPoly(self.nvars, self.maxdeg,
                         {k: (-v if sum(k) % 2 else v) for k, v in self.terms.items()})

    def sign_twist(self, base_degree: int):
        """(-1)^base_degree f(-x): flips the sign of components whose degree differs from base by an odd amount."""
        return TruncPoly(self.nvars, self.maxdeg,
                         {k: (-v if (sum(k) - base_degree) % 2 else v) for k, v in self.terms.items()})

    # (quasi)symmetry
    def is_quasisymmetric(self) -> bool:
        from math import comb
        groups = defaultdict(set)
        for k, v in self.terms.items():
            groups[tuple(e for e in k if e)].add(v)
        counts = Counter(tuple(e for e in k if e) for k in self.terms)
        for alpha, vals in groups.items():
            if len(vals) != 1 or counts[alpha] != comb(self.nvars, len(alpha)):
                return False
        return True

    def is_symmetric(self) -> bool:
        groups = defaultdict(set)
        counts = Counter()
        for k, v in self.terms.items():
            lam = tuple(sorted(k, reverse=True))
            groups[lam].add(v)
            counts[lam] += 1
        for lam, vals in groups.items():
            if len(vals) != 1 or counts[lam] != _distinct_perms(lam):
                return False
        return True

    # serialization
    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))
        return {"nvars": self.nvars, "maxdeg": self.maxdeg,
                "terms": {json.dumps(list(k), separators=(",", ":")): v for k, v in items}}

    @classmethod
    def from_json(cls, data: dict):
        return cls(data["nvars"], data["maxdeg"],
                   {tuple(json.loads(k)): v for k, v in data["terms"].items()})


def _distinct_perms(vec) -> int:
    n = factorial(len(vec))
    for c in Counter(vec).values():
        n //= factorial(c)
    return n
