"""Classical (quasi)symmetric bases as truncated polynomials, and expansion back into them."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .poly import TruncPoly, TruncationError
from .shapes import (Composition, Partition, SkewShape, comp_to_descents, compositions_of,
                     descents_to_comp, parse_skew, partitions_of)
from .tableaux import generating_function, kostka

# tags whose labels are compositions; the rest take partitions (or skew shapes)
QSYM_TAGS = {"M", "L", "Lt", "Mt", "Rt", "F"}
SYM_TAGS = {"m", "s", "G", "g", "gt", "Kt", "J", "j"}
TAG_ALIASES = {"L̃": "Lt", "M̃": "Mt", "R̃": "Rt", "g̃": "gt", "K̃": "Kt"}


class SeriesError(ValueError):
    pass


class NotQuasisymmetric(SeriesError):
    pass


class NotSymmetric(SeriesError):
    pass


class InsufficientTruncation(SeriesError):
    pass


def normalize_tag(tag: str) -> str:
    tag = TAG_ALIASES.get(tag, tag)
    if tag not in QSYM_TAGS | SYM_TAGS:
        raise SeriesError(f"unknown basis tag {tag!r}")
    return tag


def _label_size(label) -> int:
    if isinstance(label, SkewShape):
        return label.size
    if label and isinstance(label[0], tuple):  # tensor label
        return sum(_label_size(x) for x in label)
    return sum(label)


def _label_str(label) -> str:
    if isinstance(label, SkewShape):
        from .shapes import format_skew
        return format_skew(label)
    if label and isinstance(label[0], tuple):
        return "|".join(_label_str(x) for x in label)
    return "[" + ",".join(map(str, label)) + "]"


def _label_parse(text: str):
    if "|" in text:
        return tuple(_label_parse(t) for t in text.split("|"))
    if "/" in text:
        return parse_skew(text)
    return tuple(json.loads(text))


@dataclass
class BasisElement:
    """Finite integer combination of basis labels; ``cap`` set means terms above it were dropped."""
    basis: str
    coeffs: dict = field(default_factory=dict)
    cap: int | None = None

    def __post_init__(self):
        self.basis = normalize_tag(self.basis)
        clean = {}
        for k, v in self.coeffs.items():
            if not isinstance(k, SkewShape):
                k = tuple(tuple(x) if isinstance(x, (list, tuple)) else x for x in k)
            if v and (self.cap is None or _label_size(k) <= self.cap):
                clean[k] = clean.get(k, 0) + v
        self.coeffs = {k: v for k, v in clean.items() if v}

    def _combine(self, other, sgn):
        if self.basis != other.basis:
            raise SeriesError(f"basis mismatch {self.basis} vs {other.basis}")
        cap = _min_cap(self.cap, other.cap)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + sgn * v
        return BasisElement(self.basis, out, cap)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return BasisElement(self.basis, {k: c * v for k, v in self.coeffs.items()}, self.cap)

    def truncate(self, cap):
        return BasisElement(self.basis, self.coeffs, _min_cap(self.cap, cap))

    def homogeneous(self, d):
        return BasisElement(self.basis, {k: v for k, v in self.coeffs.items() if _label_size(k) == d})

    def degrees(self):
        return sorted({_label_size(k) for k in self.coeffs})

    def __getitem__(self, label):
        return self.coeffs.get(tuple(label) if not isinstance(label, SkewShape) else label, 0)

    def __eq__(self, other):
        if not isinstance(other, BasisElement):
            return NotImplemented
        return (self.basis, self.coeffs, self.cap) == (other.basis, other.coeffs, other.cap)

    def same_terms(self, other) -> bool:
        return self.basis == other.basis and self.coeffs == other.coeffs

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (_label_size(kv[0]), _label_str(kv[0])))

    def to_json(self) -> dict:
        return {"basis": self.basis, "cap": self.cap,
                "coeffs": {_label_str(k): v for k, v in self.sorted_items()}}

    @classmethod
    def from_json(cls, data: dict):
        return cls(data["basis"], {_label_parse(k): v for k, v in data["coeffs"].items()}, data.get("cap"))

    def __repr__(self):
        body = " + ".join(f"{v}*{self.basis}{_label_str(k)}" for k, v in self.sorted_items()) or "0"
        return body + (f" (deg<={self.cap})" if self.cap is not None else "")


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# --- polynomials of the classical bases -------------------------------------

def monomial_qsym(alpha, nvars: int, D: int) -> TruncPoly:
    alpha = tuple(alpha)
    terms = {}
    if sum(alpha) <= D:
        for idx in combinations(range(nvars), len(alpha)):
            e = [0] * nvars
            for i, a in zip(idx, alpha):
                e[i] = a
            terms[tuple(e)] = 1
    return TruncPoly(nvars, D, terms)


def _refinements(alpha) -> list[tuple]:
    n = sum(alpha)
    d = comp_to_descents(alpha)
    return [b for b in compositions_of(n) if set(comp_to_descents(b)) >= set(d)]


def fundamental_qsym(alpha, nvars: int, D: int) -> TruncPoly:
    out = TruncPoly.zero(nvars, D)
    for beta in _refinements(tuple(alpha)):
        out = out + monomial_qsym(beta, nvars, D)
    return out


def monomial_sym(lam, nvars: int, D: int) -> TruncPoly:
    lam = tuple(p for p in lam if p)
    terms = {}
    if sum(lam) <= D and len(lam) <= nvars:
        from itertools import permutations
        for perm in set(permutations(lam + (0,) * (nvars - len(lam)))):
            terms[perm] = 1
    return TruncPoly(nvars, D, terms)


def schur(lam, nvars: int, D: int) -> TruncPoly:
    return generating_function("ssyt", SkewShape(Partition(lam)), nvars, D)


def _require_window(f: TruncPoly):
    if f.nvars < f.maxdeg:
        raise TruncationError(f"need nvars >= maxdeg to expand uniquely, got {f.window()}")


def expand_qsym(f: TruncPoly, target: str = "M") -> BasisElement:
    _require_window(f)
    if not f.is_quasisymmetric():
        raise NotQuasisymmetric("polynomial is not quasisymmetric in its window")
    mc = {}
    for n in range(f.maxdeg + 1):
        for a in compositions_of(n):
            c = f.coefficient(a)
            if c:
                mc[a] = c
    if target == "M":
        return BasisElement("M", mc, f.maxdeg)
    if target != "L":
        raise SeriesError(f"target must be M or L, got {target}")
    # M_alpha = sum over refinements beta of (-1)^(l(beta)-l(alpha)) L_beta
    lc = defaultdict(int)
    for a, c in mc.items():
        for b in _refinements(a):
            lc[b] += c * (-1) ** (len(b) - len(a))
    return BasisElement("L", lc, f.maxdeg)


def expand_sym(f: TruncPoly, target: str = "s") -> BasisElement:
    _require_window(f)
    if not f.is_symmetric():
        raise NotSymmetric("polynomial is not symmetric in its window")
    mc = {}
    for n in range(f.maxdeg + 1):
        for lam in partitions_of(n):
            c = f.coefficient(lam)
            if c:
                mc[tuple(lam)] = c
    if target == "m":
        return BasisElement("m", mc, f.maxdeg)
    if target != "s":
        raise SeriesError(f"target must be m or s, got {target}")
    return BasisElement("s", m_to_s(mc), f.maxdeg)


def m_to_s(mc: dict) -> dict:
    """Monomial coefficients to Schur coefficients by peeling lex-leading terms."""
    rest = dict(mc)
    out = {}
    for n in sorted({sum(k) for k in rest}):
        for lam in partitions_of(n):  # lex decreasing, compatible with dominance
            lam = tuple(lam)
            c = rest.get(lam, 0)
            if not c:
                continue
            out[lam] = c
            for mu in partitions_of(n):
                k = kostka(lam, tuple(mu))
                if k:
                    rest[tuple(mu)] = rest.get(tuple(mu), 0) - c * k
    if any(v for v in rest.values()):
        raise NotSymmetric("monomial data is not a Schur combination")
    return out


def s_to_m(sc: dict) -> dict:
    out = defaultdict(int)
    for lam, c in sc.items():
        for mu in partitions_of(sum(lam)):
            k = kostka(tuple(lam), tuple(mu))
            if k:
                out[tuple(mu)] += c * k
    return {k: v for k, v in out.items() if v}


def to_poly(x: BasisElement, nvars: int, D: int) -> TruncPoly:
    """Window polynomial of an element of M, L, m or s."""
    makers = {"M": monomial_qsym, "L": fundamental_qsym, "m": monomial_sym, "s": schur}
    if x.basis not in makers:
        raise SeriesError(f"no polynomial model for basis {x.basis}")
    out = TruncPoly.zero(nvars, D)
    for lab, c in x.coeffs.items():
        if sum(lab) <= D:
            out = out + makers[x.basis](lab, nvars, D).scale(c)
    return out


# --- the named families in the Schur basis ----------------------------------

_FAMILY = {"G": ("svt", True), "Kt": ("svt", False), "g": ("rpp", False), "gt": ("rpp", False),
           "J": ("wsvt", False), "j": ("vst", False)}
_FINITE = {"g", "gt", "j"}


def family_poly(tag: str, shape, nvars: int, D: int) -> TruncPoly:
    """Window polynomial of G, K̃, g, g̃, J or j on a (skew) shape."""
    tag = normalize_tag(tag)
    if not isinstance(shape, SkewShape):
        shape = parse_skew(shape) if isinstance(shape, str) else SkewShape(Partition(shape))
    kind, signed = _FAMILY[tag]
    f = generating_function(kind, shape, nvars, D, signed=signed)
    if tag == "gt":
        f = f.sign_twist(shape.size)
    return f


def family_in_schur(tag: str, shape, D: int | None = None) -> BasisElement:
    """Schur expansion of a named family; exact for g, g̃, j, truncated at D otherwise."""
    tag = normalize_tag(tag)
    if not isinstance(shape, SkewShape):
        shape = parse_skew(shape) if isinstance(shape, str) else SkewShape(Partition(shape))
    key = (tag, shape.outer, shape.inner)
    if tag in _FINITE:
        D = shape.size  # all weights have degree <= |shape|
        return BasisElement("s", _schur_cached(key, D), None)
    if D is None:
        raise TruncationError(f"{tag} is an infinite sum; a degree cap is required")
    return BasisElement("s", _schur_cached(key, D), D)


@lru_cache(maxsize=None)
def _schur_cached(key, D):
    tag, outer, inner = key
    f = family_poly(tag, SkewShape(outer, inner), max(D, 1), D)
    return expand_sym(f, "s").coeffs


def omega(x: BasisElement) -> BasisElement:
    if x.basis != "s":
        raise SeriesError("omega acts on Schur-basis input")
    return BasisElement("s", {tuple(Partition(k).conjugate()): v for k, v in x.coeffs.items()}, x.cap)


def hall_pair(a: BasisElement, b: BasisElement) -> int:
    if a.basis != "s" or b.basis != "s":
        raise SeriesError("pairing needs Schur-basis operands")
    if a.cap is not None and b.cap is not None:
        raise InsufficientTruncation("both operands are truncated")
    finite, other = (a, b) if a.cap is None else (b, a)
    if other.cap is not None:
        top = max((sum(k) for k in finite.coeffs), default=0)
        if top > other.cap:
            raise InsufficientTruncation(f"pairing needs degree {top} but cap is {other.cap}")
    return sum(c * other.coeffs.get(k, 0) for k, c in finite.coeffs.items())


def schur_to_family(x: BasisElement, tag: str) -> BasisElement:
    """Rewrite a Schur expansion in the G or K̃ basis by peeling lowest-degree terms."""
    tag = normalize_tag(tag)
    if tag not in ("G", "Kt"):
        raise SeriesError("peeling is defined for G and Kt")
    if x.basis != "s" or x.cap is None:
        raise SeriesError("expects a truncated Schur-basis element")
    D = x.cap
    rest = dict(x.coeffs)
    out = {}
    for n in range(D + 1):
        for lam in partitions_of(n):
            lam = tuple(lam)
            c = rest.get(lam, 0)
            if not c:
                continue
            out[lam] = c
            for mu, k in family_in_schur(tag, lam, D).coeffs.items():
                rest[mu] = rest.get(mu, 0) - c * k
    return BasisElement(tag, out, D)


def qsym_sign_twist(x: BasisElement, base_degree: int) -> BasisElement:
    return BasisElement(x.basis, {k: (-v if (_label_size(k) - base_degree) % 2 else v)
                                  for k, v in x.coeffs.items()}, x.cap)
