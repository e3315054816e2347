"""Operators on formal sums of partitions.

Two engines:

* ``v_i`` adds the addable cell on diagonal i, or keeps the partition when
  it has a removable cell on diagonal i that lies outside a fixed ``nu``.
* ``u_i`` adds one or more cells to column i.

Ordered products of ``1 + x v_i``, ``1/(1 - x u_i)`` and friends over many
variables reproduce the tableau generating functions, so they serve as an
independent check on the enumerators in :mod:`multihopf.tableaux`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .poly import TruncPoly, TruncationError
from .series import BasisElement, expand_sym, family_in_schur, family_poly, schur_to_family
from .shapes import Partition, ShapeError, inner_corner_cells, outer_corner_cells


@dataclass(frozen=True)
class PartitionVector:
    """Integer combination of partitions, all of size <= bound."""
    terms: dict = field(default_factory=dict)
    bound: int = 10

    def __post_init__(self):
        clean = Counter()
        for lam, c in self.terms.items():
            lam = Partition(lam)
            if c and lam.size <= self.bound:
                clean[lam] += c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def of(cls, lam, bound: int) -> "PartitionVector":
        return cls({Partition(lam): 1}, bound)

    def __add__(self, other):
        out = Counter(self.terms)
        out.update(other.terms)
        return PartitionVector(dict(out), min(self.bound, other.bound))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return PartitionVector({k: c * v for k, v in self.terms.items()}, self.bound)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PartitionVector):
            return NotImplemented
        return self.terms == other.terms


def _content(cell) -> int:
    i, j = cell
    return j - i


def v_step(i: int, lam: Partition, nu: Partition) -> Partition | None:
    """v_i on a single partition; None stands for zero."""
    for cell in outer_corner_cells(lam):
        if _content(cell) == i:
            return Partition(_add_cell(lam, cell))
    for cell in inner_corner_cells(lam):
        if _content(cell) == i and cell not in set(nu.cells()):
            return lam
    return None


def _add_cell(lam, cell):
    r, _ = cell
    parts = list(lam) + [0]
    parts[r - 1] += 1
    return tuple(p for p in parts if p)


def apply_v(i: int, x: PartitionVector, nu=()) -> PartitionVector:
    nu = Partition(nu)
    out = Counter()
    for lam, c in x.terms.items():
        if not lam.contains(nu):
            raise ShapeError(f"{tuple(lam)} does not contain {tuple(nu)}")
        mu = v_step(i, lam, nu)
        if mu is not None:
            out[mu] += c
    return PartitionVector(dict(out), x.bound)


def u_steps(i: int, lam: Partition, bound: int, limit=None):
    """Every partition obtained by adding at least one cell to column i, of size <= bound."""
    cols = list(Partition(lam).conjugate())
    cur = cols[i - 1] if i <= len(cols) else 0
    if i > len(cols) + 1:
        return []
    cap = cols[i - 2] if i >= 2 else None
    room = bound - Partition(lam).size
    top = cur + room if cap is None else min(cap, cur + room)
    if limit is not None:
        top = min(top, limit)
    out = []
    for new in range(cur + 1, top + 1):
        c2 = cols[:]
        if i <= len(c2):
            c2[i - 1] = new
        else:
            c2.append(new)
        out.append(Partition(c2).conjugate())
    return out


def apply_u(i: int, x: PartitionVector) -> PartitionVector:
    out = Counter()
    for lam, c in x.terms.items():
        for mu in u_steps(i, lam, x.bound):
            out[mu] += c
    return PartitionVector(dict(out), x.bound)


# --- generating functions -------------------------------------------------------

SERIES = {
    "Kt": ("v", "A", False),
    "G": ("v", "A", True),
    "J": ("v", "B", False),
    "g": ("u", "A", False),
    "j": ("u", "B", False),
}


def gf_via_operators(engine: str, form: str, nu, lam, nvars: int, D: int,
                     signed: bool = False) -> TruncPoly:
    """<... F(x_2) F(x_1) nu, lam> as a truncated polynomial, F the A- or B-ordered product."""
    nu, lam = Partition(nu), Partition(lam)
    if not lam.contains(nu):
        return TruncPoly.zero(nvars, D)
    if nvars < 1:
        raise TruncationError("need at least one variable")
    if engine == "v":
        # diagonals that meet lam; A applies them low to high, B high to low
        idx = list(range(-(len(lam) - 1), lam[0])) if lam else []
        if form == "B":
            idx.reverse()
    elif engine == "u":
        idx = list(range(1, (lam[0] if lam else 0) + 1))
        if form == "B":
            idx.reverse()
    else:
        raise ValueError(f"unknown engine {engine!r}")
    state = {(nu, (0,) * nvars): 1}
    for var in range(nvars):
        for i in idx:
            state = _factor(engine, form, i, var, state, nu, lam, D, signed)
    acc = Counter()
    for (mu, exps), c in state.items():
        if mu == lam:
            acc[exps] += c
    return TruncPoly(nvars, D, acc)


def _bump(exps, var, k):
    e = list(exps)
    e[var] += k
    return tuple(e)


def _factor(engine, form, i, var, state, nu, target, D, signed):
    out = Counter(state)  # the "1" part of every factor
    for (mu, exps), c in state.items():
        room = D - sum(exps)
        if room < 1:
            continue
        if engine == "v":
            nxt = v_step(i, mu, nu)
            if nxt is None or not target.contains(nxt):
                continue
            sgn = -1 if signed and nxt == mu else 1
            powers = range(1, room + 1) if form == "B" else (1,)
            for k in powers:
                out[(nxt, _bump(exps, var, k))] += sgn * c
        else:
            frontier = [mu]
            steps = room if form == "B" else 1
            for k in range(1, steps + 1):
                nxt_front = []
                for p in frontier:
                    for q in u_steps(i, p, target.size):
                        if target.contains(q):
                            nxt_front.append(q)
                for q in nxt_front:
                    out[(q, _bump(exps, var, k))] += c
                frontier = nxt_front
                if not frontier:
                    break
    return {k: v for k, v in out.items() if v}


def series_via_operators(tag: str, lam, nvars: int, D: int, nu=()) -> TruncPoly:
    engine, form, signed = SERIES[tag]
    return gf_via_operators(engine, form, nu, lam, nvars, D, signed)


# --- relations ------------------------------------------------------------------

def e_u(k: int, x: PartitionVector, columns: int) -> PartitionVector:
    """e_k(u) = sum over a_1 > ... > a_k of u_{a_1} ... u_{a_k} (u_{a_k} acts first)."""
    from itertools import combinations
    out = PartitionVector({}, x.bound)
    for idx in combinations(range(1, columns + 1), k):
        y = x
        for a in idx:  # ascending: smallest index acts first
            y = apply_u(a, y)
            if y.is_zero():
                break
        out = out + y
    return out


def h_u(k: int, x: PartitionVector, columns: int) -> PartitionVector:
    """h_k(u) = sum over b_1 <= ... <= b_k of u_{b_1} ... u_{b_k} (u_{b_k} acts first)."""
    from itertools import combinations_with_replacement
    out = PartitionVector({}, x.bound)
    for idx in combinations_with_replacement(range(1, columns + 1), k):
        y = x
        for b in reversed(idx):  # largest index acts first
            y = apply_u(b, y)
            if y.is_zero():
                break
        out = out + y
    return out


def schur_u(lam, x: PartitionVector, columns: int) -> PartitionVector:
    """s_lam(u) applied to x, by the dual Jacobi-Trudi determinant in the commuting e_k(u)."""
    from itertools import permutations
    conj = list(Partition(lam).conjugate())
    n = len(conj)
    out = PartitionVector({}, x.bound)
    for perm in permutations(range(n)):
        ks = [conj[i] - i + perm[i] for i in range(n)]
        if any(k < 0 for k in ks):
            continue
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        y = x
        for k in ks:
            if k:
                y = e_u(k, y, columns)
        out = out + y.scale(sign)
    return out


def alternating_identity(x: PartitionVector, columns: int, top: int) -> bool:
    """sum_k (-1)^k h_k(u) e_{n-k}(u) x = 0 for 1 <= n <= top, i.e. A(-t) B(t) = 1."""
    for n in range(1, top + 1):
        acc = PartitionVector({}, x.bound)
        for k in range(n + 1):
            acc = acc + h_u(k, e_u(n - k, x, columns), columns).scale((-1) ** k)
        if not acc.is_zero():
            return False
    return True


def cauchy_check(form: str, nu, mu, nvars: int, D: int) -> bool:
    """<... F(x_2) F(x_1) nu, mu> against sum over lam of <s_lam(u) nu, mu> times s_lam'(x) (A) or s_lam(x) (B)."""
    from .series import schur as schur_poly
    from .shapes import partitions_of
    nu, mu = Partition(nu), Partition(mu)
    lhs = gf_via_operators("u", form, nu, mu, nvars, D)
    columns = (mu[0] if mu else 0)
    start = PartitionVector.of(nu, mu.size)
    rhs = TruncPoly.zero(nvars, D)
    for d in range(min(D, mu.size - nu.size) + 1):
        for lam in partitions_of(d):
            c = schur_u(lam, start, columns).terms.get(mu, 0)
            if c:
                shape = Partition(lam).conjugate() if form == "A" else lam
                rhs = rhs + schur_poly(shape, nvars, D).scale(c)
    return lhs == rhs


def ecom_check(engine: str, k1: int, k2: int, vectors, columns: int | None = None) -> bool:
    """Commutation of e_{k1}, e_{k2} and the generating relations on test vectors."""
    for x in vectors:
        if engine == "u":
            cols = columns or x.bound + 1
            if e_u(k1, e_u(k2, x, cols), cols) != e_u(k2, e_u(k1, x, cols), cols):
                return False
            if not u_relations_hold(x, cols):
                return False
        elif engine == "v":
            nu = Partition(())
            if not v_relations_hold(x, nu, columns or x.bound):
                return False
        else:
            raise ValueError(engine)
    return True


def _word_u(word, x):
    for a in reversed(word):
        x = apply_u(a, x)
    return x


def u_relations_hold(x: PartitionVector, columns: int) -> bool:
    rng = range(1, columns + 1)
    for i in rng:
        for j in rng:
            if not i < j:
                continue
            lhs = _word_u((j, i, i), x) + _word_u((j, i, j), x)
            rhs = _word_u((i, j, i), x) + _word_u((j, j, i), x)
            if lhs != rhs:
                return False
            for k in rng:
                if not j < k:
                    continue
                if _word_u((i, k, j), x) != _word_u((k, i, j), x):
                    return False
                if _word_u((j, i, k), x) != _word_u((j, k, i), x):
                    return False
    return True


def _word_v(word, x, nu):
    for a in reversed(word):
        x = apply_v(a, x, nu)
    return x


def v_relations_hold(x: PartitionVector, nu, span: int) -> bool:
    rng = range(-span, span + 1)
    for i in rng:
        if _word_v((i, i), x, nu) != _word_v((i,), x, nu):
            return False
        if not _word_v((i, i + 1, i), x, nu).is_zero() or not _word_v((i + 1, i, i + 1), x, nu).is_zero():
            return False
        for j in rng:
            if abs(i - j) >= 2 and _word_v((i, j), x, nu) != _word_v((j, i), x, nu):
                return False
    return True


# --- K-theory of Grassmannians ------------------------------------------------------

def grassmann_constants(lam, mu, k: int, n: int, D: int | None = None) -> dict:
    """Coefficients of G_nu in G_lam G_mu for nu inside the k x (n-k) rectangle."""
    lam, mu = Partition(lam), Partition(mu)
    box = Partition((n - k,) * k) if k and n - k else Partition(())
    if not box.contains(lam) or not box.contains(mu):
        raise ShapeError("factors must fit inside the rectangle")
    need = box.size
    D = need if D is None else D
    if D < need:
        raise TruncationError(f"degree cap must be at least {need}")
    nv = max(D, 1)
    f = family_poly("G", lam, nv, D) * family_poly("G", mu, nv, D)
    in_G = schur_to_family(expand_sym(f, "s"), "G")
    return {nu: c for nu, c in in_G.coeffs.items() if box.contains(Partition(nu))}
