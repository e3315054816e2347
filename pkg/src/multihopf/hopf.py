"""Structure constants of the composition-indexed algebras and of the ribbon g functions.

L̃ (multi-fundamental) products and coproducts come from multishuffles and
cuts of a representative word; R̃ products follow the three-term gluing rule;
pumping extracts the homogeneous L-components of L̃.
"""
from __future__ import annotations

import random
from collections import Counter, defaultdict
from itertools import combinations
from math import comb

from .series import BasisElement, SeriesError, _refinements, to_poly
from .shapes import (Composition, DescentSet, SkewShape, comp_to_descents, composition_of_word,
                     compositions_of, descents_to_comp, ribbon, ribbon_above, ribbon_glue,
                     ribbon_overlap, ribbon_right)
from .words import MPermBig, MPermSmall, big_mperms, cuut, mperm_type, multishuffle

DEFAULT_EXTRA = 3  # default cap is |label| + 3


def canonical_word(alpha) -> tuple[int, ...]:
    """Permutation with descent composition alpha: increasing runs, earlier runs take larger values."""
    alpha = tuple(alpha)
    n = sum(alpha)
    out, top = [], n
    for a in alpha:
        out.extend(range(top - a + 1, top + 1))
        top -= a
    return tuple(out)


def random_word(alpha, rng: random.Random) -> tuple[int, ...]:
    """A uniformly random permutation whose descent composition is alpha."""
    alpha = tuple(alpha)
    n = sum(alpha)
    while True:
        w = list(range(1, n + 1))
        rng.shuffle(w)
        if tuple(composition_of_word(w)) == alpha:
            return tuple(w)


def ltilde_product(alpha, beta, cap: int | None = None, reps=None) -> BasisElement:
    """L̃_alpha L̃_beta via multishuffles of representative words."""
    alpha, beta = tuple(alpha), tuple(beta)
    if cap is None:
        cap = sum(alpha) + sum(beta) + DEFAULT_EXTRA
    u, v = reps if reps is not None else (canonical_word(alpha), canonical_word(beta))
    n = len(u)
    shifted = tuple(x + n for x in v)
    if cap < max(len(u), len(v)):
        return BasisElement("Lt", {}, cap)
    acc = Counter()
    for word, c in multishuffle(u, shifted, cap).terms.items():
        acc[tuple(composition_of_word(word))] += c
    return BasisElement("Lt", acc, cap)


def ltilde_coproduct(alpha, cap: int | None = None) -> BasisElement:
    alpha = tuple(alpha)
    acc = Counter()
    for (a, b), c in cuut(canonical_word(alpha)).terms.items():
        acc[(tuple(composition_of_word(a)), tuple(composition_of_word(b)))] += c
    return BasisElement("Lt", acc, cap)


def lt_element_product(x: BasisElement, y: BasisElement, cap: int) -> BasisElement:
    out = BasisElement("Lt", {}, cap)
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            if sum(a) + sum(b) <= cap:
                out = out + ltilde_product(a, b, cap).scale(ca * cb)
    return out


def lt_element_coproduct(x: BasisElement) -> BasisElement:
    out = BasisElement("Lt", {}, None)
    for a, c in x.coeffs.items():
        out = out + ltilde_coproduct(a).scale(c)
    return BasisElement("Lt", out.coeffs, x.cap)


def psi(w) -> BasisElement:
    w = MPermSmall(w)
    return BasisElement("Lt", {tuple(composition_of_word(w)): 1}, None)


def psi_element(x, cap=None) -> BasisElement:
    acc = Counter()
    for w, c in x.terms.items():
        acc[tuple(composition_of_word(w))] += c
    return BasisElement("Lt", acc, cap if cap is not None else x.cap)


# --- pumping --------------------------------------------------------------

def extensions(D: DescentSet, i: int) -> Counter:
    """Multiset of E = t(D) together with the complement of t([n-1]), over all i-extensions t."""
    n = D.n
    top = n + i - 1
    out = Counter()
    for image in combinations(range(1, top + 1), n - 1):
        t = dict(zip(range(1, n), image))
        E = {t[d] for d in D} | (set(range(1, top + 1)) - set(image))
        out[frozenset(E)] += 1
    return out


def count_extensions(D: DescentSet, E, i: int) -> int:
    return extensions(D, i)[frozenset(E)]


def pump(f: BasisElement, i: int) -> BasisElement:
    """The degree-raising map f -> f^(i) on homogeneous L or M input."""
    if f.basis not in ("L", "M"):
        raise SeriesError("pump acts on L or M input")
    if i < 0:
        raise SeriesError("pump index must be nonnegative")
    degs = {sum(k) for k in f.coeffs}
    if len(degs) > 1:
        raise SeriesError("pump needs homogeneous input")
    out = Counter()
    for alpha, c in f.coeffs.items():
        n = sum(alpha)
        if n == 0:
            if i == 0:
                out[alpha] += c
            continue
        for E, mult in extensions(comp_to_descents(alpha), i).items():
            out[tuple(descents_to_comp(DescentSet(n + i, tuple(E))))] += c * mult
    return BasisElement(f.basis, out, None)


def ltilde_in_L(alpha, D: int) -> BasisElement:
    alpha = tuple(alpha)
    base = BasisElement("L", {alpha: 1})
    out = BasisElement("L", {}, D)
    for i in range(0, D - sum(alpha) + 1):
        out = out + pump(base, i)
    return out


def lt_to_L(x: BasisElement, D: int) -> BasisElement:
    out = BasisElement("L", {}, D)
    for a, c in x.coeffs.items():
        if sum(a) <= D:
            out = out + ltilde_in_L(a, D).scale(c)
    return out


def mtilde(alpha, D: int | None = None) -> BasisElement:
    """M̃_alpha as an alternating sum of L̃ over refinements of alpha.

    Summing over refinements (descent supersets) is what makes the lowest
    homogeneous component equal to M_alpha.
    """
    alpha = tuple(alpha)
    d = set(comp_to_descents(alpha))
    n = sum(alpha)
    extra = sorted(set(range(1, n)) - d)
    acc = {}
    for r in range(len(extra) + 1):
        for sub in combinations(extra, r):
            beta = tuple(descents_to_comp(DescentSet(n, tuple(d | set(sub)))))
            acc[beta] = (-1) ** r
    return BasisElement("Lt", acc, D)


def mtilde_in_L(alpha, D: int) -> BasisElement:
    return lt_to_L(mtilde(alpha, D), D)


def lt_poly(x: BasisElement, nvars: int, D: int):
    return to_poly(lt_to_L(x, D), nvars, D)


# --- R̃ -------------------------------------------------------------------

def rtilde_product(alpha, beta) -> BasisElement:
    alpha, beta = tuple(alpha), tuple(beta)
    if not alpha or not beta:
        return BasisElement("Rt", {alpha or beta: 1})
    acc = Counter()
    acc[tuple(ribbon_right(alpha, beta))] += 1
    acc[tuple(ribbon_above(alpha, beta))] += 1
    acc[tuple(ribbon_overlap(alpha, beta))] += 1
    return BasisElement("Rt", acc)


def rt_element_product(x: BasisElement, y: BasisElement) -> BasisElement:
    out = BasisElement("Rt", {})
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            out = out + rtilde_product(a, b).scale(ca * cb)
    return out


def rtilde_expand(alpha) -> Counter:
    """R̃_alpha as the sum of the big multi-permutations of type alpha."""
    alpha = tuple(alpha)
    return Counter({w: 1 for w in big_mperms(sum(alpha)) if tuple(mperm_type(w)) == alpha})


def collect_by_type(x) -> BasisElement:
    """Rewrite a combination of big multi-permutations in R̃, requiring constant coefficients per type."""
    terms = x.terms if hasattr(x, "terms") else x
    by_type: dict[tuple, set] = defaultdict(set)
    seen: dict[tuple, int] = Counter()
    for w, c in terms.items():
        t = tuple(mperm_type(w))
        by_type[t].add(c)
        seen[t] += 1
    acc = {}
    for t, vals in by_type.items():
        if len(vals) != 1 or seen[t] != len(rtilde_expand(t)):
            raise SeriesError(f"coefficients are not constant on type {t}")
        acc[t] = vals.pop()
    return BasisElement("Rt", acc)


def rtilde_in_F(alpha) -> dict:
    """R̃_alpha as a noncommutative polynomial in F_k = R̃_(k): {(k1, k2, ...): coeff}."""
    return dict(_rtilde_in_F(tuple(alpha)))


def _rtilde_in_F(alpha: tuple) -> Counter:
    if len(alpha) <= 1:
        return Counter({alpha: 1})
    head, last = alpha[:-1], alpha[-1]
    out = Counter()
    for mono, c in _rtilde_in_F(head).items():
        out[mono + (last,)] += c
    merged = head[:-1] + (head[-1] + last,)
    overlapped = head[:-1] + (head[-1] + last - 1,)
    for sub in (merged, overlapped):
        for mono, c in _rtilde_in_F(sub).items():
            out[mono] -= c
    return Counter({k: v for k, v in out.items() if v})


def rtilde_from_F(expr: dict) -> BasisElement:
    """Multiply out a polynomial in the F_k with the R̃ product."""
    out = BasisElement("Rt", {})
    for mono, c in expr.items():
        acc = BasisElement("Rt", {(): 1})
        for k in mono:
            acc = rt_element_product(acc, BasisElement("Rt", {(k,): 1}))
        out = out + acc.scale(c)
    return out


# --- ribbon g functions -----------------------------------------------------

def g_ribbon_product(rho: SkewShape, tau: SkewShape, tilde: bool = False) -> BasisElement:
    """g_rho g_tau as three glued shapes; signs are all positive for g̃."""
    tag = "gt" if tilde else "g"
    acc = Counter()
    acc[ribbon_glue(rho, tau, "right")] += 1
    acc[ribbon_glue(rho, tau, "above")] += 1
    acc[ribbon_glue(rho, tau, "overlap")] += 1 if tilde else -1
    return BasisElement(tag, acc)


def rtilde_to_gtilde(x: BasisElement) -> BasisElement:
    return BasisElement("gt", {ribbon(a): c for a, c in x.coeffs.items()}, x.cap)


def skew_g_poly(x: BasisElement, nvars: int, D: int):
    """Window polynomial of a combination of skew g or g̃ functions."""
    from .poly import TruncPoly
    from .series import family_poly
    out = TruncPoly.zero(nvars, D)
    for shape, c in x.coeffs.items():
        out = out + family_poly(x.basis, shape, nvars, D).scale(c)
    return out
