import random
from collections import Counter
from itertools import product

from hypothesis import given, strategies as st
import pytest

from multihopf import words as W
from multihopf.words import MPermBig, MPermSmall, WordElement, parse_big


def _collapse(seq):
    out = []
    for x in seq:
        if not out or out[-1] != x:
            out.append(x)
    return out


def brute_multishuffle(u, v, cap):
    """Filter every token word: no equal neighbours, each side restricts to a multiword."""
    left = [("u", i) for i in range(len(u))]
    right = [("v", i) for i in range(len(v))]
    tokens = left + right
    out = Counter()
    for n in range(cap + 1):
        for w in product(tokens, repeat=n):
            if any(w[i] == w[i + 1] for i in range(n - 1)):
                continue
            if _collapse([t for t in w if t[0] == "u"]) != left:
                continue
            if _collapse([t for t in w if t[0] == "v"]) != right:
                continue
            out[tuple(u[i] if s == "u" else v[i] for s, i in w)] += 1
    return dict(out)


short_words = st.lists(st.sampled_from("abc"), max_size=3).map(tuple)


def test_multishuffle_golden():
    got = W.multishuffle(tuple("ab"), ("a",), 4)
    assert got.terms == {tuple("aba"): 1, tuple("aab"): 2, tuple("aaab"): 2, tuple("aaba"): 2,
                         tuple("abab"): 1}


def test_multishuffle_unit():
    assert W.multishuffle((), (1, 2, 1), 5).terms == {(1, 2, 1): 1}
    assert W.multishuffle((3,), (), 5).terms == {(3,): 1}


def test_multishuffle_one_two():
    got = W.multishuffle((1,), (2,), 4)
    expected = {(1, 2): 1, (2, 1): 1, (1, 2, 1): 1, (2, 1, 2): 1, (1, 2, 1, 2): 1, (2, 1, 2, 1): 1}
    assert got.terms == expected == brute_multishuffle((1,), (2,), 4)


@given(short_words, short_words, st.integers(3, 5))
def test_multishuffle_matches_filter_and_recursion(u, v, cap):
    if cap < max(len(u), len(v)):
        return
    fast = W.multishuffle(u, v, cap).terms
    assert fast == brute_multishuffle(u, v, cap)
    assert W.multishuffle_recursive(u, v, cap).terms == fast


@given(short_words, short_words)
def test_multishuffle_commutative(u, v):
    assert W.multishuffle(u, v, 6).terms == W.multishuffle(v, u, 6).terms


def _shuffle_elem(x: WordElement, w, cap):
    acc = Counter()
    for t, c in x.terms.items():
        for s, d in W.multishuffle(t, w, cap).terms.items():
            acc[s] += c * d
    return {k: v for k, v in acc.items() if v}


@given(short_words, short_words, short_words)
def test_multishuffle_associative(u, v, w):
    cap = 7
    left = _shuffle_elem(W.multishuffle(u, v, cap), w, cap)
    right = Counter()
    for t, c in W.multishuffle(v, w, cap).terms.items():
        for s, d in W.multishuffle(u, t, cap).terms.items():
            right[s] += c * d
    assert left == {k: x for k, x in right.items() if x}


def test_cuut_examples():
    got = W.cuut(tuple("cut"))
    expected = [((), "cut"), ("c", "cut"), ("c", "ut"), ("cu", "ut"), ("cu", "t"), ("cut", "t"), ("cut", ())]
    assert got.terms == {(tuple(a), tuple(b)): 1 for a, b in expected}
    assert W.cuut(()).terms == {((), ()): 1}
    ab = [((), "ab"), ("a", "ab"), ("a", "b"), ("ab", "b"), ("ab", ())]
    assert W.cuut(tuple("ab")).terms == {(tuple(a), tuple(b)): 1 for a, b in ab}


@given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
def test_cuut_term_count(w):
    assert len(W.cuut(tuple(w))) == 2 * len(w) + 1


def test_standardize_word():
    assert W.standardize_word((3, 7, 3)) == (1, 2, 1)
    assert W.standardize_word((1, 2, 1)) == (1, 2, 1)
    with pytest.raises(W.StandardizationError):
        W.standardize_word((3, 3))


@given(st.lists(st.integers(1, 20), max_size=8))
def test_standardize_preserves_pattern(w):
    if any(w[i] == w[i + 1] for i in range(len(w) - 1)):
        with pytest.raises(W.StandardizationError):
            W.standardize_word(w)
        return
    s = W.standardize_word(w)
    for i in range(len(w)):
        for j in range(len(w)):
            assert (w[i] < w[j]) == (s[i] < s[j])
    assert W.standardize_word(s) == s


def test_mperm_small_validation():
    with pytest.raises(W.WordError):
        MPermSmall((1, 1))
    with pytest.raises(W.WordError):
        MPermSmall((1, 3))


def test_mmr_product_examples():
    assert W.mmr_product((), (1, 2, 1), 5).terms == {(1, 2, 1): 1}
    assert W.mmr_product((1,), (1,), 3).terms == {(1, 2): 1, (2, 1): 1, (1, 2, 1): 1, (2, 1, 2): 1}
    # every length-3 multishuffle of 12 with 3
    got = W.mmr_product((1, 2), (1,), 3).terms
    assert got == {(1, 2, 3): 1, (1, 3, 2): 1, (3, 1, 2): 1}
    assert got == {k: c for k, c in brute_multishuffle((1, 2), (3,), 3).items()}


def test_mmr_product_terms_are_mperms():
    for w in W.small_mperms_upto(2):
        for u in W.small_mperms_upto(2):
            for t in W.mmr_product(w, u, 5).terms:
                assert MPermSmall(t).n == w.n + u.n


def test_mmr_coproduct_examples():
    one = W.mmr_coproduct((1,)).terms
    assert one == {((), (1,)): 1, ((1,), (1,)): 1, ((1,), ()): 1}
    assert W.mmr_coproduct(()).terms == {((), ()): 1}
    got = W.mmr_coproduct((1, 2, 1)).terms
    expected = [((), (1, 2, 1)), ((1,), (1, 2, 1)), ((1,), (2, 1)), ((1, 2), (2, 1)), ((1, 2), (1,)),
                ((1, 2, 1), (1,)), ((1, 2, 1), ())]
    std = {(W.standardize_word(a), W.standardize_word(b)): 1 for a, b in expected}
    assert got == std
    assert len(got) == 7


def test_standardize_setcomp_examples():
    w = W.parse_setcomp("[(1,4,5),7,(2,8,9),(6,10),3]")
    assert W.standardize_setcomp(w) == parse_big("[(1,4),6,(2,7),(5,8),3]")
    assert W.standardize_setcomp(W.parse_setcomp("[(1,2,3)]")) == parse_big("[1]")


def _random_setcomp(rng, n):
    elems = list(range(1, n + 1))
    rng.shuffle(elems)
    k = rng.randint(1, n)
    cuts = sorted(rng.sample(range(1, n), k - 1)) if n > 1 else []
    pieces, prev = [], 0
    for c in cuts + [n]:
        pieces.append(tuple(sorted(elems[prev:c])))
        prev = c
    return W.SetComposition(pieces)


@given(st.integers(1, 7), st.integers(0, 10 ** 6))
def test_standardize_setcomp_confluent_and_idempotent(n, seed):
    rng = random.Random(seed)
    w = _random_setcomp(rng, n)
    target = W.standardize_setcomp(w)
    for _ in range(3):
        assert W.standardize_setcomp_by_rules(w, rng) == target
    assert W.standardize_setcomp(target) == target


def test_inversion_examples():
    w = parse_big("[(1,3),(5,7,9),10,(4,6),2,8]")
    u = MPermSmall((1, 5, 1, 4, 2, 4, 2, 6, 2, 3))
    assert W.invert(w) == u
    assert W.invert_small(u) == w
    assert W.invert(parse_big("[1]")) == (1,)
    assert W.invert_small((1, 2)) == parse_big("[1,2]")


def test_inversion_bijective_small_sizes():
    for n in range(5):
        for w in W.big_mperms(n):
            u = W.invert(w)
            assert W.invert_small(u) == w
            # lengths and alphabet sizes swap
            assert len(u) == w.n and u.n == len(w)


def test_standardize_commutes_with_inversion():
    rng = random.Random(3)
    for _ in range(60):
        w = _random_setcomp(rng, rng.randint(1, 7))
        letters = W.invert(W.standardize_setcomp(w))
        # the inverse of a set composition as a raw word, then standardized
        raw = [0] * len(w.ground())
        for b, block in enumerate(w, 1):
            for x in block:
                raw[x - 1] = b
        collapsed = _collapse(raw)
        assert W.standardize_word(collapsed) == letters


def test_big_product_examples():
    one = parse_big("[1]")
    got = W.mmr_big_product(one, one).terms
    assert got == {parse_big("[1,2]"): 1, parse_big("[2,1]"): 1, parse_big("[1]"): 1}
    assert W.mmr_big_product(MPermBig(), parse_big("[2,1]")).terms == {parse_big("[2,1]"): 1}
    types = sorted(tuple(W.mperm_type(t)) for t in got)
    assert types == [(1,), (1, 1), (2,)]


def test_big_product_two_definitions_agree():
    for n in range(4):
        for m in range(4):
            for w in W.big_mperms(n):
                for u in W.big_mperms(m):
                    assert W.mmr_big_product(w, u).terms == W.mmr_big_product_by_restriction(w, u).terms


def test_big_coproduct_examples():
    got = W.mmr_big_coproduct(parse_big("[1,2]")).terms
    assert got == {(MPermBig(), parse_big("[1,2]")): 1, (parse_big("[1]"), parse_big("[1]")): 1,
                   (parse_big("[1,2]"), MPermBig()): 1}
    assert W.mmr_big_coproduct(MPermBig()).terms == {(MPermBig(), MPermBig()): 1}
    got = W.mmr_big_coproduct(parse_big("[(1,3),2]")).terms
    assert got == {(MPermBig(), parse_big("[(1,3),2]")): 1, (parse_big("[1]"), parse_big("[1]")): 1,
                   (parse_big("[(1,3),2]"), MPermBig()): 1}


def test_big_coproduct_term_count():
    for n in range(1, 5):
        for w in W.big_mperms(n):
            total = sum(W.mmr_big_coproduct(w).terms.values())
            assert total == len(w) + 1


def test_antipode_examples():
    assert W.antipode_big(MPermBig()).terms == {MPermBig(): 1}
    assert W.antipode_big(parse_big("[1]")).terms == {parse_big("[1]"): -1}
    assert W.antipode_axiom_big(parse_big("[1,2]")).terms == {}


def test_antipode_axiom_exhaustive():
    for n in range(1, 4):
        for w in W.big_mperms(n):
            assert W.antipode_axiom_big(w).terms == {}


def test_factor_examples():
    assert W.factor_irreducible(parse_big("[1,2]")) == [parse_big("[1]"), parse_big("[1]")]
    assert W.factor_irreducible(parse_big("[2,1]")) == [parse_big("[2,1]")]
    assert W.factor_irreducible(MPermBig()) == []
    assert W.factor_irreducible(MPermSmall((1, 2, 1, 3, 4, 3))) == [(1, 2, 1), (1, 2, 1)]


def _all_factorizations(w):
    """Every split into irreducible pieces, found by trying every cut."""
    if len(w) == 0:
        return [[]]
    out = []
    for k in range(1, len(w) + 1):
        head, tail = w[:k], w[k:]
        hs = set().union(*head) if isinstance(w, MPermBig) else set(head)
        ts = set().union(*tail) if (isinstance(w, MPermBig) and tail) else set(tail)
        if ts and min(ts) <= max(hs):
            continue
        head_std = W.standardize_setcomp(head) if isinstance(w, MPermBig) else W.standardize_word(head)
        if not W.is_irreducible(head_std):
            continue
        rest = W.standardize_setcomp(tail) if isinstance(w, MPermBig) else W.standardize_word(tail)
        for f in _all_factorizations(rest):
            out.append([head_std, *f])
    return out


def test_factorization_unique_and_round_trips():
    for n in range(5):
        for w in W.big_mperms(n):
            pieces = W.factor_irreducible(w)
            assert all(W.is_irreducible(p) for p in pieces)
            assert W.concat_shifted(pieces) == w
            assert _all_factorizations(w) == [pieces]
    for w in W.small_mperms_upto(5):
        pieces = W.factor_irreducible(w)
        assert W.concat_shifted(pieces) == w
        assert _all_factorizations(w) == [pieces]


def _leq_or_none(w, v, bound=None):
    try:
        return W.weak_order_leq(w, v, bound)
    except W.UndecidedAtBound:
        return None


def test_weak_order_examples():
    a, b = parse_big("[1,2]"), parse_big("[2,1]")
    assert W.weak_order_leq(a, b)
    assert not _leq_or_none(b, a, 6)
    assert W.weak_order_leq(MPermBig(), a) is False
    for n in range(4):
        for w in W.big_mperms(n):
            assert W.weak_order_leq(w, w)


def test_weak_order_undecided_surfaces():
    a, b = parse_big("[1,2]"), parse_big("[2,1]")
    with pytest.raises(W.UndecidedAtBound):
        W.weak_order_leq(b, a, 2)


def test_weak_order_antisymmetric_n3():
    ms = [w for n in range(4) for w in W.big_mperms(n)]
    for w in ms:
        for v in ms:
            if w != v and _leq_or_none(w, v, 6):
                assert not _leq_or_none(v, w, 6)


def test_text_forms_round_trip():
    w = parse_big("[(1,3),2]")
    assert W.format_big(w) == "[(1,3),2]"
    assert W.parse_small("121") == (1, 2, 1)
    x = W.mmr_product((1,), (1,), 3)
    data = W.element_to_json(x)
    assert data == {"cap": 3, "terms": {"12": 1, "21": 1, "121": 1, "212": 1}}
    assert W.element_from_json(data) == x
    y = W.mmr_big_coproduct(w)
    assert W.element_from_json(W.element_to_json(y), "big") == y
