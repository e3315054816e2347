import random

from hypothesis import given, strategies as st
import pytest

from multihopf import operators as O
from multihopf.operators import PartitionVector
from multihopf.poly import TruncationError
from multihopf.series import family_in_schur, family_poly, monomial_qsym, schur
from multihopf.poly import TruncPoly
from multihopf.shapes import Partition, ShapeError, SkewShape, partitions_of, partitions_upto

small_parts = st.integers(0, 6).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def vec(*parts, bound=10):
    return PartitionVector({Partition(p): 1 for p in parts}, bound)


def test_v_examples():
    assert O.apply_v(0, vec(())) == vec((1,))
    assert O.apply_v(0, vec((1,))) == vec((1,))
    assert O.apply_v(0, vec((1,)), nu=(1,)).is_zero()
    for lam in partitions_upto(5):
        x = vec(lam)
        assert O.apply_v(1, O.apply_v(0, O.apply_v(1, x))).is_zero()


def test_v_requires_containment():
    with pytest.raises(ShapeError):
        O.apply_v(0, vec((1,)), nu=(2,))


def test_u_examples():
    lam = (4, 3, 3, 1)
    x = vec(lam, bound=13)
    assert O.apply_u(1, x) == vec((4, 3, 3, 1, 1), (4, 3, 3, 1, 1, 1), bound=13)
    assert O.apply_u(2, x) == vec((4, 3, 3, 2), bound=13)
    assert O.apply_u(3, x).is_zero()
    assert O.apply_u(4, x) == vec((4, 4, 3, 1), (4, 4, 4, 1), bound=13)
    assert O.apply_u(5, x) == vec((5, 3, 3, 1), bound=13)
    assert O.apply_u(6, x).is_zero()
    assert O.apply_u(1, vec((), bound=2)) == vec((1,), (1, 1), bound=2)


def test_u_size_bound_is_a_size_bound():
    # the bound counts cells, so a bound below |lam| admits nothing
    assert O.apply_u(1, PartitionVector({Partition((4, 3, 3, 1)): 1}, 7)).is_zero()


def _column_growth_by_cells(i, lam, bound):
    """Every partition containing lam that differs from it only in column i."""
    out = set()
    for n in range(sum(lam) + 1, bound + 1):
        for mu in partitions_of(n):
            mu = Partition(mu)
            if not mu.contains(Partition(lam)):
                continue
            extra = set(mu.cells()) - set(Partition(lam).cells())
            if extra and all(j == i for _, j in extra):
                out.add(mu)
    return out


@given(small_parts, st.integers(1, 5))
def test_u_matches_cell_description(lam, i):
    bound = sum(lam) + 3
    got = set(O.apply_u(i, vec(lam, bound=bound)).terms)
    assert got == _column_growth_by_cells(i, lam, bound)


@given(small_parts)
def test_v_relations_on_random_partitions(lam):
    x = vec(lam, bound=sum(lam) + 4)
    assert O.v_relations_hold(x, Partition(()), 4)


def test_v_relations_with_nu():
    nu = Partition((2, 1))
    for lam in partitions_upto(5):
        if Partition(lam).contains(nu):
            assert O.v_relations_hold(vec(lam, bound=8), nu, 3)


@given(small_parts)
def test_u_relations_on_random_partitions(lam):
    x = vec(lam, bound=sum(lam) + 3)
    assert O.u_relations_hold(x, 5)


def test_ecom():
    vectors = [vec(lam, bound=7) for lam in partitions_upto(3)]
    assert O.ecom_check("u", 1, 2, vectors, 5)
    assert O.ecom_check("u", 2, 3, vectors[:4], 5)
    assert O.ecom_check("v", 0, 0, vectors, 3)


def test_single_box_v_engine():
    D = 4
    expected = TruncPoly.zero(D, D)
    for k in range(1, D + 1):
        expected = expected + monomial_qsym((1,) * k, D, D)
    assert O.series_via_operators("Kt", (1,), D, D) == expected


def test_u_engine_g21():
    from multihopf.series import expand_sym
    f = O.series_via_operators("g", (2, 1), 3, 3)
    assert expand_sym(f, "m").coeffs == {(2, 1): 1, (1, 1, 1): 2, (2,): 1, (1, 1): 1}


def test_j_one_one_is_h2_plus_h1():
    D = 3
    f = O.series_via_operators("j", (1, 1), D, D)
    h = lambda n: TruncPoly(D, D, {e: 1 for e in __import__("itertools").product(range(n + 1), repeat=D)
                                    if sum(e) == n})
    assert f == h(1) + h(2)
    assert f == family_poly("j", SkewShape((1, 1)), D, D)


@pytest.mark.parametrize("tag", sorted(O.SERIES))
@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_operator_route_matches_tableaux(tag, lam):
    D = sum(lam) + 1
    assert O.series_via_operators(tag, lam, D, D) == family_poly(tag, SkewShape(lam), D, D)


@pytest.mark.parametrize("tag", sorted(O.SERIES))
def test_skew_operator_route(tag):
    D = 4
    lam, nu = (3, 2), (1,)
    assert O.series_via_operators(tag, lam, D, D, nu=nu) == family_poly(tag, SkewShape(lam, nu), D, D)


def test_needs_a_variable():
    with pytest.raises(TruncationError):
        O.gf_via_operators("u", "A", (), (1,), 0, 2)


def test_cauchy_expansions():
    for nu in partitions_upto(2):
        for mu in partitions_upto(5):
            if Partition(mu).contains(Partition(nu)):
                assert O.cauchy_check("A", nu, mu, 4, 4)
                assert O.cauchy_check("B", nu, mu, 4, 4)


@given(st.lists(small_parts, min_size=1, max_size=3))
def test_alternating_identity(parts):
    x = PartitionVector({Partition(p): 1 for p in parts}, 8)
    assert O.alternating_identity(x, 9, 4)


def test_grassmann_examples():
    assert O.grassmann_constants((1,), (1,), 1, 2) == {}
    assert O.grassmann_constants((1,), (1,), 1, 3) == {(2,): 1}
    assert O.grassmann_constants((1,), (1,), 2, 4) == {(2,): 1, (1, 1): 1, (2, 1): -1}


def test_grassmann_unit_and_symmetry():
    assert O.grassmann_constants((), (2, 1), 2, 4) == {(2, 1): 1}
    assert O.grassmann_constants((2,), (1,), 2, 4) == O.grassmann_constants((1,), (2,), 2, 4)


def test_grassmann_errors():
    with pytest.raises(ShapeError):
        O.grassmann_constants((3,), (1,), 2, 4)
    with pytest.raises(TruncationError):
        O.grassmann_constants((1,), (1,), 2, 4, D=2)
