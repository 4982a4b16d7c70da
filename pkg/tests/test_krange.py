import itertools
import random
from fractions import Fraction
from itertools import islice

import numpy as np
import pytest
from hypothesis import given, strategies as st

from galrange.fields import GF, QQ
from galrange.krange import (
    KMatrix,
    char2_reduce,
    is_singleton_K,
    k_range_exhaustive,
    k_range_exhaustive_codes,
    k_range_sample,
    sphere_points_Q,
    symmetrize,
)

F2, F3, F4, F5, F7, F8 = GF(2), GF(3), GF(2, 2), GF(5), GF(7), GF(2, 3)


def _values(r):
    return {int(p.value) for p in r.points}


def test_exhaustive_examples():
    assert _values(k_range_exhaustive(KMatrix(F3, [[0, 1], [2, 0]]))) == {0}
    assert _values(k_range_exhaustive(KMatrix(F3, [[0, 0], [0, 1]]))) == {0, 1}
    M = KMatrix(F2, [[1, 1], [0, 1]])
    brute = {(M.form((x, F2.one - x))).value for x in F2.elements()}
    assert _values(k_range_exhaustive(M)) == brute


def test_symmetrize_examples():
    S = symmetrize(KMatrix(QQ, [[0, 1], [0, 0]]))
    assert S.rows == ((0, Fraction(1, 2)), (Fraction(1, 2), 0))
    A = symmetrize(KMatrix(F5, [[2, 1], [4, 3]]))
    assert A.rows == ((F5(2), F5(0)), (F5(0), F5(3)))
    with pytest.raises(ValueError):
        symmetrize(KMatrix(F2, [[0, 1], [0, 0]]))


def test_structural_examples():
    assert is_singleton_K(KMatrix(QQ, [[3, 1], [-1, 3]])) == 3
    assert is_singleton_K(KMatrix(F2, [[1, 1], [1, 1]])) == F2.one
    M = KMatrix(QQ, [[0, 1], [0, 0]])
    assert is_singleton_K(M) is None
    assert M.form((Fraction(3, 5), Fraction(4, 5))) == Fraction(12, 25)
    assert M.form((1, 0)) == 0


def test_odd_characteristic_counterexample_to_converse():
    M = KMatrix(F3, [[0, 1], [0, 0]])
    assert is_singleton_K(M) is None
    assert k_range_exhaustive_codes(M).tolist() == [0]


def test_char2_examples():
    r = char2_reduce(KMatrix(F2, [[1, 1], [1, 1]]))
    assert r.degree == 0 and r.classification == "SingletonK"
    M = KMatrix(F2, [[0, 1], [0, 0]])
    r = char2_reduce(M)
    assert r.degree == 2
    assert _values(r.result) == _values(k_range_exhaustive(M))


def _all(K, n):
    for ent in itertools.product(K.elements(), repeat=n * n):
        yield KMatrix(K, [ent[i * n:(i + 1) * n] for i in range(n)])


def test_structural_singleton_is_singleton_exhaustive_f5():
    for M in _all(F5, 2):
        c = is_singleton_K(M)
        if c is not None:
            assert k_range_exhaustive_codes(M).tolist() == [c.value]


@pytest.mark.parametrize("K", [F4, F8], ids=["F4", "F8"])
def test_char2_reduction_matches_enumeration(K):
    rng = random.Random(1)
    for n in (2, 3):
        for _ in range(30):
            M = KMatrix(K, [[K.element(rng.randrange(K.q)) for _ in range(n)] for _ in range(n)])
            red = char2_reduce(M)
            codes = set(k_range_exhaustive_codes(M).tolist())
            if red.degree == 0:
                assert codes == {red.result.points[0].value}
            elif red.degree == 1:
                assert codes == set(range(K.q))
            else:
                assert codes == _values(red.result)
            assert (len(codes) == 1) == (red.degree == 0)


def test_char2_criterion_over_f4():
    for M in _all(F4, 2):
        single = len(k_range_exhaustive_codes(M)) == 1
        assert single == (is_singleton_K(M) is not None)


def test_char2_nonsingleton_ranges_have_half_the_field():
    # on x_1 + x_2 = 1 the form is a x^2 + b x + c, an F_2-affine map of K,
    # so a non-constant image is a coset of size at least q / 2
    for K in (F4, F8):
        for M in _all(K, 2):
            codes = k_range_exhaustive_codes(M)
            if len(codes) > 1:
                assert len(codes) >= K.q // 2


def test_char2_range_of_size_two_over_f4():
    M = KMatrix(F4, [[0, 1], [0, 0]])
    assert len(k_range_exhaustive_codes(M)) == 2


def test_rational_sphere_points():
    pts = list(islice(sphere_points_Q(2), 8))
    assert (Fraction(3, 5), Fraction(4, 5)) in pts
    assert len(set(pts)) == len(pts)
    for n in (1, 2, 3, 4):
        pts = list(islice(sphere_points_Q(n), 300 if n > 1 else 2))
        assert len(set(pts)) == len(pts)
        assert all(sum(x * x for x in p) == 1 for p in pts)


def test_sample_identity_matrix():
    r = k_range_sample(KMatrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 100)
    assert set(r.points) == {1}


def test_sampled_distinct_values_over_q():
    # the infinite-K surrogate: many distinct values for a non-singleton form
    r = k_range_sample(KMatrix(QQ, [[0, 1], [0, 0]]), 6000)
    assert len(set(r.points)) >= 1000


ints = st.integers(-9, 9)


@given(st.lists(ints, min_size=4, max_size=4), st.fractions(-5, 5, max_denominator=7), st.fractions(-5, 5, max_denominator=7))
def test_sampled_affine_equivariance(ent, c, d):
    M = KMatrix(QQ, [ent[:2], ent[2:]])
    r = k_range_sample(M, 40)
    r2 = k_range_sample(M.affine(c, d), 40)
    assert list(r2.points) == [c * v + d for v in r.points]
    assert M[0, 0] in r.points and M[1, 1] in r.points


@given(st.sampled_from([F5, F7]), st.integers(2, 3), st.integers(0, 10**6))
def test_three_forms_agree(K, n, seed):
    rng = random.Random(seed)
    M = KMatrix(K, [[K.element(rng.randrange(K.q)) for _ in range(n)] for _ in range(n)])
    base = k_range_exhaustive_codes(M)
    assert np.array_equal(base, k_range_exhaustive_codes(symmetrize(M)))
    assert np.array_equal(base, k_range_exhaustive_codes(symmetrize(M, "triangular")))
    diag = {M[i, i].value for i in range(n)}
    assert diag <= set(base.tolist())
