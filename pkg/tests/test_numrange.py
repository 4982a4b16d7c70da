import random
from fractions import Fraction
from itertools import islice

import numpy as np
import pytest
from hypothesis import given, strategies as st

from galrange.descriptions import (
    CenterCircleFamily,
    PuncturedCoset,
    SegmentJoin,
    Singleton,
    TraceLine,
)
from galrange.errors import (
    HypothesisError,
    NotInLError,
    UnhandledConfigurationError,
    UnknownVerdictError,
)
from galrange.generate import BRANCH_GENERATORS, random_matrix, random_unitary
from galrange.linalg import ExtMatrix, direct_sum, inverse_2x2, sesq_form
from galrange.numrange import (
    classify_2x2,
    classify_corank1,
    direct_sum_range,
    rank_one_idempotent_range,
    make_isotropic_defective,
    membership_2x2,
    num_range_exhaustive,
    num_range_exhaustive_indices,
    num_range_sample,
    num_range_zero,
    open_segment,
    singleton_witness,
)
from galrange.normsets import in_delta
from galrange.tables import BudgetExceeded
from galrange.verify import corank1_representatives

from conftest import F9, F25, QI, Q5, matrices, rational_elements


def _jordan(L):
    return ExtMatrix(L, [[0, 1], [0, 0]])


def test_exhaustive_examples():
    assert num_range_exhaustive(ExtMatrix.identity(F9, 2).scale(F9(1, 2))).points == (F9(1, 2),)
    assert set(num_range_exhaustive(ExtMatrix.diag(F9, [0, 1])).points) == {F9(0), F9(1), F9(2)}
    got = num_range_exhaustive(_jordan(F9)).points
    assert set(got) == {F9(0), F9(1), F9(2), F9(0, 1), F9(0, 2)}
    assert list(got) == sorted(got, key=F9.key)


def test_budget_guard(monkeypatch):
    monkeypatch.setenv("NUMRANGE_BUDGET", "80")
    with pytest.raises(BudgetExceeded):
        num_range_exhaustive(_jordan(F9))


def test_isotropic_values():
    assert num_range_zero(_jordan(QI), count=5) == [QI.zero]
    assert num_range_zero(ExtMatrix.identity(F9, 2)).points == (F9.zero,)
    M = _jordan(F9)
    expected = {
        sesq_form(u, M @ u)
        for u in ((a, b) for a in F9.elements() for b in F9.elements())
        if sesq_form(u, u) == F9.zero
    }
    assert set(num_range_zero(M).points) == expected


def test_sampled_unit_vectors():
    M = ExtMatrix(QI, [[QI(1, 2), 3], [QI(0, 1), -1]])
    sample = num_range_sample(M, 50)
    assert [v for _, v in sample[:2]] == [M[0, 0], M[1, 1]]
    us = [u for u, _ in sample]
    assert (QI(Fraction(3, 5)), QI(Fraction(4, 5))) in us
    assert len(set(us)) == len(us)


def test_classify_examples():
    d = classify_2x2(_jordan(F9))
    assert isinstance(d, CenterCircleFamily) and d.c == F9.zero and d.mu == F9.one
    assert d.enumerate() == list(num_range_exhaustive(_jordan(F9)).points)

    d = classify_2x2(make_isotropic_defective(F9, 0, 1))
    assert d == PuncturedCoset(F9.zero, F9.one)
    assert d.enumerate() == [F9(1), F9(2)]

    d = classify_2x2(ExtMatrix.diag(QI, [0, 1]))
    assert d == SegmentJoin(QI.zero, QI.one)
    assert d.membership(QI(Fraction(1, 2))) == "Yes"
    assert d.membership(QI(-1)) == "No"

    assert classify_2x2(ExtMatrix.identity(QI, 2).scale(3)) == Singleton(QI(3))
    with pytest.raises(NotInLError):
        classify_2x2(ExtMatrix(QI, [[0, 1], [-2, 0]]))


def test_trace_line_example():
    v1, v2 = (F9.one, F9(2, 1)), (F9.one, F9(1, 2))
    assert sesq_form(v1, v1) == 0 and sesq_form(v2, v2) == 0
    P = ExtMatrix.from_columns(F9, [v1, v2])
    M = P @ ExtMatrix.diag(F9, [0, 1]) @ inverse_2x2(P)
    d = classify_2x2(M)
    assert isinstance(d, TraceLine)
    pts = d.enumerate()
    assert len(pts) == 3
    assert pts == list(num_range_exhaustive(M).points)


def test_membership_examples():
    M = make_isotropic_defective(F25, F25(1, 1), F25(0, 2))
    assert membership_2x2(M, F25(1, 1)) == "No"
    rng = random.Random(3)
    for _ in range(30):
        M = random_matrix(F25, rng, 2)
        try:
            assert membership_2x2(M, M[0, 0]) == "Yes"
        except NotInLError:
            pass


def test_isotropic_defective_requires_isotropic_vectors():
    with pytest.raises(HypothesisError):
        make_isotropic_defective(QI, 0, 1)
    M = make_isotropic_defective(Q5, 0, 1)
    assert classify_2x2(M).membership(Q5.zero) == "No"
    for _, v in num_range_sample(M, 100):
        assert v.is_ground() and v and in_delta(Q5, v.x).answer == "Yes"


def test_center_circle_excludes_eigenvalue_when_not_a_norm():
    v = (QI(2, 1), QI(1, 1))  # <v, v> = 7, which is not a norm in Q(i)
    w = (-v[1].conj(), v[0].conj())
    M = ExtMatrix(QI, [[v[i] * w[j].conj() for j in range(2)] for i in range(2)]).shift(QI(1, -1))
    d = classify_2x2(M)
    assert isinstance(d, CenterCircleFamily) and in_delta(QI, d.delta).answer == "No"
    assert d.membership(QI(1, -1)) == "No"
    for L in (F9, F25):
        rng = random.Random(0)
        for _ in range(20):
            M = BRANCH_GENERATORS["CenterCircleFamily"](L, rng)
            assert classify_2x2(M).membership(classify_2x2(M).c) == "Yes"


def test_singleton_witness_examples():
    assert singleton_witness(ExtMatrix.identity(QI, 3).scale(3)) is None
    u1, u2 = singleton_witness(_jordan(QI))
    M = _jordan(QI)
    assert sesq_form(u1, M @ u1) == 0
    assert u2 == (QI(Fraction(3, 5)), QI(Fraction(4, 5)))
    assert sesq_form(u2, M @ u2) == QI(Fraction(12, 25))
    A = ExtMatrix(QI, [[0, 1], [-1, 0]])
    u1, u2 = singleton_witness(A)
    assert sesq_form(u2, u2) == 1 and sesq_form(u2, A @ u2) != sesq_form(u1, A @ u1)
    # another valid witness of the same shape
    x, y = QI(Fraction(4, 5)), QI(Fraction(9, 25), Fraction(12, 25))
    assert sesq_form((x, y), A @ (x, y)) == QI(0, Fraction(96, 125))


def test_direct_sum_examples():
    A, B = ExtMatrix(F9, [[0]]), ExtMatrix(F9, [[1]])
    assert direct_sum_range(A, B).enumerate() == list(num_range_exhaustive(ExtMatrix.diag(F9, [0, 1])).points)
    c = ExtMatrix(F9, [[F9(1, 1)]])
    assert direct_sum_range(c, c).enumerate() == [F9(1, 1)]
    assert direct_sum_range(ExtMatrix(QI, [[0]]), ExtMatrix(QI, [[1]])) == SegmentJoin(QI.zero, QI.one)


def test_direct_sum_random_f25():
    rng = random.Random(11)
    for _ in range(10):
        A, B = random_matrix(F25, rng, 2), random_matrix(F25, rng, 1)
        got = direct_sum_range(A, B).enumerate_indices()
        assert np.array_equal(got, num_range_exhaustive_indices(direct_sum(A, B)))


def test_direct_sum_sampler_over_q():
    A = _jordan(QI)
    B = ExtMatrix(QI, [[2]])
    s = direct_sum_range(A, B)
    for z in s.sample(20):
        assert isinstance(z, type(QI.zero))


def test_open_segment_examples():
    assert list(open_segment(F9.zero, F9.one)) == [F9(2)]
    head = list(islice(open_segment(QI.one, QI.zero), 10))
    assert QI(Fraction(1, 2)) in head and QI(Fraction(4, 5)) in head
    assert list(open_segment(QI(2, 3), QI(2, 3))) == [QI(2, 3)]


@pytest.mark.parametrize("L,b", [(F9, F9.one), (F25, F25.beta)], ids=["F9-b1", "F25-beta"])
def test_rank_one_idempotent(L, b):
    d = rank_one_idempotent_range(b)
    M = ExtMatrix(L, [[1, b], [0, 0]])
    assert d.enumerate() == list(num_range_exhaustive(M).points)
    assert d.membership(L.zero) == d.membership(L.one) == "Yes"


def test_corank1_examples():
    r = classify_corank1(ExtMatrix.diag(F9, [0, 0, 1]))
    assert r.case == 1 and r.c == F9.zero
    i2 = make_isotropic_defective(F9, 0, 1)
    r = classify_corank1(direct_sum(ExtMatrix(F9, [[0]]), i2))
    assert r.case == 5
    assert np.array_equal(r.range_indices(), num_range_exhaustive_indices(direct_sum(ExtMatrix(F9, [[0]]), i2)))
    r = classify_corank1(direct_sum(ExtMatrix(F9, [[0]]), _jordan(F9)))
    assert r.case == 3


def test_corank1_all_cases_after_unitary_change():
    rng = random.Random(5)
    for case, M in corank1_representatives(F9, rng).items():
        r = classify_corank1(M)
        assert r.case == case
        assert np.array_equal(r.range_indices(), num_range_exhaustive_indices(M))


def test_corank1_rejects_eigenspace_without_unitary_splitting():
    w = F9(1, 1)  # norm -1
    v = (F9.one, w, F9.zero)
    c = F9(2, 1)
    M = ExtMatrix(F9, [[v[i] if j == 2 else F9.zero for j in range(3)] for i in range(3)]).shift(c)
    with pytest.raises(HypothesisError):
        classify_corank1(M)


@pytest.mark.parametrize("name", sorted(BRANCH_GENERATORS))
@pytest.mark.parametrize("L", [F9, F25], ids=lambda L: L.spec)
def test_branches_match_oracle(name, L):
    rng = random.Random(hash(name) % 1000)
    for _ in range(25):
        M = BRANCH_GENERATORS[name](L, rng)
        assert np.array_equal(classify_2x2(M).enumerate_indices(), num_range_exhaustive_indices(M))


@given(st.integers(0, 10**6))
def test_pointwise_membership_matches_oracle(seed):
    rng = random.Random(seed)
    M = random_matrix(F9, rng, 2)
    try:
        d = classify_2x2(M)
    except NotInLError:
        return
    inside = set(num_range_exhaustive(M).points)
    for z in F9.elements():
        assert d.membership(z) == ("Yes" if z in inside else "No")


@given(st.integers(0, 10**6))
def test_unitary_invariance(seed):
    rng = random.Random(seed)
    n = 2 + seed % 2
    M = random_matrix(F9, rng, n)
    U = random_unitary(F9, rng, n)
    assert np.array_equal(num_range_exhaustive_indices(U.dagger() @ M @ U), num_range_exhaustive_indices(M))


@given(matrices(rational_elements(QI)), rational_elements(QI), rational_elements(QI))
def test_sampled_affine_and_dagger(rows, c, d):
    M = ExtMatrix(QI, rows)
    Maff, Md = M.scale(c).shift(d), M.dagger()
    for u, v in num_range_sample(M, 25):
        assert sesq_form(u, Maff @ u) == c * v + d
        assert sesq_form(u, Md @ u) == v.conj()


@given(matrices(rational_elements(QI)))
def test_classifier_samples_are_members(rows):
    M = ExtMatrix(QI, rows)
    try:
        d = classify_2x2(M)
    except (NotInLError, UnknownVerdictError, UnhandledConfigurationError):
        return
    for z in d.sample(8):
        assert d.membership(z) == "Yes"
    for i in range(2):
        assert d.membership(M[i, i]) == "Yes"
