from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, strategies as st

from galrange.fields import QQ, QuadraticExtension, parse_field_spec
from galrange.hilbert import hilbert_symbol, norm_obstruction
from galrange.normsets import (
    find_norm_with_square_complement,
    in_delta,
    in_delta_n,
    inv_in_delta_n_check,
    inverse_decomposition,
    sample_delta_segment,
    segment_membership,
    square_complement,
    zero_in_hat_delta2,
)
from galrange.verify import brute_force_norm

from conftest import F9, QI, Q2, Q5

F7 = parse_field_spec("F[7]")
F5 = parse_field_spec("F[5]")


def _sum_norms(ws):
    return sum((w.norm() for w in ws[1:]), ws[0].norm())


def test_in_delta_examples():
    v = in_delta(QI, 7)
    assert v.answer == "No" and v.obstruction == "p=7" and v.witness is None
    assert in_delta(QI, 2).witness == QI(1, 1)
    assert in_delta(Q5, -1).witness == Q5(2, 1)
    for k in F7.ground.elements():
        v = in_delta(F7, k)
        assert v.answer == "Yes" and v.witness.norm() == k


def test_in_delta_n_examples():
    v = in_delta_n(QI, 7, 2)
    assert v.answer == "Yes" and _sum_norms(v.witness) == 7
    assert in_delta_n(QI, -1, 3).answer == "No"
    v = in_delta_n(Q2, Fraction(1, 3), 4)
    assert v.answer == "Yes" and _sum_norms(v.witness) == Fraction(1, 3)


def test_inverse_decomposition_examples():
    assert inv_in_delta_n_check(2, QI(1, 1))
    assert inverse_decomposition(2, QI(1, 1)) == [QI(1, 1) / 2]
    assert inverse_decomposition(-1, Q5(2, 1)) == [Q5(2, 1) / -1]
    w = in_delta(F5, 3).witness
    assert inv_in_delta_n_check(F5.ground(3), w)


def test_zero_in_hat_delta2_examples():
    assert zero_in_hat_delta2(QI).answer == "No"
    v = zero_in_hat_delta2(Q5)
    assert v.answer == "Yes" and v.witness == (Q5.one, Q5(2, 1))
    v = zero_in_hat_delta2(F9)
    a, b = v.witness
    assert v.answer == "Yes" and a and b and a.norm() + b.norm() == 0


def test_segment_sampler_examples():
    ts = [t for t, _, _ in islice(sample_delta_segment(QI), 10)]
    assert Fraction(1, 2) in ts and Fraction(4, 5) in ts
    assert [t for t, _, _ in sample_delta_segment(F9)] == [F9.ground(2)]


def test_segment_sampler_witnesses():
    for L in (QI, Q2, Q5):
        for t, wt, wu in islice(sample_delta_segment(L), 200):
            assert wt.norm() == t and wu.norm() == 1 - t
            assert segment_membership(L, t) == "Yes"


def test_norm_with_square_complement():
    m, z, w = find_norm_with_square_complement(QI)
    assert z.x and z.y and w and z.norm() == m and 1 - m == w * w
    # a valid point of the same kind, and one rejected by the filter
    assert square_complement(QI(Fraction(9, 25), Fraction(12, 25))) == Fraction(4, 5)
    assert square_complement(QI(Fraction(3, 10), Fraction(4, 10))) is None
    assert square_complement(QI(Fraction(3, 5), 0)) is None


def test_hilbert_symbol_basics():
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, 7, 7) == -1
    assert hilbert_symbol(2, 7, 7) == 1
    assert norm_obstruction(-1, 7) == "p=7"
    assert norm_obstruction(-1, -3) == "p=3"
    assert norm_obstruction(5, -1) is None


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, "inf"])
def test_hilbert_product_formula_pieces(p):
    # symmetry and bimultiplicativity in the first argument
    for a in (-6, -3, -1, 2, 3, 5, 7, 10):
        for b in (-5, -2, -1, 3, 6, 11):
            assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)
            assert hilbert_symbol(a * 3, b, p) == hilbert_symbol(a, b, p) * hilbert_symbol(3, b, p)


def test_product_formula():
    places = [2, 3, 5, 7, 11, 13, "inf"]
    for a in (-6, -3, -1, 2, 3, 5, 7, 10, 13):
        for b in (-5, -2, -1, 3, 6, 11, 13):
            prod = 1
            for p in places:
                prod *= hilbert_symbol(a, b, p)
            assert prod == 1


squarefree = st.sampled_from([-30, -23, -15, -11, -7, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 13, 17, 21, 30])
small_k = st.builds(Fraction, st.integers(-30, 30).filter(bool), st.integers(1, 30))


@given(squarefree, small_k)
def test_decision_agrees_with_brute_force(d, k):
    L = QuadraticExtension(QQ, alpha=d)
    v = in_delta(L, k)
    if v.witness is not None:
        assert v.witness.norm() == k
    hit = brute_force_norm(d, k, 20)
    if hit is not None:
        assert v.answer == "Yes"
    if v.answer == "No":
        assert hit is None


@given(st.sampled_from([-1, -2, -7, -15]), small_k)
def test_sign_obstruction(d, k):
    L = QuadraticExtension(QQ, alpha=d)
    if k < 0:
        assert in_delta(L, k).answer == "No"


@given(squarefree, small_k, small_k)
def test_norms_are_multiplicative(d, a, b):
    L = QuadraticExtension(QQ, alpha=d)
    va, vb = in_delta(L, a), in_delta(L, b)
    if va.witness is not None and vb.witness is not None:
        assert (va.witness * vb.witness).norm() == a * b
        assert in_delta(L, a * b).answer == "Yes"


@given(st.sampled_from([QI, Q2, Q5]), small_k, st.integers(2, 5))
def test_sum_witnesses_verify(L, k, n):
    v = in_delta_n(L, k, n)
    if v.witness is not None:
        assert len(v.witness) == n and _sum_norms(v.witness) == k
