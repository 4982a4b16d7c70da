from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, strategies as st

from galrange.circles import Circle, circle_classify, circle_contains, circle_points
from galrange.errors import MissingWitnessError

from conftest import F9, F16, F25, Q2, QI, rational_elements


def test_contains_examples():
    unit = Circle(QI.zero, 1)
    assert circle_contains(QI(Fraction(3, 5), Fraction(4, 5)), unit)
    assert not circle_contains(QI(1, 1), unit)
    mu = QI(2, -7)
    assert circle_contains(mu, Circle(mu, 0))


def test_classify_examples():
    assert circle_classify(Circle(QI.zero, 7)).kind == "Empty"
    k = circle_classify(Circle(Q2.zero, 1))
    assert k.kind == "SmoothConic" and k.bounded is False
    assert circle_classify(Circle(QI.zero, 1)).bounded is True
    assert circle_classify(Circle(QI.one, 0)).kind == "SinglePoint"


def test_rational_points_example():
    pts = list(islice(circle_points(Circle(QI.zero, 1), QI.one), 20))
    for z in (QI.one, -QI.one, QI(Fraction(3, 5), Fraction(4, 5))):
        assert z in pts


def test_finite_unit_circle():
    assert set(circle_points(Circle(F9.zero, 1))) == {F9.one, F9(2), F9(0, 1), F9(0, 2)}


def test_missing_witness():
    with pytest.raises(MissingWitnessError):
        next(circle_points(Circle(QI.zero, 7)))


@pytest.mark.parametrize("L", [F9, F25, F16], ids=lambda L: L.spec)
def test_finite_circles_match_brute_force(L):
    for c in L.ground.elements():
        expected = {z for z in L.elements() if z.norm() == c}
        got = list(circle_points(Circle(L.zero, c)))
        assert len(got) == len(set(got)) and set(got) == expected


@given(st.sampled_from([QI, Q2]).flatmap(lambda L: st.tuples(rational_elements(L), rational_elements(L))))
def test_parametrization_sound_and_distinct(pair):
    mu, b = pair
    C = Circle(mu, b.norm())
    pts = list(islice(circle_points(C, b), 60))
    assert all(circle_contains(z, C) for z in pts)
    assert len(set(pts)) == len(pts)
    if b:
        assert len(pts) == 60
        assert mu + b in pts and mu - b in pts


@given(rational_elements(QI), rational_elements(QI))
def test_translation_equivariance(mu, b):
    c = b.norm()
    base = list(islice(circle_points(Circle(QI.zero, c), b), 30))
    moved = list(islice(circle_points(Circle(mu, c), b), 30))
    assert moved == [mu + z for z in base]
