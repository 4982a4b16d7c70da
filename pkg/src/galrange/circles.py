"""Circles {z : norm(z - mu) = c} in L, viewed as conics over K."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import MissingWitnessError, UnknownVerdictError
from .fields import ExtScalar, rationals_by_height
from .normsets import in_delta


@dataclass(frozen=True)
class Circle:
    center: ExtScalar
    squared_radius: object

    def __post_init__(self):
        L = self.center.field
        c = self.squared_radius
        if isinstance(c, ExtScalar):
            if not c.is_ground():
                raise ValueError(f"squared radius {c} is not in K")
            c = c.x
        object.__setattr__(self, "squared_radius", L.ground(c))

    @property
    def field(self):
        return self.center.field


@dataclass(frozen=True)
class CircleKind:
    kind: str  # "Empty" | "SinglePoint" | "SmoothConic"
    bounded: Optional[bool] = None


def circle_contains(z: ExtScalar, C: Circle) -> bool:
    return (z - C.center).norm() == C.squared_radius


def circle_classify(C: Circle) -> CircleKind:
    c = C.squared_radius
    if not c:
        return CircleKind("SinglePoint")
    verdict = in_delta(C.field, c)
    if verdict.answer == "Unknown":
        raise UnknownVerdictError(f"{c} in Delta")
    if verdict.answer == "No":
        return CircleKind("Empty")
    L = C.field
    return CircleKind("SmoothConic", None if L.is_finite else L.d < 0)


def _polar(p: ExtScalar, v: ExtScalar):
    """norm(p + v) - norm(p) - norm(v), the bilinear form attached to the norm."""
    return (p.conj() * v).trace()


def _directions(L) -> Iterator[ExtScalar]:
    yield L.beta
    if L.is_finite:
        K = L.ground
        for s in sorted(K.elements(), key=K.key):
            yield L(K.one, s)
    else:
        for s in rationals_by_height():
            yield L(1, s)


def circle_points(C: Circle, witness: Optional[ExtScalar] = None) -> Iterator[ExtScalar]:
    """Points of C, starting from a witness b with norm(b) = c.

    Each line through b with direction v meets the circle (centered at 0)
    again at b + lam v with lam = -polar(b, v) / norm(v); the tangent
    direction (polar zero) only returns b and is skipped.  The antipode -b
    comes second (odd characteristic), then directions beta and 1 + s beta
    with s in height order (all of K for a finite field, giving the whole
    circle).
    """
    L = C.field
    c = C.squared_radius
    mu = C.center
    if not c:
        yield mu
        return
    if witness is None:
        witness = in_delta(L, c).witness
        if witness is None:
            raise MissingWitnessError(f"no norm witness for {c}")
    if witness.norm() != c:
        raise MissingWitnessError(f"norm({witness}) != {c}")
    yield mu + witness
    antipode = None
    if L.characteristic != 2:
        antipode = -witness
        yield mu + antipode
    for v in _directions(L):
        pol = _polar(witness, v)
        if not pol:
            continue
        z = witness - v * (pol / v.norm())
        if z != antipode:
            yield mu + z
