"""Symbolic values of Num(M).

Every description answers ``membership(z)`` with "Yes"/"No"/"Unknown",
lists its points over a finite field with ``enumerate()``, and produces
verified members over Q with ``sample(count)``.  The frame data (offset
and scale) is stored explicitly so nothing is re-derived at query time.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

import numpy as np

from .circles import Circle, circle_points
from .fields import ExtScalar, QuadraticExtension, rationals_by_height, solve_ground_quadratic
from .normsets import in_delta, norm_membership, sample_delta_segment, segment_membership
from .tables import ext_tables

# circle points taken per parameter value when sampling a circle family
_POINTS_PER_CIRCLE = 4


def _combine(answers) -> str:
    answers = list(answers)
    if "Yes" in answers:
        return "Yes"
    return "Unknown" if "Unknown" in answers else "No"


def _dedupe(stream: Iterator[ExtScalar], count: int) -> list[ExtScalar]:
    out, seen = [], set()
    for z in stream:
        if z not in seen:
            seen.add(z)
            out.append(z)
            if len(out) == count:
                break
    return out


def _segment_params(L: QuadraticExtension) -> list:
    """Delta^ ∩ (1 - Delta^) over a finite field: every t outside {0, 1}."""
    K = L.ground
    return [t for t in K.elements() if t and t != K.one]


def _norm_fiber(tables, k) -> np.ndarray:
    return np.nonzero(tables.norm == tables.ground.index(k))[0]


class RangeDescription:
    variant = "RangeDescription"

    @property
    def field(self) -> QuadraticExtension:
        raise NotImplementedError

    def membership(self, z) -> str:
        raise NotImplementedError

    def enumerate_indices(self) -> np.ndarray:
        """Sorted unique table indices of all members (finite fields only)."""
        raise NotImplementedError

    def enumerate(self) -> list[ExtScalar]:
        L = self.field
        if not L.is_finite:
            raise ValueError("enumerate() needs a finite field")
        t = ext_tables(L)
        return sorted((t.element(i) for i in self.enumerate_indices()), key=L.key)

    def _raw_samples(self) -> Iterator[ExtScalar]:
        raise NotImplementedError

    def sample(self, count: int) -> list[ExtScalar]:
        """Up to ``count`` distinct members, each confirmed by ``membership``."""
        if self.field.is_finite:
            return self.enumerate()[:count]
        out = _dedupe(self._raw_samples(), count)
        for z in out:
            if self.membership(z) != "Yes":
                raise AssertionError(f"sampled {z} is not a member of {self!r}")
        return out

    def payload(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Singleton(RangeDescription):
    c: ExtScalar
    variant = "Singleton"

    @property
    def field(self):
        return self.c.field

    def membership(self, z) -> str:
        return "Yes" if self.field(z) == self.c else "No"

    def enumerate_indices(self):
        return np.array([ext_tables(self.field).index(self.c)])

    def _raw_samples(self):
        yield self.c

    def payload(self):
        return {"c": self.c}


@dataclass(frozen=True)
class FiniteSet(RangeDescription):
    points: tuple
    variant = "FiniteSet"

    def __post_init__(self):
        if not self.points:
            raise ValueError("FiniteSet needs at least one point")
        L = self.points[0].field
        object.__setattr__(self, "points", tuple(sorted(set(self.points), key=L.key)))

    @classmethod
    def from_indices(cls, L, indices) -> "FiniteSet":
        t = ext_tables(L)
        return cls(tuple(t.element(i) for i in np.unique(indices)))

    @property
    def field(self):
        return self.points[0].field

    def membership(self, z) -> str:
        return "Yes" if self.field(z) in self.points else "No"

    def enumerate_indices(self):
        t = ext_tables(self.field)
        return np.unique([t.index(p) for p in self.points])

    def enumerate(self):
        return list(self.points)

    def _raw_samples(self):
        yield from self.points

    def payload(self):
        return {"points": list(self.points)}


@dataclass(frozen=True)
class PuncturedCoset(RangeDescription):
    """c + mu * Delta^, with c itself excluded."""

    c: ExtScalar
    mu: ExtScalar
    variant = "PuncturedCoset"

    @property
    def field(self):
        return self.c.field

    def membership(self, z) -> str:
        w = (self.field(z) - self.c) / self.mu
        if not w.is_ground():
            return "No"
        return norm_membership(self.field, w.x, nonzero=True)

    def enumerate_indices(self):
        t = ext_tables(self.field)
        ks = np.arange(1, t.q)  # nonzero ground elements, as L indices
        return np.unique(t.add[t.index(self.c), t.mul[t.index(self.mu), ks]])

    def _raw_samples(self):
        L = self.field
        for x in rationals_by_height():
            for y in islice(rationals_by_height(), 3):
                k = L(x, y).norm()
                if k:
                    yield self.c + self.mu * k

    def payload(self):
        return {"c": self.c, "mu": self.mu}


@dataclass(frozen=True)
class CenterCircleFamily(RangeDescription):
    """c + mu * W where W holds the w with norm(w) = p (1 - p) for some p
    with p/delta and (1 - p)/delta in Delta^, plus 0 when delta is in Delta.

    For delta in Delta this is {0} ∪ the circles C(k(1-k), 0), k in
    Delta^ ∩ (1 - Delta^).
    """

    c: ExtScalar
    mu: ExtScalar
    delta: object = None

    variant = "CenterCircleFamily"

    def __post_init__(self):
        L = self.c.field
        object.__setattr__(self, "delta", L.ground(1 if self.delta is None else self.delta))

    @property
    def field(self):
        return self.c.field

    def _p_ok(self, p) -> str:
        L = self.field
        K = L.ground
        if not p or p == K.one:
            return "No"
        answers = (norm_membership(L, p / self.delta), norm_membership(L, (K.one - p) / self.delta))
        if "No" in answers:
            return "No"
        return "Unknown" if "Unknown" in answers else "Yes"

    def membership(self, z) -> str:
        L = self.field
        K = L.ground
        w = (L(z) - self.c) / self.mu
        if not w:
            return norm_membership(L, self.delta)
        roots = solve_ground_quadratic(K, K.one, -K.one, w.norm())
        return _combine(self._p_ok(p) for p in roots)

    def enumerate_indices(self):
        L = self.field
        t = ext_tables(L)
        K = L.ground
        allowed = {p * (K.one - p) for p in _segment_params(L)}
        allowed.add(K.zero)
        codes = np.array(sorted(t.ground.index(a) for a in allowed))
        ws = np.nonzero(np.isin(t.norm, codes))[0]
        return np.unique(t.add[t.index(self.c), t.mul[t.index(self.mu), ws]])

    def _raw_samples(self):
        L = self.field
        K = L.ground
        if norm_membership(L, self.delta) == "Yes":
            yield self.c
        for p in rationals_by_height():
            if self._p_ok(p) != "Yes":
                continue
            x = in_delta(L, p / self.delta).witness
            y = in_delta(L, (K.one - p) / self.delta).witness
            if x is None or y is None:
                continue
            w0 = self.delta * x.conj() * y
            for w in islice(circle_points(Circle(L.zero, w0.norm()), w0), _POINTS_PER_CIRCLE):
                yield self.c + self.mu * w

    def payload(self):
        return {"c": self.c, "mu": self.mu, "delta": self.delta}


@dataclass(frozen=True)
class TwoPointCircleFamily(RangeDescription):
    """Image under z -> c2 + (c1 - c2) z of
    {0, 1} ∪ the circles C(norm(mu) d (1 - d), d), d in Delta^ ∩ (1 - Delta^)."""

    c1: ExtScalar
    c2: ExtScalar
    mu: ExtScalar
    variant = "TwoPointCircleFamily"

    @property
    def field(self):
        return self.c1.field

    def membership(self, z) -> str:
        L = self.field
        K = L.ground
        w = (L(z) - self.c2) / (self.c1 - self.c2)
        if w == L.zero or w == L.one:
            return "Yes"
        nm = self.mu.norm()
        # norm(w - d) = nm d (1 - d) for d in K
        a, b, c = K.one + nm, -(w.trace() + nm), w.norm()
        if not a and not b and not c:
            if L.is_finite:
                return _combine("Yes" for _ in _segment_params(L))
            return "Yes"
        return _combine(segment_membership(L, d) for d in solve_ground_quadratic(K, a, b, c))

    def enumerate_indices(self):
        L = self.field
        t = ext_tables(L)
        K = L.ground
        nm = self.mu.norm()
        parts = [np.array([0, 1])]
        for d in _segment_params(L):
            rs = _norm_fiber(t, nm * d * (K.one - d))
            parts.append(t.add[t.ground.index(d), rs])
        ws = np.concatenate(parts)
        return np.unique(t.add[t.index(self.c2), t.mul[t.index(self.c1 - self.c2), ws]])

    def _raw_samples(self):
        L = self.field
        yield self.c1
        yield self.c2
        for d, x, y in sample_delta_segment(L):
            r0 = self.mu * x.conj() * y
            if not r0:
                yield self.c2 + (self.c1 - self.c2) * d
                continue
            for r in islice(circle_points(Circle(L.zero, r0.norm()), r0), _POINTS_PER_CIRCLE):
                yield self.c2 + (self.c1 - self.c2) * (r + d)

    def payload(self):
        return {"c1": self.c1, "c2": self.c2, "mu": self.mu}


@dataclass(frozen=True)
class SegmentJoin(RangeDescription):
    """{c1, c2} ∪ ((c1; c2))."""

    c1: ExtScalar
    c2: ExtScalar
    variant = "SegmentJoin"

    @property
    def field(self):
        return self.c1.field

    def membership(self, z) -> str:
        L = self.field
        z = L(z)
        if z == self.c1 or z == self.c2:
            return "Yes"
        if self.c1 == self.c2:
            return "No"
        t = (z - self.c2) / (self.c1 - self.c2)
        if not t.is_ground():
            return "No"
        return segment_membership(L, t.x)

    def enumerate_indices(self):
        L = self.field
        t = ext_tables(L)
        ts = np.array([0, 1] + [t.ground.index(s) for s in _segment_params(L)])
        return np.unique(t.add[t.index(self.c2), t.mul[t.index(self.c1 - self.c2), ts]])

    def _raw_samples(self):
        yield self.c1
        yield self.c2
        if self.c1 != self.c2:
            for t, _, _ in sample_delta_segment(self.field):
                yield self.c2 + (self.c1 - self.c2) * t

    def payload(self):
        return {"c1": self.c1, "c2": self.c2}


@dataclass(frozen=True)
class TraceLine(RangeDescription):
    """{c1 + (c2 - c1) t : t + sigma(t) = 1}."""

    c1: ExtScalar
    c2: ExtScalar
    variant = "TraceLine"

    @property
    def field(self):
        return self.c1.field

    def membership(self, z) -> str:
        L = self.field
        t = (L(z) - self.c1) / (self.c2 - self.c1)
        return "Yes" if t.trace() == L.ground.one else "No"

    def enumerate_indices(self):
        L = self.field
        t = ext_tables(L)
        idx = np.arange(t.Q)
        traces = t.add[idx, t.conj]
        ts = np.nonzero(traces == t.ground.index(L.ground.one))[0]
        return np.unique(t.add[t.index(self.c1), t.mul[t.index(self.c2 - self.c1), ts]])

    def _raw_samples(self):
        L = self.field
        half = L.ground.one / 2
        for y in rationals_by_height():
            yield self.c1 + (self.c2 - self.c1) * L(half, y)

    def payload(self):
        return {"c1": self.c1, "c2": self.c2}


VARIANTS = {
    cls.variant: cls
    for cls in (Singleton, FiniteSet, PuncturedCoset, CenterCircleFamily, TwoPointCircleFamily, SegmentJoin, TraceLine)
}
