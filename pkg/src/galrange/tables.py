"""Integer lookup tables for finite fields, used by the exhaustive engines.

Ground elements are indexed by their integer code; an extension element
x + y*beta is indexed by ``code(x) + q*code(y)``.  Tables are numpy arrays
so sphere enumeration and quadratic-form evaluation vectorize.
"""
from __future__ import annotations

import functools
import os

import numpy as np

from .fields import FiniteField, QuadraticExtension

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured size cap."""


def enumeration_budget() -> int:
    value = os.environ.get("NUMRANGE_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


class GroundTables:
    def __init__(self, K: FiniteField):
        if not K.is_finite:
            raise ValueError("lookup tables need a finite field")
        self.field = K
        q = self.q = K.q
        elts = K.elements()
        self.add = np.empty((q, q), dtype=np.int64)
        self.mul = np.empty((q, q), dtype=np.int64)
        for a in elts:
            for b in elts:
                self.add[a.value, b.value] = (a + b).value
                self.mul[a.value, b.value] = (a * b).value
        self.neg = np.array([(-a).value for a in elts], dtype=np.int64)

    def index(self, x) -> int:
        return self.field(x).value

    def element(self, i: int):
        return self.field.element(int(i))


class ExtTables:
    def __init__(self, L: QuadraticExtension):
        if not L.is_finite:
            raise ValueError("lookup tables need a finite field")
        self.field = L
        self.ground = GroundTables(L.ground)
        gt = self.ground
        q = self.q = L.ground.q
        Q = self.Q = q * q
        idx = np.arange(Q)
        xs, ys = idx % q, idx // q
        # addition is coordinatewise
        ax = gt.add[xs[:, None], xs[None, :]]
        ay = gt.add[ys[:, None], ys[None, :]]
        self.add = ax + q * ay
        x1, y1 = xs[:, None], ys[:, None]
        x2, y2 = xs[None, :], ys[None, :]
        xx = gt.mul[x1, x2]
        yy = gt.mul[y1, y2]
        cross = gt.add[gt.mul[x1, y2], gt.mul[y1, x2]]
        if L.kind == "sqrt":
            a = L.alpha.value
            px = gt.add[xx, gt.mul[a, yy]]
            py = cross
        else:
            e = L.eps.value
            px = gt.add[xx, gt.mul[e, yy]]
            py = gt.add[cross, yy]
        self.mul = px + q * py
        if L.kind == "sqrt":
            cx, cy = xs, gt.neg[ys]
        else:
            cx, cy = gt.add[xs, ys], ys
        self.conj = cx + q * cy
        # norm as a ground index
        self.norm = self.mul[idx, self.conj] % q
        self._spheres: dict = {}

    def index(self, z) -> int:
        z = self.field(z)
        return z.x.value + self.q * z.y.value

    def element(self, i: int):
        i = int(i)
        K = self.field.ground
        return self.field(K.element(i % self.q), K.element(i // self.q))

    def lift_ground(self, k: int) -> int:
        return int(k)

    def check_budget(self, n: int, budget: int | None = None) -> None:
        budget = enumeration_budget() if budget is None else budget
        total = self.Q**n
        if total > budget:
            raise BudgetExceeded(f"{total} vectors in L^{n} exceed budget {budget}")

    def all_vectors(self, n: int, budget: int | None = None) -> np.ndarray:
        self.check_budget(n, budget)
        grid = np.indices((self.Q,) * n).reshape(n, -1).T
        return np.ascontiguousarray(grid)

    def gram(self, vecs: np.ndarray) -> np.ndarray:
        """<u,u> for each row, as ground indices."""
        acc = np.zeros(len(vecs), dtype=np.int64)
        add = self.ground.add
        for i in range(vecs.shape[1]):
            acc = add[acc, self.norm[vecs[:, i]]]
        return acc

    def sphere(self, n: int, delta: int = 1, budget: int | None = None) -> np.ndarray:
        """Rows u of L^n with <u,u> == delta (ground index)."""
        key = (n, delta)
        self.check_budget(n, budget)
        if key not in self._spheres:
            vecs = self.all_vectors(n, budget)
            self._spheres[key] = vecs[self.gram(vecs) == delta]
        return self._spheres[key]

    def form_values(self, matrix_idx: np.ndarray, vecs: np.ndarray) -> np.ndarray:
        """<u, M u> for each row u; ``matrix_idx`` is the n x n index matrix of M."""
        n = vecs.shape[1]
        acc = np.zeros(len(vecs), dtype=np.int64)
        add, mul = self.add, self.mul
        cj = self.conj[vecs]
        for i in range(n):
            row = np.zeros(len(vecs), dtype=np.int64)
            for j in range(n):
                row = add[row, mul[matrix_idx[i, j], vecs[:, j]]]
            acc = add[acc, mul[cj[:, i], row]]
        return acc


@functools.lru_cache(maxsize=None)
def ext_tables(L: QuadraticExtension) -> ExtTables:
    return ExtTables(L)


@functools.lru_cache(maxsize=None)
def ground_tables(K: FiniteField) -> GroundTables:
    return GroundTables(K)
