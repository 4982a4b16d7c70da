"""The K-numerical range Num(M)_K of a matrix with entries in K: the values
of sum m_ij x_i x_j on the sphere x_1^2 + ... + x_n^2 = 1 in K^n."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .fields import QQ, rationals_by_height
from .tables import BudgetExceeded, enumeration_budget, ground_tables


@dataclass(frozen=True)
class KMatrix:
    field: object
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(self.field(e) for e in r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def form(self, x) -> object:
        n = self.n
        acc = self.field.zero
        for i in range(n):
            for j in range(n):
                acc = acc + self.rows[i][j] * x[i] * x[j]
        return acc

    def affine(self, c, d) -> "KMatrix":
        """c M + d I."""
        n = self.n
        return KMatrix(self.field, [[c * self.rows[i][j] + (d if i == j else 0) for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class KRangeResult:
    variant: str  # "SingletonK" | "FiniteSetK" | "FullField" | "SampledK"
    points: tuple = ()
    vectors: tuple = field(default=(), compare=False)


# ---------------------------------------------------------------------------


def _sphere_rows(K, n: int, budget: Optional[int] = None) -> np.ndarray:
    budget = enumeration_budget() if budget is None else budget
    q = K.q
    if q**n > budget:
        raise BudgetExceeded(f"{q ** n} vectors in K^{n} exceed budget {budget}")
    gt = ground_tables(K)
    vecs = np.indices((q,) * n).reshape(n, -1).T
    acc = np.zeros(len(vecs), dtype=np.int64)
    for i in range(n):
        acc = gt.add[acc, gt.mul[vecs[:, i], vecs[:, i]]]
    return vecs[acc == K.one.value]


def k_range_exhaustive_codes(M: KMatrix, budget: Optional[int] = None) -> np.ndarray:
    K = M.field
    if not getattr(K, "is_finite", False):
        raise ValueError("exhaustive K-range needs a finite field")
    gt = ground_tables(K)
    vecs = _sphere_rows(K, M.n, budget)
    acc = np.zeros(len(vecs), dtype=np.int64)
    for i in range(M.n):
        for j in range(M.n):
            m = M[i, j].value
            if m:
                acc = gt.add[acc, gt.mul[m, gt.mul[vecs[:, i], vecs[:, j]]]]
    return np.unique(acc)


def k_range_exhaustive(M: KMatrix, budget: Optional[int] = None) -> KRangeResult:
    """All values of the form of M on the K-sphere, by brute force."""
    K = M.field
    pts = tuple(K.element(int(c)) for c in k_range_exhaustive_codes(M, budget))
    return KRangeResult("FiniteSetK", pts)


def symmetrize(M: KMatrix, form: str = "symmetric") -> KMatrix:
    """A matrix with the same K-range: (m_ij + m_ji)/2 everywhere (char != 2),
    or the lower-triangular form with m_ij + m_ji below the diagonal."""
    K, n = M.field, M.n
    if form == "symmetric":
        if K.characteristic == 2:
            raise ValueError("the symmetric form needs characteristic != 2")
        half = K.one / (K.one + K.one)
        return KMatrix(K, [[(M[i, j] + M[j, i]) * half for j in range(n)] for i in range(n)])
    if form == "triangular":
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(M[i, i])
                elif i > j:
                    row.append(M[i, j] + M[j, i])
                else:
                    row.append(K.zero)
            rows.append(row)
        return KMatrix(K, rows)
    raise ValueError(f"unknown form {form!r}")


def is_singleton_K(M: KMatrix):
    """Structural test: c = m_11 when M - cI is antisymmetric (char != 2),
    or when the diagonal is constant and M is symmetric (char 2); else None."""
    K, n = M.field, M.n
    c = M[0, 0]
    if any(M[i, i] != c for i in range(n)):
        return None
    for i in range(n):
        for j in range(i + 1, n):
            if K.characteristic == 2:
                if M[i, j] != M[j, i]:
                    return None
            elif M[i, j] + M[j, i] != K.zero:
                return None
    return c


# ---------------------------------------------------------------------------
# Characteristic 2


@dataclass(frozen=True)
class Char2Reduction:
    poly: dict  # exponent tuple in x_1..x_{n-1} -> coefficient
    degree: int
    quadratic: dict  # the homogeneous degree-2 part
    classification: str  # "SingletonK" | "FullField" | "FiniteSetK"
    result: KRangeResult


def _poly_add(p: dict, mono: tuple, coeff) -> None:
    v = p.get(mono, coeff * 0) + coeff
    if v:
        p[mono] = v
    else:
        p.pop(mono, None)


def _linear_form(K, n: int, i: int) -> dict:
    """x_i as a polynomial in x_1..x_{n-1}, with x_n = 1 + x_1 + ... + x_{n-1}."""
    m = n - 1
    if i < m:
        return {tuple(int(k == i) for k in range(m)): K.one}
    p = {tuple([0] * m): K.one}
    for k in range(m):
        p[tuple(int(j == k) for j in range(m))] = K.one
    return p


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            _poly_add(out, tuple(x + y for x, y in zip(ma, mb)), ca * cb)
    return out


def char2_reduce(M: KMatrix, budget: Optional[int] = None) -> Char2Reduction:
    """Restrict the form to x_1 + ... + x_n = 1 (the K-sphere in characteristic 2)
    by substituting x_n = 1 + x_1 + ... + x_{n-1}."""
    K, n = M.field, M.n
    if K.characteristic != 2:
        raise ValueError("char2_reduce needs characteristic 2")
    if n == 1:
        poly = {(): M[0, 0]} if M[0, 0] else {}
    else:
        lin = [_linear_form(K, n, i) for i in range(n)]
        poly = {}
        for i in range(n):
            for j in range(n):
                if M[i, j]:
                    for mono, coeff in _poly_mul(lin[i], lin[j]).items():
                        _poly_add(poly, mono, M[i, j] * coeff)
    degree = max((sum(m) for m in poly), default=0)
    quadratic = {m: c for m, c in poly.items() if sum(m) == 2}
    if degree == 0:
        const = next(iter(poly.values()), K.zero)
        return Char2Reduction(poly, 0, quadratic, "SingletonK", KRangeResult("SingletonK", (const,)))
    if degree == 1:
        return Char2Reduction(poly, 1, quadratic, "FullField", KRangeResult("FullField", tuple(K.elements())))
    res = k_range_exhaustive(M, budget)
    return Char2Reduction(poly, 2, quadratic, "FiniteSetK", res)


# ---------------------------------------------------------------------------
# Sampling over Q


def sphere_points_Q(n: int) -> Iterator[tuple]:
    """Distinct rational points of x_1^2 + ... + x_n^2 = 1: the basis vectors,
    then stereographic projection from e_1 of parameter tuples in height order."""
    seen = set()
    for i in range(n):
        e = tuple(QQ.one if j == i else QQ.zero for j in range(n))
        seen.add(e)
        yield e
    if n == 1:
        return
    params: list = []
    source = rationals_by_height()
    k = 0
    while True:
        params.append(next(source))
        for tup in itertools.product(range(k + 1), repeat=n - 1):
            if max(tup) != k:
                continue
            s = [params[i] for i in tup]
            s2 = sum(x * x for x in s)
            lam = 2 / (1 + s2)
            x = (1 - lam,) + tuple(lam * v for v in s)
            if x not in seen:
                seen.add(x)
                yield x
        k += 1


def k_range_sample(M: KMatrix, count: int) -> KRangeResult:
    if M.field is not QQ:
        raise ValueError("k_range_sample needs K = Q")
    values, vectors = [], []
    for x in itertools.islice(sphere_points_Q(M.n), count):
        assert sum(v * v for v in x) == 1
        values.append(M.form(x))
        vectors.append(x)
    return KRangeResult("SampledK", tuple(values), tuple(vectors))
