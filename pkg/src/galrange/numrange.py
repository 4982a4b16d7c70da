"""Numerical ranges Num(M) = {<u, M u> : <u, u> = 1}.

Three engines: exhaustive enumeration over finite fields (the oracle),
sampling over Q, and symbolic classification of 2x2 matrices, direct
sums and matrices with an eigenspace of codimension one.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Optional

import numpy as np

from .circles import Circle, circle_points
from .descriptions import (
    CenterCircleFamily,
    FiniteSet,
    PuncturedCoset,
    RangeDescription,
    SegmentJoin,
    Singleton,
    TraceLine,
    TwoPointCircleFamily,
    _segment_params,
)
from .errors import (
    HypothesisError,
    NotInLError,
    UnhandledConfigurationError,
    UnknownVerdictError,
)
from .fields import ExtScalar, QuadraticExtension, ext_quadratic_roots, rationals_by_height
from .linalg import (
    ExtMatrix,
    basis_vector,
    eigen_2x2,
    null_space,
    orthogonal_complement,
    orthonormal_subset,
    rank,
    sesq_form,
)
from .normsets import (
    find_norm_with_square_complement,
    norm_membership,
    sample_delta_segment,
    zero_in_hat_delta2,
)
from .tables import ext_tables

# ---------------------------------------------------------------------------
# Exhaustive engines (finite fields)


def _range_indices(M: ExtMatrix, delta: int, budget: Optional[int] = None) -> np.ndarray:
    t = ext_tables(M.field)
    vecs = t.sphere(M.n, delta, budget)
    if len(vecs) == 0:
        return np.array([], dtype=np.int64)
    return np.unique(t.form_values(M.index_array(t), vecs))


def num_range_exhaustive_indices(M: ExtMatrix, budget: Optional[int] = None) -> np.ndarray:
    if not M.field.is_finite:
        raise ValueError("exhaustive enumeration needs a finite field")
    return _range_indices(M, 1, budget)


def num_range_exhaustive(M: ExtMatrix, budget: Optional[int] = None) -> FiniteSet:
    """Every <u, M u> over the unit sphere, by brute force."""
    return FiniteSet.from_indices(M.field, num_range_exhaustive_indices(M, budget))


def num_range_zero_indices(M: ExtMatrix, budget: Optional[int] = None) -> np.ndarray:
    if not M.field.is_finite:
        raise ValueError("exhaustive enumeration needs a finite field")
    return _range_indices(M, 0, budget)


def num_range_zero(M: ExtMatrix, count: int = 100, budget: Optional[int] = None):
    """Num_0(M): values over <u, u> = 0, the zero vector included.

    Finite fields give the full set; over Q a list of sampled values.
    """
    L = M.field
    if L.is_finite:
        return FiniteSet.from_indices(L, num_range_zero_indices(M, budget))
    values = []
    seen = set()
    for u in islice(isotropic_vectors(L, M.n), count):
        v = sesq_form(u, M @ u)
        if v not in seen:
            seen.add(v)
            values.append(v)
    return values


# ---------------------------------------------------------------------------
# Sampling over Q


def _unit_vectors_1(L: QuadraticExtension) -> Iterator[tuple]:
    for z in circle_points(Circle(L.zero, 1), L.one):
        yield (z,)


def unit_vectors(L: QuadraticExtension, n: int) -> Iterator[tuple]:
    """Distinct u in L^n with <u, u> = 1: the basis vectors first, then
    (w_t, w_{1-t} v) for t from the Delta segment sampler and v a unit
    vector of L^{n-1}, pairs taken along anti-diagonals."""
    if n == 1:
        yield from _unit_vectors_1(L)
        return
    seen = set()
    for i in range(n):
        e = basis_vector(L, n, i)
        seen.add(e)
        yield e
    segment = sample_delta_segment(L)
    sub = unit_vectors(L, n - 1)
    seg_cache: list = []
    sub_cache: list = []
    k = 0
    while True:
        seg_cache.append(next(segment))
        sub_cache.append(next(sub))
        for i in range(k + 1):
            _, x, y = seg_cache[i]
            v = sub_cache[k - i]
            u = (x,) + tuple(y * a for a in v)
            if u not in seen:
                seen.add(u)
                yield u
        k += 1


def isotropic_vectors(L: QuadraticExtension, n: int) -> Iterator[tuple]:
    """The zero vector, then (if -1 is a norm) multiples of (1, w rho) placed
    in coordinate pairs, with norm(w) = -1 and rho on the unit circle."""
    yield tuple(L.zero for _ in range(n))
    if n < 2:
        return
    verdict = zero_in_hat_delta2(L)
    if verdict.answer != "Yes" or verdict.witness is None:
        return
    _, w = verdict.witness
    rhos = [r[0] for r in islice(_unit_vectors_1(L), 8)]
    for lam in islice(rationals_by_height(positive_only=True), 50):
        for rho in rhos:
            for i in range(n):
                for j in range(i + 1, n):
                    u = [L.zero] * n
                    u[i] = L(lam)
                    u[j] = w * rho * lam
                    yield tuple(u)


def num_range_sample(M: ExtMatrix, count: int) -> list[tuple]:
    """``count`` pairs (u, <u, M u>) with <u, u> = 1 checked exactly."""
    out = []
    for u in islice(unit_vectors(M.field, M.n), count):
        if sesq_form(u, u) != M.field.one:
            raise AssertionError(f"sampler produced a non-unit vector {u}")
        out.append((u, sesq_form(u, M @ u)))
    return out


# ---------------------------------------------------------------------------
# 2x2 classification


def _guard(L: QuadraticExtension, k, what: str) -> bool:
    """Is k in Delta^?  Unknown becomes an error carrying the query."""
    ans = norm_membership(L, k, nonzero=True)
    if ans == "Unknown":
        raise UnknownVerdictError(f"{what} = {k} in Delta")
    return ans == "Yes"


def classify_2x2(M: ExtMatrix) -> RangeDescription:
    """Symbolic Num(M) for a 2x2 matrix with eigenvalues in L."""
    if M.n != 2:
        raise ValueError("classify_2x2 needs a 2x2 matrix")
    L = M.field
    if M.is_scalar():
        return Singleton(M[0, 0])
    eig = eigen_2x2(M)
    if eig.status == "NotInL":
        raise NotInLError(f"characteristic polynomial t^2 - ({eig.charpoly[0]}) t + ({eig.charpoly[1]}) has no root in L")
    if eig.status == "Repeated":
        (c,) = eig.eigenvalues
        (v,) = eig.eigenvectors
        delta = sesq_form(v, v)
        N = M.shift(-c)
        if delta:
            w = (-v[1].conj(), v[0].conj())
            mu = sesq_form(v, N @ w) / delta
            return CenterCircleFamily(c, mu, delta.x)
        v = tuple(a / v[1] for a in v)  # now <v, e2> = 1
        mu = (N @ basis_vector(L, 2, 1))[1]
        return PuncturedCoset(c, mu)
    (c1, c2), (v1, v2) = eig.eigenvalues, eig.eigenvectors
    d1, d2 = sesq_form(v1, v1), sesq_form(v2, v2)
    g = sesq_form(v1, v2)
    if not d1 and not d2:
        return TraceLine(c1, c2)
    if not g:
        if _guard(L, d1.x, "<v1,v1>"):
            return SegmentJoin(c1, c2)
        raise UnhandledConfigurationError(
            f"orthogonal eigenvectors with <v,v> = {d1.x}, {d2.x} outside Delta"
        )
    for ci, co, v, d in ((c1, c2, v1, d1), (c2, c1, v2, d2)):
        if d and _guard(L, d.x, "<v,v>"):
            w = (-v[1].conj(), v[0].conj())
            mu = sesq_form(v, M @ w) / (d * (ci - co))
            return TwoPointCircleFamily(ci, co, mu)
    raise UnhandledConfigurationError(
        f"non-orthogonal eigenvectors with <v1,v1> = {d1.x}, <v2,v2> = {d2.x}, neither a nonzero norm"
    )


def membership_2x2(M: ExtMatrix, z) -> str:
    return classify_2x2(M).membership(z)


def make_isotropic_defective(L: QuadraticExtension, c, mu) -> ExtMatrix:
    """2x2 M with Num(M) = c + mu Delta^ and c an eigenvalue outside Num(M).

    From a pair (1, w) with norm(w) = -1 take v = (1/w, 1), so <v, e2> = 1,
    and define M by M v = c v, M e2 = mu v + c e2.
    """
    c, mu = L(c), L(mu)
    if not mu:
        raise ValueError("mu must be nonzero")
    verdict = zero_in_hat_delta2(L)
    if verdict.answer != "Yes":
        raise HypothesisError(f"0 is not a sum of two nonzero norms in {L.spec}; no isotropic eigenvector exists")
    if verdict.witness is None:
        raise HypothesisError("-1 is a norm but no witness was found within the search bound")
    _, w = verdict.witness
    v = (1 / w, L.one)
    n_e2 = (mu * v[0], mu * v[1])
    n_e1 = (-n_e2[0] / v[0], -n_e2[1] / v[0])  # from N v = v1 N e1 + N e2 = 0
    return ExtMatrix.from_columns(L, [n_e1, n_e2]).shift(c)


def rank_one_idempotent_range(b) -> TwoPointCircleFamily:
    """Num([[1, b], [0, 0]]) as {0, 1} ∪ circles C(norm(b) d (1 - d), d)."""
    L = b.field
    if not b:
        raise ValueError("b must be nonzero")
    return TwoPointCircleFamily(L.one, L.zero, b)


# ---------------------------------------------------------------------------
# Distinct values (characteristic 0)


def singleton_witness(M: ExtMatrix, bound: int = 200) -> Optional[tuple]:
    """None when M is scalar, else unit vectors u1, u2 with different <u, M u>.

    Distinct diagonal entries give basis vectors directly.  Otherwise pick
    the first nonzero off-diagonal m_ij, put b = m_ji / m_ij and use
    u = x e_i + y e_j: real (3/5, 4/5) when b != -1, and x in K, y in L \\ K
    with x^2 + norm(y) = 1 when b = -1.
    """
    L = M.field
    if L.characteristic != 0:
        raise ValueError("singleton_witness needs characteristic 0")
    n = M.n
    if M.is_scalar():
        return None
    for i in range(n):
        for j in range(i + 1, n):
            if M[i, i] != M[j, j]:
                return basis_vector(L, n, i), basis_vector(L, n, j)
    i, j = next((i, j) for i in range(n) for j in range(n) if i != j and M[i, j])
    b = M[j, i] / M[i, j]
    u1 = basis_vector(L, n, i)
    u2 = [L.zero] * n
    if b != -L.one:
        u2[i], u2[j] = L(3, 0) / 5, L(4, 0) / 5
    else:
        _, y, x = find_norm_with_square_complement(L, bound)
        u2[i], u2[j] = L(x), y
    u2 = tuple(u2)
    assert sesq_form(u2, u2) == L.one
    assert sesq_form(u1, M @ u1) != sesq_form(u2, M @ u2)
    return u1, u2


# ---------------------------------------------------------------------------
# Direct sums


@dataclass
class DirectSumSampler:
    """Sampling handle for Num(A ⊕ B) when the symbolic form is not certified.

    Values are <(x a, y b), M (x a, y b)> = t <a,Aa> + (1 - t) <b,Bb> with
    norm(x) = t, norm(y) = 1 - t and a, b unit vectors of the blocks.
    """

    A: ExtMatrix
    B: ExtMatrix

    def sample(self, count: int) -> list[ExtScalar]:
        L = self.A.field
        a_vals = [v for _, v in num_range_sample(self.A, 10)]
        b_vals = [v for _, v in num_range_sample(self.B, 10)]
        out, seen = [], set()

        def push(z):
            if z not in seen:
                seen.add(z)
                out.append(z)

        for v in a_vals + b_vals:
            push(v)
        for t, _, _ in sample_delta_segment(L):
            for a in a_vals:
                for b in b_vals:
                    push(a * t + b * (1 - t))
                    if len(out) >= count:
                        return out[:count]
        return out[:count]


def _block_sets(M: ExtMatrix) -> tuple[np.ndarray, np.ndarray]:
    if M.n == 1:
        t = ext_tables(M.field)
        return np.array([t.index(M[0, 0])]), np.array([0])
    return num_range_exhaustive_indices(M), num_range_zero_indices(M)


def direct_sum_indices(A: ExtMatrix, B: ExtMatrix) -> np.ndarray:
    """(Num_0(A) + Num(B)) ∪ (Num(A) + Num_0(B)) ∪ {t a + (1-t) b}, as table indices."""
    L = A.field
    t = ext_tables(L)
    nA, zA = _block_sets(A)
    nB, zB = _block_sets(B)
    parts = [
        t.add[zA[:, None], nB[None, :]].ravel(),
        t.add[nA[:, None], zB[None, :]].ravel(),
    ]
    one = L.ground.one
    for s in _segment_params(L):
        si, ri = t.ground.index(s), t.ground.index(one - s)
        parts.append(t.add[t.mul[si, nA][:, None], t.mul[ri, nB][None, :]].ravel())
    return np.unique(np.concatenate(parts))


def direct_sum_range(A: ExtMatrix, B: ExtMatrix):
    """Num(A ⊕ B): a FiniteSet over finite fields, a SegmentJoin for two
    1x1 blocks over Q, otherwise a DirectSumSampler."""
    L = A.field
    if L.is_finite:
        return FiniteSet.from_indices(L, direct_sum_indices(A, B))
    if A.n == 1 and B.n == 1:
        return SegmentJoin(A[0, 0], B[0, 0])
    return DirectSumSampler(A, B)


def open_segment(c: ExtScalar, d: ExtScalar) -> Iterator[ExtScalar]:
    """Distinct t c + (1 - t) d for t in Delta^ ∩ (1 - Delta^)."""
    L = c.field
    seen = set()
    for t, _, _ in sample_delta_segment(L):
        z = c * t + d * (L.ground.one - t)
        if z not in seen:
            seen.add(z)
            yield z
        if c == d:
            return


# ---------------------------------------------------------------------------
# Eigenspace of codimension one


@dataclass(frozen=True)
class Corank1Result:
    case: int
    c: ExtScalar
    frame: ExtMatrix  # unitary; columns f_1..f_{n-2}, g_1, g_2
    block: ExtMatrix  # M restricted to the last two frame vectors
    description: RangeDescription  # Num(block)

    def range_indices(self) -> np.ndarray:
        n = self.frame.n
        L = self.c.field
        return direct_sum_indices(ExtMatrix.identity(L, n - 2).scale(self.c), self.block)


_CASES = {
    SegmentJoin: 1,
    TwoPointCircleFamily: 2,
    CenterCircleFamily: 3,
    TraceLine: 4,
    PuncturedCoset: 5,
}


def _rank_one_shift(M: ExtMatrix) -> ExtScalar:
    """c with rank(M - c I) = 1, among roots of the leading principal 2x2 minor."""
    L = M.field
    a, b, c_, d = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    roots = ext_quadratic_roots(L.one, -(a + d), a * d - b * c_)
    for c in roots or []:
        if rank(M.shift(-c)) == 1:
            return c
    raise HypothesisError("no eigenvalue in L has an eigenspace of dimension n-1")


def classify_corank1(M: ExtMatrix) -> Corank1Result:
    """Split M unitarily as c I_{n-2} ⊕ B and name the case for B.

    The frame f_1..f_{n-2} is orthonormal inside
    ker(M - cI) ∩ ker(M^† - σ(c) I); that intersection is what makes the
    splitting unitary, so inputs where it is too small are rejected.
    """
    n = M.n
    L = M.field
    if n <= 2:
        raise ValueError("classify_corank1 needs n > 2")
    if M.is_scalar():
        raise HypothesisError("scalar matrix: the eigenspace has dimension n")
    c = _rank_one_shift(M)
    Mc = M.shift(-c)
    Mdc = M.dagger().shift(-c.conj())
    common = null_space([list(r) for r in Mc.rows] + [list(r) for r in Mdc.rows], L)
    if len(common) < n - 2:
        raise HypothesisError(
            f"ker(M - cI) ∩ ker(M^† - σ(c)I) has dimension {len(common)} < {n - 2}; "
            "no orthonormal frame of the eigenspace splits M unitarily"
        )
    fs = orthonormal_subset(common, n, n - 2)
    rest = orthogonal_complement(fs, n, L)
    gs = orthonormal_subset(rest, n, 2)
    frame = ExtMatrix.from_columns(L, fs + gs)
    conj = frame.dagger() @ M @ frame
    expected_top = ExtMatrix.identity(L, n - 2).scale(c)
    for i in range(n):
        for j in range(n):
            if (i < n - 2 or j < n - 2) and conj[i, j] != (expected_top[i, j] if i < n - 2 and j < n - 2 else L.zero):
                raise AssertionError("frame does not split M")
    block = ExtMatrix(L, [[conj[n - 2, n - 2], conj[n - 2, n - 1]], [conj[n - 1, n - 2], conj[n - 1, n - 1]]])
    desc = classify_2x2(block)
    case = _CASES.get(type(desc))
    if case is None:
        raise UnhandledConfigurationError(f"block classified as {desc.variant}")
    return Corank1Result(case, c, frame, block, desc)
