"""Random 2x2 test matrices over finite fields, one generator per
classification branch, plus random unitaries."""
from __future__ import annotations

import random

from .fields import QuadraticExtension
from .linalg import ExtMatrix, inverse_2x2, sesq_form
from .tables import ext_tables


def _rand_elt(L, rng: random.Random, nonzero: bool = False):
    t = ext_tables(L)
    lo = 1 if nonzero else 0
    return t.element(rng.randrange(lo, t.Q))


def _rand_sphere_vector(L, rng: random.Random, delta: int) -> tuple:
    t = ext_tables(L)
    rows = t.sphere(2, t.ground.index(L.ground(delta)))
    if delta == 0:
        rows = rows[(rows != 0).any(axis=1)]
    row = rows[rng.randrange(len(rows))]
    return tuple(t.element(i) for i in row)


def _outer(v, w, L) -> ExtMatrix:
    """The matrix x -> v <w, x>."""
    return ExtMatrix(L, [[v[i] * w[j].conj() for j in range(2)] for i in range(2)])


def random_unitary_2x2(L: QuadraticExtension, rng: random.Random) -> ExtMatrix:
    e = _rand_sphere_vector(L, rng, 1)
    t = ext_tables(L)
    circle = t.sphere(1, t.ground.index(L.ground.one))
    phase = t.element(circle[rng.randrange(len(circle))][0])
    f = (-e[1].conj() * phase, e[0].conj() * phase)
    return ExtMatrix.from_columns(L, [e, f])


def _distinct_pair(L, rng):
    c1 = _rand_elt(L, rng)
    c2 = _rand_elt(L, rng)
    while c2 == c1:
        c2 = _rand_elt(L, rng)
    return c1, c2


def gen_center_circle(L, rng, c=None) -> ExtMatrix:
    """Unique eigenvalue, non-isotropic eigenvector."""
    c = _rand_elt(L, rng) if c is None else L(c)
    while True:
        v = (_rand_elt(L, rng), _rand_elt(L, rng))
        if sesq_form(v, v):
            break
    w = (-v[1].conj(), v[0].conj())
    s = _rand_elt(L, rng, nonzero=True)
    return _outer(v, w, L).scale(s).shift(c)


def gen_punctured(L, rng, c=None) -> ExtMatrix:
    """Unique eigenvalue, isotropic eigenvector."""
    c = _rand_elt(L, rng) if c is None else L(c)
    v = _rand_sphere_vector(L, rng, 0)
    s = _rand_elt(L, rng, nonzero=True)
    return _outer(v, v, L).scale(s).shift(c)


def gen_segment(L, rng, eigs=None) -> ExtMatrix:
    """Unitarily diagonalizable with distinct eigenvalues."""
    c1, c2 = _distinct_pair(L, rng) if eigs is None else eigs
    U = random_unitary_2x2(L, rng)
    return U @ ExtMatrix.diag(L, [c1, c2]) @ U.dagger()


def _eigenbasis_matrix(L, rng, cols, eigs=None) -> ExtMatrix:
    c1, c2 = _distinct_pair(L, rng) if eigs is None else eigs
    P = ExtMatrix.from_columns(L, cols)
    return P @ ExtMatrix.diag(L, [c1, c2]) @ inverse_2x2(P)


def _independent(v1, v2) -> bool:
    return bool(v1[0] * v2[1] - v1[1] * v2[0])


def gen_two_point(L, rng, eigs=None) -> ExtMatrix:
    """Distinct eigenvalues, non-orthogonal eigenvectors, one of them non-isotropic."""
    while True:
        v1 = (_rand_elt(L, rng), _rand_elt(L, rng))
        v2 = (_rand_elt(L, rng), _rand_elt(L, rng))
        if not _independent(v1, v2) or not sesq_form(v1, v2):
            continue
        if sesq_form(v1, v1) or sesq_form(v2, v2):
            return _eigenbasis_matrix(L, rng, [v1, v2], eigs)


def gen_trace_line(L, rng, eigs=None) -> ExtMatrix:
    """Distinct eigenvalues, both eigenvectors isotropic."""
    while True:
        v1 = _rand_sphere_vector(L, rng, 0)
        v2 = _rand_sphere_vector(L, rng, 0)
        if _independent(v1, v2):
            return _eigenbasis_matrix(L, rng, [v1, v2], eigs)


def gen_rank_one_idempotent(L, rng) -> ExtMatrix:
    """[[1, b], [0, 0]], conjugated by a random unitary half of the time."""
    b = _rand_elt(L, rng, nonzero=True)
    M = ExtMatrix(L, [[L.one, b], [L.zero, L.zero]])
    if rng.random() < 0.5:
        U = random_unitary_2x2(L, rng)
        M = U.dagger() @ M @ U
    return M


def random_unitary(L: QuadraticExtension, rng: random.Random, n: int) -> ExtMatrix:
    """Permutation times norm-1 diagonal times a 2x2 unitary on a random coordinate pair."""
    t = ext_tables(L)
    circle = t.sphere(1, t.ground.index(L.ground.one))
    perm = list(range(n))
    rng.shuffle(perm)
    phases = [t.element(circle[rng.randrange(len(circle))][0]) for _ in range(n)]
    P = ExtMatrix(L, [[phases[i] if perm[i] == j else L.zero for j in range(n)] for i in range(n)])
    if n < 2:
        return P
    i, j = sorted(rng.sample(range(n), 2))
    V = random_unitary_2x2(L, rng)
    rows = [[L.one if a == b else L.zero for b in range(n)] for a in range(n)]
    for a, ia in enumerate((i, j)):
        for b, ib in enumerate((i, j)):
            rows[ia][ib] = V[a, b]
    return P @ ExtMatrix(L, rows)


def random_matrix(L, rng, n: int) -> ExtMatrix:
    return ExtMatrix(L, [[_rand_elt(L, rng) for _ in range(n)] for _ in range(n)])


BRANCH_GENERATORS = {
    "CenterCircleFamily": gen_center_circle,
    "PuncturedCoset": gen_punctured,
    "SegmentJoin": gen_segment,
    "TwoPointCircleFamily": gen_two_point,
    "TraceLine": gen_trace_line,
    "RankOneIdempotent": gen_rank_one_idempotent,
}
