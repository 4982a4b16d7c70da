"""Vectors and matrices over L: the sesquilinear form, dagger, unitarity,
exact kernels, the 2x2 eigensolver and orthonormal frames.

Vectors are plain tuples of :class:`ExtScalar`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import HypothesisError, MissingWitnessError
from .fields import ExtScalar, QuadraticExtension, ext_quadratic_roots

Vector = tuple


class ExtMatrix:
    """Dense square matrix over L, stored row-major."""

    __slots__ = ("field", "rows")

    def __init__(self, field: QuadraticExtension, rows):
        rows = tuple(tuple(field(e) for e in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field, n: int) -> "ExtMatrix":
        return cls.diag(field, [field.one] * n)

    @classmethod
    def diag(cls, field, values) -> "ExtMatrix":
        n = len(values)
        return cls(field, [[values[i] if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field, cols) -> "ExtMatrix":
        n = len(cols)
        return cls(field, [[cols[j][i] for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, ExtMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExtMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "ExtMatrix") -> "ExtMatrix":
        return ExtMatrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExtMatrix") -> "ExtMatrix":
        return ExtMatrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "ExtMatrix":
        return ExtMatrix(self.field, [[c * a for a in r] for r in self.rows])

    def shift(self, c) -> "ExtMatrix":
        """self + c*I."""
        return self + ExtMatrix.identity(self.field, self.n).scale(c)

    def __matmul__(self, other):
        if isinstance(other, ExtMatrix):
            cols = [other.column(j) for j in range(other.n)]
            return ExtMatrix(self.field, [[_dot(r, c) for c in cols] for r in self.rows])
        return tuple(_dot(r, other) for r in self.rows)

    def dagger(self) -> "ExtMatrix":
        n = self.n
        return ExtMatrix(self.field, [[self.rows[j][i].conj() for j in range(n)] for i in range(n)])

    def is_scalar(self) -> bool:
        c = self.rows[0][0]
        return self == ExtMatrix.identity(self.field, self.n).scale(c)

    def index_array(self, tables) -> np.ndarray:
        return np.array([[tables.index(e) for e in r] for r in self.rows], dtype=np.int64)


def _dot(row, col):
    acc = row[0] * col[0]
    for a, b in zip(row[1:], col[1:]):
        acc = acc + a * b
    return acc


def sesq_form(u: Sequence[ExtScalar], v: Sequence[ExtScalar]) -> ExtScalar:
    """<u, v> = sum conj(u_i) v_i, conjugate-linear in the first slot."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    acc = u[0].conj() * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a.conj() * b
    return acc


def dagger(M: ExtMatrix) -> ExtMatrix:
    return M.dagger()


def is_unitary(M: ExtMatrix) -> bool:
    return M.dagger() @ M == ExtMatrix.identity(M.field, M.n)


def direct_sum(A: ExtMatrix, B: ExtMatrix) -> ExtMatrix:
    L = A.field
    n, k = A.n, B.n
    rows = []
    for i in range(n + k):
        row = []
        for j in range(n + k):
            if i < n and j < n:
                row.append(A[i, j])
            elif i >= n and j >= n:
                row.append(B[i - n, j - n])
            else:
                row.append(L.zero)
        rows.append(row)
    return ExtMatrix(L, rows)


def basis_vector(field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def scale_vector(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def add_vectors(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def canonical_vector(v: Vector) -> Vector:
    """Scale so the first nonzero coordinate is 1."""
    for a in v:
        if a:
            return tuple(b / a for b in v)
    raise ValueError("zero vector has no canonical form")


# ---------------------------------------------------------------------------
# Exact elimination


def row_echelon(rows: list[list[ExtScalar]]) -> tuple[list[list[ExtScalar]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * a for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M: ExtMatrix) -> int:
    return len(row_echelon([list(r) for r in M.rows])[1])


def null_space(rows: list[list[ExtScalar]], field: QuadraticExtension) -> list[Vector]:
    """Basis of {x : rows @ x = 0}, each vector canonical."""
    ncols = len(rows[0])
    red, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [field.zero] * ncols
        x[fc] = field.one
        for r, pc in enumerate(pivots):
            x[pc] = -red[r][fc]
        basis.append(canonical_vector(tuple(x)))
    return basis


def kernel(M: ExtMatrix) -> list[Vector]:
    return null_space([list(r) for r in M.rows], M.field)


def orthogonal_complement(vectors: Sequence[Vector], n: int, field) -> list[Vector]:
    """Basis of {x in L^n : <v, x> = 0 for every v}."""
    if not vectors:
        return [basis_vector(field, n, i) for i in range(n)]
    return null_space([[a.conj() for a in v] for v in vectors], field)


def inverse_2x2(M: ExtMatrix) -> ExtMatrix:
    (a, b), (c, d) = M.rows
    det = a * d - b * c
    if not det:
        raise ZeroDivisionError("singular matrix")
    return ExtMatrix(M.field, [[d / det, -b / det], [-c / det, a / det]])


# ---------------------------------------------------------------------------
# 2x2 eigen data


@dataclass(frozen=True)
class EigenData2x2:
    status: str  # "TwoDistinct" | "Repeated" | "NotInL"
    eigenvalues: tuple = ()
    eigenvectors: tuple = ()
    eigenspace_dim: Optional[int] = None
    charpoly: tuple = field(default=())  # (trace, det): t^2 - trace*t + det


def _eigvec(M: ExtMatrix, lam: ExtScalar) -> Vector:
    (a, b), (c, d) = M.rows
    a, d = a - lam, d - lam
    if a or b:
        return canonical_vector((b, -a))
    if c or d:
        return canonical_vector((d, -c))
    return (M.field.one, M.field.zero)


def eigen_2x2(M: ExtMatrix) -> EigenData2x2:
    if M.n != 2:
        raise ValueError("eigen_2x2 needs a 2x2 matrix")
    L = M.field
    (a, b), (c, d) = M.rows
    tr, det = a + d, a * d - b * c
    roots = ext_quadratic_roots(L.one, -tr, det)
    if roots is None:
        return EigenData2x2("NotInL", charpoly=(tr, det))
    if len(roots) == 1:
        lam = roots[0]
        dim = 2 - rank(M.shift(-lam))
        if dim == 2:
            vecs = (basis_vector(L, 2, 0), basis_vector(L, 2, 1))
        else:
            vecs = (_eigvec(M, lam),)
        return EigenData2x2("Repeated", (lam,), vecs, dim, (tr, det))
    roots = sorted(roots, key=L.key)
    vecs = tuple(_eigvec(M, lam) for lam in roots)
    return EigenData2x2("TwoDistinct", tuple(roots), vecs, None, (tr, det))


# ---------------------------------------------------------------------------
# Orthonormal frames


def unit_scaling(v: Vector):
    """t with <t v, t v> = 1, or raise when <v, v> has no inverse norm witness."""
    from .normsets import in_delta  # local import: normsets is higher in the stack

    delta = sesq_form(v, v)
    if not delta:
        raise HypothesisError("isotropic vector cannot be normalized")
    verdict = in_delta(delta.field, 1 / delta.x)
    if verdict.answer != "Yes" or verdict.witness is None:
        raise MissingWitnessError(f"no norm witness for 1/{delta.x}")
    return verdict.witness


def _non_isotropic(work: list[Vector]):
    for k, u in enumerate(work):
        if sesq_form(u, u):
            return u, k
    for i in range(len(work)):
        for j in range(i + 1, len(work)):
            g = sesq_form(work[i], work[j])
            if not g:
                continue
            L = g.field
            for lam in (1 / g, L.beta / g):
                cand = add_vectors(work[i], scale_vector(lam, work[j]))
                if sesq_form(cand, cand):
                    return cand, i
    return None, None


def orthonormal_subset(basis: Sequence[Vector], n: int, count: Optional[int] = None) -> list[Vector]:
    """Orthonormal vectors f_1..f_count inside span(basis).

    The default count is max(3m - 2n, 0) for an m-dimensional span in L^n.
    Each step takes the first basis vector with nonzero self-pairing (or a
    two-term combination when every basis vector is isotropic), rescales it
    to unit length through a norm witness and passes to its orthogonal
    complement inside the current span.
    """
    m = len(basis)
    if count is None:
        count = max(3 * m - 2 * n, 0)
    if count > m:
        raise HypothesisError(f"cannot find {count} orthonormal vectors in a {m}-dimensional span")
    work = [tuple(v) for v in basis]
    out: list[Vector] = []
    while len(out) < count:
        g, drop = _non_isotropic(work)
        if g is None:
            raise HypothesisError(
                f"span is totally isotropic after {len(out)} steps; cannot continue the frame"
            )
        f = scale_vector(unit_scaling(g), g)
        out.append(f)
        work = [
            add_vectors(u, scale_vector(-sesq_form(f, u), f))
            for k, u in enumerate(work)
            if k != drop
        ]
    return out
