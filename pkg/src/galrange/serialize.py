"""JSON and CSV encodings.  Scalars of L are ``[x, y]`` pairs of exact
ground-field strings; ground scalars are plain strings."""
from __future__ import annotations

import csv
import io
import json
import math

from .fields import QQ, ExtScalar, FieldError, FFElement, QuadraticExtension
from .krange import KMatrix, KRangeResult
from .linalg import ExtMatrix


def ground_to_json(K, x) -> str:
    return K.format(x)


def scalar_to_json(z: ExtScalar) -> list[str]:
    return z.field.format(z)


def to_json(obj):
    """Recursively encode scalars, vectors, matrices and containers."""
    if isinstance(obj, ExtScalar):
        return scalar_to_json(obj)
    if isinstance(obj, ExtMatrix):
        return matrix_to_json(obj)
    if isinstance(obj, FFElement):
        return obj.field.format(obj)
    if isinstance(obj, (list, tuple)):
        return [to_json(o) for o in obj]
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    # Fraction
    return QQ.format(obj)


def matrix_to_json(M: ExtMatrix) -> dict:
    return {"n": M.n, "entries": [[scalar_to_json(e) for e in row] for row in M.rows]}


def _check_shape(obj) -> list:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise FieldError('matrix JSON needs an "entries" field')
    rows = obj["entries"]
    n = obj.get("n", len(rows))
    if len(rows) != n or any(len(r) != n for r in rows):
        raise FieldError(f"matrix JSON is not {n}x{n}")
    return rows


def matrix_from_json(L: QuadraticExtension, obj) -> ExtMatrix:
    rows = _check_shape(obj)
    return ExtMatrix(L, [[L.parse(e) for e in row] for row in rows])


def kmatrix_from_json(K, obj) -> KMatrix:
    """Ground matrix; entries may be plain strings or [x, "0"] pairs."""
    rows = _check_shape(obj)

    def parse(e):
        if isinstance(e, (list, tuple)):
            if len(e) != 2 or K.parse(e[1]) != K.zero:
                raise FieldError(f"entry {e!r} is not in K")
            e = e[0]
        return K.parse(e)

    return KMatrix(K, [[parse(e) for e in row] for row in rows])


def kmatrix_to_json(M: KMatrix) -> dict:
    K = M.field
    return {"n": M.n, "entries": [[K.format(e) for e in row] for row in M.rows]}


def description_to_json(desc) -> dict:
    return {"variant": desc.variant, **to_json(desc.payload())}


def verdict_to_json(v) -> dict:
    return {"answer": v.answer, "witness": to_json(v.witness), "bound": v.bound, "obstruction": v.obstruction}


def krange_to_json(K, r: KRangeResult) -> dict:
    out = {"variant": r.variant, "points": [K.format(p) for p in r.points]}
    if r.vectors:
        out["vectors"] = [[K.format(x) for x in v] for v in r.vectors]
    return out


def approx(z: ExtScalar) -> list[float]:
    """Lossy floating rendering of an element of Q(sqrt d): (x, y sqrt|d|) for
    d < 0, the two real embeddings for d > 0."""
    L = z.field
    if L.is_finite:
        raise ValueError("approximation only makes sense over Q")
    r = math.sqrt(abs(L.d))
    x, y = float(z.x), float(z.y)
    if L.d < 0:
        return [x, y * r]
    return [x + y * r, x - y * r]


def points_to_csv(points, with_approx: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["coeff0", "coeff1"] + (["approx0", "approx1"] if with_approx else [])
    w.writerow(header)
    for z in points:
        row = scalar_to_json(z)
        if with_approx:
            row += [repr(a) for a in approx(z)]
        w.writerow(row)
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))
