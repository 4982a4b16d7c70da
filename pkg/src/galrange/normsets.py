"""Membership in the norm image Delta, its sums Delta_n, and the set
Delta^ ∩ (1 - Delta^) that drives open segments.

Over a finite field the norm is surjective, so every answer is Yes and a
witness comes from the cached norm fibers.  Over Q(sqrt d) membership in
Delta is decided by Hilbert symbols; witnesses come from a height-ordered
search and may be absent on a Yes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, Optional

from sympy.solvers.diophantine.diophantine import sum_of_four_squares

from .errors import MissingWitnessError, NotFoundWithinBound
from .fields import QQ, ExtScalar, QuadraticExtension, rationals_by_height
from .hilbert import norm_obstruction

DEFAULT_HEIGHT_BOUND = 200
# how many rationals per coordinate the Delta_n decomposition search tries
_SPLIT_SEARCH = 40


@dataclass(frozen=True)
class DeltaVerdict:
    answer: str  # "Yes" | "No" | "Unknown"
    witness: object = None  # ExtScalar for Delta, list of ExtScalar for Delta_n
    bound: Optional[int] = None
    obstruction: Optional[str] = None

    @property
    def yes(self) -> bool:
        return self.answer == "Yes"


def _ground(L: QuadraticExtension, k):
    return L.ground(k)


def _rational_witness(d: int, k: Fraction, bound: int) -> Optional[tuple[Fraction, Fraction]]:
    """(x, y) with x^2 - d y^2 = k, searching integer (Y, Z) by max(|Y|, Z) <= bound.

    With k = a/b the point is x = X/Z, y = Y/Z where b*(a Z^2 + b d Y^2) = (bX)^2.
    """
    a, b = k.numerator, k.denominator
    for h in range(1, bound + 1):
        # pairs with max(Y, Z) == h, ascending Z then Y
        pairs = [(z, h) for z in range(1, h)] + [(h, y) for y in range(0, h + 1)]
        pairs.sort()
        for z, y in pairs:
            s = b * (a * z * z + b * d * y * y)
            if s < 0:
                continue
            r = math.isqrt(s)
            if r * r == s:
                return Fraction(r, b * z), Fraction(y, z)
    return None


def in_delta(L: QuadraticExtension, k, bound: int = DEFAULT_HEIGHT_BOUND) -> DeltaVerdict:
    """Is k a norm from L?  Yes answers carry a witness w with norm(w) == k when found."""
    k = _ground(L, k)
    if not k:
        return DeltaVerdict("Yes", L.zero)
    if L.is_finite:
        return DeltaVerdict("Yes", L.norm_fibers()[k][0])
    obstruction = norm_obstruction(L.d, k)
    if obstruction is not None:
        return DeltaVerdict("No", obstruction=obstruction)
    found = _rational_witness(L.d, k, bound)
    if found is None:
        return DeltaVerdict("Yes", None, bound=bound)
    w = L(*found)
    assert w.norm() == k
    return DeltaVerdict("Yes", w, bound=bound)


def _four_square_witness(L: QuadraticExtension, k: Fraction, n: int) -> list[ExtScalar]:
    p, q = k.numerator, k.denominator
    s = sorted(sum_of_four_squares(p * q), reverse=True)
    parts = [Fraction(v, q) for v in s]
    if L.d == -1:
        ws = [L(parts[0], parts[1]), L(parts[2], parts[3])]
    else:
        ws = [L(v) for v in parts]
    return ws + [L.zero] * (n - len(ws))


def _search_split(L, k, n: int, bound: int) -> Optional[list[ExtScalar]]:
    """Bounded search for k = norm(w_1) + rest with rest in Delta_{n-1}."""
    coords = list(islice(rationals_by_height(), _SPLIT_SEARCH))
    for x in coords:
        for y in coords:
            w = L(x, y)
            rest = k - w.norm()
            if n - 1 == 1:
                if norm_obstruction(L.d, rest) is not None:
                    continue
                v = in_delta(L, rest, bound)
                if v.witness is not None:
                    return [w, v.witness]
            else:
                sub = _search_split(L, rest, n - 1, bound) if rest else [L.zero] * (n - 1)
                if sub is not None:
                    return [w] + sub
    return None


def in_delta_n(L: QuadraticExtension, k, n: int, bound: int = DEFAULT_HEIGHT_BOUND) -> DeltaVerdict:
    """Is k a sum of n norms?  Witness is a list of n elements whose norms sum to k."""
    if n < 1:
        raise ValueError("n must be positive")
    k = _ground(L, k)
    if n == 1:
        v = in_delta(L, k, bound)
        return DeltaVerdict(v.answer, None if v.witness is None else [v.witness], v.bound, v.obstruction)
    pad = [L.zero] * (n - 1)
    if not k:
        return DeltaVerdict("Yes", [L.zero] + pad)
    if L.is_finite:
        return DeltaVerdict("Yes", [in_delta(L, k).witness] + pad)
    single = in_delta(L, k, bound)
    if single.witness is not None:
        return DeltaVerdict("Yes", [single.witness] + pad, bound)
    if L.d < 0 and k < 0:
        return DeltaVerdict("No", obstruction="sign")
    if k > 0 and (n >= 4 or L.d == -1):
        return DeltaVerdict("Yes", _four_square_witness(L, k, n))
    minus_one = in_delta(L, -1, bound)
    if minus_one.witness is not None:
        # k = ((k+1)/2)^2 + norm(w) ((k-1)/2)^2 with norm(w) = -1
        w = minus_one.witness
        return DeltaVerdict("Yes", [L((k + 1) / 2), w * ((k - 1) / 2)] + pad[1:], bound)
    found = _search_split(L, k, min(n, 3), bound)
    if found is not None:
        return DeltaVerdict("Yes", found + [L.zero] * (n - len(found)), bound)
    return DeltaVerdict("Unknown", bound=bound)


def inverse_decomposition(k, witness) -> list[ExtScalar]:
    """From norms of a_i summing to k, the elements a_i / k whose norms sum to 1/k."""
    if witness is None:
        raise MissingWitnessError(f"no decomposition of {k} supplied")
    ws = [witness] if isinstance(witness, ExtScalar) else list(witness)
    if not ws:
        raise MissingWitnessError(f"no decomposition of {k} supplied")
    L = ws[0].field
    k = L.ground(k)
    if not k:
        raise ValueError("0 has no inverse")
    total = sum((w.norm() for w in ws[1:]), ws[0].norm())
    if total != k:
        raise MissingWitnessError(f"supplied decomposition sums to {total}, not {k}")
    return [w / k for w in ws]


def inv_in_delta_n_check(k, witness) -> bool:
    """Build the decomposition of 1/k from one of k and confirm it."""
    inv = inverse_decomposition(k, witness)
    total = sum((w.norm() for w in inv[1:]), inv[0].norm())
    return total == 1 / inv[0].field.ground(k)


def zero_in_hat_delta2(L: QuadraticExtension, bound: int = DEFAULT_HEIGHT_BOUND) -> DeltaVerdict:
    """0 is a sum of two nonzero norms iff -1 is a norm; witness is the pair (1, w)."""
    v = in_delta(L, -1, bound)
    if v.answer != "Yes":
        return v
    pair = None if v.witness is None else (L.one, v.witness)
    return DeltaVerdict("Yes", pair, v.bound)


def sample_delta_segment(L: QuadraticExtension) -> Iterator[tuple]:
    """Elements t with t and 1 - t both nonzero norms, as (t, w_t, w_1mt).

    Finite fields: every t outside {0, 1}, ascending.  Over Q: the family
    t = x^2 / (x^2 - d y^2) with x = 1 and y ranging over positive
    rationals by height.  Witnesses are square roots in K when those exist,
    otherwise w_t = x (x + y beta) / (x^2 - d y^2) and
    w_1mt = y beta (x + y beta) / (x^2 - d y^2).
    """
    if L.is_finite:
        fibers = L.norm_fibers()
        K = L.ground
        for t in sorted(K.elements(), key=K.key):
            if t and t != K.one:
                yield t, fibers[t][0], fibers[K.one - t][0]
        return
    K = L.ground
    for y in rationals_by_height(positive_only=True):
        z = L(1, y)
        nz = z.norm()
        t = 1 / nz
        st, su = K.sqrt(t), K.sqrt(1 - t)
        wt = L(st) if st is not None else z / nz
        wu = L(su) if su is not None else (L.beta * y) * z / nz
        yield t, wt, wu


def find_norm_with_square_complement(L: QuadraticExtension, bound: int = DEFAULT_HEIGHT_BOUND):
    """(m, z, w) with m = norm(z), 1 - m = w^2, w != 0, and z outside K ∪ K beta.

    Lines through (0, 0, 1) on x^2 - d y^2 + w^2 = 1 with direction
    (a, b, 1) meet it again at lambda = -2 / (a^2 - d b^2 + 1).
    """
    if L.ground is not QQ:
        raise ValueError("needs K = Q")
    seen: list[Fraction] = []
    for a in rationals_by_height(positive_only=False):
        if max(abs(a.numerator), a.denominator) > bound:
            break
        if not a:
            continue
        seen.append(a)
        for i, b in enumerate(seen):
            for aa, bb in ((a, b), (b, a)) if i < len(seen) - 1 else ((a, b),):
                den = aa * aa - L.d * bb * bb + 1
                if den == 0:
                    continue
                lam = Fraction(-2) / den
                x, y, w = lam * aa, lam * bb, 1 + lam
                if x and y and w:
                    z = L(x, y)
                    return z.norm(), z, w
    raise NotFoundWithinBound(f"no point found with coordinates of height <= {bound}")


def square_complement(z: ExtScalar):
    """sqrt(1 - norm(z)) in K when it is nonzero and z lies outside K ∪ K beta, else None."""
    if not z.x or not z.y:
        return None
    s = z.field.ground.sqrt(1 - z.norm())
    return s if s else None


def segment_membership(L: QuadraticExtension, t) -> str:
    """"Yes" / "No" / "Unknown" for t in Delta^ ∩ (1 - Delta^)."""
    K = L.ground
    t = K(t)
    if not t or t == K.one:
        return "No"
    answers = {in_delta(L, t, bound=0).answer, in_delta(L, K.one - t, bound=0).answer}
    if "No" in answers:
        return "No"
    return "Unknown" if "Unknown" in answers else "Yes"


def norm_membership(L: QuadraticExtension, k, nonzero: bool = False) -> str:
    """"Yes" / "No" / "Unknown" for k in Delta (or Delta^ when ``nonzero``)."""
    k = L.ground(k)
    if not k:
        return "No" if nonzero else "Yes"
    return in_delta(L, k, bound=0).answer
