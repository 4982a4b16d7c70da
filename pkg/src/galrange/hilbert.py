"""Hilbert symbols over Q and the local-global test for x^2 - d y^2 = k."""
from __future__ import annotations

from fractions import Fraction

from sympy import factorint


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _split(a: int, p: int) -> tuple[int, int]:
    """a = p^v * u with p not dividing u."""
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v, a


def _square_class(x: Fraction) -> int:
    """Integer in the same square class as x (num * den)."""
    return x.numerator * x.denominator


def hilbert_symbol(a, b, p) -> int:
    """(a, b)_p for nonzero rationals a, b; p a prime or the string "inf"."""
    a, b = _square_class(Fraction(a)), _square_class(Fraction(b))
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if p == "inf":
        return -1 if a < 0 and b < 0 else 1
    va, u = _split(a, p)
    vb, w = _split(b, p)
    if p != 2:
        eps = (p - 1) // 2
        sign = -1 if (va * vb * eps) % 2 else 1
        return sign * _legendre(u, p) ** vb * _legendre(w, p) ** va
    e = lambda t: ((t - 1) // 2) % 2  # noqa: E731
    o = lambda t: ((t * t - 1) // 8) % 2  # noqa: E731
    exponent = e(u) * e(w) + va * o(w) + vb * o(u)
    return -1 if exponent % 2 else 1


def relevant_places(d: int, k: Fraction) -> list:
    """Odd primes dividing 2*d*num(k)*den(k) in ascending order, then 2, then inf."""
    primes = set()
    for n in (d, k.numerator, k.denominator):
        if abs(n) > 1:
            primes.update(factorint(abs(n)))
    odd = sorted(p for p in primes if p != 2)
    return odd + [2, "inf"]


def norm_obstruction(d: int, k) -> str | None:
    """First place where x^2 - d y^2 = k fails locally, or None if it is solvable.

    Returns ``"p=<prime>"`` or ``"inf"``.
    """
    k = Fraction(k)
    if k == 0:
        return None
    for place in relevant_places(d, k):
        if hilbert_symbol(d, k, place) == -1:
            return "inf" if place == "inf" else f"p={place}"
    return None
