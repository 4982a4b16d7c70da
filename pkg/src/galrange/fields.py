"""Exact arithmetic in the ground field K and in its quadratic extension L.

K is either the rationals (values are :class:`fractions.Fraction`) or a
finite field F_q, q = p**m, whose elements are :class:`FFElement`.  L is
K(beta) with either beta**2 = alpha (odd or zero characteristic) or
beta**2 = beta + eps (characteristic 2, Artin-Schreier).  Every value is
immutable.
"""
from __future__ import annotations

import functools
import math
import re
from fractions import Fraction
from typing import Iterator, Optional

import sympy


class FieldError(ValueError):
    """Invalid field construction or field spec string."""


# ---------------------------------------------------------------------------
# Rationals


class RationalField:
    characteristic = 0
    is_finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        if isinstance(value, FFElement):
            raise TypeError("finite field element is not rational")
        raise TypeError(f"cannot coerce {value!r} to a rational")

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    @property
    def spec(self) -> str:
        return "Q"

    def sqrt(self, x: Fraction) -> Optional[Fraction]:
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def is_square(self, x: Fraction) -> bool:
        return self.sqrt(x) is not None

    def key(self, x: Fraction):
        return x

    def format(self, x: Fraction) -> str:
        return str(x)

    def parse(self, text) -> Fraction:
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational {text!r}") from exc


QQ = RationalField()


def rationals_by_height(positive_only: bool = False) -> Iterator[Fraction]:
    """Every rational once, ordered by height max(|num|, den).

    Within a height: ascending denominator, then ascending |num|, positive
    before negative.  Zero comes first unless ``positive_only``.
    """
    if not positive_only:
        yield Fraction(0)
    h = 1
    while True:
        batch = []
        for q in range(1, h + 1):
            if math.gcd(h, q) == 1:
                batch.append((q, h))
        for p in range(1, h):
            if math.gcd(p, h) == 1:
                batch.append((h, p))
        batch.sort()
        for q, p in batch:
            yield Fraction(p, q)
            if not positive_only:
                yield Fraction(-p, q)
        h += 1


# ---------------------------------------------------------------------------
# Finite fields F_p[t]/(modulus)


def _poly_mulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    m = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # modulus is monic
    for k in range(len(out) - 1, m - 1, -1):
        c = out[k]
        if c:
            for j in range(m + 1):
                out[k - m + j] = (out[k - m + j] - c * mod[j]) % p
    return out[:m] + [0] * (m - len(out[:m]))


def _irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    return sympy.Poly(expr, x, modulus=p).is_irreducible


class FiniteField:
    """F_q with q = p**m.  Elements are encoded by the integer sum c_i p**i."""

    is_finite = True

    def __init__(self, p: int, m: int = 1, modulus: Optional[tuple[int, ...]] = None):
        if not sympy.isprime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("degree must be positive")
        self.p = p
        self.m = m
        self.q = p**m
        self.characteristic = p
        if m == 1:
            modulus = (0, 1)
        elif modulus is None:
            modulus = self._least_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of the field degree")
            if not _irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._elements = [FFElement(self, v) for v in range(self.q)]
        self.zero = self._elements[0]
        self.one = self._elements[1]
        if m > 1:
            self._build_tables()
        self._nonresidue = None
        if p != 2:
            for e in self._elements[1:]:
                if not self.is_square(e):
                    self._nonresidue = e
                    break

    @staticmethod
    def _least_irreducible(p: int, m: int) -> tuple[int, ...]:
        for v in range(p**m):
            coeffs = tuple((v // p**i) % p for i in range(m)) + (1,)
            if coeffs[0] and _irreducible(coeffs, p):
                return coeffs
        raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")

    def _digits(self, v: int) -> list[int]:
        p = self.p
        return [(v // p**i) % p for i in range(self.m)]

    def _undigits(self, ds) -> int:
        return sum(d * self.p**i for i, d in enumerate(ds))

    def _build_tables(self):
        q, p = self.q, self.p
        self._add = [0] * (q * q)
        self._neg = [0] * q
        digits = [self._digits(v) for v in range(q)]
        for a in range(q):
            da = digits[a]
            self._neg[a] = self._undigits([(-d) % p for d in da])
            for b in range(q):
                db = digits[b]
                self._add[a * q + b] = self._undigits([(x + y) % p for x, y in zip(da, db)])
        for g in range(2, q):
            exp = [1]
            cur = [1] + [0] * (self.m - 1)
            dg = digits[g]
            while True:
                cur = _poly_mulmod(cur, dg, self.modulus, p)
                v = self._undigits(cur)
                if v == 1:
                    break
                exp.append(v)
            if len(exp) == q - 1:
                break
        self._exp = exp
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i

    # -- element-level primitives on encoded ints
    def _iadd(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self._add[a * self.q + b]

    def _ineg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._neg[a]

    def _imul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def _iinv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    # -- public surface
    def __call__(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field is not self and value.field != self:
                raise TypeError("element of a different field")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            if self.m == 1:
                return self._elements[value % self.p]
            # integers map through the prime subfield
            return self._elements[value % self.p]
        if isinstance(value, Fraction):
            return self(value.numerator) / self(value.denominator)
        raise TypeError(f"cannot coerce {value!r} into F_{self.q}")

    def element(self, code: int) -> "FFElement":
        """Element with integer encoding ``code`` (base-p digits = coefficients)."""
        if not 0 <= code < self.q:
            raise FieldError(f"element code {code} out of range for F_{self.q}")
        return self._elements[code]

    def elements(self) -> list["FFElement"]:
        return list(self._elements)

    def __repr__(self) -> str:
        return f"F_{self.q}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    @property
    def spec(self) -> str:
        return f"F[{self.p}]" if self.m == 1 else f"F[{self.p}^{self.m}]"

    def is_square(self, x: "FFElement") -> bool:
        if self.p == 2 or x.value == 0:
            return True
        return x ** ((self.q - 1) // 2) == self.one

    def sqrt(self, x: "FFElement") -> Optional["FFElement"]:
        if x.value == 0:
            return self.zero
        if self.p == 2:
            return x ** (self.q // 2)
        if not self.is_square(x):
            return None
        q = self.q
        s, t = 0, q - 1
        while t % 2 == 0:
            t //= 2
            s += 1
        c = self._nonresidue**t
        r = x ** ((t + 1) // 2)
        b = x**t
        while b != self.one:
            i, bb = 0, b
            while bb != self.one:
                bb = bb * bb
                i += 1
            g = c ** (2 ** (s - i - 1))
            r = r * g
            c = g * g
            b = b * c
            s = i
        return r

    def absolute_trace(self, x: "FFElement") -> "FFElement":
        """Trace down to the prime field: x + x**p + ... + x**(p**(m-1))."""
        acc, cur = self.zero, x
        for _ in range(self.m):
            acc = acc + cur
            cur = cur**self.p
        return acc

    def key(self, x: "FFElement") -> int:
        return x.value

    def format(self, x: "FFElement") -> str:
        return str(x.value)

    def parse(self, text) -> "FFElement":
        try:
            code = int(str(text).strip())
        except ValueError as exc:
            raise FieldError(f"bad F_{self.q} element {text!r}") from exc
        return self.element(code)


@functools.lru_cache(maxsize=None)
def GF(p: int, m: int = 1, modulus: Optional[tuple[int, ...]] = None) -> FiniteField:
    """Cached finite field constructor; equal arguments give the same object."""
    return FiniteField(p, m, modulus)


class FFElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FFElement):
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field(other).value
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._elements[self.field._iadd(self.value, o)]

    __radd__ = __add__

    def __neg__(self):
        return self.field._elements[self.field._ineg(self.value)]

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        return f._elements[f._iadd(self.value, f._ineg(o))]

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        return f._elements[f._iadd(o, f._ineg(self.value))]

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._elements[self.field._imul(self.value, o)]

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        return f._elements[f._imul(self.value, f._iinv(o))]

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        return f._elements[f._imul(o, f._iinv(self.value))]

    def __pow__(self, e: int):
        f = self.field
        if e < 0:
            return (f.one / self) ** (-e)
        if self.value == 0:
            return f.one if e == 0 else self
        if f.m > 1:
            return f._elements[f._exp[(f._log[self.value] * e) % (f.q - 1)]]
        return f._elements[pow(self.value, e, f.p)]

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


def artin_schreier_root(a, n: int, delta):
    """Return s with s*s + s == a in a field of order 2**n, or None.

    ``delta`` must have absolute trace 1.  Uses the closed form
    s = sum_{i<n-1} (sum_{j>i} delta**(2**j)) * a**(2**i).
    """
    pa, pd = [a], [delta]
    for _ in range(1, n):
        pa.append(pa[-1] * pa[-1])
        pd.append(pd[-1] * pd[-1])
    s = a - a
    tail = a - a
    for i in range(n - 2, -1, -1):
        tail = tail + pd[i + 1]
        s = s + tail * pa[i]
    return s if s * s + s == a else None


# ---------------------------------------------------------------------------
# Quadratic extensions


def _squarefree_part(value: Fraction) -> tuple[int, Fraction]:
    """Write value = s**2 * d with d a squarefree integer; return (d, s)."""
    num = value.numerator * value.denominator
    sign = -1 if num < 0 else 1
    d, s = sign, 1
    for prime, e in sympy.factorint(abs(num)).items():
        if e % 2:
            d *= prime
        s *= prime ** (e // 2)
    return d, Fraction(s, value.denominator)


class QuadraticExtension:
    """L = K(beta), a degree-2 Galois extension of ``ground``.

    For K = Q the generator is normalized to beta = sqrt(d) with d a
    squarefree integer; ``alpha_input == alpha_scale**2 * d`` records the
    adjustment from the user's value.
    """

    def __init__(self, ground, alpha=None, eps=None):
        self.ground = ground
        self.characteristic = ground.characteristic
        self.is_finite = ground.is_finite
        self.alpha_input = None
        self.alpha_scale = None
        self._fibers = None
        if self.characteristic == 2:
            if alpha is not None:
                raise FieldError("square-root extensions are not Galois in characteristic 2; use as=")
            self.kind = "as"
            if eps is None:
                eps = next(e for e in ground.elements() if ground.absolute_trace(e) == ground.one)
            eps = ground(eps)
            if ground.absolute_trace(eps) != ground.one:
                raise FieldError(f"t^2+t+{eps} is reducible over {ground!r}")
            self.eps = eps
            self.alpha = None
        else:
            if eps is not None:
                raise FieldError("Artin-Schreier extensions need characteristic 2")
            self.kind = "sqrt"
            if ground is QQ:
                if alpha is None:
                    raise FieldError("Q needs an explicit sqrt= value")
                alpha = QQ(alpha)
                if alpha == 0:
                    raise FieldError("sqrt=0 does not give a field extension")
                d, s = _squarefree_part(alpha)
                if d == 1:
                    raise FieldError(f"{alpha} is a square in Q")
                self.alpha_input = alpha
                self.alpha_scale = s
                self.d = d
                alpha = Fraction(d)
            else:
                if alpha is None:
                    alpha = ground._nonresidue
                alpha = ground(alpha)
                if ground.is_square(alpha):
                    raise FieldError(f"{alpha} is a square in {ground!r}")
            self.alpha = alpha
            self.eps = None
        self.zero = ExtScalar(self, ground.zero, ground.zero)
        self.one = ExtScalar(self, ground.one, ground.zero)
        self.beta = ExtScalar(self, ground.zero, ground.one)

    def __call__(self, x=0, y=0) -> "ExtScalar":
        if isinstance(x, ExtScalar):
            return x
        g = self.ground
        return ExtScalar(self, g(x), g(y))

    def __repr__(self) -> str:
        return self.spec

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadraticExtension)
            and self.ground == other.ground
            and self.alpha == other.alpha
            and self.eps == other.eps
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.alpha, self.eps))

    @property
    def spec(self) -> str:
        g = self.ground
        if self.kind == "as":
            return f"{g.spec}[as={g.format(self.eps)}]"
        if g is QQ:
            return f"Q[sqrt={self.d}]"
        return f"{g.spec}[sqrt={g.format(self.alpha)}]"

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise ValueError("L is infinite")
        return self.ground.q**2

    def elements(self) -> list["ExtScalar"]:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite field")
        ks = self.ground.elements()
        return [ExtScalar(self, x, y) for y in ks for x in ks]

    def norm_fibers(self) -> dict:
        """Finite fields: map k -> sorted list of z with norm(z) == k."""
        if self._fibers is None:
            fibers: dict = {}
            for z in self.elements():
                fibers.setdefault(z.norm(), []).append(z)
            self._fibers = fibers
        return self._fibers

    def key(self, z: "ExtScalar"):
        return (self.ground.key(z.x), self.ground.key(z.y))

    def format(self, z: "ExtScalar") -> list[str]:
        return [self.ground.format(z.x), self.ground.format(z.y)]

    def parse(self, obj) -> "ExtScalar":
        g = self.ground
        if isinstance(obj, (list, tuple)):
            if len(obj) != 2:
                raise FieldError(f"extension scalar needs two coordinates, got {obj!r}")
            return ExtScalar(self, g.parse(obj[0]), g.parse(obj[1]))
        return ExtScalar(self, g.parse(obj), g.zero)


class ExtScalar:
    """x + y*beta in L, with x, y in the ground field."""

    __slots__ = ("field", "x", "y")

    def __init__(self, field: QuadraticExtension, x, y):
        self.field = field
        self.x = x
        self.y = y

    def _lift(self, other):
        if isinstance(other, ExtScalar):
            return other
        if isinstance(other, (int, Fraction, FFElement)):
            g = self.field.ground
            return ExtScalar(self.field, g(other), g.zero)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar(self.field, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar(self.field, -self.x, -self.y)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar(self.field, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar(self.field, o.x - self.x, o.y - self.y)

    def __mul__(self, other):
        f = self.field
        if isinstance(other, ExtScalar):
            a, b, c, d = self.x, self.y, other.x, other.y
            bd = b * d
            if f.kind == "sqrt":
                return ExtScalar(f, a * c + f.alpha * bd, a * d + b * c)
            return ExtScalar(f, a * c + f.eps * bd, a * d + b * c + bd)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar(f, self.x * o.x, self.y * o.x)

    __rmul__ = __mul__

    def conj(self) -> "ExtScalar":
        if self.field.kind == "sqrt":
            return ExtScalar(self.field, self.x, -self.y)
        return ExtScalar(self.field, self.x + self.y, self.y)

    def norm(self):
        f = self.field
        if f.kind == "sqrt":
            return self.x * self.x - f.alpha * self.y * self.y
        return self.x * (self.x + self.y) + f.eps * self.y * self.y

    def trace(self):
        if self.field.kind == "sqrt":
            return self.x + self.x
        return self.y

    def inverse(self) -> "ExtScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in L")
        c = self.conj()
        return ExtScalar(self.field, c.x / n, c.y / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.y:
            if not o.x:
                raise ZeroDivisionError("division by zero in L")
            return ExtScalar(self.field, self.x / o.x, self.y / o.x)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_ground(self) -> bool:
        return not self.y

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __eq__(self, other):
        if isinstance(other, ExtScalar):
            return self.x == other.x and self.y == other.y
        if isinstance(other, (int, Fraction, FFElement)):
            return not self.y and self.x == other
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        if not self.y:
            return f"{self.x}"
        if not self.x:
            return f"{self.y}β"
        if isinstance(self.y, Fraction) and self.y < 0:
            return f"{self.x}-{-self.y}β"
        return f"{self.x}+{self.y}β"


# ---------------------------------------------------------------------------
# Free-function surface


def conj(z: ExtScalar) -> ExtScalar:
    return z.conj()


def norm(z: ExtScalar):
    return z.norm()


def trace(z: ExtScalar):
    return z.trace()


def solve_ground_quadratic(field, a, b, c) -> list:
    """Roots in K of a*t**2 + b*t + c (a may be zero).  Empty list if none.

    The all-zero polynomial raises ValueError.
    """
    if a == 0:
        if b == 0:
            if c == 0:
                raise ValueError("zero polynomial has every root")
            return []
        return [-c / b]
    if field.characteristic != 2:
        disc = b * b - 4 * a * c
        s = field.sqrt(disc)
        if s is None:
            return []
        r1, r2 = (-b + s) / (2 * a), (-b - s) / (2 * a)
        return [r1] if r1 == r2 else sorted({r1, r2}, key=field.key)
    # characteristic 2
    if b == 0:
        return [field.sqrt(c / a)]
    # t = (b/a) s  =>  s^2 + s = a c / b^2
    target = a * c / (b * b)
    delta = next(e for e in field.elements() if field.absolute_trace(e) == field.one)
    s = artin_schreier_root(target, field.m, delta)
    if s is None:
        return []
    r1, r2 = b / a * s, b / a * (s + 1)
    return sorted({r1, r2}, key=field.key)


def sqrt_in_ext(z: ExtScalar) -> Optional[ExtScalar]:
    """A square root of z inside L, or None when z is not a square in L."""
    L = z.field
    K = L.ground
    if not z:
        return L.zero
    if L.characteristic == 2:
        # squaring is a bijection on a finite field of characteristic 2
        w = z
        for _ in range(2 * K.m - 1):
            w = w * w
        return w
    x, y = z.x, z.y
    if not y:
        s = K.sqrt(x)
        if s is not None:
            return L(s, K.zero)
        s = K.sqrt(x / L.alpha)
        if s is not None:
            return L(K.zero, s)
        return None
    s = K.sqrt(z.norm())
    if s is None:
        return None
    for cand in ((x + s) / 2, (x - s) / 2):
        a = K.sqrt(cand)
        if a is not None and a != 0:
            w = L(a, y / (2 * a))
            if w * w == z:
                return w
    return None


def ext_quadratic_roots(a: ExtScalar, b: ExtScalar, c: ExtScalar) -> Optional[list[ExtScalar]]:
    """Roots in L of a t^2 + b t + c with a != 0, or None when they lie outside L."""
    L = a.field
    if L.characteristic != 2:
        disc = b * b - 4 * a * c
        s = sqrt_in_ext(disc)
        if s is None:
            return None
        r1, r2 = (-b + s) / (2 * a), (-b - s) / (2 * a)
        return [r1] if r1 == r2 else [r1, r2]
    b, c = b / a, c / a
    if not b:
        r = sqrt_in_ext(c)
        return [r]
    delta = L(L.ground.zero, L.eps)  # eps*beta has absolute trace 1
    s = artin_schreier_root(c / (b * b), 2 * L.ground.m, delta)
    if s is None:
        return None
    return [b * s, b * (s + 1)]


# ---------------------------------------------------------------------------
# Spec strings

_Q_RE = re.compile(r"^Q(?:\[sqrt=(-?\d+(?:/\d+)?)\])?$")
_F_RE = re.compile(r"^F\[(\d+)(?:\^(\d+))?\](?:\[(sqrt|as)=(\d+)\])?$")


def parse_field_spec(text: str):
    """Parse ``Q[sqrt=d]``, ``F[p^m][sqrt=e]``, ``F[2^m][as=e]`` or a bare ground spec.

    Returns a QuadraticExtension, or the ground field when no generator
    clause is present for Q.  Bare ``F[...]`` selects the default generator.
    """
    text = text.replace(" ", "")
    m = _Q_RE.match(text)
    if m:
        if m.group(1) is None:
            return QQ
        return QuadraticExtension(QQ, alpha=Fraction(m.group(1)))
    m = _F_RE.match(text)
    if m:
        p = int(m.group(1))
        deg = int(m.group(2) or 1)
        K = GF(p, deg)
        kind, code = m.group(3), m.group(4)
        if kind is None:
            return QuadraticExtension(K)
        elt = K.element(int(code))
        if kind == "sqrt":
            return QuadraticExtension(K, alpha=elt)
        return QuadraticExtension(K, eps=elt)
    raise FieldError(f"unrecognized field spec {text!r}")


def parse_ground_spec(text: str):
    """Ground field K named by a spec; extension clauses are accepted and dropped."""
    f = parse_field_spec(text)
    return f.ground if isinstance(f, QuadraticExtension) else f
