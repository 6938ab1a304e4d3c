"""Exact arithmetic on numbers of the form ``a + b*sqrt(q)`` with rational parts.

Every coordinate produced by an equal-radius disk arrangement with rational
centers and rational squared radius lives in such a field: disk tops are
``cy + sqrt(r2)``, circle intersections are ``m + u*sqrt(w)``.  Comparisons
first try a floating-point filter and fall back to exact sign evaluation by
repeated squaring only when the float gap is inside the error bound.
"""

import math
from decimal import Decimal
from fractions import Fraction

__all__ = ["to_fraction", "Surd", "sign_surd", "sign_surd2", "surd_sqrt", "sqrt_to_float", "rational_between"]

# relative error bound for the float filter; generous on purpose
_FILTER = 1e-11
_ZERO = Fraction(0)


def to_fraction(x):
    """Interpret ``x`` as an exact rational.

    Floats are read through their shortest decimal representation, so
    ``0.1`` becomes ``1/10`` rather than the binary expansion.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    f = float(x)
    if not math.isfinite(f):
        raise ValueError(f"cannot represent {x!r} exactly")
    return Fraction(repr(f))


def _sgn(x):
    return (x > 0) - (x < 0)


def _rational_sqrt(q):
    """Exact square root of a nonnegative rational, or ``None``."""
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sign_surd(a, b, q):
    """Sign of ``a + b*sqrt(q)`` for rationals ``a, b`` and ``q >= 0``."""
    sb = _sgn(b) if q != 0 else 0
    sa = _sgn(a)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    diff = a * a - b * b * q
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def sign_surd2(a, b, p, c, q):
    """Sign of ``a + b*sqrt(p) + c*sqrt(q)``, all parts rational."""
    sy = _sign_pair(b, p, c, q)
    sa = _sgn(a)
    if sy == 0:
        return sa
    if sa == 0 or sa == sy:
        return sy
    # |a| against |b sqrt(p) + c sqrt(q)|, squared
    s = sign_surd(a * a - b * b * p - c * c * q, -2 * b * c, p * q)
    if s > 0:
        return sa
    if s < 0:
        return sy
    return 0


def _sign_pair(b, p, c, q):
    s1 = _sgn(b) if p != 0 else 0
    s2 = _sgn(c) if q != 0 else 0
    if s1 == 0:
        return s2
    if s2 == 0 or s1 == s2:
        return s1
    diff = b * b * p - c * c * q
    if diff > 0:
        return s1
    if diff < 0:
        return s2
    return 0


class Surd:
    """The real number ``a + b*sqrt(q)``.

    Instances are immutable and totally ordered; mixing with ``Fraction`` or
    ``int`` works for comparisons and for the few arithmetic operations the
    sweep needs (addition and subtraction of rationals, negation).
    """

    __slots__ = ("a", "b", "q", "approx", "_mag")

    def __init__(self, a, b=0, q=0):
        a = a if type(a) is Fraction else Fraction(a)
        if b and q:
            b = b if type(b) is Fraction else Fraction(b)
            q = q if type(q) is Fraction else Fraction(q)
            if q < 0:
                raise ValueError("negative radicand")
            root = _rational_sqrt(q)
            if root is not None:
                a, b, q = a + b * root, _ZERO, _ZERO
        else:
            if q < 0:
                raise ValueError("negative radicand")
            b, q = _ZERO, _ZERO
        self.a = a
        self.b = b
        self.q = q
        fa = float(a)
        fb = float(b) * math.sqrt(float(q)) if b else 0.0
        self.approx = fa + fb
        self._mag = abs(fa) + abs(fb)

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, Surd) else cls(to_fraction(x))

    @property
    def is_rational(self):
        return self.b == 0

    def __float__(self):
        return self.approx

    def __repr__(self):
        if self.b == 0:
            return f"Surd({self.a})"
        return f"Surd({self.a} + {self.b}*sqrt({self.q}))"

    def __neg__(self):
        return Surd(-self.a, -self.b, self.q)

    def __add__(self, other):
        if isinstance(other, Surd):
            if other.b == 0:
                return Surd(self.a + other.a, self.b, self.q)
            if self.b == 0:
                return Surd(self.a + other.a, other.b, other.q)
            if self.q == other.q:
                return Surd(self.a + other.a, self.b + other.b, self.q)
            raise ValueError("sum of surds with different radicands")
        return Surd(self.a + to_fraction(other), self.b, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Surd.coerce(other))

    def __rsub__(self, other):
        return Surd.coerce(other) - self

    def cmp(self, other):
        """Three-way exact comparison."""
        other = Surd.coerce(other)
        diff = self.approx - other.approx
        if abs(diff) > _FILTER * (self._mag + other._mag) + 1e-300:
            return 1 if diff > 0 else -1
        return sign_surd2(self.a - other.a, self.b, self.q, -other.b, other.q)

    def __eq__(self, other):
        try:
            return self.cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    # equal values can have different (b, q) representations
    __hash__ = None

    def sign(self):
        return sign_surd(self.a, self.b, self.q)


def surd_sqrt(q):
    """``sqrt(q)`` as a Surd for a nonnegative rational ``q``."""
    return Surd(0, 1, to_fraction(q))


def sqrt_to_float(q):
    """``sqrt(q)`` for a nonnegative rational, correctly rounded to a float."""
    q = to_fraction(q)
    if q < 0:
        raise ValueError("square root of a negative number")
    if q == 0:
        return 0.0
    # integer square root with enough guard bits, sticky bit for exact ties
    shift = max(0, 2 * 60 - (q.numerator.bit_length() - q.denominator.bit_length())) // 2 + 2
    num = (q.numerator << (2 * shift)) // q.denominator
    r = math.isqrt(num)
    sticky = r * r != num or (q.numerator << (2 * shift)) % q.denominator != 0
    return float(Fraction(2 * r + sticky, 1 << (shift + 1)))


def rational_between(lo, hi):
    """A rational strictly between two Surds ``lo < hi``.

    Uses the float midpoint when it separates them, otherwise refines with
    exact integer square roots at increasing precision.
    """
    lo = Surd.coerce(lo)
    hi = Surd.coerce(hi)
    mid = Fraction((lo.approx + hi.approx) / 2)
    # prefer short denominators; they keep later arithmetic cheap
    for limit in (10**6, 10**12, None):
        cand = mid if limit is None else mid.limit_denominator(limit)
        if lo.cmp(cand) < 0 and hi.cmp(cand) > 0:
            return cand
    bits = 64
    while True:
        a = _approx(lo, bits)
        b = _approx(hi, bits)
        mid = (a + b) / 2
        if lo.cmp(mid) < 0 and hi.cmp(mid) > 0:
            return mid
        bits *= 2
        if bits > 1 << 16:
            raise ArithmeticError("could not separate nearly equal values")


def _approx(x, bits):
    # rational within 2**-bits of x (relative to the integer scale)
    if x.b == 0:
        return x.a
    scale = 1 << bits
    q = x.q
    root = Fraction(math.isqrt(q.numerator * scale * scale // q.denominator), scale)
    return x.a + x.b * root
