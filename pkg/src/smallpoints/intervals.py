"""Exact rational intervals and rectangular complex boxes.

Endpoints are Fractions and every operation is exact, so enclosures are
rigorous with no rounding analysis needed.  The price is denominator growth
under iteration; outward() snaps endpoints to a dyadic grid (always outward,
so containment survives) and is worth calling between refinement steps.
"""

from __future__ import annotations

from fractions import Fraction


def _fr(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = _fr(lo)
        hi = lo if hi is None else _fr(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"

    def __eq__(self, other):
        return (
            isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi
        )

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- queries

    def contains(self, x) -> bool:
        x = _fr(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo

    def abs_hi(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def abs_lo(self) -> Fraction:
        """Mignitude: min |x| over the interval."""
        if self.contains_zero():
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def is_subset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def is_interior_subset(self, other: "Interval") -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    # -- arithmetic

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        other = _fr(other)
        return Interval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, Interval) else -_fr(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Interval):
            ps = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return Interval(min(ps), max(ps))
        other = _fr(other)
        if other >= 0:
            return Interval(self.lo * other, self.hi * other)
        return Interval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Interval):
            if other.contains_zero():
                raise ZeroDivisionError("division by an interval containing zero")
            qs = (
                self.lo / other.lo,
                self.lo / other.hi,
                self.hi / other.lo,
                self.hi / other.hi,
            )
            return Interval(min(qs), max(qs))
        other = _fr(other)
        if other == 0:
            raise ZeroDivisionError("interval division by zero")
        if other > 0:
            return Interval(self.lo / other, self.hi / other)
        return Interval(self.hi / other, self.lo / other)

    def sq(self) -> "Interval":
        """x*x with the dependency respected (tighter than self * self)."""
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(0, max(self.lo * self.lo, self.hi * self.hi))

    # -- structure

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.mid()
        return Interval(self.lo, m), Interval(m, self.hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def outward(self, bits: int) -> "Interval":
        """Smallest enclosing interval with endpoints on the 2**-bits grid."""
        scale = 1 << bits
        lo = Fraction(_floor_scaled(self.lo, scale), scale)
        hi = Fraction(_ceil_scaled(self.hi, scale), scale)
        return Interval(lo, hi)


def _floor_scaled(x: Fraction, scale: int) -> int:
    return (x.numerator * scale) // x.denominator


def _ceil_scaled(x: Fraction, scale: int) -> int:
    return -((-x.numerator * scale) // x.denominator)


# ---------------------------------------------------------------------------
# exact complex rational points, as (re, im) Fraction pairs


def cpoint(re, im=0) -> tuple[Fraction, Fraction]:
    return _fr(re), _fr(im)


def cadd(u, v):
    return u[0] + v[0], u[1] + v[1]


def csub(u, v):
    return u[0] - v[0], u[1] - v[1]


def cneg(u):
    return -u[0], -u[1]


def cmul(u, v):
    return u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0]


def cabs_sq(u) -> Fraction:
    return u[0] * u[0] + u[1] * u[1]


def cinv(u):
    d = cabs_sq(u)
    if d == 0:
        raise ZeroDivisionError("inverse of complex zero")
    return u[0] / d, -u[1] / d


def cdiv(u, v):
    return cmul(u, cinv(v))


class Box:
    """Axis-aligned rectangle in the complex plane with exact rational sides."""

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        self.re = re
        self.im = im

    @staticmethod
    def point(re, im=0) -> "Box":
        return Box(Interval(_fr(re)), Interval(_fr(im)))

    @staticmethod
    def from_bounds(a, b, c, d) -> "Box":
        return Box(Interval(a, b), Interval(c, d))

    def __repr__(self):
        return f"Box([{self.re.lo}, {self.re.hi}] + [{self.im.lo}, {self.im.hi}]i)"

    # -- queries

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def contains_point(self, z) -> bool:
        return self.re.contains(z[0]) and self.im.contains(z[1])

    def mid(self) -> tuple[Fraction, Fraction]:
        return self.re.mid(), self.im.mid()

    def rad(self) -> Fraction:
        """Half the larger side: the Chebyshev radius about mid()."""
        return max(self.re.width(), self.im.width()) / 2

    def abs_sq(self) -> Interval:
        return self.re.sq() + self.im.sq()

    def is_point(self) -> bool:
        return self.re.is_point() and self.im.is_point()

    def intersects(self, other: "Box") -> bool:
        return self.re.intersects(other.re) and self.im.intersects(other.im)

    def is_subset(self, other: "Box") -> bool:
        return self.re.is_subset(other.re) and self.im.is_subset(other.im)

    def is_interior_subset(self, other: "Box") -> bool:
        return self.re.is_interior_subset(other.re) and self.im.is_interior_subset(
            other.im
        )

    def is_real_line_symmetric_free(self) -> bool:
        """True if the box cannot meet the real axis."""
        return not self.im.contains_zero()

    def intersect(self, other: "Box") -> "Box | None":
        re = self.re.intersect(other.re)
        im = self.im.intersect(other.im)
        return Box(re, im) if re is not None and im is not None else None

    # -- arithmetic

    def __neg__(self):
        return Box(-self.re, -self.im)

    def _wrap(self, other) -> "Box":
        if isinstance(other, Box):
            return other
        if isinstance(other, tuple):
            return Box.point(other[0], other[1])
        return Box.point(_fr(other))

    def __add__(self, other):
        o = self._wrap(other)
        return Box(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        return Box(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Box":
        """Enclosure of 1/z; the box must exclude the origin."""
        d = self.abs_sq()
        if d.lo <= 0:
            raise ZeroDivisionError("inverse of a box containing zero")
        return Box(self.re / d, -self.im / d)

    # -- structure

    def split4(self) -> list["Box"]:
        r1, r2 = self.re.split()
        i1, i2 = self.im.split()
        return [Box(r, i) for r in (r1, r2) for i in (i1, i2)]

    def hull(self, other: "Box") -> "Box":
        return Box(self.re.hull(other.re), self.im.hull(other.im))

    def outward(self, bits: int) -> "Box":
        return Box(self.re.outward(bits), self.im.outward(bits))

    def conjugate(self) -> "Box":
        return Box(self.re, -self.im)


def poly_eval_box(coeffs, box: Box) -> Box:
    """Horner evaluation of a polynomial (coefficients low to high, exact
    rationals) on a box."""
    acc = Box.point(0)
    for c in reversed(coeffs):
        acc = acc * box + Box.point(c)
    return acc


def poly_eval_point(coeffs, z) -> tuple[Fraction, Fraction]:
    acc = cpoint(0)
    for c in reversed(coeffs):
        acc = cadd(cmul(acc, z), cpoint(c))
    return acc


def poly_eval_interval(coeffs, iv: Interval) -> Interval:
    acc = Interval(0)
    for c in reversed(coeffs):
        acc = acc * iv + _fr(c)
    return acc
