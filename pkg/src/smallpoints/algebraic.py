"""Exact arithmetic with algebraic numbers over Q.

A value is represented by its minimal polynomial (primitive, irreducible,
integer coefficients, positive leading coefficient) together with the index
of its root in a canonical ordering.  The ordering is fixed once, at the
first certified isolation of the polynomial's roots, and boxes are only
ever refined in place afterwards, so equal values always canonicalize to
the same (minpoly, index) pair and equality is a tuple comparison.

Unary rational Mobius transforms (ax+b)/(cx+d) act directly on the minimal
polynomial and stay exact.  Sums and products of two irrational values go
through resultants, computed by interpolation, followed by factoring and a
box membership search to pick the right irreducible factor and root.  The
membership search refines operand boxes until exactly one candidate root
remains; it terminates because distinct algebraic numbers eventually
separate.

Weil heights come out as directed (lower, upper) enclosures via the Mahler
measure, with an exact zero for roots of unity.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .intervals import Box, Interval, poly_eval_box
from .numeric import (
    DEFAULT_PRECISION,
    DOWN,
    UP,
    LogMag,
    lm_div,
    lm_log,
    lm_sub,
    lm_sum,
)
from .polynomial import Poly, cyclotomic_index, factor_over_z
from .roots import isolate_roots, refine_root_box

RESULTANT_DEGREE_CAP = 64

_CANONICAL_PRECISION = 32
_MAX_RESOLVE_PRECISION = 1 << 16


class DegreeCapExceeded(Exception):
    """Raised when a binary operation would need a resultant of degree
    beyond RESULTANT_DEGREE_CAP."""


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

# minpoly coeffs -> [achieved precision, canonical ordered boxes]
_root_cache: dict[tuple, list] = {}
# minpoly coeffs -> (achieved precision, lower LogMag, upper LogMag)
_height_cache: dict[tuple, tuple] = {}
# (f coeffs, g coeffs, op) -> irreducible factors of the resultant
_op_cache: dict[tuple, list[Poly]] = {}


def _roots_at(f: Poly, precision: int) -> list[Box]:
    """Canonical root boxes of an irreducible f, refined to precision.
    List positions never change after the first call."""
    ent = _root_cache.get(f.coeffs)
    if ent is None:
        if f.degree() == 1:
            ent = [1 << 62, [Box.point(-f[0] / f[1])]]
        else:
            ent = [_CANONICAL_PRECISION, isolate_roots(f, _CANONICAL_PRECISION)]
        _root_cache[f.coeffs] = ent
    if ent[0] < precision:
        ent[1] = [refine_root_box(f, b, precision) for b in ent[1]]
        ent[0] = precision
    return ent[1]


class AlgebraicNumber:
    __slots__ = ("minpoly", "index", "box")

    def __init__(self, minpoly: Poly, index: int, box: Box):
        self.minpoly = minpoly
        self.index = index
        self.box = box

    @staticmethod
    def from_rational(value) -> "AlgebraicNumber":
        v = Fraction(value)
        mp = Poly([-v.numerator, v.denominator])
        return AlgebraicNumber(mp, 0, Box.point(v))

    # -- basics

    @property
    def degree(self) -> int:
        return self.minpoly.degree()

    @property
    def is_rational(self) -> bool:
        return self.minpoly.degree() == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational number")
        return -self.minpoly[0] / self.minpoly[1]

    def is_zero(self) -> bool:
        return self.is_rational and self.minpoly[0] == 0

    def refined_box(self, precision: int) -> Box:
        self.box = _roots_at(self.minpoly, precision)[self.index]
        return self.box

    def sort_key(self):
        return (self.minpoly.degree(), self.minpoly.coeffs, self.index)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicNumber.from_rational(other)
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.minpoly.coeffs == other.minpoly.coeffs and self.index == other.index

    def __hash__(self):
        return hash((self.minpoly.coeffs, self.index))

    def __repr__(self):
        if self.is_rational:
            return f"AlgebraicNumber({self.as_fraction()})"
        m = self.box.mid()
        return (
            f"AlgebraicNumber(deg {self.degree}, root {self.index} "
            f"~ {float(m[0]):.6g}{float(m[1]):+.6g}i)"
        )

    # -- exact unary Mobius arithmetic

    def mobius(self, a, b, c, d) -> "AlgebraicNumber":
        """The value (a*x + b)/(c*x + d) with rational a, b, c, d and
        nonzero determinant."""
        a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
        if a * d - b * c == 0:
            raise ValueError("mobius transform must be invertible")
        if self.is_rational:
            r = self.as_fraction()
            den = c * r + d
            if den == 0:
                raise ZeroDivisionError("mobius transform sends the value to infinity")
            return AlgebraicNumber.from_rational((a * r + b) / den)
        f = self.minpoly
        n = f.degree()
        # roots of P are the images of the roots of f under the transform;
        # for c != 0 the leading coefficient is (-c)^n f(-d/c) != 0 because
        # f is irreducible of degree >= 2, so the degree never drops
        tb = Poly([-b, d])
        ta = Poly([a, -c])
        tb_pow = [Poly.one()]
        ta_pow = [Poly.one()]
        for _ in range(n):
            tb_pow.append(tb_pow[-1] * tb)
            ta_pow.append(ta_pow[-1] * ta)
        P = Poly.zero()
        for i, fi in enumerate(f.coeffs):
            if fi:
                P = P + tb_pow[i] * ta_pow[n - i] * fi
        _, P = P.primitive()
        if P.degree() != n:
            raise RuntimeError("mobius transform dropped degree")

        def box_fn(p: int) -> Box | None:
            B = self.refined_box(p)
            num = B * a + b
            if c == 0:
                return num * (1 / d)
            den = B * c + d
            if den.contains_zero():
                return None
            return num * den.inverse()

        return _resolve_among([P], box_fn)

    def __neg__(self):
        if self.is_rational:
            return AlgebraicNumber.from_rational(-self.as_fraction())
        return self.mobius(-1, 0, 0, 1)

    def _inverse(self) -> "AlgebraicNumber":
        if self.is_rational:
            return AlgebraicNumber.from_rational(1 / self.as_fraction())
        return self.mobius(0, 1, 1, 0)

    # -- binary arithmetic

    def __add__(self, other):
        o = _as_algebraic(other)
        if o is None:
            return NotImplemented
        if self.is_rational and o.is_rational:
            return AlgebraicNumber.from_rational(self.as_fraction() + o.as_fraction())
        if o.is_rational:
            r = o.as_fraction()
            return self if r == 0 else self.mobius(1, r, 0, 1)
        if self.is_rational:
            r = self.as_fraction()
            return o if r == 0 else o.mobius(1, r, 0, 1)
        return _binary(self, o, "add")

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_algebraic(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_algebraic(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_algebraic(other)
        if o is None:
            return NotImplemented
        if self.is_rational and o.is_rational:
            return AlgebraicNumber.from_rational(self.as_fraction() * o.as_fraction())
        if o.is_rational or self.is_rational:
            alg, r = (self, o.as_fraction()) if o.is_rational else (o, self.as_fraction())
            if r == 0:
                return AlgebraicNumber.from_rational(0)
            return alg.mobius(r, 0, 0, 1)
        return _binary(self, o, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_algebraic(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero algebraic number")
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = _as_algebraic(other)
        if o is None:
            return NotImplemented
        return o / self


def _as_algebraic(x) -> AlgebraicNumber | None:
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return AlgebraicNumber.from_rational(x)
    return None


def ensure_algebraic(x) -> AlgebraicNumber:
    a = _as_algebraic(x)
    if a is None:
        raise TypeError(f"expected an algebraic number or rational, got {type(x).__name__}")
    return a


def _resolve_among(factors: list[Poly], box_fn) -> AlgebraicNumber:
    """Pick the unique (factor, root) pair compatible with ever sharper
    enclosures of the value.  box_fn(p) returns a box certain to contain
    the value, or None when p is still too coarse to build one."""
    p = _CANONICAL_PRECISION
    while p <= _MAX_RESOLVE_PRECISION:
        probe = box_fn(p)
        if probe is not None:
            live = [
                h for h in factors if poly_eval_box(h.coeffs, probe).contains_zero()
            ]
            hits = []
            for h in live:
                if h.degree() == 1:
                    if probe.contains_point((-h[0] / h[1], Fraction(0))):
                        hits.append((h, 0))
                else:
                    for i, rb in enumerate(_roots_at(h, p)):
                        if rb.intersects(probe):
                            hits.append((h, i))
            if len(hits) == 1:
                h, i = hits[0]
                if h.degree() == 1:
                    return AlgebraicNumber.from_rational(-h[0] / h[1])
                return AlgebraicNumber(h, i, _roots_at(h, p)[i])
        p *= 2
    raise RuntimeError("could not resolve which root the value is")


def _interpolate(xs: list[Fraction], ys: list[Fraction]) -> Poly:
    """Newton divided differences; exact over Q."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    P = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        P = P * Poly([-xs[i], 1]) + coef[i]
    return P


def _op_factors(f: Poly, g: Poly, kind: str) -> list[Poly]:
    """Irreducible factors of the resultant whose roots are all sums (or
    products) of a root of f and a root of g."""
    key = (f.coeffs, g.coeffs, kind)
    hit = _op_cache.get(key)
    if hit is not None:
        return hit
    from .polynomial import resultant

    m, n = f.degree(), g.degree()
    D = m * n
    xs = []
    k = 0
    while len(xs) < D + 1:
        xs.append(Fraction(k))
        if k > 0:
            xs.append(Fraction(-k))
        k += 1
    xs = xs[: D + 1]
    ys = []
    for x0 in xs:
        if kind == "add":
            gy = g.compose(Poly([x0, -1]))
        else:
            arr = [Fraction(0)] * (n + 1)
            for j, gj in enumerate(g.coeffs):
                arr[n - j] = gj * x0**j
            gy = Poly(arr)
        ys.append(resultant(f, gy))
    H = _interpolate(xs, ys)
    if H.degree() != D:
        raise RuntimeError("resultant interpolation degree mismatch")
    _, fac = factor_over_z(H)
    out = [h for h, _ in fac]
    _op_cache[key] = out
    return out


def _binary(a: AlgebraicNumber, b: AlgebraicNumber, kind: str) -> AlgebraicNumber:
    m, n = a.minpoly.degree(), b.minpoly.degree()
    if m * n > RESULTANT_DEGREE_CAP:
        raise DegreeCapExceeded(
            f"operation needs a degree {m * n} resultant (cap {RESULTANT_DEGREE_CAP})"
        )
    factors = _op_factors(a.minpoly, b.minpoly, kind)
    if kind == "add":
        box_fn = lambda p: a.refined_box(p) + b.refined_box(p)
    else:
        box_fn = lambda p: a.refined_box(p) * b.refined_box(p)
    return _resolve_among(factors, box_fn)


def algebraic_roots(f: Poly) -> list[AlgebraicNumber]:
    """The distinct roots of any nonzero rational polynomial, rationals
    first as exact values, ordered deterministically."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    _, fac = factor_over_z(f)
    out = []
    for h, _ in fac:
        if h.degree() == 1:
            out.append(AlgebraicNumber.from_rational(-h[0] / h[1]))
        else:
            boxes = _roots_at(h, _CANONICAL_PRECISION)
            out.extend(AlgebraicNumber(h, i, boxes[i]) for i in range(len(boxes)))
    return out


# ---------------------------------------------------------------------------
# cross-ratios and the anharmonic group


def cross_ratio(p1, p2, p3, z) -> AlgebraicNumber:
    """(p3-p1)(z-p2) / ((p3-p2)(z-p1)) on the projective line, with the
    usual limits when one argument is INFINITY.  The four points must be
    distinct, which keeps the value away from 0, 1 and infinity."""
    pts = [x if x is INFINITY else ensure_algebraic(x) for x in (p1, p2, p3, z)]
    for i in range(4):
        for j in range(i + 1, 4):
            same = (
                pts[i] is INFINITY and pts[j] is INFINITY
                or pts[i] is not INFINITY
                and pts[j] is not INFINITY
                and pts[i] == pts[j]
            )
            if same:
                raise ValueError("cross-ratio needs four distinct points")
    q1, q2, q3, w = pts
    if q1 is INFINITY:
        return (w - q2) / (q3 - q2)
    if q2 is INFINITY:
        return (q3 - q1) / (w - q1)
    if q3 is INFINITY:
        return (w - q2) / (w - q1)
    if w is INFINITY:
        return (q3 - q1) / (q3 - q2)
    return ((q3 - q1) * (w - q2)) / ((q3 - q2) * (w - q1))


def anharmonic_orbit(lam) -> list[AlgebraicNumber]:
    """The six values [x, 1-x, 1/x, 1/(1-x), x/(x-1), (x-1)/x] obtained
    from a cross-ratio by permuting the points; needs lam outside {0, 1}."""
    a = ensure_algebraic(lam)
    if a == 0 or a == 1:
        raise ValueError("anharmonic orbit needs a value outside {0, 1}")
    specs = [
        (1, 0, 0, 1),
        (-1, 1, 0, 1),
        (0, 1, 1, 0),
        (0, 1, -1, 1),
        (1, 0, 1, -1),
        (1, -1, 1, 0),
    ]
    return [a.mobius(*s) for s in specs]


# ---------------------------------------------------------------------------
# heights and S-units


def weil_height(alpha, precision: int = DEFAULT_PRECISION) -> tuple[LogMag, LogMag]:
    """Directed enclosure (lower, upper) of the absolute logarithmic Weil
    height, via the Mahler measure of the minimal polynomial:

        h = (1/n) (ln a_n + sum_i ln max(1, |alpha_i|)).

    The enclosure width is at most 2**-(precision//2).  Roots of unity give
    an exact [0, 0]; so does any rational with numerator and denominator of
    absolute value at most 1.
    """
    a = ensure_algebraic(alpha)
    f = a.minpoly
    key = f.coeffs
    hit = _height_cache.get(key)
    if hit is not None and hit[0] >= precision:
        return hit[1], hit[2]
    if f.lc() == 1 and cyclotomic_index(f) is not None:
        z = LogMag.zero(precision)
        _height_cache[key] = (1 << 62, z, z)
        return z, z
    n = f.degree()
    an = int(f.lc())
    wp = precision + 16
    target = Fraction(1, 1 << (precision // 2))
    p = max(64, precision)
    for _ in range(16):
        if n == 1:
            boxes = [Box.point(-f[0] / f[1])]
        else:
            boxes = _roots_at(f, p)
        lo_terms = [lm_log(an, wp, DOWN)]
        hi_terms = [lm_log(an, wp, UP)]
        for b in boxes:
            s = b.abs_sq()
            lo_terms.append(lm_div(lm_log(max(Fraction(1), s.lo), wp, DOWN), 2, wp, DOWN))
            hi_terms.append(lm_div(lm_log(max(Fraction(1), s.hi), wp, UP), 2, wp, UP))
        lo = lm_div(lm_sum(lo_terms, wp, DOWN), n, wp, DOWN)
        hi = lm_div(lm_sum(hi_terms, wp, UP), n, wp, UP)
        if lm_sub(hi, lo, wp, UP) <= target:
            _height_cache[key] = (precision, lo, hi)
            return lo, hi
        p *= 2
    raise RuntimeError("height enclosure did not converge")


def _factors_over(m: int, primes) -> bool:
    m = abs(m)
    if m == 0:
        return False
    for p in primes:
        while m % p == 0:
            m //= p
    return m == 1


def is_s_unit(alpha, primes) -> bool:
    """S-unit test: both the leading and the constant coefficient of the
    minimal polynomial must factor completely over the given primes."""
    a = ensure_algebraic(alpha)
    f = a.minpoly
    return _factors_over(int(f[0]), primes) and _factors_over(int(f.lc()), primes)
