"""Dense univariate polynomials over the rationals, exactly.

Coefficients are Fractions stored low to high.  On top of the ring ops this
module provides the pieces the rest of the package leans on: resultants and
discriminants through the subresultant PRS (fraction-free, so integer inputs
stay integer), squarefree decomposition, full factorization over Z by the
classical modular route (Cantor-Zassenhaus mod p, quadratic Hensel lifting,
subset recombination under the Mignotte bound), cyclotomic recognition, and a
small text format ("x^5 - x") used by the CLI.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from fractions import Fraction
from functools import lru_cache

from .numeric import factor as int_factor
from .numeric import is_prime


def _fr(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(
        f"polynomial coefficients must be exact rationals, got {type(x).__name__}"
    )


class Poly:
    """Immutable dense polynomial; coeffs[i] multiplies x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- basics

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({render_poly(self)!r})"

    # -- ring operations

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d = other.lc()
        m = other.degree()
        while len(r) - 1 >= m and r:
            c = r[-1] / d
            k = len(r) - 1 - m
            q[k] = c
            for i in range(m + 1):
                r[i + k] -= c * other.coeffs[i]
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    # -- calculus and transforms

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        x = _fr(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def reverse(self) -> "Poly":
        """x**deg * f(1/x); note a root at zero drops the degree."""
        return Poly(tuple(reversed(self.coeffs)))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        d = self.lc()
        return Poly([c / d for c in self.coeffs])

    # -- integer structure

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.coeffs:
            out = out * c.denominator // math.gcd(out, c.denominator)
        return out

    def to_int_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out.append(c.numerator)
        return out

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """(content, primitive part): self = content * part, part has coprime
        integer coefficients and positive leading coefficient."""
        if self.is_zero():
            return Fraction(0), self
        den = self.denominator_lcm()
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Poly([v // g for v in ints])


# ---------------------------------------------------------------------------
# gcd and squarefree structure


def _icontent(cs: list[int]) -> int:
    g = 0
    for v in cs:
        g = math.gcd(g, v)
    return g or 1


def _iprem(A: list[int], B: list[int]) -> list[int]:
    """Pseudo-remainder: lc(B)**(deg A - deg B + 1) * A mod B, exactly."""
    m = len(B) - 1
    d = B[-1]
    R = list(A)
    for _ in range(len(A) - len(B) + 1):
        if len(R) > m:
            top = R[-1]
            k = len(R) - 1 - m
            R = [d * c for c in R]
            for i, bc in enumerate(B):
                R[i + k] -= top * bc
            R.pop()
            while R and R[-1] == 0:
                R.pop()
        else:
            R = [d * c for c in R]
    return R


def _int_gcd_primitive(A: list[int], B: list[int]) -> list[int]:
    """Primitive gcd of nonzero integer polynomials via the primitive PRS."""
    A = [v // _icontent(A) for v in A]
    B = [v // _icontent(B) for v in B]
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _iprem(A, B)
        if R:
            R = [v // _icontent(R) for v in R]
        A, B = B, R
    if A[-1] < 0:
        A = [-v for v in A]
    return A


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q (gcd with zero is the other input made monic)."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    _, fp = f.primitive()
    _, gp = g.primitive()
    h = _int_gcd_primitive(fp.to_int_coeffs(), gp.to_int_coeffs())
    return Poly(h).monic()


def squarefree_part(f: Poly) -> Poly:
    """f / gcd(f, f'), as a primitive integer polynomial with positive lc."""
    if f.degree() < 1:
        raise ValueError("squarefree part needs positive degree")
    g = poly_gcd(f, f.derivative())
    _, part = (f // g).primitive()
    return part


def yun_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition f = lc * prod a_i**i with the a_i pairwise
    coprime, squarefree, monic; returned as (a_i, i) pairs with deg a_i > 0."""
    if f.degree() < 1:
        return []
    f = f.monic()
    df = f.derivative()
    g = poly_gcd(f, df)
    out = []
    b = f // g
    c = df // g
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# resultant and discriminant via the subresultant PRS


def _int_resultant(A: list[int], B: list[int]) -> int:
    n, m = len(A) - 1, len(B) - 1
    s = 1
    if n < m:
        if n % 2 == 1 and m % 2 == 1:
            s = -1
        A, B, n, m = B, A, m, n
    if m == 0:
        return s * B[0] ** n if n > 0 else 1
    a = _icontent(A)
    A = [v // a for v in A]
    b = _icontent(B)
    B = [v // b for v in B]
    t = a**m * b**n
    g = h = 1
    while True:
        n, m = len(A) - 1, len(B) - 1
        delta = n - m
        if n % 2 == 1 and m % 2 == 1:
            s = -s
        R = _iprem(A, B)
        if not R:
            return 0
        denom = g * h**delta
        A, B = B, [v // denom for v in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
        if len(B) == 1:
            break
    n = len(A) - 1
    c = B[0]
    hf = c if n == 1 else c**n // h ** (n - 1)
    return s * t * hf


def resultant(f: Poly, g: Poly) -> Fraction:
    """res(f, g); zero exactly when the inputs share a nonconstant factor."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    df = f.denominator_lcm()
    dg = g.denominator_lcm()
    F = (f * df).to_int_coeffs()
    G = (g * dg).to_int_coeffs()
    r = _int_resultant(F, G)
    return Fraction(r) / (Fraction(df) ** g.degree() * Fraction(dg) ** f.degree())


def discriminant(f: Poly) -> Fraction:
    if f.degree() < 1:
        raise ValueError("discriminant needs positive degree")
    n = f.degree()
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc()


# ---------------------------------------------------------------------------
# arithmetic mod p on int coefficient lists (low to high, trimmed)


def _pm_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_sub(a, b, p):
    n = max(len(a), len(b))
    return _pm_trim(
        [
            ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
            for i in range(n)
        ]
    )


def _pm_add(a, b, p):
    n = max(len(a), len(b))
    return _pm_trim(
        [
            ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
            for i in range(n)
        ]
    )


def _pm_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pm_trim([v % p for v in out])


def _pm_scale(a, c, p):
    return _pm_trim([v * c % p for v in a])


def _pm_divmod(a, b, p):
    """Quotient and remainder mod p; the divisor's lc must be invertible,
    which also covers monic divisors mod a prime power."""
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = [v % p for v in a]
    _pm_trim(r)
    m = len(b) - 1
    while len(r) - 1 >= m and r:
        c = r[-1] * inv % p
        k = len(r) - 1 - m
        q[k] = c
        for i in range(m + 1):
            r[i + k] = (r[i + k] - c * b[i]) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return _pm_trim(q), r


def _pm_monic(a, p):
    if not a:
        return a
    return _pm_scale(a, pow(a[-1], -1, p), p)


def _pm_gcd(a, b, p):
    while b:
        a, b = b, _pm_divmod(a, b, p)[1]
    return _pm_monic(a, p)


def _pm_mulmod(a, b, f, p):
    return _pm_divmod(_pm_mul(a, b, p), f, p)[1]


def _pm_powmod(a, e: int, f, p):
    out = [1]
    base = _pm_divmod(a, f, p)[1]
    while e:
        if e & 1:
            out = _pm_mulmod(out, base, f, p)
        base = _pm_mulmod(base, base, f, p)
        e >>= 1
    return out


def _distinct_degree(f, p) -> list[tuple[list[int], int]]:
    """(product of the irreducible factors of degree d, d) pairs for
    squarefree monic f mod p."""
    out = []
    h = [0, 1]
    rem = list(f)
    d = 0
    while len(rem) - 1 >= 2 * (d + 1):
        d += 1
        h = _pm_powmod(h, p, rem, p)
        g = _pm_gcd(_pm_sub(h, [0, 1], p), rem, p)
        if len(g) > 1:
            out.append((g, d))
            rem = _pm_divmod(rem, g, p)[0]
            h = _pm_divmod(h, rem, p)[1]
    if len(rem) > 1:
        out.append((rem, len(rem) - 1))
    return out


def _equal_degree_split(f, d: int, p: int, rng) -> list[list[int]]:
    """Cantor-Zassenhaus splitting of monic squarefree f whose irreducible
    factors all have degree d; requires p odd."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = _pm_trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        b = _pm_powmod(a, e, f, p)
        t = _pm_gcd(_pm_sub(b, [1], p), f, p)
        if 1 < len(t) < len(f):
            other = _pm_divmod(f, t, p)[0]
            return _equal_degree_split(t, d, p, rng) + _equal_degree_split(
                other, d, p, rng
            )


def _factor_mod_p(f, p) -> list[list[int]]:
    """Monic irreducible factors of squarefree monic f mod p, deterministic
    order (the splitting randomness is seeded from the input)."""
    rng = random.Random(hash((p, tuple(f))))
    out = []
    for block, d in _distinct_degree(f, p):
        out.extend(_equal_degree_split(block, d, p, rng))
    out.sort(key=lambda u: (len(u), tuple(reversed(u))))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting


def _pm_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pm_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _pm_sub(s0, _pm_mul(q, s1, p), p)
        t0, t1 = t1, _pm_sub(t0, _pm_mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return _pm_scale(s0, inv, p), _pm_scale(t0, inv, p)


def _monic_divmod_mod(a, b, M):
    """Division by monic b with coefficients taken mod M."""
    q = [0] * max(0, len(a) - len(b) + 1)
    r = _pm_trim([v % M for v in a])
    m = len(b) - 1
    while len(r) - 1 >= m and r:
        c = r[-1]
        k = len(r) - 1 - m
        q[k] = c
        for i in range(m + 1):
            r[i + k] = (r[i + k] - c * b[i]) % M
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return _pm_trim(q), r


def _hensel_step(f, g, h, s, t, M: int):
    """Quadratic lift: from f = g*h and s*g + t*h = 1 at the previous modulus
    to the same congruences mod M; h monic and stays monic."""
    e = _pm_sub(f, _pm_mul(g, h, M), M)
    q, r = _monic_divmod_mod(_pm_mul(s, e, M), h, M)
    g1 = _pm_add(g, _pm_add(_pm_mul(t, e, M), _pm_mul(q, g, M), M), M)
    h1 = _pm_add(h, r, M)
    b = _pm_sub(_pm_add(_pm_mul(s, g1, M), _pm_mul(t, h1, M), M), [1], M)
    c, d = _monic_divmod_mod(_pm_mul(s, b, M), h1, M)
    s1 = _pm_sub(s, d, M)
    t1 = _pm_sub(t, _pm_add(_pm_mul(t, b, M), _pm_mul(c, g1, M), M), M)
    return g1, h1, s1, t1


def _hensel_tree(f: list[int], lc: int, units: list[list[int]], p: int, modulus: int):
    """Lift f = lc * prod(units) from mod p to the given modulus (a power of
    p reached by repeated squaring).  units are monic mod p; the returned
    factors are monic mod modulus."""
    if len(units) == 1:
        inv = pow(lc % modulus, -1, modulus)
        return [_pm_trim([v * inv % modulus for v in f])]
    half = len(units) // 2
    g = [lc % p]
    for u in units[:half]:
        g = _pm_mul(g, u, p)
    h = [1]
    for u in units[half:]:
        h = _pm_mul(h, u, p)
    s, t = _pm_bezout(g, h, p)
    m = p
    while m < modulus:
        m = m * m
        g, h, s, t = _hensel_step([v % m for v in f], g, h, s, t, m)
    return _hensel_tree(g, lc, units[:half], p, modulus) + _hensel_tree(
        h, 1, units[half:], p, modulus
    )


# ---------------------------------------------------------------------------
# factorization over Z


def _mignotte_bound(ints: list[int]) -> int:
    """Bound on |coefficient| of lc(f) times any monic factor of f."""
    n = len(ints) - 1
    norm2 = math.isqrt(sum(v * v for v in ints)) + 1
    return (1 << n) * norm2 * abs(ints[-1])


def _next_prime(p: int) -> int:
    p += 1 + (p % 2)
    while not is_prime(p):
        p += 2
    return p


def _choose_prime(ints: list[int]) -> tuple[int, list[list[int]]]:
    """An odd prime keeping the degree and squarefreeness of f, picked among
    a handful of candidates to minimize the modular factor count."""
    best = None
    found = 0
    p = 2
    while found < 5:
        p = _next_prime(p)
        if ints[-1] % p == 0:
            continue
        fp = _pm_trim([v % p for v in ints])
        dfp = _pm_trim([i * v % p for i, v in enumerate(ints)][1:])
        if not dfp or len(_pm_gcd(fp, dfp, p)) != 1:
            continue
        units = _factor_mod_p(_pm_monic(fp, p), p)
        found += 1
        if best is None or len(units) < len(best[1]):
            best = (p, units)
            if len(units) == 1:
                break
    return best


def _factor_squarefree_int(ints: list[int]) -> list[Poly]:
    """Irreducible factors (primitive, positive lc) of a primitive squarefree
    integer polynomial of degree >= 1."""
    if len(ints) == 2:
        out = list(ints)
        if out[-1] < 0:
            out = [-v for v in out]
        return [Poly(out)]
    p, units = _choose_prime(ints)
    if len(units) == 1:
        f = Poly(ints)
        return [f if f.lc() > 0 else -f]
    target = 2 * _mignotte_bound(ints) + 1
    modulus = p
    while modulus < target:
        modulus = modulus * modulus
    lifted = _hensel_tree(ints, ints[-1], units, p, modulus)
    half = modulus // 2

    def symmetric_primitive(cs: list[int]) -> list[int]:
        sym = [v - modulus if v > half else v for v in cs]
        g = _icontent(sym)
        sym = [v // g for v in sym]
        return [-v for v in sym] if sym[-1] < 0 else sym

    remaining = list(range(len(lifted)))
    current = list(ints)
    out: list[Poly] = []
    c = 1
    while remaining and c <= len(remaining) // 2:
        progressed = False
        for combo in itertools.combinations(remaining, c):
            if sum(len(lifted[i]) - 1 for i in combo) > len(current) - 1 - 1:
                continue
            cand = [current[-1] % modulus]
            for i in combo:
                cand = _pm_mul(cand, lifted[i], modulus)
            cand_prim = symmetric_primitive(cand)
            q, r = Poly(current).divmod(Poly(cand_prim))
            if r.is_zero():
                out.append(Poly(cand_prim))
                _, qprim = q.primitive()
                current = qprim.to_int_coeffs()
                remaining = [i for i in remaining if i not in combo]
                progressed = True
                break
        if not progressed:
            c += 1
    if len(current) > 1:
        f = Poly(current)
        out.append(f if f.lc() > 0 else -f)
    return out


def factor_over_z(f: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Complete factorization over Q: f = content * prod(factor**mult) with
    primitive irreducible integer factors of positive leading coefficient,
    sorted by (degree, coefficients)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content, prim = f.primitive()
    if prim.degree() < 1:
        return content, []
    out: list[tuple[Poly, int]] = []
    for part, mult in yun_decomposition(prim):
        _, ipart = part.primitive()
        for irr in _factor_squarefree_int(ipart.to_int_coeffs()):
            out.append((irr, mult))
    # by Gauss's lemma the primitive factors multiply back to prim exactly,
    # but recompute the leading ratio rather than rely on it
    rebuilt_lc = Fraction(1)
    for q, mult in out:
        rebuilt_lc *= q.lc() ** mult
    content *= prim.lc() / rebuilt_lc
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].coeffs))
    return content, out


def is_irreducible(f: Poly) -> bool:
    if f.degree() < 1:
        return False
    _, factors = factor_over_z(f)
    return len(factors) == 1 and factors[0][1] == 1


# ---------------------------------------------------------------------------
# cyclotomic recognition


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Poly:
    """The m-th cyclotomic polynomial, from x**m - 1 by dividing out the
    lower Phi_d."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = Poly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            num = num // cyclotomic_poly(d)
    return num


def euler_phi(m: int) -> int:
    out = 1
    for p, e in int_factor(m):
        out *= (p - 1) * p ** (e - 1)
    return out


def cyclotomic_index(f: Poly) -> int | None:
    """m if f is exactly the m-th cyclotomic polynomial, else None.  phi(m)
    is at least sqrt(m/2), so indices up to 2 deg**2 + 1 cover everything."""
    n = f.degree()
    if n < 1 or f.lc() != 1:
        return None
    for m in range(1, 2 * n * n + 2):
        if euler_phi(m) == n and f == cyclotomic_poly(m):
            return m
    return None


# ---------------------------------------------------------------------------
# text format


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*\*?\s*[xX](?:\s*(?:\^|\*\*)\s*(?P<exp1>\d+))?
          | [xX](?:\s*(?:\^|\*\*)\s*(?P<exp2>\d+))?
          | (?P<const>\d+(?:/\d+)?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse forms like "x^5 - x", "2x^3 + 1/2 x - 7", "x**6 - 1"."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    terms: dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        mt = _TERM_RE.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
        if mt.group("sign") is None and not first:
            raise ValueError(f"missing sign between terms near {s[pos:pos + 20]!r}")
        sgn = -1 if mt.group("sign") == "-" else 1
        if mt.group("const") is not None:
            c, e = Fraction(mt.group("const")), 0
        elif mt.group("coeff") is not None:
            c, e = Fraction(mt.group("coeff")), int(mt.group("exp1") or 1)
        else:
            c, e = Fraction(1), int(mt.group("exp2") or 1)
        terms[e] = terms.get(e, Fraction(0)) + sgn * c
        pos = mt.end()
        first = False
    n = max(terms)
    return Poly([terms.get(i, Fraction(0)) for i in range(n + 1)])


def render_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e in range(f.degree(), -1, -1):
        c = f[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xs = "x" if e == 1 else f"x^{e}"
            body = xs if mag == 1 else f"{mag} {xs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
