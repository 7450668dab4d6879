"""Exact integer/rational helpers and a directed-rounding big float.

The central type is LogMag: a sign / mantissa / exponent float whose exponent
is an arbitrary-precision integer, so quantities like 10**(10**7) and the
astronomically larger values produced by height-bound formulas stay
representable.  Every operation rounds in a recorded direction: a result
carrying mode UP is >= the exact value of the operation applied to the operand
values, and a result carrying mode DOWN is <=.  Mantissas hold a fixed number
of bits (default 128).

Transcendental operations (ln, exp, ln 2, ln(2*pi)) are evaluated in integer
fixed point with every intermediate rounded in the requested direction and an
explicit tail bound added on the upper side, so the directed contract holds
unconditionally rather than with high probability.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

UP = 1
DOWN = -1

DEFAULT_PRECISION = 128
MIN_PRECISION = 8

_MODE_NAMES = {UP: "up", DOWN: "down"}


def mode_name(mode: int) -> str:
    return _MODE_NAMES[mode]


# ---------------------------------------------------------------------------
# primality and factorization


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    limit = 10**6
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i in range(limit + 1) if sieve[i])


_MR_DETERMINISTIC_LIMIT = 1 << 64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin_witness(n: int, a: int) -> bool:
    """True if a witnesses compositeness of odd n > 2."""
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime_with_certainty(n: int) -> tuple[bool, str]:
    """Primality plus how it was established.

    Below 2**64 the fixed Miller-Rabin base set is deterministic.  Above,
    64 deterministically seeded pseudo-random bases give error probability
    below 2**-128 and the result is flagged "probabilistic".
    """
    if n < 2:
        return False, "deterministic"
    if n < 4:
        return True, "deterministic"
    if n % 2 == 0:
        return False, "deterministic"
    if n < _MR_DETERMINISTIC_LIMIT:
        for a in _MR_BASES:
            if a % n and _miller_rabin_witness(n, a):
                return False, "deterministic"
        return True, "deterministic"
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return False, "deterministic"
    rng = random.Random(n)
    for _ in range(64):
        a = rng.randrange(2, n - 1)
        if _miller_rabin_witness(n, a):
            return False, "deterministic"
    return True, "probabilistic"


def is_prime(n: int) -> bool:
    return is_prime_with_certainty(n)[0]


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as a sorted list of (prime, exponent).

    factor(1) is the empty list.  Trial division by all primes below 10**6,
    then Pollard rho with Miller-Rabin primality on the cofactors.
    """
    if n < 1:
        raise ValueError("factor requires a positive integer")
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m) if m % 2 else 2
        stack.append(d)
        stack.append(m // d)
    return sorted(out.items())


def radical(n: int) -> list[int]:
    """Sorted distinct prime divisors of n >= 1."""
    return [p for p, _ in factor(n)]


# ---------------------------------------------------------------------------
# directed fixed-point helpers.  A fixed-point value is an int carrying wp
# fraction bits.  UP always means toward +infinity, DOWN toward -infinity.


def _div_dir(a: int, b: int, direction: int) -> int:
    """a/b rounded toward +inf (UP) or -inf (DOWN); b > 0."""
    if direction == DOWN:
        return a // b
    return -((-a) // b)


def _shift_dir(a: int, shift: int, direction: int) -> int:
    """a / 2**shift rounded in direction; shift may be negative (exact)."""
    if shift <= 0:
        return a << (-shift)
    return _div_dir(a, 1 << shift, direction)


def _fx_mul(a: int, b: int, wp: int, direction: int) -> int:
    return _shift_dir(a * b, wp, direction)


def _bucket(wp: int) -> int:
    return ((wp + 63) // 64) * 64


@lru_cache(maxsize=None)
def _ln2_cached(wp: int, direction: int) -> int:
    # ln 2 = 2 atanh(1/3) = sum over k of 2 / ((2k+1) * 3^(2k+1))
    total = 0
    two_wp = 2 << wp
    k = 0
    while True:
        den = (2 * k + 1) * 3 ** (2 * k + 1)
        if two_wp // den == 0:
            break
        total += _div_dir(two_wp, den, direction)
        k += 1
    if direction == UP:
        # all remaining terms sum below (9/8) * (first omitted term + 1 ulp)
        total += 3
    return total


def _ln2_fixed(wp: int, direction: int) -> int:
    """ln 2 * 2**wp, a directed bound."""
    wpb = _bucket(wp)
    return _shift_dir(_ln2_cached(wpb, direction), wpb - wp, direction)


def _ln_atanh_series(p: int, q: int, wp: int, direction: int) -> int:
    """ln(p/q) * 2**wp directed, for 1 <= p/q < 2, via 2*atanh((p-q)/(p+q))."""
    if p == q:
        return 0
    num, den = p - q, p + q
    z = _div_dir(num << wp, den, direction)
    z2 = _fx_mul(z, z, wp, direction)
    total = 0
    t = z
    k = 1
    while t > 2:
        total += _div_dir(t, k, direction)
        t = _fx_mul(t, z2, wp, direction)
        k += 2
    if direction == UP:
        # z < 1/3 so the dropped terms sum below t * 9/8 <= 3 ulps
        total += 3
    return 2 * total


@lru_cache(maxsize=None)
def _ln10_cached(wp: int, direction: int) -> int:
    # ln 10 = 3 ln 2 + ln(5/4)
    return 3 * _ln2_fixed(wp, direction) + _ln_atanh_series(5, 4, wp, direction)


def _ln10_fixed(wp: int, direction: int) -> int:
    wpb = _bucket(wp)
    return _shift_dir(_ln10_cached(wpb, direction), wpb - wp, direction)


@lru_cache(maxsize=None)
def _two_pi_cached(wp: int, direction: int) -> int:
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239)

    def atan_inv(x: int, d: int) -> int:
        # Alternating series.  Stopping after an added term gives an upper
        # bound, after a subtracted term a lower bound; per-term division is
        # rounded so each kept term errs in the helpful direction.
        one = 1 << wp
        total = 0
        k = 0
        while True:
            den = (2 * k + 1) * x ** (2 * k + 1)
            term = _div_dir(one, den, d if k % 2 == 0 else -d)
            if k % 2 == 0:
                total += term
            else:
                total -= term
            if one // den == 0 and k % 2 == (0 if d == UP else 1):
                break
            k += 1
        return total

    return 32 * atan_inv(5, direction) - 8 * atan_inv(239, -direction)


def _two_pi_fixed(wp: int, direction: int) -> int:
    """2*pi * 2**wp directed."""
    wpb = _bucket(wp)
    return _shift_dir(_two_pi_cached(wpb, direction), wpb - wp, direction)


def _ln_of_dyadic(m: int, e: int, wp: int, direction: int) -> int:
    """ln(m * 2**e) * 2**wp directed, for any positive integer m."""
    bl = m.bit_length()
    binexp = e + bl - 1
    h = 1 << (bl - 1)
    if binexp:
        l2 = _ln2_fixed(wp, direction if binexp > 0 else -direction)
        total = binexp * l2
    else:
        total = 0
    total += _ln_atanh_series(m, h, wp, direction)
    return total


def _exp_series(r: int, wp: int, direction: int) -> int:
    """exp(r * 2**-wp) * 2**wp directed, for 0 <= r < 0.37 * 2**wp."""
    one = 1 << wp
    total = one
    t = one
    k = 1
    while t > 2:
        t = _div_dir(_fx_mul(t, r, wp, direction), k, direction)
        total += t
        k += 1
    if direction == UP:
        # r < 0.37 so the dropped terms sum below t / (1 - 0.37) <= 4 ulps
        total += 4
    return total


def _recip_fixed(a: int, wp: int, direction: int) -> int:
    """2**(2*wp) / a directed (a > 0), i.e. the fixed-point reciprocal."""
    return _div_dir(1 << (2 * wp), a, direction)


# ---------------------------------------------------------------------------
# LogMag


class LogMag:
    """Directed-rounding float: sign * (man / 2**prec) * 2**exp.

    sign is -1, 0 or +1; man is normalized to [2**(prec-1), 2**prec) so the
    mantissa man/2**prec lies in [1/2, 1); exp is an unbounded integer.  mode
    (UP or DOWN) records the rounding direction every derived operation uses.
    Instances are immutable; comparisons are exact on values and ignore mode.
    """

    __slots__ = ("sign", "man", "exp", "prec", "mode")

    def __init__(self, sign: int, man: int, exp: int, prec: int, mode: int):
        if mode not in (UP, DOWN):
            raise ValueError("rounding mode must be UP or DOWN")
        if prec < MIN_PRECISION:
            raise ValueError("precision too small")
        if sign == 0:
            man = 0
            exp = 0
        elif not (1 << (prec - 1)) <= man < (1 << prec):
            raise ValueError("mantissa not normalized")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "man", man)
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, *a):
        raise AttributeError("LogMag is immutable")

    # -- constructors

    @staticmethod
    def zero(prec: int = DEFAULT_PRECISION, mode: int = UP) -> "LogMag":
        return LogMag(0, 0, 0, prec, mode)

    @staticmethod
    def one(prec: int = DEFAULT_PRECISION, mode: int = UP) -> "LogMag":
        return LogMag(1, 1 << (prec - 1), 1, prec, mode)

    @staticmethod
    def from_int(n: int, prec: int = DEFAULT_PRECISION, mode: int = UP) -> "LogMag":
        return _round_dyadic(n, 0, prec, mode)

    @staticmethod
    def from_fraction(value, prec: int = DEFAULT_PRECISION, mode: int = UP) -> "LogMag":
        fr = Fraction(value)
        return _round_fraction(fr.numerator, fr.denominator, prec, mode)

    # -- exact views

    def is_zero(self) -> bool:
        return self.sign == 0

    def to_fraction(self) -> Fraction:
        """Exact value.  Refuses absurd exponents (gigabyte denominators)."""
        if self.sign == 0:
            return Fraction(0)
        shift = self.exp - self.prec
        if abs(shift) > 1 << 24:
            raise OverflowError("exponent too large for exact conversion")
        if shift >= 0:
            return Fraction(self.sign * self.man << shift)
        return Fraction(self.sign * self.man, 1 << -shift)

    def dyadic(self) -> tuple[int, int]:
        """(M, E) with exact value M * 2**E."""
        return self.sign * self.man, self.exp - self.prec

    # -- comparisons

    def _cmp(self, other) -> int:
        if isinstance(other, LogMag):
            sa, sb = self.sign, other.sign
            if sa != sb:
                return -1 if sa < sb else 1
            if sa == 0:
                return 0
            if self.exp != other.exp:
                return (-1 if self.exp < other.exp else 1) * sa
            ma = self.man << other.prec
            mb = other.man << self.prec
            if ma == mb:
                return 0
            return (-1 if ma < mb else 1) * sa
        if isinstance(other, (int, Fraction)):
            fr = Fraction(other)
            return self._cmp_fraction(fr.numerator, fr.denominator)
        raise TypeError(f"cannot compare LogMag with {type(other).__name__}")

    def _cmp_fraction(self, p: int, q: int) -> int:
        """Exact comparison with p/q (q > 0), safe for huge exponents."""
        sf = 0 if p == 0 else (1 if p > 0 else -1)
        if self.sign != sf:
            return -1 if self.sign < sf else 1
        if self.sign == 0:
            return 0
        a = abs(p)
        fb = a.bit_length() - q.bit_length()
        # |p/q| lies in (2^(fb-1), 2^(fb+1)); |self| in [2^(exp-1), 2^exp)
        if self.exp - 1 >= fb + 1:
            return self.sign
        if self.exp <= fb - 1:
            return -self.sign
        s = self.exp - self.prec
        lhs = self.man * q
        if s >= 0:
            lhs <<= s
            rhs = a
        else:
            rhs = a << -s
        if lhs == rhs:
            return 0
        return (1 if lhs > rhs else -1) * self.sign

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.sign, self.man, self.exp))

    # -- operators (direction and precision resolved from the operands)

    def __add__(self, other):
        return lm_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return lm_sub(self, other)

    def __mul__(self, other):
        return lm_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return lm_div(self, other)

    def __neg__(self):
        """Exact negation; the recorded direction flips with the sign."""
        if self.sign == 0:
            return LogMag(0, 0, 0, self.prec, -self.mode)
        return LogMag(-self.sign, self.man, self.exp, self.prec, -self.mode)

    # -- rendering

    def to_decimal_string(self, digits: int = 24) -> str:
        return _decimal_string(self, digits)

    def to_pair(self) -> tuple[str, str]:
        """Exact (mantissa-hex, exponent-decimal) pair."""
        h = hex(self.man)
        if self.sign < 0:
            h = "-" + h
        return h, str(self.exp)

    def to_json_value(self) -> dict:
        h, e = self.to_pair()
        return {
            "decimal": self.to_decimal_string(),
            "mantissa_hex": h,
            "exponent": e,
            "precision": self.prec,
            "rounding": mode_name(self.mode),
        }

    def log10_float(self) -> float:
        """log10 of |value| as a plain float, for summary columns only."""
        if self.sign == 0:
            raise ValueError("log10 of zero")
        drop = max(0, self.prec - 64)
        return (self.exp - self.prec + drop) * math.log10(2) + math.log10(
            self.man >> drop
        )

    def __repr__(self):
        if self.sign == 0:
            return f"LogMag(0, prec={self.prec}, {mode_name(self.mode)})"
        return (
            f"LogMag({self.to_decimal_string(12)}, prec={self.prec}, "
            f"{mode_name(self.mode)})"
        )


def _round_dyadic(m: int, e: int, prec: int, direction: int) -> LogMag:
    """LogMag nearest in the given direction to m * 2**e."""
    if m == 0:
        return LogMag(0, 0, 0, prec, direction)
    sign = 1 if m > 0 else -1
    a = abs(m)
    bl = a.bit_length()
    shift = bl - prec
    exp = e + bl
    if shift <= 0:
        return LogMag(sign, a << -shift, exp, prec, direction)
    q, r = divmod(a, 1 << shift)
    if r and (direction == UP) == (sign > 0):
        q += 1
        if q == 1 << prec:
            q >>= 1
            exp += 1
    return LogMag(sign, q, exp, prec, direction)


def _round_fraction(
    n: int, d: int, prec: int, direction: int, exp_offset: int = 0
) -> LogMag:
    """Directed rounding of (n/d) * 2**exp_offset; d > 0."""
    if n == 0:
        return LogMag(0, 0, 0, prec, direction)
    sign = 1 if n > 0 else -1
    a = abs(n)
    bl = a.bit_length() - d.bit_length()
    if (a << max(0, -bl)) >= (d << max(0, bl)):
        e = bl + 1
    else:
        e = bl
    k = prec - e
    num = a << max(0, k)
    den = d << max(0, -k)
    q, r = divmod(num, den)
    exp = e
    if r and (direction == UP) == (sign > 0):
        q += 1
        if q == 1 << prec:
            q >>= 1
            exp += 1
    return LogMag(sign, q, exp + exp_offset, prec, direction)


def _coerce(x, prec: int, mode: int) -> LogMag:
    if isinstance(x, LogMag):
        return x
    if isinstance(x, int):
        return _round_dyadic(x, 0, prec, mode)
    if isinstance(x, Fraction):
        return _round_fraction(x.numerator, x.denominator, prec, mode)
    raise TypeError(f"cannot mix LogMag with {type(x).__name__}")


def _resolve(a, b, prec, mode) -> tuple[int, int]:
    """Common (prec, mode) for an operation: explicit arguments win, then the
    first LogMag operand's mode; precision is the max seen."""
    precs = [] if prec is None else [prec]
    chosen = mode
    for x in (a, b):
        if isinstance(x, LogMag):
            precs.append(x.prec)
            if chosen is None:
                chosen = x.mode
    if not precs:
        precs = [DEFAULT_PRECISION]
    if chosen is None:
        raise TypeError("no LogMag operand and no explicit mode")
    return max(precs), chosen


def lm_add(a, b, prec: int | None = None, mode: int | None = None) -> LogMag:
    """Directed a + b.  Exact (then rounded once) when exponents are close;
    otherwise the larger operand is nudged one ulp in the direction the
    smaller operand pulls, which preserves the directed contract."""
    prec, mode = _resolve(a, b, prec, mode)
    a = _coerce(a, prec, mode)
    b = _coerce(b, prec, mode)
    if a.sign == 0:
        return _round_dyadic(*b.dyadic(), prec, mode)
    if b.sign == 0:
        return _round_dyadic(*a.dyadic(), prec, mode)
    ma, ea = a.dyadic()
    mb, eb = b.dyadic()
    if ea < eb:
        ma, ea, mb, eb = mb, eb, ma, ea
    gap = ea - eb
    if gap <= max(a.prec, b.prec) + prec + 16:
        return _round_dyadic((ma << gap) + mb, eb, prec, mode)
    ext = 8
    m = ma << ext
    if mode == UP and mb > 0:
        m += 1
    elif mode == DOWN and mb < 0:
        m -= 1
    return _round_dyadic(m, ea - ext, prec, mode)


def lm_sub(a, b, prec: int | None = None, mode: int | None = None) -> LogMag:
    prec, mode = _resolve(a, b, prec, mode)
    if isinstance(b, LogMag):
        if b.sign:
            b = LogMag(-b.sign, b.man, b.exp, b.prec, b.mode)
    else:
        b = -Fraction(b)
    return lm_add(a, b, prec, mode)


def lm_mul(a, b, prec: int | None = None, mode: int | None = None) -> LogMag:
    """Directed a * b: the exact product of the operand values, rounded once."""
    prec, mode = _resolve(a, b, prec, mode)
    if isinstance(a, LogMag) and isinstance(b, LogMag):
        if a.sign == 0 or b.sign == 0:
            return LogMag(0, 0, 0, prec, mode)
        ma, ea = a.dyadic()
        mb, eb = b.dyadic()
        return _round_dyadic(ma * mb, ea + eb, prec, mode)
    if not isinstance(a, LogMag) and not isinstance(b, LogMag):
        fr = Fraction(a) * Fraction(b)
        return _round_fraction(fr.numerator, fr.denominator, prec, mode)
    x, other = (a, b) if isinstance(a, LogMag) else (b, a)
    fr = Fraction(other)
    if x.sign == 0 or fr == 0:
        return LogMag(0, 0, 0, prec, mode)
    m, e = x.dyadic()
    return _round_fraction(m * fr.numerator, fr.denominator, prec, mode, e)


def lm_div(a, b, prec: int | None = None, mode: int | None = None) -> LogMag:
    """Directed a / b: the exact quotient of the operand values, rounded once
    (two same-direction roundings when both operands are LogMag, which still
    satisfies the contract)."""
    prec, mode = _resolve(a, b, prec, mode)
    if not isinstance(b, LogMag):
        fr = Fraction(b)
        if fr == 0:
            raise ZeroDivisionError("LogMag division by zero")
        if not isinstance(a, LogMag):
            q = Fraction(a) / fr
            return _round_fraction(q.numerator, q.denominator, prec, mode)
        if a.sign == 0:
            return LogMag(0, 0, 0, prec, mode)
        m, e = a.dyadic()
        n = m * fr.denominator
        d = fr.numerator
        if d < 0:
            n, d = -n, -d
        return _round_fraction(n, d, prec, mode, e)
    if b.sign == 0:
        raise ZeroDivisionError("LogMag division by zero")
    if not isinstance(a, LogMag):
        fr = Fraction(a)
        if fr == 0:
            return LogMag(0, 0, 0, prec, mode)
        mb, eb = b.dyadic()
        n = fr.numerator
        d = fr.denominator * mb
        if d < 0:
            n, d = -n, -d
        return _round_fraction(n, d, prec, mode, -eb)
    if a.sign == 0:
        return LogMag(0, 0, 0, prec, mode)
    sign = a.sign * b.sign
    s = prec + 2
    q, r = divmod(a.man << s, b.man)
    if r and (mode == UP) == (sign > 0):
        q += 1
    e = (a.exp - a.prec) - (b.exp - b.prec) - s
    return _round_dyadic(sign * q, e, prec, mode)


def lm_pow(base, e, prec: int | None = None, mode: int | None = None) -> LogMag:
    """Directed base**e.  e may be an int, a Fraction, or a LogMag (taken at
    its exact dyadic value).  Non-integral exponents require base > 0."""
    prec, mode = _resolve(base, None, prec, mode)
    if isinstance(e, LogMag):
        me, ee = e.dyadic()
        if ee >= 0:
            e = me << ee
        else:
            if -ee > 1 << 20:
                raise ValueError("exponent too finely dyadic for pow")
            e = Fraction(me, 1 << -ee)
    if isinstance(e, Fraction) and e.denominator == 1:
        e = e.numerator
    if isinstance(e, int):
        if not isinstance(base, LogMag):
            # x**e is not increasing in x everywhere: for x > 0 it decreases
            # when e < 0, for x < 0 the parity of e matters too
            fr = Fraction(base)
            if fr < 0:
                d = mode if (e % 2 == 1) == (e > 0) else -mode
            else:
                d = mode if e >= 0 else -mode
            base = _coerce(fr, prec, d)
        return _pow_int(base, e, prec, mode)
    if not isinstance(e, Fraction):
        raise TypeError("pow exponent must be int, Fraction, or LogMag")
    # the result is decreasing in the base when e < 0: coerce accordingly
    base = _coerce(base, prec, mode if e >= 0 else -mode)
    if base.sign < 0:
        raise ValueError("fractional power of a negative value")
    if base.sign == 0:
        if e > 0:
            return LogMag(0, 0, 0, prec, mode)
        raise ValueError("zero base requires a positive exponent")
    wp = (
        prec
        + 48
        + abs(base.exp).bit_length()
        + abs(e.numerator).bit_length()
    )
    dln = mode if e > 0 else -mode
    lf = _ln_of_dyadic(base.man, base.exp - base.prec, wp, dln)
    y = _div_dir(lf * e.numerator, e.denominator, mode)
    return _exp_of_fixed(y, wp, prec, mode)


def _pow_int(base: LogMag, e: int, prec: int, mode: int) -> LogMag:
    if e == 0:
        if base.sign == 0:
            raise ValueError("0**0 is undefined")
        return LogMag.one(prec, mode)
    if base.sign == 0:
        if e > 0:
            return LogMag(0, 0, 0, prec, mode)
        raise ZeroDivisionError("zero to a negative power")
    if e < 0:
        inv = _pow_int(base, -e, prec, -mode)
        return lm_div(LogMag.one(prec, mode), inv, prec, mode)
    sign = -1 if (base.sign < 0 and e % 2) else 1
    mag_dir = mode if sign > 0 else -mode
    work = prec + 8

    def trim(mm: int, ee: int) -> tuple[int, int]:
        bl = mm.bit_length()
        if bl <= work:
            return mm, ee
        shift = bl - work
        q, r = divmod(mm, 1 << shift)
        if r and mag_dir == UP:
            q += 1
        return q, ee + shift

    # square-and-multiply on the magnitude, every step rounded toward mag_dir
    cur = (base.man, base.exp - base.prec)
    acc: tuple[int, int] | None = None
    for bit in reversed(bin(e)[2:]):
        if bit == "1":
            acc = cur if acc is None else trim(acc[0] * cur[0], acc[1] + cur[1])
        cur = trim(cur[0] * cur[0], cur[1] * 2)
    assert acc is not None
    return _round_dyadic(sign * acc[0], acc[1], prec, mode)


def lm_log(x, prec: int | None = None, mode: int | None = None) -> LogMag:
    """Directed natural log of a positive value.  ln 1 is exactly zero.

    Cost grows with the bit length of the exponent integer, which stays tiny
    (a few dozen bits) even for the largest bound values in this package.
    """
    prec, mode = _resolve(x, None, prec, mode)
    x = _coerce(x, prec, mode)
    if x.sign <= 0:
        raise ValueError("log requires a positive value")
    if x._cmp(1) == 0:
        return LogMag(0, 0, 0, prec, mode)
    wp = prec + 48 + abs(x.exp).bit_length()
    total = _ln_of_dyadic(x.man, x.exp - x.prec, wp, mode)
    return _round_dyadic(total, -wp, prec, mode)


_EXP_ARG_LIMIT = 1 << 16


def lm_exp(x, prec: int | None = None, mode: int | None = None) -> LogMag:
    """Directed e**x.  exp(0) is exactly one.

    The argument's binary exponent is capped (|x| < 2**65536): beyond that
    the ln 2 precision needed for sound range reduction gets impractical.
    """
    prec, mode = _resolve(x, None, prec, mode)
    x = _coerce(x, prec, mode)
    if x.sign == 0:
        return LogMag.one(prec, mode)
    if x.exp > _EXP_ARG_LIMIT:
        raise OverflowError("exp argument too large to evaluate soundly")
    wp = prec + 48 + max(0, x.exp)
    m, e = x.dyadic()
    xf = _shift_dir(m, -(wp + e), mode)
    return _exp_of_fixed(xf, wp, prec, mode)


def _exp_of_fixed(xf: int, wp: int, prec: int, direction: int) -> LogMag:
    """exp(xf * 2**-wp) as a directed LogMag."""
    if xf == 0:
        return LogMag.one(prec, direction)
    l2_near = _ln2_fixed(wp, DOWN)
    q = (2 * xf + l2_near) // (2 * l2_near)
    if q:
        # r = x - q ln2; an upper bound on r needs ln2 rounded against q's sign
        l2 = _ln2_fixed(wp, -direction if q > 0 else direction)
        r = xf - q * l2
    else:
        r = xf
    if r >= 0:
        s = _exp_series(r, wp, direction)
    else:
        s = _recip_fixed(_exp_series(-r, wp, -direction), wp, direction)
    return _round_dyadic(s, q - wp, prec, direction)


def lm_ln2(prec: int = DEFAULT_PRECISION, mode: int = UP) -> LogMag:
    wp = prec + 32
    return _round_dyadic(_ln2_fixed(wp, mode), -wp, prec, mode)


def lm_ln10(prec: int = DEFAULT_PRECISION, mode: int = UP) -> LogMag:
    wp = prec + 32
    return _round_dyadic(_ln10_fixed(wp, mode), -wp, prec, mode)


def lm_ln_two_pi(prec: int = DEFAULT_PRECISION, mode: int = UP) -> LogMag:
    """Directed ln(2*pi)."""
    wp = prec + 48
    tp = _two_pi_fixed(wp, mode)
    total = _ln_of_dyadic(tp, -wp, wp, mode)
    return _round_dyadic(total, -wp, prec, mode)


def lm_max(*values: LogMag) -> LogMag:
    best = values[0]
    for v in values[1:]:
        if v > best:
            best = v
    return best


def lm_sum(values, prec: int | None = None, mode: int | None = None) -> LogMag:
    values = list(values)
    if not values:
        if prec is None or mode is None:
            raise TypeError("empty sum needs explicit precision and mode")
        return LogMag.zero(prec, mode)
    total = values[0]
    for v in values[1:]:
        total = lm_add(total, v, prec, mode)
    return total


def _decimal_string(x: LogMag, digits: int) -> str:
    if x.sign == 0:
        return "0"
    digits = max(digits, 2)
    pd = 4 * digits + 32
    wp = pd + abs(x.exp).bit_length()
    ln_val = _ln_of_dyadic(x.man, x.exp - x.prec, wp, UP)
    l10 = _ln10_fixed(wp, DOWN)
    d10 = (ln_val << wp) // l10
    e10 = d10 >> wp
    frac = d10 - (e10 << wp)
    c = _exp_of_fixed(_fx_mul(frac, _ln10_fixed(wp, DOWN), wp, DOWN), wp, pd, UP)
    cm, ce = c.dyadic()
    val = _shift_dir(cm * 10 ** (digits - 1), -ce, DOWN)
    s = str(val)
    if len(s) > digits:
        e10 += len(s) - digits
        s = s[:digits]
    sign = "-" if x.sign < 0 else ""
    return f"{sign}{s[0]}.{s[1:]}e{'+' if e10 >= 0 else ''}{e10}"
