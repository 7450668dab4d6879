import math
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    DEC_TOL,
    dec_exp,
    dec_ln,
    dec_pow,
    dec_sqrt,
    mp_ln_two_pi,
    trial_division_factor,
)
from smallpoints.numeric import (
    DOWN,
    UP,
    LogMag,
    factor,
    is_prime,
    is_prime_with_certainty,
    lm_add,
    lm_div,
    lm_exp,
    lm_ln2,
    lm_ln10,
    lm_ln_two_pi,
    lm_log,
    lm_max,
    lm_mul,
    lm_pow,
    lm_sub,
    lm_sum,
    radical,
)

# ---------------------------------------------------------------------------
# integer layer


def test_factor_frozen():
    assert factor(1) == []
    assert factor(2) == [(2, 1)]
    assert factor(256) == [(2, 8)]
    assert factor(3125) == [(5, 5)]
    assert factor(10) == [(2, 1), (5, 1)]
    assert factor(2**6 * 3**4 * 101) == [(2, 6), (3, 4), (101, 1)]
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(-6)


def test_factor_matches_trial_division():
    import random

    rng = random.Random(20260823)
    samples = list(range(1, 600)) + [rng.randrange(1, 10**9) for _ in range(60)]
    for n in samples:
        assert factor(n) == trial_division_factor(n), n


def test_factor_large_semiprimes():
    p, q = 1000003, 1000033
    assert factor(p * q) == [(p, 1), (q, 1)]
    m31 = 2**31 - 1
    assert factor(m31 * m31) == [(m31, 2)]
    assert factor(m31 * p) == [(p, 1), (m31, 1)]
    assert factor(2**61 - 1) == [(2**61 - 1, 1)]


def test_is_prime():
    # 3215031751 is the smallest strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(3215031751)
    assert factor(3215031751) == [(151, 1), (751, 1), (28351, 1)]
    for n in (2, 3, 5, 97, 104729, 2**61 - 1):
        assert is_prime(n)
    for n in (-7, 0, 1, 4, 1000001):
        assert not is_prime(n)


def test_primality_certainty_flags():
    assert is_prime_with_certainty(2**61 - 1) == (True, "deterministic")
    ok, how = is_prime_with_certainty(2**89 - 1)
    assert ok and how == "probabilistic"
    ok, how = is_prime_with_certainty((2**61 - 1) ** 2)
    assert not ok


def test_radical():
    assert radical(720) == [2, 3, 5]
    assert radical(1) == []
    assert radical(97) == [97]


# ---------------------------------------------------------------------------
# LogMag representation


def test_from_int_exact_roundtrip():
    for n in (1, -1, 7, -12345, 2**100, -(3**40), 10**30):
        x = LogMag.from_int(n, prec=128, mode=UP)
        assert x.to_fraction() == n
        m, e = x.dyadic()
        assert Fraction(m) * Fraction(2) ** e == n


def test_from_fraction_dyadic_exact():
    x = LogMag.from_fraction(Fraction(3, 8), prec=64, mode=DOWN)
    assert x.to_fraction() == Fraction(3, 8)
    assert LogMag.zero().is_zero()
    assert LogMag.one(96, DOWN).to_fraction() == 1


def test_directed_construction_is_strict_for_non_dyadic():
    t = Fraction(1, 3)
    up = LogMag.from_fraction(t, prec=128, mode=UP)
    dn = LogMag.from_fraction(t, prec=128, mode=DOWN)
    assert dn < t < up
    assert up.to_fraction() - dn.to_fraction() <= Fraction(1, 2**127)


def test_immutable():
    x = LogMag.from_int(3)
    with pytest.raises(AttributeError):
        x.man = 5


def test_comparisons():
    a = LogMag.from_int(5)
    assert a == 5
    assert a == Fraction(5)
    assert a < 6 and a > 4
    assert a <= Fraction(11, 2)
    big = lm_pow(LogMag.from_int(2), 2000, mode=UP)
    assert big == 2**2000
    assert lm_pow(LogMag.from_int(2), 2001, mode=UP) > big
    with pytest.raises(TypeError):
        a < "5"


def test_negation_flips_sign_and_mode():
    x = LogMag.from_fraction(Fraction(1, 3), prec=64, mode=UP)
    y = -x
    assert y.sign == -1 and y.mode == DOWN
    assert y.to_fraction() == -x.to_fraction()


def test_mode_resolution():
    u = LogMag.from_int(3, mode=UP)
    d = LogMag.from_int(5, mode=DOWN)
    assert lm_add(u, d).mode == UP
    assert lm_add(d, u).mode == DOWN
    assert lm_add(u, d, mode=DOWN).mode == DOWN
    with pytest.raises(TypeError):
        lm_add(Fraction(1), Fraction(2))  # no mode anywhere


# ---------------------------------------------------------------------------
# directed contract on rational inputs, checked against exact arithmetic

_fracs = st.fractions(
    min_value=Fraction(-(10**9)), max_value=Fraction(10**9), max_denominator=10**9
)
_modes = st.sampled_from([UP, DOWN])
_precs = st.sampled_from([16, 64, 128, 192])


def _check_directed(
    result: LogMag,
    exact: Fraction,
    mode: int,
    scale: Fraction | None = None,
    slack: int = 8,
):
    got = result.to_fraction()
    if mode == UP:
        assert got >= exact
    else:
        assert got <= exact
    # tightness: within a few ulps of the relevant magnitude.  For add/sub
    # that is the operand scale (cancellation), for pow the exponent
    # multiplies the base's coercion error.
    s = max(abs(exact) if scale is None else scale, Fraction(1))
    assert abs(got - exact) <= s * slack * Fraction(1, 2**result.prec)


@settings(max_examples=200)
@given(a=_fracs, b=_fracs, mode=_modes, prec=_precs)
def test_add_sub_directed(a, b, mode, prec):
    opscale = max(abs(a), abs(b))
    _check_directed(lm_add(a, b, prec=prec, mode=mode), a + b, mode, scale=opscale)
    _check_directed(lm_sub(a, b, prec=prec, mode=mode), a - b, mode, scale=opscale)


@settings(max_examples=200)
@given(a=_fracs, b=_fracs, mode=_modes, prec=_precs)
def test_mul_div_directed(a, b, mode, prec):
    _check_directed(lm_mul(a, b, prec=prec, mode=mode), a * b, mode)
    if b != 0:
        _check_directed(lm_div(a, b, prec=prec, mode=mode), a / b, mode)


@settings(max_examples=200)
@given(a=_fracs, e=st.integers(-6, 8), mode=_modes, prec=_precs)
def test_pow_int_directed(a, e, mode, prec):
    if a == 0 and e <= 0:
        return
    _check_directed(lm_pow(a, e, prec=prec, mode=mode), a**e, mode, slack=8 * (abs(e) + 1))


@settings(max_examples=200)
@given(a=_fracs, b=_fracs, mode=_modes)
def test_ops_directed_on_stored_values(a, b, mode):
    """The contract is on operand values: with LogMag operands the exact
    reference is the stored dyadic value, whatever it was rounded from."""
    x = LogMag.from_fraction(a, prec=64, mode=mode)
    y = LogMag.from_fraction(b, prec=64, mode=-mode)
    xf, yf = x.to_fraction(), y.to_fraction()
    opscale = max(abs(xf), abs(yf))
    _check_directed(lm_add(x, y, mode=mode), xf + yf, mode, scale=opscale)
    _check_directed(lm_sub(x, y, mode=mode), xf - yf, mode, scale=opscale)
    _check_directed(lm_mul(x, y, mode=mode), xf * yf, mode)
    if y.sign != 0:
        _check_directed(lm_div(x, y, mode=mode), xf / yf, mode)
    _check_directed(lm_pow(x, 3, mode=mode), xf**3, mode, slack=32)


def test_mixed_sign_regressions():
    # rounding the operands toward the result direction would be unsound here
    r = lm_sub(0, Fraction(1, 3), prec=128, mode=UP)
    assert r.to_fraction() >= Fraction(-1, 3)
    r = lm_mul(LogMag.from_int(-1, mode=UP), Fraction(1, 3))
    assert r.to_fraction() >= Fraction(-1, 3)
    r = lm_div(LogMag.from_int(1, mode=DOWN), Fraction(-3))
    assert r.to_fraction() <= Fraction(-1, 3)
    r = lm_pow(Fraction(-3, 7), 2, prec=64, mode=UP)
    assert r.to_fraction() >= Fraction(9, 49)
    r = lm_pow(Fraction(-3, 7), -2, prec=64, mode=DOWN)
    assert r.to_fraction() <= Fraction(49, 9)


def test_add_with_far_apart_exponents():
    big = lm_pow(LogMag.from_int(2, mode=UP), 10**6)
    tiny = Fraction(1, 3)
    up = lm_add(big, tiny, mode=UP)
    assert up >= 2 ** (10**6)  # exact comparison despite the huge exponent
    dn = lm_sub(lm_pow(LogMag.from_int(2, mode=DOWN), 10**6), tiny, mode=DOWN)
    assert dn <= 2 ** (10**6)


def test_zero_arithmetic():
    z = LogMag.zero(mode=UP)
    x = LogMag.from_int(7)
    assert lm_add(z, x) == 7
    assert lm_mul(z, x).is_zero()
    with pytest.raises(ZeroDivisionError):
        lm_div(x, z)
    with pytest.raises(ZeroDivisionError):
        lm_div(x, 0)
    with pytest.raises(ValueError):
        lm_pow(z, 0)
    with pytest.raises(ZeroDivisionError):
        lm_pow(z, -2)


# ---------------------------------------------------------------------------
# transcendental layer against decimal-module and mpmath oracles


def _assert_brackets(lo: LogMag, hi: LogMag, oracle: Fraction, width: Fraction):
    lof, hif = lo.to_fraction(), hi.to_fraction()
    assert lof <= oracle + DEC_TOL
    assert hif >= oracle - DEC_TOL
    assert hif - lof <= width


def test_log_brackets_oracle():
    for v in (2, 3, 10, 999983, Fraction(3, 7), Fraction(1, 1000), Fraction(22, 7)):
        lo = lm_log(v, prec=192, mode=DOWN)
        hi = lm_log(v, prec=192, mode=UP)
        _assert_brackets(lo, hi, dec_ln(v), Fraction(1, 2**150))


def test_log_of_one_is_exact_zero():
    assert lm_log(1, prec=64, mode=UP).is_zero()
    assert lm_log(LogMag.one(128, DOWN), mode=DOWN).is_zero()
    with pytest.raises(ValueError):
        lm_log(0, prec=64, mode=UP)
    with pytest.raises(ValueError):
        lm_log(Fraction(-2), prec=64, mode=UP)


def test_exp_brackets_oracle():
    for v in (1, -1, Fraction(22, 7), Fraction(-30), Fraction(1, 10**6)):
        lo = lm_exp(v, prec=192, mode=DOWN)
        hi = lm_exp(v, prec=192, mode=UP)
        _assert_brackets(lo, hi, dec_exp(v), abs(dec_exp(v)) * Fraction(1, 2**150))


def test_exp_of_zero_is_exact_one():
    assert lm_exp(0, prec=64, mode=DOWN) == 1
    assert lm_exp(LogMag.zero(), prec=64, mode=UP) == 1


def test_exp_log_round_trip_encloses():
    for v in (Fraction(17, 5), 3, Fraction(1, 7)):
        lo = lm_exp(lm_log(v, prec=160, mode=DOWN), mode=DOWN)
        hi = lm_exp(lm_log(v, prec=160, mode=UP), mode=UP)
        assert lo.to_fraction() <= v <= hi.to_fraction()


def test_exp_argument_cap():
    with pytest.raises(OverflowError):
        lm_exp(lm_pow(LogMag.from_int(2, mode=UP), 2**17), mode=UP)


def test_constants_bracket_oracles():
    _assert_brackets(
        lm_ln2(192, DOWN), lm_ln2(192, UP), dec_ln(2), Fraction(1, 2**160)
    )
    _assert_brackets(
        lm_ln10(192, DOWN), lm_ln10(192, UP), dec_ln(10), Fraction(1, 2**160)
    )
    _assert_brackets(
        lm_ln_two_pi(192, DOWN),
        lm_ln_two_pi(192, UP),
        mp_ln_two_pi(),
        Fraction(1, 2**160),
    )


def test_pow_exact_dyadic_cases():
    for mode in (UP, DOWN):
        assert lm_pow(2, 34, prec=64, mode=mode) == 17179869184
        assert lm_pow(LogMag.from_int(3, mode=mode), 5) == 243
        assert lm_pow(Fraction(1, 2), 10, prec=64, mode=mode) == Fraction(1, 1024)


def test_pow_huge_exponent_ordering():
    n = 10**6
    up = lm_pow(10, n, prec=64, mode=UP)
    dn = lm_pow(10, n, prec=64, mode=DOWN)
    exact = 10**n
    assert dn <= exact <= up
    assert abs(up.log10_float() - n) < 1e-9


def test_pow_fractional_brackets_oracle():
    lo = lm_pow(2, Fraction(1, 2), prec=160, mode=DOWN)
    hi = lm_pow(2, Fraction(1, 2), prec=160, mode=UP)
    _assert_brackets(lo, hi, dec_sqrt(2), Fraction(1, 2**120))
    lo = lm_pow(Fraction(1, 2), Fraction(1, 3), prec=160, mode=DOWN)
    hi = lm_pow(Fraction(1, 2), Fraction(1, 3), prec=160, mode=UP)
    _assert_brackets(lo, hi, dec_pow(Fraction(1, 2), Fraction(1, 3)), Fraction(1, 2**120))
    # negative fractional exponent flips the base coercion direction
    lo = lm_pow(Fraction(22, 7), Fraction(-3, 2), prec=160, mode=DOWN)
    hi = lm_pow(Fraction(22, 7), Fraction(-3, 2), prec=160, mode=UP)
    _assert_brackets(lo, hi, dec_pow(Fraction(22, 7), Fraction(-3, 2)), Fraction(1, 2**120))


def test_pow_domain_errors():
    with pytest.raises(ValueError):
        lm_pow(Fraction(-2), Fraction(1, 2), prec=64, mode=UP)
    with pytest.raises(TypeError):
        lm_pow(2, 1.5, prec=64, mode=UP)


def test_coarse_up_dominates_fine_up():
    cases = [
        lambda p: lm_log(Fraction(22, 7), prec=p, mode=UP),
        lambda p: lm_exp(Fraction(-7, 3), prec=p, mode=UP),
        lambda p: lm_pow(Fraction(31, 7), Fraction(5, 3), prec=p, mode=UP),
        lambda p: lm_ln_two_pi(p, UP),
        lambda p: lm_pow(Fraction(4), Fraction(1, 2), prec=p, mode=UP),
    ]
    for f in cases:
        assert f(64) >= f(256)
    assert lm_log(Fraction(22, 7), prec=64, mode=DOWN) <= lm_log(
        Fraction(22, 7), prec=256, mode=DOWN
    )


# ---------------------------------------------------------------------------
# aggregation and rendering


def test_max_and_sum():
    xs = [LogMag.from_int(n, mode=UP) for n in (3, -5, 7, 2)]
    assert lm_max(*xs) == 7
    assert lm_sum(xs) == 7
    assert lm_sum([], prec=64, mode=UP).is_zero()
    with pytest.raises(TypeError):
        lm_sum([])


def test_pair_roundtrip_is_exact():
    x = lm_pow(Fraction(3, 7), 41, prec=128, mode=DOWN)
    h, e = x.to_pair()
    man = int(h, 16)
    assert Fraction(man, 2**x.prec) * Fraction(2) ** int(e) == abs(x.to_fraction())
    assert (h.startswith("-")) == (x.sign < 0)


def test_json_value_fields():
    x = LogMag.from_fraction(Fraction(-22, 7), prec=64, mode=DOWN)
    j = x.to_json_value()
    assert set(j) == {"decimal", "mantissa_hex", "exponent", "precision", "rounding"}
    assert j["precision"] == 64
    assert j["rounding"] == "down"
    assert j["mantissa_hex"].startswith("-0x")


def _parsed(s: str) -> Fraction:
    return Fraction(Decimal(s))


def test_decimal_string_accuracy():
    x = LogMag.from_fraction(Fraction(22, 7), prec=128, mode=UP)
    rel = abs(_parsed(x.to_decimal_string(24)) / x.to_fraction() - 1)
    assert rel < Fraction(1, 10**21)
    assert x.to_decimal_string().startswith("3.142857142857142857")

    y = lm_pow(7, 10**5, prec=128, mode=UP)
    rel = abs(_parsed(y.to_decimal_string(24)) / Fraction(7 ** 10**5) - 1)
    assert rel < Fraction(1, 10**20)

    z = LogMag.from_fraction(Fraction(-1, 10**6), prec=128, mode=DOWN)
    s = z.to_decimal_string(24)
    assert s.startswith("-1.0000") and s.endswith("e-6")
    assert abs(_parsed(s) / z.to_fraction() - 1) < Fraction(1, 10**21)

    assert LogMag.zero().to_decimal_string() == "0"
    one = LogMag.one()
    assert _parsed(one.to_decimal_string(30)) == 1


def test_decimal_string_more_digits():
    x = LogMag.from_fraction(Fraction(1, 3), prec=256, mode=DOWN)
    rel = abs(_parsed(x.to_decimal_string(60)) / x.to_fraction() - 1)
    assert rel < Fraction(1, 10**55)


def test_log10_float():
    assert abs(LogMag.from_int(1000).log10_float() - 3.0) < 1e-12
    x = lm_pow(10, 100, prec=512, mode=UP)
    assert abs(x.log10_float() - 100.0) < 1e-9
    with pytest.raises(ValueError):
        LogMag.zero().log10_float()


def test_to_fraction_refuses_gigantic_exponents():
    x = lm_pow(2, 1 << 25, prec=64, mode=UP)
    with pytest.raises(OverflowError):
        x.to_fraction()
