"""Explicit height bounds for small points on hyperelliptic curves.

Every published inequality this package evaluates lives here as a pure
function of the parameter tuple (d, g, N_S, D_K) plus optional empirical
or conjectural inputs.  All results are LogMag values rounded upward, so
a reported number is always a true bound for the quantity it names, and
each report entry says whether the number bounds the quantity itself or
its natural logarithm.

Formula identifiers ("thm_1_1", "lem_4_2", ...) are stable strings fixed
by the report format; consumers match on them, not on the prose notes.

Two bound pipelines are assembled:

  * a-priori: the three main theorems plus the route through the
    archimedean invariant mu_X (lem_5_2_i -> lem_5_1 -> eq_fhux ->
    lem_4_4_ii -> lem_4_3 -> lem_4_4_i, and lem_6_2),
  * empirical: Belyi degree from the multiplicative height of the
    branch-point cross-ratios (lem_4_2, or the modular-curve bound when
    the caller asserts it), then lem_4_1 -> lem_4_3 -> lem_4_4_i.

Effective constants the literature proves to exist but never states
(c1, c2, c3, c*, kappa, c1') default to zero and taint the report with
an "incomplete constant" caveat unless the caller supplies a value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .numeric import (
    DEFAULT_PRECISION,
    UP,
    LogMag,
    lm_add,
    lm_div,
    lm_exp,
    lm_log,
    lm_ln_two_pi,
    lm_mul,
    lm_pow,
)

TARGETS = (
    "h",
    "h_NT",
    "e_X",
    "h_F",
    "delta_X",
    "Delta_X",
    "deg_B",
    "mu_X",
    "weierstrass_sum",
)

GENUS_TWO_C_DELTA = Fraction(-186)

# exact factorial below this, directed Stirling above
FACTORIAL_EXACT_LIMIT = 2000


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


def _as_logmag(x, precision: int) -> LogMag:
    if isinstance(x, LogMag):
        return x
    return LogMag.from_fraction(_rational(x), precision, UP)


@dataclass(frozen=True)
class BoundParams:
    """d = [K:Q], genus g >= 2, N_S = product of the primes in S, and the
    absolute discriminant value D_K >= 1.  c_delta is a lower bound for
    the minimum of the delta invariant in genus g; it defaults to -186
    for g = 2 and stays None otherwise until the caller asserts one."""

    d: int
    g: int
    n_s: int
    d_k: int
    c_delta: Fraction | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        if self.g < 2:
            raise ValueError("g must be at least 2")
        if self.n_s < 1:
            raise ValueError("N_S must be a positive integer")
        if self.d_k < 1:
            raise ValueError("D_K must be a positive integer")
        if self.c_delta is None and self.g == 2:
            object.__setattr__(self, "c_delta", GENUS_TWO_C_DELTA)
        elif self.c_delta is not None:
            object.__setattr__(self, "c_delta", _rational(self.c_delta))


@dataclass(frozen=True)
class AbcParams:
    """Parameters of the abc conjecture form H <= c * S^r * D^epsilon with
    r, epsilon > 1, plus the effective-but-unstated constants of the
    conditional bounds.  A None constant means "use 0 and flag it"."""

    r: Fraction
    epsilon: Fraction
    c: Fraction = Fraction(0)
    c1: Fraction | None = None
    c2: Fraction | None = None
    c3: Fraction | None = None
    c_star: Fraction | None = None
    kappa: Fraction | None = None
    c1_prime: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "r", _rational(self.r))
        object.__setattr__(self, "epsilon", _rational(self.epsilon))
        object.__setattr__(self, "c", _rational(self.c))
        if self.r <= 1 or self.epsilon <= 1:
            raise ValueError("abc parameters require r > 1 and epsilon > 1")
        if self.c < 0:
            raise ValueError("abc constant c must be nonnegative")
        for name in ("c1", "c2", "c3", "c_star", "kappa", "c1_prime"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, _rational(v))

    def constant(self, name: str) -> tuple[Fraction, str | None]:
        """Value of a named constant plus a caveat when it was defaulted."""
        v = getattr(self, name)
        if v is None:
            return Fraction(0), f"incomplete constant {name} defaulted to 0"
        return v, None


@dataclass
class BoundEntry:
    formula_id: str
    target: str
    value: LogMag
    bounds_log_of_target: bool
    note: str | None = None

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown bound target {self.target!r}")

    def to_dict(self) -> dict:
        out = {
            "formula_id": self.formula_id,
            "target": self.target,
            "bounds_log_of_target": self.bounds_log_of_target,
            "value": self.value.to_json_value(),
        }
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class BoundReport:
    inputs: dict
    entries: list[BoundEntry]
    caveats: list[str] = field(default_factory=list)
    comparison: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "inputs": self.inputs,
            "entries": [e.to_dict() for e in self.entries],
            "caveats": self.caveats,
        }
        if self.comparison is not None:
            out["comparison"] = self.comparison
        return out

    def entry(self, formula_id: str, target: str | None = None) -> BoundEntry:
        for e in self.entries:
            if e.formula_id == formula_id and (target is None or e.target == target):
                return e
        raise KeyError(f"no entry {formula_id!r} (target {target!r})")


def nu(p: BoundParams) -> int:
    """The main parameter d * (5g)^5."""
    return p.d * (5 * p.g) ** 5


def u_g(g: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """8^((11g)^3 * 8^g), exact since it is a power of two."""
    if g < 2:
        raise ValueError("g must be at least 2")
    return lm_pow(2, 3 * (11 * g) ** 3 * 8**g, precision, UP)


def _power_product(base1: int, e1, nd: int, e2: int, precision: int) -> LogMag:
    """base1^e1 * nd^e2 upward; the second factor is skipped when nd = 1
    so the nd = 1 case returns base1^e1 with no extra rounding."""
    first = lm_pow(base1, e1, precision, UP)
    if nd == 1:
        return first
    return lm_mul(first, lm_pow(nd, e2, precision, UP), precision, UP)


def thm_cyclic_bound(p: BoundParams, precision: int = DEFAULT_PRECISION) -> LogMag:
    """nu^(d*nu) * (N_S*D_K)^nu; bounds log max(h_NT(x), h(x))."""
    v = nu(p)
    return _power_product(v, p.d * v, p.n_s * p.d_k, v, precision)


def general_invariants_bound(p: BoundParams, precision: int = DEFAULT_PRECISION) -> LogMag:
    """Same value as thm_cyclic_bound; bounds log max(e, delta, h_F, Delta)."""
    return thm_cyclic_bound(p, precision)


def thm_hyper_bound(p: BoundParams, precision: int = DEFAULT_PRECISION) -> LogMag:
    """nu^(8^g*d*nu) * (N_S*D_K)^nu; bounds the Neron-Tate sum over the
    Weierstrass points."""
    v = nu(p)
    return _power_product(v, 8**p.g * p.d * v, p.n_s * p.d_k, v, precision)


def thm_genus2_bound(p: BoundParams, precision: int = DEFAULT_PRECISION) -> LogMag:
    """Genus 2 only: nu^(2*d*nu) * (N_S*D_K)^nu with nu = 10^5 d; bounds
    max(h_NT(x), h(x)) itself, not its logarithm."""
    if p.g != 2:
        raise ValueError("this bound is specific to genus 2")
    v = nu(p)
    return _power_product(v, 2 * p.d * v, p.n_s * p.d_k, v, precision)


def genus2_intro_bound(n_s: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """(10*N_S)^(10^6), the packaged genus-2 bound over Q; it dominates
    thm_genus2_bound at d = 1."""
    if n_s < 1:
        raise ValueError("N_S must be a positive integer")
    return lm_pow(10 * n_s, 10**6, precision, UP)


def ln_factorial_upper(n: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """Upper bound for ln n!; exact-integer log below the factorial limit,
    Stirling with the 1/(12n) remainder above it."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    if n <= FACTORIAL_EXACT_LIMIT:
        return lm_log(LogMag.from_int(math.factorial(n), precision, UP), precision, UP)
    wp = precision + 16
    ln_n = lm_log(LogMag.from_int(n, wp, UP), wp, UP)
    t = lm_mul(LogMag.from_fraction(Fraction(2 * n + 1, 2), wp, UP), ln_n, wp, UP)
    t = lm_add(t, LogMag.from_int(-n, wp, UP), wp, UP)
    t = lm_add(
        t,
        lm_mul(LogMag.from_fraction(Fraction(1, 2), wp, UP), lm_ln_two_pi(wp, UP), wp, UP),
        wp,
        UP,
    )
    return lm_add(t, LogMag.from_fraction(Fraction(1, 12 * n), wp, UP), precision, UP)


def khadjavi_u(d: int, g: int, deg_phi: int) -> int:
    """The unit-equation parameter 4d(deg_phi + g - 1)^2."""
    if deg_phi < 2:
        raise ValueError("deg_phi must be at least 2")
    if d < 1 or g < 2:
        raise ValueError("need d >= 1 and g >= 2")
    return 4 * d * (deg_phi + g - 1) ** 2


def khadjavi_degB_bound(
    d: int,
    g: int,
    deg_phi: int,
    H_Lambda,
    precision: int = DEFAULT_PRECISION,
) -> LogMag:
    """(4*u*H_Lambda)^(9 u^3 2^(u-2) u!) * deg_phi with u = 4d(deg_phi+g-1)^2;
    bounds the Belyi degree.  H_Lambda is the multiplicative height of the
    normalized branch-point cross-ratios and must be at least 1."""
    u = khadjavi_u(d, g, deg_phi)
    H = _as_logmag(H_Lambda, precision)
    if H._cmp(1) < 0:
        raise ValueError("H_Lambda must be at least 1")
    if u <= FACTORIAL_EXACT_LIMIT:
        exponent = 9 * u**3 * 2 ** (u - 2) * math.factorial(u)
    else:
        wp = precision + 16
        ln_n = lm_log(LogMag.from_int(9 * u**3, wp, UP), wp, UP)
        ln_n = lm_add(ln_n, lm_mul(LogMag.from_int(u - 2, wp, UP),
                                   lm_log(LogMag.from_int(2, wp, UP), wp, UP), wp, UP), wp, UP)
        ln_n = lm_add(ln_n, ln_factorial_upper(u, wp), wp, UP)
        exponent = lm_exp(ln_n, wp, UP)
    base = lm_mul(LogMag.from_int(4 * u, precision, UP), H, precision, UP)
    power = lm_pow(base, exponent, precision, UP)
    return lm_mul(power, LogMag.from_int(deg_phi, precision, UP), precision, UP)


def zograf_degB_bound(g: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """128*(g+1), exact; valid when the curve is a classical congruence
    modular curve (caller-asserted)."""
    if g < 2:
        raise ValueError("g must be at least 2")
    return LogMag.from_int(128 * (g + 1), precision, UP)


def ex_from_degB(degB_bound, g: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """10^8 * degB^5 * g; bounds the self-intersection invariant e(X)."""
    B = _as_logmag(degB_bound, precision)
    if B._cmp(1) < 0:
        raise ValueError("the Belyi degree bound must be at least 1")
    fifth = lm_pow(B, 5, precision, UP)
    return lm_mul(LogMag.from_int(10**8 * g, precision, UP), fifth, precision, UP)


def zhang_height_bound(ex_bound, g: int, eps, precision: int = DEFAULT_PRECISION) -> LogMag:
    """(e(X) + eps) / (2(g-1)); bounds h(x) for all but finitely many
    algebraic points x, for every eps > 0."""
    eps = _rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    e = _as_logmag(ex_bound, precision)
    if e.sign < 0:
        raise ValueError("the e(X) bound must be nonnegative")
    total = lm_add(e, LogMag.from_fraction(eps, precision, UP), precision, UP)
    return lm_div(total, LogMag.from_int(2 * (g - 1), precision, UP), precision, UP)


def nt_from_h(h_bound, g: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """2g(g-1) * h; turns a stable-height bound into a Neron-Tate bound."""
    if g < 2:
        raise ValueError("g must be at least 2")
    h = _as_logmag(h_bound, precision)
    if h.sign < 0:
        raise ValueError("the height bound must be nonnegative")
    return lm_mul(LogMag.from_int(2 * g * (g - 1), precision, UP), h, precision, UP)


def noether_ex_bound(
    hF_bound,
    g: int,
    c_delta: Fraction | None,
    precision: int = DEFAULT_PRECISION,
) -> LogMag:
    """12*h_F + 4g*ln(2*pi) - c_delta; bounds e(X) from the Faltings height.

    c_delta is a lower bound for the minimum of the delta invariant; only
    genus 2 has a published value (-186), so other genera must supply one."""
    if c_delta is None:
        if g == 2:
            c_delta = GENUS_TWO_C_DELTA
        else:
            raise ValueError(
                "ineffective constant required: no proven lower bound for the "
                f"delta-invariant minimum in genus {g}; supply c_delta"
            )
    c_delta = _rational(c_delta)
    hF = _as_logmag(hF_bound, precision)
    if hF.sign < 0:
        raise ValueError("the Faltings height bound must be nonnegative")
    t = lm_mul(LogMag.from_int(12, precision, UP), hF, precision, UP)
    t = lm_add(
        t,
        lm_mul(LogMag.from_int(4 * g, precision, UP), lm_ln_two_pi(precision, UP), precision, UP),
        precision,
        UP,
    )
    return lm_add(t, LogMag.from_fraction(-c_delta, precision, UP), precision, UP)


def mu_upper(p: BoundParams, precision: int = DEFAULT_PRECISION) -> LogMag:
    """nu^(d*nu/8) * (N_S*D_K)^nu; bounds the archimedean invariant mu_X."""
    v = nu(p)
    return _power_product(v, Fraction(p.d * v, 8), p.n_s * p.d_k, v, precision)


def mu_upper_abc(p: BoundParams, a: AbcParams, precision: int = DEFAULT_PRECISION):
    """(d*r + eps)*ln N_S + eps*ln D_K + c*; bounds d*mu_X under abc.
    Returns (value, caveats)."""
    c_star, caveat = a.constant("c_star")
    t = lm_mul(
        LogMag.from_fraction(p.d * a.r + a.epsilon, precision, UP),
        lm_log(LogMag.from_int(p.n_s, precision, UP), precision, UP),
        precision,
        UP,
    )
    t = lm_add(
        t,
        lm_mul(
            LogMag.from_fraction(a.epsilon, precision, UP),
            lm_log(LogMag.from_int(p.d_k, precision, UP), precision, UP),
            precision,
            UP,
        ),
        precision,
        UP,
    )
    t = lm_add(t, LogMag.from_fraction(c_star, precision, UP), precision, UP)
    return t, ([caveat] if caveat else [])


def degB_from_mu(p: BoundParams, mu, precision: int = DEFAULT_PRECISION) -> LogMag:
    """nu^(nu/2) * mu_X; bounds the LOGARITHM of the Belyi degree."""
    m = _as_logmag(mu, precision)
    if m.sign < 0:
        raise ValueError("mu must be nonnegative")
    v = nu(p)
    return lm_mul(lm_pow(v, Fraction(v, 2), precision, UP), m, precision, UP)


def hF_from_mu(g: int, mu, precision: int = DEFAULT_PRECISION) -> LogMag:
    """u(g) * mu_X; bounds the Faltings height of the Jacobian."""
    m = _as_logmag(mu, precision)
    if m.sign < 0:
        raise ValueError("mu must be nonnegative")
    return lm_mul(u_g(g, precision), m, precision, UP)


def weierstrass_sum_bound(hF_bound, g: int, precision: int = DEFAULT_PRECISION) -> LogMag:
    """(3g-1)(8g+4)*h_F + 293*g^5; bounds the Neron-Tate sum over the
    Weierstrass points."""
    hF = _as_logmag(hF_bound, precision)
    if hF.sign < 0:
        raise ValueError("the Faltings height bound must be nonnegative")
    t = lm_mul(LogMag.from_int((3 * g - 1) * (8 * g + 4), precision, UP), hF, precision, UP)
    return lm_add(t, LogMag.from_int(293 * g**5, precision, UP), precision, UP)


def abc_omega(p: BoundParams, a: AbcParams, precision: int = DEFAULT_PRECISION) -> LogMag:
    """Omega = (r + eps/d)*ln N_S + (eps/d)*ln D_K."""
    t = lm_mul(
        LogMag.from_fraction(a.r + Fraction(a.epsilon, 1) / p.d, precision, UP),
        lm_log(LogMag.from_int(p.n_s, precision, UP), precision, UP),
        precision,
        UP,
    )
    return lm_add(
        t,
        lm_mul(
            LogMag.from_fraction(Fraction(a.epsilon, 1) / p.d, precision, UP),
            lm_log(LogMag.from_int(p.d_k, precision, UP), precision, UP),
            precision,
            UP,
        ),
        precision,
        UP,
    )


def prop_abc_bounds(p: BoundParams, a: AbcParams, precision: int = DEFAULT_PRECISION):
    """Conditional on abc: (i) nu^nu*Omega + c1 bounding log max(h_NT, h);
    (ii) u(g)(3g-1)(8g+4)*Omega + c2 bounding the Weierstrass sum;
    (iii) genus 2 only, 6*u(2)*Omega + c3 bounding h (and h_NT <= 4h).
    Returns (dict of values, caveats)."""
    omega = abc_omega(p, a, precision)
    caveats = []
    c1, cav = a.constant("c1")
    if cav:
        caveats.append(cav)
    c2, cav = a.constant("c2")
    if cav:
        caveats.append(cav)
    out = {}
    v = nu(p)
    out["i"] = lm_add(
        lm_mul(lm_pow(v, v, precision, UP), omega, precision, UP),
        LogMag.from_fraction(c1, precision, UP),
        precision,
        UP,
    )
    t = lm_mul(u_g(p.g, precision), LogMag.from_int((3 * p.g - 1) * (8 * p.g + 4), precision, UP), precision, UP)
    out["ii"] = lm_add(
        lm_mul(t, omega, precision, UP),
        LogMag.from_fraction(c2, precision, UP),
        precision,
        UP,
    )
    if p.g == 2:
        c3, cav = a.constant("c3")
        if cav:
            caveats.append(cav)
        out["iii"] = lm_add(
            lm_mul(lm_mul(LogMag.from_int(6, precision, UP), u_g(2, precision), precision, UP), omega, precision, UP),
            LogMag.from_fraction(c3, precision, UP),
            precision,
            UP,
        )
    return out, caveats


def prop_cyclic_bounds(
    p: BoundParams,
    a: AbcParams | None = None,
    precision: int = DEFAULT_PRECISION,
):
    """(i) nu^(8^g*d*nu)*(D_K*N_S)^nu - c_delta bounding h (requires
    c_delta); (ii) under abc, 6*u(g)/(g-1)*Omega + c1' - c_delta/(2g-2),
    also bounding h.  Returns (dict of values, caveats)."""
    if p.c_delta is None:
        raise ValueError(
            "ineffective constant required: no proven lower bound for the "
            f"delta-invariant minimum in genus {p.g}; supply c_delta"
        )
    caveats = []
    out = {}
    main = thm_hyper_bound(p, precision)
    out["i"] = lm_add(main, LogMag.from_fraction(-p.c_delta, precision, UP), precision, UP)
    if a is not None:
        c1p, cav = a.constant("c1_prime")
        if cav:
            caveats.append(cav)
        omega = abc_omega(p, a, precision)
        lead = lm_div(
            lm_mul(lm_mul(LogMag.from_int(6, precision, UP), u_g(p.g, precision), precision, UP), omega, precision, UP),
            LogMag.from_int(p.g - 1, precision, UP),
            precision,
            UP,
        )
        tail = c1p - p.c_delta / (2 * p.g - 2)
        out["ii"] = lm_add(lead, LogMag.from_fraction(tail, precision, UP), precision, UP)
    return out, caveats


def lemma_conj_bounds(
    p: BoundParams,
    eps,
    h_x0=None,
    kappa: Fraction | None = None,
    precision: int = DEFAULT_PRECISION,
):
    """(i) 4g^2(g-1)*h(x_0) + eps bounding h_NT, given the height of a
    point x_0 with 4(g-1)h(x_0) <= e(X) + eps; (ii) conditional bounds
    12g^2(g+2eps/d)(ln N_S + ln D_K) - g*c_delta + kappa for h_NT and
    (3g/(g-1))(g+2eps/d)(ln N_S + ln D_K) - c_delta/(4(g-1)) + kappa
    for h.  Returns (dict, caveats)."""
    eps = _rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    out = {}
    caveats = []
    if h_x0 is not None:
        h0 = _as_logmag(h_x0, precision)
        if h0.sign < 0:
            raise ValueError("h(x_0) must be nonnegative")
        t = lm_mul(LogMag.from_int(4 * p.g**2 * (p.g - 1), precision, UP), h0, precision, UP)
        out["i"] = lm_add(t, LogMag.from_fraction(eps, precision, UP), precision, UP)
    if p.c_delta is None:
        raise ValueError(
            "ineffective constant required: no proven lower bound for the "
            f"delta-invariant minimum in genus {p.g}; supply c_delta"
        )
    if kappa is None:
        kappa = Fraction(0)
        caveats.append("incomplete constant kappa defaulted to 0")
    else:
        kappa = _rational(kappa)
    ln_nd = lm_add(
        lm_log(LogMag.from_int(p.n_s, precision, UP), precision, UP),
        lm_log(LogMag.from_int(p.d_k, precision, UP), precision, UP),
        precision,
        UP,
    )
    slope = p.g + Fraction(2, 1) * eps / p.d
    t = lm_mul(LogMag.from_fraction(12 * p.g**2 * slope, precision, UP), ln_nd, precision, UP)
    out["ii_nt"] = lm_add(
        t, LogMag.from_fraction(-p.g * p.c_delta + kappa, precision, UP), precision, UP
    )
    t = lm_mul(
        LogMag.from_fraction(Fraction(3 * p.g, p.g - 1) * slope, precision, UP),
        ln_nd,
        precision,
        UP,
    )
    out["ii_h"] = lm_add(
        t,
        LogMag.from_fraction(-p.c_delta / (4 * (p.g - 1)) + kappa, precision, UP),
        precision,
        UP,
    )
    return out, caveats


def _echo_inputs(p: BoundParams, precision: int, extra: dict | None = None) -> dict:
    out = {
        "d": p.d,
        "g": p.g,
        "n_s": p.n_s,
        "d_k": p.d_k,
        "c_delta": None if p.c_delta is None else str(p.c_delta),
        "precision": precision,
    }
    if extra:
        out.update(extra)
    return out


def pipeline_apriori(
    p: BoundParams,
    abc: AbcParams | None = None,
    eps=Fraction(1),
    precision: int = DEFAULT_PRECISION,
) -> BoundReport:
    """Every bound computable from (d, g, N_S, D_K) alone, plus the
    conditional ones when abc parameters are supplied."""
    entries: list[BoundEntry] = []
    caveats: list[str] = []

    v11 = thm_cyclic_bound(p, precision)
    for target in ("h_NT", "h"):
        entries.append(BoundEntry("thm_1_1", target, v11, True))
    vgen = general_invariants_bound(p, precision)
    for target in ("e_X", "delta_X", "h_F", "Delta_X"):
        entries.append(BoundEntry("eq_general", target, vgen, True))
    entries.append(BoundEntry("thm_1_2", "weierstrass_sum", thm_hyper_bound(p, precision), False))
    if p.g == 2:
        v13 = thm_genus2_bound(p, precision)
        for target in ("h_NT", "h"):
            entries.append(BoundEntry("thm_1_3", target, v13, False))
        if p.d == 1:
            vintro = genus2_intro_bound(p.n_s, precision)
            for target in ("h_NT", "h"):
                entries.append(
                    BoundEntry("intro_genus2", target, vintro, False, note="packaged form")
                )

    vmu = mu_upper(p, precision)
    entries.append(BoundEntry("lem_5_2_i", "mu_X", vmu, False))
    entries.append(
        BoundEntry("lem_5_1", "deg_B", degB_from_mu(p, vmu, precision), True, note="via lem_5_2_i")
    )
    vhF = hF_from_mu(p.g, vmu, precision)
    entries.append(BoundEntry("eq_fhux", "h_F", vhF, False, note="via lem_5_2_i"))
    entries.append(
        BoundEntry(
            "lem_6_2",
            "weierstrass_sum",
            weierstrass_sum_bound(vhF, p.g, precision),
            False,
            note="via eq_fhux",
        )
    )
    if p.c_delta is not None:
        ve = noether_ex_bound(vhF, p.g, p.c_delta, precision)
        entries.append(BoundEntry("lem_4_4_ii", "e_X", ve, False, note="via eq_fhux"))
        vh = zhang_height_bound(ve, p.g, eps, precision)
        entries.append(
            BoundEntry(
                "lem_4_3",
                "h",
                vh,
                False,
                note="for all but finitely many points; via lem_4_4_ii",
            )
        )
        entries.append(
            BoundEntry("lem_4_4_i", "h_NT", nt_from_h(vh, p.g, precision), False, note="via lem_4_3")
        )
        pc, pc_cav = prop_cyclic_bounds(p, abc, precision)
        caveats.extend(pc_cav)
        entries.append(BoundEntry("prop_5_3_i", "h", pc["i"], False))
        if "ii" in pc:
            entries.append(BoundEntry("prop_5_3_ii", "h", pc["ii"], False, note="conditional on abc"))
    else:
        caveats.append(
            f"no delta-invariant constant for genus {p.g}; the mu-route stops at h_F "
            "and the delta-dependent bounds are omitted"
        )

    if abc is not None:
        pa, pa_cav = prop_abc_bounds(p, abc, precision)
        caveats.extend(pa_cav)
        for target in ("h_NT", "h"):
            entries.append(
                BoundEntry("prop_3_4_i", target, pa["i"], True, note="conditional on abc")
            )
        entries.append(
            BoundEntry("prop_3_4_ii", "weierstrass_sum", pa["ii"], False, note="conditional on abc")
        )
        if "iii" in pa:
            entries.append(
                BoundEntry(
                    "prop_3_4_iii",
                    "h",
                    pa["iii"],
                    False,
                    note="conditional on abc; also h_NT <= 4h",
                )
            )
        vmu2, mu_cav = mu_upper_abc(p, abc, precision)
        caveats.extend(mu_cav)
        entries.append(
            BoundEntry(
                "lem_5_2_ii",
                "mu_X",
                vmu2,
                False,
                note="conditional on abc; the value bounds d*mu_X",
            )
        )
        if p.c_delta is not None:
            lc, lc_cav = lemma_conj_bounds(p, abc.epsilon, None, abc.kappa, precision)
            caveats.extend(lc_cav)
            entries.append(
                BoundEntry("lem_4_6_ii", "h_NT", lc["ii_nt"], False, note="conditional on abc")
            )
            entries.append(
                BoundEntry("lem_4_6_ii", "h", lc["ii_h"], False, note="conditional on abc")
            )

    return BoundReport(
        inputs=_echo_inputs(
            p,
            precision,
            {"pipeline": "apriori", "eps": str(_rational(eps)), "abc": _abc_echo(abc)},
        ),
        entries=entries,
        caveats=caveats,
    )


def _abc_echo(a: AbcParams | None):
    if a is None:
        return None
    out = {"r": str(a.r), "epsilon": str(a.epsilon), "c": str(a.c)}
    for name in ("c1", "c2", "c3", "c_star", "kappa", "c1_prime"):
        v = getattr(a, name)
        out[name] = None if v is None else str(v)
    return out


def pipeline_empirical(
    p: BoundParams,
    H_Lambda,
    deg_phi: int = 2,
    use_zograf: bool = False,
    eps=Fraction(1),
    precision: int = DEFAULT_PRECISION,
) -> BoundReport:
    """Bound chain driven by the computed cross-ratio height H_Lambda:
    Belyi degree, then e(X), then h, then h_NT.  With use_zograf the
    caller asserts the curve is a classical congruence modular curve and
    the 128(g+1) degree bound replaces the H_Lambda step."""
    entries: list[BoundEntry] = []
    caveats: list[str] = []
    if use_zograf:
        degB = zograf_degB_bound(p.g, precision)
        entries.append(
            BoundEntry(
                "zograf",
                "deg_B",
                degB,
                False,
                note="caller asserts a classical congruence modular curve",
            )
        )
    else:
        degB = khadjavi_degB_bound(p.d, p.g, deg_phi, H_Lambda, precision)
        entries.append(BoundEntry("lem_4_2", "deg_B", degB, False))
    ve = ex_from_degB(degB, p.g, precision)
    entries.append(BoundEntry("lem_4_1", "e_X", ve, False, note="via the Belyi degree bound"))
    vh = zhang_height_bound(ve, p.g, eps, precision)
    entries.append(
        BoundEntry("lem_4_3", "h", vh, False, note="for all but finitely many points; via lem_4_1")
    )
    entries.append(
        BoundEntry("lem_4_4_i", "h_NT", nt_from_h(vh, p.g, precision), False, note="via lem_4_3")
    )
    extra = {
        "pipeline": "empirical",
        "deg_phi": deg_phi,
        "use_zograf": use_zograf,
        "eps": str(_rational(eps)),
        "H_Lambda": None if use_zograf else _as_logmag(H_Lambda, precision).to_json_value(),
    }
    return BoundReport(
        inputs=_echo_inputs(p, precision, extra), entries=entries, caveats=caveats
    )


def _direct_h_entry(report: BoundReport) -> BoundEntry | None:
    """The sharpest entry bounding h itself (not its log)."""
    best = None
    for e in report.entries:
        if e.target == "h" and not e.bounds_log_of_target:
            if best is None or e.value < best.value:
                best = e
    return best


def compare_pipelines(
    apriori: BoundReport, empirical: BoundReport, precision: int = DEFAULT_PRECISION
) -> dict:
    """Which chain proves the smaller direct bound on h; magnitudes are
    reported on the natural log scale because the raw values are wild."""
    ea = _direct_h_entry(apriori)
    ee = _direct_h_entry(empirical)
    out: dict = {}
    if ea is not None:
        out["apriori"] = {
            "formula_id": ea.formula_id,
            "ln_of_bound": lm_log(ea.value, precision, UP).to_json_value(),
            "log10_of_bound": ea.value.log10_float(),
        }
    if ee is not None:
        out["empirical"] = {
            "formula_id": ee.formula_id,
            "ln_of_bound": lm_log(ee.value, precision, UP).to_json_value(),
            "log10_of_bound": ee.value.log10_float(),
        }
    if ea is None or ee is None:
        out["sharper_chain"] = "undetermined"
    else:
        out["sharper_chain"] = "apriori" if ea.value <= ee.value else "empirical"
    return out


def full_report(
    p: BoundParams,
    H_Lambda=None,
    abc: AbcParams | None = None,
    deg_phi: int = 2,
    use_zograf: bool = False,
    eps=Fraction(1),
    precision: int = DEFAULT_PRECISION,
    extra_inputs: dict | None = None,
    extra_caveats: list[str] | None = None,
) -> BoundReport:
    """Both pipelines merged into a single report with the comparison."""
    ap = pipeline_apriori(p, abc, eps, precision)
    entries = list(ap.entries)
    caveats = list(ap.caveats)
    comparison = None
    if H_Lambda is not None or use_zograf:
        em = pipeline_empirical(p, H_Lambda, deg_phi, use_zograf, eps, precision)
        entries.extend(em.entries)
        caveats.extend(em.caveats)
        comparison = compare_pipelines(ap, em, precision)
    inputs = _echo_inputs(
        p,
        precision,
        {
            "eps": str(_rational(eps)),
            "abc": _abc_echo(abc),
            "deg_phi": deg_phi,
            "use_zograf": use_zograf,
            "H_Lambda": None
            if H_Lambda is None
            else _as_logmag(H_Lambda, precision).to_json_value(),
        },
    )
    if extra_inputs:
        inputs.update(extra_inputs)
    if extra_caveats:
        caveats.extend(extra_caveats)
    return BoundReport(inputs=inputs, entries=entries, caveats=caveats, comparison=comparison)
