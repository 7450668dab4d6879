"""Arithmetic invariants of hyperelliptic curves y^2 = f(x) over Q.

The input model is cleared to integer coefficients (rescaling y leaves the
curve unchanged), then:

  * genus from the degree, rejecting genus < 2 and singular models,
  * a finite superset S of the bad primes: 2 together with every prime
    dividing the leading coefficient or the discriminant of f,
  * the 2g+2 branch points (infinity when deg f is odd, plus the roots of
    f) in a deterministic order,
  * a normalized cross-ratio vector: a Mobius transform sends three branch
    points to infinity, 0, 1, and the images of the remaining 2g-1 are
    cross-ratios; the triple is chosen to minimize the certified upper
    bound on the largest Weil height, preferring rational triples,
  * S-unit flags for each cross-ratio lambda and 1-lambda, which the
    Parshin construction expects to hold without exception,
  * an empirical lower estimate mu_hat: the largest height among the
    x-coordinates of the finite Weierstrass points.

Equal upper bounds fall back to the lexicographically first triple, so the
whole analysis is deterministic.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebraic import (
    INFINITY,
    AlgebraicNumber,
    DegreeCapExceeded,
    algebraic_roots,
    anharmonic_orbit,
    cross_ratio,
    is_s_unit,
    weil_height,
)
from .numeric import (
    DEFAULT_PRECISION,
    DOWN,
    UP,
    LogMag,
    factor,
    is_prime_with_certainty,
    lm_exp,
    lm_max,
)
from .polynomial import Poly, discriminant, factor_over_z, parse_poly, poly_gcd, render_poly

_EQUATION_RE = re.compile(r"^\s*y\s*(?:\^|\*\*)\s*2\s*=\s*(.+)$", re.IGNORECASE)

_SEARCH_PRECISION = 64

# orbit position of cr(p_sigma(1), p_sigma(2), p_sigma(3), z) relative to the
# orbit of cr(p1, p2, p3, z); keys are sigma as positions in the sorted triple
_ORDER_TO_ORBIT = {
    (0, 1, 2): 0,
    (0, 2, 1): 1,
    (1, 0, 2): 2,
    (1, 2, 0): 5,
    (2, 0, 1): 3,
    (2, 1, 0): 4,
}


def parse_curve(text: str) -> Poly:
    """Read 'y^2 = f(x)' (or just f) and return the integral model.

    Raises ValueError for genus < 2 or a singular model, naming the
    repeated factor in the singular case.
    """
    m = _EQUATION_RE.match(text)
    f = parse_poly(m.group(1) if m else text)
    if f.degree() < 5:
        raise ValueError(
            f"genus < 2: the right hand side must have degree at least 5, "
            f"got {f.degree()}"
        )
    d = f.denominator_lcm()
    if d != 1:
        # y -> y/d turns y^2 = f into an integral model with rhs d^2 f
        f = f * (d * d)
    g = poly_gcd(f, f.derivative())
    if g.degree() > 0:
        _, fac = factor_over_z(g)
        names = ", ".join(render_poly(h) for h, _ in fac)
        raise ValueError(f"singular model: repeated factor {names}")
    return f


@dataclass
class CrossRatioRecord:
    z_index: int
    value: AlgebraicNumber
    height: tuple[LogMag, LogMag]
    lambda_s_unit: bool
    one_minus_s_unit: bool


@dataclass
class Normalization:
    triple: tuple[int, int, int]
    records: list[CrossRatioRecord]
    h_max: tuple[LogMag, LogMag]
    height_multiplicative: tuple[LogMag, LogMag]


@dataclass
class CurveAnalysis:
    equation: str
    f: Poly
    genus: int
    leading_coefficient: int
    disc: int
    s_primes: list[int]
    n_s: int
    branch_points: list
    normalization: Normalization | None
    mu_hat: tuple[LogMag, LogMag]
    parshin_exceptions: list[int]
    caveats: list[str] = field(default_factory=list)
    precision: int = DEFAULT_PRECISION

    def to_dict(self) -> dict:
        out = {
            "equation": self.equation,
            "genus": self.genus,
            "leading_coefficient": self.leading_coefficient,
            "discriminant": str(self.disc),
            "s_primes": self.s_primes,
            "n_s": str(self.n_s),
            "branch_points": [_point_descriptor(p) for p in self.branch_points],
            "mu_hat": _enclosure_dict(self.mu_hat),
            "parshin_exceptions": self.parshin_exceptions,
            "caveats": self.caveats,
            "precision": self.precision,
        }
        if self.normalization is None:
            out["normalization"] = None
        else:
            nz = self.normalization
            out["normalization"] = {
                "triple": list(nz.triple),
                "records": [
                    {
                        "z_index": r.z_index,
                        "lambda": _point_descriptor(r.value),
                        "height": _enclosure_dict(r.height),
                        "lambda_s_unit": r.lambda_s_unit,
                        "one_minus_lambda_s_unit": r.one_minus_s_unit,
                    }
                    for r in nz.records
                ],
                "h_max": _enclosure_dict(nz.h_max),
                "height_multiplicative": _enclosure_dict(nz.height_multiplicative),
            }
        return out


def _point_descriptor(p) -> dict:
    if p is INFINITY:
        return {"kind": "infinity"}
    if p.is_rational:
        return {"kind": "rational", "value": str(p.as_fraction())}
    m = p.box.mid()
    return {
        "kind": "algebraic",
        "minpoly": render_poly(p.minpoly),
        "root_index": p.index,
        "approx": [float(m[0]), float(m[1])],
    }


def _enclosure_dict(enc: tuple[LogMag, LogMag]) -> dict:
    return {"lower": enc[0].to_json_value(), "upper": enc[1].to_json_value()}


def bad_prime_superset(f: Poly) -> tuple[list[int], int, list[str]]:
    """S = {2} union primes of lc(f) * disc(f), with caveats when a factor's
    primality is only probabilistic."""
    lc = int(f.lc())
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("discriminant is zero; the model is singular")
    primes = {2}
    caveats = []
    for m in (abs(lc), abs(int(disc))):
        for p, _ in factor(m):
            _, kind = is_prime_with_certainty(p)
            if kind == "probabilistic":
                caveats.append(f"primality of {p} in S is probabilistic")
            primes.add(p)
    s = sorted(primes)
    n_s = 1
    for p in s:
        n_s *= p
    return s, n_s, caveats


def branch_point_list(f: Poly, genus: int) -> list:
    """Infinity first (odd degree only), then rational roots ascending,
    then irrational roots by (minpoly degree, coefficients, root index)."""
    pts: list = []
    if f.degree() % 2 == 1:
        pts.append(INFINITY)
    roots = algebraic_roots(f)
    rationals = sorted(
        (r for r in roots if r.is_rational), key=lambda r: r.as_fraction()
    )
    irrationals = sorted(
        (r for r in roots if not r.is_rational), key=lambda r: r.sort_key()
    )
    pts.extend(rationals)
    pts.extend(irrationals)
    if len(pts) != 2 * genus + 2:
        raise RuntimeError("branch point count mismatch")
    return pts


def _normalization_search(branch: list, precision: int):
    """Choose the ordered triple minimizing the certified upper bound on the
    largest cross-ratio height.  Returns (triple, lambdas, caveats) with
    triple None when every candidate hit the resultant degree cap."""
    n = len(branch)
    rational_idx = [
        i for i, p in enumerate(branch) if p is INFINITY or p.is_rational
    ]
    pool = rational_idx if len(rational_idx) >= 3 else list(range(n))
    caveats = []
    if len(rational_idx) < 3:
        caveats.append(
            "fewer than three rational branch points; normalization searched "
            "over all triples"
        )
    orbit_cache: dict = {}

    def orbit_for(combo, z):
        key = (combo, z)
        if key not in orbit_cache:
            a, b, c = combo
            try:
                lam = cross_ratio(branch[a], branch[b], branch[c], branch[z])
                orbit_cache[key] = anharmonic_orbit(lam)
            except DegreeCapExceeded:
                orbit_cache[key] = None
        return orbit_cache[key]

    best = None
    skipped = 0
    for triple in itertools.permutations(pool, 3):
        combo = tuple(sorted(triple))
        sigma = tuple(combo.index(t) for t in triple)
        pos = _ORDER_TO_ORBIT[sigma]
        lams = []
        feasible = True
        for z in range(n):
            if z in triple:
                continue
            orb = orbit_for(combo, z)
            if orb is None:
                feasible = False
                break
            lams.append((z, orb[pos]))
        if not feasible:
            skipped += 1
            continue
        h_up = lm_max(*[weil_height(lam, _SEARCH_PRECISION)[1] for _, lam in lams])
        if best is None or h_up < best[0]:
            best = (h_up, triple, lams)
    if skipped:
        caveats.append(f"{skipped} candidate triples skipped by the degree cap")
    if best is None:
        caveats.append("no feasible normalization triple under the degree cap")
        return None, [], caveats
    return best[1], best[2], caveats


def analyze_curve(text: str, precision: int = DEFAULT_PRECISION) -> CurveAnalysis:
    f = parse_curve(text)
    genus = (f.degree() - 1) // 2
    s_primes, n_s, caveats = bad_prime_superset(f)
    branch = branch_point_list(f, genus)

    triple, lams, norm_caveats = _normalization_search(branch, precision)
    caveats.extend(norm_caveats)

    normalization = None
    parshin_exceptions: list[int] = []
    if triple is not None:
        records = []
        for z, lam in lams:
            lo, hi = weil_height(lam, precision)
            one_minus = lam.mobius(-1, 1, 0, 1)
            rec = CrossRatioRecord(
                z_index=z,
                value=lam,
                height=(lo, hi),
                lambda_s_unit=is_s_unit(lam, s_primes),
                one_minus_s_unit=is_s_unit(one_minus, s_primes),
            )
            records.append(rec)
        for idx, rec in enumerate(records):
            if not (rec.lambda_s_unit and rec.one_minus_s_unit):
                parshin_exceptions.append(idx)
        h_lo = lm_max(*[r.height[0] for r in records])
        h_hi = lm_max(*[r.height[1] for r in records])
        normalization = Normalization(
            triple=triple,
            records=records,
            h_max=(h_lo, h_hi),
            height_multiplicative=(
                lm_exp(h_lo, precision, DOWN),
                lm_exp(h_hi, precision, UP),
            ),
        )

    finite = [p for p in branch if p is not INFINITY]
    heights = [weil_height(p, precision) for p in finite]
    mu_hat = (lm_max(*[h[0] for h in heights]), lm_max(*[h[1] for h in heights]))

    return CurveAnalysis(
        equation="y^2 = " + render_poly(f),
        f=f,
        genus=genus,
        leading_coefficient=int(f.lc()),
        disc=int(discriminant(f)),
        s_primes=s_primes,
        n_s=n_s,
        branch_points=branch,
        normalization=normalization,
        mu_hat=mu_hat,
        parshin_exceptions=parshin_exceptions,
        caveats=caveats,
        precision=precision,
    )
