"""Exponential growth and decay rates, and the irrationality-criterion ledger.

The decay rate of the linear forms reduces to maximizing a product over
the unit cube, which in turn reduces to the unique root of an explicit
integer polynomial in (0, 1).  Root isolation is exact (Sturm counts on
rational endpoints, exact bisection); only the final logarithms run in
ball arithmetic.  The verdict compares certified enclosures, never bare
floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .balls import BallReal, working_precision
from .numtheory import phi_exponent
from .profiles import Profile

# ---------------------------------------------------------------------------
# Exact polynomial helpers (coefficient lists, ascending powers)
# ---------------------------------------------------------------------------

def _poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_deriv(p):
    return [i * c for i, c in enumerate(p)][1:] or [Fraction(0)]


def _poly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _is_zero_poly(p) -> bool:
    return len(p) == 1 and p[0] == 0


def _poly_rem(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while True:
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if not a or _is_zero_poly(a) or len(a) - 1 < db:
            return a or [Fraction(0)]
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()


def _sturm_chain(p):
    p0 = _poly_trim(p)
    if len(p0) == 1:
        return [p0]
    chain = [p0, _poly_trim(_poly_deriv(p0))]
    while not _is_zero_poly(chain[-1]):
        r = _poly_rem(chain[-2], chain[-1])
        if _is_zero_poly(r):
            break
        chain.append([-c for c in r])
    return chain


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def count_roots(p: list[Fraction], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the open interval (lo, hi).

    Endpoints must not be roots.
    """
    if _poly_eval(p, lo) == 0 or _poly_eval(p, hi) == 0:
        raise ValueError("endpoint is a root; perturb the interval")
    chain = _sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def bisect_root(p: list[Fraction], lo: Fraction, hi: Fraction,
                width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change bracket below the given width, exactly."""
    flo = _poly_eval(p, lo)
    fhi = _poly_eval(p, hi)
    if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
        raise ValueError("interval is not a sign-change bracket")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = _poly_eval(p, mid)
        if fm == 0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo, hi


def isolate_roots(p: list[Fraction], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open subintervals of (lo, hi) each holding exactly one root."""
    total = count_roots(p, lo, hi)
    if total == 0:
        return []
    if total == 1:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    while _poly_eval(p, mid) == 0:
        mid = (mid + hi) / 2
    return isolate_roots(p, lo, mid) + isolate_roots(p, mid, hi)


# ---------------------------------------------------------------------------
# The cube-maximum reduction
# ---------------------------------------------------------------------------

class RootCertificationError(ArithmeticError):
    """The defining polynomial does not have a unique zero in (0, 1)."""


@dataclass(frozen=True)
class Lemma3Data:
    """Certified root data for the cube maximization.

    ``poly`` are exact integer coefficients (ascending); (x0_lo, x0_hi) is a
    refined isolating interval for the unique interior root; xj are the
    per-coordinate maximizers; log_max encloses the log of the maximum.
    """

    poly: tuple[Fraction, ...]
    x0_lo: Fraction
    x0_hi: Fraction
    xj: tuple[BallReal, ...]
    log_max: BallReal
    max_value: BallReal


def _maximizer_polynomial(eta) -> list[Fraction]:
    e0 = eta[0]
    left = [Fraction(0), Fraction(1)]            # x
    right = [Fraction(1)]
    for ej in eta[1:]:
        left = _poly_mul(left, [Fraction(e0 - ej), Fraction(-ej)])
        right = _poly_mul(right, [Fraction(ej), Fraction(-(e0 - ej))])
    return _poly_trim([l - r for l, r in
                       zip(left + [Fraction(0)] * len(right),
                           right + [Fraction(0)] * len(left))])


def lemma3_solve(eta, precision: int = 256) -> Lemma3Data:
    """Certify and refine the unique root of the maximizer polynomial.

    Raises RootCertificationError when the root count in (0, 1) is not
    exactly one: the reduction's hypothesis would be violated and no value
    is guessed.
    """
    eta = tuple(int(e) for e in eta)
    e0 = eta[0]
    poly = _maximizer_polynomial(eta)
    n_roots = count_roots(poly, Fraction(0), Fraction(1))
    if n_roots != 1:
        raise RootCertificationError(
            f"expected a unique zero in (0,1), Sturm count gives {n_roots}")
    lo, hi = bisect_root(poly, Fraction(0), Fraction(1),
                         Fraction(2) ** (-(precision + 8)))
    with working_precision(precision + 16):
        x0 = BallReal.from_interval(BallReal(lo), BallReal(hi))
        xj = []
        for ej in eta[1:]:
            xj.append((ej - (e0 - ej) * x0) / ((e0 - ej) - ej * x0))
        prod = BallReal(1)
        log_max = BallReal(0)
        for ej, x in zip(eta[1:], xj):
            if not (x.lower > 0 and x.upper < 1):
                raise RootCertificationError("coordinate maximizer left (0,1)")
            log_max = log_max + ej * x.log() + (e0 - 2 * ej) * (1 - x).log()
            prod = prod * x
        log_max = log_max - e0 * (1 + prod).log()
        return Lemma3Data(tuple(poly), lo, hi, tuple(xj),
                          log_max, log_max.exp())


def _log_prefactor(eta) -> Fraction:
    """(4 eta0)^eta0 / (eta1^(2 eta1) (eta0-2 eta1)^(eta0-2 eta1)), exact."""
    e0, e1 = eta[0], eta[1]
    return Fraction((4 * e0) ** e0, e1 ** (2 * e1) * (e0 - 2 * e1) ** (e0 - 2 * e1))


def _r_exponent_eta(eta, precision: int) -> BallReal:
    data = lemma3_solve(eta, precision)
    with working_precision(precision + 16):
        return BallReal(_log_prefactor(eta)).log() + data.log_max


def _section2_onedim(s: int, precision: int) -> BallReal:
    """log(1728 * max t^s (1-t)^s / (1+t^s)^3) by exact critical-point isolation."""
    # stationarity of the log-objective clears to t^(s+1) - 2 t^s - 2 t + 1
    poly = [Fraction(0)] * (s + 2)
    poly[0], poly[1], poly[s], poly[s + 1] = Fraction(1), Fraction(-2), Fraction(-2), Fraction(1)
    brackets = isolate_roots(poly, Fraction(1, 10 ** 6), 1 - Fraction(1, 10 ** 6))
    if not brackets:
        raise RootCertificationError("no interior critical point found")
    best = None
    with working_precision(precision + 16):
        for lo, hi in brackets:
            lo, hi = bisect_root(poly, lo, hi, Fraction(2) ** (-(precision + 8)))
            t = BallReal.from_interval(BallReal(lo), BallReal(hi))
            val = (s * t.log() + s * (1 - t).log()
                   - 3 * (1 + t ** s).log() + BallReal(1728).log())
            if best is None or val.upper > best.upper:
                best = val
    return best


def r_exponent(profile: Profile, precision: int = 256) -> BallReal:
    """lim (1/n) log of the linear form, as a certified enclosure.

    The general family goes through the cube-maximum reduction.  The basic
    family routes through eta = (3, 1, ..., 1) and is cross-checked against
    the one-dimensional form; disagreement is a hard failure.
    """
    value = _r_exponent_eta(profile.asymptotic_eta, precision)
    if profile.is_section2:
        one_dim = _section2_onedim(profile.s, precision)
        if not value.overlaps(one_dim):
            raise ArithmeticError(
                "cube-maximum route disagrees with the one-dimensional form")
    return value


# ---------------------------------------------------------------------------
# The criterion ledger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentLedger:
    """All exponential rates feeding the small-linear-forms criterion.

    total = s*mu - phi_exponent + r_exponent; the scaled integer forms tend
    to zero iff total < 0 with the whole enclosure below zero.
    """

    profile: Profile
    r_exponent: BallReal
    d_exponent: Fraction
    phi_exponent: BallReal
    total: BallReal

    @property
    def verdict(self) -> str:
        if self.total.strictly_negative():
            return "satisfied"
        if self.total.strictly_positive():
            return "fails"
        return "inconclusive"

    def __str__(self):
        from mpmath import nstr

        return (f"{self.profile.label()}: total = {nstr(self.total.mid, 12)} "
                f"+- {nstr(self.total.rad, 3)} -> {self.verdict}")


def exponent_ledger(profile: Profile, precision: int = 256) -> ExponentLedger:
    r_exp = r_exponent(profile, precision)
    phi_exp = phi_exponent(profile, precision)
    d_exp = profile.s * profile.mu
    with working_precision(precision + 16):
        total = BallReal(d_exp) - phi_exp + r_exp
    return ExponentLedger(profile, r_exp, d_exp, phi_exp, total)
