"""High-precision rigorous evaluation: the alternating beta values, the
linear-form series, the series-vs-decomposition consistency oracle, and a
Monte Carlo estimate of the multidimensional integral form.

Everything except the Monte Carlo routine returns balls whose radii are
honest bounds:

* beta values use the Chebyshev-weight acceleration scheme for alternating
  series of moments; its error is at most 1/d with d the integer Chebyshev
  normalizer, since 1/(2k+1)**i is a moment sequence of a positive measure.
* the linear-form series is summed exactly (rational arithmetic) up to a
  cutoff, and the tail is evaluated by Boole summation: a short sum of
  Taylor coefficients at the cutoff weighted by Euler-polynomial constants,
  with the remainder bounded through the partial-fraction coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv

from .balls import BallReal, working_precision
from .decomposition import DecompositionResult, beta_coefficients
from .profiles import Profile
from .rationalfn import (LinearProductRep, PartialFractionTable,
                         build_general, build_section2, partial_fractions)
from .series import divide_trunc, euler_numbers_at_zero, mul_linear

_LOG2_ACCEL = 2.5431  # log2(3 + sqrt 8), the per-term gain of the scheme
_PI_LOWER = Fraction(333, 106)  # rational lower bound on pi


def _chebyshev_normalizer(n: int) -> int:
    """T_n(3), the integer ((3+sqrt8)^n + (3-sqrt8)^n)/2."""
    a, b = 1, 3
    for _ in range(n - 1):
        a, b = b, 6 * b - a
    return b if n >= 1 else 1


@lru_cache(maxsize=None)
def beta_value(i: int, precision: int = 256) -> BallReal:
    """The alternating sum of odd reciprocal i-th powers, radius <= 2**(1-precision)."""
    if i < 1:
        raise ValueError("beta index must be >= 1")
    n = int((precision + 4) / _LOG2_ACCEL) + 3
    d = _chebyshev_normalizer(n)
    b = Fraction(-1)
    c = Fraction(-d)
    s = Fraction(0)
    for k in range(n):
        c = b - c
        s += c / Fraction(2 * k + 1) ** i
        b *= Fraction(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1))
    # moment-sequence error bound: |S - s/d| <= S/d < 1/d
    with working_precision(precision + 16):
        return BallReal(s / d, radius=Fraction(1, d))


def build_profile_rep(profile: Profile) -> LinearProductRep:
    if profile.is_section2:
        return build_section2(profile.s, profile.n)
    return build_general(profile, profile.n)


# ---------------------------------------------------------------------------
# Boole tail machinery
# ---------------------------------------------------------------------------

def _tail_remainder_bound(table: PartialFractionTable, shift: Fraction,
                          a: int, m: int) -> Fraction:
    """Rigorous bound on the Boole remainder for the tail starting at a.

    Integrates the m-th derivative bound of the partial-fraction form
    termwise; the periodic-Euler-polynomial envelope contributes 3/pi**m
    (Fourier bound with margin).  Everything is exact rational arithmetic
    with a rational lower bound for pi.
    """
    total = Fraction(0)
    for i, k, c in table.entries():
        if not c:
            continue
        dist = a + shift + k + table.pole_offset
        if dist <= 0:
            raise ValueError("tail cutoff does not clear the poles")
        rising = Fraction(1)
        for j in range(m):
            rising *= i + j
        total += abs(c) * rising / ((i + m - 1) * dist ** (i + m - 1))
    return 3 * total / _PI_LOWER ** m


def _choose_tail_parameters(table, shift, start, target: Fraction) -> tuple[int, int]:
    """Smallest workable (cutoff a, order m) with remainder bound <= target."""
    m = 32
    while m <= 4096:
        a = max(start, 1) + 2 * m
        if _tail_remainder_bound(table, shift, a, m) <= target:
            return a, m
        m = m * 3 // 2
    raise ArithmeticError("tail order limit exceeded; raise the target radius")


def _taylor_interval(rep: LinearProductRep, x0: Fraction, order: int) -> list:
    """Interval Taylor coefficients of the function at rational x0."""
    def conv(q: Fraction):
        return iv.mpf(q.numerator) / q.denominator

    num = [conv(rep.scalar)]
    for r, mult in rep.num_roots:
        c = conv(x0 - r)
        for _ in range(mult):
            num = mul_linear(num, c, order)
    den = [iv.mpf(1)]
    for r, mult in rep.den_roots:
        c = conv(x0 - r)
        for _ in range(mult):
            den = mul_linear(den, c, order)
    return divide_trunc(num, den, order)


@dataclass(frozen=True)
class SeriesEvaluation:
    value: BallReal
    direct_terms: int
    tail_order: int
    tail_bound: Fraction


def alternating_series_tail(rep: LinearProductRep, table: PartialFractionTable,
                            shift: Fraction, start: int, target: Fraction,
                            precision: int) -> SeriesEvaluation:
    """sum_{nu >= start} (-1)**nu f(nu) with f(nu) = rep(nu + shift).

    Exact partial sum to a cutoff, then Boole summation for the tail: the
    alternating tail equals (-1)**a/2 * sum_k E_k(0) s_k up to a remainder
    bounded by ``_tail_remainder_bound``; s_k are the Taylor coefficients
    of f at the cutoff.
    """
    a, m = _choose_tail_parameters(table, shift, start, target)
    bound = _tail_remainder_bound(table, shift, a, m)

    direct = Fraction(0)
    for nu in range(start, a):
        v = rep.evaluate(nu + shift)
        direct += v if nu % 2 == 0 else -v

    euler = euler_numbers_at_zero(m)
    guard = 64
    while True:
        with working_precision(precision + guard):
            coeffs = _taylor_interval(rep, a + shift, m)
            acc = iv.mpf(0)
            for k in range(m):
                e = euler[k]
                if not e:
                    continue
                acc += (iv.mpf(e.numerator) / e.denominator) * coeffs[k]
            if a % 2 == 1:
                acc = -acc
            tail = BallReal(acc / 2, radius=bound)
            total = tail + BallReal(direct)
        # retry only if interval rounding dominated the rigorous tail bound
        cap = Fraction(2) ** (-(precision + 8)) * max(1, abs(direct)) + 4 * bound
        if guard >= 1024 or total.rad <= _frac_to_mpf(cap):
            return SeriesEvaluation(total, a - start, m, bound)
        guard *= 2


def r_n_series(profile: Profile, precision: int = 256,
               rep: LinearProductRep | None = None,
               table: PartialFractionTable | None = None) -> BallReal:
    """The linear-form value by direct series summation (independent of the
    decomposition), with rigorous radius.

    The target absolute accuracy is 2**-(precision+16); the reported radius
    additionally reflects rounding in the tail evaluation.
    """
    rep = rep or build_profile_rep(profile)
    table = table or partial_fractions(rep)
    shift = profile.series_argument_shift
    start = profile.series_start
    tbits = precision + 16
    ev = alternating_series_tail(rep, table, shift, start,
                                 Fraction(2) ** -tbits, precision)
    # If the value sits below the absolute target the enclosure straddles
    # zero; descend to a relative target so the sign gets certified too.
    # The midpoint only estimates the magnitude once it clears the target,
    # so descend geometrically while it does not.
    for _ in range(16):
        if not ev.value.contains_zero():
            break
        mid = abs(ev.value.mid)
        if mid != 0 and _log2_mpf(mid) > -tbits + 4:
            tbits = -_log2_mpf(mid) + precision + 16
        else:
            tbits *= 2
        ev = alternating_series_tail(rep, table, shift, start,
                                     Fraction(2) ** -tbits,
                                     max(precision, tbits - 16))
    eps = profile.series_term_sign(0)  # overall sign vs the plain (-1)**nu sum
    return ev.value if eps == 1 else -ev.value


# ---------------------------------------------------------------------------
# Consistency oracle
# ---------------------------------------------------------------------------

def decomposition_value(result: DecompositionResult, precision: int = 256) -> BallReal:
    """a_0 + sum a_i beta(i) as a ball, at precision adapted to the a_i sizes."""
    bits = max(max(abs(ai.numerator).bit_length(), ai.denominator.bit_length())
               for ai in result.a)
    p2 = 256 * math.ceil((precision + bits + 48) / 256)
    with working_precision(p2):
        total = BallReal(result.a[0])
        for i in result.beta_indices:
            ai = result.a[i]
            if ai:
                total = total + BallReal(ai) * beta_value(i, p2)
    return total


@dataclass(frozen=True)
class ConsistencyReport:
    profile: Profile
    series: BallReal
    decomposition: BallReal
    passed: bool
    gap_bits: int

    def __str__(self):
        verdict = "pass" if self.passed else "FAIL"
        return (f"{self.profile.label()}: series vs decomposition {verdict} "
                f"(gap {self.gap_bits} bits)")


def consistency_check(profile: Profile, precision: int = 256,
                      rep: LinearProductRep | None = None,
                      table: PartialFractionTable | None = None,
                      decomposition: DecompositionResult | None = None) -> ConsistencyReport:
    """Evaluate the linear form two independent ways and compare.

    Passes iff the two balls overlap; the gap counts the bits below 1 of
    the total discrepancy (midpoint distance plus both radii).
    """
    rep = rep or build_profile_rep(profile)
    table = table or partial_fractions(rep)
    dec = decomposition or beta_coefficients(table, profile)
    series = r_n_series(profile, precision, rep=rep, table=table)
    direct = decomposition_value(dec, precision)
    disc = abs(series.mid - direct.mid) + series.rad + direct.rad
    gap = (precision + 64) if disc <= 0 else -int(_log2_mpf(disc)) - 1
    return ConsistencyReport(profile, series, direct,
                             series.overlaps(direct), gap)


def _frac_to_mpf(q: Fraction):
    from mpmath import mpf

    return mpf(q.numerator) / mpf(q.denominator)


def _log2_mpf(x) -> int:
    """floor-ish log2 of a positive mpf of any exponent (diagnostic use)."""
    from mpmath import log, mpf

    return int(math.floor(float(log(mpf(x)) / log(mpf(2)))))


# ---------------------------------------------------------------------------
# Monte Carlo integral
# ---------------------------------------------------------------------------

def mc_integral(eta, n: int, samples: int, seed: int) -> BallReal:
    """Monte Carlo estimate of the s-dimensional integral form (general family).

    Radius is three standard errors: statistical, not rigorous; never used
    in acceptance-critical arithmetic.  Deterministic for a fixed seed.
    """
    import numpy as np

    from .profiles import general

    if samples <= 0:
        raise ValueError("samples must be positive")
    profile = eta if isinstance(eta, Profile) else general(eta, n)
    e0, e1 = profile.eta[0], profile.eta[1]
    h0 = profile.h0
    pref = Fraction(4 ** (e0 * n) * math.factorial(h0),
                    math.factorial(e1 * n) ** 2
                    * math.factorial((e0 - 2 * e1) * n))
    x_exps = [float(ej * n) - 0.5 for ej in profile.eta[1:]]
    y_exps = [float((e0 - 2 * ej) * n) for ej in profile.eta[1:]]

    rng = np.random.default_rng(seed)
    chunk = 1 << 16
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        t = rng.random((size, profile.s))
        w = np.ones(size)
        for j in range(profile.s):
            w *= t[:, j] ** x_exps[j] * (1.0 - t[:, j]) ** y_exps[j]
        prod = t.prod(axis=1)
        f = w * (1.0 - prod) / (1.0 + prod) ** (h0 + 1)
        total += float(f.sum())
        total_sq += float((f * f).sum())
        done += size
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    sem = math.sqrt(var / samples)
    with working_precision(64):
        return BallReal(Fraction(mean) * pref, radius=Fraction(3 * sem) * pref)
