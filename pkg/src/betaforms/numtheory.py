"""Prime sieving, lcm sequences, floor-sum carry functions and their minima,
the prime-power cancellation factor, digamma at rationals, and the
exponential growth rate of the cancellation factor.

The carry functions are integer-valued sums of floors of linear forms in
(x, y), periodic with period 1 in both arguments.  Their minimum over y
is piecewise constant in x with rational breakpoints; the table of that
minimum drives both the exact prime-power factor and its asymptotic
exponent.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .balls import BallReal, ball_euler_gamma, ball_pi, working_precision


# ---------------------------------------------------------------------------
# Primes and lcm
# ---------------------------------------------------------------------------

def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start:limit + 1:p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, f in enumerate(flags) if f]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d = 17
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer kept in factored form: sorted (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or not _is_prime(p):
                raise ValueError(f"factor keys must be increasing primes, got {p}")
            if e < 1:
                raise ValueError(f"exponent for {p} must be >= 1, got {e}")
            last = p

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "FactoredInteger":
        return cls(tuple(sorted((p, e) for p, e in d.items() if e != 0)))

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    __int__ = value

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def lcm_up_to(m: int) -> FactoredInteger:
    """d_m = lcm(1, 2, ..., m) as a product of maximal prime powers <= m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    factors = {}
    for p in sieve_primes(m):
        pe, e = p, 1
        while pe * p <= m:
            pe *= p
            e += 1
        factors[p] = e
    return FactoredInteger.from_dict(factors)


# ---------------------------------------------------------------------------
# Carry functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CarrySpec:
    """Which floor-sum carry function to use.

    ``family`` is "section2" (fixed six-term sum) or "general" (built from
    the positive integer tuple eta = (eta_0, ..., eta_s)).
    """

    family: str
    eta: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family == "section2":
            if self.eta is not None:
                raise ValueError("section2 carry takes no eta")
        elif self.family == "general":
            if self.eta is None or len(self.eta) < 3:
                raise ValueError("general carry needs eta = (eta_0, ..., eta_s)")
            e0, rest = self.eta[0], self.eta[1:]
            s = len(rest)
            for ej in rest:
                if not 0 < 2 * ej < e0:
                    raise ValueError(f"need 0 < eta_j < eta_0/2, got {ej} vs {e0}")
            if 2 * sum(rest) > (s - 1) * e0:
                raise ValueError("need sum(eta_j) <= (s-1) eta_0 / 2")
        else:
            raise ValueError(f"unknown carry family {self.family!r}")

    def terms(self) -> tuple[tuple[int, int, int], ...]:
        """The sum as (sign, x-coefficient, y-coefficient) floor terms."""
        if self.family == "section2":
            return (
                (1, 2, 2), (1, 4, -2),
                (-1, 1, 1), (-1, 2, -1),
                (-3, 0, 1), (-3, 1, -1),
            )
        e0 = self.eta[0]
        e1 = self.eta[1]
        terms = [
            (1, 2 * e0, -2), (1, 0, 2),
            (-1, e0, -1), (-1, 0, 1),
            (-2, e1, 0), (-1, e0 - 2 * e1, 0),
        ]
        for ej in self.eta[1:]:
            terms.append((1, e0 - 2 * ej, 0))
            terms.append((-1, -ej, 1))
            terms.append((-1, e0 - ej, -1))
        return tuple(terms)

    @property
    def farey_order(self) -> int:
        # Conservative bound on the denominators of all x-breakpoints of the
        # minimum-over-y table.
        if self.family == "section2":
            return 12
        return 2 * self.eta[0] + 2 * max(self.eta[1:])


def carry_value(spec: CarrySpec, x, y) -> int:
    """Exact value of the carry function at (x, y); both arguments mod 1."""
    x, y = Fraction(x), Fraction(y)
    total = 0
    for sign, ax, ey in spec.terms():
        total += sign * math.floor(ax * x + ey * y)
    return total


def _min_over_y(terms, x: Fraction) -> tuple[int, Fraction]:
    """Minimum of the carry sum over y in [0, 1), and a witness y.

    The sum is piecewise constant in y with jumps only where some floor
    argument crosses an integer; those candidate positions, plus the open
    intervals between them (sampled at midpoints), cover all values.
    """
    a, b = x.numerator, x.denominator
    cands = {Fraction(0)}
    for _, ax, ey in terms:
        if ey == 0:
            continue
        base = Fraction(-ax, ey) * x
        step = Fraction(1, abs(ey))
        for j in range(abs(ey)):
            v = base + j * step
            cands.add(v - math.floor(v))
    cs = sorted(cands)
    points = []
    for i, y in enumerate(cs):
        nxt = cs[i + 1] if i + 1 < len(cs) else cs[0] + 1
        points.append(y)
        points.append((y + nxt) / 2)

    sig = [t[0] for t in terms]
    axa = [t[1] * a for t in terms]
    eyb = [t[2] * b for t in terms]
    nterms = len(terms)

    best = None
    witness = None
    for y in points:
        c, e = y.numerator, y.denominator
        be = b * e
        tot = 0
        for t in range(nterms):
            tot += sig[t] * ((axa[t] * e + eyb[t] * c) // be)
        if best is None or tot < best:
            best, witness = tot, y
    return best, witness


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant integer function on [0, 1), canonical form.

    ``breakpoints[0] == 0``; ``values[r]`` holds on [breakpoints[r],
    breakpoints[r+1]) and the final value on [breakpoints[-1], 1).
    Adjacent pieces always carry distinct values.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values) or not self.breakpoints:
            raise ValueError("breakpoints and values must align")
        if self.breakpoints[0] != 0:
            raise ValueError("first breakpoint must be 0")
        for i in range(1, len(self.breakpoints)):
            if not 0 < self.breakpoints[i] < 1:
                raise ValueError("breakpoints must lie in [0, 1)")
            if self.breakpoints[i] <= self.breakpoints[i - 1]:
                raise ValueError("breakpoints must increase")
            if self.values[i] == self.values[i - 1]:
                raise ValueError("adjacent equal values must be merged")

    @classmethod
    def build(cls, breakpoints, values) -> "StepFunction":
        bs, vs = [], []
        for b, v in zip(breakpoints, values):
            if vs and v == vs[-1]:
                continue
            bs.append(Fraction(b))
            vs.append(int(v))
        return cls(tuple(bs), tuple(vs))

    def value_at(self, x) -> int:
        x = Fraction(x)
        x -= math.floor(x)
        idx = bisect.bisect_right(self.breakpoints, x) - 1
        return self.values[idx]

    def intervals(self) -> list[tuple[Fraction, Fraction, int]]:
        """(lo, hi, value) triples covering [0, 1); the last hi equals 1."""
        out = []
        for r, lo in enumerate(self.breakpoints):
            hi = self.breakpoints[r + 1] if r + 1 < len(self.breakpoints) else Fraction(1)
            out.append((lo, hi, self.values[r]))
        return out

    def max_value(self) -> int:
        return max(self.values)


def _farey(order: int) -> list[Fraction]:
    fracs = {Fraction(0)}
    for b in range(1, order + 1):
        for a in range(1, b):
            fracs.add(Fraction(a, b))
    return sorted(fracs)


@lru_cache(maxsize=None)
def carry_min_table(spec: CarrySpec) -> StepFunction:
    """Exact table of min_y carry(x, y) as a step function of x.

    x-breakpoints are searched among Farey fractions of the spec's order;
    each interval is sampled at its left endpoint and midpoint, which must
    agree (the minimum is right-continuous), otherwise the order bound is
    wrong and we refuse to guess.
    """
    terms = spec.terms()
    grid = _farey(spec.farey_order)
    breakpoints, values = [], []
    for i, lo in enumerate(grid):
        hi = grid[i + 1] if i + 1 < len(grid) else Fraction(1)
        v_left, _ = _min_over_y(terms, lo)
        v_mid, _ = _min_over_y(terms, (lo + hi) / 2)
        if v_left != v_mid:
            raise ValueError(
                f"carry minimum not constant on [{lo}, {hi}); "
                "Farey order bound violated"
            )
        breakpoints.append(lo)
        values.append(v_left)
    return StepFunction.build(breakpoints, values)


def carry_min_value(spec: CarrySpec, x) -> tuple[int, Fraction]:
    """Pointwise min over y at a single x, with a witness y (no table)."""
    x = Fraction(x)
    x -= math.floor(x)
    return _min_over_y(spec.terms(), x)


# ---------------------------------------------------------------------------
# The prime-power cancellation factor
# ---------------------------------------------------------------------------

def capital_phi(profile) -> FactoredInteger:
    """Product over primes in the profile's range of p**table(n/p).

    The range is phi_lower < p <= phi_upper with the lower cutoff compared
    exactly as p*p > phi_lower_sq (strict).
    """
    table = carry_min_table(profile.carry_spec)
    n = profile.n
    factors = {}
    for p in sieve_primes(profile.phi_upper):
        if p * p <= profile.phi_lower_sq:
            continue
        e = table.value_at(Fraction(n, p))
        if e < 0:
            raise ValueError(f"negative carry minimum at p={p}")
        if e > 0:
            factors[p] = e
    return FactoredInteger.from_dict(factors)


# ---------------------------------------------------------------------------
# Digamma at positive rationals
# ---------------------------------------------------------------------------

def digamma_rational(p: int, q: int, precision: int = 256) -> BallReal:
    """psi(p/q) for p, q > 0 with relative radius <= 2**(1-precision).

    Uses the finite closed form for rational arguments in (0, 1) (Euler's
    constant, a cotangent term, and a short cosine-log sum over residues),
    then the recurrence psi(x+1) = psi(x) + 1/x, applied exactly.
    """
    if q == 0:
        raise ZeroDivisionError("digamma_rational: q must be nonzero")
    x = Fraction(p, q)
    if x <= 0:
        raise ValueError("argument must be positive")
    tol = Fraction(2) ** (1 - precision)
    for attempt in range(6):
        guard = 48 + 64 * attempt
        with working_precision(precision + guard):
            val = _digamma_core(x)
        if val.rad <= tol * abs(val.mid):
            return val
        if val.rad <= Fraction(2) ** (-precision) and val.contains_zero():
            return val
    raise ArithmeticError("digamma_rational failed to reach target radius")


def _digamma_core(x: Fraction) -> BallReal:
    k = math.floor(x)
    frac = x - k
    # shift to (0, 1]: psi(x) = psi(frac) + sum_{j=0}^{k-1} 1/(frac+j)
    shift = Fraction(0)
    if frac == 0:
        # integer argument: psi(m) = -gamma + H_{m-1}
        for j in range(1, k):
            shift += Fraction(1, j)
        return -ball_euler_gamma() + BallReal(shift)
    for j in range(k):
        shift += 1 / (frac + j)
    a, b = frac.numerator, frac.denominator
    pi = ball_pi()
    out = -ball_euler_gamma() - BallReal(Fraction(2 * b)).log()
    if 2 * a != b:
        t = pi * Fraction(a, b)
        cos_t = t.cos()
        sin_t = t.sin()
        out = out - pi / 2 * (cos_t / sin_t)
    for m in range(1, (b - 1) // 2 + 1):
        c = (pi * Fraction(2 * m * a, b)).cos()
        s = (pi * Fraction(m, b)).sin()
        out = out + 2 * c * s.log()
    return out + BallReal(shift)


# ---------------------------------------------------------------------------
# Exponential growth rate of the cancellation factor
# ---------------------------------------------------------------------------

def phi_exponent_from_table(table: StepFunction, mu: Fraction,
                            precision: int = 256) -> BallReal:
    """lim (1/n) log of the factored product, from its exact value table.

    Standard prime-counting heuristic: with the table value c on [u, v),
    the primes p ~ n/x contribute c * [psi(1+v) - psi(1+u)] from each
    period window above 1, plus a clipped 1/x**2-integral term on the
    window [1/mu, 1) when the prime range extends above n (mu > 1).
    """
    mu = Fraction(mu)
    clipped = Fraction(0)
    with working_precision(precision + 32):
        acc = BallReal(0)
        for lo, hi, c in table.intervals():
            if c == 0:
                continue
            psi_hi = digamma_rational((1 + hi).numerator, (1 + hi).denominator,
                                      precision + 16)
            psi_lo = digamma_rational((1 + lo).numerator, (1 + lo).denominator,
                                      precision + 16)
            acc = acc + c * (psi_hi - psi_lo)
            top = mu if lo == 0 else min(1 / lo, mu)
            part = top - 1 / hi
            if part > 0:
                clipped += c * part
        return acc + BallReal(clipped)


def phi_exponent(profile, precision: int = 256) -> BallReal:
    table = carry_min_table(profile.carry_spec)
    return phi_exponent_from_table(table, profile.mu, precision)


def phi_exponent_sieved(profile) -> float:
    """(1/n) log of the factored product by direct sieving, double precision.

    Empirical anchor for ``phi_exponent`` at large n; not a rigorous bound.
    """
    table = carry_min_table(profile.carry_spec)
    n = profile.n
    terms = []
    for p in sieve_primes(profile.phi_upper):
        if p * p <= profile.phi_lower_sq:
            continue
        e = table.value_at(Fraction(n, p))
        if e:
            terms.append(e * math.log(p))
    return math.fsum(terms) / n
