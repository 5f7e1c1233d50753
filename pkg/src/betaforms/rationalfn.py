"""Rational functions as products of linear factors, and their exact
partial-fraction tables.

Both construction families produce a proper rational function
``scalar * prod (t - r)**m / prod (t - r')**m'`` whose roots are integers
or half-integers.  Partial-fraction coefficients are extracted per pole by
truncated power-series division of the co-factor, entirely in rational
arithmetic; no floating point enters this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .profiles import Profile, general, section2
from .series import divide_trunc, mul_linear

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LinearProductRep:
    """scalar * prod (t - r)**mult / prod (t - r')**mult'.

    Roots are exact rationals with denominator 1 or 2.  Equal roots are
    merged; numerator and denominator are *not* cross-cancelled, so a pole's
    nominal multiplicity can exceed its true order (the leading expansion
    coefficients are then exact zeros).
    """

    scalar: Fraction
    num_roots: tuple[tuple[Fraction, int], ...]
    den_roots: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        for roots in (self.num_roots, self.den_roots):
            seen = set()
            for r, m in roots:
                if (2 * r).denominator != 1:
                    raise ValueError(f"root {r} is not a half-integer")
                if m < 1 or r in seen:
                    raise ValueError("roots must be distinct with mult >= 1")
                seen.add(r)

    @classmethod
    def build(cls, scalar, num_roots, den_roots) -> "LinearProductRep":
        def merge(pairs):
            acc: dict[Fraction, int] = {}
            for r, m in pairs:
                r = Fraction(r)
                acc[r] = acc.get(r, 0) + m
            return tuple(sorted(acc.items()))
        return cls(Fraction(scalar), merge(num_roots), merge(den_roots))

    @property
    def num_degree(self) -> int:
        return sum(m for _, m in self.num_roots)

    @property
    def den_degree(self) -> int:
        return sum(m for _, m in self.den_roots)

    @property
    def degree_gap(self) -> int:
        return self.den_degree - self.num_degree

    def evaluate(self, t) -> Fraction:
        """Exact value at a non-pole rational t (ZeroDivisionError at poles)."""
        t = Fraction(t)
        p, q2 = t.numerator, 2 * t.denominator
        num = 1
        for r, m in self.num_roots:
            num *= (2 * p - int(2 * r) * t.denominator) ** m
        den = 1
        for r, m in self.den_roots:
            den *= (2 * p - int(2 * r) * t.denominator) ** m
        gap = self.degree_gap
        if gap >= 0:
            return self.scalar * Fraction(num * q2 ** gap, den)
        return self.scalar * Fraction(num, den * q2 ** (-gap))

    def scaled(self, c) -> "LinearProductRep":
        return LinearProductRep(self.scalar * Fraction(c),
                                self.num_roots, self.den_roots)


@dataclass(frozen=True)
class PartialFractionTable:
    """Exact coefficients a[i][k] of (t + k + pole_offset)**(-i).

    ``rows[idx][i-1]`` is a_{i, pole_ks[idx]} for i = 1..s; entries above a
    pole's true order are exact zeros, so sums may run uniformly to s.
    """

    s: int
    pole_ks: tuple[int, ...]
    pole_offset: Fraction
    multiplicities: tuple[int, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def a(self, i: int, k: int) -> Fraction:
        return self.rows[self.pole_ks.index(k)][i - 1]

    def entries(self):
        for idx, k in enumerate(self.pole_ks):
            for i in range(1, self.s + 1):
                yield i, k, self.rows[idx][i - 1]

    def reconstruct(self, t) -> Fraction:
        t = Fraction(t)
        total = Fraction(0)
        for idx, k in enumerate(self.pole_ks):
            base = t + k + self.pole_offset
            inv = 1 / base
            power = Fraction(1)
            for i in range(1, self.s + 1):
                power *= inv
                c = self.rows[idx][i - 1]
                if c:
                    total += c * power
        return total


def partial_fractions(rep: LinearProductRep) -> PartialFractionTable:
    """Expand a proper linear-product representation into partial fractions.

    At each pole the co-factor (the function times the pole's power) is a
    ratio of products of linear factors with nonzero constant terms; its
    truncated series expansion yields all coefficient orders at once.
    """
    if rep.degree_gap < 1:
        raise ValueError("representation must be proper (gap >= 1)")
    offset = _HALF if any(r.denominator == 2 for r, _ in rep.den_roots) else Fraction(0)
    poles = sorted(rep.den_roots, key=lambda rm: -rm[0] - offset)
    pole_ks = []
    mults = []
    rows = []
    s = max(m for _, m in rep.den_roots)
    for pole_root, mult in poles:
        k = -pole_root - offset
        if k.denominator != 1:
            raise ValueError("pole grid mixes integer and half-integer roots")
        num = [rep.scalar]
        for r, m in rep.num_roots:
            for _ in range(m):
                num = mul_linear(num, pole_root - r, mult)
        den = [Fraction(1)]
        for r, m in rep.den_roots:
            if r == pole_root:
                continue
            for _ in range(m):
                den = mul_linear(den, pole_root - r, mult)
        g = divide_trunc(num, den, mult)
        coeffs = [Fraction(0)] * s
        for i in range(1, mult + 1):
            coeffs[i - 1] = g[mult - i]
        pole_ks.append(int(k))
        mults.append(mult)
        rows.append(tuple(coeffs))
    return PartialFractionTable(s, tuple(pole_ks), offset,
                                tuple(mults), tuple(rows))


# ---------------------------------------------------------------------------
# The two construction families
# ---------------------------------------------------------------------------

def build_section2(s: int, n: int) -> LinearProductRep:
    """Odd s >= 3, even n: the basic construction with triple half-integer run."""
    section2(s, n)  # parameter validation
    scalar = Fraction(2 ** (6 * n + 1) * math.factorial(n) ** (s - 3))
    num = [(Fraction(-n, 2), 1)]
    num += [(Fraction(2 * (n - j) + 1, 2), 1) for j in range(1, 3 * n + 1)]
    den = [(Fraction(-j), s) for j in range(n + 1)]
    return LinearProductRep.build(scalar, num, den)


def build_general(eta, n: int) -> LinearProductRep:
    """The general family: shifted factorial quotient with half-integer poles."""
    profile = eta if isinstance(eta, Profile) else general(eta, n)
    h0 = profile.h0
    scalar = 2 * profile.gamma
    num = [(Fraction(-h0, 2), 1)]
    num += [(Fraction(-j), 1) for j in range(1, h0)]
    den = []
    for hj in profile.h[1:]:
        k_lo = int(hj - _HALF)
        for k in range(k_lo, h0 - k_lo):
            den.append((-(k + _HALF), 1))
    return LinearProductRep.build(scalar, num, den)


def build_remark1(s: int, n: int) -> LinearProductRep:
    """The earlier variant with two half-integer runs of length n."""
    section2(s, n)
    scalar = Fraction(2 ** (4 * n + 1) * math.factorial(n) ** (s - 2))
    num = [(Fraction(-n, 2), 1)]
    num += [(Fraction(2 * (n - j) + 1, 2), 1) for j in range(1, n + 1)]
    num += [(Fraction(-2 * (n + j) + 1, 2), 1) for j in range(1, n + 1)]
    den = [(Fraction(-j), s) for j in range(n + 1)]
    return LinearProductRep.build(scalar, num, den)


def remark1_identity_check(s: int, n: int, t) -> bool:
    """Does the main function equal the variant times its completing factor at t?"""
    t = Fraction(t)
    main = build_section2(s, n).evaluate(t)
    variant = build_remark1(s, n).evaluate(t)
    extra = Fraction(2 ** (2 * n), math.factorial(n))
    for j in range(1, n + 1):
        extra *= t + j - _HALF
    return main == variant * extra


def symmetry_check(table: PartialFractionTable, reflect_const: int) -> bool:
    """Check a_{i,k} == (-1)**i * a_{i, reflect_const - k} exactly, all i, k."""
    for i, k, c in table.entries():
        k_ref = reflect_const - k
        if k_ref not in table.pole_ks:
            if c != 0:
                return False
            continue
        mirrored = table.a(i, k_ref)
        if c != (mirrored if i % 2 == 0 else -mirrored):
            return False
    return True


# ---------------------------------------------------------------------------
# Elementary binomial blocks
# ---------------------------------------------------------------------------

def binomial_block_coefficients(kind: int, n: int) -> list[Fraction]:
    """Closed-form simple-pole coefficients of the four elementary quotients."""
    if n < 1:
        raise ValueError("n must be >= 1")
    C = math.comb
    if kind == 1:
        return [Fraction((-1) ** k * C(n, k)) for k in range(n + 1)]
    if kind == 2:
        return [Fraction((-1) ** (n + k) * C(2 * n + 2 * k, 2 * n) * C(2 * n, n + k))
                for k in range(n + 1)]
    if kind == 3:
        return [Fraction(C(2 * k, k) * C(2 * n - 2 * k, n - k)) for k in range(n + 1)]
    if kind == 4:
        return [Fraction((-1) ** k * C(4 * n - 2 * k, 2 * n) * C(2 * n, k))
                for k in range(n + 1)]
    raise ValueError("kind must be 1..4")


def binomial_block_product(kind: int, n: int) -> LinearProductRep:
    """The product form each closed-form coefficient list decomposes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    den = [(Fraction(-j), 1) for j in range(n + 1)]
    if kind == 1:
        return LinearProductRep.build(math.factorial(n), [], den)
    if kind == 2:
        num = [(Fraction(2 * (n - j) + 1, 2), 1) for j in range(1, n + 1)]
    elif kind == 3:
        num = [(Fraction(1 - 2 * j, 2), 1) for j in range(1, n + 1)]
    elif kind == 4:
        num = [(Fraction(-2 * (n + j) + 1, 2), 1) for j in range(1, n + 1)]
    else:
        raise ValueError("kind must be 1..4")
    return LinearProductRep.build(2 ** (2 * n), num, den)


def section2_top_coefficient(s: int, n: int, k: int) -> Fraction:
    """Closed form for the order-s coefficient at pole k of the basic family."""
    f = math.factorial
    num = f(2 * n + 2 * k) * f(4 * n - 2 * k)
    den = f(n + k) * f(2 * n - k) * f(k) ** 3 * f(n - k) ** 3
    return Fraction(num, den) * (n - 2 * k) * Fraction(math.comb(n, k)) ** (s - 3)


def hypergeometric_parameters(eta, n: int):
    """Upper/lower parameter lists and argument of the series form."""
    profile = eta if isinstance(eta, Profile) else general(eta, n)
    h = profile.h
    h0 = h[0]
    upper = (h0, 1 + h0 / 2) + tuple(h[1:])
    lower = (h0 / 2,) + tuple(1 + h0 - hj for hj in h[1:])
    return upper, lower, -1
