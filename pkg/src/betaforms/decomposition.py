"""Assembly of the rational linear form from a partial-fraction table, and
exact verification of every divisibility claim.

Resumming the alternating series termwise over the table turns each pole
into a multiple of the alternating odd-power sum, leaving a rational
constant from the finitely many shifted terms.  The family's sign
convention and inner-sum origin come from the profile; they are never
inferred from the data.

Divisibility violations are data, not exceptions: the verifiers return
structured reports with per-prime deficits so that deliberately weakened
exponents can be probed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .numtheory import FactoredInteger, capital_phi, lcm_up_to
from .profiles import Profile, section2
from .rationalfn import PartialFractionTable, build_remark1, partial_fractions

_HALF = Fraction(1, 2)


def inner_sum(i: int, start: int, stop: int) -> Fraction:
    """sum_{l=start}^{stop} (-1)**l / (l + 1/2)**i, exact; empty gives 0."""
    if i < 1:
        raise ValueError("order i must be >= 1")
    total = Fraction(0)
    for ell in range(start, stop + 1):
        term = 1 / (ell + _HALF) ** i
        total += term if ell % 2 == 0 else -term
    return total


def _tail_correction(i: int, origin: int) -> Fraction:
    """Rewrites sum_{l>=origin} as the full alternating sum plus this constant."""
    if origin == 0:
        return Fraction(0)
    if origin < 0:
        return inner_sum(i, origin, -1)
    return -inner_sum(i, 0, origin - 1)


@dataclass(frozen=True)
class DecompositionResult:
    """Exact coefficients a_0..a_s of r = a_0 + sum a_i beta(i)."""

    profile: Profile
    a: tuple[Fraction, ...]

    @property
    def beta_indices(self) -> list[int]:
        return [i for i in range(2, self.profile.s + 1, 2)]


@dataclass(frozen=True)
class ArithmeticFactors:
    """The lcm power base d and the prime-power factor, kept factored."""

    d: FactoredInteger
    phi: FactoredInteger
    s: int

    @classmethod
    def for_profile(cls, profile: Profile) -> "ArithmeticFactors":
        return cls(lcm_up_to(profile.d_index), capital_phi(profile), profile.s)


def _assemble(table: PartialFractionTable, profile: Profile, s: int,
              sign, ell_origin) -> tuple[Fraction, ...]:
    a = [Fraction(0)] * (s + 1)
    for i in range(1, s + 1):
        acc = Fraction(0)
        for idx, k in enumerate(table.pole_ks):
            c = table.rows[idx][i - 1]
            if c:
                acc += sign(k) * c
        a[i] = 2 ** i * acc
    a0 = Fraction(0)
    for idx, k in enumerate(table.pole_ks):
        origin = ell_origin(k)
        if origin == 0:
            continue
        for i in range(1, s + 1):
            c = table.rows[idx][i - 1]
            if c:
                a0 += sign(k) * c * _tail_correction(i, origin)
    a[0] = a0
    return tuple(a)


def beta_coefficients(table: PartialFractionTable, profile: Profile) -> DecompositionResult:
    """Exact linear-form coefficients for the profile's sign/origin convention."""
    if tuple(profile.pole_ks) != table.pole_ks:
        raise ValueError("table poles do not match profile")
    if profile.pole_offset != table.pole_offset:
        raise ValueError("table pole offset does not match profile")
    a = _assemble(table, profile, profile.s, profile.sign, profile.ell_origin)
    return DecompositionResult(profile, a)


# ---------------------------------------------------------------------------
# Divisibility verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    i: int
    k: int | None
    value: Fraction
    deficits: dict[int, int] = field(hash=False, default_factory=dict)

    def __str__(self):
        where = f"i={self.i}" + ("" if self.k is None else f", k={self.k}")
        defs = ", ".join(f"p={p}: short {e}" for p, e in sorted(self.deficits.items()))
        return f"[{where}] denominator {self.value.denominator} ({defs})"


@dataclass(frozen=True)
class InclusionReport:
    checked: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return f"all {self.checked} inclusions hold"
        lines = [f"{len(self.violations)} of {self.checked} inclusions fail:"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def _prime_deficits(denominator: int) -> dict[int, int]:
    out = {}
    d = denominator
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1 if p == 2 else 2
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def verify_coefficient_inclusions(table: PartialFractionTable,
                                  factors: ArithmeticFactors,
                                  exponent_slack: int = 0) -> InclusionReport:
    """Check phi**-1 d**(s-i-slack) a_{i,k} in Z for every table entry.

    ``exponent_slack`` deliberately weakens the lcm power; nonzero slack is
    how tightness of the stated exponent is probed empirically.
    """
    d = factors.d.value()
    phi = factors.phi.value()
    checked = 0
    violations = []
    for i, k, c in table.entries():
        checked += 1
        if not c:
            continue
        e = factors.s - i - exponent_slack
        scaled = c * Fraction(d) ** e / phi
        if scaled.denominator != 1:
            violations.append(Violation(i, k, scaled,
                                        _prime_deficits(scaled.denominator)))
    return InclusionReport(checked, tuple(violations))


def verify_form_inclusions(result: DecompositionResult,
                           factors: ArithmeticFactors) -> InclusionReport:
    """Check phi**-1 d**(s-i) a_i in Z for i = 0..s.

    Odd i are vacuous (a_i = 0 exactly) and are recorded as passing.
    """
    d = factors.d.value()
    phi = factors.phi.value()
    checked = 0
    violations = []
    for i, ai in enumerate(result.a):
        checked += 1
        if not ai:
            continue
        scaled = ai * Fraction(d) ** (factors.s - i) / phi
        if scaled.denominator != 1:
            violations.append(Violation(i, None, scaled,
                                        _prime_deficits(scaled.denominator)))
    return InclusionReport(checked, tuple(violations))


class InclusionError(ArithmeticError):
    """An integrality precondition failed where an integer result was required."""


def integer_linear_form(result: DecompositionResult,
                        factors: ArithmeticFactors) -> tuple[tuple[int, ...], str]:
    """Integer tuple (A_0, A_2, ..., A_{s-1}) with
    phi**-1 d**s r = A_0 + sum A_i beta(i), plus a description of the scale.
    """
    d = factors.d.value()
    phi = factors.phi.value()
    s = factors.s
    scale = Fraction(d) ** s / phi
    out = []
    for i in [0] + result.beta_indices:
        v = result.a[i] * scale
        if v.denominator != 1:
            raise InclusionError(f"a_{i} does not scale to an integer")
        out.append(int(v))
    desc = f"phi^-1 d_{result.profile.d_index}^{s} r_n with phi={factors.phi}"
    return tuple(out), desc


# ---------------------------------------------------------------------------
# The earlier-variant denominator probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Remark1Report:
    s: int
    n: int
    a0: Fraction
    d_n_clears: bool
    d_2n_clears: bool
    smallest_clearing_index: int | None

    def __str__(self):
        return (f"variant a_0 for (s={self.s}, n={self.n}): d_n^s clears: "
                f"{self.d_n_clears}; d_2n^s clears: {self.d_2n_clears}")


def remark1_denominator_probe(s: int, n: int) -> Remark1Report:
    """Decompose the earlier variant and test which lcm power clears a_0.

    The variant's series starts at index 1, so each pole's inner-sum origin
    is the pole index itself; the constant term then needs odd denominators
    up to 2n-1, hence the d_2n power.
    """
    profile = section2(s, n)
    table = partial_fractions(build_remark1(s, n))
    a = _assemble(table, profile, s, profile.sign, lambda k: k)
    phi = capital_phi(profile).value()
    a0 = a[0]

    def clears(index: int) -> bool:
        v = a0 * Fraction(lcm_up_to(index).value()) ** s / phi
        return v.denominator == 1

    dn = clears(n)
    d2n = clears(2 * n)
    smallest = n if dn else (2 * n if d2n else None)
    return Remark1Report(s, n, a0, dn, d2n, smallest)
