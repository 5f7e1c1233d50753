from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from betaforms.balls import BallReal, ball_pi, working_precision
from betaforms.numerics import (alternating_series_tail, beta_value,
                                consistency_check, decomposition_value,
                                mc_integral, r_n_series)
from betaforms.profiles import THEOREM1_ETA, general, section2
from betaforms.rationalfn import LinearProductRep, partial_fractions

from tests.conftest import suite_profiles


def truncation_oracle(i, terms=40):
    """Direct alternating truncation with the first-omitted-term bound."""
    with mpmath.workdps(60):
        acc = mpmath.mpf(0)
        for k in range(terms):
            acc += mpmath.mpf(-1) ** k / (2 * k + 1) ** i
        return acc, mpmath.mpf(1) / (2 * terms + 1) ** i


class TestBetaValue:
    def test_catalan(self):
        v = beta_value(2, 256)
        with mpmath.workdps(90):
            assert abs(v.mid - mpmath.catalan) < mpmath.mpf(2) ** -250

    def test_leibniz_anchor(self):
        v = beta_value(1, 128)
        with working_precision(140):
            quarter_pi = ball_pi() / 4
        assert v.overlaps(quarter_pi)

    def test_high_index_truncation_oracle(self):
        v = beta_value(12, 64)
        est, err = truncation_oracle(12)
        assert abs(v.mid - est) < err + float(v.rad)
        assert abs(float(v.mid) - 0.99999812) < 1e-8

    def test_radius_contract(self):
        for i, prec in [(1, 64), (2, 256), (6, 128)]:
            v = beta_value(i, prec)
            assert v.rad <= mpmath.mpf(2) ** (1 - prec)

    @pytest.mark.parametrize("i", [1, 2, 4, 6, 8, 10, 12])
    @pytest.mark.parametrize("prec", [64, 256])
    def test_doubled_precision_overlaps(self, i, prec):
        assert beta_value(i, prec).overlaps(beta_value(i, 2 * prec))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            beta_value(0, 64)


class TestBooleTail:
    def test_toy_against_beta(self):
        # sum_{nu>=0} (-1)^nu (nu+1/2)^-2 = 4 beta(2)
        toy = LinearProductRep.build(1, [], [(Fraction(-1, 2), 2)])
        table = partial_fractions(toy)
        ev = alternating_series_tail(toy, table, Fraction(0), 0,
                                     Fraction(2) ** -180, 160)
        four_g = beta_value(2, 200) * 4
        assert ev.value.overlaps(four_g)
        assert ev.tail_bound <= Fraction(2) ** -180


class TestRnSeries:
    def test_positive_for_all_suite_profiles(self, bundle):
        for profile in suite_profiles():
            b = bundle(profile)
            v = r_n_series(profile, 128, rep=b.rep, table=b.table)
            assert v.strictly_positive(), profile.label()

    def test_section2_start_index_is_free(self):
        from betaforms.rationalfn import build_section2

        # the function vanishes at the skipped half-integer arguments,
        # so summation may start from 1, n+1, or below without changing r_n
        for (s, n) in [(3, 2), (5, 2)]:
            rep = build_section2(s, n)
            for nu in range(-(n // 2) - 1, n + 1):
                assert rep.evaluate(Fraction(nu) - Fraction(1, 2)) == 0

    def test_general_start_index_is_free(self):
        from betaforms.numerics import build_profile_rep

        profile = general((5, 1, 1, 1, 1, 1), 2)
        rep = build_profile_rep(profile)
        for nu in range(-(profile.h0 - 1) // 2, 0):
            assert rep.evaluate(Fraction(nu)) == 0

    def test_radius_shrinks_with_precision(self, bundle):
        b = bundle(section2(5, 2))
        lo = r_n_series(b.profile, 64, rep=b.rep, table=b.table)
        hi = r_n_series(b.profile, 128, rep=b.rep, table=b.table)
        assert hi.rad * 2 <= lo.rad
        assert lo.overlaps(hi)

    def test_theorem1_value_range(self, bundle):
        b = bundle(general(THEOREM1_ETA, 2))
        v = r_n_series(b.profile, 128, rep=b.rep, table=b.table)
        assert v.strictly_positive()
        assert v.upper < 1


class TestConsistency:
    def test_section2_3_2_gap(self, bundle):
        b = bundle(section2(3, 2))
        report = consistency_check(b.profile, 128, rep=b.rep, table=b.table,
                                   decomposition=b.decomposition)
        assert report.passed
        assert report.gap_bits >= 100

    def test_section2_5_4(self, bundle):
        b = bundle(section2(5, 4))
        report = consistency_check(b.profile, 256, rep=b.rep, table=b.table,
                                   decomposition=b.decomposition)
        assert report.passed

    def test_perturbation_detected(self, bundle):
        from betaforms.decomposition import DecompositionResult

        b = bundle(section2(3, 2))
        perturbed = DecompositionResult(
            b.profile,
            (b.decomposition.a[0] + Fraction(1, 10 ** 10),)
            + b.decomposition.a[1:])
        report = consistency_check(b.profile, 128, rep=b.rep, table=b.table,
                                   decomposition=perturbed)
        assert not report.passed

    def test_scaled_form_lands_in_unit_interval(self, bundle):
        # the normalized integer form of the large instance is small but positive
        b = bundle(section2(17, 2))
        v = r_n_series(b.profile, 128, rep=b.rep, table=b.table)
        scale = Fraction(b.factors.d.value()) ** 17 / b.factors.phi.value()
        with working_precision(160):
            scaled = v * scale
        assert scaled.strictly_positive() and scaled.upper < 1


class TestDecompositionValue:
    def test_matches_series_within_radii(self, bundle):
        b = bundle(section2(5, 2))
        series = r_n_series(b.profile, 192, rep=b.rep, table=b.table)
        direct = decomposition_value(b.decomposition, 192)
        assert series.overlaps(direct)


class TestMonteCarlo:
    def test_agreement_and_positivity(self):
        profile = general((5, 1, 1, 1, 1, 1), 2)
        est = mc_integral(profile, 2, 120_000, seed=99)
        series = r_n_series(profile, 96)
        assert est.mid > 0
        assert est.overlaps(series)

    def test_seed_determinism(self):
        a = mc_integral((5, 1, 1, 1, 1, 1), 2, 40_000, seed=7)
        b = mc_integral((5, 1, 1, 1, 1, 1), 2, 40_000, seed=7)
        assert a.mid == b.mid and a.rad == b.rad

    def test_rejects_zero_samples(self):
        with pytest.raises(ValueError):
            mc_integral((5, 1, 1, 1, 1, 1), 2, 0, seed=1)


small_fracs = st.fractions(min_value=-100, max_value=100, max_denominator=1000)


class TestBallArithmetic:
    @settings(max_examples=600, deadline=None)
    @given(small_fracs, small_fracs)
    def test_add_sub_roundtrip_contains(self, x, y):
        with working_precision(64):
            bx, by = BallReal(x), BallReal(y)
            assert ((bx + by) - by).contains(x)

    @settings(max_examples=400, deadline=None)
    @given(small_fracs, small_fracs)
    def test_products_contain(self, x, y):
        with working_precision(64):
            assert (BallReal(x) * BallReal(y)).contains(x * y)
            if y:
                assert (BallReal(x) / BallReal(y)).contains(x / y)

    def test_exact_constructor_and_views(self):
        with working_precision(80):
            b = BallReal(Fraction(1, 3), radius=Fraction(1, 2 ** 90))
        assert b.contains(Fraction(1, 3))
        assert b.rad >= mpmath.mpf(2) ** -90
        assert not b.contains_zero()
        assert (-b).strictly_negative()

    def test_report_fields(self):
        with working_precision(64):
            d = BallReal(Fraction(355, 113)).to_report(10)
        assert set(d) == {"mid", "rad", "prec"}
