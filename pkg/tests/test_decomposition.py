import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betaforms.decomposition import (ArithmeticFactors, InclusionError,
                                     beta_coefficients, inner_sum,
                                     integer_linear_form,
                                     remark1_denominator_probe,
                                     verify_coefficient_inclusions,
                                     verify_form_inclusions)
from betaforms.numtheory import lcm_up_to
from betaforms.profiles import THEOREM1_ETA, general, section2
from betaforms.rationalfn import build_section2, partial_fractions

from tests.conftest import SECTION2_SUITE, THEOREM1_NS, suite_profiles


class TestInnerSum:
    def test_two_negative_terms(self):
        v = inner_sum(1, -2, -1)
        assert v == Fraction(4, 3)
        assert 6 * v == 8  # d_3 = 6 clears the denominator

    def test_single_term(self):
        assert inner_sum(2, 0, 0) == 4

    def test_empty_range(self):
        assert inner_sum(1, 3, 2) == 0

    def test_rejects_zero_order(self):
        with pytest.raises(ValueError):
            inner_sum(0, 0, 1)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=1, max_value=6),
           st.integers(min_value=-9, max_value=-1))
    def test_lcm_clears_negative_ranges(self, i, start):
        # denominators are odd numbers below 2|start|, so d_(2|start|-1)^i clears
        v = inner_sum(i, start, -1)
        d = lcm_up_to(2 * abs(start) - 1).value()
        assert (v * d ** i).denominator == 1

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=1, max_value=6),
           st.integers(min_value=0, max_value=9))
    def test_lcm_clears_nonnegative_ranges(self, i, stop):
        v = inner_sum(i, 0, stop)
        d = lcm_up_to(2 * stop + 1).value()
        assert (v * d ** i).denominator == 1


class TestBetaCoefficients:
    def test_odd_coefficients_vanish(self, bundle):
        for profile in suite_profiles():
            a = bundle(profile).decomposition.a
            assert all(a[i] == 0 for i in range(1, profile.s + 1, 2))

    def test_even_coefficient_formula(self, bundle):
        # a_2 carries the 2^i = 4 factor over the signed column sum
        b = bundle(section2(3, 2))
        signed = sum((1 if k % 2 == 0 else -1) * b.table.a(2, k)
                     for k in b.table.pole_ks)
        assert b.decomposition.a[2] == 4 * signed

    def test_known_exact_values(self, bundle):
        a = bundle(section2(3, 2)).decomposition.a
        assert a[0] == 209632 and a[2] == -228672

    def test_profile_table_mismatch_rejected(self, bundle):
        b = bundle(section2(3, 2))
        with pytest.raises(ValueError):
            beta_coefficients(b.table, section2(3, 4))

    def test_deterministic_rebuild(self, bundle):
        profile = general(THEOREM1_ETA, 2)
        fresh = beta_coefficients(
            partial_fractions(bundle(profile).rep), profile)
        assert fresh.a == bundle(profile).decomposition.a


class TestCoefficientInclusions:
    @pytest.mark.parametrize("s,n", SECTION2_SUITE)
    def test_section2_suite(self, bundle, s, n):
        b = bundle(section2(s, n))
        assert verify_coefficient_inclusions(b.table, b.factors).ok

    @pytest.mark.parametrize("n", THEOREM1_NS)
    def test_theorem1(self, bundle, n):
        b = bundle(general(THEOREM1_ETA, n))
        assert verify_coefficient_inclusions(b.table, b.factors).ok
        if n == 2:
            assert dict(b.factors.phi.factors) == {13: 2, 17: 4, 19: 4}

    def test_weakened_exponent_fails(self, bundle):
        # the lcm exponent is tight up to slack 1 here; slack 2 must break,
        # and the report carries the exact offending denominators
        b = bundle(section2(5, 4))
        weak = verify_coefficient_inclusions(b.table, b.factors,
                                             exponent_slack=2)
        assert not weak.ok
        assert all(v.value.denominator > 1 for v in weak.violations)
        assert all(v.deficits for v in weak.violations)
        assert "short" in str(weak.violations[0])

    def test_report_is_data_not_exception(self, bundle):
        b = bundle(section2(5, 4))
        report = verify_coefficient_inclusions(b.table, b.factors,
                                               exponent_slack=3)
        assert report.checked == len(b.table.pole_ks) * b.table.s
        assert isinstance(str(report), str)


class TestFormInclusions:
    @pytest.mark.parametrize("s,n", SECTION2_SUITE)
    def test_section2_suite(self, bundle, s, n):
        b = bundle(section2(s, n))
        assert verify_form_inclusions(b.decomposition, b.factors).ok

    @pytest.mark.parametrize("n", THEOREM1_NS)
    def test_theorem1(self, bundle, n):
        b = bundle(general(THEOREM1_ETA, n))
        report = verify_form_inclusions(b.decomposition, b.factors)
        assert report.ok
        assert report.checked == 14  # i = 0..13, odd ones vacuous


class TestIntegerLinearForm:
    def test_section2_3_2_numeric(self, bundle):
        import mpmath

        b = bundle(section2(3, 2))
        ints, desc = integer_linear_form(b.decomposition, b.factors)
        assert len(ints) == 2 and "d_2" in desc
        with mpmath.workdps(40):
            val = ints[0] + ints[1] * mpmath.catalan
            d = b.factors.d.value()
            direct = (mpmath.mpf(209632) - 228672 * mpmath.catalan) * d ** 3
            assert abs(val - direct) < 1e-20

    def test_scaling_identity(self, bundle):
        b = bundle(section2(5, 2))
        ints, _ = integer_linear_form(b.decomposition, b.factors)
        d = b.factors.d.value()
        phi = b.factors.phi.value()
        for pos, i in enumerate([0, 2, 4]):
            lhs = Fraction(ints[pos])
            rhs = (b.decomposition.a[i] * Fraction(d) ** (5 - i) / phi) * d ** i
            assert lhs == rhs

    def test_theorem1_count(self, bundle):
        b = bundle(general(THEOREM1_ETA, 2))
        ints, _ = integer_linear_form(b.decomposition, b.factors)
        assert len(ints) == 7  # constant plus beta(2), ..., beta(12)

    def test_inclusion_failure_raises(self, bundle):
        from betaforms.decomposition import DecompositionResult

        b = bundle(section2(3, 2))
        broken = DecompositionResult(
            b.profile, tuple(
                a + Fraction(1, 7) for a in b.decomposition.a))
        with pytest.raises(InclusionError):
            integer_linear_form(broken, b.factors)


class TestRemark1Probe:
    def test_needs_doubled_index_3_2(self, bundle):
        report = remark1_denominator_probe(3, 2)
        assert report.d_2n_clears
        assert not report.d_n_clears
        assert report.smallest_clearing_index == 4
        # the main construction clears already at index n
        b = bundle(section2(3, 2))
        assert verify_form_inclusions(b.decomposition, b.factors).ok

    def test_deterministic(self):
        assert remark1_denominator_probe(5, 2) == remark1_denominator_probe(5, 2)

    def test_5_2(self):
        report = remark1_denominator_probe(5, 2)
        assert report.d_2n_clears and not report.d_n_clears
