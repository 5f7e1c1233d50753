import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betaforms.profiles import ProfileError, THEOREM1_ETA, general
from betaforms.rationalfn import (LinearProductRep, binomial_block_coefficients,
                                  binomial_block_product, build_general,
                                  build_remark1, build_section2,
                                  hypergeometric_parameters, partial_fractions,
                                  remark1_identity_check,
                                  section2_top_coefficient, symmetry_check)

TOP_COEFF_CASES = [(3, 2), (5, 2), (5, 4), (17, 2)]


def product_eval_oracle(s, n, t):
    """Straight product evaluation of the basic construction, no shared code."""
    t = Fraction(t)
    val = Fraction(2 ** (6 * n) * math.factorial(n) ** (s - 3)) * (2 * t + n)
    for j in range(1, 3 * n + 1):
        val *= t - n + j - Fraction(1, 2)
    for j in range(n + 1):
        val /= (t + j) ** s
    return val


class TestBuildSection2:
    def test_structure_3_2(self):
        rep = build_section2(3, 2)
        assert rep.den_roots == ((Fraction(-2), 3), (Fraction(-1), 3), (Fraction(0), 3))
        assert rep.num_degree == 7
        assert rep.degree_gap == 2

    def test_symmetry_at_point(self):
        rep = build_section2(5, 2)
        t = Fraction(1, 3)
        assert rep.evaluate(-t - 2) == rep.evaluate(t)

    @settings(max_examples=40, deadline=None)
    @given(st.fractions(min_value=Fraction(1, 7), max_value=3, max_denominator=30))
    def test_matches_product_oracle(self, t):
        rep = build_section2(3, 2)
        assert rep.evaluate(t) == product_eval_oracle(3, 2, t)

    def test_value_at_half(self):
        rep = build_section2(5, 4)
        assert rep.evaluate(Fraction(1, 2)) == product_eval_oracle(5, 4, Fraction(1, 2))

    def test_parameter_validation(self):
        with pytest.raises(ProfileError):
            build_section2(4, 2)
        with pytest.raises(ProfileError):
            build_section2(3, 3)

    def test_pole_evaluation_raises(self):
        with pytest.raises(ZeroDivisionError):
            build_section2(3, 2).evaluate(-1)


class TestBuildGeneral:
    def test_gamma_example(self):
        profile = general((5, 1, 1, 1, 1, 1), 2)
        assert profile.gamma == Fraction(4 ** 10 * math.factorial(6) ** 4,
                                         math.factorial(2) ** 2)

    def test_symmetry(self):
        profile = general((5, 1, 1, 1, 1, 1), 2)
        rep = build_general(profile, 2)
        t = Fraction(1, 5)
        assert rep.evaluate(-t - profile.h0) == rep.evaluate(t)

    def test_pole_multiplicity_at_edge(self):
        # multiplicity at the lowest pole = number of minimal eta entries
        profile = general(THEOREM1_ETA, 2)
        table = partial_fractions(build_general(profile, 2))
        k_min = min(table.pole_ks)
        assert k_min == profile.N
        idx = table.pole_ks.index(k_min)
        n_min = sum(1 for e in THEOREM1_ETA[1:] if e == min(THEOREM1_ETA[1:]))
        assert table.multiplicities[idx] == n_min == 5

    def test_degree_gap_positive(self):
        for eta, n in [((5, 1, 1, 1, 1, 1), 2), (THEOREM1_ETA, 2)]:
            assert build_general(general(eta, n), n).degree_gap >= 2


class TestPartialFractions:
    def test_reconstruction_suite(self, bundle):
        from tests.conftest import suite_profiles

        rng = random.Random(7)
        for profile in suite_profiles():
            b = bundle(profile)
            # the big table is exact too, just slower per point
            points = 5 if b.rep.den_degree > 300 else 20
            for _ in range(points):
                t = Fraction(rng.randrange(1, 400), rng.choice([7, 9, 11, 13]))
                assert b.table.reconstruct(t) == b.rep.evaluate(t)

    def test_improper_rejected(self):
        rep = LinearProductRep.build(1, [(Fraction(5), 1)], [(Fraction(0), 1)])
        with pytest.raises(ValueError):
            partial_fractions(rep)

    @settings(max_examples=10, deadline=None)
    @given(st.fractions(min_value=Fraction(-50), max_value=50,
                        max_denominator=90).filter(bool))
    def test_linearity(self, bundle, c):
        from betaforms.profiles import section2

        b = bundle(section2(3, 2))
        scaled = partial_fractions(b.rep.scaled(c))
        for i, k, coeff in b.table.entries():
            assert scaled.a(i, k) == c * coeff

    def test_section2_properness_formula(self):
        for s, n in [(3, 2), (3, 4), (5, 2), (5, 4), (17, 2)]:
            rep = build_section2(s, n)
            assert rep.degree_gap == (n + 1) * s - (3 * n + 1) >= 2

    def test_residues_sum_to_zero(self, bundle):
        # gap >= 2 forces a zero residue sum at infinity
        from tests.conftest import suite_profiles

        for profile in suite_profiles():
            b = bundle(profile)
            assert b.rep.degree_gap >= 2
            assert sum(b.table.a(1, k) for k in b.table.pole_ks) == 0

    @pytest.mark.parametrize("s,n", TOP_COEFF_CASES)
    def test_top_coefficient_closed_form(self, bundle, s, n):
        from betaforms.profiles import section2

        table = bundle(section2(s, n)).table
        for k in range(n + 1):
            assert table.a(s, k) == section2_top_coefficient(s, n, k)

    def test_reflection_identity(self, bundle):
        from tests.conftest import suite_profiles

        for profile in suite_profiles():
            b = bundle(profile)
            assert symmetry_check(b.table, profile.reflection_constant)

    def test_mutated_table_fails_symmetry(self, bundle):
        from betaforms.profiles import section2
        from betaforms.rationalfn import PartialFractionTable

        table = bundle(section2(3, 2)).table
        rows = [list(r) for r in table.rows]
        rows[0][0] += 1
        bad = PartialFractionTable(table.s, table.pole_ks, table.pole_offset,
                                   table.multiplicities,
                                   tuple(tuple(r) for r in rows))
        assert not symmetry_check(bad, 2)


class TestBinomialBlocks:
    def test_kind1_small(self):
        assert binomial_block_coefficients(1, 2) == [1, -2, 1]

    def test_kind3_example(self):
        assert binomial_block_coefficients(3, 1)[0] == 2

    @pytest.mark.parametrize("kind", [1, 2, 3, 4])
    def test_closed_form_equals_partial_fractions(self, kind):
        table = partial_fractions(binomial_block_product(kind, 3))
        closed = binomial_block_coefficients(kind, 3)
        assert [table.a(1, k) for k in table.pole_ks] == closed

    def test_kind_validation(self):
        with pytest.raises(ValueError):
            binomial_block_coefficients(5, 3)
        with pytest.raises(ValueError):
            binomial_block_coefficients(1, 0)


class TestRemark1:
    def test_identity_examples(self):
        assert remark1_identity_check(3, 2, Fraction(1, 3))
        assert remark1_identity_check(5, 2, Fraction(7, 2))

    def test_both_proper(self):
        main = build_section2(3, 2)
        variant = build_remark1(3, 2)
        assert main.degree_gap >= 1 and variant.degree_gap >= 1
        # the completing factor has degree n, matching the gap difference
        assert variant.degree_gap - main.degree_gap == 2

    @settings(max_examples=25, deadline=None)
    @given(st.fractions(min_value=Fraction(1, 9), max_value=5, max_denominator=40))
    def test_identity_random_points(self, t):
        assert remark1_identity_check(3, 2, t)


class TestHypergeometricParameters:
    def test_counts(self):
        up, low, arg = hypergeometric_parameters((5, 1, 1, 1, 1, 1), 2)
        assert len(up) == 7 and len(low) == 6 and arg == -1

    def test_well_poised_pairing(self):
        up, low, _ = hypergeometric_parameters(THEOREM1_ETA, 2)
        for j in range(2, len(up)):
            assert up[0] + 1 == up[j] + low[j - 1]
        # the convergence-accelerating pair
        assert up[1] == 1 + up[0] / 2 and low[0] == up[0] / 2

    def test_direct_substitution(self):
        up, _, _ = hypergeometric_parameters((5, 1, 1, 1, 1, 1), 2)
        assert up[1] == 1 + Fraction(11, 2)
