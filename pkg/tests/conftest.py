import pytest
from types import SimpleNamespace

from betaforms import (ArithmeticFactors, beta_coefficients, general,
                       partial_fractions, section2)
from betaforms.numerics import build_profile_rep
from betaforms.profiles import THEOREM1_ETA

# the instances every arithmetic claim is verified on
SECTION2_SUITE = [(3, 2), (3, 4), (5, 2), (5, 4), (17, 2)]
THEOREM1_NS = [2, 4]


def suite_profiles():
    profs = [section2(s, n) for s, n in SECTION2_SUITE]
    profs += [general(THEOREM1_ETA, n) for n in THEOREM1_NS]
    return profs


@pytest.fixture(scope="session")
def bundle():
    """Per-profile build cache: representation, table, coefficients, factors."""
    cache = {}

    def get(profile):
        key = profile.label()
        if key not in cache:
            rep = build_profile_rep(profile)
            table = partial_fractions(rep)
            cache[key] = SimpleNamespace(
                profile=profile,
                rep=rep,
                table=table,
                decomposition=beta_coefficients(table, profile),
                factors=ArithmeticFactors.for_profile(profile),
            )
        return cache[key]

    return get
