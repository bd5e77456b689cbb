"""Larger exhaustive runs; deselected by default, run with `pytest -m slow`."""
import pytest

from constadesign.services.constacyclic import build_code
from constadesign.services.gf import build_tower
from constadesign.services.pipeline import verify_all
from constadesign.services.wdist import weight_distribution_analytic, weight_distribution_exhaustive
from constadesign.utils.numbers import FAMILY_A, FAMILY_B, admissible_r, split_prime_power

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("q", [7, 8, 9])
def test_exhaustive_matches_closed_form(q):
    tower = build_tower(*split_prime_power(q))
    expected = weight_distribution_analytic(q)
    for family in (FAMILY_A, FAMILY_B):
        r = admissible_r(q, family)[0]
        assert weight_distribution_exhaustive(build_code(tower, r, family), workers=4) == expected


@pytest.mark.parametrize("q", [4, 5])
def test_verify_all(q):
    report = verify_all(q, workers=4)
    assert report.passed, report.first_failure
