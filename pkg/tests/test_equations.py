import pytest

from constadesign.exceptions import BudgetExceeded, InvalidR, NotOdd
from constadesign.models.field import FieldLevel
from constadesign.services.equations import (
    admissible_counts, bluher_root_histogram, conjecture_check, preimage_structure_check,
    unit_circle_root_histogram,
)
from constadesign.services.gf import build_tower
from constadesign.utils.numbers import FAMILY_A, FAMILY_B, admissible_r, split_prime_power


def test_admissible_counts():
    assert admissible_counts(3, 1, 1) == [0, 1, 2, 4]
    assert admissible_counts(3, 2, 2) == [0, 1, 2, 10]
    assert admissible_counts(2, 1, 3) == [0, 1, 2, 3]


@pytest.mark.parametrize("q, k", [(3, 1), (4, 1), (5, 1), (8, 1), (9, 1), (9, 2)])
def test_unit_circle_root_counts(q, k):
    tower = build_tower(*split_prime_power(q))
    report = unit_circle_root_histogram(tower, k)
    assert report.holds
    assert sum(report.histogram.values()) == q ** 4 - 1
    assert set(report.histogram) == set(report.witnesses)


@pytest.mark.parametrize("q", [8, 9, 27])
def test_bluher_root_counts(q):
    tower = build_tower(*split_prime_power(q))
    report = bluher_root_histogram(tower, 1)
    assert report.holds
    assert report.pairs == (q - 1) ** 2
    assert sum(report.histogram.values()) == (q - 1) ** 2


def test_witnesses_reproduce_their_counts():
    tower = build_tower(3, 2)
    report = bluher_root_histogram(tower, 1)
    for count, (log_a, log_b) in report.witnesses.items():
        a, b = tower.element(log_a), tower.element(log_b)
        roots = [x for x in tower.level_elements(FieldLevel.BASE) if (x ** 4 + a * x + b).is_zero]
        assert len(roots) == int(count)


def test_budget():
    with pytest.raises(BudgetExceeded):
        unit_circle_root_histogram(build_tower(3, 1), 1, budget=10)


@pytest.mark.parametrize("m", [1, 3])
def test_conjecture(m):
    report = conjecture_check(m)
    assert report.max_count == 4
    assert report.witness_count == 4
    assert report.holds


def test_conjecture_needs_odd_m():
    with pytest.raises(NotOdd):
        conjecture_check(2)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_preimage_structure(towers, q):
    for family, exponent in ((FAMILY_A, q + 1), (FAMILY_B, q - 1)):
        for r in admissible_r(q, family):
            report = preimage_structure_check(towers[q], r, exponent)
            assert report.holds, (q, family, r)


def test_preimage_needs_admissible_r(towers):
    with pytest.raises(InvalidR):
        preimage_structure_check(towers[3], 2, 4)
    with pytest.raises(ValueError):
        preimage_structure_check(towers[3], 4, 5)
