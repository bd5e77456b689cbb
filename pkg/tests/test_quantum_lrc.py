import pytest

from constadesign.exceptions import LengthMismatch, LocalityUndefined, ShiftConstantEqual
from constadesign.services.constacyclic import dual_code
from constadesign.services.quantum_lrc import (
    cm_bound, eaqecc_from_pair, intersection_dimension, lrc_report, singleton_like_bound,
)
from constadesign.utils.numbers import FAMILY_A, FAMILY_B

from .conftest import codes_for


@pytest.mark.parametrize("q", [3, 4, 5])
def test_eaqecc_from_family_codes(family_codes, q):
    n = q * q + 1
    codes = codes_for(family_codes, q)
    seen = 0
    for c1 in codes:
        for c2 in codes:
            params = eaqecc_from_pair(c1, c2)
            if not params.in_hypothesis:
                continue
            seen += 1
            assert (params.n, params.k_logical, params.d, params.c) == (n, 4, q * q - q, q * q - 3)
            assert params.maximal_entanglement
            assert params.intersection.agrees
            rate = params.net_rate.split("/")
            assert int(rate[0]) * n == (7 - q * q) * int(rate[1])
    assert seen > 0


@pytest.mark.parametrize("q", [3, 4, 5])
def test_eaqecc_from_dual_codes(family_codes, q):
    n = q * q + 1
    duals = [dual_code(c) for c in codes_for(family_codes, q)]
    for c1 in duals:
        for c2 in duals:
            params = eaqecc_from_pair(c1, c2)
            if params.in_hypothesis:
                assert (params.k_logical, params.d, params.c) == (q * q - 3, 4, 4)
                assert params.maximal_entanglement
                rate = params.net_rate.split("/")
                assert int(rate[0]) * n == (q * q - 7) * int(rate[1])


def test_q3_net_rates(family_codes):
    c1, c2 = family_codes[(3, FAMILY_A, 4)], family_codes[(3, FAMILY_B, 2)]
    assert eaqecc_from_pair(c1, c2).net_rate == "-1/5"
    assert eaqecc_from_pair(dual_code(c1), dual_code(c2)).net_rate == "1/5"


def test_intersection_with_equal_shift_constants(family_codes):
    code = family_codes[(3, FAMILY_B, 2)]
    report = intersection_dimension(code, code)
    assert report.lambda_equal
    assert report.formula is None
    assert report.explicit == 4
    with pytest.raises(ShiftConstantEqual):
        intersection_dimension(code, code, require_formula=True)


def test_intersection_across_lengths(family_codes):
    with pytest.raises(LengthMismatch):
        intersection_dimension(family_codes[(3, FAMILY_B, 2)], family_codes[(4, FAMILY_B, 3)])


def test_bounds():
    assert singleton_like_bound(10, 6, 5) == 4
    value, terms = cm_bound(10, 6, 4, 5)
    assert value == 6
    assert terms == {0: 7, 1: 6}
    value, terms = cm_bound(17, 13, 4, 11)
    assert value == 13
    assert terms == {0: 14, 1: 13}


@pytest.mark.parametrize("q", [3, 4, 5])
def test_lrc_from_dual_codes(family_codes, q):
    for code in codes_for(family_codes, q):
        report = lrc_report(dual_code(code))
        assert report.locality == q * q - q - 1
        assert report.d == 4
        assert report.singleton_like_bound == 4
        assert report.cm_bound == q * q - 3 == report.k
        assert report.distance_optimal and report.dimension_optimal


def test_lrc_needs_dual_distance_above_two(family_codes):
    with pytest.raises(LocalityUndefined):
        lrc_report(dual_code(family_codes[(2, FAMILY_A, 1)]))
