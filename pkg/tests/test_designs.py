import pytest

from constadesign.exceptions import BudgetExceeded
from constadesign.models.designs import Design
from constadesign.services.designs import (
    assmus_mattson_check, colex_rank, colex_unrank, complementary_design, design_from_supports,
    design_identity_check, design_report, dual_weight_design, family_design_parameters, primal_weight_design,
    steiner_check, supports_of_weight, t_subset_counts, verify_t_design,
)
from constadesign.services.wdist import macwilliams_dual, weight_distribution_analytic
from constadesign.utils.numbers import FAMILY_A, FAMILY_B


def test_colex_rank_roundtrip_small():
    assert colex_rank([0, 1, 2]) == 0
    assert colex_rank([0, 1, 3]) == 1
    assert colex_rank([1, 2, 3]) == 3
    assert colex_unrank(3, 3) == [1, 2, 3]
    assert colex_unrank(colex_rank([2, 5, 9]), 3) == [2, 5, 9]


def test_fano_plane_is_a_steiner_triple_system():
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)]
    fano = Design(v=7, kappa=3, blocks=sorted(lines))
    assert steiner_check(fano, 2)
    assert fano.t == 2 and fano.eta == 1


def test_non_design_reports_a_witness():
    design = Design(v=5, kappa=2, blocks=[(0, 1), (0, 2)])
    result = verify_t_design(design, 1)
    assert not result.holds
    assert result.witness == [[0], [1]]
    assert result.witness_counts == [2, 1]


def test_design_rejects_repeated_or_bad_blocks():
    with pytest.raises(ValueError):
        Design(v=4, kappa=2, blocks=[(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        Design(v=4, kappa=2, blocks=[(0, 4)])


def test_supports_of_weight_counts_multiplicities():
    words = [[1, 1, 0], [2, 2, 0], [0, 1, 1], [1, 1, 1]]
    design = supports_of_weight(words, 2, 3, scalars=2)
    assert design.blocks == [(0, 1), (1, 2)]
    assert design.codewords == 3
    assert design.max_multiplicity == 2


def test_non_simple_supports_are_flagged():
    design = design_from_supports({(0, 1): 3}, 2, 3, scalars=2)
    assert not design_report(design).simple


@pytest.mark.parametrize("q, primal, dual", [
    (3, (3, 10, 6, 5, 30), (3, 10, 4, 1, 30)),
    (4, (3, 17, 12, 22, 68), (3, 17, 4, 2, 340)),
    (5, (3, 26, 20, 57, 130), (3, 26, 4, 3, 1950)),
])
def test_family_design_parameters(q, primal, dual):
    p, d = family_design_parameters(q)
    assert (p.t, p.v, p.kappa, p.eta, p.b) == primal
    assert (d.t, d.v, d.kappa, d.eta, d.b) == dual


def test_worked_example_design_parameters(worked_examples):
    for example in worked_examples["codes"]:
        primal, dual = family_design_parameters(example["q"])
        assert [primal.t, primal.v, primal.kappa, primal.eta] == example["primal_design"]
        assert [dual.t, dual.v, dual.kappa, dual.eta] == example["dual_design"]


@pytest.mark.parametrize("key", [(3, FAMILY_A, 4), (3, FAMILY_B, 2), (4, FAMILY_A, 5), (4, FAMILY_B, 1)])
def test_primal_minimum_weight_design(family_codes, key):
    code = family_codes[key]
    q = code.q
    design = primal_weight_design(code)
    expected, _ = family_design_parameters(q)
    assert design.b == q ** 3 + q
    assert design.codewords == q ** 5 - q
    result = verify_t_design(design, 3)
    assert result.holds and result.eta == expected.eta
    assert design_identity_check(design.v, 3, design.kappa, result.eta, design.b)
    assert steiner_check(complementary_design(design), 3)


@pytest.mark.parametrize("key", [(3, FAMILY_A, 4), (3, FAMILY_B, 2), (4, FAMILY_B, 3)])
def test_dual_weight_four_design(family_codes, key):
    code = family_codes[key]
    design = dual_weight_design(code)
    _, expected = family_design_parameters(code.q)
    assert design.b == expected.b
    result = verify_t_design(design, 3)
    assert result.holds and result.eta == code.q - 2


def test_dual_design_is_s_3_4_10(family_codes):
    assert steiner_check(dual_weight_design(family_codes[(3, FAMILY_B, 2)]), 3)


def test_dual_design_q5(family_codes):
    design = dual_weight_design(family_codes[(5, FAMILY_A, 2)])
    assert design.b == 1950
    assert design.codewords == 46800
    result = verify_t_design(design, 3)
    assert result.holds and result.eta == 3


def test_incidence_budget(family_codes):
    design = primal_weight_design(family_codes[(3, FAMILY_A, 4)])
    with pytest.raises(BudgetExceeded):
        t_subset_counts(design, 3, budget=100)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_assmus_mattson(q):
    wd = weight_distribution_analytic(q)
    report = assmus_mattson_check(wd, macwilliams_dual(wd), 3)
    assert report.holds
    assert report.d == q * q - q and report.d_dual == 4
    assert report.weights_in_range == [q * q - q]
    assert report.allowance == 1
    assert q * q - q in report.primal_design_weights
    assert 4 in report.dual_design_weights


def test_assmus_mattson_ranges_q3():
    wd = weight_distribution_analytic(3)
    report = assmus_mattson_check(wd, macwilliams_dual(wd), 3)
    assert (report.omega, report.omega_dual) == (6, 4)
    assert report.primal_design_weights == [6]
    assert report.dual_design_weights == [4]


def test_design_report_omits_large_block_lists(family_codes):
    design = primal_weight_design(family_codes[(3, FAMILY_A, 4)])
    result = verify_t_design(design, 3)
    small = design_report(design, result, threshold=10)
    assert small.blocks is None and small.blocks_omitted
    full = design_report(design, result, threshold=1000)
    assert len(full.blocks) == 30
    assert full.identity_holds
