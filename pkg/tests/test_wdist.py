import math

import pytest

from constadesign.exceptions import BudgetExceeded, UnsupportedQ, ZeroCode
from constadesign.models.codes import WeightDistribution
from constadesign.services.constacyclic import dual_code, generator_matrix
from constadesign.services.wdist import (
    a4_dual_closed_form, code_distance, distribution_for, dual_weight_counts, enumerate_span, griesmer_check,
    krawtchouk, low_weight_dual_codewords, low_weight_summary, macwilliams_dual, minimum_distance, moment_report,
    pless_moment_check, power_moments, printed_moment_rhs, weight_distribution_analytic,
    weight_distribution_exhaustive,
)
from constadesign.utils.numbers import FAMILY_A, FAMILY_B

ACCEPTANCE_CODES = [(3, FAMILY_B, 2), (3, FAMILY_A, 4), (4, FAMILY_A, 1), (4, FAMILY_A, 5), (4, FAMILY_B, 1),
                    (4, FAMILY_B, 3), (5, FAMILY_A, 2), (5, FAMILY_A, 6), (5, FAMILY_B, 4)]


@pytest.mark.parametrize("key", ACCEPTANCE_CODES)
def test_exhaustive_matches_closed_form(family_codes, key):
    code = family_codes[key]
    assert weight_distribution_exhaustive(code) == weight_distribution_analytic(code.q)


def test_small_q_values(worked_examples):
    for q in ("3", "4"):
        wd = weight_distribution_analytic(int(q))
        assert [list(x) for x in wd.nonzero()] == worked_examples["small_q"][q]["nonzero"]


def test_worked_examples(worked_examples):
    for example in worked_examples["codes"]:
        wd = weight_distribution_analytic(example["q"], example["family"])
        assert wd.n == example["n"]
        assert [list(x) for x in wd.nonzero()] == example["nonzero"]
        assert minimum_distance(wd) == example["d"]


def test_q2_code_is_mds(family_codes):
    wd = weight_distribution_exhaustive(family_codes[(2, FAMILY_A, 1)])
    assert minimum_distance(wd) == 2
    assert wd.count(2) == math.comb(5, 2) * 3
    assert minimum_distance(macwilliams_dual(wd)) == 5
    with pytest.raises(UnsupportedQ):
        weight_distribution_analytic(2)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 13])
def test_dual_low_weights(q):
    dual = macwilliams_dual(weight_distribution_analytic(q))
    assert dual.counts[1:4] == (0, 0, 0)
    assert dual.count(4) == a4_dual_closed_form(q)
    assert dual.k == q * q - 3


def test_a4_values(worked_examples):
    for q in ("3", "4", "5"):
        assert a4_dual_closed_form(int(q)) == worked_examples["small_q"][q]["dual_a4"]


def test_macwilliams_is_an_involution():
    wd = weight_distribution_analytic(3)
    assert macwilliams_dual(macwilliams_dual(wd)) == wd


def test_krawtchouk_small_values():
    assert krawtchouk(0, 3, 10, 9) == 1
    assert krawtchouk(1, 0, 10, 9) == 80
    assert krawtchouk(1, 10, 10, 9) == -10


@pytest.mark.parametrize("q", [3, 4, 5, 9, 16])
def test_binomial_moments(q):
    wd = weight_distribution_analytic(q)
    assert pless_moment_check(wd, 3)
    report = moment_report(wd, 3, q=q)
    assert [x["nu"] for x in report.identities] == [0, 1, 2, 3]
    assert report.power_moments[:3] == printed_moment_rhs(q)[:3]


def test_printed_cubic_moment_is_not_met():
    wd = weight_distribution_analytic(3)
    assert power_moments(wd)[3] == 4775760
    assert printed_moment_rhs(3)[3] == 51431760


def test_moment_prefix_bounded_by_dimension():
    with pytest.raises(ValueError):
        moment_report(weight_distribution_analytic(3), 5)


def test_distribution_validation():
    with pytest.raises(ValueError):
        WeightDistribution(n=2, k=1, Q=2, counts=(1, 0, 0))
    with pytest.raises(ValueError):
        WeightDistribution(n=2, k=1, Q=2, counts=(0, 1, 1))


def test_serialized_distribution_lists_nonzero_weights():
    dumped = weight_distribution_analytic(3).model_dump()
    assert dumped == {"n": 10, "k": 4, "Q": 9, "nonzero": [[6, 240], [8, 2160], [9, 2000], [10, 2160]]}


def test_parallel_enumeration_is_deterministic(family_codes):
    code = family_codes[(3, FAMILY_A, 4)]
    G = generator_matrix(code)
    single = enumerate_span(G, code.quad, workers=1, collect_weight=6)
    pooled = enumerate_span(G, code.quad, workers=2, collect_weight=6)
    assert single == pooled
    assert sum(single[1].values()) == 240


def test_budget(family_codes):
    code = family_codes[(5, FAMILY_B, 4)]
    with pytest.raises(BudgetExceeded):
        weight_distribution_exhaustive(code, budget=1000)
    with pytest.raises(BudgetExceeded):
        low_weight_dual_codewords(code, 6)


@pytest.mark.parametrize("key", [(3, FAMILY_A, 4), (3, FAMILY_B, 2), (4, FAMILY_B, 3)])
def test_low_weight_search_matches_macwilliams(family_codes, key):
    code = family_codes[key]
    found = low_weight_dual_codewords(code, 4)
    counts = dual_weight_counts(found, code.quad.size, 4)
    assert counts == [1, 0, 0, 0, a4_dual_closed_form(code.q)]
    summary = low_weight_summary(code, found, 4, include_words=False)
    assert summary.supports["4"] * (code.quad.size - 1) == summary.counts["4"]


def test_low_weight_words_are_dual_codewords(family_codes):
    code = family_codes[(3, FAMILY_B, 2)]
    found = low_weight_dual_codewords(code, 4)
    summary = low_weight_summary(code, found, 4)
    assert len(summary.words) == a4_dual_closed_form(3) // 8
    word = summary.words[0]
    assert word.codeword[word.support[0]] == 0


def test_distances(family_codes):
    code = family_codes[(3, FAMILY_A, 4)]
    assert code_distance(code) == 6
    assert code_distance(dual_code(code)) == 4
    dual_wd = distribution_for(dual_code(code))
    assert dual_wd.k == 6
    assert code_distance(family_codes[(2, FAMILY_B, 1)]) == 2


def test_griesmer():
    assert griesmer_check(10, 4, 6, 9)
    assert not griesmer_check(10, 4, 9, 9)


def test_zero_code_has_no_distance():
    with pytest.raises(ZeroCode):
        minimum_distance(WeightDistribution(n=3, k=0, Q=2, counts=(1, 0, 0, 0)))
