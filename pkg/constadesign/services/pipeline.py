import logging
import math
from typing import List, Optional

from ..config import get_settings
from ..exceptions import ConstaDesignError
from ..models.codes import WeightDistribution
from ..models.reports import CheckResult, VerificationReport
from ..utils.numbers import FAMILY_A, FAMILY_B, admissible_r, split_prime_power
from . import designs, equations, quantum_lrc, subfield, wdist
from .constacyclic import ConstacyclicCode, build_code, dual_code, generator_matrix, same_code
from .gf import build_tower

logger = logging.getLogger(__name__)


class CheckList:
    """Ordered pass/fail record of one verification run"""

    def __init__(self):
        self.results: List[CheckResult] = []

    def record(self, name: str, passed: bool, detail: Optional[str] = None) -> bool:
        passed = bool(passed)
        self.results.append(CheckResult(name=name, passed=passed, detail=detail))
        if passed:
            logger.info("PASS %s", name)
        else:
            logger.warning("FAIL %s %s", name, detail or "")
        return passed

    def guard(self, name: str, func):
        """Run func; a library error becomes a failed check instead of aborting the run"""
        try:
            return func()
        except ConstaDesignError as e:
            self.record(name, False, f"{e.code}: {e.message}")
            return None

    @property
    def first_failure(self) -> Optional[str]:
        return next((c.name for c in self.results if not c.passed), None)


def _mds_distribution_ok(wd: WeightDistribution) -> bool:
    d = wd.n - wd.k + 1
    return wdist.minimum_distance(wd) == d and wd.count(d) == math.comb(wd.n, d) * (wd.Q - 1)


def _verify_code(checks: CheckList, code: ConstacyclicCode, budget: Optional[int], workers: Optional[int]) -> None:
    q, n = code.q, code.n
    tag = f"{code.name} r={code.r}"
    G = generator_matrix(code)
    min_weight = q * q - q

    counts, supports = wdist.enumerate_span(G, code.quad, budget=budget, workers=workers, collect_weight=min_weight)
    wd = WeightDistribution(n=n, k=code.k, Q=code.quad.size, counts=tuple(counts))
    dual_wd = wdist.macwilliams_dual(wd)

    if q == 2:
        checks.record(f"{tag}: MDS distribution", _mds_distribution_ok(wd), str(wd.nonzero()))
        checks.record(f"{tag}: dual distance 5", wdist.minimum_distance(dual_wd) == 5)
        checks.record(f"{tag}: binomial moments", wdist.pless_moment_check(wd, 4))
        return

    checks.record(f"{tag}: exhaustive equals closed form", wd == wdist.weight_distribution_analytic(q),
                  str(wd.nonzero()))
    checks.record(f"{tag}: minimum distance q^2-q", wdist.minimum_distance(wd) == min_weight)
    a4 = wdist.a4_dual_closed_form(q)
    checks.record(f"{tag}: dual A_1..A_3 = 0, A_4 closed form",
                  dual_wd.counts[1:4] == (0, 0, 0) and dual_wd.count(4) == a4, f"A_4={dual_wd.count(4)}")
    checks.record(f"{tag}: binomial moments", wdist.pless_moment_check(wd, 3))

    primal_params, dual_params = designs.family_design_parameters(q)
    primal = designs.design_from_supports(supports, min_weight, n, code.quad.size - 1)
    checks.record(f"{tag}: q^3+q minimum-weight blocks", primal.b == primal_params.b, f"b={primal.b}")
    result = designs.verify_t_design(primal, 3, budget)
    checks.record(f"{tag}: primal 3-design", result.holds and result.eta == primal_params.eta, f"eta={result.eta}")
    checks.record(f"{tag}: primal block-count identity",
                  designs.design_identity_check(n, 3, primal.kappa, result.eta, primal.b))
    complement = designs.complementary_design(primal)
    checks.record(f"{tag}: complement is S(3,q+1,q^2+1)", designs.steiner_check(complement, 3, budget))

    dual_design = checks.guard(f"{tag}: dual column search", lambda: designs.dual_weight_design(code, 4, budget))
    if dual_design is not None:
        checks.record(f"{tag}: dual column search matches MacWilliams", dual_design.codewords == a4)
        result = designs.verify_t_design(dual_design, 3, budget)
        checks.record(f"{tag}: dual 3-design", result.holds and result.eta == dual_params.eta, f"eta={result.eta}")
        checks.record(f"{tag}: dual block-count identity",
                      designs.design_identity_check(n, 3, 4, result.eta, dual_design.b))

    am = designs.assmus_mattson_check(wd, dual_wd, 3)
    checks.record(f"{tag}: Assmus-Mattson at t=3", am.holds, f"weights in range {am.weights_in_range}")

    exponent = q + 1 if code.family == FAMILY_A else q - 1
    checks.record(f"{tag}: fiber structure of x^{exponent}",
                  equations.preimage_structure_check(code.tower, code.r, exponent).holds)

    sub = subfield.subfield_subcode_direct(code)
    checks.record(f"{tag}: Delsarte cross-check", subfield.delsarte_cross_check(code))
    if subfield.lambda_in_base_field(code):
        prediction = subfield.coset_closure_prediction(code)
        checks.record(f"{tag}: coset-closure prediction", prediction.agrees,
                      f"predicted {prediction.predicted_dimension}, direct {prediction.direct_dimension}")
    else:
        t2 = subfield.t2_triviality_criterion(code)
        checks.record(f"{tag}: |T2| criterion", t2.agrees and t2.trivial_predicted, f"|T2|={t2.t2_size}")
    if code.family == FAMILY_B or code.r == 1:
        checks.record(f"{tag}: subfield subcode has dimension 4", sub.k_sub == 4, f"k={sub.k_sub}")
        if sub.k_sub == 4:
            ovoid = subfield.ovoid_check(sub, budget)
            checks.record(f"{tag}: ovoid enumerator", ovoid.matches and ovoid.dual_distance_ok)
            checks.record(f"{tag}: subcode distance squeezed by Griesmer", ovoid.griesmer_tight, f"d={ovoid.distance}")
            if ovoid.design is not None:
                checks.record(f"{tag}: subcode 3-(q^2+1, q^2-q, (q-2)(q^2-q-1)) design", ovoid.design_ok,
                              f"b={ovoid.design_blocks}, eta={ovoid.design.eta}")
    else:
        checks.record(f"{tag}: subfield subcode is trivial", sub.k_sub == 0, f"k={sub.k_sub}")


def _verify_pairs(checks: CheckList, codes: List[ConstacyclicCode]) -> None:
    q = codes[0].q
    n = q * q + 1
    duals = [dual_code(c) for c in codes]
    for group, expected in ((codes, (4, q * q - q, q * q - 3)), (duals, (q * q - 3, 4, 4))):
        for c1 in group:
            for c2 in group:
                params = quantum_lrc.eaqecc_from_pair(c1, c2)
                tag = f"EAQECC ({c1.name} r={c1.r}, {c2.name} r={c2.r})"
                if not params.in_hypothesis:
                    checks.record(f"{tag}: outside lambda1 lambda2 != 1", True,
                                  f"[[{params.n},{params.k_logical},{params.d};{params.c}]]")
                    continue
                got = (params.k_logical, params.d, params.c)
                checks.record(f"{tag}: parameters", got == expected and params.maximal_entanglement,
                              f"[[{n},{got[0]},{got[1]};{got[2]}]]")
                checks.record(f"{tag}: intersection formula", bool(params.intersection.agrees))

    for c in duals:
        report = quantum_lrc.lrc_report(c)
        checks.record(f"LRC {c.name} r={c.r}",
                      report.locality == q * q - q - 1 and report.distance_optimal and report.dimension_optimal,
                      f"locality {report.locality}, CM {report.cm_bound}")


def verify_all(q: int, budget: Optional[int] = None, workers: Optional[int] = None) -> VerificationReport:
    """Every check for one q, over all admissible r of both families"""
    p, m = split_prime_power(q)
    tower = build_tower(p, m)
    checks = CheckList()

    codes: List[ConstacyclicCode] = []
    for family in (FAMILY_A, FAMILY_B):
        for r in admissible_r(q, family):
            code = checks.guard(f"build {family} r={r}", lambda: build_code(tower, r, family))
            if code is None:
                continue
            checks.record(f"build C(1,{code.s}) r={r}: g h = x^n - lambda, k = 4", code.k == 4)
            codes.append(code)
            checks.guard(f"verify {code.name} r={r}", lambda: _verify_code(checks, code, budget, workers))

    for c1 in codes:
        for c2 in codes:
            if c1.family == FAMILY_A and c2.family == FAMILY_B and c1.r == c2.r == 1:
                checks.record("families coincide at r=1", same_code(c1, c2))

    k = 1
    limit = get_settings().budget if budget is None else budget
    if q ** 4 * (q + 1) <= limit:
        report = checks.guard("unit-circle root counts", lambda: equations.unit_circle_root_histogram(tower, k, budget))
        if report is not None:
            checks.record(f"unit-circle root counts k={k}", report.holds, str(report.histogram))
    if m % 2 == 1 and p == 3:
        report = checks.guard("conjecture", lambda: equations.conjecture_check(m, budget))
        if report is not None:
            checks.record("at most 4 roots, witness attains 4", report.holds)

    if q > 2 and codes:
        checks.guard("EAQECC and LRC", lambda: _verify_pairs(checks, codes))

    passed = all(c.passed for c in checks.results)
    return VerificationReport(q=q, tower=tower.descriptor(), checks=checks.results, passed=passed,
                              first_failure=checks.first_failure)
