import logging
from typing import Callable, Dict, List

from pydantic import BaseModel

from ..exceptions import InvalidR, UsageError
from ..models.field import FieldLevel
from ..models.reports import (
    CodeReport, DesignsReport, EaqeccReport, EquationsReport, JobSpec, LrcSummary,
    SubfieldReport, TowerReport, VerificationReport, WdistReport,
)
from ..services import designs, equations, subfield, wdist
from ..services.constacyclic import ConstacyclicCode, build_code, descriptor, dual_code
from ..services.gf import FieldTower, build_tower, delta_lambda
from ..services.pipeline import verify_all
from ..services.quantum_lrc import eaqecc_from_pair, lrc_report
from ..utils.numbers import FAMILY_A, FAMILY_B, admissible_r, split_prime_power

logger = logging.getLogger(__name__)


def resolve_tower(job: JobSpec) -> FieldTower:
    """--q, or --p with --m"""
    if job.q is not None:
        p, m = split_prime_power(job.q)
        if (job.p is not None and job.p != p) or (job.m is not None and job.m != m):
            raise UsageError(f"--q {job.q} conflicts with --p {job.p} --m {job.m}")
        return build_tower(p, m)
    if job.p is None or job.m is None:
        raise UsageError("give --q, or both --p and --m")
    return build_tower(job.p, job.m)


def resolve_code(job: JobSpec, tower: FieldTower) -> ConstacyclicCode:
    if job.family is None:
        raise UsageError(f"{job.command} needs --family A or --family B")
    r = job.r
    if r is None:
        candidates = admissible_r(tower.q, job.family)
        if not candidates:
            raise InvalidR(f"no admissible r for q={tower.q} family {job.family}", {"q": tower.q})
        r = candidates[0]
        logger.info("No --r given; using the smallest admissible r=%d", r)
    return build_code(tower, r, job.family)


def selected_codes(job: JobSpec, tower: FieldTower) -> List[ConstacyclicCode]:
    """The codes named by --family/--r, or every admissible code of both families"""
    families = [job.family] if job.family else [FAMILY_A, FAMILY_B]
    codes = []
    for family in families:
        rs = [job.r] if job.r is not None else admissible_r(tower.q, family)
        codes.extend(build_code(tower, r, family) for r in rs)
    return codes


def tower_command(job: JobSpec) -> TowerReport:
    """Tower descriptor, level sizes and, with --r, the logs of delta and lambda"""
    tower = resolve_tower(job)
    sizes = {level.value: tower.level_size(level) for level in FieldLevel}
    delta_log = lambda_log = None
    if job.r is not None:
        delta, lam = delta_lambda(tower, job.r)
        delta_log, lambda_log = delta.log, lam.log
    return TowerReport(tower=tower.descriptor(), level_sizes=sizes, delta_log=delta_log, lambda_log=lambda_log)


def build_command(job: JobSpec) -> CodeReport:
    code = resolve_code(job, resolve_tower(job))
    dual = descriptor(dual_code(code)) if job.dual else None
    return CodeReport(code=descriptor(code), dual=dual)


def wdist_command(job: JobSpec) -> WdistReport:
    """Exhaustive distribution (default) or the closed form (--analytic), with its MacWilliams dual"""
    code = resolve_code(job, resolve_tower(job))
    if job.analytic:
        method = "analytic"
        wd = wdist.weight_distribution_analytic(code.q, code.family)
    else:
        method = "exhaustive"
        wd = wdist.weight_distribution_exhaustive(code, budget=job.budget, workers=job.workers)
    dual = wdist.macwilliams_dual(wd)
    dual_distance = wdist.minimum_distance(dual)
    moments = wdist.moment_report(wd, min(dual_distance - 1, wd.k), q=code.q if code.q > 2 else None)
    return WdistReport(code=descriptor(code), method=method, distribution=wd, dual=dual,
                       minimum_distance=wdist.minimum_distance(wd), dual_distance=dual_distance, moments=moments)


def designs_command(job: JobSpec) -> DesignsReport:
    """Minimum-weight primal design, weight-4 dual design, complement and Assmus-Mattson"""
    code = resolve_code(job, resolve_tower(job))
    primal = designs.primal_weight_design(code, budget=job.budget, workers=job.workers)
    t = min(3, primal.kappa)
    primal_check = designs.verify_t_design(primal, t, job.budget)

    dual = designs.dual_weight_design(code, 4, job.budget)
    dual_check = designs.verify_t_design(dual, 3, job.budget) if dual.b else None

    complement = designs.complementary_design(primal)
    complement_check = designs.verify_t_design(complement, 3, job.budget) if complement.kappa >= 3 else None
    steiner = complement_check.holds and complement_check.eta == 1 if complement_check else None

    wd = wdist.distribution_for(code, job.budget, job.workers)
    am = designs.assmus_mattson_check(wd, wdist.macwilliams_dual(wd), 3)
    return DesignsReport(
        code=descriptor(code),
        primal=designs.design_report(primal, primal_check),
        dual=designs.design_report(dual, dual_check),
        complement=designs.design_report(complement, complement_check),
        steiner_complement=steiner,
        assmus_mattson=am,
    )


def subfield_command(job: JobSpec) -> SubfieldReport:
    code = resolve_code(job, resolve_tower(job))
    sub = subfield.subfield_subcode_direct(code)
    ovoid = subfield.ovoid_check(sub, job.budget) if sub.k_sub == 4 else None
    t2 = closure = None
    if subfield.lambda_in_base_field(code):
        closure = subfield.coset_closure_prediction(code)
    else:
        t2 = subfield.t2_triviality_criterion(code)
    return SubfieldReport(code=descriptor(code), subcode=sub.model(), delsarte_agrees=subfield.delsarte_cross_check(code),
                          ovoid=ovoid, t2=t2, coset_closure=closure)


def equations_command(job: JobSpec) -> EquationsReport:
    """Root-count histograms for exponent p^k, the p=3 bound when it applies, and the fiber checks"""
    tower = resolve_tower(job)
    bluher = equations.bluher_root_histogram(tower, job.k, job.budget)
    unit = equations.unit_circle_root_histogram(tower, job.k, job.budget)
    conjecture = None
    if tower.p == 3 and tower.m % 2 == 1 and job.k == 2:
        conjecture = equations.conjecture_check(tower.m, job.budget)
    preimages = []
    for family, exponent in ((FAMILY_A, tower.q + 1), (FAMILY_B, tower.q - 1)):
        for r in admissible_r(tower.q, family):
            preimages.append(equations.preimage_structure_check(tower, r, exponent))
    return EquationsReport(tower=tower.descriptor(), bluher=bluher, unit_circle=unit,
                           conjecture=conjecture, preimages=preimages)


def eaqecc_command(job: JobSpec) -> EaqeccReport:
    """Every ordered pair of the selected codes, then of their duals"""
    tower = resolve_tower(job)
    codes = selected_codes(job, tower)
    duals = [dual_code(c) for c in codes]
    pairs = [eaqecc_from_pair(c1, c2) for group in (codes, duals) for c1 in group for c2 in group]
    return EaqeccReport(tower=tower.descriptor(), pairs=pairs)


def lrc_command(job: JobSpec) -> LrcSummary:
    tower = resolve_tower(job)
    reports = [lrc_report(dual_code(c)) for c in selected_codes(job, tower)]
    return LrcSummary(tower=tower.descriptor(), codes=reports)


def verify_all_command(job: JobSpec) -> VerificationReport:
    tower = resolve_tower(job)
    return verify_all(tower.q, budget=job.budget, workers=job.workers)


COMMANDS: Dict[str, Callable[[JobSpec], BaseModel]] = {
    "tower": tower_command,
    "build": build_command,
    "wdist": wdist_command,
    "designs": designs_command,
    "subfield": subfield_command,
    "equations": equations_command,
    "eaqecc": eaqecc_command,
    "lrc": lrc_command,
    "verify-all": verify_all_command,
}


def run_job(job: JobSpec) -> BaseModel:
    logger.info("Running %s", job.command)
    return COMMANDS[job.command](job)
