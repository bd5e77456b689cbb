import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from ..exceptions import DimensionMismatch, InvalidRegime, VerificationFailed
from ..models.codes import SubfieldCodeModel, WeightDistribution
from ..models.field import FieldLevel
from ..models.reports import CosetClosureReport, OvoidReport, T2Report
from ..utils import linalg
from ..utils.numbers import multiplicative_order
from .constacyclic import ConstacyclicCode, dual_code, generator_matrix
from .designs import design_from_supports, verify_t_design
from .gf import FieldElem, LevelTables
from .polyring import cyclotomic_cosets
from .wdist import code_distance, enumerate_span, griesmer_check, macwilliams_dual, minimum_distance

logger = logging.getLogger(__name__)


class SubfieldCode:
    """C restricted to F_q; basis rows are BASE labels"""

    def __init__(self, parent: ConstacyclicCode, basis: np.ndarray):
        self.parent = parent
        self.q = parent.q
        self.n = parent.n
        self.basis = basis
        self.k_sub = basis.shape[0]

    @property
    def base(self) -> LevelTables:
        return self.parent.tower.tables(FieldLevel.BASE)

    @property
    def parent_distance(self) -> int:
        return code_distance(self.parent)

    def as_quad_rows(self) -> np.ndarray:
        return self.parent.quad.from_logs(self.base.to_logs(self.basis))

    def model(self) -> SubfieldCodeModel:
        return SubfieldCodeModel(q=self.q, n=self.n, k_sub=self.k_sub,
                                 basis=self.basis.tolist(), parent=self.parent.name)


def theta(code: ConstacyclicCode) -> FieldElem:
    """Generator of F_{q^2}^*, which is never in F_q"""
    return code.tower.element(code.q ** 2 + 1)


def _decomposition(code: ConstacyclicCode):
    """QUAD label -> (u, v) BASE labels with x = u + v theta"""
    quad = code.quad
    base = code.tower.tables(FieldLevel.BASE)
    th = quad.from_elem(theta(code))
    q = base.size
    u_part = np.zeros(quad.size, dtype=np.int64)
    v_part = np.zeros(quad.size, dtype=np.int64)
    base_in_quad = base.embed(np.arange(q), quad)
    for u in range(q):
        for v in range(q):
            x = quad.add[base_in_quad[u], quad.mul[base_in_quad[v], th]]
            u_part[x], v_part[x] = u, v
    return u_part, v_part


def subfield_subcode_direct(code: ConstacyclicCode) -> SubfieldCode:
    """C cap F_q^n from the 2k F_q-generators G_i, theta G_i of C"""
    quad = code.quad
    base = code.tower.tables(FieldLevel.BASE)
    G = generator_matrix(code)
    th = quad.from_elem(theta(code))
    rows = np.vstack([G, quad.mul[th, G]])
    u_part, v_part = _decomposition(code)
    U, V = u_part[rows], v_part[rows]

    # sum c_j V_j = 0 over F_q
    kernel = linalg.nullspace(V.T, base)
    if kernel.shape[0] == 0:
        basis = np.zeros((0, code.n), dtype=np.int64)
    else:
        basis, _ = linalg.rref(linalg.matmul_t(kernel, U.T, base), base)
    sub = SubfieldCode(code, basis)
    if sub.k_sub:
        products = linalg.matmul_t(sub.as_quad_rows(), generator_matrix(dual_code(code)), quad)
        if np.any(products):
            raise VerificationFailed(f"subfield basis rows are not codewords of {code.name}")
    logger.info("%s restricted to F_%d has dimension %d", code.name, code.q, sub.k_sub)
    return sub


def delsarte_cross_check(code: ConstacyclicCode) -> bool:
    """C|F_q equals the F_q-dual of Tr_{q^2/q}(C^perp)"""
    quad = code.quad
    base = code.tower.tables(FieldLevel.BASE)
    D = generator_matrix(dual_code(code))
    th = quad.from_elem(theta(code))
    rows = np.vstack([D, quad.mul[th, D]])
    traces = quad.add[rows, quad.power(rows, code.q)]
    trace_rows = quad.embed(traces, base)
    trace_basis, _ = linalg.rref(trace_rows, base)
    delsarte = linalg.nullspace(trace_basis, base) if trace_basis.shape[0] else np.eye(code.n, dtype=np.int64)

    direct = subfield_subcode_direct(code)
    if delsarte.shape[0] != direct.k_sub:
        logger.warning("Delsarte dimension %d differs from direct dimension %d", delsarte.shape[0], direct.k_sub)
        return False
    if direct.k_sub == 0:
        return True
    return not np.any(linalg.matmul_t(direct.basis, trace_basis, base))


def ovoid_distribution(q: int) -> WeightDistribution:
    n = q * q + 1
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[q * q - q] = (q * q - q) * (q * q + 1)
    counts[q * q] = (q - 1) * (q * q + 1)
    return WeightDistribution(n=n, k=4, Q=q, counts=tuple(counts))


def ovoid_check(sub: SubfieldCode, budget: Optional[int] = None) -> OvoidReport:
    if sub.k_sub != 4:
        raise DimensionMismatch(f"ovoid check needs dimension 4, got {sub.k_sub}", {"k_sub": sub.k_sub})
    q, n = sub.q, sub.n
    min_weight = q * q - q
    counts, supports = enumerate_span(sub.basis, sub.base, budget=budget, workers=1, collect_weight=min_weight)
    wd = WeightDistribution(n=n, k=sub.k_sub, Q=q, counts=tuple(counts))
    expected = ovoid_distribution(q)
    dual_distance = minimum_distance(macwilliams_dual(wd))

    # parent distance from below, Griesmer from above
    d = minimum_distance(wd)
    tight = d >= sub.parent_distance and griesmer_check(n, 4, d, q) and not griesmer_check(n, 4, d + 1, q)

    verification, blocks, design_ok = None, 0, True
    if q > 2:
        design = design_from_supports(supports, min_weight, n, q - 1)
        verification = verify_t_design(design, 3, budget)
        blocks = design.b
        design_ok = verification.holds and verification.eta == (q - 2) * (q * q - q - 1)
        if not design_ok:
            logger.warning("Minimum-weight supports of the F_%d subcode do not form the expected 3-design", q)
    return OvoidReport(q=q, n=n, distribution=wd, expected=expected, matches=wd == expected,
                       dual_distance=dual_distance, dual_distance_ok=dual_distance == 4,
                       distance=d, griesmer_tight=tight, design=verification, design_blocks=blocks,
                       design_ok=design_ok)


def lambda_in_base_field(code: ConstacyclicCode) -> bool:
    return code.tower.contains(code.lam, FieldLevel.BASE)


def t2_triviality_criterion(code: ConstacyclicCode) -> T2Report:
    """|T_2| >= n/k predicts C|F_q = 0, with k the order of q modulo r"""
    if lambda_in_base_field(code):
        raise InvalidRegime(f"lambda of {code.name} lies in F_q; the criterion does not apply")
    q, n, rn = code.q, code.n, code.rn
    k = multiplicative_order(q, code.r)
    l = 2 // k
    zeros = code.zero_exponents
    t2 = set()
    for j in range(l):
        t2.update((e * q ** (k * j)) % rn for e in zeros)
    threshold = Fraction(n, k)
    predicted = len(t2) >= threshold
    direct = subfield_subcode_direct(code).k_sub
    agrees = predicted == (direct == 0)
    if not agrees:
        logger.warning("|T_2| criterion predicts trivial=%s but the direct dimension is %d", predicted, direct)
    return T2Report(code=code.name, k=k, l=l, t2_size=len(t2), threshold=f"{threshold.numerator}/{threshold.denominator}",
                    trivial_predicted=predicted, direct_dimension=direct, agrees=agrees)


def coset_closure_prediction(code: ConstacyclicCode) -> CosetClosureReport:
    """For lambda in F_q: dim C|F_q is the size of the q-cyclotomic cosets lying inside the nonzeros of C"""
    if not lambda_in_base_field(code):
        raise InvalidRegime(f"lambda of {code.name} is not in F_q; cosets leave the root set")
    ambient = range(code.offset, code.rn, code.r)
    inside = [c for c in cyclotomic_cosets(code.q, code.rn, within=ambient)
              if set(c.members) <= code.nonzero_exponents]
    predicted = sum(len(c) for c in inside)
    direct = subfield_subcode_direct(code).k_sub
    return CosetClosureReport(code=code.name, cosets=[list(c.members) for c in inside],
                              predicted_dimension=predicted, direct_dimension=direct, agrees=predicted == direct)
