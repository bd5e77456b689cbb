import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from ..exceptions import LengthMismatch, LocalityUndefined, ShiftConstantEqual
from ..models.reports import EaqeccParams, IntersectionReport, LrcReport
from ..utils import linalg
from .constacyclic import ConstacyclicCode, dual_code, generator_matrix
from .wdist import code_distance

logger = logging.getLogger(__name__)


def intersection_dimension(c1: ConstacyclicCode, c2: ConstacyclicCode,
                           require_formula: bool = False) -> IntersectionReport:
    """dim(C1 cap C2) from ranks, and from the k1 + k2 case split when the shift constants differ"""
    if c1.n != c2.n or c1.tower is not c2.tower:
        raise LengthMismatch(f"{c1.name} and {c2.name} have different lengths or alphabets")
    stacked = np.vstack([generator_matrix(c1), generator_matrix(c2)])
    explicit = c1.k + c2.k - linalg.rank(stacked, c1.quad)
    lambda_equal = c1.lam == c2.lam
    if lambda_equal:
        if require_formula:
            raise ShiftConstantEqual(f"{c1.name} and {c2.name} share the shift constant",
                                     {"explicit": explicit})
        return IntersectionReport(explicit=explicit, formula=None, lambda_equal=True)
    n = c1.n
    formula = 0 if c1.k + c2.k <= n else c1.k + c2.k - n
    return IntersectionReport(explicit=explicit, formula=formula, lambda_equal=False, agrees=explicit == formula)


def eaqecc_from_pair(c1: ConstacyclicCode, c2: ConstacyclicCode, d1: Optional[int] = None,
                     d2: Optional[int] = None) -> EaqeccParams:
    """[[n, k1 + k2 - n + c, min(d1, d2); c]] with c = n - k1 - dim(C1^perp cap C2)"""
    n = c1.n
    intersection = intersection_dimension(dual_code(c1), c2)
    c = n - c1.k - intersection.explicit
    k_logical = c1.k + c2.k - n + c
    d1 = code_distance(c1) if d1 is None else d1
    d2 = code_distance(c2) if d2 is None else d2
    in_hypothesis = c1.lam * c2.lam != c1.tower.one()
    if not in_hypothesis:
        logger.warning("Pair (%s, %s) has lambda1 lambda2 = 1; parameters use the explicit intersection",
                       c1.name, c2.name)
    rate = Fraction(k_logical - c, n)
    return EaqeccParams(
        C1=c1.name, C2=c2.name, n=n, k_logical=k_logical, d=min(d1, d2), c=c, Q=c1.quad.size,
        maximal_entanglement=c == n - k_logical,
        net_rate=f"{rate.numerator}/{rate.denominator}",
        in_hypothesis=in_hypothesis, intersection=intersection,
    )


def singleton_like_bound(n: int, k: int, locality: int) -> int:
    """d <= n - k - ceil(k / r) + 2"""
    return n - k - (-(-k // locality)) + 2


def cm_bound(n: int, k: int, d: int, locality: int) -> tuple:
    """min over t of t r + k_opt(n - t(r+1), d), k_opt replaced by its Singleton value.

    t = 0 and every t >= 1 that keeps the residual length positive.
    """
    terms = {0: max(0, n - d + 1)}
    t = 1
    while n - t * (locality + 1) >= 1:
        residual = n - t * (locality + 1)
        terms[t] = t * locality + max(0, residual - d + 1)
        t += 1
    return min(terms.values()), terms


def lrc_report(code_dual: ConstacyclicCode, d: Optional[int] = None, dual_distance: Optional[int] = None) -> LrcReport:
    """Locality and optimality of a code whose dual distance exceeds 2 (typically C^perp of a family code)"""
    n, k = code_dual.n, code_dual.k
    d = code_distance(code_dual) if d is None else d
    if dual_distance is None:
        dual_distance = code_distance(code_dual.primal if code_dual.primal is not None else dual_code(code_dual))
    if dual_distance <= 2:
        raise LocalityUndefined(f"dual distance {dual_distance} <= 2", {"dual_distance": dual_distance})
    locality = dual_distance - 1
    singleton = singleton_like_bound(n, k, locality)
    cm, terms = cm_bound(n, k, d, locality)
    return LrcReport(
        code=code_dual.name, n=n, k=k, d=d, locality=locality,
        singleton_like_bound=singleton, cm_bound=cm, cm_terms={str(t): v for t, v in terms.items()},
        distance_optimal=d == singleton, dimension_optimal=k == cm,
    )
