import itertools
import logging
import math
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import BudgetExceeded, VerificationFailed
from ..models.codes import WeightDistribution
from ..models.designs import AssmusMattsonReport, Design, DesignParameters, DesignReport, DesignVerification
from .constacyclic import ConstacyclicCode, generator_matrix
from .wdist import a4_dual_closed_form, enumerate_span, low_weight_dual_codewords, minimum_distance

logger = logging.getLogger(__name__)

# block t-subsets ranked per batch
RANK_BATCH = 1 << 21


def design_from_supports(supports: Dict[Tuple[int, ...], int], kappa: int, v: int,
                         scalars: Optional[int] = None) -> Design:
    """Blocks from a support -> multiplicity map; multiplicities above `scalars` mean repeated blocks"""
    blocks = sorted(s for s in supports if len(s) == kappa)
    multiplicity = max((supports[s] for s in blocks), default=0)
    if scalars is not None and multiplicity > scalars:
        logger.warning("Supports of weight %d carry up to %d codewords (> %d scalar multiples); design is not simple",
                       kappa, multiplicity, scalars)
    return Design(v=v, kappa=kappa, blocks=blocks,
                  codewords=sum(supports[s] for s in blocks), max_multiplicity=multiplicity, scalars=scalars)


def supports_of_weight(codewords: Iterable, w: int, n: int, scalars: Optional[int] = None) -> Design:
    """Distinct supports of the weight-w words.

    Items are label vectors, or (support, word) pairs as returned by the dual column search.
    """
    supports: Dict[Tuple[int, ...], int] = {}
    for item in codewords:
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], tuple):
            support = item[0]
        else:
            word = np.asarray(item)
            if word.shape[-1] != n:
                raise ValueError(f"word of length {word.shape[-1]}, expected {n}")
            support = tuple(int(i) for i in np.flatnonzero(word))
        if len(support) == w:
            supports[support] = supports.get(support, 0) + 1
    return design_from_supports(supports, w, n, scalars)


def primal_weight_design(code: ConstacyclicCode, w: Optional[int] = None, budget: Optional[int] = None,
                         workers: Optional[int] = None) -> Design:
    """Supports of the weight-w codewords from exhaustive enumeration (default w = q^2 - q)"""
    w = code.q ** 2 - code.q if w is None else w
    _, supports = enumerate_span(generator_matrix(code), code.quad, budget=budget, workers=workers,
                                 collect_weight=w)
    return design_from_supports(supports, w, code.n, code.quad.size - 1)


def dual_weight_design(code: ConstacyclicCode, w: int = 4, budget: Optional[int] = None) -> Design:
    """Supports of the weight-w codewords of the dual, from the column search on `code`"""
    found = low_weight_dual_codewords(code, w, budget=budget)
    design = supports_of_weight(found, w, code.n)
    words = design.b * (code.quad.size - 1)
    if code.is_family_code and code.q > 2 and w == 4 and words != a4_dual_closed_form(code.q):
        raise VerificationFailed(f"{design.b} dual blocks do not account for A_4 = {a4_dual_closed_form(code.q)}")
    design.codewords = words
    design.max_multiplicity = code.quad.size - 1 if design.b else 0
    design.scalars = code.quad.size - 1
    return design


# Incidence counting

def _binomial_table(v: int, t: int) -> np.ndarray:
    table = np.zeros((v + 1, t + 1), dtype=np.int64)
    for x in range(v + 1):
        for i in range(t + 1):
            table[x, i] = math.comb(x, i)
    return table


def colex_rank(subset: Iterable[int]) -> int:
    return sum(math.comb(x, i + 1) for i, x in enumerate(sorted(subset)))


def colex_unrank(rank: int, t: int) -> List[int]:
    subset = []
    for i in range(t, 0, -1):
        x = i - 1
        while math.comb(x + 1, i) <= rank:
            x += 1
        subset.append(x)
        rank -= math.comb(x, i)
    return sorted(subset)


def t_subset_counts(design: Design, t: int, budget: Optional[int] = None) -> np.ndarray:
    """Number of blocks containing each t-subset of points, indexed by colex rank"""
    budget = get_settings().budget if budget is None else budget
    total = math.comb(design.v, t)
    per_block = math.comb(design.kappa, t)
    cost = total + design.b * per_block
    if cost > budget:
        raise BudgetExceeded(f"incidence count cost {cost} exceeds budget {budget}", {"cost": cost, "budget": budget})
    counts = np.zeros(total, dtype=np.int64)
    if not design.blocks or per_block == 0:
        return counts
    binom = _binomial_table(design.v, t)
    positions = np.array(list(itertools.combinations(range(design.kappa), t)), dtype=np.int64)
    blocks = np.array(design.blocks, dtype=np.int64)
    batch = max(1, RANK_BATCH // per_block)
    for start in range(0, len(blocks), batch):
        sub = blocks[start:start + batch][:, positions]
        ranks = np.zeros(sub.shape[:2], dtype=np.int64)
        for i in range(t):
            ranks += binom[sub[:, :, i], i + 1]
        counts += np.bincount(ranks.ravel(), minlength=total)
    return counts


def verify_t_design(design: Design, t: int, budget: Optional[int] = None) -> DesignVerification:
    """Every t-subset of points lies in the same number of blocks"""
    if not 1 <= t <= design.kappa <= design.v:
        raise ValueError(f"need 1 <= t <= kappa <= v, got t={t}, kappa={design.kappa}, v={design.v}")
    counts = t_subset_counts(design, t, budget)
    different = np.flatnonzero(counts != counts[0])
    if different.size == 0:
        eta = int(counts[0])
        design.t, design.eta = t, eta
        return DesignVerification(t=t, holds=True, eta=eta, subsets_checked=len(counts))
    j = int(different[0])
    logger.warning("Not a %d-design: subsets of colex rank 0 and %d have counts %d and %d",
                   t, j, counts[0], counts[j])
    return DesignVerification(
        t=t, holds=False, eta=0, subsets_checked=len(counts),
        witness=[colex_unrank(0, t), colex_unrank(j, t)],
        witness_counts=[int(counts[0]), int(counts[j])],
    )


def design_identity_check(v: int, t: int, kappa: int, eta: int, b: int) -> bool:
    """C(v, t) eta = C(kappa, t) b"""
    return math.comb(v, t) * eta == math.comb(kappa, t) * b


def complementary_design(design: Design) -> Design:
    points = set(range(design.v))
    blocks = sorted(tuple(sorted(points.difference(block))) for block in design.blocks)
    return Design(v=design.v, kappa=design.v - design.kappa, blocks=blocks)


def steiner_check(design: Design, t: int = 3, budget: Optional[int] = None) -> bool:
    result = verify_t_design(design, t, budget)
    return result.holds and result.eta == 1


# Assmus-Mattson

def _omega(n: int, d: int, Q: int) -> int:
    """Largest w <= n with w - floor((w + Q - 2) / (Q - 1)) < d"""
    for w in range(n, -1, -1):
        if w - (w + Q - 2) // (Q - 1) < d:
            return w
    return 0


def assmus_mattson_check(primal_wd: WeightDistribution, dual_wd: WeightDistribution, t: int) -> AssmusMattsonReport:
    """1 <= t < min(d, d_dual) and at most d_dual - t nonzero weights of C lie in [1, n - t]"""
    if primal_wd.n != dual_wd.n or primal_wd.Q != dual_wd.Q:
        raise ValueError("distributions of different lengths or alphabets")
    n, Q = primal_wd.n, primal_wd.Q
    d = minimum_distance(primal_wd)
    d_dual = minimum_distance(dual_wd)
    in_range = [w for w, _ in primal_wd.nonzero() if w <= n - t]
    allowance = d_dual - t
    holds = 1 <= t < min(d, d_dual) and len(in_range) <= allowance
    omega = _omega(n, d, Q)
    omega_dual = _omega(n, d_dual, Q)
    primal_weights = [w for w, _ in primal_wd.nonzero() if d <= w <= omega] if holds else []
    dual_weights = [w for w, _ in dual_wd.nonzero() if d_dual <= w <= min(n - t, omega_dual)] if holds else []
    return AssmusMattsonReport(
        t=t, n=n, d=d, d_dual=d_dual, weights_in_range=in_range, allowance=allowance, holds=holds,
        omega=omega, omega_dual=omega_dual,
        primal_design_weights=primal_weights, dual_design_weights=dual_weights,
    )


# Closed forms for the family codes

def family_design_parameters(q: int) -> Tuple[DesignParameters, DesignParameters]:
    """3-(q^2+1, q^2-q, (q^2-q-1)(q-2)) from minimum-weight codewords and 3-(q^2+1, 4, q-2) from the dual"""
    n = q * q + 1
    primal = DesignParameters(t=3, v=n, kappa=q * q - q, eta=(q * q - q - 1) * (q - 2), b=q ** 3 + q)
    dual_blocks, rem = divmod(a4_dual_closed_form(q), q * q - 1)
    if rem:
        raise VerificationFailed(f"A_4 of the dual is not a multiple of q^2-1 at q={q}")
    dual = DesignParameters(t=3, v=n, kappa=4, eta=q - 2, b=dual_blocks)
    for params in (primal, dual):
        if not design_identity_check(params.v, params.t, params.kappa, params.eta, params.b):
            raise VerificationFailed(f"block count identity fails for {params}")
    return primal, dual


def design_report(design: Design, verification: Optional[DesignVerification] = None,
                  threshold: Optional[int] = None) -> DesignReport:
    threshold = get_settings().block_threshold if threshold is None else threshold
    omit = design.b > threshold
    identity = None
    if verification is not None and verification.holds:
        identity = design_identity_check(design.v, verification.t, design.kappa, verification.eta, design.b)
    simple = True
    if design.scalars is not None and design.max_multiplicity is not None:
        simple = design.max_multiplicity <= design.scalars
    return DesignReport(
        v=design.v, kappa=design.kappa, t=design.t, eta=design.eta, b=design.b,
        blocks=None if omit else [list(block) for block in design.blocks],
        blocks_omitted=omit, simple=simple, verification=verification, identity_holds=identity,
    )
