"""Exhaustive root counts for x^(p^k+1) + a x + b over F_q and for
b x^(p^k+1) + a x^(p^k) + a^q x + b^q on the unit circle U_{q+1}, plus the
fiber structure of x -> x^(q+-1) on U_{r(q^2+1)}.
"""
import logging
import math
from typing import Dict, Optional, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import BudgetExceeded, NotOdd
from ..models.field import FieldLevel
from ..models.reports import ConjectureReport, PreimageReport, RootCountReport
from ..utils.numbers import FAMILY_A, FAMILY_B, check_r
from .gf import FieldTower, LevelTables, build_tower, delta_lambda, unit_circle

logger = logging.getLogger(__name__)


def admissible_counts(p: int, k: int, m: int) -> list:
    return sorted({0, 1, 2, p ** math.gcd(k, m) + 1})


class _Histogram:
    """Root count -> pairs, with the colex-smallest (log a, log b) witness per count"""

    def __init__(self, tables: LevelTables):
        self.tables = tables
        self.counts: Dict[int, int] = {}
        self.best: Dict[int, Tuple[int, int]] = {}

    def add(self, a_label: int, b_labels: np.ndarray, roots: np.ndarray) -> None:
        values, first, freq = np.unique(roots, return_index=True, return_counts=True)
        for value, idx, c in zip(values.tolist(), first.tolist(), freq.tolist()):
            self.counts[value] = self.counts.get(value, 0) + c
            # b_labels is ascending, so the first hit has the smallest b
            key = (int(b_labels[idx]), a_label)
            if value not in self.best or key < self.best[value]:
                self.best[value] = key

    def witnesses(self) -> Dict[str, list]:
        out = {}
        for value in sorted(self.best):
            b_label, a_label = self.best[value]
            log_a, log_b = self.tables.to_logs([a_label, b_label]).tolist()
            out[str(value)] = [int(log_a), int(log_b)]
        return out

    def histogram(self) -> Dict[str, int]:
        return {str(v): self.counts[v] for v in sorted(self.counts)}


def _check_budget(cost: int, budget: Optional[int]) -> None:
    budget = get_settings().budget if budget is None else budget
    if cost > budget:
        raise BudgetExceeded(f"{cost} evaluations exceed budget {budget}", {"cost": cost, "budget": budget})


def bluher_root_histogram(tower: FieldTower, k: int, budget: Optional[int] = None) -> RootCountReport:
    """Rational roots of x^(p^k+1) + a x + b for every (a, b) in (F_q^*)^2"""
    base = tower.tables(FieldLevel.BASE)
    q = base.size
    _check_budget(q * q, budget)
    labels = np.arange(q, dtype=np.int64)
    x_pow = base.power(labels, tower.p ** k + 1)
    b_labels = labels[1:]
    hist = _Histogram(base)
    for a in range(1, q):
        values = base.add[x_pow, base.mul[a, labels]]
        per_value = np.bincount(values, minlength=q)
        hist.add(a, b_labels, per_value[base.neg[b_labels]])

    admissible = admissible_counts(tower.p, k, tower.m)
    histogram = hist.histogram()
    holds = all(int(c) in admissible for c in histogram)
    if not holds:
        logger.warning("Root counts %s leave the admissible set %s", list(histogram), admissible)
    return RootCountReport(
        p=tower.p, m=tower.m, k=k, domain="(F_q^*)^2", pairs=(q - 1) ** 2, admissible=admissible,
        histogram=histogram, witnesses=hist.witnesses(), holds=holds,
    )


def _unit_circle_labels(tower: FieldTower, quad: LevelTables) -> np.ndarray:
    return quad.from_logs([x.log for x in unit_circle(tower, tower.q + 1)])


def unit_circle_root_histogram(tower: FieldTower, k: int, budget: Optional[int] = None) -> RootCountReport:
    """Roots in U_{q+1} of b x^(p^k+1) + a x^(p^k) + a^q x + b^q for every (a, b) != (0, 0)"""
    quad = tower.tables(FieldLevel.QUAD)
    q, Q = tower.q, quad.size
    _check_budget(Q * Q * (q + 1), budget)
    units = _unit_circle_labels(tower, quad)
    pk = tower.p ** k
    u_high = quad.power(units, pk + 1)
    u_mid = quad.power(units, pk)
    labels = np.arange(Q, dtype=np.int64)
    b_terms = quad.mul[labels[:, None], u_high[None, :]]
    b_conj = quad.power(labels, q)
    left = quad.add[b_terms, b_conj[:, None]]
    hist = _Histogram(quad)
    for a in range(Q):
        right = quad.add[quad.mul[a, u_mid], quad.mul[quad.pow(a, q), units]]
        roots = np.count_nonzero(quad.add[left, right[None, :]] == 0, axis=1)
        if a == 0:
            hist.add(a, labels[1:], roots[1:])
        else:
            hist.add(a, labels, roots)

    admissible = admissible_counts(tower.p, k, tower.m)
    histogram = hist.histogram()
    holds = all(int(c) in admissible for c in histogram)
    if not holds:
        logger.warning("Unit-circle root counts %s leave the admissible set %s", list(histogram), admissible)
    return RootCountReport(
        p=tower.p, m=tower.m, k=k, domain="F_{q^2}^2 minus (0,0)", pairs=Q * Q - 1, admissible=admissible,
        histogram=histogram, witnesses=hist.witnesses(), holds=holds,
    )


def conjecture_check(m: int, budget: Optional[int] = None) -> ConjectureReport:
    """p = 3, k = 2: at most 4 roots in U_{q+1}, attained by a = w^((q+1)/2), b = 0"""
    if m % 2 == 0:
        raise NotOdd(f"m must be odd, got {m}", {"m": m})
    tower = build_tower(3, m)
    q = tower.q
    report = unit_circle_root_histogram(tower, 2, budget)
    max_count = max(int(c) for c in report.histogram)

    w = tower.element(q * q + 1)
    a = w ** ((q + 1) // 2)
    witness_count = sum(1 for u in unit_circle(tower, q + 1) if (a * u ** 9 + a ** q * u).is_zero)
    holds = max_count == 4 and witness_count == 4
    return ConjectureReport(p=3, m=m, k=2, max_count=max_count, witness_log_a=a.log,
                            witness_count=witness_count, histogram=report.histogram, holds=holds)


def preimage_structure_check(tower: FieldTower, r: int, exponent: int) -> PreimageReport:
    """Fibers of x -> x^exponent on U_{r(q^2+1)} and their meeting with the sets lambda^j T.

    Works on exponents of delta, which has order exactly r(q^2+1).
    """
    q = tower.q
    if exponent == q + 1:
        check_r(q, r, FAMILY_A)
    elif exponent == q - 1:
        check_r(q, r, FAMILY_B)
    else:
        raise ValueError(f"exponent must be q+1 or q-1, got {exponent}")
    delta_lambda(tower, r)
    n = q * q + 1
    rn = r * n
    j = np.arange(rn, dtype=np.int64)

    image = (j * exponent) % rn
    in_target = bool(np.all(image % r == 0))
    y = image // r
    fiber_sizes = np.bincount(y, minlength=n)
    shifted_same = bool(np.all(((j + n) * exponent) % rn == image))
    fibers_ok = in_target and bool(np.all(fiber_sizes == r)) and shifted_same

    # lambda^j T = {delta^(j n - i) : 0 <= i <= q^2}
    owner = np.full(rn, -1, dtype=np.int64)
    partition_ok = True
    i = np.arange(n, dtype=np.int64)
    for t in range(r):
        idx = (t * n - i) % rn
        if np.any(owner[idx] != -1):
            partition_ok = False
        owner[idx] = t
    partition_ok = partition_ok and bool(np.all(owner >= 0))

    meets_once_ok = False
    if fibers_ok and partition_ok:
        meets = np.zeros((n, r), dtype=np.int64)
        np.add.at(meets, (y, owner), 1)
        meets_once_ok = bool(np.all(meets == 1))

    holds = fibers_ok and partition_ok and meets_once_ok
    if not holds:
        logger.warning("Preimage structure fails for q=%d r=%d exponent=%d", q, r, exponent)
    return PreimageReport(q=q, r=r, exponent=exponent, fibers_ok=fibers_ok, partition_ok=partition_ok,
                          meets_once_ok=meets_once_ok, holds=holds)
