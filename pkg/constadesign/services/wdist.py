import itertools
import logging
import math
import time
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import BudgetExceeded, UnsupportedQ, VerificationFailed, ZeroCode
from ..models.codes import LowWeightDualWord, LowWeightSearchResult, MomentCheck, WeightDistribution
from ..utils import linalg
from ..utils.parallel import run_tasks, split_range
from .constacyclic import ConstacyclicCode, generator_matrix
from .gf import LevelTables

logger = logging.getLogger(__name__)

# words x coordinates held in memory at once by one enumeration task
INNER_LIMIT = 1 << 22


# Span enumeration

def _inner_span(rows: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    n = rows.shape[1] if rows.size else 0
    words = np.zeros((1, n), dtype=np.int32)
    for row in rows:
        scaled = mul[:, row]
        words = add[scaled[:, None, :], words[None, :, :]].reshape(-1, n)
    return words


def _span_chunk(task) -> Tuple[np.ndarray, Dict[bytes, int]]:
    """Histogram of weights over messages whose outer part has index in [start, stop)"""
    G, add, mul, n_inner, start, stop, collect_weight = task
    Q = add.shape[0]
    k, n = G.shape
    n_outer = k - n_inner
    inner = _inner_span(G[n_outer:], add, mul)
    counts = np.zeros(n + 1, dtype=np.int64)
    supports: Dict[bytes, int] = {}
    for idx in range(start, stop):
        prefix = np.zeros(n, dtype=np.int32)
        rest = idx
        for j in range(n_outer - 1, -1, -1):
            digit = rest % Q
            rest //= Q
            if digit:
                prefix = add[prefix, mul[digit, G[j]]]
        words = add[prefix[None, :], inner]
        nonzero = words != 0
        weights = nonzero.sum(axis=1)
        counts += np.bincount(weights, minlength=n + 1)
        if collect_weight is not None:
            selected = nonzero[weights == collect_weight]
            if selected.size:
                packed, mult = np.unique(np.packbits(selected, axis=1), axis=0, return_counts=True)
                for row, c in zip(packed, mult):
                    key = row.tobytes()
                    supports[key] = supports.get(key, 0) + int(c)
    return counts, supports


def enumerate_span(G: np.ndarray, tables: LevelTables, budget: Optional[int] = None,
                   workers: Optional[int] = None, collect_weight: Optional[int] = None
                   ) -> Tuple[List[int], Dict[Tuple[int, ...], int]]:
    """Weight histogram of the row space of G (rows assumed independent).

    Returns (counts A_0..A_n, support -> number of codewords) where supports are
    collected only for `collect_weight`. The result does not depend on `workers`.
    """
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    workers = settings.workers if workers is None else workers
    G = np.asarray(G, dtype=np.int32)
    k, n = G.shape
    Q = tables.size
    evaluations = Q ** k * n
    if evaluations > budget:
        raise BudgetExceeded(f"{Q}^{k} messages x length {n} = {evaluations} exceeds budget {budget}",
                             {"evaluations": evaluations, "budget": budget})

    n_inner = 0
    while n_inner < k and Q ** (n_inner + 1) * n <= INNER_LIMIT:
        n_inner += 1
    n_inner = max(n_inner, min(k, 1))
    outer_total = Q ** (k - n_inner)
    parts = workers * 4 if workers > 1 else 1
    tasks = [(G, tables.add, tables.mul, n_inner, start, stop, collect_weight)
             for start, stop in split_range(outer_total, parts)]

    started = time.perf_counter()
    logger.info("Enumerating %d^%d codewords of length %d in %d task(s)", Q, k, n, len(tasks))
    results = run_tasks(_span_chunk, tasks, workers)

    counts = np.zeros(n + 1, dtype=np.int64)
    merged: Dict[bytes, int] = {}
    for chunk_counts, chunk_supports in results:
        counts += chunk_counts
        for key, c in chunk_supports.items():
            merged[key] = merged.get(key, 0) + c
    supports = {}
    for key, c in merged.items():
        bits = np.unpackbits(np.frombuffer(key, dtype=np.uint8))[:n]
        supports[tuple(int(i) for i in np.flatnonzero(bits))] = c
    logger.info("Enumeration finished in %.2fs", time.perf_counter() - started)
    return [int(c) for c in counts], dict(sorted(supports.items()))


def weight_distribution_of_matrix(G: np.ndarray, tables: LevelTables, budget: Optional[int] = None,
                                  workers: Optional[int] = None) -> WeightDistribution:
    G = np.asarray(G)
    counts, _ = enumerate_span(G, tables, budget=budget, workers=workers)
    return WeightDistribution(n=G.shape[1], k=G.shape[0], Q=tables.size, counts=tuple(counts))


def weight_distribution_exhaustive(code: ConstacyclicCode, budget: Optional[int] = None,
                                   workers: Optional[int] = None) -> WeightDistribution:
    """Exact distribution from every codeword; for family codes these are the q^8 trace codewords"""
    return weight_distribution_of_matrix(generator_matrix(code), code.quad, budget=budget, workers=workers)


def weight_distribution_analytic(q: int, family: Optional[str] = None) -> WeightDistribution:
    """Four-weight distribution shared by both families (q > 2)"""
    if q <= 2:
        raise UnsupportedQ("closed form needs q > 2; q = 2 gives an MDS code", {"q": q})
    n = q * q + 1
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[q * q - q] = q ** 5 - q
    counts[q * q - 1] = counts[q * q + 1] = (q ** 4 - 1) * (q - 1) * q ** 3 // 2
    counts[q * q] = q ** 7 - q ** 5 + q ** 4 - q ** 3 + q - 1
    return WeightDistribution(n=n, k=4, Q=q * q, counts=tuple(counts))


# Dual distributions and moments

def krawtchouk(j: int, i: int, n: int, Q: int) -> int:
    return sum((-1) ** h * (Q - 1) ** (j - h) * math.comb(i, h) * math.comb(n - i, j - h) for h in range(j + 1))


def macwilliams_dual(wd: WeightDistribution) -> WeightDistribution:
    n, Q = wd.n, wd.Q
    size = Q ** wd.k
    support = [(0, 1)] + wd.nonzero()
    counts = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(j, i, n, Q) for i, a in support)
        if total % size:
            raise VerificationFailed(f"MacWilliams transform is not integral at weight {j}")
        counts.append(total // size)
    return WeightDistribution(n=n, k=n - wd.k, Q=Q, counts=tuple(counts))


def a4_dual_closed_form(q: int) -> int:
    """Number of weight-4 words of the dual code"""
    if q <= 2:
        raise UnsupportedQ("closed form needs q > 2", {"q": q})
    numerator = q ** 2 * (q - 2) * (q ** 2 + 1) * (q ** 2 - 1) ** 2
    if numerator % 24:
        raise VerificationFailed(f"A_4 numerator not divisible by 24 at q={q}")
    return numerator // 24


def power_moments(wd: WeightDistribution, order: int = 3) -> List[int]:
    """sum over w >= 1 of w^j A_w, j = 0..order"""
    return [sum(w ** j * a for w, a in wd.nonzero()) for j in range(order + 1)]


def printed_moment_rhs(q: int) -> List[int]:
    """Right-hand sides of the four power moments as printed for the family codes.

    The cubic entry is not met by the family distribution; moment checks use the
    binomial identities instead.
    """
    return [
        q ** 8 - 1,
        q ** 6 * (q ** 4 - 1),
        q ** 8 * (q ** 4 - 1),
        q ** 16 + 2 * q ** 14 - 2 * q ** 12 - 2 * q ** 10 + q ** 4,
    ]


def moment_report(wd: WeightDistribution, dual_zero_prefix: int = 3, q: Optional[int] = None) -> MomentCheck:
    """sum_i C(n-i, nu) A_i = Q^(k-nu) C(n, nu) for nu = 0..dual_zero_prefix"""
    if dual_zero_prefix > wd.k:
        raise ValueError(f"dual_zero_prefix {dual_zero_prefix} exceeds the dimension {wd.k}")
    identities = []
    holds = True
    for nu in range(dual_zero_prefix + 1):
        lhs = sum(math.comb(wd.n - i, nu) * a for i, a in enumerate(wd.counts))
        rhs = wd.Q ** (wd.k - nu) * math.comb(wd.n, nu)
        holds = holds and lhs == rhs
        identities.append({"nu": nu, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs})
    return MomentCheck(
        holds=holds,
        identities=identities,
        power_moments=power_moments(wd),
        printed_rhs=printed_moment_rhs(q) if q is not None else None,
    )


def pless_moment_check(wd: WeightDistribution, dual_zero_prefix: int = 3) -> bool:
    return moment_report(wd, dual_zero_prefix).holds


# Low-weight dual codewords

def low_weight_dual_codewords(code: ConstacyclicCode, wmax: int, budget: Optional[int] = None
                              ) -> List[Tuple[Tuple[int, ...], np.ndarray]]:
    """Every dual codeword of weight <= wmax, one per support class, scaled so the first nonzero is 1.

    Each w-subset S of coordinates is tested by solving G[:, S] x = 0 over F_{q^2};
    the full-support solutions are exactly the dual codewords supported on S.
    """
    if wmax > 5:
        raise BudgetExceeded(f"wmax={wmax} is above 5", {"wmax": wmax})
    budget = get_settings().budget if budget is None else budget
    G = generator_matrix(code)
    quad = code.quad
    k, n = G.shape
    cost = sum(math.comb(n, w) * k * w for w in range(1, wmax + 1))
    if cost > budget:
        raise BudgetExceeded(f"column search cost {cost} exceeds budget {budget}", {"cost": cost, "budget": budget})

    found: List[Tuple[Tuple[int, ...], np.ndarray]] = []
    for w in range(1, wmax + 1):
        for subset in itertools.combinations(range(n), w):
            basis = linalg.nullspace(G[:, subset], quad)
            if basis.shape[0] == 0:
                continue
            candidates = basis if basis.shape[0] == 1 else linalg.span_vectors(basis, quad)
            for vec in candidates:
                if np.any(vec == 0):
                    continue
                vec = quad.mul[quad.inv[vec[0]], vec]
                word = np.zeros(n, dtype=np.int64)
                word[list(subset)] = vec
                found.append((subset, word))
        logger.debug("Column search: weight %d done, %d words so far", w, len(found))
    found = _dedupe(found)

    if code.is_family_code and code.q > 2:
        expected = macwilliams_dual(weight_distribution_analytic(code.q))
        observed = dual_weight_counts(found, quad.size, wmax)
        for w in range(1, wmax + 1):
            if observed[w] != expected.count(w):
                raise VerificationFailed(
                    f"column search found {observed[w]} dual words of weight {w}, MacWilliams gives {expected.count(w)}")
    return found


def _dedupe(found):
    seen = set()
    out = []
    for support, word in found:
        key = word.tobytes()
        if key not in seen:
            seen.add(key)
            out.append((support, word))
    return out


def dual_weight_counts(found: Sequence[Tuple[Tuple[int, ...], np.ndarray]], Q: int, wmax: int) -> List[int]:
    """Codewords (all nonzero scalar multiples) per weight 0..wmax"""
    counts = [0] * (wmax + 1)
    counts[0] = 1
    for support, _ in found:
        counts[len(support)] += Q - 1
    return counts


def low_weight_summary(code: ConstacyclicCode, found, wmax: int, include_words: bool = True) -> LowWeightSearchResult:
    quad = code.quad
    counts = dual_weight_counts(found, quad.size, wmax)
    supports: Dict[int, set] = {}
    for support, _ in found:
        supports.setdefault(len(support), set()).add(support)
    words = []
    if include_words:
        for support, word in found:
            logs = quad.to_logs(word)
            words.append(LowWeightDualWord(support=list(support),
                                           codeword=[None if x < 0 else int(x) for x in logs]))
    return LowWeightSearchResult(
        n=code.n,
        wmax=wmax,
        counts={str(w): counts[w] for w in range(1, wmax + 1)},
        supports={str(w): len(supports.get(w, ())) for w in range(1, wmax + 1)},
        words=words,
    )


# Distances and bounds

def minimum_distance(wd: WeightDistribution) -> int:
    for w, _ in wd.nonzero():
        return w
    raise ZeroCode("the code has no nonzero codeword")


def griesmer_check(n: int, k: int, d: int, Q: int) -> bool:
    """n >= sum_{i<k} ceil(d / Q^i)"""
    return n >= sum(-(-d // Q ** i) for i in range(k))


def distribution_for(code: ConstacyclicCode, budget: Optional[int] = None,
                     workers: Optional[int] = None) -> WeightDistribution:
    """Closed form for family codes with q > 2, MacWilliams of the primal for their duals, else exhaustive"""
    if code.is_family_code and code.q > 2:
        return weight_distribution_analytic(code.q, code.family)
    if code.is_dual:
        return macwilliams_dual(distribution_for(code.primal, budget, workers))
    return weight_distribution_exhaustive(code, budget=budget, workers=workers)


def code_distance(code: ConstacyclicCode, budget: Optional[int] = None) -> int:
    return minimum_distance(distribution_for(code, budget))
