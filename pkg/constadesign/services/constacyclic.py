import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence

import numpy as np

from ..exceptions import InvalidR, InvalidRegime, LengthMismatch, RankDeficient, TowerMismatch, VerificationFailed
from ..models.codes import CodeDescriptor
from ..models.field import FieldLevel
from ..utils import linalg
from ..utils.numbers import FAMILY_A, FAMILY_B, check_r, family_exponent
from .gf import ZERO_LOG, FieldElem, FieldTower, delta_lambda
from .polyring import Poly, minimal_polynomial, xn_minus

logger = logging.getLogger(__name__)

CUSTOM = "custom"
ORTHOGONALITY_CHECK_MAX_LENGTH = 128


class ConstacyclicCode:
    """A constacyclic code of length n = q^2+1 over F_{q^2}, described by its nonzeros.

    The ambient roots are delta^e with e = offset (mod r), 0 <= e < rn, where
    offset = 1 for x^n - lambda and offset = -1 for x^n - lambda^{-1}.
    """

    def __init__(self, tower: FieldTower, r: int, nonzeros: Iterable[int], family: str,
                 name: str, offset: int = 1, primal: Optional["ConstacyclicCode"] = None):
        self.tower = tower
        self.q = tower.q
        self.n = self.q ** 2 + 1
        self.r = r
        self.rn = r * self.n
        self.offset = offset % r if r > 1 else 0
        self.delta, self.base_lambda = delta_lambda(tower, r)
        self.lam = self.delta ** (offset * self.n)
        self.family = family
        self.name = name
        self.primal = primal
        self.nonzero_exponents: FrozenSet[int] = frozenset(e % self.rn for e in nonzeros)
        self._validate_nonzeros()

        self.h = Poly.from_roots(tower, [self.delta ** e for e in sorted(self.nonzero_exponents)], FieldLevel.QUAD)
        self.g, rem = divmod(xn_minus(tower, self.n, self.lam), self.h)
        if not rem.is_zero:
            raise VerificationFailed(f"{name}: h does not divide x^n - lambda")
        if self.g * self.h != xn_minus(tower, self.n, self.lam):
            raise VerificationFailed(f"{name}: g*h != x^n - lambda")
        self.k = self.h.degree
        self._generator: Optional[np.ndarray] = None

    def _validate_nonzeros(self) -> None:
        q2 = self.q ** 2
        for e in self.nonzero_exponents:
            if (e - self.offset) % self.r:
                raise InvalidR(f"exponent {e} is not a root of x^n - lambda for r={self.r}", {"exponent": e})
            if (e * q2) % self.rn not in self.nonzero_exponents:
                raise InvalidR(f"nonzeros not closed under q^2-conjugation at {e}", {"exponent": e})

    @property
    def is_dual(self) -> bool:
        return self.primal is not None

    @property
    def zero_exponents(self) -> FrozenSet[int]:
        ambient = range(self.offset, self.rn, self.r)
        return frozenset(e for e in ambient if e not in self.nonzero_exponents)

    @property
    def s(self) -> Optional[int]:
        if self.family in (FAMILY_A, FAMILY_B):
            return family_exponent(self.q, self.family)
        return None

    @property
    def is_family_code(self) -> bool:
        return self.family in (FAMILY_A, FAMILY_B) and not self.is_dual

    @property
    def quad(self):
        return self.tower.tables(FieldLevel.QUAD)

    def __repr__(self) -> str:
        return f"{self.name}[n={self.n}, k={self.k}, r={self.r}]"


def build_code(tower: FieldTower, r: int, family: str) -> ConstacyclicCode:
    """The family code C(1, q^2+q+1) (family A) or C(1, q^2-q+1) (family B)"""
    q = tower.q
    check_r(q, r, family)
    s = family_exponent(q, family)
    q2 = q * q
    code = ConstacyclicCode(tower, r, {1, q2, s, s * q2}, family, f"C(1,{s})")
    if code.k != 4:
        raise VerificationFailed(f"{code.name} has dimension {code.k}, expected 4")

    # h = g_1 * g_s
    product = minimal_polynomial(code.delta, FieldLevel.QUAD) * minimal_polynomial(code.delta ** s, FieldLevel.QUAD)
    if product != code.h:
        raise VerificationFailed(f"{code.name}: h is not g_1 * g_{s}")
    logger.info("Built %s over F_%d with r=%d", code.name, q2, r)
    return code


def build_custom_code(tower: FieldTower, r: int, nonzeros: Iterable[int], offset: int = 1,
                      name: Optional[str] = None) -> ConstacyclicCode:
    q2 = tower.q ** 2
    if (q2 - 1) % r:
        raise InvalidR(f"r={r} does not divide q^2-1={q2 - 1}", {"r": r, "condition": "divisibility of q^2-1"})
    nonzeros = sorted(set(nonzeros))
    return ConstacyclicCode(tower, r, nonzeros, CUSTOM, name or f"C{nonzeros}", offset=offset)


def dual_code(code: ConstacyclicCode) -> ConstacyclicCode:
    """Dual code, generated by h_0^{-1} x^k h(1/x)"""
    if code.is_dual:
        name = code.primal.name
        primal = None
    else:
        name = f"{code.name}^perp"
        primal = code
    zeros = {(-e) % code.rn for e in code.nonzero_exponents}
    offset = -code.offset
    ambient = range(offset % code.r if code.r > 1 else 0, code.rn, code.r)
    nonzeros = [e for e in ambient if e not in zeros]
    dual = ConstacyclicCode(code.tower, code.r, nonzeros, code.family, name, offset=offset, primal=primal)

    h_hat = code.h.reciprocal().scale(code.h.coeff(0).inverse())
    if dual.g != h_hat:
        raise VerificationFailed(f"{name}: generator differs from the reciprocal check polynomial")
    if dual.k != code.n - code.k or dual.lam != code.lam.inverse():
        raise VerificationFailed(f"{name}: wrong dimension or shift constant")
    if code.n <= ORTHOGONALITY_CHECK_MAX_LENGTH and not is_orthogonal(code, dual):
        raise VerificationFailed(f"{name} is not orthogonal to {code.name}")
    return dual


def is_orthogonal(c1: ConstacyclicCode, c2: ConstacyclicCode) -> bool:
    products = linalg.matmul_t(generator_matrix(c1), generator_matrix(c2), c1.quad)
    return not np.any(products)


def trace_codeword_logs(code: ConstacyclicCode, a: Optional[int], b: Optional[int]) -> np.ndarray:
    """Coordinates Tr(a delta^{-i}) + Tr(b delta^{-s i}) as beta-logs (ZERO_LOG for zero)"""
    if not code.is_family_code:
        raise InvalidRegime(f"{code.name} has no two-term trace representation")
    tower = code.tower
    q2 = code.q ** 2
    dlog = code.delta.log
    i = np.arange(code.n, dtype=np.int64)

    def part(la: Optional[int], e: int) -> np.ndarray:
        if la is None:
            return np.full(code.n, ZERO_LOG, dtype=np.int64)
        logs = (la - e * i * dlog) % tower.order
        return tower.add_logs(logs, (logs * q2) % tower.order)

    return tower.add_logs(part(a, 1), part(b, code.s))


def trace_codeword(code: ConstacyclicCode, a: FieldElem, b: FieldElem) -> List[FieldElem]:
    if a.tower is not code.tower or b.tower is not code.tower:
        raise TowerMismatch("message from another tower")
    logs = trace_codeword_logs(code, a.log, b.log)
    return [code.tower.element(None if x < 0 else int(x)) for x in logs]


def generator_matrix(code: ConstacyclicCode) -> np.ndarray:
    """k x n matrix of QUAD labels.

    Family codes use the trace codewords at (1,0), (beta,0), (0,1), (0,beta);
    every other code uses the shifts x^i g(x), i < k.
    """
    if code._generator is not None:
        return code._generator
    quad = code.quad
    if code.is_family_code:
        rows = [trace_codeword_logs(code, a, b) for a, b in ((0, None), (1, None), (None, 0), (None, 1))]
        G = np.stack([quad.from_logs(row) for row in rows])
    else:
        g_labels = quad.from_logs([ZERO_LOG if c.is_zero else c.log for c in code.g.coeffs])
        G = np.zeros((code.k, code.n), dtype=np.int64)
        for i in range(code.k):
            G[i, i:i + len(g_labels)] = g_labels
    if linalg.rank(G, quad) != code.k:
        raise RankDeficient(f"{code.name}: generator matrix has rank below {code.k}")
    code._generator = G
    return G


def _word_poly(code: ConstacyclicCode, word: Sequence[FieldElem]) -> Poly:
    if len(word) != code.n:
        raise LengthMismatch(f"word of length {len(word)}, code length {code.n}", {"length": len(word)})
    return Poly(code.tower, word, FieldLevel.QUAD)


def is_codeword(code: ConstacyclicCode, word: Sequence[FieldElem]) -> bool:
    """g(x) divides c(x)"""
    return (_word_poly(code, word) % code.g).is_zero


def constacyclic_shift(code: ConstacyclicCode, word: Sequence[FieldElem]) -> List[FieldElem]:
    """(lambda c_{n-1}, c_0, ..., c_{n-2})"""
    if len(word) != code.n:
        raise LengthMismatch(f"word of length {len(word)}, code length {code.n}", {"length": len(word)})
    return [code.lam * word[-1]] + list(word[:-1])


def labels_to_word(code: ConstacyclicCode, labels: Sequence[int]) -> List[FieldElem]:
    return [code.quad.to_elem(int(x)) for x in labels]


def same_code(c1: ConstacyclicCode, c2: ConstacyclicCode) -> bool:
    """Equal codeword sets: same shift constant and the same monic generator"""
    if c1.tower is not c2.tower or c1.n != c2.n:
        return False
    return c1.lam == c2.lam and c1.g.monic() == c2.g.monic()


def descriptor(code: ConstacyclicCode) -> CodeDescriptor:
    tower = code.tower
    return CodeDescriptor(
        name=code.name,
        tower=tower.descriptor(),
        p=tower.p,
        m=tower.m,
        r=code.r,
        family=code.family,
        lambda_log=code.lam.log,
        modulus=list(tower.modulus),
        n=code.n,
        k=code.k,
        nonzero_exponents=sorted(code.nonzero_exponents),
        g=code.g.log_coeffs(),
        h=code.h.log_coeffs(),
        is_dual=code.is_dual,
    )
