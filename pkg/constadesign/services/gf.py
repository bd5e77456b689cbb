"""Finite-field tower F_p < F_q < F_{q^2} < F_{q^4} in discrete-log (Zech) form.

Every element of the tower is either ZERO or beta^i with 0 <= i < q^4 - 1, where
beta is the residue class of X modulo the lexicographically smallest primitive
polynomial of degree 4m over F_p. Addition goes through the Zech table
Z(i) = log(1 + beta^i).
"""
import itertools
import logging
import math
import operator
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import galois
import numpy as np

from ..config import get_settings
from ..exceptions import (
    CapExceeded,
    DivisionByZero,
    InvalidLevels,
    NotADivisor,
    TowerMismatch,
    VerificationFailed,
)
from ..models.field import FieldLevel, TowerDescriptor
from ..utils.numbers import require_prime

logger = logging.getLogger(__name__)

ZERO_LOG = -1  # zero marker inside bulk log arrays only; FieldElem uses None
MAX_TABLE_SIZE = 4096


# Primitive polynomial search

def smallest_primitive_polynomial(p: int, degree: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial, coefficients low to high.

    Candidates are compared coefficient by coefficient starting at degree 0.
    """
    prime_field = galois.GF(p)
    for f_low in itertools.product(range(p), repeat=degree):
        if f_low[0] == 0:
            continue
        candidate = galois.Poly([1, *reversed(f_low)], field=prime_field)
        if candidate.is_primitive():
            return tuple(f_low) + (1,)
    raise VerificationFailed(f"no primitive polynomial of degree {degree} over F_{p}")


class FieldElem:
    """Element of a FieldTower: ZERO (log is None) or beta^log"""

    __slots__ = ("tower", "log")

    def __init__(self, tower: "FieldTower", log: Optional[int]):
        self.tower = tower
        self.log = None if log is None else log % tower.order

    # Internal helpers

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")
        if other.tower is not self.tower:
            raise TowerMismatch("elements belong to different towers")

    @property
    def is_zero(self) -> bool:
        return self.log is None

    # Arithmetic

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        if self.log is None:
            return other
        if other.log is None:
            return self
        tower = self.tower
        z = int(tower.zech[(other.log - self.log) % tower.order])
        if z == ZERO_LOG:
            return tower.zero()
        return FieldElem(tower, self.log + z)

    def __neg__(self) -> "FieldElem":
        if self.log is None:
            return self
        return FieldElem(self.tower, self.log + self.tower.neg_one_log)

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        if self.log is None or other.log is None:
            return self.tower.zero()
        return FieldElem(self.tower, self.log + other.log)

    def inverse(self) -> "FieldElem":
        if self.log is None:
            raise DivisionByZero("zero has no inverse")
        return FieldElem(self.tower, -self.log)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElem":
        if self.log is None:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return self.tower.one() if e == 0 else self
        return FieldElem(self.tower, self.log * e)

    def frobenius(self, power: int = 1) -> "FieldElem":
        """x -> x^(p^power)"""
        return self ** (self.tower.p ** power)

    def order(self) -> int:
        """Multiplicative order"""
        if self.log is None:
            raise DivisionByZero("zero has no multiplicative order")
        return self.tower.order // math.gcd(self.log, self.tower.order)

    # Comparison and display

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.tower is other.tower and self.log == other.log

    def __hash__(self) -> int:
        return hash((id(self.tower), self.log))

    def __repr__(self) -> str:
        return "0" if self.log is None else f"b^{self.log}"


class LevelTables:
    """Addition and multiplication tables of one tower level on compact labels.

    Label 0 is zero; label 1+i is w^i where w = beta^step generates the level.
    """

    def __init__(self, tower: "FieldTower", level: FieldLevel):
        size = tower.level_size(level)
        if size > MAX_TABLE_SIZE:
            raise InvalidLevels(f"level {level.value} of size {size} is too large for tables")
        self.tower = tower
        self.level = level
        self.size = size
        self.step = tower.order // (size - 1)
        unit = size - 1
        idx = np.arange(unit, dtype=np.int64)

        # Multiplication
        mul = np.zeros((size, size), dtype=np.int32)
        mul[1:, 1:] = 1 + (idx[:, None] + idx[None, :]) % unit
        self.mul = mul

        # Addition via the tower's Zech table
        diff = (idx[None, :] - idx[:, None]) % unit
        z = tower.zech[diff * self.step]
        if np.any((z >= 0) & (z % self.step != 0)):
            raise VerificationFailed(f"level {level.value} is not closed under addition")
        add = np.zeros((size, size), dtype=np.int32)
        add[0, :] = np.arange(size)
        add[:, 0] = np.arange(size)
        add[1:, 1:] = np.where(z < 0, 0, 1 + (idx[:, None] + z // self.step) % unit)
        self.add = add

        half = (tower.neg_one_log // self.step) if tower.p != 2 else 0
        self.neg = np.concatenate(([0], 1 + (idx + half) % unit)).astype(np.int32)
        self.inv = np.concatenate(([0], 1 + (-idx) % unit)).astype(np.int32)

        self._field = None
        self._to_int: Optional[np.ndarray] = None
        self._from_int: Optional[np.ndarray] = None

    # galois bridge: label 1+i <-> the integer of x^i in GF(p^d) modulo the minimal polynomial of w

    def _minimal_polynomial(self) -> galois.Poly:
        """prod (X - w^(p^j)) over j < d, coefficients read back as integers mod p"""
        tower = self.tower
        w = FieldElem(tower, self.step)
        coeffs = [tower.one()]
        for j in range(tower.level_degree(self.level)):
            root = w.frobenius(j)
            coeffs = [a - root * b for a, b in zip([tower.zero()] + coeffs, coeffs + [tower.zero()])]
        ints = [0 if c.is_zero else int(tower.exp[c.log]) for c in coeffs]
        if any(v >= tower.p for v in ints):
            raise VerificationFailed(f"minimal polynomial of the {self.level.value} generator left F_p")
        return galois.Poly(ints[::-1], field=galois.GF(tower.p))

    @property
    def field(self):
        """galois.GF for this level, with w as its primitive element"""
        if self._field is None:
            p, d = self.tower.p, self.tower.level_degree(self.level)
            if d == 1:
                field = galois.GF(p)
                w = field(int(self.tower.exp[self.step % self.tower.order]))
            else:
                field = galois.GF(p ** d, irreducible_poly=self._minimal_polynomial())
                w = field(p)
            powers = itertools.accumulate(itertools.chain([field(1)], itertools.repeat(w, self.size - 2)),
                                          operator.mul)
            to_int = np.array([0] + [int(x) for x in powers], dtype=np.int64)
            from_int = np.zeros(self.size, dtype=np.int64)
            from_int[to_int] = np.arange(self.size)
            if len(set(to_int.tolist())) != self.size:
                raise VerificationFailed(f"{self.level.value} generator is not primitive in galois")
            self._field, self._to_int, self._from_int = field, to_int, from_int
        return self._field

    def to_field(self, labels):
        """Label array -> galois FieldArray"""
        field = self.field
        return field(self._to_int[np.asarray(labels, dtype=np.int64)])

    def from_field(self, values) -> np.ndarray:
        """galois FieldArray -> label array"""
        if self._from_int is None:
            self.field
        return self._from_int[np.asarray(values.view(np.ndarray), dtype=np.int64)]

    def pow(self, label: int, e: int) -> int:
        if label == 0:
            return 1 if e == 0 else 0
        return 1 + ((label - 1) * e) % (self.size - 1)

    def power(self, labels, e: int) -> np.ndarray:
        """Elementwise labels ** e for e >= 0"""
        labels = np.asarray(labels, dtype=np.int64)
        if e == 0:
            return np.ones_like(labels)
        return np.where(labels == 0, 0, 1 + ((labels - 1) * e) % (self.size - 1))

    def to_elem(self, label: int) -> FieldElem:
        if label == 0:
            return self.tower.zero()
        return FieldElem(self.tower, (int(label) - 1) * self.step)

    def from_elem(self, x: FieldElem) -> int:
        if x.log is None:
            return 0
        if x.log % self.step:
            raise InvalidLevels(f"{x!r} is not in {self.level.value}")
        return 1 + x.log // self.step

    def from_logs(self, logs: np.ndarray) -> np.ndarray:
        """Bulk conversion of tower logs (ZERO_LOG for zero) to labels"""
        logs = np.asarray(logs, dtype=np.int64)
        if np.any((logs >= 0) & (logs % self.step != 0)):
            raise InvalidLevels(f"values outside {self.level.value}")
        return np.where(logs < 0, 0, 1 + logs // self.step).astype(np.int32)

    def to_logs(self, labels: np.ndarray) -> np.ndarray:
        labels = np.asarray(labels, dtype=np.int64)
        return np.where(labels == 0, ZERO_LOG, (labels - 1) * self.step)

    def embed(self, labels: np.ndarray, target: "LevelTables") -> np.ndarray:
        """Map labels of this (smaller) level into the labels of `target`"""
        return target.from_logs(self.to_logs(labels))


class FieldTower:
    """The chain F_p < F_q < F_{q^2} < F_{q^4}, immutable after construction"""

    def __init__(self, p: int, m: int, modulus: Tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.degree = 4 * m
        self.size = self.q ** 4
        self.order = self.size - 1
        self.modulus = tuple(modulus)
        self.neg_one_log = 0 if p == 2 else self.order // 2
        self.exp, self.log_table = self._build_exp_log()
        self.zech = self._build_zech()
        self._tables: Dict[FieldLevel, LevelTables] = {}

    def _build_exp_log(self) -> Tuple[np.ndarray, np.ndarray]:
        p, d, size = self.p, self.degree, self.size
        f_low = np.array(self.modulus[:-1], dtype=np.int64)
        v = np.arange(size, dtype=np.int64)
        top = (v // p ** (d - 1)) % p

        # Multiplication by X on the base-p encoding (digit j = coefficient of X^j)
        step = np.zeros(size, dtype=np.int64)
        for j in range(d):
            digit = (v // p ** (j - 1)) % p if j > 0 else np.zeros(size, dtype=np.int64)
            step += ((digit - top * f_low[j]) % p) * p ** j

        exp = np.empty(self.order, dtype=np.int64)
        successor = step.tolist()
        value = 1
        for i in range(self.order):
            exp[i] = value
            value = successor[value]
        if value != 1:
            raise VerificationFailed("modulus is not primitive: beta has the wrong order")

        log = np.full(size, ZERO_LOG, dtype=np.int64)
        log[exp] = np.arange(self.order, dtype=np.int64)
        if np.count_nonzero(log >= 0) != self.order:
            raise VerificationFailed("modulus is not primitive: powers of beta repeat")
        return exp, log

    def _build_zech(self) -> np.ndarray:
        c0 = self.exp % self.p
        plus_one = self.exp - c0 + (c0 + 1) % self.p
        return self.log_table[plus_one]

    # Elements

    def zero(self) -> FieldElem:
        return FieldElem(self, None)

    def one(self) -> FieldElem:
        return FieldElem(self, 0)

    def beta(self) -> FieldElem:
        return FieldElem(self, 1)

    def element(self, log: Optional[int]) -> FieldElem:
        return FieldElem(self, log)

    def from_int(self, k: int) -> FieldElem:
        """Image of the integer k in the prime field"""
        residue = k % self.p
        return self.zero() if residue == 0 else FieldElem(self, int(self.log_table[residue]))

    def elements(self) -> List[FieldElem]:
        return [self.zero()] + [FieldElem(self, i) for i in range(self.order)]

    # Levels

    def level_degree(self, level: FieldLevel) -> int:
        return {FieldLevel.PRIME: 1, FieldLevel.BASE: self.m,
                FieldLevel.QUAD: 2 * self.m, FieldLevel.TOP: 4 * self.m}[level]

    def level_size(self, level: FieldLevel) -> int:
        return self.p ** self.level_degree(level)

    def contains(self, x: FieldElem, level: FieldLevel) -> bool:
        """x lies in the level iff x^(level size) = x"""
        if x.tower is not self:
            raise TowerMismatch("element of another tower")
        return x ** self.level_size(level) == x

    def level_elements(self, level: FieldLevel) -> List[FieldElem]:
        step = self.order // (self.level_size(level) - 1)
        return [self.zero()] + [FieldElem(self, i * step) for i in range(self.level_size(level) - 1)]

    def tables(self, level: FieldLevel) -> LevelTables:
        if level not in self._tables:
            self._tables[level] = LevelTables(self, level)
        return self._tables[level]

    # Bulk log arithmetic (ZERO_LOG marks zero)

    def add_logs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        z = self.zech[(b - a) % self.order]
        summed = np.where(z < 0, ZERO_LOG, (a + z) % self.order)
        return np.where(a < 0, b, np.where(b < 0, a, summed))

    def descriptor(self) -> TowerDescriptor:
        return TowerDescriptor(p=self.p, m=self.m, q=self.q, size=self.size, modulus=list(self.modulus))

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, size={self.size})"


@lru_cache(maxsize=None)
def _cached_tower(p: int, m: int) -> FieldTower:
    modulus = smallest_primitive_polynomial(p, 4 * m)
    tower = FieldTower(p, m, modulus)
    logger.info("Built tower p=%d m=%d size=%d modulus=%s", p, m, tower.size, list(modulus))
    return tower


def build_tower(p: int, m: int, cap: Optional[int] = None) -> FieldTower:
    """Construct (or reuse) the tower for q = p^m"""
    require_prime(p)
    if m < 1:
        raise InvalidLevels(f"m must be positive, got {m}")
    cap = get_settings().field_cap if cap is None else cap
    size = p ** (4 * m)
    if size > cap:
        raise CapExceeded(f"tower size {p}^{4 * m} = {size} exceeds cap {cap}", {"size": size, "cap": cap})
    return _cached_tower(p, m)


def arith(x: FieldElem, y: Optional[FieldElem], kind: str, exponent: int = 0) -> FieldElem:
    """Dispatch one of add, sub, mul, div, neg, inv, pow"""
    if y is not None and x.tower is not y.tower:
        raise TowerMismatch("elements belong to different towers")
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    if kind == "neg":
        return -x
    if kind == "inv":
        return x.inverse()
    if kind == "pow":
        return x ** exponent
    raise ValueError(f"unknown operation {kind!r}")


def trace(x: FieldElem, upper: FieldLevel, lower: FieldLevel) -> FieldElem:
    """Tr_{upper/lower}(x) = sum of x^(|lower|^j) for j < [upper : lower]"""
    tower = x.tower
    if lower.rank > upper.rank:
        raise InvalidLevels(f"{lower.value} is not a subfield of {upper.value}")
    if not tower.contains(x, upper):
        raise InvalidLevels(f"{x!r} is not in {upper.value}")
    lower_degree = tower.level_degree(lower)
    terms = tower.level_degree(upper) // lower_degree
    total = tower.zero()
    for j in range(terms):
        total = total + x.frobenius(lower_degree * j)
    if not tower.contains(total, lower):
        raise VerificationFailed(f"trace of {x!r} left {lower.value}")
    return total


def unit_circle(tower: FieldTower, order: int) -> List[FieldElem]:
    """All elements whose multiplicative order divides `order`, ordered by exponent"""
    if order < 1 or tower.order % order != 0:
        raise NotADivisor(f"{order} does not divide q^4-1={tower.order}", {"order": order})
    step = tower.order // order
    return [FieldElem(tower, i * step) for i in range(order)]


def unit_circle_multiple(tower: FieldTower, s: int) -> List[FieldElem]:
    """U_{s(q^2+1)}; requires s | q^2-1"""
    q2 = tower.q ** 2
    if s < 1 or (q2 - 1) % s != 0:
        raise NotADivisor(f"{s} does not divide q^2-1={q2 - 1}", {"s": s})
    return unit_circle(tower, s * (q2 + 1))


def delta_lambda(tower: FieldTower, r: int) -> Tuple[FieldElem, FieldElem]:
    """delta = beta^((q^2-1)/r) and lambda = delta^(q^2+1)"""
    q2 = tower.q ** 2
    if r < 1 or (q2 - 1) % r != 0:
        raise NotADivisor(f"r={r} does not divide q^2-1={q2 - 1}", {"r": r})
    n = q2 + 1
    delta = FieldElem(tower, (q2 - 1) // r)
    lam = delta ** n
    if delta.order() != r * n or lam.order() != r or not tower.contains(lam, FieldLevel.QUAD):
        raise VerificationFailed(f"delta/lambda orders wrong for r={r}")
    return delta, lam
