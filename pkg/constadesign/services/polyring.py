import logging
import math
from typing import List, Optional, Sequence, Tuple, Union

from ..exceptions import DivisionByZero, LevelMismatch, NotCoprime, TowerMismatch, VerificationFailed
from ..models.field import FieldLevel
from .gf import FieldElem, FieldTower, delta_lambda

logger = logging.getLogger(__name__)

PRODUCT_CHECK_MAX_LENGTH = 128


class Poly:
    """Polynomial over one tower level, coefficients low degree first"""

    __slots__ = ("tower", "level", "coeffs")

    def __init__(self, tower: FieldTower, coeffs: Sequence[FieldElem], level: FieldLevel = FieldLevel.QUAD):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.tower is not tower:
                raise TowerMismatch("coefficient from another tower")
            if not tower.contains(c, level):
                raise LevelMismatch(f"coefficient {c!r} is not in {level.value}")
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.tower = tower
        self.level = level
        self.coeffs = tuple(coeffs)

    # Construction helpers

    @classmethod
    def zero(cls, tower: FieldTower, level: FieldLevel = FieldLevel.QUAD) -> "Poly":
        return cls(tower, [], level)

    @classmethod
    def constant(cls, c: FieldElem, level: FieldLevel = FieldLevel.QUAD) -> "Poly":
        return cls(c.tower, [c], level)

    @classmethod
    def monomial(cls, tower: FieldTower, degree: int, coeff: Optional[FieldElem] = None,
                 level: FieldLevel = FieldLevel.QUAD) -> "Poly":
        coeff = tower.one() if coeff is None else coeff
        return cls(tower, [tower.zero()] * degree + [coeff], level)

    @classmethod
    def from_roots(cls, tower: FieldTower, roots: Sequence[FieldElem], level: FieldLevel) -> "Poly":
        """prod (X - root), computed in F_{q^4} and then checked to lie in `level`"""
        coeffs = [tower.one()]
        for z in roots:
            shifted = [tower.zero()] + coeffs
            scaled = [-(z * c) for c in coeffs] + [tower.zero()]
            coeffs = [a + b for a, b in zip(shifted, scaled)]
        return cls(tower, coeffs, level)

    # Basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else self.tower.zero()

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.tower.zero()

    def _check(self, other: "Poly") -> None:
        if other.tower is not self.tower:
            raise TowerMismatch("polynomials over different towers")
        if other.level != self.level:
            raise LevelMismatch(f"{self.level.value} vs {other.level.value}; promote explicitly")

    def promote(self, level: FieldLevel) -> "Poly":
        if level.rank < self.level.rank:
            raise LevelMismatch(f"cannot demote {self.level.value} to {level.value}")
        return Poly(self.tower, self.coeffs, level)

    # Ring operations

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.tower, [self.coeff(i) + other.coeff(i) for i in range(size)], self.level)

    def __neg__(self) -> "Poly":
        return Poly(self.tower, [-c for c in self.coeffs], self.level)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.tower, self.level)
        out = [self.tower.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.tower, out, self.level)

    def scale(self, c: FieldElem) -> "Poly":
        return Poly(self.tower, [c * x for x in self.coeffs], self.level)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.lead().inverse())

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.lead().inverse()
        quot = [self.tower.zero()] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c.is_zero:
                continue
            f = c * inv_lead
            quot[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - f * b
        return Poly(self.tower, quot, self.level), Poly(self.tower, rem[:dq], self.level)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: FieldElem) -> FieldElem:
        """Horner evaluation at any tower element"""
        acc = self.tower.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reciprocal(self) -> "Poly":
        """X^deg f(1/X)"""
        return Poly(self.tower, list(reversed(self.coeffs)), self.level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.tower is other.tower and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.tower), self.coeffs))

    def log_coeffs(self) -> List[Optional[int]]:
        return [c.log for c in self.coeffs]

    def __repr__(self) -> str:
        return f"[{','.join(repr(c) for c in self.coeffs)}]@{self.level.value}"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) = monic(f)"""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_arith(f: Poly, g: Union[Poly, FieldElem], kind: str):
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "divmod":
        return divmod(f, g)
    if kind == "gcd":
        return poly_gcd(f, g)
    if kind == "eval":
        return f(g)
    raise ValueError(f"unknown polynomial operation {kind!r}")


class CyclotomicCoset:
    """Orbit of h under multiplication by `base` modulo N"""

    __slots__ = ("representative", "base", "modulus", "members")

    def __init__(self, h: int, base: int, modulus: int):
        if math.gcd(base, modulus) != 1:
            raise NotCoprime(f"gcd({base}, {modulus}) != 1", {"base": base, "modulus": modulus})
        h %= modulus
        orbit = [h]
        x = (h * base) % modulus
        while x != h:
            orbit.append(x)
            x = (x * base) % modulus
        self.members = tuple(sorted(orbit))
        self.representative = self.members[0]
        self.base = base
        self.modulus = modulus

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicCoset):
            return NotImplemented
        return (self.members, self.base, self.modulus) == (other.members, other.base, other.modulus)

    def __hash__(self) -> int:
        return hash((self.members, self.base, self.modulus))

    def __repr__(self) -> str:
        return f"C_{self.representative}^({self.base},{self.modulus})={set(self.members)}"


def cyclotomic_coset(h: int, base: int, modulus: int) -> CyclotomicCoset:
    return CyclotomicCoset(h, base, modulus)


def cyclotomic_cosets(base: int, modulus: int, within: Optional[Sequence[int]] = None) -> List[CyclotomicCoset]:
    """Partition of Z_N (or of a base-closed subset) into cosets, by representative"""
    pool = sorted({x % modulus for x in (range(modulus) if within is None else within)})
    seen = set()
    out = []
    for x in pool:
        if x in seen:
            continue
        coset = CyclotomicCoset(x, base, modulus)
        seen.update(coset.members)
        out.append(coset)
    return out


def minimal_polynomial(x: FieldElem, level: FieldLevel) -> Poly:
    """Minimal polynomial of x over `level`: product over the distinct conjugates x^(|level|^j)"""
    tower = x.tower
    size = tower.level_size(level)
    conjugates = [x]
    y = x ** size
    while y != x:
        conjugates.append(y)
        y = y ** size
    poly = Poly.from_roots(tower, conjugates, level)
    if not poly(x).is_zero:
        raise VerificationFailed(f"minimal polynomial of {x!r} does not vanish at it")
    return poly


def roots_of_xn_minus_lambda(tower: FieldTower, r: int, offset: int = 1) -> List[FieldElem]:
    """The n = q^2+1 roots delta^(offset + r j) of x^n - delta^(offset n)

    offset = 1 gives x^n - lambda; offset = -1 gives x^n - lambda^{-1}.
    """
    delta, _ = delta_lambda(tower, r)
    n = tower.q ** 2 + 1
    roots = [delta ** (offset + r * j) for j in range(n)]
    if len(set(roots)) != n:
        raise VerificationFailed("roots of x^n - lambda are not distinct")
    shift = delta ** (offset * n)
    for z in roots:
        if z ** n != shift:
            raise VerificationFailed(f"{z!r} is not a root of x^n - lambda")
    # quadratic in n, so only for desk-scale lengths
    if n <= PRODUCT_CHECK_MAX_LENGTH:
        if Poly.from_roots(tower, roots, FieldLevel.QUAD) != xn_minus(tower, n, shift):
            raise VerificationFailed("linear factors do not multiply to x^n - lambda")
    return roots


def xn_minus(tower: FieldTower, n: int, c: FieldElem) -> Poly:
    """X^n - c over F_{q^2}"""
    return Poly.monomial(tower, n) - Poly.constant(c, FieldLevel.QUAD)
