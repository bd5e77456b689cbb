from typing import List, Tuple

from sympy import divisors, factorint, isprime, n_order

from ..exceptions import InvalidR, NotPrime, NotPrimePower

FAMILY_A = "A"
FAMILY_B = "B"


def require_prime(p: int) -> None:
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not prime", {"p": p})


def split_prime_power(q: int) -> Tuple[int, int]:
    """Factor a prime power q into (p, m) with q = p^m"""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power", {"q": q})
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power", {"q": q, "factors": {str(k): v for k, v in factors.items()}})
    (p, m), = factors.items()
    return int(p), int(m)


def nu2(x: int) -> int:
    """2-adic valuation of a positive integer"""
    if x <= 0:
        raise ValueError("2-adic valuation needs a positive integer")
    return (x & -x).bit_length() - 1


def family_modulus(q: int, family: str) -> int:
    """q+1 for family A, q-1 for family B"""
    if family == FAMILY_A:
        return q + 1
    if family == FAMILY_B:
        return q - 1
    raise ValueError(f"unknown family {family!r}")


def family_exponent(q: int, family: str) -> int:
    """The second nonzero exponent s: q^2+q+1 for family A, q^2-q+1 for family B"""
    if family == FAMILY_A:
        return q * q + q + 1
    if family == FAMILY_B:
        return q * q - q + 1
    raise ValueError(f"unknown family {family!r}")


def check_r(q: int, r: int, family: str) -> None:
    """Raise InvalidR naming the failed condition"""
    bound = family_modulus(q, family)
    label = "q+1" if family == FAMILY_A else "q-1"
    if r < 1:
        raise InvalidR(f"r must be positive, got {r}", {"r": r, "condition": "positivity"})
    if bound % r != 0:
        raise InvalidR(
            f"family {family}: r={r} does not divide {label}={bound}",
            {"q": q, "r": r, "family": family, "condition": "divisibility"},
        )
    if nu2(r) != nu2(bound):
        raise InvalidR(
            f"family {family}: nu2(r)={nu2(r)} differs from nu2({label})={nu2(bound)}",
            {"q": q, "r": r, "family": family, "condition": "2-adic valuation"},
        )
    if (q * q - 1) % r != 0:
        raise InvalidR(
            f"r={r} does not divide q^2-1={q * q - 1}",
            {"q": q, "r": r, "family": family, "condition": "divisibility of q^2-1"},
        )


def admissible_r(q: int, family: str) -> List[int]:
    """All r satisfying the family conditions, ascending"""
    bound = family_modulus(q, family)
    if bound == 0:
        return []
    return [int(r) for r in divisors(bound) if nu2(int(r)) == nu2(bound)]


def multiplicative_order(a: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    return int(n_order(a, modulus))
