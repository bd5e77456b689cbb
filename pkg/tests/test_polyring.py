import pytest

from constadesign.exceptions import DivisionByZero, LevelMismatch, NotCoprime
from constadesign.models.field import FieldLevel
from constadesign.services.gf import delta_lambda
from constadesign.services.polyring import (
    Poly, cyclotomic_coset, cyclotomic_cosets, minimal_polynomial, poly_arith, poly_gcd,
    roots_of_xn_minus_lambda, xn_minus,
)


def _poly(tower, logs):
    return Poly(tower, [tower.element(x) for x in logs], FieldLevel.QUAD)


def test_division_identity(towers):
    tower = towers[3]
    step = tower.q ** 2 + 1
    f = _poly(tower, [0, None, 3 * step, step, None, 0, 7 * step])
    g = _poly(tower, [step, 0, 2 * step])
    quot, rem = divmod(f, g)
    assert quot * g + rem == f
    assert rem.degree < g.degree
    with pytest.raises(DivisionByZero):
        divmod(f, Poly.zero(tower))


def test_gcd_of_products(towers):
    tower = towers[4]
    step = tower.q ** 2 + 1
    a = Poly.from_roots(tower, [tower.element(step), tower.element(2 * step)], FieldLevel.QUAD)
    b = Poly.from_roots(tower, [tower.element(step), tower.element(5 * step)], FieldLevel.QUAD)
    c = Poly.from_roots(tower, [tower.element(step)], FieldLevel.QUAD)
    assert poly_gcd(a, b) == c
    assert poly_gcd(a, Poly.zero(tower)) == a.monic()
    assert poly_arith(a, b, "gcd") == c
    assert poly_arith(a, tower.element(step), "eval").is_zero


def test_coefficients_outside_level_rejected(towers):
    tower = towers[3]
    with pytest.raises(LevelMismatch):
        Poly(tower, [tower.beta()], FieldLevel.QUAD)


def test_reciprocal_and_evaluation(towers):
    tower = towers[5]
    step = tower.q ** 2 + 1
    f = _poly(tower, [step, None, 0])
    assert f.reciprocal().coeffs == tuple(reversed(f.coeffs))
    x = tower.element(3 * step)
    assert f(x) == tower.element(step) + x * x


def test_cyclotomic_cosets():
    coset = cyclotomic_coset(1, 3, 8)
    assert coset.members == (1, 3)
    assert coset.representative == 1
    assert 11 in coset
    cosets = cyclotomic_cosets(2, 15)
    assert [c.representative for c in cosets] == [0, 1, 3, 5, 7]
    assert sum(len(c) for c in cosets) == 15
    with pytest.raises(NotCoprime):
        cyclotomic_coset(1, 3, 9)


def test_cosets_within_a_subset():
    # exponents congruent to 1 mod 2 in Z_20 are closed under multiplication by 3
    cosets = cyclotomic_cosets(3, 20, within=range(1, 20, 2))
    assert sorted(x for c in cosets for x in c.members) == list(range(1, 20, 2))


@pytest.mark.parametrize("q, r", [(3, 2), (3, 4), (4, 1), (4, 3), (5, 2)])
def test_minimal_polynomials_have_coefficients_in_quad(towers, q, r):
    tower = towers[q]
    delta, _ = delta_lambda(tower, r)
    g1 = minimal_polynomial(delta, FieldLevel.QUAD)
    assert g1.degree == 2
    assert g1(delta).is_zero
    assert g1(delta ** (q * q)).is_zero


@pytest.mark.parametrize("q, r, offset", [(3, 2, 1), (3, 4, -1), (4, 5, 1), (5, 6, 1)])
def test_roots_of_xn_minus_lambda(towers, q, r, offset):
    tower = towers[q]
    roots = roots_of_xn_minus_lambda(tower, r, offset)
    n = q * q + 1
    assert len(roots) == n
    delta, lam = delta_lambda(tower, r)
    target = lam if offset == 1 else lam.inverse()
    poly = xn_minus(tower, n, target)
    assert all(poly(z).is_zero for z in roots)
