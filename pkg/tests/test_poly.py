import random

import pytest

from hkcalc import InputError, MonomialOrder, Polynomial, PrimeField
from hkcalc.poly import is_power_of
from helpers import poly_of, random_poly, ring_of


def test_term_normalization():
    ring = ring_of(5, ("x", "y"))
    f = ring.poly((((1, 0), 3), ((1, 0), 2), ((0, 1), 7)))  # 3x + 2x + 7y = 2y
    assert f.terms == (((0, 1), 2),)
    assert ring.poly((((0, 0), 5),)).is_zero()


def test_leading_data_and_degree():
    ring = ring_of(5, ("x", "y", "z"))
    f = poly_of(ring, "x*y + z^3 + 2")
    assert f.lm == (0, 0, 3)  # grevlex: degree 3 beats degree 2
    assert f.lc == 1
    assert f.degree() == 3
    assert not f.is_homogeneous()
    assert poly_of(ring, "x^2 + y*z").is_homogeneous()
    assert ring.zero().degree() == -1
    with pytest.raises(InputError):
        ring.zero().lm


def test_arithmetic_random_axioms():
    rng = random.Random(11)
    checked = 0
    for p in (2, 5):
        ring = ring_of(p, ("x", "y", "z"))
        for _ in range(120):
            f = random_poly(rng, ring)
            g = random_poly(rng, ring)
            h = random_poly(rng, ring)
            assert (f + g) - g == f
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f + (-f) == ring.zero()
            checked += 1
    assert checked >= 200


def test_pow_matches_repeated_multiplication():
    rng = random.Random(13)
    ring = ring_of(7, ("x", "y"))
    for _ in range(50):
        f = random_poly(rng, ring, max_terms=3, max_exp=2)
        by_mult = ring.one()
        for k in range(5):
            assert f**k == by_mult
            by_mult = by_mult * f
    with pytest.raises(InputError):
        ring.one() ** (-1)


def test_frobenius_matches_power_oracle():
    """f^q by exponent scaling agrees with repeated squaring, and is additive."""
    rng = random.Random(17)
    for p in (2, 3, 5):
        ring = ring_of(p, ("x", "y"))
        pairs = 0
        for _ in range(200):
            f = random_poly(rng, ring, max_terms=3, max_exp=3)
            g = random_poly(rng, ring, max_terms=3, max_exp=3)
            for q in (p, p * p):
                assert f.frobenius(q) == f**q
                assert (f + g).frobenius(q) == f.frobenius(q) + g.frobenius(q)
            pairs += 1
        assert pairs >= 200


def test_frobenius_rejects_non_powers():
    ring = ring_of(5, ("x",))
    f = ring.var(0)
    assert f.frobenius(1) == f
    for bad in (2, 10, 24):
        with pytest.raises(InputError):
            f.frobenius(bad)
    assert is_power_of(125, 5) and not is_power_of(50, 5) and not is_power_of(0, 5)


def test_cross_ring_operations_rejected():
    a = ring_of(5, ("x", "y"))
    b = ring_of(7, ("x", "y"))
    with pytest.raises(InputError):
        a.var(0) + b.var(0)
    c = ring_of(5, ("x", "y"), kind="lex")
    with pytest.raises(InputError):
        a.var(0) * c.var(0)


def test_monic_and_scale():
    ring = ring_of(7, ("x", "y"))
    f = poly_of(ring, "3*x^2 + 5*y")
    assert f.monic().lc == 1
    assert f.monic().scale(3) == f
    assert ring.zero().monic().is_zero()


def test_render_roundtrip():
    ring = ring_of(5, ("x", "y", "z"))
    for text in ("x^2*y + 4*z", "x + y + z + 1", "2", "z^10"):
        f = poly_of(ring, text)
        assert poly_of(ring, f.render(ring.variables)) == f
    assert ring.zero().render(ring.variables) == "0"


def test_constructor_rejects_bad_arity():
    field = PrimeField(5)
    order = MonomialOrder("grevlex", 2)
    with pytest.raises(InputError):
        Polynomial(field, order, 2, (((1, 2, 3), 1),))
