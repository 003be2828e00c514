"""Shared constructors for the test suite."""

from hkcalc import MonomialOrder, PresentedRing, PrimeField
from hkcalc.parser import parse_polynomial


def ring_of(p, names, kind="grevlex", relations=()):
    field = PrimeField(p)
    order = MonomialOrder(kind, len(names))
    rels = [parse_polynomial(s, 0, 0, field, order, names) for s in relations]
    return PresentedRing(field, tuple(names), order, rels)


def poly_of(ring, text):
    return parse_polynomial(text, 0, 0, ring.field, ring.order, ring.variables)


def random_poly(rng, ring, max_terms=5, max_exp=4):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        terms.append((mono, rng.randint(0, ring.field.p - 1)))
    return ring.poly(terms)
