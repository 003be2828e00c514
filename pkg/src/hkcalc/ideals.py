"""Ideals with value semantics: sums, products, powers, Frobenius bracket powers.

Every constructor returns a fresh Ideal; the reduced Groebner basis (with
the ring's relations adjoined) is computed lazily and cached per value.
"""

from __future__ import annotations

from .errors import InputError
from .groebner import GroebnerBasis, groebner_basis
from .poly import Polynomial, is_power_of
from .ring import PresentedRing


class Ideal:
    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: PresentedRing, generators):
        generators = tuple(g for g in generators if not g.is_zero())
        for g in generators:
            if not ring.owns(g):
                raise InputError("generator lives in a different ring")
        self.ring = ring
        self.generators = generators
        self._gb = None

    def gb(self, spair_cap: int = None) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner_basis(self.ring, self.generators, spair_cap=spair_cap)
        return self._gb

    def contains(self, f: Polynomial) -> bool:
        return self.gb().contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        """True iff every generator of `other` lies in this ideal."""
        self._check(other)
        gb = self.gb()
        return all(gb.contains(g) for g in other.generators)

    def is_unit(self) -> bool:
        return self.gb().is_unit_ideal()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def _check(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise InputError("ideals live in different rings")

    # -- constructors ---------------------------------------------------------

    def bracket_power(self, q: int) -> "Ideal":
        """The Frobenius power I^[q], generated by q-th powers of the listed
        generators.  Ring relations are never raised to the q."""
        p = self.ring.field.p
        if not is_power_of(q, p):
            raise InputError("%d is not a power of the characteristic %d" % (q, p))
        if q == 1:
            return self
        return Ideal(self.ring, [g.frobenius(q) for g in self.generators])

    def __add__(self, other) -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def product(self, other) -> "Ideal":
        self._check(other)
        gens = [a * b for a in self.generators for b in other.generators]
        return Ideal(self.ring, gens)

    def power(self, k: int) -> "Ideal":
        if k < 0:
            raise InputError("negative ideal power")
        if k == 0:
            return Ideal(self.ring, [self.ring.one()])
        result = self
        for _ in range(k - 1):
            result = result.product(self)
        return result

    # -- comparisons ----------------------------------------------------------

    def same_ideal(self, other) -> bool:
        """True iff the two ideals coincide (reduced bases are canonical)."""
        self._check(other)
        return self.gb() == other.gb()

    def __repr__(self) -> str:
        names = self.ring.variables
        return "Ideal(%s)" % ", ".join(g.render(names) for g in self.generators)


def maximal_ideal(ring: PresentedRing) -> Ideal:
    """The ideal of all variables: the maximal ideal at the origin."""
    return Ideal(ring, [ring.var(i) for i in range(ring.nvars)])


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.same_ideal(b)
