"""Sparse multivariate polynomials over F_p with a fixed monomial order.

Terms are stored as a tuple of (monomial, coefficient) pairs, strictly
descending in the ambient order, so the leading term is terms[0].
Polynomials are immutable; all operations return new values.
"""

from __future__ import annotations

from .errors import InputError
from .field import PrimeField
from .orders import MonomialOrder, mono_mul, mono_pow


def is_power_of(q: int, p: int) -> bool:
    """True iff q = p^e for some e >= 0."""
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


class Polynomial:
    __slots__ = ("field", "order", "nvars", "terms")

    def __init__(self, field: PrimeField, order: MonomialOrder, nvars: int, terms):
        """Build from an iterable of (monomial, coefficient) pairs.

        Coefficients are reduced mod p, like monomials are merged, zero
        terms dropped, and the result sorted descending.
        """
        acc = {}
        p = field.p
        for mono, coeff in terms:
            if len(mono) != nvars:
                raise InputError("monomial arity %d != variable count %d" % (len(mono), nvars))
            c = (acc.get(mono, 0) + coeff) % p
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        key = order.key
        self.field = field
        self.order = order
        self.nvars = nvars
        self.terms = tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, field, order, nvars):
        return cls(field, order, nvars, ())

    @classmethod
    def constant(cls, field, order, nvars, c):
        return cls(field, order, nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, field, order, nvars, i, exp=1):
        mono = tuple(exp if j == i else 0 for j in range(nvars))
        return cls(field, order, nvars, ((mono, 1),))

    def _make(self, mapping):
        return Polynomial(self.field, self.order, self.nvars, mapping.items())

    # -- predicates and accessors ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    def constant_term(self) -> int:
        zero = (0,) * self.nvars
        for mono, c in self.terms:
            if mono == zero:
                return c
        return 0

    @property
    def lm(self):
        """Leading monomial."""
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def compatible(self, other: "Polynomial") -> bool:
        return (
            self.field.p == other.field.p
            and self.order == other.order
            and self.nvars == other.nvars
        )

    def _check(self, other):
        if not isinstance(other, Polynomial) or not self.compatible(other):
            raise InputError("operands live in different rings")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return Polynomial(self.field, self.order, self.nvars, self.terms + other.terms)

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        neg = tuple((m, p - c) for m, c in other.terms)
        return Polynomial(self.field, self.order, self.nvars, self.terms + neg)

    def __neg__(self):
        p = self.field.p
        return Polynomial(self.field, self.order, self.nvars, tuple((m, p - c) for m, c in self.terms))

    def __mul__(self, other):
        self._check(other)
        p = self.field.p
        acc = {}
        for mu, cu in self.terms:
            for mv, cv in other.terms:
                m = mono_mul(mu, mv)
                acc[m] = (acc.get(m, 0) + cu * cv) % p
        return self._make(acc)

    def scale(self, c: int):
        c %= self.field.p
        return Polynomial(self.field, self.order, self.nvars, tuple((m, co * c) for m, co in self.terms))

    def mul_term(self, mono, coeff):
        """Multiply by the single term coeff * x^mono."""
        p = self.field.p
        return Polynomial(
            self.field,
            self.order,
            self.nvars,
            tuple((mono_mul(m, mono), c * coeff % p) for m, c in self.terms),
        )

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative polynomial power")
        result = Polynomial.constant(self.field, self.order, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def frobenius(self, q: int):
        """f^q for q a power of p, by exponent scaling.

        Valid because the q-th power map is additive in characteristic p and
        fixes F_p coefficients (c^p = c).
        """
        p = self.field.p
        if not is_power_of(q, p):
            raise InputError("%d is not a power of the characteristic %d" % (q, p))
        if q == 1:
            return self
        return Polynomial(
            self.field, self.order, self.nvars, tuple((mono_pow(m, q), c) for m, c in self.terms)
        )

    # -- equality and display -------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.compatible(other)
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.order.spec(), self.terms))

    def render(self, names) -> str:
        """Human-readable form using the given variable names; reparseable."""
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.terms:
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append("%s^%d" % (names[i], e))
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("%d*%s" % (coeff, "*".join(factors)))
        return " + ".join(parts)

    def __repr__(self) -> str:
        names = ["x%d" % i for i in range(self.nvars)]
        return "Poly(%s mod %d)" % (self.render(names), self.field.p)
