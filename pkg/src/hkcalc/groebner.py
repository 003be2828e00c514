"""Buchberger's algorithm, normal forms, and reduced Groebner bases.

Selection follows the normal strategy (minimal S-pair lcm in the ambient
order), with the product and chain criteria.  All tie-breaking is by fixed
generator ordering, so results are bit-reproducible.
"""

from __future__ import annotations

import heapq

from .errors import InputError, ResourceLimitError
from .orders import mono_div, mono_divides, mono_lcm, mono_mul
from .poly import Polynomial
from .ring import PresentedRing

DEFAULT_SPAIR_CAP = 10**6

# Runtime-configurable cap (the CLI's --spair-cap writes here).
SPAIR_CAP = DEFAULT_SPAIR_CAP


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Fully reduce f modulo the polynomial list `basis`.

    Every reducible term is rewritten by the first basis element (in the
    given fixed order) whose leading term divides it, largest terms first.
    The remainder has no term divisible by any leading term of the basis.
    """
    divisors = [(g.lm, g.field.inv(g.lc), g.terms) for g in basis if not g.is_zero()]
    for g in basis:
        if not g.is_zero():
            f._check(g)
    p = f.field.p
    key = f.order.key
    work = dict(f.terms)
    out = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lcinv, terms in divisors:
            if mono_divides(lm, m):
                # Subtract (c / lc(g)) * x^(m - lm) * g; the leading term of
                # the product cancels m exactly.
                shift = mono_div(m, lm)
                coef = c * lcinv % p
                for mg, cg in terms:
                    mm = mono_mul(mg, shift)
                    v = (work.get(mm, 0) - coef * cg) % p
                    if v:
                        work[mm] = v
                    elif mm in work:
                        del work[mm]
                break
        else:
            out[m] = work.pop(m)
    return Polynomial(f.field, f.order, f.nvars, out.items())


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) for the pair's critical lcm; operands need not be monic."""
    lcm = mono_lcm(f.lm, g.lm)
    p = f.field.p
    a = f.mul_term(mono_div(lcm, f.lm), g.lc % p)
    b = g.mul_term(mono_div(lcm, g.lm), f.lc % p)
    return a - b


class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by leading term."""

    __slots__ = ("ring", "elements")

    def __init__(self, ring: PresentedRing, elements):
        self.ring = ring
        self.elements = tuple(elements)

    @property
    def leading_monomials(self):
        return tuple(g.lm for g in self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not self.elements:
            return f
        return normal_form(f, self.elements)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant() and not self.elements[0].is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and tuple(g.terms for g in self.elements) == tuple(g.terms for g in other.elements)
        )

    def __hash__(self) -> int:
        return hash(tuple(g.terms for g in self.elements))

    def __repr__(self) -> str:
        return "GroebnerBasis(%d elements)" % len(self.elements)


def _minimal_monomial_basis(ring, gens):
    """Reduced basis of a monomial ideal: the minimal monomial generators."""
    monos = sorted({g.lm for g in gens}, key=lambda m: (sum(m), ring.order.key(m)))
    kept = []
    for m in monos:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    kept.sort(key=ring.order.key)
    return GroebnerBasis(ring, [ring.poly(((m, 1),)) for m in kept])


def _interreduce(ring, basis):
    """Minimalize by leading term, then tail-reduce each element."""
    key = ring.order.key
    basis = sorted(basis, key=lambda g: key(g.lm))
    minimal = []
    for g in basis:
        if not any(mono_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = list(minimal)
    for i, g in enumerate(minimal):
        others = reduced[:i] + reduced[i + 1 :]
        reduced[i] = normal_form(g, others).monic() if others else g.monic()
    reduced.sort(key=lambda g: key(g.lm))
    return GroebnerBasis(ring, reduced)


_GB_CACHE: dict = {}


def groebner_basis(ring: PresentedRing, gens, spair_cap: int = None) -> GroebnerBasis:
    """Reduced Groebner basis of (gens) + (ring relations).

    Raises ResourceLimitError once more than `spair_cap` S-pairs have been
    generated (default: the module-level SPAIR_CAP).
    """
    if spair_cap is None:
        spair_cap = SPAIR_CAP
    gens = [g for g in gens if not g.is_zero()]
    for g in gens:
        if not ring.owns(g):
            raise InputError("generator lives in a different ring")
    gens = gens + list(ring.relations)
    cache_key = (
        ring.field.p,
        ring.order.spec(),
        ring.variables,
        tuple(r.terms for r in ring.relations),
        tuple(sorted(g.terms for g in gens)),
        spair_cap,
    )
    hit = _GB_CACHE.get(cache_key)
    if hit is not None:
        return hit

    if not gens:
        result = GroebnerBasis(ring, ())
        _GB_CACHE[cache_key] = result
        return result

    if all(g.is_monomial() for g in gens):
        # Monomial ideals are their own Groebner basis; skip pair processing.
        result = _minimal_monomial_basis(ring, gens)
        _GB_CACHE[cache_key] = result
        return result

    key = ring.order.key
    G = []
    lms = []
    heap = []
    pending = set()
    pairs_made = 0

    def push_pairs(j):
        nonlocal pairs_made
        for i in range(j):
            lcm = mono_lcm(lms[i], lms[j])
            heapq.heappush(heap, (key(lcm), i, j, lcm))
            pending.add((i, j))
            pairs_made += 1
            if pairs_made > spair_cap:
                raise ResourceLimitError("S-pair cap of %d exceeded" % spair_cap)

    def add(h):
        h = h.monic()
        G.append(h)
        lms.append(h.lm)
        push_pairs(len(G) - 1)

    for g in gens:
        h = normal_form(g, G) if G else g
        if not h.is_zero():
            add(h)

    if not G:
        result = GroebnerBasis(ring, ())
        _GB_CACHE[cache_key] = result
        return result

    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        # Product criterion: coprime leading terms reduce to zero.
        if lcm == mono_mul(lms[i], lms[j]):
            continue
        # Chain criterion: a third element dividing the lcm whose pairs with
        # i and j were both already handled makes this pair redundant.
        skip = False
        for k in range(len(G)):
            if k == i or k == j or not mono_divides(lms[k], lcm):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        s = s_polynomial(G[i], G[j])
        h = normal_form(s, G)
        if not h.is_zero():
            add(h)

    result = _interreduce(ring, G)
    _GB_CACHE[cache_key] = result
    return result
