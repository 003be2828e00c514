"""Lengths and multiplicities: Krull dimension, colengths, and the
Hilbert-Samuel multiplicity of a parameter on a one-dimensional quotient.

All lengths are computed over the localization at the origin.  The global
(affine) colength counts standard monomials of the leading-term ideal; the
local value is obtained by stabilizing against high powers of the maximal
ideal, with a homogeneous fast path where both notions agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CertificationError, InputError
from .ideals import Ideal, maximal_ideal
from .orders import mono_divides
from .poly import Polynomial
from .ring import PresentedRing

ENUMERATION_CELL_CAP = 4096
DEFAULT_LOCAL_N_CAP = 512

# Runtime-configurable cap (the CLI's --n-cap writes here).
LOCAL_N_CAP = DEFAULT_LOCAL_N_CAP
DEFAULT_HS_FLOOR = 3
DEFAULT_HS_CAP = 64


class _Infinite:
    """Distinguished infinite length (non-Artinian quotient)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INFINITE-length")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITE = _Infinite()


def is_finite(value) -> bool:
    return value is not INFINITE


# -- staircase counting -------------------------------------------------------


def _pure_bounds(monos, k):
    """Per-variable minimum pure-power exponent, or None where absent."""
    bounds = [None] * k
    for m in monos:
        support = [i for i in range(k) if m[i]]
        if len(support) == 1:
            (i,) = support
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    return bounds


def _count_two_vars(monos):
    """Standard monomial count for a monomial ideal in two variables.

    Sweep the first exponent; the staircase height at column a is the running
    minimum second exponent over generators with first exponent <= a.  The
    caller guarantees pure powers in both variables, so the sweep starts at
    column 0 and terminates at height 0.
    """
    gens = sorted(set(monos))
    total = 0
    col = 0
    height = None
    i = 0
    n = len(gens)
    while i < n:
        a = gens[i][0]
        if a > col:
            if height is None:
                raise AssertionError("no generator with zero first exponent")
            total += (a - col) * height
            col = a
        while i < n and gens[i][0] == a:
            b = gens[i][1]
            if height is None or b < height:
                height = b
            i += 1
        if height == 0:
            return total
    raise AssertionError("no pure power in the first variable")


def count_standard_monomials(lead_monomials, nvars: int):
    """Number of monomials outside the given monomial ideal, or INFINITE.

    Counting splits recursively on one variable at a time, with memoization
    on sub-staircases, a closed-box fast path, and plain enumeration only
    below a small cell threshold.
    """
    monos = [tuple(m) for m in lead_monomials]
    zero = (0,) * nvars
    if zero in monos:
        return 0
    if not monos:
        return 1 if nvars == 0 else INFINITE
    bounds = _pure_bounds(monos, nvars)
    if any(b is None for b in bounds):
        return INFINITE

    memo = {}

    def rec(gens, k):
        if k == 0:
            return 0 if gens else 1
        if k == 1:
            return min(m[0] for m in gens)
        key = (k, gens)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if (0,) * k in gens:
            memo[key] = 0
            return 0
        bnds = _pure_bounds(gens, k)
        if any(b is None for b in bnds):
            # Slicing preserves pure powers of the remaining variables, so a
            # finite top-level staircase never produces this.
            raise AssertionError("sub-staircase lost a pure power bound")
        if all(len([i for i in range(k) if m[i]]) == 1 for m in gens):
            # Pure powers only: the staircase is a closed box.
            value = 1
            for b in bnds:
                value *= b
        elif k == 2:
            value = _count_two_vars(gens)
        else:
            cells = 1
            for b in bnds:
                cells *= b
            if cells <= ENUMERATION_CELL_CAP:
                value = 0
                for cell in itertools.product(*(range(b) for b in bnds)):
                    if not any(mono_divides(m, cell) for m in gens):
                        value += 1
            else:
                value = _split_count(gens, k, bnds, rec)
        memo[key] = value
        return value

    def _split_count(gens, k, bnds, rec):
        # Split on the variable with the fewest distinct exponents.
        j = min(range(k), key=lambda i: len({m[i] for m in gens}))
        bound = bnds[j]
        by_level = sorted(gens, key=lambda m: m[j])
        levels = sorted({m[j] for m in gens if m[j] < bound} | {0}) + [bound]
        total = 0
        current = []
        idx = 0
        for lo, hi in zip(levels, levels[1:]):
            while idx < len(by_level) and by_level[idx][j] <= lo:
                m = by_level[idx]
                current.append(m[:j] + m[j + 1 :])
                idx += 1
            total += (hi - lo) * rec(tuple(sorted(set(current))), k - 1)
        return total

    return rec(tuple(sorted(set(monos))), nvars)


# -- dimension ----------------------------------------------------------------


def dimension(I: Ideal) -> int:
    """Krull dimension of ring/(relations + I).

    The largest size of a variable subset S such that no leading-term
    monomial is supported entirely inside S; exhaustive over subsets.
    """
    gb = I.gb()
    if gb.is_unit_ideal():
        raise InputError("empty variety: the ideal is the unit ideal")
    n = I.ring.nvars
    supports = [frozenset(i for i in range(n) if m[i]) for m in gb.leading_monomials]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    raise AssertionError("unreachable: the empty subset always qualifies")


# -- colengths ----------------------------------------------------------------


def colength(I: Ideal):
    """lambda of ring/(relations + I) in the affine (global) sense."""
    gb = I.gb()
    return count_standard_monomials(gb.leading_monomials, I.ring.nvars)


def _all_homogeneous(I: Ideal) -> bool:
    return all(g.is_homogeneous() for g in I.generators) and all(
        r.is_homogeneous() for r in I.ring.relations
    )


def _m_power(ring: PresentedRing, n: int) -> Ideal:
    gens = []
    for exps in itertools.combinations_with_replacement(range(ring.nvars), n):
        mono = [0] * ring.nvars
        for i in exps:
            mono[i] += 1
        gens.append(ring.poly(((tuple(mono), 1),)))
    return Ideal(ring, gens)


def local_colength(I: Ideal, n_cap: int = None):
    """lambda over the localization at the origin.

    Homogeneous ideals agree with the global colength.  Otherwise the value
    of colength(I + m^N) is stabilized over increasing N and certified once
    two consecutive values agree with N past the global colength, which
    bounds the nilpotency index of the local factor.
    """
    if n_cap is None:
        n_cap = LOCAL_N_CAP
    c = colength(I)
    if c is INFINITE:
        return INFINITE
    if c == 0 or _all_homogeneous(I):
        return c
    ring = I.ring
    # m-primary certificate: if every pure variable power x_i^c lies in the
    # ideal then the quotient is supported at the origin alone and the global
    # colength is already the local one.
    gb = I.gb()
    if all(gb.contains(ring.var(i, c)) for i in range(ring.nvars)):
        return c
    prev = None
    for n in range(1, n_cap + 1):
        value = colength(I + _m_power(ring, n))
        if prev is not None and value == prev and n > c:
            return value
        prev = value
    raise CertificationError(
        "local colength did not stabilize within N <= %d" % n_cap
    )


def quotient_length(I: Ideal, J: Ideal):
    """lambda(J/I) for I contained in J, over the localization at the origin."""
    if not J.contains_ideal(I):
        raise InputError("quotient_length requires I to be contained in J")
    li = local_colength(I)
    if li is INFINITE:
        raise InputError("quotient_length requires the small ideal to be m-primary")
    lj = local_colength(J)
    return li - lj


# -- Hilbert-Samuel multiplicity ----------------------------------------------


@dataclass(frozen=True)
class MultiplicityResult:
    value: int
    stabilized_at: int
    certified: bool


def hilbert_samuel(
    x: Polynomial,
    J: Ideal,
    floor: int = DEFAULT_HS_FLOOR,
    cap: int = DEFAULT_HS_CAP,
) -> MultiplicityResult:
    """e(x; R/J) for a parameter x on a one-dimensional quotient.

    Computed as the stabilized first difference of N -> lambda(R/(J, x^N)).
    The differences lambda(x^N M / x^(N+1) M) are non-increasing (x maps each
    layer onto the next), so transient plateaus above the true value are the
    only failure mode; certification therefore requires three consecutive
    equal differences past an adaptive floor, the maximum total degree of the
    defining Groebner basis, which dominates every staircase breakpoint seen
    at this scale.
    """
    ring = J.ring
    if not ring.owns(x):
        raise InputError("parameter lives in a different ring")
    if dimension(J) != 1:
        raise InputError("hilbert_samuel requires dim(R/J) = 1")
    if dimension(J + Ideal(ring, [x])) != 0:
        raise InputError("the given element is not a parameter on R/J")
    basis_degree = max((g.degree() for g in J.gb().elements), default=1)
    floor = max(floor, basis_degree)
    cap = max(cap, floor + 8)
    lengths = []
    diffs = []
    for n in range(1, cap + 2):
        value = local_colength(J + Ideal(ring, [x**n]))
        if value is INFINITE:
            raise InputError("quotient by the parameter power is not Artinian")
        lengths.append(value)
        if n >= 2:
            diffs.append(lengths[-1] - lengths[-2])
            if len(diffs) >= 2 and diffs[-1] > diffs[-2]:
                raise CertificationError(
                    "first differences increased; inputs violate the "
                    "one-dimensional parameter hypotheses"
                )
        if len(diffs) >= 3 and diffs[-1] == diffs[-2] == diffs[-3] and n - 1 >= floor:
            if diffs[-1] <= 0:
                raise CertificationError("stabilized difference is not positive")
            return MultiplicityResult(value=diffs[-1], stabilized_at=n - 1, certified=True)
    raise CertificationError(
        "Hilbert-Samuel differences did not stabilize within N <= %d" % cap
    )


__all__ = [
    "INFINITE",
    "MultiplicityResult",
    "colength",
    "count_standard_monomials",
    "dimension",
    "hilbert_samuel",
    "is_finite",
    "local_colength",
    "maximal_ideal",
    "quotient_length",
]
