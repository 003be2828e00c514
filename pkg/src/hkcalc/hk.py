"""Hilbert-Kunz functions, multiplicity estimation, and localized Frobenius
colengths via the associativity ratio.

All ratios and estimates are exact rationals; no floating point enters the
core.  Display rounding, if any, is the CLI's business.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import AssociativityRatioError, InputError
from .ideals import Ideal
from .lengths import dimension, hilbert_samuel, is_finite, local_colength
from .poly import Polynomial


@dataclass(frozen=True)
class HKRow:
    e: int
    q: int
    colength: int
    ratio: Fraction  # colength / q^d, exact


@dataclass(frozen=True)
class HKReport:
    ring_desc: str
    ideal_desc: str
    d: int
    rows: tuple
    estimate: Optional[Fraction]
    estimate_method: str


def hk_function(I: Ideal, e_max: int) -> HKReport:
    """Rows (e, q, lambda(R/I^[q]), lambda/q^d) for e = 1..e_max.

    d is the dimension of the ambient ring, so the ratios converge to the
    Hilbert-Kunz multiplicity of I.
    """
    if e_max < 1:
        raise InputError("e_max must be at least 1")
    ring = I.ring
    base = local_colength(I)
    if not is_finite(base):
        raise InputError("the ideal is not m-primary: infinite colength")
    d = ring.dimension
    p = ring.field.p
    rows = []
    for e in range(1, e_max + 1):
        q = p**e
        c = local_colength(I.bracket_power(q))
        if not is_finite(c):
            raise InputError("bracket power has infinite colength")
        rows.append(HKRow(e=e, q=q, colength=c, ratio=Fraction(c, q**d)))
    ratios = {r.ratio for r in rows}
    if len(ratios) == 1 and len(rows) >= 2:
        estimate, method = rows[0].ratio, "exact-stationary"
    else:
        estimate, method = None, "absent"
    return HKReport(
        ring_desc=repr(ring),
        ideal_desc=repr(I),
        d=d,
        rows=tuple(rows),
        estimate=estimate,
        estimate_method=method,
    )


@dataclass(frozen=True)
class EHKEstimate:
    estimate: Fraction
    last_ratio: Fraction
    gap: Fraction  # |estimate - last ratio|, a convergence diagnostic
    method: str
    report: HKReport


def ehk_estimate(I: Ideal, e_max: int) -> EHKEstimate:
    """Two-point Hilbert-Kunz multiplicity estimate.

    Fits lambda(q) = a*q^d + b*q^(d-1) through the last two rows and reports
    a, together with the raw last ratio and their gap.  No convergence claim
    is made beyond the computed data.
    """
    if e_max < 2:
        raise InputError("ehk_estimate needs e_max >= 2")
    report = hk_function(I, e_max)
    d = report.d
    r1, r2 = report.rows[-2], report.rows[-1]
    q1, q2 = r1.q, r2.q
    denom = q2**d * q1 ** (d - 1) - q1**d * q2 ** (d - 1)
    a = Fraction(r2.colength * q1 ** (d - 1) - r1.colength * q2 ** (d - 1), denom)
    method = "two-point-fit"
    if report.estimate_method == "exact-stationary":
        method = "exact-stationary"
    gap = abs(a - r2.ratio)
    return EHKEstimate(estimate=a, last_ratio=r2.ratio, gap=gap, method=method, report=report)


def localized_frobenius_colength(P: Ideal, q: int, x: Polynomial) -> int:
    """lambda over the localization at P of R/P^[q], for a declared prime P
    with dim(R/P) = 1.

    Computed as the exact quotient e(x; R/P^[q]) / e(x; R/P); the division is
    exact when P really is the unique minimal prime over P^[q], and a failure
    to divide is reported as such.
    """
    ring = P.ring
    if dimension(P) != 1:
        raise InputError("localized Frobenius colength requires dim(R/P) = 1")
    denominator = hilbert_samuel(x, P).value
    if q == 1:
        return 1
    numerator = hilbert_samuel(x, P.bracket_power(q)).value
    if numerator % denominator != 0:
        raise AssociativityRatioError(
            "associativity ratio failure: e(x; R/P^[%d]) = %d is not divisible "
            "by e(x; R/P) = %d (is P really prime?)" % (q, numerator, denominator)
        )
    return numerator // denominator
