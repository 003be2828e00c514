"""Executable verdicts for the numbered claims, on fixtures or user input.

Each check returns a CheckReport with every computed quantity, an exact
PASS/FAIL verdict (tolerances appear only where a limit estimate is
involved, and are printed), or INAPPLICABLE naming the unmet precondition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .hk import ehk_estimate, localized_frobenius_colength
from .ideals import Ideal, maximal_ideal
from .lengths import (
    dimension,
    is_finite,
    local_colength,
    quotient_length,
)
from .poly import Polynomial, is_power_of
from .ring import PresentedRing

PASS = "PASS"
FAIL = "FAIL"
INAPPLICABLE = "INAPPLICABLE"

# Absolute tolerance for checks that compare against a limit estimate.
EHK_TOLERANCE = Fraction(1, 20)


@dataclass
class CheckReport:
    check_id: str
    inputs: dict
    quantities: dict
    verdict: str
    detail: str

    def to_dict(self) -> dict:
        return {
            "check": self.check_id,
            "inputs": dict(self.inputs),
            "quantities": {k: _jsonable(v) for k, v in self.quantities.items()},
            "verdict": self.verdict,
            "detail": self.detail,
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, bool) or isinstance(value, int):
        return value
    return str(value)


def _q_powers(ring: PresentedRing, q_list):
    p = ring.field.p
    for q in q_list:
        if not is_power_of(q, p):
            raise InputError("%d is not a power of the characteristic %d" % (q, p))
    return list(q_list)


def check_kunz(ring: PresentedRing, q_list) -> CheckReport:
    """lambda(R/m^[q]) >= q^d for every listed q; equality signals regularity."""
    q_list = _q_powers(ring, q_list)
    d = ring.dimension
    m = maximal_ideal(ring)
    quantities = {"d": d}
    ok = True
    all_equal = True
    for q in q_list:
        lam = local_colength(m.bracket_power(q))
        bound = q**d
        quantities["lambda_q%d" % q] = lam
        quantities["q%d_pow_d" % q] = bound
        if lam < bound:
            ok = False
        if lam != bound:
            all_equal = False
    quantities["equality_all_q"] = all_equal
    if ok:
        detail = (
            "lower bound holds at every q; equality throughout (regularity signal)"
            if all_equal
            else "lower bound holds at every q; strict at some q (singularity signal)"
        )
        verdict = PASS
    else:
        verdict = FAIL
        detail = "violated: lambda(R/m^[q]) < q^d at some listed q (see quantities)"
    return CheckReport(
        check_id="kunz",
        inputs={"ring": repr(ring), "q": [int(q) for q in q_list]},
        quantities=quantities,
        verdict=verdict,
        detail=detail,
    )


def check_flatness(ring: PresentedRing, I: Ideal, q: int) -> CheckReport:
    """Exact identity lambda(R/I^[q]) = q^d * lambda(R/I) on a polynomial ring."""
    inputs = {"ring": repr(ring), "ideal": repr(I), "q": int(q)}
    if ring.relations:
        return CheckReport(
            check_id="flatness",
            inputs=inputs,
            quantities={},
            verdict=INAPPLICABLE,
            detail="precondition unmet: the ring has relations (not the regular model)",
        )
    _q_powers(ring, [q])
    lam = local_colength(I)
    if not is_finite(lam):
        return CheckReport(
            check_id="flatness",
            inputs=inputs,
            quantities={},
            verdict=INAPPLICABLE,
            detail="precondition unmet: the ideal is not m-primary",
        )
    d = ring.nvars
    lhs = local_colength(I.bracket_power(q))
    rhs = q**d * lam
    quantities = {
        "lambda_base": lam,
        "lambda_bracket": lhs,
        "q_pow_d_times_lambda": rhs,
        "d": d,
    }
    if lhs == rhs:
        verdict, detail = PASS, "exact equality %d = %d" % (lhs, rhs)
    else:
        verdict, detail = FAIL, "violated equality: %d != %d" % (lhs, rhs)
    return CheckReport("flatness", inputs, quantities, verdict, detail)


def check_lemma21(I: Ideal, J: Ideal, q_list) -> CheckReport:
    """lambda(R/I^[q]) <= lambda(J/I)*lambda(R/m^[q]) + lambda(R/J^[q])."""
    ring = I.ring
    q_list = _q_powers(ring, q_list)
    s = quotient_length(I, J)  # raises on containment failure
    m = maximal_ideal(ring)
    quantities = {"lambda_J_mod_I": s}
    ok = True
    for q in q_list:
        lhs = local_colength(I.bracket_power(q))
        lam_m = local_colength(m.bracket_power(q))
        lam_j = local_colength(J.bracket_power(q))
        rhs = s * lam_m + lam_j
        quantities["lhs_q%d" % q] = lhs
        quantities["rhs_q%d" % q] = rhs
        if not (lhs <= rhs):
            ok = False
    if ok:
        verdict, detail = PASS, "inequality holds at every listed q"
    else:
        verdict, detail = FAIL, "violated: lhs > rhs at some q (see quantities)"
    return CheckReport(
        check_id="lemma21",
        inputs={"ring": repr(ring), "ideal_i": repr(I), "ideal_j": repr(J), "q": [int(q) for q in q_list]},
        quantities=quantities,
        verdict=verdict,
        detail=detail,
    )


def check_thm23(
    J: Ideal,
    x: Polynomial,
    minimal_primes,
    e_max: int,
    tolerance: Fraction = EHK_TOLERANCE,
) -> CheckReport:
    """e_HK(J + (x)) >= lambda(R/(J, x)) up to the printed estimate tolerance."""
    ring = J.ring
    inputs = {
        "ring": repr(ring),
        "ideal_j": repr(J),
        "param": x.render(ring.variables),
        "primes": [repr(P) for P in minimal_primes],
        "e_max": e_max,
        "tolerance": str(tolerance),
    }
    if dimension(J) != 1:
        return CheckReport(
            "thm23", inputs, {}, INAPPLICABLE, "precondition unmet: dim(R/J) != 1"
        )
    I = J + Ideal(ring, [x])
    try:
        if dimension(I) != 0:
            return CheckReport(
                "thm23", inputs, {}, INAPPLICABLE,
                "precondition unmet: x is not a parameter on R/J (dim(R/(J,x)) != 0)",
            )
    except InputError:
        return CheckReport(
            "thm23", inputs, {}, INAPPLICABLE, "precondition unmet: (J, x) is the unit ideal"
        )
    for P in minimal_primes:
        if not P.contains_ideal(J):
            return CheckReport(
                "thm23", inputs, {}, INAPPLICABLE,
                "precondition unmet: a declared minimal prime does not contain J",
            )
        if dimension(P) != 1:
            return CheckReport(
                "thm23", inputs, {}, INAPPLICABLE,
                "precondition unmet: a declared minimal prime has dim(R/P) != 1",
            )
    # Regularity of R_P and primality itself are fixture declarations; the
    # non-zerodivisor hypothesis is only checked at the parameter level.
    est = ehk_estimate(I, e_max)
    lam = local_colength(I)
    quantities = {
        "ehk_estimate": est.estimate,
        "last_ratio": est.last_ratio,
        "estimate_gap": est.gap,
        "lambda_R_mod_I": lam,
    }
    if est.estimate >= lam - tolerance:
        verdict = PASS
        detail = "estimate %s >= lambda %d - %s" % (est.estimate, lam, tolerance)
    else:
        verdict = FAIL
        detail = "violated: estimate %s < lambda %d - %s" % (est.estimate, lam, tolerance)
    return CheckReport("thm23", inputs, quantities, verdict, detail)


def check_thm33(P: Ideal, x: Polynomial, q_list) -> CheckReport:
    """q * lambda_{R_P}((R/P^[q])_P) <= lambda(R/m^[q]) for each listed q.

    t = dim(R/P) is restricted to 1 (the base case of the induction)."""
    ring = P.ring
    q_list = _q_powers(ring, q_list)
    inputs = {
        "ring": repr(ring),
        "prime": repr(P),
        "param": x.render(ring.variables),
        "q": [int(q) for q in q_list],
    }
    if dimension(P) != 1:
        return CheckReport(
            "thm33", inputs, {}, INAPPLICABLE, "precondition unmet: dim(R/P) != 1"
        )
    d = ring.dimension
    m = maximal_ideal(ring)
    quantities = {"d": d, "t": 1}
    ok = True
    for q in q_list:
        lfc = localized_frobenius_colength(P, q, x)
        rhs = local_colength(m.bracket_power(q))
        lhs = q * lfc
        quantities["localized_colength_q%d" % q] = lfc
        quantities["lhs_q%d" % q] = lhs
        quantities["rhs_q%d" % q] = rhs
        # e_HK signal pair: localized ratio vs global ratio at this q.
        quantities["ratio_local_q%d" % q] = Fraction(lfc, q ** (d - 1))
        quantities["ratio_global_q%d" % q] = Fraction(rhs, q**d)
        if not (lhs <= rhs):
            ok = False
    if ok:
        verdict, detail = PASS, "semicontinuity bound holds at every listed q"
    else:
        verdict, detail = FAIL, "violated: q*lambda_P > lambda(R/m^[q]) at some q"
    return CheckReport("thm33", inputs, quantities, verdict, detail)


def check_rescaling(ring: PresentedRing, e: int) -> CheckReport:
    """Bracket-power composition: lambda((m^[p])^[p^e]) = lambda(m^[p^(e+1)])."""
    if e < 1:
        raise InputError("rescaling check needs e >= 1")
    p = ring.field.p
    m = maximal_ideal(ring)
    lhs = local_colength(m.bracket_power(p).bracket_power(p**e))
    rhs = local_colength(m.bracket_power(p ** (e + 1)))
    quantities = {"lhs": lhs, "rhs": rhs, "p": p, "e": e}
    if lhs == rhs:
        verdict, detail = PASS, "exact equality %s = %s" % (lhs, rhs)
    else:
        verdict, detail = FAIL, "violated equality: %s != %s" % (lhs, rhs)
    return CheckReport(
        check_id="rescaling",
        inputs={"ring": repr(ring), "e": e},
        quantities=quantities,
        verdict=verdict,
        detail=detail,
    )
