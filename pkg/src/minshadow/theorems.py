"""Nonexistence arguments and length thresholds.

Two mechanisms rule lengths out:

* t in {1, 2, 3, 5}: the unique candidate system is inconsistent for every
  m >= 1.  The obstruction reduces to a closed-form identity: the gap
  delta = alpha_{2m+1} - beta_{2m+1,0} between the value the a-side forces
  on c_{2m+1} and the value the b-side forces equals a nonzero explicit
  product, so the two sides can never agree.

* t in {4, 6, 7, 9}: the system is uniquely solvable, but one shadow
  coefficient is an explicit polynomial-times-binomial expression whose
  sign goes (and stays) negative beyond a threshold m*, so no code exists
  for m >= m*.  Both the coefficient and the threshold are computed two
  ways: a closed polynomial form, and the alpha/beta route through the
  solved system.

Lengths with t = 0 are inconsistent outright; t = 8 and t = 10 admit a
one-parameter family of candidate enumerators (a separate bound for t = 8
comes from the doubly-even subcode, recorded in DOUBLY_EVEN_M_BOUND); and
t = 11 solves uniquely but always with a negative shadow coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binom
from .gleason import ParamSet, alpha_2m_closed, alpha_2m1_closed, beta
from .solver import build_constraints, classify, shadow_coefficient, solve

__all__ = [
    "REDUCTION_POLY", "THRESHOLD_T", "DOUBLY_EVEN_M_BOUND",
    "ReductionIdentity", "ThresholdResult", "SummaryRow",
    "reduction_identity", "check_nonexistence",
    "shadow_route", "b_closed_form", "threshold_scan",
    "yorgov_condition", "summary",
]

# t -> (quadratic coefficients of the strictly positive factor P(m))
REDUCTION_POLY = {
    1: (48, 26, 1),
    2: (24, 14, 1),
    3: (48, 30, 3),
    5: (0, 6, 3),
}

# families where nonexistence comes from a shadow coefficient turning negative
THRESHOLD_T = (4, 6, 7, 9)

# lower bounds on m for a doubly-even self-dual code of length 24m + 8l to
# meet d = 4m + 4 only with strict inequality d < 4m + 4 (i.e. the extremal
# value is unattainable from the subcode side), by residue l of length/8
DOUBLY_EVEN_M_BOUND = {0: 154, 1: 159, 2: 164}


@dataclass
class ReductionIdentity:
    t: int
    m: int
    delta: Fraction   # alpha_{2m+1} - beta_{2m+1,0}
    lhs: Fraction     # delta times its cofactor
    rhs: Fraction     # the closed-form product
    holds: bool
    delta_nonzero: bool


@dataclass
class ThresholdResult:
    t: int
    m_star: int            # first m with a negative shadow coefficient
    coefficient: str       # which coefficient goes negative
    checked_up_to: int     # closed form vs alpha/beta route agree to here
    negative_beyond: bool  # coefficient stays negative through checked_up_to
    solver_confirmed: bool # sign change reproduced from the solved system


@dataclass
class SummaryRow:
    t: int
    n_formula: str
    classification: str
    existence: str


def reduction_identity(t: int, m: int) -> ReductionIdentity:
    """Evaluate the t in {1,2,3,5} obstruction identity exactly at m."""
    if t not in REDUCTION_POLY:
        raise ValueError(f"no reduction identity for t={t}")
    if m < 1:
        raise ValueError("identity applies for m >= 1")
    p = ParamSet.from_mt(m, t)
    delta = alpha_2m1_closed(p) - beta(p, 2 * m + 1, 0)
    a2, a1, a0 = REDUCTION_POLY[t]
    P = a2 * m * m + a1 * m + a0
    if t == 1:
        lhs = delta * (2 * m + 1) * (m - 1)
        rhs = -4 * binom(5 * m - 1, m - 2) * P
    elif t == 2:
        lhs = delta * m * (2 * m + 1)
        rhs = -2 * binom(5 * m, m - 1) * P
    elif t == 3:
        lhs = delta * m * (2 * m + 1)
        rhs = -binom(5 * m, m - 1) * P
    else:
        lhs = delta * (2 * m + 1)
        rhs = Fraction(-binom(5 * m + 1, m) * P)
    return ReductionIdentity(t=t, m=m, delta=delta, lhs=lhs, rhs=Fraction(rhs),
                             holds=(lhs == rhs), delta_nonzero=(delta != 0))


def check_nonexistence(t: int, m: int, with_solver: bool = False) -> bool:
    """True when length 24m + 2t is ruled out by the reduction identity.

    For t = 1, m = 1 the cofactor (m - 1) vanishes, so the identity is
    vacuous there; the solver settles that single case directly.
    """
    ident = reduction_identity(t, m)
    if not ident.holds:
        return False
    vacuous = (t == 1 and m == 1)
    ruled_out = vacuous or ident.delta != 0
    if vacuous or with_solver:
        p = ParamSet.from_mt(m, t)
        out = solve(build_constraints(p))
        ruled_out = ruled_out and out.kind == "inconsistent"
    return ruled_out


def shadow_route(t: int, m: int):
    """The two decisive shadow coefficients via alpha/beta back substitution.

    Returns (b_{m+l-1}, b_next) where b_next is b_{m+1} for t in {4, 6, 7}
    and b_{m+2} for t = 9 (there b_{m+1} = b_{m+l-1} and b_m = 0).
    """
    if t not in THRESHOLD_T:
        raise ValueError(f"no shadow route for t={t}")
    p = ParamSet.from_mt(m, t)
    eps = 1 if t == 4 else 0
    first = -(Fraction(2) ** (t - 6)) * (alpha_2m1_closed(p) - beta(p, 2 * m + 1, eps))
    a0 = alpha_2m_closed(p)
    if t in (4, 6, 7):
        nxt = ((a0 - beta(p, 2 * m, eps) - beta(p, 2 * m, m) * first)
               / beta(p, 2 * m, m + 1))
    else:
        nxt = ((a0 - beta(p, 2 * m, 0) - beta(p, 2 * m, m + 1) * first)
               / beta(p, 2 * m, m + 2))
    return first, nxt


def b_closed_form(t: int, m: int):
    """Closed polynomial forms for the same two coefficients."""
    if t == 4:
        first = Fraction(6 * m + 1, m) * binom(5 * m, m - 1)
        nxt = Fraction(16 * (6 * m + 1) * (-4 * m**3 + 209 * m**2 + 141 * m + 24),
                       5 * m * (m + 1) * (4 * m + 3)) * binom(5 * m + 1, m - 1)
    elif t == 6:
        first = Fraction(12 * m + 5, 2 * m + 1) * binom(5 * m + 1, m)
        nxt = Fraction(2 * (12 * m + 5) * (-32 * m**4 + 4496 * m**3 + 4242 * m**2
                                           + 1257 * m + 117),
                       (5 * m + 1) * (4 * m + 3) * (4 * m + 5) * (2 * m + 3)) \
            * binom(5 * m + 2, m + 1)
    elif t == 7:
        first = Fraction(168 * m * m + 164 * m + 39, (2 * m + 1) * (4 * m + 3)) \
            * binom(5 * m + 1, m)
        nxt = Fraction(2 * (-5376 * m**6 + 772352 * m**5 + 1663728 * m**4
                            + 1386448 * m**3 + 557970 * m**2 + 107643 * m + 7875),
                       (4 * m + 3) * (4 * m + 5) * (2 * m + 3) * (4 * m + 7)
                       * (5 * m + 1)) * binom(5 * m + 2, m + 1)
    elif t == 9:
        first = Fraction((24 * m + 17) * (17 * m + 10), (2 * m + 1) * (4 * m + 5)) \
            * binom(5 * m + 2, m + 1)
        nxt = Fraction(2 * (24 * m + 17) * (-544 * m**5 + 83696 * m**4
                                            + 184210 * m**3 + 149089 * m**2
                                            + 52809 * m + 6930),
                       (4 * m + 5) * (2 * m + 3) * (4 * m + 7) * (4 * m + 9)
                       * (5 * m + 2)) * binom(5 * m + 3, m + 2)
    else:
        raise ValueError(f"no closed forms for t={t}")
    return first, nxt


def threshold_scan(t: int, m_max: int = 200, with_solver: bool = True) -> ThresholdResult:
    """Locate the nonexistence threshold m* for a t in {4, 6, 7, 9} family.

    For every m up to m_max the closed form and the alpha/beta route must
    agree exactly, the decisive coefficient must be nonnegative below m*
    and negative from m* on.  With with_solver=True the sign change is also
    reproduced from the fully solved system at m* - 1 and m*.
    """
    if t not in THRESHOLD_T:
        raise ValueError(f"no threshold scan for t={t}")
    m_star = None
    negative_beyond = True
    for m in range(1, m_max + 1):
        first_r, next_r = shadow_route(t, m)
        first_c, next_c = b_closed_form(t, m)
        if first_r != first_c or next_r != next_c:
            raise AssertionError(f"route mismatch at t={t}, m={m}")
        if next_r < 0:
            if m_star is None:
                m_star = m
        elif m_star is not None:
            negative_beyond = False
    if m_star is None:
        raise AssertionError(f"no sign change up to m_max={m_max} for t={t}")

    solver_confirmed = False
    if with_solver:
        signs = []
        for m in (m_star - 1, m_star):
            p = ParamSet.from_mt(m, t)
            out = solve(build_constraints(p))
            if out.kind != "unique":
                break
            jj = (m + 1) if t in (4, 6, 7) else (m + 2)
            b = shadow_coefficient(p, out.c, jj)
            _, expected = b_closed_form(t, m)
            if b != expected:
                break
            signs.append(b)
        solver_confirmed = len(signs) == 2 and signs[0] >= 0 and signs[1] < 0

    return ThresholdResult(
        t=t, m_star=m_star,
        coefficient="b_{m+1}" if t in (4, 6, 7) else "b_{m+2}",
        checked_up_to=m_max, negative_beyond=negative_beyond,
        solver_confirmed=solver_confirmed)


def yorgov_condition(m: int) -> bool:
    """Parity condition a putative length-24m extremal code must satisfy:
    m even and C(5m, m) odd.  Recorded for annotation only; lengths 24m
    are already inconsistent with a minimal shadow."""
    return m % 2 == 0 and binom(5 * m, m) % 2 == 1


def summary(m_max: int = 4) -> list:
    """One row per residue class t, combining the solver verdicts for
    m <= m_max with the stored asymptotic facts."""
    EXISTENCE = {
        0: "none for any m (system inconsistent)",
        1: "none for any m (reduction identity; m=1 by direct solve)",
        2: "none for any m (reduction identity)",
        3: "none for any m (reduction identity)",
        4: "none for m >= 53 (b_{m+1} < 0); unique candidate below",
        5: "none for any m (reduction identity)",
        6: "none for m >= 142 (b_{m+1} < 0); unique candidate below",
        7: "none for m >= 146 (b_{m+1} < 0); unique candidate below",
        8: "none for m >= 164 (doubly-even subcode bound)",
        9: "none for m >= 157 (b_{m+2} < 0); unique candidate below",
        10: "open for large m",
        11: "none for any m (m=0: unique candidate has shadow weight 7, "
            "not 3; m>=1: negative shadow coefficient)",
    }
    rows = []
    for t in range(12):
        verdicts = []
        for m in range(0, m_max + 1):
            n = 24 * m + 2 * t
            if n <= 0:
                verdicts.append("-")
                continue
            _, _, out = classify(n)
            code = {"inconsistent": "I", "unique": "U", "family": "F"}[out.kind]
            if out.kind == "family":
                code += str(out.dimension)
            verdicts.append(code)
        rows.append(SummaryRow(
            t=t, n_formula=f"n = 24m + {2 * t}",
            classification=" ".join(f"m={m}:{v}" for m, v in enumerate(verdicts)),
            existence=EXISTENCE[t]))
    return rows
