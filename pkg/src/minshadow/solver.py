"""Exact constraint systems for extremal codes with minimal shadow.

Given a length n = 24m + 8l + 2r, the extremal and minimal-shadow
hypotheses pin down the low-order coefficients of W and S:

    a_0 = 1,  a_j = 0 for 1 <= j <= 2m+1   (2m+2 when n = 24m+22)
    r > 0, m >= 1:  b_0 = 1,  b_1 = ... = b_{m-1} = 0
    r = 1:          additionally b_m = 0
    r = 0:          b_0 = 0;  for m >= 2 also b_1 = 1, b_2 = ... = b_{m-1} = 0

Each condition is one linear row over the shared Gleason coefficients c_i.
Solving the system exactly classifies the length: inconsistent (no such
weight enumerator), unique, or a parametric family.

Two small departures from the listing above, both forced by Theorem 1 at
the boundary: for m = 0, r = 1 the row b_0 = 1 still applies (weight r = 1
sits below d/2 = 2), and for r = 0 the row b_0 = 0 applies at every m
(B_0 = 0 unconditionally).  The b_1 = 1 row genuinely needs m >= 2: the
bound forcing B_4 <= 1 fails for d = 8.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .gleason import (ParamSet, beta, shadow_basis_coeff, weight_basis_column)

__all__ = [
    "Row", "ConstraintSystem", "SolveOutcome", "WeightEnumerator",
    "ScreenReport", "build_constraints", "solve", "classify",
    "enumerators_from_c", "shadow_coefficient", "screen",
]


@dataclass
class Row:
    tag: str
    coeffs: dict            # column -> int | Fraction, zeros omitted
    rhs: Fraction


@dataclass
class ConstraintSystem:
    params: ParamSet
    n_unknowns: int
    rows: list

    def row_tags(self) -> list:
        return [row.tag for row in self.rows]


@dataclass
class SolveOutcome:
    """inconsistent / unique / family classification of a system."""

    kind: str                       # "inconsistent" | "unique" | "family"
    c: list | None = None           # unique: the solved coefficient vector
    witness: list | None = None     # inconsistent: tags of a failing combo
    dimension: int = 0              # family: number of free parameters
    particular: list | None = None  # family: one exact solution
    basis: list = field(default_factory=list)  # family: null-space basis


@dataclass
class WeightEnumerator:
    """Exact enumerator; coefficients are Fractions so that infeasible
    (non-integral) solutions are representable and reportable."""

    n: int
    coeffs: dict  # weight -> Fraction, zeros omitted

    def coeff(self, w: int) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def min_weight(self) -> int | None:
        nz = [w for w in self.coeffs if w > 0]
        return min(nz) if nz else None


CHECK_NAMES = [
    "shadow_symmetric",        # B_w = B_{n-w}
    "shadow_support",          # B_w = 0 unless w = n/2 (mod 4)
    "shadow_b0_zero",          # B_0 = 0
    "shadow_low_multiplicity", # B_w <= 1 for w < d/2
    "shadow_dhalf_bound",      # B_{d/2} <= 2n/d
    "shadow_single_low",       # at most one nonzero B_w for w < (d+4)/2
    "coeffs_integral",         # all W and S coefficients in Z
    "coeffs_nonnegative",      # all W and S coefficients >= 0
]


@dataclass
class ScreenReport:
    verdicts: dict             # check name -> bool
    first_violation: tuple | None = None  # (check name, weight) or None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def build_constraints(p: ParamSet, with_remark2: bool = True) -> ConstraintSystem:
    """Assemble the extremal + minimal-shadow rows for parameter set p."""
    k = p.k
    amax = 2 * p.m + 2 if p.t == 11 else 2 * p.m + 1
    amax = min(amax, p.half)
    rows = [Row(f"a{j}", {}, Fraction(1 if j == 0 else 0))
            for j in range(amax + 1)]
    for i in range(min(amax, k) + 1):
        col = weight_basis_column(p, i, amax)
        for u, val in enumerate(col):
            if val:
                rows[i + u].coeffs[i] = val

    bspecs = []
    m, r = p.m, p.r
    if r > 0:
        if m >= 1:
            bspecs.append((0, 1))
            bspecs.extend((j, 0) for j in range(1, m))
            if with_remark2 and r == 1:
                bspecs.append((m, 0))
        elif r == 1:
            bspecs.append((0, 1))
    else:
        bspecs.append((0, 0))
        if m >= 2:
            bspecs.append((1, 1))
            bspecs.extend((j, 0) for j in range(2, m))
    for j, rhs in bspecs:
        coeffs = {}
        for i in range(max(0, k - j), k + 1):
            val = shadow_basis_coeff(p, i, j)
            if val:
                coeffs[i] = val
        rows.append(Row(f"b{j}", coeffs, Fraction(rhs)))
    return ConstraintSystem(params=p, n_unknowns=k + 1, rows=rows)


def _reduce_row(coeffs, rhs, tags, pivots):
    """Reduce one row against the current pivot set (in place); returns the
    pivot column if the row survives, else None."""
    while coeffs:
        c = min(coeffs)
        piv = pivots.get(c)
        if piv is None:
            return c
        pc, prhs, ptags = piv
        pv = pc[c]
        val = coeffs.pop(c)
        f = val if pv == 1 else Fraction(val) / pv
        for cc, v in pc.items():
            if cc == c:
                continue
            nv = coeffs.get(cc, 0) - f * v
            if nv:
                coeffs[cc] = nv
            else:
                coeffs.pop(cc, None)
        rhs[0] -= f * prhs
        tags |= ptags
    return None


def solve(system: ConstraintSystem) -> SolveOutcome:
    """Deterministic exact elimination (left-looking, rows in given order,
    pivot on each row's leading column)."""
    pivots = {}  # col -> (coeffs, rhs, tags)
    for row in system.rows:
        coeffs = dict(row.coeffs)
        rhs = [Fraction(row.rhs)]
        tags = {row.tag}
        col = _reduce_row(coeffs, rhs, tags, pivots)
        if col is None:
            if rhs[0]:
                return SolveOutcome(kind="inconsistent", witness=sorted(tags))
        else:
            pivots[col] = (coeffs, rhs[0], tags)

    ncols = system.n_unknowns
    free = [c for c in range(ncols) if c not in pivots]

    def back_substitute(rhs_of, free_values):
        sol = [Fraction(0)] * ncols
        for c, v in free_values.items():
            sol[c] = Fraction(v)
        for c in sorted(pivots, reverse=True):
            pc, prhs, _ = pivots[c]
            acc = Fraction(rhs_of(prhs))
            for cc, v in pc.items():
                if cc != c and sol[cc]:
                    acc -= v * sol[cc]
            sol[c] = acc / pc[c]
        return sol

    if not free:
        sol = back_substitute(lambda rhs: rhs, {})
        return SolveOutcome(kind="unique", c=sol)

    particular = back_substitute(lambda rhs: rhs, {c: 0 for c in free})
    basis = []
    for f0 in free:
        vec = back_substitute(lambda rhs: 0,
                              {c: (1 if c == f0 else 0) for c in free})
        basis.append(vec)
    return SolveOutcome(kind="family", dimension=len(free),
                        particular=particular, basis=basis)


def classify(n: int, with_remark2: bool = True):
    """Convenience: parameters, system and outcome for a length."""
    p = ParamSet.from_length(n)
    system = build_constraints(p, with_remark2=with_remark2)
    return p, system, solve(system)


def enumerators_from_c(p: ParamSet, c: list):
    """Expand the full W and S enumerators from a coefficient vector."""
    if len(c) != p.k + 1:
        raise ValueError(f"expected {p.k + 1} coefficients, got {len(c)}")
    half = p.half
    a = [Fraction(0)] * (half + 1)
    for i, ci in enumerate(c):
        if not ci:
            continue
        for u, val in enumerate(weight_basis_column(p, i, half)):
            if val:
                a[i + u] += ci * val
    W = WeightEnumerator(p.n, {2 * j: v for j, v in enumerate(a) if v})

    nb = 6 * p.m + 2 * p.l
    S_coeffs = {}
    for j in range(nb + 1):
        v = shadow_coefficient(p, c, j)
        if v:
            S_coeffs[p.shadow_weight(j)] = v
    S = WeightEnumerator(p.n, S_coeffs)
    return W, S


def shadow_coefficient(p: ParamSet, c: list, j: int) -> Fraction:
    """b_j = [y^(4j+r)] S for the given coefficient vector."""
    tot = Fraction(0)
    for i in range(max(0, p.k - j), p.k + 1):
        if c[i]:
            tot += shadow_basis_coeff(p, i, j) * c[i]
    return tot


def screen(p: ParamSet, W: WeightEnumerator, S: WeightEnumerator) -> ScreenReport:
    """All shadow-enumerator checks plus integrality and nonnegativity."""
    n, d = p.n, p.d
    verdicts = {name: True for name in CHECK_NAMES}
    violations = []

    for w, v in sorted(S.coeffs.items()):
        if v != S.coeff(n - w):
            verdicts["shadow_symmetric"] = False
            violations.append(("shadow_symmetric", w))
            break
    for w, v in sorted(S.coeffs.items()):
        if w % 4 != (n // 2) % 4:
            verdicts["shadow_support"] = False
            violations.append(("shadow_support", w))
            break
    if S.coeff(0):
        verdicts["shadow_b0_zero"] = False
        violations.append(("shadow_b0_zero", 0))
    for w, v in sorted(S.coeffs.items()):
        if w < Fraction(d, 2) and v > 1:
            verdicts["shadow_low_multiplicity"] = False
            violations.append(("shadow_low_multiplicity", w))
            break
    if d % 2 == 0 and S.coeff(d // 2) > Fraction(2 * n, d):
        verdicts["shadow_dhalf_bound"] = False
        violations.append(("shadow_dhalf_bound", d // 2))
    low = [w for w, v in S.coeffs.items() if w < Fraction(d + 4, 2) and v]
    if len(low) > 1:
        verdicts["shadow_single_low"] = False
        violations.append(("shadow_single_low", sorted(low)[1]))

    for enum in (W, S):
        for w, v in sorted(enum.coeffs.items()):
            if v.denominator != 1:
                if verdicts["coeffs_integral"]:
                    verdicts["coeffs_integral"] = False
                    violations.append(("coeffs_integral", w))
                break
    for enum in (W, S):
        for w, v in sorted(enum.coeffs.items()):
            if v < 0:
                if verdicts["coeffs_nonnegative"]:
                    verdicts["coeffs_nonnegative"] = False
                    violations.append(("coeffs_nonnegative", w))
                break

    first = None
    if violations:
        first = min(violations, key=lambda item: (item[1], CHECK_NAMES.index(item[0])))
    return ScreenReport(verdicts=verdicts, first_violation=first)
