"""Gleason-basis machinery for singly-even self-dual codes.

The weight enumerator W and shadow enumerator S of a singly-even self-dual
code of length n = 24m + 8l + 2r share one coefficient vector c_0..c_k
(k = floor(n/8) = 3m + l) with respect to the basis

    W:  (1+y^2)^(n/2-4i) * (y^2 (1-y^2)^2)^i
    S:  (-1)^i 2^(n/2-6i) * y^(n/2-4i) * (1-y^4)^(2i)

This module provides the basis expansions, the change-of-basis
coefficients alpha (c from the low-order W coefficients) and beta (c from
the low-order S coefficients), closed-form evaluations of the distinguished
values alpha_{2m,0} and alpha_{2m+1,0}, and the per-family product forms
used as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul

from .exact import binom, binom_row, two_power
from .series import Series

__all__ = [
    "ParamSet", "basis_W", "basis_S", "weight_basis_coeff",
    "shadow_basis_coeff", "weight_basis_column", "alpha_direct",
    "alpha_2m1_closed", "alpha_2m_closed", "alpha_2m1_product",
    "alpha_2m_product", "beta", "basis_matrices",
]


@dataclass(frozen=True)
class ParamSet:
    """The decomposition n = 24m + 8l + 2r with t = 4l + r.

    l runs over 0..2 and r over 0..3, which makes the decomposition of an
    even length unique; d is the extremal minimum distance for that length
    (4m+6 for n = 24m+22, else 4m+4); k = floor(n/8) = 3m + l indexes the
    basis.
    """

    n: int
    m: int
    l: int
    r: int
    t: int
    d: int
    k: int

    @classmethod
    def from_length(cls, n: int) -> "ParamSet":
        if n <= 0 or n % 2:
            raise ValueError(f"length must be a positive even integer, got {n}")
        m, rem = divmod(n, 24)
        t = rem // 2
        l, r = divmod(t, 4)
        d = 4 * m + 6 if t == 11 else 4 * m + 4
        return cls(n=n, m=m, l=l, r=r, t=t, d=d, k=3 * m + l)

    @classmethod
    def from_mt(cls, m: int, t: int) -> "ParamSet":
        if not 0 <= t <= 11:
            raise ValueError(f"t must be in 0..11, got {t}")
        if m < 0:
            raise ValueError(f"m must be nonnegative, got {m}")
        return cls.from_length(24 * m + 2 * t)

    @property
    def half(self) -> int:
        return self.n // 2

    def shadow_weight(self, j: int) -> int:
        """The weight carried by the shadow coefficient b_j: 4j + r."""
        return 4 * j + self.r

    def min_shadow_weight(self) -> int:
        """Shadow minimum weight of a code with minimal shadow: r, or 4
        when r = 0."""
        return self.r if self.r else 4


def _check_index(p: ParamSet, i: int):
    if not 0 <= i <= p.k:
        raise ValueError(f"basis index {i} out of range 0..{p.k} for n={p.n}")


def basis_W(p: ParamSet, i: int, trunc: int) -> Series:
    """i-th weight-enumerator basis element, truncated."""
    _check_index(p, i)
    a = Series.from_binomial_power(1, p.half - 4 * i, 2, trunc)
    g = Series.from_binomial_power(-1, 2, 2, trunc).scale_shift(1, 2)
    return a * g.power(i)


def basis_S(p: ParamSet, i: int, trunc: int) -> Series:
    """i-th shadow basis element, truncated.

    The 2-power 2^(n/2-6i) is kept as an exact Fraction; for i near k it is
    smaller than 1.
    """
    _check_index(p, i)
    shift = p.half - 4 * i
    if shift >= trunc:
        return Series.zero(trunc)
    body = Series.from_binomial_power(-1, 2 * i, 4, trunc)
    factor = two_power(p.half - 6 * i)
    if i % 2:
        factor = -factor
    return body.scale_shift(factor, shift)


def weight_basis_coeff(p: ParamSet, i: int, j: int) -> int:
    """Coefficient of y^(2j) in basis_W(i), in closed form.

    Equals [y^(2(j-i))] (1+y^2)^(n/2-4i) (1-y^2)^(2i); zero for j < i, and
    1 on the diagonal j = i.
    """
    _check_index(p, i)
    u = j - i
    if u < 0:
        return 0
    e = p.half - 4 * i
    tot = 0
    for s in range(min(2 * i, u) + 1):
        c = binom(2 * i, s) * binom(e, u - s)
        tot += -c if s & 1 else c
    return tot


def shadow_basis_coeff(p: ParamSet, i: int, j: int) -> Fraction:
    """Coefficient of y^(4j+r) in basis_S(i), in closed form."""
    _check_index(p, i)
    u = j - (p.k - i)
    if u < 0 or u > 2 * i:
        return Fraction(0)
    c = binom(2 * i, u)
    val = two_power(p.half - 6 * i) * c
    # (-1)^i from the basis times (-1)^u from (1-y^4)^(2i)
    return -val if (i + u) & 1 else val


def weight_basis_column(p: ParamSet, i: int, jmax: int) -> list[int]:
    """[y^(2j)] basis_W(i) for j = i..jmax, as a flat list.

    Convolution of a signed Pascal row against an incrementally computed
    Pascal row; this is the hot path of constraint building, so it avoids
    per-entry binomial recomputation.
    """
    _check_index(p, i)
    if jmax < i:
        return []
    length = jmax - i + 1
    e = p.half - 4 * i
    signed = [(-c if s & 1 else c)
              for s, c in enumerate(binom_row(2 * i, min(2 * i, length - 1) + 1))]
    vrev = binom_row(e, length)[::-1]
    top = length - 1
    out = []
    for u in range(length):
        window = vrev[top - u: top - u + len(signed)]
        out.append(sum(map(mul, signed, window)))
    return out


def alpha_direct(p: ParamSet, i: int) -> Fraction:
    """alpha_{i,0}: c_i as a multiple of the extraction coefficient

        -(n / 2i) * [y^(i-1)] (1+y)^(-n/2-1+4i) (1-y)^(-2i).

    The negative exponents are rewritten exactly one of two ways, matching
    the t <= 5 / t > 5 split used for i = 2m+1:

        q >= p:  (1-y^2)^(-q) (1+y)^(q-p)
        q <  p:  (1-y^2)^(-p) (1-y)^(p-q)

    with p = n/2+1-4i and q = 2i (p >= 1 holds for every i <= k).
    """
    if not 1 <= i <= p.k:
        raise ValueError(f"alpha index {i} out of range 1..{p.k}")
    pp = p.half + 1 - 4 * i
    q = 2 * i
    if pp < 1:
        raise AssertionError("exponent rewrite requires p >= 1")
    if q >= pp:
        a, b, sign = q, q - pp, 1
    else:
        a, b, sign = pp, pp - q, -1
    deg = i - 1
    total = 0
    for s in range(min(b, deg) + 1):
        if (deg - s) % 2:
            continue
        j = (deg - s) // 2
        c = binom(b, s) * binom(a + j - 1, j)
        if sign < 0 and s & 1:
            c = -c
        total += c
    return Fraction(-p.n, 2 * i) * total


def alpha_2m1_closed(p: ParamSet) -> Fraction:
    """alpha_{2m+1,0} by the binomial-sum closed form (m >= 1).

    t <= 5:  -((12m+t)/(2m+1)) sum_s C(5-t, 2s) C(5m+1-s, m-s)
    t >  5:  -((12m+t)/(2m+1)) sum_s C(t-5, 2s) C(5m+t-4-s, m-s)
    """
    m, t = p.m, p.t
    if m < 1:
        return alpha_direct(p, 2 * m + 1)
    if t <= 5:
        tot = sum(binom(5 - t, 2 * s) * binom(5 * m + 1 - s, m - s)
                  for s in range((5 - t) // 2 + 1))
    else:
        tot = sum(binom(t - 5, 2 * s) * binom(5 * m + t - 4 - s, m - s)
                  for s in range((t - 5) // 2 + 1))
    return Fraction(-(12 * m + t), 2 * m + 1) * tot


def alpha_2m_closed(p: ParamSet) -> Fraction:
    """alpha_{2m,0} by the binomial-sum closed form (m >= 1):

    ((12m+t)/(2m)) sum_{s=1}^{floor((t+2)/2)} C(t+1, 2s-1) C(5m+t-s, m-s)
    """
    m, t = p.m, p.t
    if m < 1:
        raise ValueError("alpha_2m_closed needs m >= 1")
    tot = sum(binom(t + 1, 2 * s - 1) * binom(5 * m + t - s, m - s)
              for s in range(1, (t + 2) // 2 + 1))
    return Fraction(12 * m + t, 2 * m) * tot


# Per-family product forms for alpha_{2m+1}(24m+2t), usable where the
# denominator factors are nonzero.  Entry: (numer poly in m, denom poly in m,
# binomial arguments as (a-coeffs, b-coeffs) linear forms in m).
def alpha_2m1_product(p: ParamSet) -> Fraction:
    """Tabulated per-family product form of alpha_{2m+1}; raises ValueError
    for the small m where the printed denominator vanishes."""
    m, t = p.m, p.t
    forms = {
        1: (lambda: Fraction(-(12 * m + 1) * (56 * m + 4),
                             (2 * m + 1) * (m - 1)) * binom(5 * m - 1, m - 2),
            m >= 2),
        2: (lambda: Fraction(-2 * (6 * m + 1) * (8 * m + 1),
                             m * (2 * m + 1)) * binom(5 * m, m - 1), m >= 1),
        3: (lambda: Fraction(-3 * (4 * m + 1) * (6 * m + 1),
                             m * (2 * m + 1)) * binom(5 * m, m - 1), m >= 1),
        4: (lambda: Fraction(-4 * (3 * m + 1), 2 * m + 1)
            * binom(5 * m + 1, m), True),
        5: (lambda: Fraction(-(12 * m + 5), 2 * m + 1)
            * binom(5 * m + 1, m), True),
        6: (lambda: Fraction(-6) * binom(5 * m + 2, m), True),
        7: (lambda: Fraction(-3 * (12 * m + 7), m)
            * binom(5 * m + 2, m - 1), m >= 1),
        8: (lambda: Fraction(-16 * (3 * m + 2), m)
            * binom(5 * m + 3, m - 1), m >= 1),
        9: (lambda: Fraction(-12 * (7 * m + 5) * (4 * m + 3),
                             m * (m - 1)) * binom(5 * m + 3, m - 2), m >= 2),
        10: (lambda: Fraction(-20 * (6 * m + 5) * (4 * m + 3),
                              m * (m - 1)) * binom(5 * m + 4, m - 2), m >= 2),
        11: (lambda: Fraction(-6 * (12 * m + 11) * (6 * m + 5) * (8 * m + 7),
                              m * (m - 1) * (m - 2))
             * binom(5 * m + 4, m - 3), m >= 3),
    }
    if t not in forms:
        raise ValueError(f"no tabulated product form for t={t}")
    fn, ok = forms[t]
    if not ok:
        raise ValueError(f"product form for t={t} undefined at m={m}")
    return fn()


def alpha_2m_product(p: ParamSet) -> Fraction:
    """Tabulated per-family product form of alpha_{2m}; defined only for the
    six families with an even-index table entry and m large enough."""
    m, t = p.m, p.t
    forms = {
        4: (lambda: Fraction(8 * (4 * m + 1) * (11 * m + 3) * (3 * m + 1),
                             m * (m - 1) * (m - 2))
            * binom(5 * m + 1, m - 3), m >= 3),
        6: (lambda: Fraction(24 * (116 * m * m + 79 * m + 15)
                             * (1 + 2 * m) ** 2,
                             m * (m - 1) * (m - 2) * (m - 3))
            * binom(5 * m + 2, m - 4), m >= 4),
        7: (lambda: Fraction(24 * (1 + 2 * m) * (12 * m + 7)
                             * (28 * m * m + 22 * m + 5),
                             m * (m - 1) * (m - 2) * (m - 3))
            * binom(5 * m + 3, m - 4), m >= 4),
        8: (lambda: Fraction(16 * (3 * m + 2) * (2 * m + 1)
                             * (1216 * m**3 + 1956 * m**2 + 1073 * m + 210),
                             m * (m - 1) * (m - 2) * (m - 3) * (m - 4))
            * binom(5 * m + 3, m - 5), m >= 5),
        9: (lambda: Fraction(120 * (2 * m + 1) * (4 * m + 3)
                             * (176 * m**3 + 308 * m**2 + 189 * m + 42),
                             m * (m - 1) * (m - 2) * (m - 3) * (m - 4))
            * binom(5 * m + 4, m - 5), m >= 5),
        10: (lambda: Fraction(16 * (6 * m + 5) * (2 * m + 1) * (4 * m + 3)
                              * (1592 * m**3 + 3280 * m**2 + 2363 * m + 630),
                              m * (m - 1) * (m - 2) * (m - 3) * (m - 4)
                              * (m - 5))
             * binom(5 * m + 4, m - 6), m >= 6),
    }
    if t not in forms:
        raise ValueError(f"no tabulated product form for t={t}")
    fn, ok = forms[t]
    if not ok:
        raise ValueError(f"product form for t={t} undefined at m={m}")
    return fn()


def beta(p: ParamSet, i: int, j: int) -> Fraction:
    """beta_{ij} = (-1)^i 2^(-n/2+6i) ((k-j)/i) C(k+i-j-1, k-i-j).

    Vanishes whenever the binomial does (in particular for j > k - i).
    """
    if i < 1:
        raise ValueError("beta needs i >= 1")
    if j < 0:
        raise ValueError("beta needs j >= 0")
    k = p.k
    if k + i - j - 1 < 0:
        return Fraction(0)
    c = binom(k + i - j - 1, k - i - j)
    if not c:
        return Fraction(0)
    val = two_power(-p.half + 6 * i) * Fraction(k - j, i) * c
    return -val if i & 1 else val


def shadow_matrix_inverse_row(p: ParamSet, i: int) -> list[Fraction]:
    """Row i of B^(-1), where B[j][i] = [y^(4j+r)] basis_S(i).

    B is anti-triangular, so back substitution along anti-diagonals gives
    the row directly; this is the independent route against which the
    closed beta formula is checked.
    """
    _check_index(p, i)
    k = p.k
    # solve x^T B = e_i^T, i.e. sum_j x_j B[j][i'] = delta_{i,i'},
    # working down from i' = k (whose column has a single entry at j = k - i')
    x = [Fraction(0)] * (k + 1)
    for i2 in range(k + 1):
        # column i2 is supported on j >= k - i2; its leading entry pins x_{k-i2}
        jlead = k - i2
        acc = Fraction(1 if i2 == i else 0)
        for j in range(jlead + 1, k + 1):
            if x[j]:
                acc -= x[j] * shadow_basis_coeff(p, i2, j)
        x[jlead] = acc / shadow_basis_coeff(p, i2, jlead)
    return x


def basis_matrices(p: ParamSet):
    """(A, B): the square change-of-basis matrices on the low-order range.

    A[j][i] = [y^(2j)] basis_W(i) and B[j][i] = [y^(4j+r)] basis_S(i), both
    for 0 <= i, j <= k.  A is lower triangular with unit diagonal; B is
    anti-triangular (B[j][i] = 0 for i < k - j) with 2-power anti-diagonal,
    so both are invertible; the inverse of B reproduces beta row by row.
    """
    k = p.k
    A = [[weight_basis_coeff(p, i, j) for i in range(k + 1)]
         for j in range(k + 1)]
    B = [[shadow_basis_coeff(p, i, j) for i in range(k + 1)]
         for j in range(k + 1)]
    return A, B
