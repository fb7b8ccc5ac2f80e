"""Truncated sparse formal power series with exact rational coefficients.

A :class:`Series` is a finite map degree -> Fraction together with an
exclusive truncation degree; arithmetic never consults degrees at or above
the truncation.  Sparse storage matters here because every series in this
problem is supported on a single residue class of degrees.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import binom

__all__ = ["Series"]


class Series:
    """Immutable truncated power series over Fraction."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc: int, coeffs: dict | None = None):
        if trunc < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.trunc = trunc
        clean = {}
        if coeffs:
            for deg, c in coeffs.items():
                if deg < 0:
                    raise ValueError(f"negative degree {deg}")
                if deg >= trunc:
                    continue
                c = Fraction(c)
                if c:
                    clean[deg] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "Series":
        return cls(trunc, {})

    @classmethod
    def one(cls, trunc: int) -> "Series":
        return cls(trunc, {0: 1})

    @classmethod
    def from_binomial_power(cls, sign: int, exponent: int, step: int,
                            trunc: int) -> "Series":
        """(1 + sign*y^step)^exponent, truncated.  exponent >= 0."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if exponent < 0:
            raise ValueError("exponent must be nonnegative; expand negative "
                             "powers via inv_even_power")
        if step < 1:
            raise ValueError("step must be positive")
        coeffs = {}
        for j in range(exponent + 1):
            deg = j * step
            if deg >= trunc:
                break
            c = binom(exponent, j)
            if sign < 0 and j % 2:
                c = -c
            coeffs[deg] = c
        return cls(trunc, coeffs)

    @classmethod
    def inv_even_power(cls, a: int, trunc: int) -> "Series":
        """(1 - y^2)^(-a) = sum_j C(a+j-1, j) y^(2j), for a > 0."""
        if a <= 0:
            raise ValueError("inv_even_power needs a > 0")
        coeffs = {}
        j = 0
        while 2 * j < trunc:
            coeffs[2 * j] = binom(a + j - 1, j)
            j += 1
        return cls(trunc, coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        coeffs = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            coeffs[deg] = coeffs.get(deg, 0) + c
        return Series(self.trunc, coeffs)

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        coeffs = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            coeffs[deg] = coeffs.get(deg, 0) - c
        return Series(self.trunc, coeffs)

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        trunc = self.trunc
        coeffs: dict = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                if d < trunc:
                    coeffs[d] = coeffs.get(d, 0) + c1 * c2
        return Series(trunc, coeffs)

    def scale_shift(self, factor, shift: int = 0) -> "Series":
        """factor * y^shift * self, re-truncated at the same degree."""
        if shift < 0:
            raise ValueError("shift must be nonnegative")
        factor = Fraction(factor)
        if not factor:
            return Series.zero(self.trunc)
        return Series(self.trunc, {deg + shift: c * factor
                                   for deg, c in self.coeffs.items()})

    def power(self, e: int) -> "Series":
        """self^e by repeated multiplication, e >= 0."""
        if e < 0:
            raise ValueError("negative power")
        out = Series.one(self.trunc)
        for _ in range(e):
            out = out * self
        return out

    # -- queries ------------------------------------------------------

    def coeff(self, degree: int) -> Fraction:
        if degree >= self.trunc:
            raise ValueError(
                f"coefficient at degree {degree} requested but series is "
                f"truncated at {self.trunc}")
        return self.coeffs.get(degree, Fraction(0))

    def eval_one(self) -> Fraction:
        """Sum of all stored coefficients (the value at y=1 of the truncated
        polynomial)."""
        return sum(self.coeffs.values(), Fraction(0))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Series) and self.trunc == other.trunc
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.trunc, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        terms = ", ".join(f"{deg}: {c}" for deg, c in sorted(self.coeffs.items()))
        return f"Series(trunc={self.trunc}, {{{terms}}})"

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if self.trunc != other.trunc:
            raise ValueError(
                f"truncation mismatch: {self.trunc} != {other.trunc}")
