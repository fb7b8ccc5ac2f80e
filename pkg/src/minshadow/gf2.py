"""Concrete binary codes as a check on the analytic machinery.

Codewords are ints (bit i = coordinate i).  Everything here works by
honest enumeration of the span, so it is restricted to dimensions where
2^k is small; that is the point — an independent, assumption-free way to
produce weight and shadow enumerators for explicit generator matrices,
which must then match the unique solutions of the constraint systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .solver import WeightEnumerator, classify, enumerators_from_c

__all__ = [
    "Code", "parse_code", "row_echelon", "kernel_basis",
    "cross_validate", "CrossValidation",
]

MAX_ENUM_DIMENSION = 24


def parse_code(text: str) -> "Code":
    """Parse a generator matrix: one row of 0/1 per line, '#' comments and
    blank lines ignored.  All rows must have the same length."""
    rows = []
    n = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip().replace(" ", "")
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise ValueError(f"bad generator row: {raw!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise ValueError("generator rows have unequal lengths")
        rows.append(int(line[::-1], 2))
    if not rows:
        raise ValueError("no generator rows found")
    return Code(n=n, generators=rows)


def row_echelon(rows: list) -> list:
    """Reduced row echelon basis of the rowspace (bitmask rows)."""
    basis = []  # (pivot bit, row), pivots decreasing
    for row in rows:
        for pivot, b in basis:
            if row & pivot:
                row ^= b
        if row:
            pivot = 1 << (row.bit_length() - 1)
            basis = [(pv, b ^ row if b & pivot else b) for pv, b in basis]
            basis.append((pivot, row))
    basis.sort(reverse=True)
    return [b for _, b in basis]


def kernel_basis(rows: list, n: int) -> list:
    """Basis of {x in GF(2)^n : x . row = 0 for every row}."""
    basis = row_echelon(rows)
    pivots = [b.bit_length() - 1 for b in basis]
    pivot_set = set(pivots)
    free = [i for i in range(n) if i not in pivot_set]
    out = []
    for f in free:
        vec = 1 << f
        for p, b in zip(pivots, basis):
            if bin(b & vec).count("1") % 2:
                vec |= 1 << p
        out.append(vec)
    return out


@dataclass
class Code:
    n: int
    generators: list

    def basis(self) -> list:
        return row_echelon(self.generators)

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def words(self):
        """Every codeword, by enumerating the span (2^k words)."""
        basis = self.basis()
        k = len(basis)
        if k > MAX_ENUM_DIMENSION:
            raise ValueError(f"dimension {k} too large to enumerate")
        word = 0
        yield word
        for g in range(1, 1 << k):
            word ^= basis[(g & -g).bit_length() - 1]  # Gray code step
            yield word

    def weight_enumerator(self) -> WeightEnumerator:
        counts = {}
        for w in self.words():
            wt = bin(w).count("1")
            counts[wt] = counts.get(wt, 0) + 1
        return WeightEnumerator(self.n, {w: Fraction(v) for w, v in counts.items()})

    def min_distance(self) -> int:
        return min(bin(w).count("1") for w in self.words() if w)

    def is_self_orthogonal(self) -> bool:
        basis = self.basis()
        return all(bin(a & b).count("1") % 2 == 0
                   for i, a in enumerate(basis) for b in basis[i:])

    def is_self_dual(self) -> bool:
        return self.is_self_orthogonal() and 2 * self.dimension == self.n

    def is_doubly_even(self) -> bool:
        return all(bin(b).count("1") % 4 == 0 for b in self.basis())

    def is_singly_even(self) -> bool:
        """Self-orthogonal (hence all even weights) but not doubly even."""
        return self.is_self_orthogonal() and not self.is_doubly_even()

    def doubly_even_subcode(self) -> "Code":
        """The codewords of weight divisible by 4.

        For a self-dual code, wt/2 mod 2 is linear, so this is a subcode of
        index 1 or 2; found by adjusting the basis rather than enumerating.
        """
        basis = self.basis()
        odd = [b for b in basis if bin(b).count("1") % 2]
        if odd:
            raise ValueError("code has odd-weight words")
        bad = [b for b in basis if bin(b).count("1") % 4]
        if not bad:
            return Code(self.n, list(basis))
        pivot = bad[0]
        rows = [b if bin(b).count("1") % 4 == 0 else b ^ pivot
                for b in basis if b != pivot]
        sub = Code(self.n, rows)
        if not sub.is_doubly_even():
            raise ValueError("weight mod 4 is not linear on this code")
        return sub

    def shadow_enumerator(self) -> WeightEnumerator:
        """Weight enumerator of S = C_0-perp minus C, with C_0 the doubly
        even subcode.  Requires a singly even self-dual code."""
        if not self.is_self_dual():
            raise ValueError("shadow is defined for self-dual codes")
        sub = self.doubly_even_subcode()
        if sub.dimension == self.dimension:
            raise ValueError("code is doubly even; its shadow is the code itself")
        dual = Code(self.n, kernel_basis(sub.basis(), self.n))
        counts = {}
        own = set(self.words())
        for w in dual.words():
            if w in own:
                continue
            wt = bin(w).count("1")
            counts[wt] = counts.get(wt, 0) + 1
        return WeightEnumerator(self.n, {w: Fraction(v) for w, v in counts.items()})


@dataclass
class CrossValidation:
    n: int
    self_dual: bool
    singly_even: bool
    min_distance: int
    expected_distance: int
    weight_match: bool
    shadow_match: bool

    @property
    def ok(self) -> bool:
        return (self.self_dual and self.singly_even
                and self.min_distance == self.expected_distance
                and self.weight_match and self.shadow_match)


def cross_validate(code: Code) -> CrossValidation:
    """Compare a concrete code against the unique analytic enumerators."""
    p, _, outcome = classify(code.n)
    if outcome.kind != "unique":
        raise ValueError(f"length {code.n}: system is {outcome.kind}, "
                         "nothing to compare against")
    W_ref, S_ref = enumerators_from_c(p, outcome.c)
    W = code.weight_enumerator()
    S = code.shadow_enumerator()
    return CrossValidation(
        n=code.n,
        self_dual=code.is_self_dual(),
        singly_even=code.is_singly_even(),
        min_distance=code.min_distance(),
        expected_distance=p.d,
        weight_match=(W.coeffs == W_ref.coeffs),
        shadow_match=(S.coeffs == S_ref.coeffs),
    )
