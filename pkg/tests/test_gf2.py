from importlib import resources

import pytest

from minshadow.gf2 import Code, cross_validate, kernel_basis, parse_code, row_echelon
from minshadow.solver import classify, enumerators_from_c


def load(n):
    text = resources.files("minshadow").joinpath(f"data/code_{n}.txt").read_text()
    return parse_code(text)


def test_parse_basics():
    code = parse_code("# comment\n1100\n\n0110  # trailing\n")
    assert code.n == 4
    assert code.generators == [0b0011, 0b0110]


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_code("110\n12")
    with pytest.raises(ValueError):
        parse_code("11\n101")
    with pytest.raises(ValueError):
        parse_code("# nothing\n")


def test_row_echelon_rank():
    rows = [0b110, 0b011, 0b101]  # third is the sum of the first two
    assert len(row_echelon(rows)) == 2


def test_kernel_is_orthogonal_complement():
    rows = [0b1101, 0b0110]
    K = kernel_basis(rows, 4)
    assert len(K) == 2
    for v in K:
        for r in rows:
            assert bin(v & r).count("1") % 2 == 0


def test_words_enumerates_full_span():
    code = Code(4, [0b0011, 0b1100])
    assert sorted(code.words()) == [0b0000, 0b0011, 0b1100, 0b1111]


@pytest.mark.parametrize("n", [12, 14, 16, 18])
def test_shipped_codes_are_extremal_minimal_shadow(n):
    code = load(n)
    cv = cross_validate(code)
    assert cv.ok, cv


@pytest.mark.parametrize("n", [12, 14, 16, 18])
def test_shipped_code_shadow_minimum(n):
    code = load(n)
    p, _, out = classify(n)
    S = code.shadow_enumerator()
    assert S.min_weight() == p.min_shadow_weight()
    assert S.total() == code.weight_enumerator().total()


def test_doubly_even_subcode_index_two():
    code = load(16)
    sub = code.doubly_even_subcode()
    assert sub.dimension == code.dimension - 1
    assert sub.is_doubly_even()
    assert all(w in set(code.words()) for w in sub.words())


def test_shadow_matches_coset_structure():
    # every shadow word has weight = n/2 mod 4 and odd inner product
    # pattern consistent with the two outer cosets
    code = load(14)
    p = classify(14)[0]
    S = code.shadow_enumerator()
    for w in S.coeffs:
        assert w % 4 == (p.half) % 4


def test_cross_validate_rejects_non_unique_length():
    code = Code(20, [1 << i | 1 << (i + 10) for i in range(10)])
    with pytest.raises(ValueError):
        cross_validate(code)


def test_oracle_agrees_with_analytic_enumerators():
    for n in (12, 14, 16, 18):
        code = load(n)
        p, _, out = classify(n)
        W_ref, S_ref = enumerators_from_c(p, out.c)
        assert code.weight_enumerator().coeffs == W_ref.coeffs
        assert code.shadow_enumerator().coeffs == S_ref.coeffs
