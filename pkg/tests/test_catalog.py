from math import comb, prod

import pytest

from catalog import (
    POINT,
    cone_s_top_mod,
    convert_basis,
    direct_product_oracle,
    disjoint_union_svec,
    divisibility_check,
    negate_svec,
    product_cvec_oracle,
    product_of,
    product_svec,
    projective_space,
    projective_space_cvec,
    projective_space_svec,
    scale_svec,
    veronese,
    veronese_ambient_dim,
    veronese_cone_pipeline,
)
from models import Basis, CharVector, EmbeddedVariety
from partitions import partition_count
from symfunc import transition_matrix_A
from utils import BasisMismatchError, CharnumError, NoDivisibilityRuleError


def compositions(total):
    if total == 0:
        return [()]
    return [(head,) + tail for head in range(1, total + 1) for tail in compositions(total - head)]


def cp(n):
    return projective_space_svec(n)


# --------------------------------------------------------------------------
# Projective spaces and products
# --------------------------------------------------------------------------

def test_projective_space_examples():
    assert cp(1).entries == (2,)
    assert cp(2).entries == (3, 3)
    v = cp(4)
    assert v.top == 5
    assert v.entry((1, 1, 1, 1)) == 5
    assert v.label == "CP^4"
    with pytest.raises(CharnumError):
        cp(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_projective_space_top_entry(n):
    assert cp(n).top == n + 1


def test_projective_space_cvec_matches_conversion():
    for n in range(1, 7):
        assert convert_basis(cp(n)).entries == projective_space_cvec(n).entries


def test_product_examples():
    assert product_svec(cp(1), cp(1)).entries == (0, 4)
    assert product_svec(cp(1), cp(2)).entries == (0, 6, 6)
    assert product_svec(cp(2), POINT).entries == cp(2).entries
    assert product_svec(POINT, cp(2)).entries == cp(2).entries
    assert product_svec(cp(1), cp(2)).label == "CP^1 x CP^2"


def test_product_needs_s_basis():
    with pytest.raises(BasisMismatchError):
        product_svec(convert_basis(cp(2)), cp(1))


def test_product_commutes_and_associates():
    for a, b, c in [(1, 2, 1), (2, 2, 1), (1, 1, 3)]:
        assert product_svec(cp(a), cp(b)).entries == product_svec(cp(b), cp(a)).entries
        left = product_svec(product_svec(cp(a), cp(b)), cp(c))
        right = product_svec(cp(a), product_svec(cp(b), cp(c)))
        assert left.entries == right.entries


def test_product_of_mixed_vectors_commutes():
    v = CharVector(dim=2, basis=Basis.S, entries=(7, -3))
    w = CharVector(dim=3, basis=Basis.S, entries=(1, 4, -2))
    assert product_svec(v, w).entries == product_svec(w, v).entries


@pytest.mark.parametrize("total", range(1, 7))
def test_product_formula_matches_ring_oracle(total):
    for dims in compositions(total):
        assert product_of([cp(a) for a in dims]).entries == direct_product_oracle(dims).entries, dims


def test_oracle_examples():
    assert direct_product_oracle([1, 1]).entries == (0, 4)
    assert direct_product_oracle([2]).entries == (3, 3)
    assert direct_product_oracle([1, 2]).entries == (0, 6, 6)
    with pytest.raises(CharnumError):
        direct_product_oracle([])


@pytest.mark.parametrize("total", range(1, 5))
def test_c_numbers_match_ring_oracle(total):
    for dims in compositions(total):
        s = product_of([cp(a) for a in dims])
        assert convert_basis(s).entries == product_cvec_oracle(dims).entries, dims


def test_euler_characteristic_entry():
    for total in range(1, 7):
        for dims in compositions(total):
            v = product_of([cp(a) for a in dims])
            assert v.entry((1,) * total) == prod(a + 1 for a in dims)


# --------------------------------------------------------------------------
# Sums, negation, scaling, basis change
# --------------------------------------------------------------------------

def test_disjoint_union_examples():
    assert disjoint_union_svec(cp(1), cp(1)).entries == (4,)
    v = cp(3)
    assert disjoint_union_svec(v, CharVector.zero(3)).entries == v.entries


def test_disjoint_union_rejects_mismatch():
    with pytest.raises(CharnumError):
        disjoint_union_svec(cp(1), cp(2))
    with pytest.raises(BasisMismatchError):
        disjoint_union_svec(cp(2), convert_basis(cp(2)))


def test_minus_projective_line_plus_generator():
    # (-CP^n) + n K^n_+ has top entry -(n+1) + n = -1
    for n in range(1, 6):
        plus = CharVector(dim=n, basis=Basis.S, entries=(1,) + (0,) * (partition_count(n) - 1))
        v = disjoint_union_svec(negate_svec(cp(n)), scale_svec(plus, n))
        assert v.top == -1
        assert v.virtual


def test_negate_examples():
    assert negate_svec(cp(1)).entries == (-2,)
    assert negate_svec(CharVector.zero(2)).entries == (0, 0)
    neg = negate_svec(cp(2))
    assert neg.entries == (-3, -3)
    assert neg.virtual
    assert neg.label == "-(CP^2)"


def test_scale():
    assert scale_svec(cp(2), 3).entries == (9, 9)
    assert scale_svec(cp(2), 0).entries == (0, 0)
    with pytest.raises(CharnumError):
        scale_svec(cp(2), -1)


def test_convert_basis_examples():
    c = convert_basis(cp(2))
    assert c.basis is Basis.C
    assert c.entries == (3, 9)
    assert convert_basis(CharVector.zero(3)).entries == (0, 0, 0)
    assert convert_basis(cp(1)).entries == (2,)
    assert convert_basis(c).entries == (3, 3)


def test_convert_basis_dimension_mismatch():
    with pytest.raises(CharnumError):
        convert_basis(cp(2), transition_matrix_A(3))


def test_convert_basis_point_swaps_tag():
    assert convert_basis(POINT).basis is Basis.C
    assert convert_basis(POINT).entries == (1,)


@pytest.mark.parametrize("n", range(1, 8))
def test_convert_basis_round_trip(n, rng):
    A = transition_matrix_A(n)
    for _ in range(10):
        v = CharVector(dim=n, basis=Basis.S,
                       entries=tuple(rng.randint(-10 ** 12, 10 ** 12) for _ in range(partition_count(n))))
        assert convert_basis(convert_basis(v, A), A) == v


# --------------------------------------------------------------------------
# Divisibility, Veronese, cones
# --------------------------------------------------------------------------

def test_divisibility_examples():
    r1 = divisibility_check(convert_basis(cp(1)))
    assert (r1.value, r1.divisor, r1.divisible) == (2, 2, True)
    r2 = divisibility_check(convert_basis(cp(2)))
    assert (r2.value, r2.divisor, r2.divisible) == (12, 12, True)
    r3 = divisibility_check(convert_basis(cp(3)))
    assert (r3.value, r3.divisor, r3.divisible) == (24, 24, True)


def test_divisibility_fails_on_odd_c1():
    report = divisibility_check(CharVector(dim=1, basis=Basis.C, entries=(3,)))
    assert not report.divisible


def test_divisibility_errors():
    with pytest.raises(NoDivisibilityRuleError):
        divisibility_check(convert_basis(cp(4)))
    with pytest.raises(BasisMismatchError):
        divisibility_check(cp(2))


@pytest.mark.parametrize("total", [1, 2, 3])
def test_products_pass_divisibility(total):
    for dims in compositions(total):
        c = convert_basis(product_of([cp(a) for a in dims]))
        assert divisibility_check(c).divisible, dims


def test_veronese_examples():
    line = projective_space(1)
    twisted = veronese(line, 3)
    assert twisted.divisibility == 3
    assert twisted.svec == line.svec
    assert twisted.ambient_dim == 3
    assert veronese(line, 1) == line
    cubic = veronese(projective_space(3), 5)
    assert cubic.divisibility == 5
    assert cubic.ambient_dim == veronese_ambient_dim(3, 5) == 55
    with pytest.raises(CharnumError):
        veronese(line, 0)


def test_veronese_ambient_matches_cone_construction():
    # degree n+1 image of CP^(n-1)
    for n in range(2, 8):
        assert veronese_ambient_dim(n - 1, n + 1) == comb(2 * n, n - 1) - 1


def test_cone_examples():
    result = cone_s_top_mod(veronese(projective_space(1), 3))
    assert (result.n, result.s_base, result.modulus, result.residue) == (2, 2, 3, 1)
    assert cone_s_top_mod(projective_space(4)).residue == 0
    with pytest.raises(CharnumError):
        cone_s_top_mod(EmbeddedVariety(svec=POINT))


@pytest.mark.parametrize("n", range(2, 11))
def test_veronese_cone_pipeline(n):
    result = veronese_cone_pipeline(n)
    assert result.s_base == n
    assert result.modulus == n + 1
    assert result.residue == 1
    assert result.is_one


def test_cone_pipeline_starts_at_two():
    with pytest.raises(CharnumError):
        veronese_cone_pipeline(1)
