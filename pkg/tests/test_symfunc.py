from collections import Counter
from itertools import combinations, product as cartesian
from math import prod

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.polys.polyfuncs import symmetrize
from sympy.utilities.iterables import multiset_permutations

from partitions import EMPTY, Partition, enumerate_partitions, splittings
from symfunc import (
    SigmaPoly,
    TransitionMatrix,
    det_int,
    eval_s,
    inverse_unimodular,
    power_sum_newton,
    s_poly,
    to_monomial_basis,
    transition_matrix_A,
)
from utils import CharnumError, NotUnimodularError

P = Partition


def monomial_terms(I, k):
    """m_I in k variables as Counter {exponent vector: 1}."""
    padded = list(I) + [0] * (k - len(I))
    return Counter(tuple(p) for p in multiset_permutations(padded))


def multiply_disjoint(f, g):
    out = Counter()
    for (a, x), (b, y) in cartesian(f.items(), g.items()):
        out[a + b] += x * y
    return out


# --------------------------------------------------------------------------
# s_I polynomials
# --------------------------------------------------------------------------

def test_s_poly_examples():
    assert s_poly(P((1,))) == SigmaPoly(n=1, terms={(1,): 1})
    assert s_poly(P((1, 1))) == SigmaPoly(n=2, terms={(0, 1): 1})
    assert s_poly(P((2,))) == SigmaPoly(n=2, terms={(2, 0): 1, (0, 1): -2})
    assert s_poly(P((3,))) == SigmaPoly(n=3, terms={(3, 0, 0): 1, (1, 1, 0): -3, (0, 0, 1): 3})
    assert s_poly(P((2, 1))) == SigmaPoly(n=3, terms={(1, 1, 0): 1, (0, 0, 1): -3})


def test_s_poly_rejects_empty_and_too_few_variables():
    with pytest.raises(CharnumError):
        s_poly(EMPTY)
    with pytest.raises(CharnumError):
        s_poly(P((2, 1)), nvars=2)


def test_s_poly_string_form():
    assert str(s_poly(P((2,)))) == "s1^2 - 2*s2"


@pytest.mark.parametrize("n", range(1, 6))
def test_s_poly_matches_sympy_symmetrize(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    sigmas = sympy.symbols(f"s1:{n + 1}")
    for I in enumerate_partitions(n):
        m_I = sum(
            sympy.Mul(*(x ** e for x, e in zip(xs, exps)))
            for exps in monomial_terms(I, n)
        )
        expected, remainder, _ = symmetrize(m_I, *xs, formal=True)
        assert remainder == 0
        ours = s_poly(I).evaluate(list(sigmas))
        assert sympy.expand(ours - expected) == 0, I


@pytest.mark.parametrize("n", range(1, 11))
def test_s_poly_reduces_to_its_monomial(n):
    for I in enumerate_partitions(n):
        assert to_monomial_basis(s_poly(I), n) == {I: 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_s_poly_independent_of_variable_count(n):
    for I in enumerate_partitions(n):
        assert s_poly(I, nvars=n + 2) == s_poly(I)


@pytest.mark.parametrize("n", range(1, 11))
def test_power_sum_agrees_with_newton(n):
    assert s_poly(P((n,))) == power_sum_newton(n)


@pytest.mark.parametrize("n", range(2, 6))
def test_splittings_expand_monomials_of_a_union(n):
    # m_I(x, y) = sum over a and splittings (J, K) of m_J(x) m_K(y)
    for I in enumerate_partitions(n):
        lhs = monomial_terms(I, 2 * n)
        rhs = Counter()
        for a in range(n + 1):
            for J, K in splittings(I, (a, n - a)):
                rhs.update(multiply_disjoint(monomial_terms(J, n), monomial_terms(K, n)))
        assert lhs == rhs, I


def test_eval_s_examples():
    assert eval_s(P((2,)), [3, 3]) == 3
    assert eval_s(P((1, 1)), [3, 3]) == 3
    assert eval_s(P((1,)), [0]) == 0
    with pytest.raises(CharnumError):
        eval_s(P((2,)), [3])


@settings(max_examples=50)
@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4))
def test_eval_s_at_elementary_values_gives_the_monomial(roots):
    n = len(roots)
    sigma = [
        sum(prod(c) for c in combinations(roots, r))
        for r in range(1, n + 1)
    ]
    for I in enumerate_partitions(n):
        direct = sum(
            prod(t ** e for t, e in zip(roots, exps))
            for exps in monomial_terms(I, n)
        )
        assert eval_s(I, sigma) == direct


# --------------------------------------------------------------------------
# Matrices
# --------------------------------------------------------------------------

def test_transition_matrix_small():
    assert transition_matrix_A(1).rows() == [[1]]
    A = transition_matrix_A(2)
    assert A.rows() == [[0, 1], [1, 2]]
    assert A.det() == -1
    assert A.apply([3, 3]) == [3, 9]
    with pytest.raises(CharnumError):
        transition_matrix_A(0)


def test_transition_matrix_payload():
    payload = transition_matrix_A(2).to_dict()
    assert payload == {"n": 2, "index": [[2], [1, 1]], "entries": [[0, 1], [1, 2]]}


@pytest.mark.parametrize("n", range(1, 11))
def test_transition_matrix_is_unimodular(n):
    assert abs(transition_matrix_A(n).det()) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_inverse_is_exact(n):
    A = transition_matrix_A(n)
    inverse = inverse_unimodular(A)
    size = len(A.index)
    a, b = A.rows(), inverse.rows()
    product = [[sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
               for i in range(size)]
    assert product == [[int(i == j) for j in range(size)] for i in range(size)]


@pytest.mark.parametrize("n", range(1, 6))
def test_inverse_equals_adjugate_times_det(n):
    A = transition_matrix_A(n)
    adjugate = sympy.Matrix(A.rows()).adjugate() * A.det()
    assert inverse_unimodular(A).rows() == adjugate.tolist()


def test_det_int_examples():
    assert det_int([[1]]) == 1
    assert det_int([[0, 1], [1, 2]]) == -1
    assert det_int([[int(i == j) for j in range(5)] for i in range(5)]) == 1
    assert det_int([[2, 4], [1, 2]]) == 0
    assert det_int([]) == 1
    with pytest.raises(CharnumError):
        det_int([[1, 2]])


def test_det_int_handles_big_entries():
    big = 10 ** 30
    assert det_int([[big, 1], [1, 0]]) == -1
    assert det_int([[big, 0], [0, big]]) == big * big


def test_inverse_examples():
    one = TransitionMatrix(n=1, entries=[[1]])
    assert inverse_unimodular(one).rows() == [[1]]
    assert inverse_unimodular(transition_matrix_A(2)).rows() == [[-2, 1], [1, 0]]
    identity = TransitionMatrix(n=3, entries=[[int(i == j) for j in range(3)] for i in range(3)])
    assert inverse_unimodular(identity).rows() == identity.rows()


def test_inverse_rejects_non_unimodular():
    with pytest.raises(NotUnimodularError, match="not unimodular"):
        inverse_unimodular(TransitionMatrix(n=2, entries=[[2, 0], [0, 1]]))
