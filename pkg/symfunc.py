"""
Exact symmetric-function algebra over the elementary symmetric variables
sigma_1..sigma_n (deg sigma_i = i).

Symmetric polynomials in k variables t_1..t_k are handled in the monomial
basis, as dicts {Partition: coefficient}; m_lambda vanishes when lambda has
more than k parts. Products with sigma_r are computed combinatorially on
exponent vectors, so no full expansion in the t variables is ever built.
"""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from partitions import EMPTY, Partition, enumerate_partitions
from utils import CharnumError, NotUnimodularError

logger = logging.getLogger(__name__)

MonomialExpansion = Dict[Partition, int]


class SigmaPoly:
    """
    Integer polynomial in sigma_1..sigma_n. Terms map exponent vectors
    (a_1, ..., a_n) to nonzero coefficients.
    """

    __slots__ = ("n", "terms")

    def __init__(self, *, n: int, terms: Optional[Dict[Tuple[int, ...], int]] = None) -> None:
        self.n = n
        self.terms: Dict[Tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            exps = self._pad(tuple(exps), n)
            if coeff:
                self.terms[exps] = self.terms.get(exps, 0) + coeff
                if not self.terms[exps]:
                    del self.terms[exps]

    @staticmethod
    def _pad(exps: Tuple[int, ...], n: int) -> Tuple[int, ...]:
        if len(exps) > n:
            if any(exps[n:]):
                raise CharnumError(f"exponent vector {exps} uses more than {n} variables")
            return exps[:n]
        return exps + (0,) * (n - len(exps))

    @classmethod
    def constant(cls, value: int, n: int) -> "SigmaPoly":
        return cls(n=n, terms={(0,) * n: value})

    @classmethod
    def sigma(cls, i: int, n: int) -> "SigmaPoly":
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n=n, terms={tuple(exps): 1})

    def degrees(self) -> set:
        return {sum((i + 1) * a for i, a in enumerate(exps)) for exps in self.terms}

    def __add__(self, other: "SigmaPoly") -> "SigmaPoly":
        n = max(self.n, other.n)
        merged = dict((self._pad(e, n), c) for e, c in self.terms.items())
        for e, c in other.terms.items():
            e = self._pad(e, n)
            merged[e] = merged.get(e, 0) + c
        return SigmaPoly(n=n, terms=merged)

    def __neg__(self) -> "SigmaPoly":
        return SigmaPoly(n=self.n, terms={e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SigmaPoly") -> "SigmaPoly":
        return self + (-other)

    def __mul__(self, other) -> "SigmaPoly":
        if isinstance(other, int):
            return SigmaPoly(n=self.n, terms={e: c * other for e, c in self.terms.items()})
        n = max(self.n, other.n)
        out: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            e1 = self._pad(e1, n)
            for e2, c2 in other.terms.items():
                e2 = self._pad(e2, n)
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SigmaPoly(n=n, terms=out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SigmaPoly):
            return NotImplemented
        n = max(self.n, other.n)
        return {self._pad(e, n): c for e, c in self.terms.items()} == {
            self._pad(e, n): c for e, c in other.terms.items()
        }

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def evaluate(self, sigma: Sequence) -> int:
        """Value at sigma = (sigma_1, ..., sigma_m); any ring supporting + and * works."""
        total = 0
        for exps, coeff in self.terms.items():
            used = max((i + 1 for i, a in enumerate(exps) if a), default=0)
            if used > len(sigma):
                raise CharnumError(f"need {used} sigma values, got {len(sigma)}")
            value = coeff
            for i, a in enumerate(exps):
                if a:
                    value = value * sigma[i] ** a
            total = total + value
        return total

    def to_dict(self) -> List[dict]:
        return [
            {"exponents": list(exps), "coeff": coeff}
            for exps, coeff in sorted(self.terms.items(), reverse=True)
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in sorted(self.terms.items(), reverse=True):
            factors = [
                f"s{i + 1}" + (f"^{a}" if a > 1 else "")
                for i, a in enumerate(exps)
                if a
            ]
            mono = "*".join(factors)
            if not mono:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(mono)
            elif coeff == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{coeff}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"<SigmaPoly n={self.n} {self}>"


# --------------------------------------------------------------------------
# Monomial-basis arithmetic
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _times_elementary_single(mu: Partition, r: int, k: int) -> Tuple[Tuple[Partition, int], ...]:
    """e_r * m_mu in k variables, as ((nu, coeff), ...)."""
    if len(mu) > k or r > k:
        return ()
    padded = tuple(mu) + (0,) * (k - len(mu))
    hits: Dict[Tuple[int, ...], int] = {}
    for S in combinations(range(k), r):
        bumped = list(padded)
        for s in S:
            bumped[s] += 1
        nu = tuple(sorted(bumped, reverse=True))
        hits[nu] = hits.get(nu, 0) + 1
    # pairs (permutation of mu, subset) landing on a permutation of nu,
    # counted from both sides: perms(mu) * hits = perms(nu) * coeff
    out = []
    for nu, count in hits.items():
        coeff, rem = divmod(count * _arrangements(padded), _arrangements(nu))
        assert rem == 0, (mu, r, nu)
        out.append((Partition(p for p in nu if p), coeff))
    return tuple(out)


def _arrangements(exps: Tuple[int, ...]) -> int:
    total = factorial(len(exps))
    for mult in Counter(exps).values():
        total //= factorial(mult)
    return total


def times_elementary(f: MonomialExpansion, r: int, k: int) -> MonomialExpansion:
    out: MonomialExpansion = {}
    for mu, c in f.items():
        for nu, mult in _times_elementary_single(mu, r, k):
            out[nu] = out.get(nu, 0) + c * mult
    return {nu: c for nu, c in out.items() if c}


@lru_cache(maxsize=None)
def _sigma_monomial(exps: Tuple[int, ...], k: int) -> Tuple[Tuple[Partition, int], ...]:
    f: MonomialExpansion = {EMPTY: 1}
    for i, a in enumerate(exps):
        for _ in range(a):
            f = times_elementary(f, i + 1, k)
    return tuple(sorted(f.items(), reverse=True))


def sigma_monomial_in_m(exps: Sequence[int], k: int) -> MonomialExpansion:
    """Expansion of sigma_1^a_1 ... sigma_n^a_n in the monomial basis on k variables."""
    return dict(_sigma_monomial(tuple(exps), k))


def to_monomial_basis(poly: SigmaPoly, k: int) -> MonomialExpansion:
    out: MonomialExpansion = {}
    for exps, coeff in poly.terms.items():
        for nu, c in _sigma_monomial(exps, k):
            out[nu] = out.get(nu, 0) + coeff * c
    return {nu: c for nu, c in out.items() if c}


def _leading_exponents(lam: Partition, n: int) -> Tuple[int, ...]:
    # sigma_1^(l1-l2) sigma_2^(l2-l3) ... has leading monomial t^lam
    exps = [0] * n
    for j in range(len(lam)):
        nxt = lam[j + 1] if j + 1 < len(lam) else 0
        exps[j] = lam[j] - nxt
    return tuple(exps)


@lru_cache(maxsize=None)
def _s_poly(I: Partition, k: int) -> SigmaPoly:
    n = I.weight
    residual: MonomialExpansion = {I: 1}
    terms: Dict[Tuple[int, ...], int] = {}
    while residual:
        lam = max(residual)
        c = residual[lam]
        exps = _leading_exponents(lam, n)
        terms[exps] = terms.get(exps, 0) + c
        for nu, mult in _sigma_monomial(exps, k):
            left = residual.get(nu, 0) - c * mult
            if left:
                residual[nu] = left
            else:
                residual.pop(nu, None)
    poly = SigmaPoly(n=n, terms=terms)
    logger.debug("s_poly %s in %d variables: %d terms", tuple(I), k, len(poly.terms))
    return poly


def s_poly(I: Partition, nvars: Optional[int] = None) -> SigmaPoly:
    """
    The polynomial s_I with s_I(sigma_1..sigma_n) = m_I, by lex-leading-term
    descent in nvars >= weight(I) variables (default weight(I)).
    """
    I = Partition(I)
    if not I:
        raise CharnumError("s_poly is undefined for the empty partition")
    k = I.weight if nvars is None else nvars
    if k < I.weight:
        raise CharnumError(f"need at least {I.weight} variables, got {k}")
    return _s_poly(I, k)


def eval_s(I: Partition, sigma: Sequence[int]) -> int:
    I = Partition(I)
    if len(sigma) < I.weight:
        raise CharnumError(f"partition {tuple(I)} needs {I.weight} sigma values, got {len(sigma)}")
    return s_poly(I).evaluate(list(sigma))


def power_sum_newton(m: int, n: Optional[int] = None) -> SigmaPoly:
    """p_m in sigma variables by Newton's identities."""
    n = m if n is None else n
    p: List[SigmaPoly] = [SigmaPoly.constant(n, n)]
    for j in range(1, m + 1):
        acc = SigmaPoly(n=n)
        for i in range(1, j):
            acc = acc + SigmaPoly.sigma(i, n) * p[j - i] * (-1) ** (i - 1)
        acc = acc + SigmaPoly.sigma(j, n) * (j * (-1) ** (j - 1))
        p.append(acc)
    return p[m]


# --------------------------------------------------------------------------
# Integer matrices
# --------------------------------------------------------------------------

class TransitionMatrix:
    """p(n) x p(n) integer matrix with rows and columns in canonical partition order."""

    def __init__(self, *, n: int, entries: np.ndarray, index: Optional[List[Partition]] = None) -> None:
        self.n = n
        self.index = index if index is not None else enumerate_partitions(n)
        self.entries = np.array(entries, dtype=object)
        if self.entries.shape != (len(self.index), len(self.index)):
            raise CharnumError(
                f"matrix shape {self.entries.shape} does not match p({n}) = {len(self.index)}"
            )

    def rows(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def det(self) -> int:
        return det_int(self.entries)

    def apply(self, vector: Sequence[int]) -> List[int]:
        return [int(x) for x in self.entries.dot(np.array(list(vector), dtype=object))]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "index": [list(p) for p in self.index],
            "entries": self.rows(),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.n == other.n and self.rows() == other.rows()

    def __repr__(self) -> str:
        return f"<TransitionMatrix n={self.n} size={len(self.index)}>"


@lru_cache(maxsize=None)
def _transition_matrix_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    index = enumerate_partitions(n)
    rows = []
    for I in index:
        exps = [0] * n
        for part in I:
            exps[part - 1] += 1
        expansion = dict(_sigma_monomial(tuple(exps), n))
        rows.append(tuple(expansion.get(J, 0) for J in index))
    return tuple(rows)


def transition_matrix_A(n: int) -> TransitionMatrix:
    """Row I, column J: coefficient of m_J in sigma_{i_1}...sigma_{i_r}."""
    if n < 1:
        raise CharnumError(f"n must be positive, got {n}")
    return TransitionMatrix(n=n, entries=np.array(_transition_matrix_rows(n), dtype=object))


def det_int(M) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    rows = [[int(x) for x in row] for row in M]
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise CharnumError("determinant needs a square matrix")
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, size):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[size - 1][size - 1]


def _inverse_fractions(M: np.ndarray) -> np.ndarray:
    size = M.shape[0]
    X = np.array([[Fraction(int(x)) for x in row] for row in M], dtype=object)
    Y = np.array([[Fraction(int(i == j)) for j in range(size)] for i in range(size)], dtype=object)

    for i in range(size):
        for j in range(i, size):
            if X[j, i] != 0:
                if i != j:
                    X[[i, j]] = X[[j, i]]
                    Y[[i, j]] = Y[[j, i]]
                break
        else:
            raise NotUnimodularError("matrix is not invertible")
        pivot = X[i, i]
        Y[i, :] = Y[i, :] / pivot
        X[i, :] = X[i, :] / pivot
        for j in range(size):
            if j != i and X[j, i] != 0:
                factor = X[j, i]
                Y[j, :] = Y[j, :] - factor * Y[i, :]
                X[j, :] = X[j, :] - factor * X[i, :]
    return Y


@lru_cache(maxsize=64)
def _inverse_rows(rows: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, ...], ...]:
    det = det_int(rows)
    if abs(det) != 1:
        raise NotUnimodularError(f"not unimodular: determinant is {det}")
    matrix = np.array(rows, dtype=object)
    inverse = _inverse_fractions(matrix)
    if any(x.denominator != 1 for x in inverse.flat):
        raise NotUnimodularError("inverse has non-integer entries")
    result = np.array([[int(x) for x in row] for row in inverse], dtype=object)
    size = len(rows)
    identity = np.array([[int(i == j) for j in range(size)] for i in range(size)], dtype=object)
    if not np.array_equal(matrix.dot(result), identity):
        raise NotUnimodularError("inverse check failed")
    return tuple(tuple(int(x) for x in row) for row in result)


def inverse_unimodular(A: TransitionMatrix) -> TransitionMatrix:
    """
    Exact integer inverse of a matrix with determinant +1 or -1. Gauss-Jordan
    over Fraction; with |det| = 1 the result equals the adjugate times det.
    """
    rows = tuple(tuple(row) for row in A.rows())
    return TransitionMatrix(n=A.n, entries=np.array(_inverse_rows(rows), dtype=object), index=list(A.index))
