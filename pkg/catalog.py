"""
Characteristic-number vectors of model varieties and the arithmetic on them.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from math import comb, prod
from typing import Dict, Optional, Sequence, Tuple

import sympy

from models import Basis, CharVector, ConeCongruence, DivisibilityReport, EmbeddedVariety
from partitions import enumerate_partitions, splittings
from symfunc import TransitionMatrix, eval_s, inverse_unimodular, s_poly, transition_matrix_A
from utils import BasisMismatchError, CharnumError, NoDivisibilityRuleError

logger = logging.getLogger(__name__)

POINT = CharVector(dim=0, basis=Basis.S, entries=(1,), label="point")


def _require_same_shape(v1: CharVector, v2: CharVector) -> None:
    if v1.basis is not v2.basis:
        raise BasisMismatchError(f"basis mismatch: {v1.basis.value} vs {v2.basis.value}")
    if v1.dim != v2.dim:
        raise CharnumError(f"dimension mismatch: {v1.dim} vs {v2.dim}")


@lru_cache(maxsize=None)
def _projective_space_entries(n: int) -> Tuple[int, ...]:
    sigma = [comb(n + 1, i) for i in range(1, n + 1)]
    return tuple(eval_s(I, sigma) for I in enumerate_partitions(n))


def projective_space_svec(n: int) -> CharVector:
    """s-numbers of CP^n from its total Chern class (1+h)^(n+1)."""
    if n < 1:
        raise CharnumError(f"projective space needs n >= 1, got {n}")
    return CharVector(dim=n, basis=Basis.S, entries=_projective_space_entries(n), label=f"CP^{n}")


def projective_space_cvec(n: int) -> CharVector:
    if n < 1:
        raise CharnumError(f"projective space needs n >= 1, got {n}")
    entries = tuple(prod(comb(n + 1, i) for i in I) for I in enumerate_partitions(n))
    return CharVector(dim=n, basis=Basis.C, entries=entries, label=f"CP^{n}")


def product_svec(v1: CharVector, v2: CharVector) -> CharVector:
    """s-numbers of X1 x X2: sum over splittings of I into weights (a, b)."""
    if v1.basis is not Basis.S or v2.basis is not Basis.S:
        raise BasisMismatchError("product formula needs s-basis vectors")
    a, b = v1.dim, v2.dim
    if a == 0:
        scale = v1.entries[0]
        return v2.model_copy(update={"entries": tuple(scale * x for x in v2.entries), "label": None,
                                     "virtual": v1.virtual or v2.virtual})
    if b == 0:
        return product_svec(v2, v1)
    entries = []
    for I in enumerate_partitions(a + b):
        total = 0
        for J, K in splittings(I, (a, b)):
            total += v1.entry(J) * v2.entry(K)
        entries.append(total)
    label = f"{v1.label} x {v2.label}" if v1.label and v2.label else None
    return CharVector(dim=a + b, basis=Basis.S, entries=tuple(entries),
                      virtual=v1.virtual or v2.virtual, label=label)


def product_of(vectors: Sequence[CharVector]) -> CharVector:
    result = POINT
    for v in vectors:
        result = product_svec(result, v)
    return result


def disjoint_union_svec(v1: CharVector, v2: CharVector) -> CharVector:
    _require_same_shape(v1, v2)
    return CharVector(
        dim=v1.dim,
        basis=v1.basis,
        entries=tuple(x + y for x, y in zip(v1.entries, v2.entries)),
        virtual=v1.virtual or v2.virtual,
    )


def negate_svec(v: CharVector) -> CharVector:
    """Formal negation -X: all characteristic numbers change sign."""
    label = f"-({v.label})" if v.label else None
    return CharVector(dim=v.dim, basis=v.basis, entries=tuple(-x for x in v.entries),
                      virtual=True, label=label)


def scale_svec(v: CharVector, k: int) -> CharVector:
    """k disjoint copies of v."""
    if k < 0:
        raise CharnumError(f"copy count must be nonnegative, got {k}")
    return CharVector(dim=v.dim, basis=v.basis, entries=tuple(k * x for x in v.entries),
                      virtual=v.virtual and k > 0)


def convert_basis(v: CharVector, A: Optional[TransitionMatrix] = None) -> CharVector:
    """s -> c multiplies by A, c -> s by its integer inverse."""
    if v.dim == 0:
        return v.model_copy(update={"basis": Basis.C if v.basis is Basis.S else Basis.S})
    A = A or transition_matrix_A(v.dim)
    if A.n != v.dim:
        raise CharnumError(f"matrix is for dimension {A.n}, vector has dimension {v.dim}")
    if v.basis is Basis.S:
        return v.model_copy(update={"basis": Basis.C, "entries": tuple(A.apply(v.entries))})
    inverse = inverse_unimodular(A)
    return v.model_copy(update={"basis": Basis.S, "entries": tuple(inverse.apply(v.entries))})


# --------------------------------------------------------------------------
# Truncated-ring oracle for products of projective spaces
# --------------------------------------------------------------------------

class _TruncatedRing:
    """Z[h_1..h_q] / (h_l^(a_l + 1)) on top of sympy polynomials."""

    def __init__(self, dims: Sequence[int]) -> None:
        self.dims = tuple(dims)
        self.gens = sympy.symbols(f"h1:{len(dims) + 1}")
        self.one = sympy.Poly(1, *self.gens, domain="ZZ")

    def reduce(self, poly: sympy.Poly) -> sympy.Poly:
        kept = {m: c for m, c in poly.terms() if all(e <= a for e, a in zip(m, self.dims))}
        if not kept:
            return self.one * 0
        return sympy.Poly.from_dict(kept, *self.gens, domain="ZZ")

    def mul(self, p: sympy.Poly, q: sympy.Poly) -> sympy.Poly:
        return self.reduce(p * q)

    def chern_pieces(self) -> list:
        total = self.one
        for h, a in zip(self.gens, self.dims):
            total = self.mul(total, sympy.Poly((1 + h) ** (a + 1), *self.gens, domain="ZZ"))
        n = sum(self.dims)
        pieces = [self.one * 0 for _ in range(n + 1)]
        for m, c in total.terms():
            pieces[sum(m)] += sympy.Poly.from_dict({m: c}, *self.gens, domain="ZZ")
        return pieces[1:]

    def top_coefficient(self, poly: sympy.Poly) -> int:
        return int(poly.as_dict().get(self.dims, 0))


def _monomial_value(ring: _TruncatedRing, pieces: list, exps: Sequence[int]) -> sympy.Poly:
    value = ring.one
    for i, a in enumerate(exps):
        for _ in range(a):
            value = ring.mul(value, pieces[i])
    return value


def direct_product_oracle(dims: Sequence[int]) -> CharVector:
    """
    s-numbers of CP^a_1 x ... x CP^a_q computed in the cohomology ring:
    substitute the graded pieces of prod (1+h_l)^(a_l+1) into s_I and read
    the coefficient of h_1^a_1 ... h_q^a_q.
    """
    dims = [int(a) for a in dims]
    if not dims or any(a < 1 for a in dims):
        raise CharnumError(f"oracle needs positive dimensions, got {dims}")
    ring = _TruncatedRing(dims)
    pieces = ring.chern_pieces()
    n = sum(dims)
    entries = []
    for I in enumerate_partitions(n):
        total = 0
        for exps, coeff in s_poly(I).terms.items():
            total += coeff * ring.top_coefficient(_monomial_value(ring, pieces, exps))
        entries.append(total)
    return CharVector(dim=n, basis=Basis.S, entries=tuple(entries))


def product_cvec_oracle(dims: Sequence[int]) -> CharVector:
    """c-numbers of a product of projective spaces from the same ring."""
    dims = [int(a) for a in dims]
    if not dims or any(a < 1 for a in dims):
        raise CharnumError(f"oracle needs positive dimensions, got {dims}")
    ring = _TruncatedRing(dims)
    pieces = ring.chern_pieces()
    n = sum(dims)
    entries = []
    for I in enumerate_partitions(n):
        value = ring.one
        for part in I:
            value = ring.mul(value, pieces[part - 1])
        entries.append(ring.top_coefficient(value))
    return CharVector(dim=n, basis=Basis.C, entries=tuple(entries))


# --------------------------------------------------------------------------
# Divisibility, Veronese re-embedding and the cone congruence
# --------------------------------------------------------------------------

# dim -> (partitions summed, divisor, printable combination)
DIVISIBILITY_RULES: Dict[int, Tuple[Tuple[Tuple[int, ...], ...], int, str]] = {
    1: (((1,),), 2, "c1"),
    2: (((1, 1), (2,)), 12, "c1^2 + c2"),
    3: (((2, 1),), 24, "c1*c2"),
}


def divisibility_check(v: CharVector, n: Optional[int] = None) -> DivisibilityReport:
    n = v.dim if n is None else n
    if n not in DIVISIBILITY_RULES:
        raise NoDivisibilityRuleError(f"no rule for dimension {n}")
    if v.basis is not Basis.C:
        raise BasisMismatchError("divisibility rules apply to c-numbers")
    if v.dim != n:
        raise CharnumError(f"vector has dimension {v.dim}, rule is for {n}")
    partitions, divisor, text = DIVISIBILITY_RULES[n]
    value = sum(v.entry(I) for I in partitions)
    return DivisibilityReport(dim=n, combination=text, value=value, divisor=divisor,
                              divisible=value % divisor == 0)


def veronese_ambient_dim(m: int, k: int) -> int:
    """Projective dimension of the target of the degree-k Veronese map of CP^m."""
    return comb(m + k, k) - 1


def projective_space(n: int) -> EmbeddedVariety:
    return EmbeddedVariety(svec=projective_space_svec(n), divisibility=1, ambient_dim=n)


def veronese(X: EmbeddedVariety, k: int) -> EmbeddedVariety:
    """Re-embed by degree k: same variety, hyperplane class multiplied by k."""
    if k < 1:
        raise CharnumError(f"Veronese degree must be positive, got {k}")
    ambient = None
    if X.svec.label == f"CP^{X.svec.dim}" and X.divisibility == 1:
        ambient = veronese_ambient_dim(X.svec.dim, k)
    elif k == 1:
        ambient = X.ambient_dim
    return EmbeddedVariety(svec=X.svec, divisibility=X.divisibility * k, ambient_dim=ambient)


def cone_s_top_mod(X: EmbeddedVariety) -> ConeCongruence:
    """s_n[CX] mod d, which is n * s_(n-1)[X] mod d for X of dimension n-1."""
    n = X.svec.dim + 1
    if X.svec.basis is not Basis.S:
        raise BasisMismatchError("cone congruence needs the s-vector of X")
    if X.svec.dim == 0:
        raise CharnumError("cone base must have positive dimension")
    d = X.divisibility
    s_base = X.svec.top
    return ConeCongruence(n=n, s_base=s_base, modulus=d, residue=(n * s_base) % d)


def veronese_cone_pipeline(n: int) -> ConeCongruence:
    """Cone over CP^(n-1) re-embedded by degree n+1: top s-number is 1 mod n+1."""
    if n < 2:
        raise CharnumError(f"the Veronese cone construction starts at n = 2, got {n}")
    X = veronese(projective_space(n - 1), n + 1)
    result = cone_s_top_mod(X)
    logger.debug("cone over Veronese image of CP^%d in CP^%s: residue %d mod %d",
                 n - 1, X.ambient_dim, result.residue, result.modulus)
    return result
