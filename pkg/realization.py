"""
Generator families K^i_+/- and the triangular solver that writes any integer
vector as a nonnegative combination of the products K^J_+/-.
"""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from catalog import (
    convert_basis,
    disjoint_union_svec,
    negate_svec,
    product_of,
    projective_space_svec,
    scale_svec,
)
from config import config
from models import (
    Basis,
    CharVector,
    FamilyProvenance,
    GeneratorBase,
    GeneratorFamily,
    Recipe,
    RecipeItem,
    Sign,
    SmoothDecomposition,
    SmoothTerm,
)
from partitions import Order, Partition, enumerate_partitions, lex_compare, partition_count
from symfunc import TransitionMatrix, transition_matrix_A
from utils import BasisMismatchError, CharnumError, FamilyContractError, RecipeIntegrityError

logger = logging.getLogger(__name__)


# --------------------------------------------------------------------------
# Families
# --------------------------------------------------------------------------

def _base_vector(i: int, top: int, lower: Sequence[int]) -> CharVector:
    return CharVector(dim=i, basis=Basis.S, entries=(top,) + tuple(lower))


def default_family(n: int) -> GeneratorFamily:
    """Top entries +1 / -1, every lower entry 0."""
    bases = []
    for i in range(1, n + 1):
        zeros = (0,) * (partition_count(i) - 1)
        bases.append(GeneratorBase(dim=i, plus=_base_vector(i, 1, zeros), minus=_base_vector(i, -1, zeros)))
    return GeneratorFamily(n=n, bases=tuple(bases), provenance=FamilyProvenance.DEFAULT)


def random_family(n: int, rng: Optional[random.Random] = None,
                  lo: Optional[int] = None, hi: Optional[int] = None) -> GeneratorFamily:
    rng = rng or random.Random(config.SEED)
    lo = config.RANDOM_FAMILY_RANGE[0] if lo is None else lo
    hi = config.RANDOM_FAMILY_RANGE[1] if hi is None else hi
    bases = []
    for i in range(1, n + 1):
        size = partition_count(i) - 1
        plus = [rng.randint(lo, hi) for _ in range(size)]
        minus = [rng.randint(lo, hi) for _ in range(size)]
        bases.append(GeneratorBase(dim=i, plus=_base_vector(i, 1, plus), minus=_base_vector(i, -1, minus)))
    return GeneratorFamily(n=n, bases=tuple(bases), provenance=FamilyProvenance.RANDOM)


def family_from_payload(payload: Any, provenance: FamilyProvenance = FamilyProvenance.FILE) -> GeneratorFamily:
    """
    Build a family from {n, bases: [{dim, plus, minus}]}. A top entry other
    than +1 / -1 raises FamilyContractError naming the dimension.
    """
    if not isinstance(payload, dict):
        raise CharnumError("family payload must be a JSON object")
    try:
        return GeneratorFamily.model_validate({**payload, "provenance": provenance})
    except ValidationError as e:
        for error in e.errors():
            cause = error.get("ctx", {}).get("error")
            if isinstance(cause, FamilyContractError):
                raise cause from e
        raise CharnumError(f"family payload does not match schema: {e}") from e


def family_hash(family: GeneratorFamily) -> str:
    return family.family_hash


def stabilize_generator(tilde: CharVector) -> Tuple[CharVector, CharVector]:
    """
    From a variety whose top s-number is 1 mod n+1, build K^n_+ with top
    entry 1 by adding copies of -CP^n (or CP^n), then K^n_- = (-CP^n) + n K^n_+.
    """
    if tilde.basis is not Basis.S:
        raise BasisMismatchError("stabilize_generator needs an s-vector")
    n = tilde.dim
    if n < 1:
        raise CharnumError("generators have positive dimension")
    m, rem = divmod(tilde.top - 1, n + 1)
    if rem:
        raise FamilyContractError(
            f"top s-number {tilde.top} is not 1 mod {n + 1} at dimension {n}"
        )
    cp = projective_space_svec(n)
    correction = scale_svec(negate_svec(cp), m) if m >= 0 else scale_svec(cp, -m)
    plus = disjoint_union_svec(tilde, correction)
    minus = disjoint_union_svec(negate_svec(cp), scale_svec(plus, n))
    return (plus.model_copy(update={"label": f"K^{n}_+"}),
            minus.model_copy(update={"label": f"K^{n}_-"}))


def family_from_tilde(tildes: Sequence[CharVector]) -> GeneratorFamily:
    bases = []
    for i, tilde in enumerate(tildes, start=1):
        if tilde.dim != i:
            raise CharnumError(f"expected dimension {i}, got {tilde.dim}")
        plus, minus = stabilize_generator(tilde)
        bases.append(GeneratorBase(dim=i, plus=plus, minus=minus))
    return GeneratorFamily(n=len(bases), bases=tuple(bases), provenance=FamilyProvenance.DERIVED)


# --------------------------------------------------------------------------
# Generator vectors and the triangular matrix
# --------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _generator_entries(family: GeneratorFamily, J: Partition, sign: Sign) -> Tuple[int, ...]:
    factors = [family.base(j, sign if l == 0 else Sign.PLUS) for l, j in enumerate(J)]
    return product_of(factors).entries


def build_generator_svec(family: GeneratorFamily, J: Sequence[int], sign: Sign) -> CharVector:
    """s-vector of K^J_sign; only the first factor carries the sign."""
    J = Partition(J)
    if not J:
        raise CharnumError("generators are indexed by nonempty partitions")
    if J.weight > family.n:
        raise CharnumError(f"family covers dimensions up to {family.n}, got weight {J.weight}")
    return CharVector(dim=J.weight, basis=Basis.S, entries=_generator_entries(family, J, sign),
                      label=f"K^{list(J)}_{sign.value}")


def build_generator_matrix(family: GeneratorFamily, n: int) -> List[List[int]]:
    """Rows I, columns J over partitions of n; column J is s(K^J_+)."""
    if n > family.n:
        raise CharnumError(f"family covers dimensions up to {family.n}, got {n}")
    index = enumerate_partitions(n)
    columns = [build_generator_svec(family, J, Sign.PLUS).entries for J in index]
    return [[columns[j][i] for j in range(len(index))] for i in range(len(index))]


def is_unit_triangular(matrix: List[List[int]], n: int) -> bool:
    index = enumerate_partitions(n)
    for i, I in enumerate(index):
        for j, J in enumerate(index):
            if i == j and matrix[i][j] != 1:
                return False
            if lex_compare(I, J) is Order.GREATER and matrix[i][j] != 0:
                return False
    return True


# --------------------------------------------------------------------------
# Solvers
# --------------------------------------------------------------------------

def realize_s(target: CharVector, family: GeneratorFamily) -> Recipe:
    """
    Back-substitution in descending canonical order: the residual entry r at
    J is cleared with |r| copies of K^J_+ (r > 0) or K^J_- (r < 0). Columns
    are unit triangular, so later steps never touch cleared entries.
    """
    if target.basis is not Basis.S:
        raise BasisMismatchError("realize_s needs an s-basis target")
    n = target.dim
    if n < 1:
        raise CharnumError("targets must have positive dimension")
    if n > family.n:
        raise CharnumError(f"family covers dimensions up to {family.n}, target has dimension {n}")
    residual = list(target.entries)
    items: List[RecipeItem] = []
    for j, J in enumerate(enumerate_partitions(n)):
        r = residual[j]
        if r == 0:
            continue
        sign = Sign.PLUS if r > 0 else Sign.MINUS
        column = build_generator_svec(family, J, sign).entries
        mult = abs(r)
        residual = [x - mult * c for x, c in zip(residual, column)]
        items.append(RecipeItem(partition=J, sign=sign, multiplicity=mult))
    if any(residual):
        raise RecipeIntegrityError(f"nonzero residual after back-substitution: {residual}")
    logger.debug("realized dimension %d target with %d recipe items", n, len(items))
    realized = target.model_copy(update={"label": None, "virtual": False})
    return Recipe(target=target, items=tuple(items), realized=realized,
                  family_hash=family_hash(family), family_provenance=family.provenance)


def realize_c(target: CharVector, family: GeneratorFamily,
              A: Optional[TransitionMatrix] = None) -> Recipe:
    """Realize prescribed c-numbers: pull back to s-numbers through A^-1."""
    if target.basis is not Basis.C:
        raise BasisMismatchError("realize_c needs a c-basis target")
    A = A or transition_matrix_A(target.dim)
    s_target = convert_basis(target, A)
    recipe = realize_s(s_target, family)
    if convert_basis(recipe.realized, A).entries != target.entries:
        raise RecipeIntegrityError("realized vector does not convert back to the c-target")
    return recipe.model_copy(update={"target": target})


def verify_recipe(recipe: Recipe, family: GeneratorFamily) -> CharVector:
    """Recompute the realized s-vector from the items alone."""
    n = recipe.realized.dim
    total = [0] * partition_count(n)
    for item in recipe.items:
        J = Partition(item.partition)
        if J.weight != n:
            raise RecipeIntegrityError(f"item {list(J)} does not have weight {n}")
        column = build_generator_svec(family, J, item.sign).entries
        total = [t + item.multiplicity * c for t, c in zip(total, column)]
    recomputed = CharVector(dim=n, basis=Basis.S, entries=tuple(total))
    if recomputed.entries != recipe.realized.entries:
        raise RecipeIntegrityError(
            f"recipe realizes {list(recomputed.entries)}, recorded {list(recipe.realized.entries)}"
        )
    return recomputed


def rational_smooth_realize(target: CharVector) -> SmoothDecomposition:
    """
    Solve against products of projective spaces CP^J. The system is
    triangular with diagonal prod(j_l + 1), so coefficients are rational
    in general.
    """
    if target.basis is not Basis.S:
        raise BasisMismatchError("rational_smooth_realize needs an s-basis target")
    n = target.dim
    index = enumerate_partitions(n)
    if n == 0:
        return SmoothDecomposition(target=target, terms=[SmoothTerm(partition=(), numerator=target.entries[0], denominator=1)])
    columns: Dict[Partition, Tuple[int, ...]] = {
        J: product_of([projective_space_svec(j) for j in J]).entries for J in index
    }
    residual = [Fraction(x) for x in target.entries]
    terms: List[SmoothTerm] = []
    for j, J in enumerate(index):
        diagonal = columns[J][j]
        assert diagonal == prod(part + 1 for part in J), (J, diagonal)
        coeff = residual[j] / diagonal
        if coeff:
            residual = [x - coeff * c for x, c in zip(residual, columns[J])]
        terms.append(SmoothTerm(partition=tuple(J), numerator=coeff.numerator, denominator=coeff.denominator))
    if any(residual):
        raise RecipeIntegrityError(f"nonzero residual in smooth decomposition: {residual}")
    return SmoothDecomposition(target=target, terms=terms)
