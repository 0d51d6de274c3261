from __future__ import annotations
import hashlib
import json
from typing import Any, Dict, List, Optional, Tuple, Annotated
from enum import Enum
from fractions import Fraction

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    SerializationInfo,
    ValidationInfo,
    computed_field,
    field_serializer,
    field_validator,
    model_validator,
)

from partitions import Partition, enumerate_partitions, partition_count, partition_index
from utils import FamilyContractError, as_integer

# Exact integer: JSON numbers or decimal strings in, decimal strings out.
BigInt = Annotated[
    int,
    BeforeValidator(as_integer),
    PlainSerializer(str, return_type=str, when_used="json"),
]


# --------------------------------------------------------------------------
# ENUMS
# --------------------------------------------------------------------------

class Basis(str, Enum):
    """Which characteristic numbers a vector holds."""
    S = "s"
    C = "c"


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"


class FamilyProvenance(str, Enum):
    DEFAULT = "default"
    FILE = "file"
    RANDOM = "random"
    DERIVED = "derived"


# --------------------------------------------------------------------------
# Characteristic-number vectors
# --------------------------------------------------------------------------

class CharVector(BaseModel):
    """
    Integer vector indexed by the partitions of dim in canonical order.
    virtual marks formal combinations that involve a negation.
    """
    model_config = ConfigDict(frozen=True)

    dim: Annotated[int, Field(ge=0)]
    basis: Basis
    entries: Tuple[BigInt, ...]
    virtual: bool = False
    label: Optional[str] = None

    @field_validator("entries", mode="before")
    @classmethod
    def _as_tuple(cls, value: Any) -> Any:
        if isinstance(value, (str, bytes, dict)) or not hasattr(value, "__iter__"):
            return value
        return tuple(value)

    @model_validator(mode="after")
    def _check_length(self) -> "CharVector":
        expected = partition_count(self.dim)
        if len(self.entries) != expected:
            raise ValueError(
                f"dimension {self.dim} needs {expected} entries, got {len(self.entries)}"
            )
        return self

    @computed_field
    @property
    def index(self) -> List[Tuple[int, ...]]:
        return [tuple(I) for I in enumerate_partitions(self.dim)]

    def entry(self, I: Tuple[int, ...]) -> int:
        return self.entries[partition_index(self.dim)[Partition(I)]]

    @property
    def top(self) -> int:
        """Entry at the one-part partition (dim)."""
        return self.entries[0]

    @classmethod
    def zero(cls, dim: int, basis: Basis = Basis.S) -> "CharVector":
        return cls(dim=dim, basis=basis, entries=(0,) * partition_count(dim))

    @classmethod
    def from_mapping(cls, dim: int, basis: Basis, values: Dict[Tuple[int, ...], int], **extra: Any) -> "CharVector":
        return cls(
            dim=dim,
            basis=basis,
            entries=tuple(values.get(I, 0) for I in enumerate_partitions(dim)),
            **extra,
        )


def _entries_of(v: CharVector, info: SerializationInfo) -> list:
    return list(v.model_dump(mode=info.mode)["entries"])


class EmbeddedVariety(BaseModel):
    """A variety with the divisibility d of its restricted hyperplane class."""
    model_config = ConfigDict(frozen=True)

    svec: CharVector
    divisibility: Annotated[int, Field(ge=1)] = 1
    ambient_dim: Optional[int] = None


class DivisibilityReport(BaseModel):
    dim: int
    combination: str
    value: BigInt
    divisor: int
    divisible: bool


class ConeCongruence(BaseModel):
    n: int
    s_base: BigInt
    modulus: int
    residue: BigInt

    @computed_field
    @property
    def is_one(self) -> bool:
        return self.residue == 1 % self.modulus


# --------------------------------------------------------------------------
# Generators and recipes
# --------------------------------------------------------------------------

class GeneratorBase(BaseModel):
    """s-vectors of K^i_+ and K^i_- for one dimension i. Files carry plain entry lists."""
    model_config = ConfigDict(frozen=True)

    dim: Annotated[int, Field(ge=1)]
    plus: CharVector
    minus: CharVector

    @field_validator("plus", "minus", mode="before")
    @classmethod
    def _from_entries(cls, value: Any, info: ValidationInfo) -> Any:
        if isinstance(value, (list, tuple)):
            return {"dim": info.data.get("dim"), "basis": Basis.S, "entries": value}
        return value

    @model_validator(mode="after")
    def _check_contract(self) -> "GeneratorBase":
        for name, vec in (("plus", self.plus), ("minus", self.minus)):
            if vec.dim != self.dim or vec.basis is not Basis.S:
                raise ValueError(f"{name} base of dimension {self.dim} must be an s-vector of that dimension")
        if self.plus.top != 1 or self.minus.top != -1:
            raise FamilyContractError(
                f"Lemma 2 contract violated at dimension {self.dim}: "
                f"top entries are {self.plus.top} and {self.minus.top}, expected +1 and -1"
            )
        return self

    @field_serializer("plus", "minus")
    def _dump_entries(self, v: CharVector, info: SerializationInfo) -> list:
        return _entries_of(v, info)


class GeneratorFamily(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: Annotated[int, Field(ge=0)]
    bases: Tuple[GeneratorBase, ...]
    provenance: FamilyProvenance = FamilyProvenance.DEFAULT

    @field_validator("bases", mode="after")
    @classmethod
    def _by_dimension(cls, value: Tuple[GeneratorBase, ...]) -> Tuple[GeneratorBase, ...]:
        return tuple(sorted(value, key=lambda b: b.dim))

    @model_validator(mode="after")
    def _check_dims(self) -> "GeneratorFamily":
        dims = [b.dim for b in self.bases]
        if dims != list(range(1, self.n + 1)):
            raise ValueError(f"family of size {self.n} needs bases for dimensions 1..{self.n}, got {dims}")
        return self

    @computed_field
    @property
    def family_hash(self) -> str:
        """sha256 of the compact JSON of the bases; provenance is not hashed."""
        canonical = json.dumps(
            [[b.dim, [str(x) for x in b.plus.entries], [str(x) for x in b.minus.entries]] for b in self.bases],
            separators=(",", ":"),
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def base(self, i: int, sign: Sign) -> CharVector:
        b = self.bases[i - 1]
        return b.plus if sign is Sign.PLUS else b.minus


class RecipeItem(BaseModel):
    model_config = ConfigDict(frozen=True)

    partition: Tuple[int, ...]
    sign: Sign
    multiplicity: Annotated[BigInt, Field(ge=1)]

    @field_validator("partition", mode="before")
    @classmethod
    def _canonical(cls, value: Any) -> Tuple[int, ...]:
        return tuple(Partition(value))


class Recipe(BaseModel):
    """
    Nonnegative combination of generators K^J_+/- with its realized vector.
    The JSON document is flat: dim, basis and index are written once and
    target / realized are entry lists.
    """
    model_config = ConfigDict(frozen=True)

    target: CharVector
    items: Tuple[RecipeItem, ...]
    realized: CharVector
    family_hash: str
    family_provenance: FamilyProvenance = FamilyProvenance.DEFAULT

    @model_validator(mode="before")
    @classmethod
    def _from_document(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("target"), (list, tuple)):
            data = dict(data)
            dim = data.get("dim")
            data["target"] = {"dim": dim, "basis": data.get("basis"), "entries": data["target"]}
            if isinstance(data.get("realized"), (list, tuple)):
                data["realized"] = {"dim": dim, "basis": Basis.S, "entries": data["realized"]}
        return data

    @computed_field
    @property
    def dim(self) -> int:
        return self.target.dim

    @computed_field
    @property
    def basis(self) -> Basis:
        return self.target.basis

    @computed_field
    @property
    def index(self) -> List[Tuple[int, ...]]:
        return self.target.index

    @field_serializer("target", "realized")
    def _dump_entries(self, v: CharVector, info: SerializationInfo) -> list:
        return _entries_of(v, info)


class SmoothTerm(BaseModel):
    """Rational coefficient on a product of projective spaces."""
    partition: Tuple[int, ...]
    numerator: BigInt
    denominator: Annotated[BigInt, Field(ge=1)]

    @property
    def coefficient(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


class SmoothDecomposition(BaseModel):
    target: CharVector
    terms: List[SmoothTerm]

    @computed_field
    @property
    def integral(self) -> bool:
        return all(t.denominator == 1 for t in self.terms)


# --------------------------------------------------------------------------
# Stratified spaces and constructible functions
# --------------------------------------------------------------------------

class Stratum(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: Annotated[str, Field(min_length=1)]
    chi_c: BigInt


class StratifiedSpace(BaseModel):
    """Finite strata with compactly supported Euler characteristics."""
    model_config = ConfigDict(frozen=True)

    strata: Tuple[Stratum, ...]

    @model_validator(mode="after")
    def _distinct_labels(self) -> "StratifiedSpace":
        labels = [s.label for s in self.strata]
        if len(set(labels)) != len(labels):
            raise ValueError(f"stratum labels must be distinct: {labels}")
        return self

    @property
    def labels(self) -> List[str]:
        return [s.label for s in self.strata]


class ConstructibleFunction(BaseModel):
    values: Dict[str, BigInt]


# --------------------------------------------------------------------------
# Command responses
# --------------------------------------------------------------------------

class PartitionListing(BaseModel):
    n: int
    count: int
    partitions: List[Tuple[int, ...]]


class SplittingListing(BaseModel):
    partition: Tuple[int, ...]
    shape: List[int]
    splittings: List[List[Tuple[int, ...]]]


class RefinementAnswer(BaseModel):
    partition: Tuple[int, ...]
    of: Tuple[int, ...]
    refinement: bool


class PolynomialTerm(BaseModel):
    exponents: Tuple[int, ...]
    coeff: BigInt


class PolynomialListing(BaseModel):
    partition: Tuple[int, ...]
    nvars: int
    terms: List[PolynomialTerm]


class MatrixListing(BaseModel):
    n: int
    index: List[Tuple[int, ...]]
    entries: List[List[BigInt]]
    det: BigInt
    inverse: bool


class VerifyResult(BaseModel):
    dim: int
    verified: bool
    realized: Tuple[BigInt, ...]


class EulerResult(BaseModel):
    strata: Tuple[Stratum, ...]
    values: Dict[str, BigInt]
    integral: BigInt


class CheckResult(BaseModel):
    check: str
    passed: bool


class SelftestReport(BaseModel):
    seed: int
    samples: int
    checks: List[CheckResult]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)
