"""
Integration of constructible functions against the Euler characteristic on
finite stratified descriptions. The top c-number of a compact variety is the
integral of its local Euler obstruction.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple

from models import ConstructibleFunction, StratifiedSpace, Stratum
from utils import StratificationError

logger = logging.getLogger(__name__)


def euler_integral(space: StratifiedSpace, f: ConstructibleFunction) -> int:
    missing = [label for label in space.labels if label not in f.values]
    if missing:
        raise StratificationError(f"function has no value on strata {missing}")
    return sum(f.values[s.label] * s.chi_c for s in space.strata)


def refine_stratification(
    space: StratifiedSpace, split: Dict[str, Sequence[Tuple[str, int]]]
) -> StratifiedSpace:
    """
    Replace strata by finer pieces. The pieces of a stratum must have chi_c
    summing to the chi_c of the stratum they replace.
    """
    unknown = set(split) - set(space.labels)
    if unknown:
        raise StratificationError(f"cannot split unknown strata {sorted(unknown)}")
    strata: List[Stratum] = []
    for s in space.strata:
        if s.label not in split:
            strata.append(s)
            continue
        pieces = [Stratum(label=label, chi_c=chi) for label, chi in split[s.label]]
        total = sum(p.chi_c for p in pieces)
        if total != s.chi_c:
            raise StratificationError(
                f"pieces of {s.label!r} have chi_c summing to {total}, expected {s.chi_c}"
            )
        strata.extend(pieces)
    try:
        return StratifiedSpace(strata=tuple(strata))
    except ValueError as e:
        raise StratificationError(str(e)) from e


def pull_back(f: ConstructibleFunction, split: Dict[str, Sequence[Tuple[str, int]]]) -> ConstructibleFunction:
    """Extend f to a refinement, constant on the pieces of each split stratum."""
    values = dict(f.values)
    for label, pieces in split.items():
        value = values.pop(label)
        for piece, _ in pieces:
            values[piece] = value
    return ConstructibleFunction(values=values)


def combine(f: ConstructibleFunction, g: ConstructibleFunction, a: int = 1, b: int = 1) -> ConstructibleFunction:
    """a*f + b*g on the strata where both are defined."""
    labels = set(f.values) & set(g.values)
    return ConstructibleFunction(values={k: a * f.values[k] + b * g.values[k] for k in sorted(labels)})


def smooth_space(label: str, chi_c: int) -> StratifiedSpace:
    return StratifiedSpace(strata=(Stratum(label=label, chi_c=chi_c),))


def constant_function(space: StratifiedSpace, value: int) -> ConstructibleFunction:
    return ConstructibleFunction(values={label: value for label in space.labels})


def cuspidal_cubic() -> Tuple[StratifiedSpace, ConstructibleFunction]:
    """
    Closure in CP^2 of the semicubical parabola x^2 = y^3, stratified as the
    cusp and its complement (a copy of C, chi_c = 1). The Euler obstruction
    at the cusp, 2, is input data from the literature.
    """
    space = StratifiedSpace(strata=(Stratum(label="cusp", chi_c=1), Stratum(label="regular", chi_c=1)))
    eu = ConstructibleFunction(values={"cusp": 2, "regular": 1})
    return space, eu
