import json
import logging
import numbers
import random
import re
import sys
from typing import Any, Optional

from pydantic import BaseModel

from config import config

DECIMAL = re.compile(r"[+-]?\d+")


class CharnumError(ValueError):
    """Base class for every domain error raised by the library."""


class WeightMismatchError(CharnumError):
    pass


class BasisMismatchError(CharnumError):
    pass


class NotUnimodularError(CharnumError):
    pass


class FamilyContractError(CharnumError):
    pass


class RecipeIntegrityError(CharnumError):
    pass


class StratificationError(CharnumError):
    pass


class NoDivisibilityRuleError(CharnumError):
    pass


def configure_logging(level: Optional[str] = None) -> None:
    # stderr only; stdout carries the command payload
    logging.basicConfig(
        level=(level or config.LOG_LEVEL).upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def seeded_rng(seed: Optional[int] = None) -> random.Random:
    return random.Random(config.SEED if seed is None else seed)


def as_integer(value: Any) -> int:
    """
    Accept a Python integer or a decimal string. Floats and booleans are
    rejected so that no value is silently truncated.
    """
    if isinstance(value, bool):
        raise CharnumError(f"expected an integer, got {value!r}")
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, str) and DECIMAL.fullmatch(value.strip()):
        return int(value.strip())
    raise CharnumError(f"expected an integer or a decimal string, got {value!r}")


def dump_json(payload: BaseModel) -> str:
    """
    Serialize a response model. Integer fields typed as big integers on the
    models come out as decimal strings in JSON mode.
    """
    return json.dumps(
        payload.model_dump(mode="json", exclude_none=True),
        indent=config.JSON_INDENT,
        sort_keys=True,
    )


def parse_int_list(text: str) -> list:
    """Parse a JSON array of integers (numbers or decimal strings)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CharnumError(f"malformed JSON array: {e}") from e
    if not isinstance(data, list):
        raise CharnumError("expected a JSON array")
    return [as_integer(x) for x in data]
