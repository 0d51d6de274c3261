import argparse
import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Sequence

from config import config
from models import Basis, CharVector, FamilyProvenance, GeneratorFamily
from partitions import Partition, partition_count
from realization import default_family, family_from_payload, random_family
from utils import CharnumError, parse_int_list, seeded_rng

logger = logging.getLogger(__name__)


def output_parent() -> argparse.ArgumentParser:
    """Flags shared by every verb."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="write JSON to standard output")
    return parent


def family_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_mutually_exclusive_group()
    group.add_argument("--family", metavar="PATH", help="generator family JSON file")
    group.add_argument("--random-family", action="store_true",
                       help="use a random family seeded by CHARNUM_SEED")
    return parent


def check_dim(n: int, minimum: int = 1) -> int:
    if n < minimum:
        raise CharnumError(f"dimension must be at least {minimum}, got {n}")
    if n > config.MAX_DIM:
        raise CharnumError(f"dimension {n} exceeds CHARNUM_MAX_DIM={config.MAX_DIM}")
    return n


def read_json_file(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise CharnumError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise CharnumError(f"{path} is not valid JSON: {e}") from e


def load_family(path: Optional[str], n: int, random_seeded: bool = False) -> GeneratorFamily:
    """
    Family from a JSON file, a seeded random family, or the default family
    with zero lower entries. The family must cover dimension n.
    """
    if path:
        family = family_from_payload(read_json_file(path), FamilyProvenance.FILE)
        logger.info("loaded family of size %d from %s", family.n, path)
    elif random_seeded:
        family = random_family(n, seeded_rng())
    else:
        family = default_family(n)
    if family.n < n:
        raise CharnumError(f"family covers dimensions up to {family.n}, need {n}")
    return family


def parse_partition(text: str) -> Partition:
    """Accept "[2,1]" or "2,1"."""
    text = text.strip()
    if not text.startswith("["):
        text = f"[{text}]"
    return Partition.from_parts(parse_int_list(text))


def parse_vector(text: str, dim: int, basis: Basis) -> CharVector:
    entries = parse_int_list(text)
    if len(entries) != partition_count(dim):
        raise CharnumError(
            f"dimension {dim} needs {partition_count(dim)} entries, got {len(entries)}"
        )
    return CharVector(dim=dim, basis=basis, entries=entries)


def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> List[str]:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return lines


def vector_table(v: CharVector) -> List[str]:
    rows = [(list(I), x) for I, x in zip(v.index, v.entries)]
    title = f"{v.label or 'vector'} (dim {v.dim}, {v.basis.value}-basis{', virtual' if v.virtual else ''})"
    return [title] + format_table(["partition", f"{v.basis.value}_I"], rows)
