import logging
import random
import time
from typing import Callable, List, Tuple

from catalog import (
    convert_basis,
    direct_product_oracle,
    divisibility_check,
    product_cvec_oracle,
    product_of,
    projective_space_svec,
    veronese_cone_pipeline,
)
from config import config
from euler import cuspidal_cubic, euler_integral, pull_back, refine_stratification
from models import Basis, CharVector, CheckResult, SelftestReport
from partitions import partition_count
from realization import (
    build_generator_matrix,
    default_family,
    is_unit_triangular,
    random_family,
    realize_c,
    realize_s,
    verify_recipe,
)
from symfunc import transition_matrix_A
from utils import seeded_rng

from .common import check_dim, format_table, output_parent

logger = logging.getLogger(__name__)


def compositions(total: int) -> List[Tuple[int, ...]]:
    """Ordered tuples of positive integers summing to total."""
    if total == 0:
        return [()]
    return [(head,) + tail for head in range(1, total + 1) for tail in compositions(total - head)]


def check_unimodular(max_dim: int, rng: random.Random) -> bool:
    return all(abs(transition_matrix_A(n).det()) == 1 for n in range(1, 11))


def check_projective_top(max_dim: int, rng: random.Random) -> bool:
    return all(projective_space_svec(n).top == n + 1 for n in range(1, 11))


def check_product_oracle(max_dim: int, rng: random.Random) -> bool:
    for total in range(1, 7):
        for dims in compositions(total):
            if product_of([projective_space_svec(a) for a in dims]).entries != direct_product_oracle(dims).entries:
                logger.error("product formula disagrees with the ring oracle for %s", dims)
                return False
    return True


def check_triangular(max_dim: int, rng: random.Random) -> bool:
    families = [default_family(max_dim)] + [random_family(max_dim, rng) for _ in range(10)]
    return all(
        is_unit_triangular(build_generator_matrix(family, n), n)
        for family in families
        for n in range(1, max_dim + 1)
    )


def check_roundtrip(max_dim: int, rng: random.Random) -> bool:
    """
    For every n: ROUNDTRIP_SAMPLES targets on the default family and as many
    again spread over ten random families, in both bases.
    """
    bound = 10 ** 6
    samples = config.ROUNDTRIP_SAMPLES
    default = default_family(max_dim)
    randoms = [random_family(max_dim, rng) for _ in range(10)]
    for n in range(1, max_dim + 1):
        A = transition_matrix_A(n)
        runs = [default] * samples + [randoms[k % len(randoms)] for k in range(samples)]
        for family in runs:
            entries = tuple(rng.randint(-bound, bound) for _ in range(partition_count(n)))
            recipe = realize_s(CharVector(dim=n, basis=Basis.S, entries=entries), family)
            if verify_recipe(recipe, family).entries != entries:
                logger.error("s round trip failed at n=%d for %s", n, list(entries))
                return False
            c_recipe = realize_c(CharVector(dim=n, basis=Basis.C, entries=entries), family, A)
            if convert_basis(verify_recipe(c_recipe, family), A).entries != entries:
                logger.error("c round trip failed at n=%d for %s", n, list(entries))
                return False
    return True


def check_cone(max_dim: int, rng: random.Random) -> bool:
    return all(veronese_cone_pipeline(n).residue == 1 for n in range(2, 11))


def check_euler(max_dim: int, rng: random.Random) -> bool:
    space, eu = cuspidal_cubic()
    if euler_integral(space, eu) != 3:
        return False
    for k in range(20):
        a = rng.randint(-5, 5)
        split = {"regular": [(f"cell{k}a", a), (f"cell{k}b", 1 - a)]}
        finer = refine_stratification(space, split)
        if euler_integral(finer, pull_back(eu, split)) != 3:
            return False
    return True


def check_divisibility(max_dim: int, rng: random.Random) -> bool:
    for total in (1, 2, 3):
        for dims in compositions(total):
            c = convert_basis(product_of([projective_space_svec(a) for a in dims]))
            if not divisibility_check(c, total).divisible:
                return False
    return True


def check_cross_basis(max_dim: int, rng: random.Random) -> bool:
    for total in range(1, 5):
        for dims in compositions(total):
            s = product_of([projective_space_svec(a) for a in dims])
            if convert_basis(s).entries != product_cvec_oracle(dims).entries:
                return False
    return True


CHECKS: List[Tuple[str, Callable[[int, random.Random], bool]]] = [
    ("unimodular A, n <= 10", check_unimodular),
    ("s_n[CP^n] = n+1, n <= 10", check_projective_top),
    ("product formula = ring oracle, total <= 6", check_product_oracle),
    ("generator matrix unit triangular", check_triangular),
    ("realize/verify round trip (s and c)", check_roundtrip),
    ("Veronese cone top = 1 mod n+1", check_cone),
    ("cuspidal cubic integral = 3", check_euler),
    ("divisibility of products, dim <= 3", check_divisibility),
    ("c = A s against ring oracle, total <= 4", check_cross_basis),
]


def selftest(args):
    max_dim = check_dim(args.max_dim)
    rng = seeded_rng()
    rows = []
    results = []
    for name, check in CHECKS:
        started = time.perf_counter()
        ok = check(max_dim, rng)
        elapsed = time.perf_counter() - started
        logger.info("%s: %s in %.2fs", name, "pass" if ok else "FAIL", elapsed)
        rows.append((name, "pass" if ok else "FAIL"))
        results.append(CheckResult(check=name, passed=ok))
    payload = SelftestReport(seed=config.SEED, samples=config.ROUNDTRIP_SAMPLES, checks=results)
    return payload, format_table(["check", "result"], rows)


def register(subparsers):
    parent = output_parent()

    p = subparsers.add_parser("selftest", parents=[parent], help="run the exact property checks")
    p.add_argument("--max-dim", type=int, default=8, help="largest dimension for generator checks")
    p.set_defaults(handler=selftest)
