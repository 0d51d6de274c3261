import argparse

# Import submodules, each exposing register(subparsers)
from .partition_commands import register as register_partitions
from .symfunc_commands import register as register_symfunc
from .catalog_commands import register as register_catalog
from .realize_commands import register as register_realize
from .euler_commands import register as register_euler
from .selftest_commands import register as register_selftest

COMMAND_GROUPS = [
    register_partitions,
    register_symfunc,
    register_catalog,
    register_realize,
    register_euler,
    register_selftest,
]


def register_all(subparsers: argparse._SubParsersAction) -> None:
    for register in COMMAND_GROUPS:
        register(subparsers)


__all__ = ["register_all"]
