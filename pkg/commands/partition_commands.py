from models import PartitionListing, RefinementAnswer, SplittingListing
from partitions import enumerate_partitions, is_refinement, splittings
from utils import parse_int_list

from .common import check_dim, format_table, output_parent, parse_partition


def list_partitions(args):
    n = check_dim(args.n, minimum=0)
    parts = enumerate_partitions(n)
    payload = PartitionListing(n=n, count=len(parts), partitions=parts)
    lines = [f"p({n}) = {len(parts)}"] + [f"{i:>4}  {list(p)}" for i, p in enumerate(parts)]
    return payload, lines


def split_partition(args):
    I = parse_partition(args.partition)
    shape = parse_int_list(args.shape if args.shape.strip().startswith("[") else f"[{args.shape}]")
    result = splittings(I, shape)
    payload = SplittingListing(partition=I, shape=shape, splittings=[list(tup) for tup in result])
    lines = format_table(["#"] + [f"I_{l + 1}" for l in range(len(shape))],
                         [[k] + [list(p) for p in tup] for k, tup in enumerate(result)])
    return payload, lines


def refinement(args):
    I = parse_partition(args.partition)
    J = parse_partition(args.of)
    answer = is_refinement(I, J)
    payload = RefinementAnswer(partition=I, of=J, refinement=answer)
    return payload, [f"{list(I)} {'refines' if answer else 'does not refine'} {list(J)}"]


def register(subparsers):
    parent = output_parent()

    p = subparsers.add_parser("partitions", parents=[parent], help="partitions of n in canonical order")
    p.add_argument("n", type=int)
    p.set_defaults(handler=list_partitions)

    p = subparsers.add_parser("splittings", parents=[parent], help="ordered splittings of a partition")
    p.add_argument("partition", help='e.g. "[2,1,1]"')
    p.add_argument("--shape", required=True, help='weights of the pieces, e.g. "[2,2]"')
    p.set_defaults(handler=split_partition)

    p = subparsers.add_parser("refines", parents=[parent], help="refinement test")
    p.add_argument("partition")
    p.add_argument("--of", required=True)
    p.set_defaults(handler=refinement)
