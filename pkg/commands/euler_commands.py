from euler import cuspidal_cubic, euler_integral
from models import ConstructibleFunction, EulerResult, StratifiedSpace
from utils import CharnumError

from .common import format_table, output_parent, read_json_file

FIXTURES = {"cuspidal-cubic": cuspidal_cubic}


def integrate(args):
    if args.fixture:
        space, f = FIXTURES[args.fixture]()
    elif args.space and args.function:
        space = StratifiedSpace.model_validate(read_json_file(args.space))
        f = ConstructibleFunction.model_validate(read_json_file(args.function))
    else:
        raise CharnumError("give --fixture, or both --space and --function")
    value = euler_integral(space, f)
    rows = [(s.label, s.chi_c, f.values[s.label]) for s in space.strata]
    payload = EulerResult(strata=space.strata, values=f.values, integral=value)
    return payload, format_table(["stratum", "chi_c", "f"], rows) + [f"integral = {value}"]


def register(subparsers):
    parent = output_parent()

    p = subparsers.add_parser("euler-integral", parents=[parent],
                              help="integral of a constructible function against chi_c")
    p.add_argument("--fixture", choices=sorted(FIXTURES))
    p.add_argument("--space", metavar="PATH", help='{"strata": [{"label": ..., "chi_c": ...}]}')
    p.add_argument("--function", metavar="PATH", help='{"values": {label: int}}')
    p.set_defaults(handler=integrate)
