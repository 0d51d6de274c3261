from catalog import (
    cone_s_top_mod,
    convert_basis,
    direct_product_oracle,
    divisibility_check,
    negate_svec,
    product_of,
    product_svec,
    projective_space_svec,
    veronese,
    veronese_cone_pipeline,
)
from models import Basis, EmbeddedVariety
from utils import CharnumError, parse_int_list

from .common import check_dim, output_parent, parse_vector, vector_table


def _dims(text: str) -> list:
    dims = parse_int_list(text if text.strip().startswith("[") else f"[{text}]")
    if not dims or any(a < 1 for a in dims):
        raise CharnumError(f"dimensions must be positive, got {dims}")
    check_dim(sum(dims))
    return dims


def projective_product(dims: list):
    v = product_of([projective_space_svec(a) for a in dims])
    return v.model_copy(update={"label": " x ".join(f"CP^{a}" for a in dims)})


def show_svec(args):
    dims = _dims(args.dims)
    v = direct_product_oracle(dims) if args.oracle else projective_product(dims)
    if args.negate:
        v = negate_svec(v)
    if args.basis == Basis.C.value:
        v = convert_basis(v)
    return v, vector_table(v)


def multiply(args):
    left = parse_vector(args.left, check_dim(args.left_dim, 0), Basis.S)
    right = parse_vector(args.right, check_dim(args.right_dim, 0), Basis.S)
    check_dim(left.dim + right.dim)
    v = product_svec(left, right)
    return v, vector_table(v)


def cone_congruence(args):
    if args.base is None:
        result = veronese_cone_pipeline(check_dim(args.dim, 2))
    else:
        base_dim = check_dim(args.dim - 1)
        X = EmbeddedVariety(svec=parse_vector(args.base, base_dim, Basis.S), divisibility=1)
        result = cone_s_top_mod(veronese(X, args.divisibility or args.dim + 1))
    lines = [
        f"s_{result.n}[CX] = {result.n} * {result.s_base} = {result.residue} mod {result.modulus}"
        + ("  (1 mod d)" if result.is_one else "")
    ]
    return result, lines


def divisibility(args):
    if args.target is not None:
        if args.dim is None:
            raise CharnumError("--target needs --dim")
        v = parse_vector(args.target, check_dim(args.dim), Basis.C)
    else:
        v = convert_basis(projective_product(_dims(args.dims)))
    report = divisibility_check(v, v.dim)
    verdict = "divides" if report.divisible else "does not divide"
    lines = [f"{report.combination} = {report.value}; {report.divisor} {verdict} it"]
    return report, lines


def register(subparsers):
    parent = output_parent()

    p = subparsers.add_parser("svec", parents=[parent], help="characteristic numbers of CP^a1 x ... x CP^aq")
    p.add_argument("--dims", required=True, help='dimensions of the factors, e.g. "[1,2]"')
    p.add_argument("--basis", choices=[b.value for b in Basis], default=Basis.S.value)
    p.add_argument("--oracle", action="store_true", help="compute in the truncated cohomology ring")
    p.add_argument("--negate", action="store_true", help="formal negative of the product")
    p.set_defaults(handler=show_svec)

    p = subparsers.add_parser("product", parents=[parent], help="product formula on two s-vectors")
    p.add_argument("--left", required=True)
    p.add_argument("--left-dim", type=int, required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--right-dim", type=int, required=True)
    p.set_defaults(handler=multiply)

    p = subparsers.add_parser("cone-congruence", parents=[parent], help="s_n of a cone modulo d")
    p.add_argument("--dim", type=int, required=True, help="dimension n of the cone")
    p.add_argument("--base", default=None, help="s-vector of the base X (dimension n-1); default CP^(n-1)")
    p.add_argument("--divisibility", type=int, default=None,
                   help="Veronese degree applied to the base (default n+1)")
    p.set_defaults(handler=cone_congruence)

    p = subparsers.add_parser("divisibility", parents=[parent], help="classical divisibility of c-numbers")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dims", help="product of projective spaces")
    group.add_argument("--target", help="c-vector as a JSON array (needs --dim)")
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(handler=divisibility)
