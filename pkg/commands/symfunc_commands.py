from models import MatrixListing, PolynomialListing
from symfunc import inverse_unimodular, s_poly, transition_matrix_A

from .common import check_dim, format_table, output_parent, parse_partition


def show_s_poly(args):
    I = parse_partition(args.partition)
    check_dim(I.weight)
    poly = s_poly(I, args.nvars)
    payload = PolynomialListing(partition=I, nvars=args.nvars or I.weight, terms=poly.to_dict())
    return payload, [f"s_{list(I)} = {poly}"]


def show_matrix_a(args):
    n = check_dim(args.n)
    A = transition_matrix_A(n)
    det = A.det()
    matrix = inverse_unimodular(A) if args.inverse else A
    payload = MatrixListing(**matrix.to_dict(), det=det, inverse=args.inverse)
    name = "A^-1" if args.inverse else "A"
    headers = ["row \\ col"] + [str(list(J)) for J in matrix.index]
    rows = [[str(list(I))] + row for I, row in zip(matrix.index, matrix.rows())]
    lines = [f"{name} for n = {n}, det(A) = {det}"] + format_table(headers, rows)
    return payload, lines


def register(subparsers):
    parent = output_parent()

    p = subparsers.add_parser("s-poly", parents=[parent], help="s_I in elementary symmetric variables")
    p.add_argument("partition", help='e.g. "[2,1]"')
    p.add_argument("--nvars", type=int, default=None, help="number of t variables (default: weight)")
    p.set_defaults(handler=show_s_poly)

    p = subparsers.add_parser("matrix-a", parents=[parent], help="transition matrix with c = A s")
    p.add_argument("n", type=int)
    p.add_argument("--inverse", action="store_true", help="print the integer inverse instead")
    p.set_defaults(handler=show_matrix_a)
