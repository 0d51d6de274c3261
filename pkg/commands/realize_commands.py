import logging

from pydantic import ValidationError

from catalog import convert_basis
from models import Basis, Recipe, VerifyResult
from realization import family_hash, rational_smooth_realize, realize_c, realize_s, verify_recipe
from utils import CharnumError, RecipeIntegrityError

from .common import (
    check_dim,
    family_parent,
    format_table,
    load_family,
    output_parent,
    parse_vector,
    read_json_file,
)

logger = logging.getLogger(__name__)


def _recipe_lines(recipe: Recipe) -> list:
    rows = [(list(it.partition), it.sign.value, it.multiplicity) for it in recipe.items]
    header = (f"recipe for {recipe.target.basis.value}-target {list(recipe.target.entries)} "
              f"(dim {recipe.target.dim}, {recipe.family_provenance.value} family {recipe.family_hash[:12]})")
    if not rows:
        return [header, "(empty recipe)"]
    return [header] + format_table(["J", "sign", "multiplicity"], rows)


def realize(args):
    n = check_dim(args.dim)
    basis = Basis(args.basis)
    target = parse_vector(args.target, n, basis)
    family = load_family(args.family, n, args.random_family)
    recipe = realize_s(target, family) if basis is Basis.S else realize_c(target, family)
    return recipe, _recipe_lines(recipe)


def rational_realize(args):
    n = check_dim(args.dim)
    decomposition = rational_smooth_realize(parse_vector(args.target, n, Basis.S))
    rows = [(list(t.partition), str(t.coefficient)) for t in decomposition.terms]
    lines = format_table(["CP^J", "coefficient"], rows)
    lines.append("integral" if decomposition.integral else "not integral over products of projective spaces")
    return decomposition, lines


def verify(args):
    try:
        recipe = Recipe.model_validate(read_json_file(args.recipe))
    except ValidationError as e:
        raise CharnumError(f"recipe payload does not match schema: {e}") from e
    target = recipe.target
    family = load_family(args.family, target.dim, args.random_family)
    if family_hash(family) != recipe.family_hash:
        raise RecipeIntegrityError("recipe was produced with a different generator family")
    recomputed = verify_recipe(recipe, family)
    if target.basis is Basis.C:
        if convert_basis(recomputed).entries != target.entries:
            raise RecipeIntegrityError("realized s-vector does not convert to the recorded c-target")
    elif recomputed.entries != target.entries:
        raise RecipeIntegrityError("realized vector differs from the recorded target")
    result = VerifyResult(dim=target.dim, verified=True, realized=recomputed.entries)
    return result, [f"recipe verified: realizes {list(recomputed.entries)}"]


def show_family(args):
    n = check_dim(args.n)
    family = load_family(args.family, n, args.random_family)
    lines = [f"{family.provenance.value} family, dimensions 1..{family.n}, hash {family.family_hash[:12]}"]
    for b in family.bases:
        lines.append(f"  K^{b.dim}_+ {list(b.plus.entries)}   K^{b.dim}_- {list(b.minus.entries)}")
    return family, lines


def register(subparsers):
    parent = output_parent()
    families = family_parent()

    p = subparsers.add_parser("realize", parents=[parent, families], help="recipe of generators for a target")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--basis", choices=[b.value for b in Basis], default=Basis.S.value)
    p.add_argument("--target", required=True, help='JSON array in canonical partition order, e.g. "[3,3]"')
    p.set_defaults(handler=realize)

    p = subparsers.add_parser("rational-realize", parents=[parent],
                              help="rational combination of products of projective spaces")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(handler=rational_realize)

    p = subparsers.add_parser("verify", parents=[parent, families], help="recompute a recipe written by realize")
    p.add_argument("--recipe", required=True, metavar="PATH")
    p.set_defaults(handler=verify)

    p = subparsers.add_parser("family", parents=[parent, families], help="show a generator family")
    p.add_argument("n", type=int)
    p.set_defaults(handler=show_family)
