import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from catalog import convert_basis, projective_space_svec
from euler import (
    combine,
    constant_function,
    cuspidal_cubic,
    euler_integral,
    pull_back,
    refine_stratification,
    smooth_space,
)
from models import ConstructibleFunction, StratifiedSpace, Stratum
from utils import StratificationError


def test_cuspidal_cubic_fixture():
    space, eu = cuspidal_cubic()
    assert space.labels == ["cusp", "regular"]
    assert euler_integral(space, eu) == 3


def test_smooth_projective_line():
    line = smooth_space("whole", 2)
    assert euler_integral(line, constant_function(line, 1)) == 2
    assert euler_integral(line, constant_function(line, 0)) == 0


def test_smooth_case_matches_catalog():
    line = smooth_space("whole", 2)
    c = convert_basis(projective_space_svec(1))
    assert euler_integral(line, constant_function(line, 1)) == c.entry((1,))


def test_missing_value_is_an_error():
    space, _ = cuspidal_cubic()
    with pytest.raises(StratificationError, match="regular"):
        euler_integral(space, ConstructibleFunction(values={"cusp": 2}))


def test_labels_must_be_distinct():
    with pytest.raises(ValidationError):
        StratifiedSpace(strata=(Stratum(label="a", chi_c=1), Stratum(label="a", chi_c=0)))


def test_refine_examples():
    whole = smooth_space("whole", 2)
    finer = refine_stratification(whole, {"whole": [("pt", 1), ("complement", 1)]})
    assert finer.labels == ["pt", "complement"]
    with pytest.raises(StratificationError):
        refine_stratification(whole, {"whole": [("pt", 1), ("complement", 0)]})
    with pytest.raises(StratificationError):
        refine_stratification(whole, {"elsewhere": [("pt", 2)]})


def test_refine_cuspidal_cubic_keeps_integral():
    space, eu = cuspidal_cubic()
    split = {"regular": [("cell_a", 1), ("cell_b", 0)]}
    finer = refine_stratification(space, split)
    assert euler_integral(finer, pull_back(eu, split)) == 3


def test_refinement_with_clashing_labels():
    space, _ = cuspidal_cubic()
    with pytest.raises(StratificationError):
        refine_stratification(space, {"regular": [("cusp", 1)]})


def test_random_refinements_keep_integral(rng):
    space, eu = cuspidal_cubic()
    for k in range(25):
        a = rng.randint(-5, 5)
        b = rng.randint(-5, 5)
        split = {
            "regular": [(f"r{k}a", a), (f"r{k}b", 1 - a)],
            "cusp": [(f"c{k}a", b), (f"c{k}b", 1 - b)],
        }
        finer = refine_stratification(space, split)
        assert euler_integral(finer, pull_back(eu, split)) == 3


@given(
    st.lists(st.integers(min_value=-50, max_value=50), min_size=3, max_size=3),
    st.lists(st.integers(min_value=-50, max_value=50), min_size=3, max_size=3),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
)
def test_integral_is_linear(fv, gv, a, b):
    space = StratifiedSpace(strata=(
        Stratum(label="x", chi_c=3), Stratum(label="y", chi_c=-1), Stratum(label="z", chi_c=0),
    ))
    f = ConstructibleFunction(values=dict(zip(space.labels, fv)))
    g = ConstructibleFunction(values=dict(zip(space.labels, gv)))
    assert euler_integral(space, combine(f, g, a, b)) == a * euler_integral(space, f) + b * euler_integral(space, g)
