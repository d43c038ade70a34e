"""Root systems, Weyl groups, exact invariants and characters."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import character_value, dimension_value
from seifertsum.errors import (
    PreconditionError,
    UnsupportedAlgebraError,
    WeylGroupTooLargeError,
)
from seifertsum.exactlinalg import rational_determinant
from seifertsum.lie import (
    CartanElement,
    Weight,
    build_root_system,
    casimir,
    is_regular,
    shifted_norm,
    weyl_character,
    weyl_denominator_product,
    weyl_dimension,
    weyl_group,
)


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_gram_inverts_cartan_exactly(rank):
    rs = build_root_system("A", rank)
    for i in range(rank):
        for j in range(rank):
            entry = sum(Fraction(rs.cartan[i][k]) * rs.gram_fw[k][j]
                        for k in range(rank))
            assert entry == (1 if i == j else 0)


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_counting_invariants(rank):
    rs = build_root_system("A", rank)
    assert rs.num_positive_roots == rank * (rank + 1) // 2
    assert rs.dimension == rank * (rank + 2)
    assert rs.dual_coxeter == rank + 1
    assert rs.centre_order == rank + 1
    assert len(weyl_group(rs)) == math.factorial(rank + 1)


def test_rho_and_highest_root(a2):
    assert a2.rho.coords == (1, 1)
    assert tuple(a2.highest_root_fw) == (1, 1)
    assert a2.level_of(Weight((1, 1))) == 2
    a1 = build_root_system("A", 1)
    assert tuple(a1.highest_root_fw) == (2,)


def test_roots_have_norm_two(a3):
    for alpha in a3.positive_roots_fw:
        assert a3.ip(alpha, alpha) == 2


def test_weyl_signs_are_determinants(a2):
    for w in weyl_group(a2):
        det = rational_determinant([list(row) for row in w.weight_matrix])
        assert det == w.sign


def test_weyl_group_closure_is_a_group(a2):
    mats = {w.weight_matrix for w in weyl_group(a2)}
    for w in weyl_group(a2):
        for v in weyl_group(a2):
            prod = tuple(
                tuple(sum(w.weight_matrix[i][k] * v.weight_matrix[k][j]
                          for k in range(2)) for j in range(2))
                for i in range(2))
            assert prod in mats


DIM_CASES = [
    ("A", 1, (3,), 4),
    ("A", 2, (1, 0), 3),
    ("A", 2, (1, 1), 8),
    ("A", 2, (3, 0), 10),
    ("A", 2, (1, 2), 15),
    ("A", 3, (1, 0, 0), 4),
    ("A", 3, (1, 1, 1), 64),
    ("A", 3, (2, 0, 1), 36),
]


@pytest.mark.parametrize("series,rank,coords,expected", DIM_CASES)
def test_weyl_dimension_against_multiplicity_sum(series, rank, coords, expected):
    rs = build_root_system(series, rank)
    w = Weight(coords)
    assert weyl_dimension(rs, w) == expected
    assert dimension_value(rs, w) == expected


def test_casimir_values(a1, a2):
    assert casimir(a1, Weight((1,))) == Fraction(3, 2)
    assert casimir(a2, Weight((1, 1))) == 6
    assert casimir(a2, Weight((0, 0))) == 0
    assert shifted_norm(a1, Weight((0,))) == Fraction(1, 2)


def test_casimir_refuses_non_dominant(a2):
    with pytest.raises(PreconditionError):
        casimir(a2, Weight((-1, 2)))


CHAR_CASES = [
    ("A", 1, (3,), (0.31,)),
    ("A", 2, (1, 2), (0.23, 0.41)),
    ("A", 2, (2, 2), (0.2 + 0.1j, 0.37)),
    ("A", 3, (1, 1, 1), (0.19, 0.23, 0.31)),
]


@pytest.mark.parametrize("series,rank,coords,x", CHAR_CASES)
def test_character_matches_multiplicity_sum(series, rank, coords, x):
    rs = build_root_system(series, rank)
    w = Weight(coords)
    xc = CartanElement(tuple(complex(c) for c in x))
    got = weyl_character(rs, w, xc)
    want = character_value(rs, w, x)
    assert abs(got - want) < 1e-9 * max(1.0, abs(want))


def test_character_at_zero_is_dimension(a2):
    x0 = CartanElement((0j, 0j))
    assert weyl_character(a2, Weight((1, 2)), x0) == 15


def test_character_on_a_reflection_wall(a2):
    # alpha_2(x) = 0 here, the ratio needs the limit fallback
    x = CartanElement((0.4 + 0j, 0.2 + 0j))
    assert not is_regular(a2, x)
    got = weyl_character(a2, Weight((1, 2)), x)
    want = character_value(a2, Weight((1, 2)), (0.4, 0.2))
    assert abs(got - want) < 1e-9 * abs(want)


def test_character_is_weyl_invariant(a2):
    x = CartanElement((0.31 + 0j, 0.17 + 0j))
    w = Weight((2, 1))
    base = weyl_character(a2, w, x)
    for g in weyl_group(a2):
        moved = CartanElement(g.apply_cartan(x.coords))
        assert abs(weyl_character(a2, w, moved) - base) < 1e-9 * abs(base)


def test_denominator_product_equals_alternating_sum(a2):
    from seifertsum.lie import _alternating_sum

    x = CartanElement((0.29 + 0j, 0.44 + 0j))
    lhs = weyl_denominator_product(a2, x)
    rhs = _alternating_sum(a2, a2.rho.coords, x)
    assert abs(lhs - rhs) < 1e-12 * abs(lhs)


def test_cartan_point_scaling(a1):
    x = a1.cartan_point((1,), scale=2.0)
    # gram of the single fundamental weight is 1/2
    assert x.coords == (1.0,)


def test_unsupported_algebra():
    with pytest.raises(UnsupportedAlgebraError):
        build_root_system("B", 2)
    with pytest.raises(PreconditionError):
        build_root_system("A", 0)


def test_weyl_bound_enforced(a3):
    with pytest.raises(WeylGroupTooLargeError):
        weyl_group(a3, max_order=5)


@given(coords=st.tuples(st.integers(0, 4), st.integers(0, 4)))
def test_dominant_weight_properties(coords):
    rs = build_root_system("A", 2)
    w = Weight(coords)
    dim = weyl_dimension(rs, w)
    assert dim >= 1
    assert casimir(rs, w) >= 0
    assert rs.level_of(w) == sum(coords)
    x0 = CartanElement((0j, 0j))
    assert weyl_character(rs, w, x0) == dim
