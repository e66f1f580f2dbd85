from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cctp.cct import build_symmetric
from cctp.extend import (
    THETA0,
    THETA1,
    BadNormalization,
    CoplanarQuads,
    ExtensionDegenerate,
    complete_cube,
    elementary_extension,
    extend_to,
    iterate_seed,
    mu_coefficient,
    next_seed_cube,
    next_seed_formula,
    standard_cct,
)
from cctp.geom import vec
from cctp.group import R12
from cctp.scalar import SQRT2, FieldElement


def test_mu_golden_value():
    b = (R12 * R12).apply(THETA1)
    assert mu_coefficient(THETA0, b) == (3 - 4 * SQRT2) / 23


def test_first_iterate():
    b = (R12 * R12).apply(THETA1)
    theta2 = vec((-11 + 7 * SQRT2) / 23, (-9 - 11 * SQRT2) / 23, (16 - 6 * SQRT2) / 23, 0, 1)
    assert iterate_seed(THETA0, b) == theta2


def test_formula_needs_normalized_points():
    with pytest.raises(BadNormalization):
        mu_coefficient(vec(1, 0, 1, 1, 1), THETA1)
    with pytest.raises(BadNormalization):
        mu_coefficient(vec(1, 0, 1, 0, 2), THETA1)


def test_complete_cube_unit_cube():
    # the corner (1,1,1) of the unit cube, lifted to homogeneous coordinates
    pts = {
        "a2": (1, 1, 0),
        "a3": (1, 0, 0),
        "a4": (1, 0, 1),
        "a5": (0, 0, 1),
        "a6": (0, 1, 1),
        "a7": (0, 1, 0),
    }
    lift = lambda p: vec(*p, 0, 1)
    out = complete_cube(*(lift(pts[k]) for k in ("a2", "a3", "a4", "a5", "a6", "a7")))
    assert out == vec(1, 1, 1, 0, 1)


def test_complete_cube_rejects_flat_input():
    p = [vec(x, y, 0, 0, 1) for x, y in ((1, 0), (1, 1), (0, 1), (2, 1), (2, 2), (0, 2))]
    with pytest.raises((CoplanarQuads, ExtensionDegenerate, ValueError)):
        complete_cube(*p)


@pytest.mark.parametrize("k", range(1, 8))
def test_formula_and_cube_agree(k):
    T = standard_cct(k, certify=False)
    assert next_seed_cube(T) == next_seed_formula(T)


def test_unique_extension_from_bottom():
    T = standard_cct(12, certify=False)
    again = extend_to(T.restrict(0, 3), 12, certify=False)
    assert again.seeds == T.seeds


def test_rational_seeds_extend():
    a = vec(Fraction(1, 3), Fraction(-1, 3), 2, 0, 1)
    b = vec(1, 0, Fraction(3, 5), 0, 1)
    T = extend_to(build_symmetric([a, b]), 4, certify=False)
    assert all(x.is_rational() for s in T.seeds for x in s)


def test_width_zero_cannot_extend():
    with pytest.raises(ExtensionDegenerate):
        elementary_extension(build_symmetric([THETA0]))


def test_target_below_width():
    with pytest.raises(ValueError):
        extend_to(standard_cct(3, certify=False), 2)


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 9), st.integers(1, 9))
def test_perturbed_second_layer_still_agrees(p, q):
    # any admissible width-1 start: cube completion and closed form must agree
    b = vec(1, 0, Fraction(p, q + 1), 0, 1)
    try:
        T = build_symmetric([THETA0, b])
        T2 = elementary_extension(T, cross_check=False)
    except (ValueError, ExtensionDegenerate):
        return
    if FieldElement(0) == T2.seeds[2][4]:
        return
    assert elementary_extension(T2, cross_check=False).seeds[3] == next_seed_formula(T2)


def test_cube_completion_input_record():
    from cctp.extend import CubeCompletionInput, top_cube_input

    T = standard_cct(2, certify=False)
    data = top_cube_input(T)
    assert isinstance(data, CubeCompletionInput)
    assert complete_cube(data) == complete_cube(*data)
    # the completed corner of the width-2 tube lies in the orbit of the third-layer seed
    theta3 = vec((37 + 11 * SQRT2) / 49, (-11 + 6 * SQRT2) / 49, (22 - 12 * SQRT2) / 49, 0, 1)
    T3 = elementary_extension(T)
    assert theta3 in T3.layer_points(3)
    assert complete_cube(data) == T3.seeds[3]
    with pytest.raises(TypeError):
        complete_cube(*data[:5])
