from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cctp.extend import THETA0, THETA1
from cctp.geom import dot, vec
from cctp.projective import (
    LAMBDA,
    WedgeIntersectsPolytope,
    build_K,
    build_pcctp,
    build_weak_triple,
    lambda_minors,
    lawrence_extension,
    sparse_rank,
    subdirect_cone,
    verify_lambda,
)
from cctp.scalar import SQRT2, SQRT3, FieldElement, sign

h = Fraction(1, 2)
r = SQRT3 / 2
lam = SQRT2 - 1

# transcribed from the displayed construction, independently of the code's table
DISPLAYED = {
    "opsi1+": vec(0, 1, -1, 0, 1),
    "opsi1-": vec(0, -1, -1, 0, 1),
    "opsi2+": vec(0, 1, h, r, 1),
    "opsi3-": vec(0, -1, h, -r, 1),
    "b12++": vec(h, h, -h, r, 1),
    "b12+-": vec(h, -h, -h, r, 1),
    "tw1+-": vec(lam, -lam, 2, 0, 1),
    "tw2-+": vec(-lam, lam, -1, -SQRT3, 1),
    "tw3+-": vec(lam, -lam, -1, SQRT3, 1),
    "psi1+": vec(1, 0, 1, 0, 1),
}


@pytest.fixture(scope="module")
def K():
    return build_K(check_display=False)


def test_constructed_points_match_display(K):
    for label, expected in DISPLAYED.items():
        assert K[label] == expected, label


def test_standard_seeds_inside(K):
    assert K["tw1+-"] == THETA0
    assert K["psi1+"] == THETA1


def test_counts(K):
    assert len(K) == 64
    assert len(set(K.points.values())) == 64
    assert len(K.omega) == 12 and len(K.layer1) == 12
    assert len(K.framing) == 24
    assert len(K.infinity) == 4
    assert all(sign(K[l][4]) == 0 for l in K.infinity)
    assert all(sign(K[l][4]) > 0 for l in K.points if l not in K.infinity)


def test_certificate(K):
    assert all(K.certificate[k] for k in ("w1", "equator", "omega_is_orbit", "distinct"))


def test_json(K):
    doc = K.to_json()
    assert len(doc["points"]) == 64


def test_lambda_golden():
    assert LAMBDA == SQRT2 - 1
    assert verify_lambda(SQRT2 - 1)
    assert all(m == 0 for m in lambda_minors(SQRT2 - 1))
    assert not verify_lambda(Fraction(1, 3))


def test_lambda_needs_positive():
    # the other root of λ² + 2λ - 1 also kills the minors but is excluded
    assert all(m == 0 for m in lambda_minors(-SQRT2 - 1))
    with pytest.raises(ValueError):
        verify_lambda(-SQRT2 - 1)


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Fraction(1, 1000), max_value=50, max_denominator=1000))
def test_rational_lambda_rejected(q):
    assert q * q + 2 * q - 1 != 0
    assert not verify_lambda(q)


def test_weak_triple_and_wedge():
    tr = build_weak_triple(2)
    assert len(tr.polytope) == 36
    assert all(sign(dot(tr.wedge, p)) > 0 for p in tr.polytope)
    assert tr.certificate["counts"] == {"K": 64, "Q": 24, "R": 40}


def test_corrupted_wedge_detected():
    spanning = [THETA0, vec(0, 0, 0, 1, 0), vec(1, 0, 0, 0, 0), vec(0, 1, 0, 0, 0)]
    with pytest.raises(WedgeIntersectsPolytope):
        build_weak_triple(1, wedge=spanning)


def test_subdirect_cone():
    pp = subdirect_cone(build_weak_triple(1))
    assert pp.dim == 5
    assert len(pp.polytope) == 24 + 1
    assert len(pp.points) == 64
    assert all(sign(dot(pp.witness, p)) > 0 for p in list(pp.polytope) + list(pp.points))


def test_sparse_rank():
    rows = [{0: FieldElement(1), 2: FieldElement(2)}, {1: FieldElement(1)}, {0: FieldElement(2), 2: FieldElement(4)}]
    assert sparse_rank(rows) == 2


@pytest.mark.parametrize("n", [1, 3])
def test_pcctp(n):
    L = build_pcctp(n)
    assert len(L.vertices) == 12 * (n + 1) + 129
    assert L.rank == 70 and L.dim == 69


def test_lawrence_heights_must_differ():
    pp = subdirect_cone(build_weak_triple(1))
    with pytest.raises(ValueError):
        lawrence_extension(pp, heights=(1, 1))


def test_smallest_lawrence_extension():
    from cctp.projective import PPConfiguration

    tri = [vec(1, 0, 1), vec(0, 1, 1), vec(-1, -1, 1)]
    pp = PPConfiguration(polytope=tri, points=[vec(3, 3, 1)], dim=2, witness=vec(0, 0, 1))
    L = lawrence_extension(pp)
    assert len(L.vertices) == 5
    assert L.rank == 4 and L.dim == 3
