import pytest

from cctp.cct import (
    FixedPointViolation,
    OrbitCollision,
    build_abstract,
    build_symmetric,
    check_ideal,
    check_symmetry,
    class_key,
    control_cct,
    enumerate_faces,
    f_vector,
    key_of,
    orbit_index,
    slope_monotone_harness,
    slope_witness,
)
from cctp.extend import THETA0, THETA1, standard_cct
from cctp.geom import vec
from cctp.group import rot


def expected_f(k):
    return (12 * (k + 1), 36 * max(k, 0), 36 * max(k - 1, 0), 12 * max(k - 2, 0))


@pytest.mark.parametrize("k", range(0, 9))
def test_abstract_matches_enumeration(k):
    A = build_abstract(k)
    v, e, q, c = enumerate_faces(k)
    assert set(A.vertices) == v
    assert set(A.edges) == e
    assert set(A.quads) == q
    assert set(A.cubes) == c
    assert A.f_vector() == expected_f(k)


def test_f_vector_law_large():
    for k in (20, 50):
        assert build_abstract(k).f_vector() == expected_f(k)


def test_euler_characteristic_of_thickened_torus():
    # from width 2 on the complex is a thickened torus, χ = 0
    assert build_abstract(1).euler_characteristic() == -12
    for k in range(2, 8):
        assert build_abstract(k).euler_characteristic() == 0


def test_keys():
    for layer in range(4):
        for n in range(12):
            assert orbit_index(key_of(layer, n)) == n
    assert len({key_of(0, n) for n in range(12)}) == 12
    # lattice translations give the same class
    assert class_key(1, 2, 3) == class_key(4, -1, 3) == class_key(-1, 0, 7)


def test_restrict():
    A = build_abstract(5).restrict(1, 3)
    assert A.f_vector() == expected_f(2)


def test_layers_are_orbits():
    T = standard_cct(2)
    for layer in range(3):
        pts = T.layer_points(layer)
        assert pts[0] == T.seeds[layer]
        assert all(pts[n] == rot(n).apply(T.seeds[layer]) for n in range(12))


def test_rejects_fixed_points_and_collisions():
    with pytest.raises(FixedPointViolation):
        build_symmetric([vec(0, 0, 1, 1, 1)])
    with pytest.raises(OrbitCollision):
        build_symmetric([THETA0, THETA0])
    with pytest.raises(ValueError):
        build_symmetric([vec(1, 1, 1, 1)])


def test_standard_cct_is_ideal():
    for n in (1, 2, 3, 6):
        cert = check_ideal(standard_cct(n))
        assert cert.passed, cert.failures()
    assert all(c.passed for c in check_symmetry(standard_cct(3)))


def test_corrupted_seed_is_not_ideal():
    T = standard_cct(3).with_seed(3, vec(1, 1, 1, 0, 1))
    cert = check_ideal(T)
    assert not cert.passed
    assert {c.name for c in cert.failures()} >= {"orientation"}
    bad = standard_cct(3).with_seed(3, vec(-1, 0, 1, 0, 1))
    assert not check_ideal(bad).passed


def test_control_cct():
    C = control_cct(standard_cct(2))
    assert C.ambient == "S3eq" and C.dim == 4 and C.width == 2


def test_slope_obtuse_and_nondecreasing():
    steps = slope_monotone_harness(standard_cct(2), 6)
    assert all(s.obtuse for s in steps)
    angles = [s.angle for s in steps]
    assert all(b >= a - 1e-12 for a, b in zip(angles, angles[1:]))
    assert slope_witness(control_cct(standard_cct(2))) < 0


def test_json_shape():
    doc = build_symmetric([THETA0, THETA1]).to_json()
    assert doc["width"] == 1 and doc["backend"] == "exact" and len(doc["seeds"]) == 2


def test_realization_space_bound():
    from cctp.cct import realization_space_bound

    assert all(realization_space_bound(standard_cct(n, certify=False)) == 96 for n in (1, 4, 9))
    with pytest.raises(ValueError):
        realization_space_bound(build_symmetric([THETA0]))
