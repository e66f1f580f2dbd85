import pytest

from cctp.convex import check_convex_position
from cctp.dual import (
    MissingCertificate,
    NotOrientationPreserving,
    NotReciprocal,
    build_polar_dual,
    check_reciprocal,
    reciprocal_subspaces,
    reciprocity_extension_harness,
)
from cctp.extend import standard_cct
from cctp.geom import vec


@pytest.fixture(scope="module")
def pair():
    T = standard_cct(6, certify=False)
    return T, build_polar_dual(T, check_convex_position(T))


def test_needs_certificate():
    T = standard_cct(4, certify=False)
    with pytest.raises(MissingCertificate):
        build_polar_dual(T)


def test_polar_dual_shape(pair):
    T, D = pair
    assert D.width == T.width - 3
    assert len(D.vertices) == 12 * (D.width + 1)
    assert len(D.edges) == 36 * D.width


def test_reciprocal(pair):
    T, D = pair
    rep = check_reciprocal(T, D)
    assert rep.passed and rep.reciprocal and rep.orientation
    assert rep.edges_checked == len(D.edges)


def test_moved_dual_vertex_fails(pair):
    T, D = pair
    key = next(iter(D.vertices))
    bad = D.with_vertex(key, tuple(2 * x if i == 0 else x for i, x in enumerate(D.vertices[key])))
    rep = check_reciprocal(T, bad)
    assert not rep.passed
    with pytest.raises((NotReciprocal, NotOrientationPreserving)):
        check_reciprocal(T, bad, raise_on_fail=True)


def test_antipodal_dual_is_not_orientation_preserving(pair):
    T, D = pair
    flipped = D
    for k, v in D.vertices.items():
        flipped = flipped.with_vertex(k, tuple(-x for x in v))
    rep = check_reciprocal(T, flipped)
    assert rep.reciprocal and not rep.orientation


def test_reciprocal_subspaces_basic():
    e = [vec(*(int(i == j) for j in range(4))) for i in range(4)]
    ok, x = reciprocal_subspaces([e[0], e[1]], [e[0], e[2], e[3]])
    assert ok and x == e[0]
    tilted = vec(0, 1, 1, 0)
    assert not reciprocal_subspaces([e[0], tilted], [e[0], e[2], e[3]])[0]
    # disjoint circles do not meet in a point
    assert not reciprocal_subspaces([e[0], e[1]], [e[2], e[3]])[0]


def test_persists_under_extension(pair):
    T, D = pair
    reports = reciprocity_extension_harness(T, D, 3)
    assert len(reports) == 4 and all(r.passed for r in reports)


def test_one_negated_pole(pair):
    T, D = pair
    # a pole above the bottom layer: its lower edge now points the wrong way
    key = next(k for k in sorted(D.vertices) if k[0] == 2)
    bad = D.with_vertex(key, tuple(-x for x in D.vertices[key]))
    rep = check_reciprocal(T, bad)
    assert rep.reciprocal and not rep.orientation
    with pytest.raises(NotOrientationPreserving):
        check_reciprocal(T, bad, raise_on_fail=True)
    # a bottom-layer pole only has upward edges, and <n, a - b> stays positive for them
    key = next(k for k in sorted(D.vertices) if k[0] == 0)
    flipped = D.with_vertex(key, tuple(-x for x in D.vertices[key]))
    assert check_reciprocal(T, flipped).passed
