import pytest

from cctp.cct import key_of
from cctp.convex import (
    NotCoplanar,
    NotInConvexPosition,
    RankDeficient,
    check_avh_hypotheses,
    check_convex_position,
    check_local_convex_position,
    check_width3_criterion,
    facet_hyperplane,
    facets,
)
from cctp.extend import standard_cct
from cctp.geom import dot, vec
from cctp.scalar import sign


@pytest.fixture(scope="module")
def T6():
    return standard_cct(6, certify=False)


def test_facet_count(T6):
    assert len(facets(T6)) == 12 * 4


def test_brute_certificate(T6):
    cert = check_convex_position(T6)
    assert cert.passed and cert.witness is None
    assert len(cert.facets) == 48
    rec = cert.facets[0]
    assert sum(1 for s in rec.signs.values() if s == 0) == 8
    assert all(s < 0 for s in rec.signs.values() if s != 0)


def test_orbit_shortcut_agrees(T6):
    cert = check_convex_position(T6, orbit_shortcut=True)
    assert cert.passed and len(cert.facets) == 4


def test_local_and_avh(T6):
    assert check_local_convex_position(T6).passed
    rep = check_avh_hypotheses(T6)
    assert rep["hypotheses"] and rep["brute"] and rep["passed"]


def test_width3_criterion():
    rep = check_width3_criterion(standard_cct(3))
    assert rep["local"] and rep["global"]
    with pytest.raises(ValueError):
        check_width3_criterion(standard_cct(4, certify=False))


def test_width_guard():
    with pytest.raises(ValueError):
        check_convex_position(standard_cct(2))


def test_facet_hyperplane_errors():
    cube = [vec(x, y, z, 0, 1) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    H = facet_hyperplane(cube, reference=vec(0, 0, 0, 1, 1))
    assert all(sign(dot(H.normal, p)) == 0 for p in cube)
    assert sign(dot(H.normal, vec(0, 0, 0, 1, 1))) < 0
    with pytest.raises(NotCoplanar):
        facet_hyperplane(cube[:7] + [vec(1, 1, 1, 1, 1)])
    with pytest.raises(RankDeficient):
        facet_hyperplane([vec(x, y, 0, 0, 1) for x in (0, 1) for y in (0, 1)] * 2)


def test_moving_a_vertex_inward_breaks_convexity(T6):
    # pull layer 3 towards the center of its layer: still a valid complex, no longer convex
    s = T6.seeds[3]
    moved = T6.with_seed(3, tuple(x / 2 if i < 4 else x for i, x in enumerate(s)))
    try:
        cert = check_convex_position(moved)
    except (NotCoplanar, RankDeficient):
        return
    assert not cert.passed
    with pytest.raises(NotInConvexPosition):
        check_convex_position(moved, raise_on_fail=True)


def test_certificate_json(T6):
    doc = check_convex_position(T6, orbit_shortcut=True).to_json()
    assert doc["kind"] == "convexity" and doc["passed"]
    assert doc["facets"][0]["corner"] == list(key_of(0, 0))
