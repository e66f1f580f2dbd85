import itertools

from cctp.geom import dot, nullspace, rank
from cctp.projective import build_K
from cctp.reference import SHEPHARD_LIST, product_of_triangles
from cctp.scalar import sign


def test_shephard_list_is_consistent():
    by_name = {p.name: p for p in SHEPHARD_LIST}
    assert len(by_name) == 11
    for p in SHEPHARD_LIST:
        f0, f1, f2, f3 = p.f_vector
        assert f0 - f1 + f2 - f3 == 0
        assert by_name[p.dual].f_vector == p.f_vector[::-1]
        assert by_name[p.dual].dual == p.name
    assert sum(1 for p in SHEPHARD_LIST if p.dual == p.name) == 3


def test_product_of_triangles_matches_K():
    K = build_K()
    for label, v in product_of_triangles().items():
        assert K[label] == v


def test_product_of_triangles_facets():
    pts = list(product_of_triangles().values())
    assert rank(pts) == 5
    found = set()
    for sub in itertools.combinations(range(9), 5):
        ns = nullspace([pts[i] for i in sub], 5)
        if len(ns) != 1:
            continue
        signs = [sign(dot(ns[0], p)) for p in pts]
        if all(s >= 0 for s in signs) or all(s <= 0 for s in signs):
            found.add(frozenset(i for i, s in enumerate(signs) if s == 0))
    # six prism facets with six vertices each, as listed for P8
    assert len(found) == 6
    assert all(len(f) == 6 for f in found)
