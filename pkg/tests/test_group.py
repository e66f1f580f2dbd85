from hypothesis import given
from hypothesis import strategies as st

from cctp.geom import dot, vec
from cctp.group import C, IDENTITY, R12, R34, S_REFLECT, rot, rotation_group, symmetry_group
from cctp.scalar import FieldElement

small = st.fractions(min_value=-9, max_value=9, max_denominator=7)
vectors = st.tuples(*(st.builds(FieldElement, small, small) for _ in range(5)))


def test_orders():
    G = rotation_group()
    assert len(G) == 12 and len(set(G)) == 12
    assert C**12 == IDENTITY
    assert C**6 != IDENTITY and C**4 != IDENTITY
    assert len(set(symmetry_group())) == 24
    assert S_REFLECT * S_REFLECT == IDENTITY


def test_generator_factorization():
    assert C == R34 * R12
    assert all(rot(k) == C**k for k in range(-3, 15))
    assert rot(5) * rot(7) == IDENTITY
    assert R12**4 == IDENTITY


def test_orthogonal():
    assert all(g.is_orthogonal() for g in symmetry_group())


def test_inverse():
    for g in symmetry_group():
        assert g * g.inverse() == IDENTITY


@given(vectors, vectors)
def test_preserves_inner_product(u, v):
    for g in (C, R12, R34, S_REFLECT):
        assert dot(g.apply(u), g.apply(v)) == dot(u, v)


def test_fixes_last_coordinate():
    v = vec(1, 2, 3, 4, 5)
    assert all(g.apply(v)[4] == 5 for g in symmetry_group())
