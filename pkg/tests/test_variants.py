from fractions import Fraction

import mpmath
import pytest

from cctp.cct import key_of
from cctp.extend import standard_cct
from cctp.scalar import precision
from cctp.variants import (
    MembershipFailure,
    PrecisionExhausted,
    RationalityFailure,
    build_inscribed,
    build_rational,
    check_quadric_propagation,
    fit_sphere,
    inscribed_parameters,
    inscribed_x_cardano,
    kappa,
    rational_coordinates,
    theta_map,
)


def test_rational_family_is_rational_after_theta():
    T, rat = build_rational(5, export_rational=True, certify=False)
    assert len(rat) == 72
    assert all(isinstance(x, Fraction) for v in rat.values() for x in v)
    assert rat[key_of(0, 0)] == tuple(Fraction(x) for x in (Fraction(1, 3), Fraction(-1, 3), 2, 0, 1))


def test_rational_rows():
    T = build_rational(4, certify=False)
    assert kappa(T, 2)[:3] == (Fraction(1, 25), Fraction(27, 25), Fraction(12, 125))
    assert kappa(T, 4)[:3] == (Fraction(-93, 2185), Fraction(-2371, 2185), Fraction(24, 10925))


def test_standard_family_is_not_rational():
    with pytest.raises(RationalityFailure):
        rational_coordinates(standard_cct(1))


def test_theta_map():
    from cctp.scalar import SQRT3

    assert theta_map((1, 2, 3, SQRT3, 5))[3] == 3


def test_inscribed_closed_forms_agree():
    with mpmath.workprec(256):
        x, y, z = inscribed_parameters(256)
        assert abs(x - inscribed_x_cardano(256)) < mpmath.mpf(10) ** -70
        assert abs(x - mpmath.mpf("1.0226363")) < 1e-7
        assert abs(y - mpmath.mpf("0.5266533")) < 1e-7
        assert abs(z - mpmath.mpf("0.1468968")) < 1e-7


def test_inscribed_on_sphere():
    T, W = build_inscribed(8)
    assert T.width == 8 and T.backend == "float"
    assert all(r < mpmath.mpf(10) ** -30 for r in W.residuals.values())
    with precision(256):
        rep = check_quadric_propagation(T, W)
    assert rep["passed"]


def test_inscribed_norms():
    T, _ = build_inscribed(5)
    with mpmath.workprec(256):
        for k in range(6):
            norm = mpmath.sqrt(mpmath.fsum(mpmath.mpf(x) ** 2 for x in kappa(T, k)))
            assert abs(norm - mpmath.mpf("1.8103")) < 5e-5


def test_inscribed_precision_floor():
    with pytest.raises(ValueError):
        build_inscribed(3, bits=64)


def test_standard_family_is_not_inscribed():
    T = standard_cct(4, certify=False)
    with precision(128):
        try:
            W = fit_sphere(T, (0, 2))
        except PrecisionExhausted:
            return
        with pytest.raises(MembershipFailure):
            check_quadric_propagation(T, W, raise_on_fail=True)


def test_perturbed_layer_leaves_sphere():
    T, W = build_inscribed(4)
    with precision(256):
        s = T.seeds[4]
        bad = T.with_seed(4, (s[0] * (1 + mpmath.mpf(10) ** -20),) + tuple(s[1:]))
        rep = check_quadric_propagation(bad, W)
    assert not rep["passed"] and rep["witness"][0][0] == 4


def test_inscribed_lambda_column():
    from cctp.geom import clifford_lambda, project_equator

    printed = [0.2435, 0.0189, 1.3686e-3, 9.8305e-5, 7.0582e-6, 5.0675e-7]
    T, _ = build_inscribed(5)
    with precision(256):
        for k, p in enumerate(printed):
            got = float(clifford_lambda(project_equator(kappa(T, k))))
            unit = 1e-4 if p >= 0.01 else 10 ** (mpmath.floor(mpmath.log10(p)) - 4)
            assert abs(got - p) <= unit, (k, got, p)
