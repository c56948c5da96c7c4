import pytest

from polydisc.errors import DomainError
from polydisc.geometry import (
    noncircular_witness,
    nonconvex_witness,
    separating_polynomial,
    starlike_scale,
)
from polydisc.membership import in_tilde_gamma
from polydisc.mobius import CPoint, binom
from polydisc.sampling import (
    exterior_point,
    tilde_g_point,
    tilde_gamma_boundary_point,
)


def test_separating_coordinate_case():
    poly = separating_polynomial(CPoint((4.0, 0.0, 0.0)), samples=50)
    assert poly.value_at_target == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert poly.sup_bound <= 1.0 + 1e-9
    assert len(poly.coeff_table) == 1


def test_separating_last_coordinate_case():
    poly = separating_polynomial(CPoint((0.0, 0.0, 2.0)), samples=50)
    assert poly.value_at_target == pytest.approx(2.0, abs=1e-12)
    ((expo, coef),) = poly.coeff_table.items()
    assert expo == (0, 0, 1)


def test_separating_truncation_case_rotated_binomial(rng):
    y = CPoint((3j, 3j, 1j))  # i * (3, 3, 1): inside rotated out
    poly = separating_polynomial(y, samples=400, rng=rng)
    assert poly.value_at_target > 1.0
    assert poly.sup_bound <= 1.0 + 1e-9


def test_separating_random_exterior(rng):
    for _ in range(30):
        n = int(rng.integers(2, 6))
        y = exterior_point(n, rng)
        poly = separating_polynomial(y, samples=100, rng=rng)
        assert poly.value_at_target >= 1.0 + poly.eps > 1.0
        assert poly.sup_bound <= 1.0 + 1e-9
        # certificate evaluates its own target consistently
        assert abs(poly(y)) == pytest.approx(poly.value_at_target, rel=1e-12)


def test_separating_rejects_interior():
    with pytest.raises(DomainError):
        separating_polynomial(CPoint((0.1, 0.1, 0.1)), samples=10)


def test_separating_poly_json():
    poly = separating_polynomial(CPoint((4.0, 0.0, 0.0)), samples=10)
    blob = poly.to_json()
    assert blob["terms"][0][0] == [1, 0, 0]
    assert blob["value_at_target"] > 1.0


def test_starlike_scale_origin():
    rep = starlike_scale(CPoint((3.0, 3.0, 1.0)), 0.0)
    assert rep.verdict


def test_starlike_binomial_point_half():
    y = CPoint(tuple(float(binom(4, j)) for j in range(1, 4)) + (1.0,))
    assert starlike_scale(y, 0.5).verdict


def test_starlike_sweep(rng):
    for _ in range(120):
        n = int(rng.integers(2, 7))
        y = (
            tilde_gamma_boundary_point(n, rng)
            if rng.random() < 0.5
            else tilde_g_point(n, rng)
        )
        for r in (0.1, 0.5, 0.9, 0.999):
            assert starlike_scale(y, r).verdict, (n, r, y.coords)


def test_starlike_rejects_bad_r():
    with pytest.raises(DomainError):
        starlike_scale(CPoint((0, 0, 0)), 1.0)


def test_nonconvex_witness_small_dims():
    a, b, c = nonconvex_witness(3)
    assert a.coords == (3 + 0j, 3j, 1j)
    assert b.coords == (-3j, 3 + 0j, -1j)
    assert c.coords == (1.5 - 1.5j, 1.5 + 1.5j, 0j)
    assert in_tilde_gamma(a).verdict and in_tilde_gamma(b).verdict
    assert not in_tilde_gamma(c).verdict


@pytest.mark.parametrize("n", range(2, 9))
def test_nonconvex_witness_all_dims(n):
    a, b, c = nonconvex_witness(n)
    assert in_tilde_gamma(a, cond="C7").verdict
    assert in_tilde_gamma(b, cond="C7").verdict
    assert not in_tilde_gamma(c, cond="C7").verdict


@pytest.mark.parametrize("n", range(2, 9))
def test_noncircular_witness_all_dims(n):
    y, iy = noncircular_witness(n)
    assert y.coords[:-1] == tuple(float(binom(n, j)) for j in range(1, n))
    assert in_tilde_gamma(y, cond="C7").verdict
    assert not in_tilde_gamma(iy, cond="C7").verdict
