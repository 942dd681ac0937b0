"""Independent reference routes: box sums, Dirichlet zeta, naive series, stencils."""

import math

import numpy as np
import pytest
import scipy.special as sp

from bose_eos import (
    BoxSpec,
    ConvergenceError,
    DivergentValue,
    DomainError,
    GasSpec,
    bose_g,
    density_at,
    finite_density,
    finite_difference,
    series_sum_highprec,
    zeta_dirichlet,
)

SPEC32 = GasSpec(d=3.0, sigma=2.0)


def test_zeta_dirichlet_known_values():
    assert zeta_dirichlet(2.0) == pytest.approx(math.pi**2 / 6.0, rel=1e-14)
    assert zeta_dirichlet(4.0) == pytest.approx(math.pi**4 / 90.0, rel=1e-14)
    assert zeta_dirichlet(1.5) == pytest.approx(2.612375348685488, rel=1e-14)
    # continuation side, where the Dirichlet sum alone diverges
    assert zeta_dirichlet(0.0) == pytest.approx(-0.5, rel=1e-12)
    assert zeta_dirichlet(-1.0) == pytest.approx(-1.0 / 12.0, rel=1e-12)
    assert zeta_dirichlet(-3.0) == pytest.approx(1.0 / 120.0, rel=1e-11)


@pytest.mark.parametrize("s", [-14.5, -7.3, -0.5, 0.3, 1.2, 1.5, 2.5, 6.0, 30.0])
def test_zeta_dirichlet_matches_scipy(s):
    assert zeta_dirichlet(s) == pytest.approx(float(sp.zeta(s)), rel=1e-12)


def test_zeta_dirichlet_domain():
    with pytest.raises(DomainError):
        zeta_dirichlet(1.0)
    with pytest.raises(DomainError):
        zeta_dirichlet(-15.5)


@pytest.mark.parametrize("nu", [0.3, 1.2, 1.5, 2.5, 3.5])
@pytest.mark.parametrize("y", [1e-4, 1e-3, 0.1, 1.0, 10.0])
def test_series_sum_matches_production_route(nu, y):
    assert series_sum_highprec(nu, y) == pytest.approx(bose_g(nu, y).value, rel=1e-12)


def test_series_sum_boundary_and_domain():
    assert series_sum_highprec(2.5, 0.0) == zeta_dirichlet(2.5)
    with pytest.raises(DivergentValue):
        series_sum_highprec(1.0, 0.0)
    with pytest.raises(DomainError):
        series_sum_highprec(1.5, -1e-3)
    with pytest.raises(DomainError):
        series_sum_highprec(0.0, 1.0)


def test_series_sum_large_argument_first_term_dominates():
    y = 40.0
    total = series_sum_highprec(1.5, y)
    two_terms = math.exp(-y) + math.exp(-2.0 * y) / 2.0**1.5
    assert total == pytest.approx(two_terms, rel=1e-15)


def test_series_sum_deterministic():
    assert series_sum_highprec(1.5, 1e-4) == series_sum_highprec(1.5, 1e-4)


def test_finite_difference_stencils():
    est = finite_difference(lambda x: x * x, 3.0, 1e-3)
    assert est.value == pytest.approx(6.0, rel=1e-10)

    # with truncation dominating, the step-halving gap tracks the true error
    est = finite_difference(math.exp, 1.0, 1e-2)
    assert abs(est.value - math.e) <= 1.5 * est.est_error + 1e-14

    for side in ("forward", "backward"):
        est = finite_difference(lambda x: x * x, 3.0, 1e-4, side=side)
        assert est.value == pytest.approx(6.0, rel=1e-8)

    # one-sided stencil never samples below the evaluation point
    est = finite_difference(math.sqrt, 0.0, 1e-4, side="forward")
    assert math.isfinite(est.value)


def test_finite_difference_richardson_gains_order():
    fn = math.exp
    plain = finite_difference(fn, 1.0, 1e-2)
    refined = finite_difference(fn, 1.0, 1e-2, richardson=True)
    assert abs(refined.value - math.e) < abs(plain.value - math.e)
    assert abs(refined.value - math.e) < 1e-9


def test_finite_difference_domain():
    with pytest.raises(DomainError):
        finite_difference(math.exp, 0.0, 0.0)
    with pytest.raises(DomainError):
        finite_difference(math.exp, 0.0, 1e-3, side="sideways")


def test_box_spec_validation():
    with pytest.raises(DomainError):
        BoxSpec(L=8.0, d=4)
    with pytest.raises(DomainError):
        BoxSpec(L=0.0, d=3)
    with pytest.raises(DomainError):
        BoxSpec(L=8.0, d=3, n_max=0)


def test_finite_density_domain():
    box = BoxSpec(L=8.0, d=3)
    with pytest.raises(DomainError):
        finite_density(GasSpec(d=2.5, sigma=2.0), box, T=1.0, mu=-0.1)
    with pytest.raises(DomainError):
        finite_density(GasSpec(d=2.0, sigma=2.0), box, T=1.0, mu=-0.1)
    with pytest.raises(DomainError):
        finite_density(SPEC32, box, T=0.0, mu=-0.1)
    with pytest.raises(DomainError):
        finite_density(SPEC32, box, T=1.0, mu=0.0)  # k=0 occupation diverges


def test_finite_density_converges_to_bulk():
    T, r = 1.0, 0.5
    bulk = density_at(SPEC32, T, r)
    errors = []
    for L in (4.0, 8.0, 16.0):
        box_density = finite_density(SPEC32, BoxSpec(L=L, d=3), T=T, mu=-r)
        errors.append(abs(box_density / bulk - 1.0))
    assert errors[0] > errors[1] > errors[2]
    assert errors[1] <= 1e-3
    assert errors[2] <= 1e-6


def test_finite_density_explicit_cutoff():
    box_auto = BoxSpec(L=8.0, d=3)
    box_wide = BoxSpec(L=8.0, d=3, n_max=64)
    kwargs = dict(T=1.0, mu=-0.5)
    assert finite_density(SPEC32, box_wide, **kwargs) == pytest.approx(
        finite_density(SPEC32, box_auto, **kwargs), rel=1e-13
    )
    with pytest.raises(ConvergenceError):
        finite_density(SPEC32, BoxSpec(L=8.0, d=3, n_max=2), **kwargs)


def test_finite_density_zero_mode_dominates_at_low_temperature():
    # r/T tiny and the first excited level costs many T: the k=0 term is
    # the whole sum to high accuracy, pinning down its inclusion
    spec, L, T, r = SPEC32, 5.0, 0.1, 1e-6
    expected = 1.0 / (math.expm1(r / T) * L**3)
    assert finite_density(spec, BoxSpec(L=L, d=3), T=T, mu=-r) == pytest.approx(
        expected, rel=1e-3
    )


def test_finite_density_deterministic():
    box = BoxSpec(L=8.0, d=3)
    first = finite_density(SPEC32, box, T=1.0, mu=-0.5)
    assert finite_density(SPEC32, box, T=1.0, mu=-0.5) == first


def test_finite_density_one_and_two_dimensions():
    # d < 2 sigma has no condensation but the box sum is still defined for
    # any mu < 0; cross-check against the bulk integral route
    for d in (1, 2):
        spec = GasSpec(d=float(d), sigma=2.0)
        bulk = density_at(spec, 1.0, 0.8)
        box = finite_density(spec, BoxSpec(L=24.0, d=d), T=1.0, mu=-0.8)
        assert box == pytest.approx(bulk, rel=1e-6)
