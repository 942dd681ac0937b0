"""Critical-regime analytics for the constant-density transition.

For dimensions sigma < d < 2 sigma the free-energy density near the
transition collapses to the closed form

    f(Psi) = C_f (Psi^2 + (d/sigma) t)^(d/(d - sigma)),

whose stationary points reproduce the equation of state: Psi = 0 above the
transition, Psi^2 = -(d/sigma) t below it, with the chemical potential
vanishing on the condensed branch. The same bracket raised to
sigma/(d - sigma) gives the asymptotic chemical potential, which must match
the exact gap solver as t -> 0+; that cross-check and the numerically fitted
critical exponents are what validate the analytics here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import BranchError, DomainError, FitError, UnsupportedRegime
from .gas import GasSpec, as_natural, dispersion_coefficient
from .isochore import critical_temperature_density, solve_gap_isochore
from .special import gamma, zeta

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class LandauModel:
    """Effective free-energy data at one reduced temperature.

    C_f and thermal_energy (k_B T at this t) are in the unit system of the
    spec the model was built from; mu_coeff is the dimensionless
    [zeta(d/sigma) / |Gamma(1 - d/sigma)|]^(sigma/(d-sigma)) factor shared by
    C_f and the chemical potential.
    """

    C_f: float
    d_over_sigma: float
    t: float
    valid_window: float
    T_c: float
    rho: float
    thermal_energy: float
    mu_coeff: float

    @property
    def bracket_exponent(self) -> float:
        """sigma / (d - sigma) = 1 / (d/sigma - 1)."""
        return 1.0 / (self.d_over_sigma - 1.0)

    @property
    def free_energy_exponent(self) -> float:
        """d / (d - sigma)."""
        return self.d_over_sigma / (self.d_over_sigma - 1.0)


class CorrelationQuantities(NamedTuple):
    """Correlation length and the static susceptibility chi(k)."""

    xi: float
    chi: Callable[[float], float]


@dataclass(frozen=True)
class FitResult:
    """A fitted power-law exponent with its least-squares standard error."""

    exponent: float
    std_error: float
    n_points: int


@dataclass(frozen=True)
class ExponentSet:
    """Analytic critical exponents next to their numerically fitted values."""

    eta: float
    gamma_: float
    nu: float
    fitted_gamma: FitResult
    fitted_nu: FitResult
    fitted_eta: float
    fit_window: tuple[float, float]


def landau_model(
    spec: GasSpec, rho: float, t: float, valid_window: float = 0.01
) -> LandauModel:
    """Build the effective free-energy model at reduced temperature t.

    Only the window sigma < d < 2 sigma is supported; outside it the
    closed form does not hold and UnsupportedRegime is raised. The
    coefficient is

        C_f = (d/sigma - 1) [zeta(d/sigma) / |Gamma(1 - d/sigma)|]^(sigma/(d-sigma))
              * k_B T_c * rho.
    """
    if not (spec.sigma < spec.d < 2.0 * spec.sigma):
        raise UnsupportedRegime(
            f"the effective free energy needs sigma < d < 2 sigma, "
            f"got d={spec.d:g}, sigma={spec.sigma:g}"
        )
    nu = spec.d_over_sigma
    tc = critical_temperature_density(spec, rho)
    nat, conv = as_natural(spec)
    mu_coeff = (zeta(nu) / abs(gamma(1.0 - nu))) ** (1.0 / (nu - 1.0))
    cf_nat = (nu - 1.0) * mu_coeff * conv.temperature_in(tc) * conv.density_in(rho)
    kb_t_nat = conv.temperature_in(tc) * (1.0 + t)
    return LandauModel(
        C_f=conv.energy_density_out(cf_nat),
        d_over_sigma=nu,
        t=t,
        valid_window=valid_window,
        T_c=tc,
        rho=rho,
        thermal_energy=conv.energy_out(kb_t_nat),
        mu_coeff=mu_coeff,
    )


def _bracket(model: LandauModel, psi: float) -> float:
    """Psi^2 + (d/sigma) t, clamped to 0 within rounding of the ordered root."""
    psi2 = psi * psi
    shift = model.d_over_sigma * model.t
    b = psi2 + shift
    if b < 0.0:
        if -b <= 8.0 * _EPS * max(psi2, abs(shift)):
            return 0.0
        raise BranchError(
            f"Psi^2 + (d/sigma) t = {b:.3e} < 0: outside the real branch "
            "(forbidden mu > 0 region)"
        )
    return b


def landau_free_energy(model: LandauModel, psi: float) -> float:
    """f(Psi) = C_f (Psi^2 + (d/sigma) t)^(d/(d-sigma)), energy density."""
    b = _bracket(model, psi)
    return model.C_f * b**model.free_energy_exponent


def equation_of_state(model: LandauModel, psi: float) -> float:
    """Left side of the stationarity condition, Psi (Psi^2 + (d/sigma) t)^(sigma/(d-sigma)).

    This is d f / d Psi with the positive constant 2 C_f d/(d - sigma)
    stripped, so the roots (Psi = 0, and Psi^2 = -(d/sigma) t when t < 0)
    are unchanged.
    """
    b = _bracket(model, psi)
    return psi * b**model.bracket_exponent


def chemical_potential_asymptotic(model: LandauModel, psi: float) -> float:
    """mu = -k_B T [zeta/|Gamma|]^(sigma/(d-sigma)) (Psi^2 + (d/sigma) t)^(sigma/(d-sigma)).

    Zero exactly on the condensed root, negative elsewhere; for Psi = 0 and
    t -> 0+ it converges to the exact -r of the gap solver.
    """
    b = _bracket(model, psi)
    return -model.thermal_energy * model.mu_coeff * b**model.bracket_exponent


def landau_taylor_coefficients(model: LandauModel) -> tuple[float, float]:
    """Numerical Taylor coefficients of f at Psi = 0, in front of Psi^2 and Psi^4.

    Needs t > 0 (the expansion point must sit inside the real branch).
    Uses even-function central stencils with step h proportional to
    sqrt((d/sigma) t), which keeps the relative truncation bias constant
    across t so fitted scaling powers are unaffected.
    """
    if model.t <= 0.0:
        raise DomainError("Taylor coefficients at Psi = 0 need t > 0")
    b0 = model.d_over_sigma * model.t
    h = 0.05 * math.sqrt(b0)
    f0 = landau_free_energy(model, 0.0)
    f1 = landau_free_energy(model, h)
    f2 = landau_free_energy(model, 2.0 * h)
    coeff2 = (f1 - f0) / h**2
    coeff4 = (2.0 * f2 - 8.0 * f1 + 6.0 * f0) / (24.0 * h**4)
    return coeff2, coeff4


def correlation_quantities(spec: GasSpec, r: float) -> CorrelationQuantities:
    """Correlation length xi = (c/r)^(1/sigma) and chi(k) = 1/(c k^sigma + r).

    c is the dispersion stiffness hbar^2/2m. At r = 0 (criticality) xi is
    reported as infinity and chi(k) becomes the pure power law whose
    log-log slope is -(2 - eta) with eta = 2 - sigma.
    """
    if r < 0.0:
        raise DomainError(f"gap must be >= 0, got r={r!r}")
    c = dispersion_coefficient(spec)
    sigma = spec.sigma
    xi = math.inf if r == 0.0 else (c / r) ** (1.0 / sigma)

    def chi(k: float) -> float:
        if k < 0.0:
            raise DomainError(f"wavenumber must be >= 0, got k={k!r}")
        denom = c * k**sigma + r
        if denom == 0.0:
            raise DomainError("chi(k) diverges at k = 0 on the critical line")
        return 1.0 / denom

    return CorrelationQuantities(xi=xi, chi=chi)


def loglog_slope(x: Sequence[float], y: Sequence[float]) -> tuple[float, float]:
    """Least-squares slope of log y against log x with its standard error."""
    lx = np.log(np.asarray(x, dtype=float))
    ly = np.log(np.asarray(y, dtype=float))
    coeffs, cov = np.polyfit(lx, ly, 1, cov=True)
    return float(coeffs[0]), float(math.sqrt(max(cov[0][0], 0.0)))


FIT_KINDS = ("gamma_from_r", "nu_from_xi")

# Default fitting window: inside asymptotic validity, above solver noise.
FIT_WINDOW = (1e-5, 1e-2)
FIT_POINTS = 16


def fit_exponent(curve: Sequence[tuple[float, float]], kind: str) -> FitResult:
    """Fit a critical exponent from (t, value) pairs by log-log regression.

    kind "gamma_from_r" fits r ~ t^gamma (positive slope); "nu_from_xi" fits
    xi ~ t^-nu (negative slope, returned as +nu). Requires at least 8 points
    with t > 0 spanning two decades inside (0, 1e-2] and positive values.
    """
    if kind not in FIT_KINDS:
        raise DomainError(f"unknown fit kind {kind!r}; expected one of {FIT_KINDS}")
    pts = [(float(t), float(v)) for t, v in curve]
    if len(pts) < 8:
        raise FitError(f"need at least 8 points, got {len(pts)}")
    ts = [t for t, _ in pts]
    vals = [v for _, v in pts]
    if min(ts) <= 0.0 or min(vals) <= 0.0:
        raise FitError("reduced temperatures and values must all be positive")
    if max(ts) > FIT_WINDOW[1] * (1.0 + 1e-9):
        raise FitError(f"fit window is (0, {FIT_WINDOW[1]:g}]; got t up to {max(ts):g}")
    if max(ts) / min(ts) < 100.0:
        raise FitError("reduced temperatures must span at least two decades")
    slope, err = loglog_slope(ts, vals)
    exponent = slope if kind == "gamma_from_r" else -slope
    return FitResult(exponent=exponent, std_error=err, n_points=len(pts))


def extract_exponents(
    spec: GasSpec,
    rho: float,
    t_window: tuple[float, float] = FIT_WINDOW,
    points: int = FIT_POINTS,
) -> ExponentSet:
    """Measure gamma, nu and eta from the exact solver and compare to theory.

    Sweeps r(t) along the isochore on a log-uniform grid of reduced
    temperatures, converts to xi(t), fits both exponents, and measures the
    Fisher exponent from the critical chi(k) power law. Analytic targets
    (valid in the window sigma < d < 2 sigma) are gamma = sigma/(d - sigma),
    nu = 1/(d - sigma), eta = 2 - sigma.
    """
    if not (spec.sigma < spec.d < 2.0 * spec.sigma):
        raise UnsupportedRegime(
            f"analytic exponent targets need sigma < d < 2 sigma, "
            f"got d={spec.d:g}, sigma={spec.sigma:g}"
        )
    tc = critical_temperature_density(spec, rho)
    ts = np.geomspace(t_window[0], t_window[1], points)
    rs = [solve_gap_isochore(spec, tc * (1.0 + t), rho).r for t in ts]
    xis = [correlation_quantities(spec, r).xi for r in rs]

    fitted_gamma = fit_exponent(list(zip(ts, rs)), "gamma_from_r")
    fitted_nu = fit_exponent(list(zip(ts, xis)), "nu_from_xi")

    chi = correlation_quantities(spec, 0.0).chi
    ks = np.geomspace(1e-2, 1.0, 16)
    chi_slope, _ = loglog_slope(ks, [chi(k) for k in ks])
    fitted_eta = 2.0 + chi_slope

    d, sigma = spec.d, spec.sigma
    return ExponentSet(
        eta=2.0 - sigma,
        gamma_=sigma / (d - sigma),
        nu=1.0 / (d - sigma),
        fitted_gamma=fitted_gamma,
        fitted_nu=fitted_nu,
        fitted_eta=fitted_eta,
        fit_window=(float(t_window[0]), float(t_window[1])),
    )
