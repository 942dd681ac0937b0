"""Constant-density thermodynamics.

The density constraint

    rho = lambda_T^-d A(d, sigma) g_(d/sigma)(r / k_B T) + rho Psi^2

is inverted for the gap r = -mu in the normal phase, or solved for the
condensate fraction Psi^2 with r = 0 below the transition. The critical
temperature follows from the r = 0, Psi = 0 boundary and exists only for
d > sigma; otherwise condensation happens at absolute zero and the solvers
raise :class:`ZeroTemperatureBEC`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError, ZeroTemperatureBEC
from .gas import GasSpec, as_natural, prefactor_A
from .rootfind import solve_bose_equation
from .special import bose_g, zeta

REGIME_NORMAL = "normal"
REGIME_CONDENSED = "condensed"
REGIME_CRITICAL = "critical"
REGIME_ZERO_T_BEC = "zero_T_BEC"

# Reduced temperatures below solver resolution are reported as critical
# instead of chasing a root smaller than float noise allows.
CRITICAL_WINDOW = 1e-8


@dataclass(frozen=True)
class ThermoPoint:
    """One solved equilibrium state along an isochore.

    r is the gap -mu >= 0; psi2 the condensate fraction, positive only where
    r = 0 (condensation requires mu = 0).
    """

    T: float
    t: float
    r: float
    psi2: float
    rho: float
    P: float
    regime: str

    @property
    def mu(self) -> float:
        return -self.r


def _density_prefactor(nat: GasSpec, T: float) -> float:
    """lambda_T^-d * A(d, sigma) in natural units."""
    return (nat.mass * T / (2.0 * math.pi)) ** nat.d_over_sigma * prefactor_A(
        nat.d, nat.sigma
    )


def critical_temperature_density(spec: GasSpec, rho: float) -> float:
    """T_c(rho) = (2 pi hbar^2 / m k_B) [rho / (A zeta(d/sigma))]^(sigma/d).

    Raises ZeroTemperatureBEC for d <= sigma, where the boundary value
    g_(d/sigma)(0) diverges and condensation exists only at T = 0.
    """
    if not rho > 0.0:
        raise DomainError(f"density must be positive, got rho={rho!r}")
    if spec.d <= spec.sigma:
        raise ZeroTemperatureBEC(
            f"d = {spec.d:g} <= sigma = {spec.sigma:g}: condensation only at T = 0"
        )
    nat, conv = as_natural(spec)
    rho_nat = conv.density_in(rho)
    bracket = rho_nat / (prefactor_A(nat.d, nat.sigma) * zeta(nat.d_over_sigma))
    tc = (2.0 * math.pi / nat.mass) * bracket ** (nat.sigma / nat.d)
    return conv.temperature_out(tc)


def pressure_at(spec: GasSpec, T: float, r: float) -> float:
    """P = k_B T lambda_T^-d A(d, sigma) g_(d/sigma + 1)(r / k_B T).

    The grand-potential pressure at gap r; monotone decreasing in r, with
    the r = 0 value giving the coexistence pressure at temperature T.
    """
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    if r < 0.0:
        raise DomainError(f"gap must be >= 0, got r={r!r}")
    nat, conv = as_natural(spec)
    T_nat = conv.temperature_in(T)
    r_nat = conv.energy_in(r)
    g = bose_g(nat.d_over_sigma + 1.0, r_nat / T_nat).value
    return conv.pressure_out(T_nat * _density_prefactor(nat, T_nat) * g)


def density_at(spec: GasSpec, T: float, r: float) -> float:
    """Normal-branch density lambda_T^-d A(d, sigma) g_(d/sigma)(r / k_B T).

    The thermal part of the density constraint at gap r; feeding a solved
    gap back in must reproduce the constrained density.
    """
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    if r < 0.0:
        raise DomainError(f"gap must be >= 0, got r={r!r}")
    nat, conv = as_natural(spec)
    T_nat = conv.temperature_in(T)
    r_nat = conv.energy_in(r)
    g = bose_g(nat.d_over_sigma, r_nat / T_nat).value
    return conv.density_out(_density_prefactor(nat, T_nat) * g)


def solve_gap_isochore(spec: GasSpec, T: float, rho: float) -> ThermoPoint:
    """Equilibrium state at temperature T and fixed density rho.

    Above T_c the gap solves the normal-phase density equation (residual
    below 1e-12 relative); at and below T_c the gap is zero and the
    condensate fraction is 1 - (T/T_c)^(d/sigma).
    """
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    tc = critical_temperature_density(spec, rho)  # validates rho, d > sigma
    t = (T - tc) / tc
    nat, conv = as_natural(spec)
    T_nat = conv.temperature_in(T)
    rho_nat = conv.density_in(rho)
    nu = nat.d_over_sigma

    if abs(t) <= CRITICAL_WINDOW:
        regime, r_nat, psi2 = REGIME_CRITICAL, 0.0, 0.0
    elif t < 0.0:
        regime = REGIME_CONDENSED
        r_nat = 0.0
        psi2 = -math.expm1(nu * math.log(T / tc))  # 1 - (T/T_c)^(d/sigma)
    else:
        regime = REGIME_NORMAL
        psi2 = 0.0
        r_nat = solve_bose_equation(
            nu, _density_prefactor(nat, T_nat), rho_nat, T_nat
        )

    P = pressure_at(spec, T, conv.energy_out(r_nat))
    return ThermoPoint(
        T=T, t=t, r=conv.energy_out(r_nat), psi2=psi2, rho=rho, P=P, regime=regime
    )


def grand_potential(
    spec: GasSpec,
    T: float,
    r: float,
    h: float = 0.0,
    n_particles: float = 1.0,
    volume: float = 1.0,
) -> float:
    """Grand potential Omega(T, r, h) with a real source field h.

    Omega = -k_B T V lambda_T^-d A g_(d/sigma + 1)(r / k_B T) - h^2 / (N r).

    The field term carries an explicit 1/r pole, so h != 0 requires r > 0.
    Satisfies dOmega = -S dT + N dr - 2 Psi dh with Psi = h / (N r), which
    is what fixes the susceptibility 1 / (N r).
    """
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    if r < 0.0:
        raise DomainError(f"gap must be >= 0, got r={r!r}")
    if not volume > 0.0:
        raise DomainError(f"volume must be positive, got {volume!r}")
    if not n_particles > 0.0:
        raise DomainError(f"particle count must be positive, got {n_particles!r}")
    if h != 0.0 and r == 0.0:
        raise PoleError("the source-field term has a 1/r pole; need r > 0 when h != 0")
    nat, conv = as_natural(spec)
    T_nat = conv.temperature_in(T)
    r_nat = conv.energy_in(r)
    h_nat = conv.energy_in(h)
    inv_vol_nat = conv.density_in(1.0 / volume)  # 1/V transforms like a density
    g = bose_g(nat.d_over_sigma + 1.0, r_nat / T_nat).value
    omega = -T_nat / inv_vol_nat * _density_prefactor(nat, T_nat) * g
    if h_nat != 0.0:
        omega -= h_nat * h_nat / (n_particles * r_nat)
    return conv.energy_out(omega)


def condensate_fraction(spec: GasSpec, T: float, rho: float) -> float:
    """Psi^2(T) = 1 - (T/T_c)^(d/sigma) below T_c, clamped to 0 above."""
    tc = critical_temperature_density(spec, rho)
    if T >= tc:
        return 0.0
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    return -math.expm1(spec.d_over_sigma * math.log(T / tc))


def susceptibility(r: float, n_particles: float = 1.0) -> float:
    """Order-parameter susceptibility chi_T = 1 / (N r), divergent at r = 0."""
    if r < 0.0:
        raise DomainError(f"gap must be >= 0, got r={r!r}")
    if r == 0.0:
        return math.inf
    return 1.0 / (n_particles * r)
