"""Constant-pressure thermodynamics.

At fixed pressure the gap solves

    P = k_B T lambda_T^-d A(d, sigma) g_(d/sigma + 1)(r / k_B T),

which has a solution with r >= 0 exactly for T >= T_c(P). Unlike the
constant-density case, the transition temperature is finite for every d > 0.
The state below T_c(P) is deliberately not modelled: the solvers raise
:class:`CondensedRegion` instead of extrapolating, and only the coexistence
boundary itself is exposed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CondensedRegion, DomainError
from .gas import GasSpec, as_natural, prefactor_A
from .isochore import (
    CRITICAL_WINDOW,
    _density_prefactor,
    critical_temperature_density,
    pressure_at,
)
from .rootfind import solve_bose_equation
from .special import bose_g, zeta

REGIME_NORMAL = "normal"
REGIME_BOUNDARY = "condensed_boundary"


@dataclass(frozen=True)
class IsobarPoint:
    """One solved state along an isobar (fixed P, T >= T_c(P)).

    v is the specific volume 1/rho; t_P the reduced distance from the
    constant-pressure transition. At the boundary r = 0 the density equals
    the coexistence value, which is finite only for d > sigma.
    """

    T: float
    P: float
    r: float
    rho: float
    v: float
    t_P: float
    regime: str

    @property
    def mu(self) -> float:
        return -self.r


def critical_temperature_pressure(spec: GasSpec, P: float) -> float:
    """T_c(P) = [lambda_0^d P / (zeta(1 + d/sigma) A(d, sigma) k_B)]^(sigma/(d+sigma)).

    Valid for every d > 0; lambda_0 = lambda_T T^(1/sigma) is temperature
    independent, which is what makes the inversion closed-form.
    """
    if not P > 0.0:
        raise DomainError(f"pressure must be positive, got P={P!r}")
    nat, conv = as_natural(spec)
    P_nat = conv.pressure_in(P)
    lam0_d = (2.0 * math.pi / nat.mass) ** (nat.d / nat.sigma)
    bracket = lam0_d * P_nat / (
        zeta(1.0 + nat.d_over_sigma) * prefactor_A(nat.d, nat.sigma)
    )
    tc = bracket ** (nat.sigma / (nat.d + nat.sigma))
    return conv.temperature_out(tc)


def solve_gap_isobar(spec: GasSpec, T: float, P: float) -> IsobarPoint:
    """Normal-phase state at temperature T and fixed pressure P.

    Requires T >= T_c(P); temperatures inside the critical window return the
    boundary point (r = 0), lower ones raise CondensedRegion. The density
    follows from the normal branch of the density equation at the solved gap.
    """
    if not T > 0.0:
        raise DomainError(f"temperature must be positive, got T={T!r}")
    tc = critical_temperature_pressure(spec, P)  # validates P
    t_P = (T - tc) / tc
    if t_P < -CRITICAL_WINDOW:
        raise CondensedRegion(
            f"T = {T:g} is below T_c(P) = {tc:g}; the condensed constant-pressure "
            "state is not modelled"
        )
    nat, conv = as_natural(spec)
    T_nat = conv.temperature_in(T)
    nu = nat.d_over_sigma
    pref = _density_prefactor(nat, T_nat)

    if abs(t_P) <= CRITICAL_WINDOW:
        regime, r_nat = REGIME_BOUNDARY, 0.0
        if nat.d > nat.sigma:
            rho_nat = pref * zeta(nu)
        else:
            rho_nat = math.inf  # coexistence density diverges for d <= sigma
    else:
        regime = REGIME_NORMAL
        P_nat = conv.pressure_in(P)
        r_nat = solve_bose_equation(nu + 1.0, T_nat * pref, P_nat, T_nat)
        rho_nat = pref * bose_g(nu, r_nat / T_nat).value

    rho = conv.density_out(rho_nat)
    return IsobarPoint(
        T=T,
        P=P,
        r=conv.energy_out(r_nat),
        rho=rho,
        v=0.0 if math.isinf(rho) else 1.0 / rho,
        t_P=t_P,
        regime=regime,
    )


def coexistence_consistency(spec: GasSpec, rho: float) -> float:
    """|T_c(P_c(rho)) / T_c(rho) - 1| along the shared coexistence curve.

    The two critical-temperature formulas are exact inverses through the
    r = 0 pressure, so this must vanish to rounding. Propagates
    ZeroTemperatureBEC for d <= sigma.
    """
    t1 = critical_temperature_density(spec, rho)
    p_c = pressure_at(spec, t1, 0.0)
    t2 = critical_temperature_pressure(spec, p_c)
    return abs(t2 / t1 - 1.0)
