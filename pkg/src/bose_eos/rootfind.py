"""Bracketed Newton root finding for the monotone gap equations.

Both constraint solvers reduce to the same problem: find r >= 0 with
``prefactor * g_order(r / T) = target`` where the left side is strictly
decreasing in r. That guarantees a sign-change bracket exists; Newton steps
use the exact derivative through the recurrence g_order' = -g_(order-1) and
fall back to bisection whenever a step leaves the bracket or the derivative
order makes g_(order-1) blow up near r = 0.
"""

from __future__ import annotations

from typing import Callable

from .errors import ConvergenceError
from .special import _bose_any_order, bose_g

# Bisection-only region: for derivative orders <= 1 the Newton slope
# diverges as r -> 0, so below this beta*r the plain bracket halving is used.
_NEWTON_FLOOR_Y = 1e-6

_MAX_ITER = 400
_BRACKET_GROW = 4.0
_BRACKET_CAP_FACTOR = 1e6


def find_root_decreasing(
    f: Callable[[float], float],
    df: Callable[[float], float] | None,
    lo: float,
    hi: float,
    *,
    ftol: float,
    xtol_rel: float = 4.0 * 2.220446049250313e-16,
    newton_floor: float = 0.0,
    max_iter: int = _MAX_ITER,
) -> float:
    """Root of strictly decreasing ``f`` on [lo, hi] with f(lo) > 0 > f(hi).

    Newton iterates are confined to the current bracket; any step that
    escapes it, lands below ``newton_floor``, or lacks a usable derivative
    is replaced by bisection. Terminates on |f| <= ftol or bracket collapse.
    """
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx = f(x)
        if abs(fx) <= ftol:
            return x
        if fx > 0.0:
            lo = x
        else:
            hi = x
        if hi - lo <= xtol_rel * hi:
            return 0.5 * (lo + hi)
        x_new = None
        if df is not None and x > newton_floor:
            slope = df(x)
            if slope != 0.0:
                candidate = x - fx / slope
                if lo < candidate < hi:
                    x_new = candidate
        x = 0.5 * (lo + hi) if x_new is None else x_new
    raise ConvergenceError(
        f"root finder did not converge in {max_iter} iterations "
        f"(bracket [{lo:.3e}, {hi:.3e}])"
    )


def solve_bose_equation(
    order: float,
    prefactor: float,
    target: float,
    T: float,
    *,
    residual_rtol: float = 1e-12,
) -> float:
    """Solve ``prefactor * g_order(r / T) = target`` for the gap r > 0.

    Assumes the caller has already established that a positive root exists,
    i.e. prefactor * zeta(order) > target (the system is on the normal side
    of the transition). The bracket starts at [0, k_B T] and grows
    geometrically until the residual changes sign.
    """
    ftol = residual_rtol * target

    def residual(r: float) -> float:
        return prefactor * bose_g(order, r / T).value - target

    def residual_slope(r: float) -> float:
        # d/dr [g_order(r/T)] = -g_(order-1)(r/T) / T
        return -prefactor * _bose_any_order(order - 1.0, r / T).value / T

    lo = 0.0
    hi = T
    cap = _BRACKET_CAP_FACTOR * T
    while residual(hi) > 0.0:
        lo = hi
        hi *= _BRACKET_GROW
        if hi > cap:
            raise ConvergenceError(
                f"could not bracket the gap below r = {cap:.3e}"
            )

    # Divergent Newton slope at r -> 0 when the derivative order is <= 1.
    floor = _NEWTON_FLOOR_Y * T if order - 1.0 <= 1.0 else 0.0
    return find_root_decreasing(
        residual, residual_slope, lo, hi, ftol=ftol, newton_floor=floor
    )
