"""Bose function g_nu(y) and the zeta/Gamma helpers it needs.

The Bose function is taken as the series

    g_nu(y) = sum_{n >= 1} exp(-n y) / n^nu ,      y = r / (k_B T) >= 0,

which reduces to the Riemann zeta at the condensation boundary,
g_nu(0) = zeta(nu) for nu > 1, and diverges at y = 0 for nu <= 1 (the
signal for zero-temperature condensation).

Two evaluation routes are used:

* direct summation with a rigorous geometric tail bound, good whenever y is
  not tiny;
* the small-argument (Robinson) expansion

      g_nu(y) = Gamma(1 - nu) y^(nu - 1)
                + sum_{k >= 0} (-y)^k zeta(nu - k) / k!

  for non-integer nu, which is what makes the critical regime y -> 0
  computable at full double precision.

Every evaluation returns an :class:`EvalResult` carrying an absolute-error
estimate (first omitted term plus a float round-off allowance), so callers
can assert accuracy instead of hoping for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from .errors import ConvergenceError, DivergentValue, DomainError, PoleError

_EPS = float(np.finfo(np.float64).eps)

# Below this argument the direct series needs too many terms and the
# small-argument expansion takes over (non-integer order only).
SMALL_Y_SWITCH = 1e-3

# Orders closer than this to an integer are treated as integer: the
# expansion's Gamma(1 - nu) and zeta(nu - k) poles no longer cancel cleanly
# in double precision.
_INTEGER_TOL = 1e-6

# Hard cap on direct-series terms (vectorised blocks), ~1.3e8.
_MAX_SERIES_TERMS = 1 << 27
_BLOCK = 1 << 16

# Expansion order cap; terms decay like (y / 2 pi)^k so this is generous.
_KMAX_ADAPTIVE = 60


@dataclass(frozen=True)
class EvalResult:
    """A value, an absolute-error estimate, and the number of terms used."""

    value: float
    est_error: float
    terms_used: int

    def __float__(self) -> float:
        return self.value


def zeta(s: float) -> float:
    """Riemann zeta function at real ``s`` != 1.

    Arguments below 1 are supported (analytic continuation); the pole at
    s = 1 raises :class:`PoleError`.
    """
    s = float(s)
    if s == 1.0:
        raise PoleError("zeta(s) has a pole at s = 1")
    return float(_sp.zeta(s))


def gamma(x: float) -> float:
    """Gamma function at real ``x``, rejecting the poles at 0, -1, -2, ...."""
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"Gamma(x) has a pole at x = {x:g}")
    return float(_sp.gamma(x))


def _is_near_integer(nu: float) -> bool:
    return abs(nu - round(nu)) < _INTEGER_TOL


def _series_terms_needed(nu: float, y: float, tol: float) -> int:
    """Smallest N with tail bound exp(-N y) max(1, N^-nu) / (1 - exp(-y)) < tol."""
    one_minus = -math.expm1(-y)  # 1 - e^-y, accurate for tiny y
    n = max(1.0, -math.log(tol * one_minus) / y)
    if nu < 0.0:
        # n^|nu| growth inflates the tail; a couple of fixed-point rounds settle it
        for _ in range(4):
            n = max(1.0, (-math.log(tol * one_minus) - nu * math.log(n)) / y)
    return int(math.ceil(n)) + 1


def _series_tail_bound(nu: float, y: float, n_terms: int) -> float:
    one_minus = -math.expm1(-y)
    n1 = n_terms + 1
    return math.exp(-n1 * y) / one_minus * max(1.0, n1 ** (-nu))


def _bose_series(nu: float, y: float) -> EvalResult:
    """Direct summation sum_n exp(-n y) n^-nu in vectorised blocks."""
    n_terms = _series_terms_needed(nu, y, 1e-15)
    if n_terms > _MAX_SERIES_TERMS:
        n_terms = _MAX_SERIES_TERMS
    partials = []
    start = 1
    while start <= n_terms:
        stop = min(start + _BLOCK, n_terms + 1)
        n = np.arange(start, stop, dtype=np.float64)
        partials.append(float(np.sum(np.exp(-y * n) * n ** (-nu))))
        start = stop
    value = math.fsum(partials)
    tail = _series_tail_bound(nu, y, n_terms)
    if tail > 1e-13 * max(1.0, abs(value)):
        raise ConvergenceError(
            f"direct Bose series for nu={nu:g}, y={y:g} cannot reach target "
            f"accuracy within {_MAX_SERIES_TERMS} terms (tail bound {tail:.2e})"
        )
    err = tail + 4.0 * _EPS * abs(value)
    return EvalResult(value, err, n_terms)


def _bose_expansion(nu: float, y: float, k_max: int, adaptive: bool) -> EvalResult:
    """Small-argument expansion around y = 0, non-integer nu only.

    ``adaptive`` stops once terms stop mattering; otherwise exactly the
    k = 0 .. k_max terms are summed. The error estimate is the first omitted
    term plus a round-off allowance scaled by the largest intermediate
    (the expansion involves cancellation between the Gamma lead and the
    zeta sum when nu sits near an integer).
    """
    lead = gamma(1.0 - nu) * y ** (nu - 1.0)
    total = lead
    magnitude = abs(lead)
    factor = 1.0  # (-y)^k / k!
    k = 0
    while True:
        term = factor * zeta(nu - k)
        total += term
        magnitude = max(magnitude, abs(term))
        factor *= -y / (k + 1)
        k += 1
        next_term = abs(factor * zeta(nu - k))
        if adaptive:
            if next_term < _EPS * abs(total) or k > _KMAX_ADAPTIVE:
                break
        elif k > k_max:
            break
    err = next_term + 4.0 * _EPS * magnitude
    return EvalResult(total, err, k)


def _bose_any_order(nu: float, y: float) -> EvalResult:
    """g_nu(y) for y > 0 and any real order (negative orders allowed).

    Internal: used directly by the derivative recurrence, which needs orders
    below the public nu > 0 domain.
    """
    if y < SMALL_Y_SWITCH and not _is_near_integer(nu):
        return _bose_expansion(nu, y, _KMAX_ADAPTIVE, adaptive=True)
    return _bose_series(nu, y)


def bose_g(nu: float, y: float) -> EvalResult:
    """Bose function g_nu(y) for nu > 0, y >= 0.

    Parameters
    ----------
    nu : order; must be positive. At y = 0 additionally nu > 1, otherwise
        the series diverges (``DivergentValue``).
    y : nonnegative argument r / (k_B T). Negative y would mean mu > 0,
        which is thermodynamically forbidden (``DomainError``).

    Returns
    -------
    EvalResult with absolute error below 1e-12 over the supported range.
    """
    nu = float(nu)
    y = float(y)
    if nu <= 0.0:
        raise DomainError(f"Bose function order must be positive, got nu={nu:g}")
    if y < 0.0:
        raise DomainError(f"Bose function argument must be >= 0, got y={y:g}")
    if y == 0.0:
        if nu <= 1.0:
            raise DivergentValue(
                f"g_nu(0) diverges for nu <= 1 (nu={nu:g}); this is the "
                "zero-temperature-condensation signal"
            )
        value = zeta(nu)
        return EvalResult(value, 4.0 * _EPS * abs(value), 0)
    return _bose_any_order(nu, y)


def bose_g_small_y(nu: float, y: float, k_max: int) -> EvalResult:
    """Truncated small-argument expansion of g_nu(y), non-integer nu.

    Sums the Gamma(1 - nu) y^(nu-1) lead plus the k = 0 .. k_max powers of y;
    ``est_error`` is the first omitted term. Integer orders are rejected:
    their expansion has a logarithmic form this library does not provide.
    """
    nu = float(nu)
    y = float(y)
    if nu <= 0.0:
        raise DomainError(f"order must be positive, got nu={nu:g}")
    if _is_near_integer(nu):
        raise DomainError(
            f"small-argument expansion needs non-integer order, got nu={nu:g}"
        )
    if y <= 0.0:
        raise DomainError(f"expansion argument must be positive, got y={y:g}")
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    return _bose_expansion(nu, y, int(k_max), adaptive=False)


def bose_g_derivative(nu: float, y: float) -> EvalResult:
    """d g_nu / d y = -g_(nu-1)(y).

    Finite whenever nu > 2 or y > 0; at y = 0 with nu - 1 <= 1 the value
    diverges (``DivergentValue``). Orders nu - 1 <= 0 are fine for y > 0.
    """
    nu = float(nu)
    y = float(y)
    if y < 0.0:
        raise DomainError(f"argument must be >= 0, got y={y:g}")
    if y == 0.0:
        if nu - 1.0 <= 1.0:
            raise DivergentValue(
                f"dg_nu/dy at y=0 diverges for nu <= 2 (nu={nu:g})"
            )
        value = -zeta(nu - 1.0)
        return EvalResult(value, 4.0 * _EPS * abs(value), 0)
    inner = _bose_any_order(nu - 1.0, y)
    return EvalResult(-inner.value, inner.est_error, inner.terms_used)
