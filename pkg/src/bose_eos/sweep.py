"""Temperature sweeps along isochores and isobars, with stable serialization.

Rows may be solved in parallel (capped by the BOSE_EOS_THREADS environment
variable) but are always emitted ordered by temperature, and floats are
formatted with 17 significant digits, so identical requests produce
byte-identical output.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import CondensedRegion, ConfigError, DomainError
from .gas import GasSpec
from .isobar import REGIME_BOUNDARY, critical_temperature_pressure, solve_gap_isobar
from .isochore import solve_gap_isochore

SCHEMA_VERSION = "bose-eos v1"
COLUMNS = ("T", "t", "r", "mu", "psi2", "rho", "P", "regime")

CONSTRAINT_DENSITY = "density"
CONSTRAINT_PRESSURE = "pressure"
_CONSTRAINTS = (CONSTRAINT_DENSITY, CONSTRAINT_PRESSURE)
_SPACINGS = ("linear", "log")


@dataclass(frozen=True)
class SweepRequest:
    """One sweep: a gas, a held constraint, and a temperature grid."""

    spec: GasSpec
    constraint: str
    value: float
    T_min: float
    T_max: float
    points: int
    spacing: str = "linear"
    columns: tuple[str, ...] = COLUMNS

    def __post_init__(self):
        if self.constraint not in _CONSTRAINTS:
            raise DomainError(
                f"constraint must be one of {_CONSTRAINTS}, got {self.constraint!r}"
            )
        if not (self.value > 0.0):
            raise DomainError(f"constraint value must be positive, got {self.value!r}")
        if not (0.0 < self.T_min < self.T_max):
            raise DomainError(
                f"need 0 < T_min < T_max, got T_min={self.T_min!r}, T_max={self.T_max!r}"
            )
        if self.points < 2:
            raise DomainError(f"need at least 2 grid points, got {self.points!r}")
        if self.spacing not in _SPACINGS:
            raise DomainError(f"spacing must be one of {_SPACINGS}, got {self.spacing!r}")
        unknown = [c for c in self.columns if c not in COLUMNS]
        if unknown or not self.columns:
            raise DomainError(f"unknown columns {unknown}; available: {COLUMNS}")


@dataclass(frozen=True)
class SweepTable:
    """Ordered sweep rows plus the column schema they were built under."""

    columns: tuple[str, ...]
    rows: tuple[dict, ...] = field(default_factory=tuple)

    def to_csv(self) -> str:
        lines = [f"# {SCHEMA_VERSION} columns: {','.join(self.columns)}"]
        for row in self.rows:
            lines.append(",".join(_format_cell(row[c]) for c in self.columns))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA_VERSION,
            "columns": list(self.columns),
            "rows": [{c: _json_cell(row[c]) for c in self.columns} for row in self.rows],
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format(float(value) + 0.0, ".17g")  # + 0.0 folds -0.0 into 0


def _json_cell(value):
    if value is None or isinstance(value, str):
        return value
    value = float(value) + 0.0
    if not math.isfinite(value):
        return format(value, ".17g")
    return value


def temperature_grid(request: SweepRequest) -> list[float]:
    """The sweep's temperature values, ascending."""
    if request.spacing == "linear":
        grid = np.linspace(request.T_min, request.T_max, request.points)
    else:
        grid = np.geomspace(request.T_min, request.T_max, request.points)
    return [float(T) for T in grid]


def _isochore_row(spec: GasSpec, T: float, rho: float) -> dict:
    pt = solve_gap_isochore(spec, T, rho)
    return {
        "T": pt.T,
        "t": pt.t,
        "r": pt.r,
        "mu": pt.mu,
        "psi2": pt.psi2,
        "rho": pt.rho,
        "P": pt.P,
        "regime": pt.regime,
    }


def _isobar_row(spec: GasSpec, T: float, P: float) -> dict:
    try:
        pt = solve_gap_isobar(spec, T, P)
    except CondensedRegion:
        # No state is produced below T_c(P); keep the grid row as a sentinel.
        tc = critical_temperature_pressure(spec, P)
        return {
            "T": T,
            "t": T / tc - 1.0,
            "r": None,
            "mu": None,
            "psi2": None,
            "rho": None,
            "P": P,
            "regime": REGIME_BOUNDARY,
        }
    return {
        "T": pt.T,
        "t": pt.t_P,
        "r": pt.r,
        "mu": pt.mu,
        "psi2": 0.0,
        "rho": pt.rho,
        "P": pt.P,
        "regime": pt.regime,
    }


def thread_count() -> int:
    """Worker cap for row solving; BOSE_EOS_THREADS overrides the default."""
    raw = os.environ.get("BOSE_EOS_THREADS")
    if raw is None:
        return min(4, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"BOSE_EOS_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise ConfigError(f"BOSE_EOS_THREADS must be >= 1, got {n}")
    return n


def run_sweep(request: SweepRequest, threads: int | None = None) -> SweepTable:
    """Solve the sweep grid and return rows ordered by temperature."""
    grid = temperature_grid(request)
    if request.constraint == CONSTRAINT_DENSITY:
        def solve(T: float) -> dict:
            return _isochore_row(request.spec, T, request.value)
    else:
        def solve(T: float) -> dict:
            return _isobar_row(request.spec, T, request.value)

    n_workers = thread_count() if threads is None else threads
    if n_workers > 1 and len(grid) > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            rows = list(pool.map(solve, grid))
    else:
        rows = [solve(T) for T in grid]
    return SweepTable(columns=tuple(request.columns), rows=tuple(rows))
