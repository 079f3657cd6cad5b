"""Temperature sweeps tabulated as :class:`SweepRow` records (CSV or JSON)."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import __version__
from .bogolyubov import StateClass
from .errors import DomainError
from .oscillator_core import ThermalContext
from .stochastic_thermo import effective_temperature, planck_energy
from .vacuum_states import holistic_influence, schrodinger_residual, state_from_temperature, up_product

__all__ = ["SweepRow", "FIELDS", "temperature_grid", "sweep_row", "sweep", "to_csv", "to_json"]


@dataclass(frozen=True)
class SweepRow:
    T: float
    x: float
    tau: float
    var_q: float
    var_p: float
    cov: float
    up_product: float
    influence_J: float
    planck_energy: float
    t_effective: float
    schrodinger_residual: float
    zeroth_residual: float


FIELDS = tuple(f.name for f in fields(SweepRow))


def temperature_grid(t_min, t_max, points, spacing="linear"):
    if not (math.isfinite(t_min) and math.isfinite(t_max)) or not 0.0 <= t_min < t_max:
        raise DomainError(f"need 0 <= t_min < t_max, got t_min={t_min}, t_max={t_max}")
    if points < 2:
        raise DomainError(f"need at least 2 points, got {points}")
    if spacing == "linear":
        return np.linspace(t_min, t_max, points)
    if spacing == "log":
        if t_min == 0.0:
            raise DomainError("log spacing needs t_min > 0")
        return np.geomspace(t_min, t_max, points)
    raise DomainError(f"unknown spacing {spacing!r}")


def sweep_row(ctx, state_class=StateClass.CCS):
    """One row; ``influence_J`` is the state's own ``|<p q>|``.

    For the CCS that equals the thermostat influence ``(hbar/2) coth x``, for
    the SCS it stays at the cold-vacuum value ``hbar/2``; ``zeroth_residual``
    is ``up_product - influence_J`` in both cases.
    """
    s = state_from_temperature(ctx, state_class)
    up, j = up_product(s), holistic_influence(s)
    return SweepRow(
        T=ctx.temperature,
        x=ctx.x,
        tau=s.params.tau,
        var_q=s.var_q,
        var_p=s.var_p,
        cov=s.cov,
        up_product=up,
        influence_J=j,
        planck_energy=planck_energy(ctx),
        t_effective=effective_temperature(ctx).value,
        schrodinger_residual=schrodinger_residual(s),
        zeroth_residual=up - j,
    )


def sweep(temperatures, state_class=StateClass.CCS, constants=None, oscillator=None):
    return [
        sweep_row(ThermalContext.from_temperature(float(t), constants, oscillator), state_class)
        for t in temperatures
    ]


def to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in rows:
        writer.writerow([format(getattr(row, name), ".17g") for name in FIELDS])
    return buf.getvalue()


def _json_number(v):
    return None if math.isinf(v) else v


def to_json(rows, state_class, omega=1.0, hbar=1.0, k_boltzmann=1.0):
    """JSON document ``{meta, rows}``; the infinite ``x`` of a T = 0 row becomes null."""
    if isinstance(state_class, StateClass):
        state_class = state_class.value
    doc = {
        "meta": {
            "units": {"hbar": hbar, "k_boltzmann": k_boltzmann, "mass": 1.0},
            "omega": omega,
            "class": state_class,
            "version": __version__,
        },
        "rows": [{k: _json_number(v) for k, v in asdict(r).items()} for r in rows],
    }
    return json.dumps(doc, indent=2) + "\n"
