"""Thermodynamic-level quantities built on the thermal correlated coherent state.

The holistic environmental influence at temperature ``T`` is
``J_T = (hbar/2) coth x`` with ``x = hbar w / (2 k_B T)``.  It splits into a
quantum part ``hbar/2`` and a covariance part ``(hbar/2) csch x`` that add in
quadrature.  The zeroth law compares the system's uncertainty product with
the environment's ``J``; equality holds exactly when the two temperatures
coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .bogolyubov import StateClass
from .errors import DomainError
from .oscillator_core import ThermalContext, stable_coth, stable_csch
from .vacuum_states import state_from_temperature, up_product

__all__ = [
    "InfluenceMeasure",
    "EffectiveTemperature",
    "ZerothLawReport",
    "effective_temperature",
    "planck_energy",
    "influence_measure",
    "zeroth_law_report",
    "high_t_temperature_estimate",
    "lorentz_invariant",
    "lorentz_factors",
    "scs_invariant_det",
    "naive_identity_residual",
    "naive_identity_ratio",
]


@dataclass(frozen=True)
class InfluenceMeasure:
    total: float
    quantum_part: float
    thermal_part: float


@dataclass(frozen=True)
class EffectiveTemperature:
    value: float
    kelvin_input: float
    minimum: float
    # No closed form for the spread of the effective temperature is available.
    std_dev: Optional[float] = None


@dataclass(frozen=True)
class ZerothLawReport:
    j_system: float
    j_environment: float
    residual: float
    t_eff_system: float
    t_eff_environment: float


def effective_temperature(ctx):
    """``(hbar w / 2 k_B) coth x``; never below the zero-point value ``hbar w / 2 k_B``."""
    minimum = ctx.hbar * ctx.omega / (2.0 * ctx.k_boltzmann)
    return EffectiveTemperature(
        value=minimum * stable_coth(ctx.x),
        kelvin_input=ctx.temperature,
        minimum=minimum,
    )


def planck_energy(ctx):
    """Mean thermal energy of the oscillator, ``(hbar w/2) coth x``."""
    return 0.5 * ctx.hbar * ctx.omega * stable_coth(ctx.x)


def influence_measure(ctx):
    quantum = 0.5 * ctx.hbar
    thermal = quantum * stable_csch(ctx.x)
    return InfluenceMeasure(
        total=quantum * stable_coth(ctx.x),
        quantum_part=quantum,
        thermal_part=thermal,
    )


def zeroth_law_report(system_T, env_T0, template=None):
    """Compare a thermal CCS at ``system_T`` with a thermostat at ``env_T0``.

    ``template`` supplies the constants and oscillator; natural units when
    omitted.  The residual is system minus environment.
    """
    template = template or ThermalContext.from_temperature(0.0)
    sys_ctx = template.with_temperature(system_T)
    env_ctx = template.with_temperature(env_T0)
    j_sys = up_product(state_from_temperature(sys_ctx, StateClass.CCS))
    j_env = influence_measure(env_ctx).total
    to_temperature = template.omega / template.k_boltzmann
    return ZerothLawReport(
        j_system=j_sys,
        j_environment=j_env,
        residual=j_sys - j_env,
        t_eff_system=to_temperature * j_sys,
        t_eff_environment=to_temperature * j_env,
    )


def high_t_temperature_estimate(ctx):
    """Temperature recovered from the uncertainty product, ``(w/k_B) UP_T``.

    Approaches ``T`` from above with relative excess ``x^2/3 + O(x^4)``.
    """
    if ctx.temperature == 0.0:
        raise DomainError("the high-temperature estimate is undefined at T = 0")
    up = up_product(state_from_temperature(ctx, StateClass.CCS))
    return ctx.omega / ctx.k_boltzmann * up


def _hyperbolic_det(x):
    # (coth + csch)(coth - csch), evaluated as a product so that neither
    # factor is squared; both terms grow like 1/x for small x.
    coth, csch = stable_coth(x), stable_csch(x)
    return (coth - csch) * (coth + csch)


def lorentz_invariant(ctx):
    """``J_T^2 - sigma_T^2``; analytically ``(hbar/2)^2`` at every temperature."""
    return (0.5 * ctx.hbar) ** 2 * _hyperbolic_det(ctx.x)


def lorentz_factors(ctx):
    """Return ``(beta_term, gamma_term) = (tanh x, coth x)``.

    Note that ``gamma_term`` is ``1/beta_term``, not ``(1 - beta_term^2)^(-1/2)``.
    """
    gamma = stable_coth(ctx.x)
    return 1.0 / gamma, gamma


def scs_invariant_det(ctx):
    """Cold-vacuum ``UP^2`` times ``det diag(coth + csch, coth - csch)``."""
    up0_sq = (0.5 * ctx.hbar) ** 2
    return up0_sq * _hyperbolic_det(ctx.x)


def naive_identity_residual(ctx):
    """``coth^2 x - csch^2 x - 1``, zero for every temperature."""
    return _hyperbolic_det(ctx.x) - 1.0


def naive_identity_ratio(ctx):
    """``coth^2 x / csch^2 x = cosh^2 x``; tends to 1 only as ``T`` grows."""
    csch = stable_csch(ctx.x)
    if csch == 0.0:
        return math.inf
    return (stable_coth(ctx.x) / csch) ** 2
