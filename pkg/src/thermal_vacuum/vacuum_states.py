"""Gaussian arbitrary-vacuum states of one oscillator mode (mass 1).

The state generated from the cold vacuum by the Bogolyubov parameters
``(tau, phi)`` has the complex wavefunction

    psi(q) = [2 pi var_q]^(-1/4) exp(-q^2 (1 - i beta) / (4 var_q))

with ``var_q = (hbar/2w) A``, ``var_p = (hbar w/2) B`` and ``beta =
sinh 2tau sin 2phi`` where ``A, B = cosh 2tau -/+ sinh 2tau cos 2phi``.
Everything here is closed form; the wavefunction itself is only evaluated
for the quadrature oracle in :mod:`thermal_vacuum.fock_oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bogolyubov import (
    SqueezeParams,
    StateClass,
    classify,
    double_angle_trig,
    tau_from_temperature,
)
from .errors import DomainError
from .oscillator_core import ThermalContext, stable_coth, stable_csch

__all__ = [
    "GaussianVacuumState",
    "WavefunctionSample",
    "EnergyBalance",
    "squeeze_coefficients",
    "state_from_params",
    "state_from_temperature",
    "wavefunction_eval",
    "wavefunction_samples",
    "mean_system_energy",
    "mean_influence_energy",
    "energy_balance",
    "up_product",
    "holistic_influence",
    "schrodinger_residual",
]


def squeeze_coefficients(params):
    """Return ``(A, B, beta)`` for the given squeeze parameters.

    ``A = cosh 2tau - sinh 2tau cos 2phi`` is rewritten as
    ``cos^2(phi) e^{-2tau} + sin^2(phi) e^{2tau}`` (and ``B`` likewise), a sum of
    nonnegative terms, so strongly squeezed quadratures keep full relative
    precision.
    """
    s2, c2 = double_angle_trig(params.phi)
    cos_sq, sin_sq = 0.5 * (1.0 + c2), 0.5 * (1.0 - c2)
    grow, shrink = math.exp(2.0 * params.tau), math.exp(-2.0 * params.tau)
    a = cos_sq * shrink + sin_sq * grow
    b = cos_sq * grow + sin_sq * shrink
    beta = math.sinh(2.0 * params.tau) * s2
    return a, b, beta


@dataclass(frozen=True)
class GaussianVacuumState:
    params: SqueezeParams
    omega: float
    hbar: float
    var_q: float
    var_p: float
    beta: float
    cov: float

    @property
    def state_class(self):
        return classify(self.params)

    @property
    def kinetic_coeff(self):
        """Coefficient of the kinetic-energy operator in the system Hamiltonian."""
        return 2.0 * self.omega * self.var_q / self.hbar

    @property
    def potential_coeff(self):
        return 2.0 * self.var_p / (self.hbar * self.omega)


@dataclass(frozen=True)
class WavefunctionSample:
    q: float
    value: complex


@dataclass(frozen=True)
class EnergyBalance:
    mean_system: float
    mean_influence: float
    residual: float


def _check_units(omega, hbar):
    for name, v in (("omega", omega), ("hbar", hbar)):
        if not math.isfinite(v) or v <= 0:
            raise DomainError(f"{name} must be finite and > 0, got {v!r}")


def state_from_params(params, omega=1.0, hbar=1.0):
    """Closed-form second moments of the vacuum generated by ``params``."""
    omega, hbar = float(omega), float(hbar)
    _check_units(omega, hbar)
    a, b, beta = squeeze_coefficients(params)
    return GaussianVacuumState(
        params=params,
        omega=omega,
        hbar=hbar,
        var_q=0.5 * hbar / omega * a,
        var_p=0.5 * hbar * omega * b,
        beta=beta,
        cov=0.5 * hbar * beta,
    )


def state_from_temperature(ctx, state_class=StateClass.CCS):
    """Thermally parametrized state: ``phi = pi/4`` (CCS) or ``phi = 0`` (SCS).

    For the CCS the variances are ``coth x`` times their cold-vacuum values
    and the covariance is ``(hbar/2) csch x``.
    """
    if isinstance(state_class, str):
        state_class = StateClass[state_class.upper()]
    tau = tau_from_temperature(ctx)
    hbar, omega = ctx.hbar, ctx.omega
    if state_class is StateClass.SCS:
        return state_from_params(SqueezeParams(tau, 0.0), omega, hbar)
    if state_class is not StateClass.CCS:
        raise DomainError(f"thermal parametrization exists for SCS and CCS only, not {state_class}")
    coth, csch = stable_coth(ctx.x), stable_csch(ctx.x)
    return GaussianVacuumState(
        params=SqueezeParams(tau, 0.25 * math.pi),
        omega=omega,
        hbar=hbar,
        var_q=0.5 * hbar / omega * coth,
        var_p=0.5 * hbar * omega * coth,
        beta=csch,
        cov=0.5 * hbar * csch,
    )


def wavefunction_eval(s, q):
    """Complex amplitude of the state at position(s) ``q``."""
    q = np.asarray(q, dtype=float)
    norm = (2.0 * math.pi * s.var_q) ** -0.25
    out = norm * np.exp(-(q**2) / (4.0 * s.var_q) * (1.0 - 1j * s.beta))
    return complex(out) if out.ndim == 0 else out


def wavefunction_samples(s, qs):
    values = wavefunction_eval(s, np.asarray(qs, dtype=float))
    return [WavefunctionSample(float(q), complex(v)) for q, v in zip(qs, values)]


def mean_system_energy(s):
    """``<H_sys> = A <p^2>/2 + B w^2 <q^2>/2``, equal to ``(hbar w/2)(1 + beta^2)``."""
    a, b, _ = squeeze_coefficients(s.params)
    return a * 0.5 * s.var_p + b * 0.5 * s.omega**2 * s.var_q


def mean_influence_energy(s):
    """Quantum part ``w hbar/2`` plus the correlation part ``w beta cov``."""
    return s.omega * 0.5 * s.hbar + s.omega * s.beta * s.cov


def energy_balance(s):
    system, influence = mean_system_energy(s), mean_influence_energy(s)
    return EnergyBalance(system, influence, system - influence)


def up_product(s):
    """Uncertainty product ``sqrt(var_q var_p)``."""
    return math.sqrt(s.var_q * s.var_p)


def holistic_influence(s):
    """Modulus of ``<p q>``, i.e. ``sqrt(cov^2 + hbar^2/4)``."""
    return math.hypot(s.cov, 0.5 * s.hbar)


def schrodinger_residual(s):
    """``var_q var_p - cov^2 - hbar^2/4``; zero when the Schrodinger bound is saturated."""
    return s.var_q * s.var_p - s.cov**2 - 0.25 * s.hbar**2
