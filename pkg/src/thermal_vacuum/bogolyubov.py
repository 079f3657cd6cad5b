"""Single-mode Bogolyubov (u, v) parameters and their temperature parametrization."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .oscillator_core import ThermalContext, stable_csch

__all__ = [
    "SqueezeParams",
    "UVPair",
    "StateClass",
    "uv_from_params",
    "tau_from_temperature",
    "classify",
    "double_angle_trig",
]

TWO_PI = 2.0 * math.pi
DEFAULT_CLASSIFY_TOL = 1e-9


@dataclass(frozen=True)
class SqueezeParams:
    """Squeeze magnitude ``tau >= 0`` and phase ``phi`` in ``[0, 2*pi)``.

    A negative ``tau`` is folded into the canonical domain by
    ``(tau, phi) -> (-tau, phi + pi/2)``, which leaves every second moment
    unchanged.
    """

    tau: float
    phi: float = 0.0

    def __post_init__(self):
        tau, phi = float(self.tau), float(self.phi)
        if not (math.isfinite(tau) and math.isfinite(phi)):
            raise DomainError(f"tau and phi must be finite, got ({tau!r}, {phi!r})")
        if tau < 0.0:
            tau, phi = -tau, phi + 0.5 * math.pi
        phi = phi % TWO_PI
        if phi >= TWO_PI:  # tiny negative inputs round up to 2*pi
            phi = 0.0
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "phi", phi)


@dataclass(frozen=True)
class UVPair:
    u: complex
    v: complex

    @property
    def canonicity_residual(self):
        """``|u|^2 - |v|^2 - 1``; zero for a canonical transformation."""
        return abs(self.u) ** 2 - abs(self.v) ** 2 - 1.0


class StateClass(enum.Enum):
    COLD_VACUUM = "ColdVacuum"
    SCS = "SCS"
    CCS = "CCS"
    GENERAL = "General"


def double_angle_trig(phi):
    """Return ``(sin 2phi, cos 2phi)``, exact at multiples of ``pi/4``.

    Floating-point ``pi`` makes ``sin(2*(pi/2))`` come out as ``1.2e-16``
    instead of 0; snapping keeps the squeezed states' covariance exactly zero.
    """
    t = 2.0 * phi
    quarter = t / (0.5 * math.pi)
    n = round(quarter)
    if abs(quarter - n) <= 8.0 * 2.0**-52 * max(1.0, abs(quarter)):
        return ((0.0, 1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0))[n % 4]
    return math.sin(t), math.cos(t)


def uv_from_params(p):
    """``u = cosh(tau) e^{i phi}``, ``v = sinh(tau) e^{-i phi}``."""
    phase = complex(math.cos(p.phi), math.sin(p.phi))
    return UVPair(u=math.cosh(p.tau) * phase, v=math.sinh(p.tau) * phase.conjugate())


def tau_from_temperature(ctx):
    """Squeeze magnitude with ``cosh 2tau = coth x`` and ``sinh 2tau = csch x``.

    Evaluated as ``asinh(csch x) / 2``.  The arccosh branch is the same
    function but loses half its digits once ``coth x`` approaches 1.
    """
    if not isinstance(ctx, ThermalContext):
        raise TypeError("expected a ThermalContext")
    if math.isinf(ctx.x):
        return 0.0
    return 0.5 * math.asinh(stable_csch(ctx.x))


def classify(p, tol=DEFAULT_CLASSIFY_TOL):
    """Place ``p`` in one of the four :class:`StateClass` families."""
    if tol < 0:
        raise DomainError("tol must be >= 0")
    if p.tau == 0.0:
        return StateClass.COLD_VACUUM
    s2, _ = double_angle_trig(p.phi)
    if abs(s2) <= tol:
        return StateClass.SCS
    if abs(abs(s2) - 1.0) <= tol:
        return StateClass.CCS
    return StateClass.GENERAL
