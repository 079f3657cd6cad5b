"""Constants, oscillator configuration and overflow-safe hyperbolic kernels.

Every temperature-dependent quantity in the package is a function of the
dimensionless argument ``x = hbar * omega / (2 * k_B * T)``.  Zero Kelvin
temperature is represented by ``x = inf`` rather than rejected, so the cold
vacuum is an ordinary input everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "OVERFLOW_THRESHOLD",
    "SERIES_THRESHOLD",
    "PhysicalConstants",
    "OscillatorConfig",
    "ThermalContext",
    "thermal_argument",
    "stable_coth",
    "stable_csch",
]

#: Above this argument coth is returned as exactly 1 and csch as exactly 0.
OVERFLOW_THRESHOLD = 350.0
#: Below this argument both kernels switch to their Laurent series.
SERIES_THRESHOLD = 1e-4


def _finite_positive(name, value):
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant and Boltzmann constant (natural units by default)."""

    hbar: float = 1.0
    k_boltzmann: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "hbar", _finite_positive("hbar", self.hbar))
        object.__setattr__(
            self, "k_boltzmann", _finite_positive("k_boltzmann", self.k_boltzmann)
        )


@dataclass(frozen=True)
class OscillatorConfig:
    """Single harmonic mode. The mass is fixed to 1."""

    omega: float = 1.0
    mass: float = field(default=1.0, init=False)

    def __post_init__(self):
        object.__setattr__(self, "omega", _finite_positive("omega", self.omega))


def thermal_argument(T, constants=None, oscillator=None):
    """Return ``x = hbar*omega / (2*k_B*T)``; ``T = 0`` maps to ``inf``."""
    constants = constants or PhysicalConstants()
    oscillator = oscillator or OscillatorConfig()
    T = float(T)
    if math.isnan(T) or math.isinf(T):
        raise DomainError(f"temperature must be finite, got {T!r}")
    if T < 0.0:
        raise DomainError(f"temperature must be >= 0, got {T!r}")
    if T == 0.0:
        return math.inf
    return constants.hbar * oscillator.omega / (2.0 * constants.k_boltzmann * T)


@dataclass(frozen=True)
class ThermalContext:
    """Oscillator plus environment temperature.

    Build one with :meth:`from_temperature` or, when the dimensionless
    argument itself is the natural input, :meth:`from_x`.
    """

    constants: PhysicalConstants
    oscillator: OscillatorConfig
    temperature: float
    x: float

    def __post_init__(self):
        T, x = float(self.temperature), float(self.x)
        if not math.isfinite(T) or T < 0.0:
            raise DomainError(f"temperature must be finite and >= 0, got {T!r}")
        if math.isnan(x) or x <= 0.0:
            raise DomainError(f"x must be > 0 or inf, got {x!r}")
        scale = self.hbar * self.omega / (2.0 * self.k_boltzmann)
        if math.isinf(x) and T > 0.0 and math.isfinite(scale / T):
            raise DomainError(f"x = inf needs T = 0, got T = {T!r}")
        if T == 0.0 and not math.isinf(x):
            raise DomainError("T = 0 needs x = inf")
        if T > 0.0 and math.isfinite(x):
            if abs(x * T - scale) > 1e-14 * scale:
                raise DomainError(f"x*T = {x * T!r} does not match hbar*omega/(2 k_B)")
        object.__setattr__(self, "temperature", T)
        object.__setattr__(self, "x", x)

    @classmethod
    def from_temperature(cls, T, constants=None, oscillator=None):
        constants = constants or PhysicalConstants()
        oscillator = oscillator or OscillatorConfig()
        return cls(constants, oscillator, float(T), thermal_argument(T, constants, oscillator))

    @classmethod
    def from_x(cls, x, constants=None, oscillator=None):
        constants = constants or PhysicalConstants()
        oscillator = oscillator or OscillatorConfig()
        x = float(x)
        if math.isnan(x) or x <= 0.0:
            raise DomainError(f"x must be > 0 or inf, got {x!r}")
        if math.isinf(x):
            T = 0.0
        else:
            T = constants.hbar * oscillator.omega / (2.0 * constants.k_boltzmann * x)
        return cls(constants, oscillator, T, x)

    def with_temperature(self, T):
        """Same constants and oscillator at another temperature."""
        return ThermalContext.from_temperature(T, self.constants, self.oscillator)

    @property
    def hbar(self):
        return self.constants.hbar

    @property
    def k_boltzmann(self):
        return self.constants.k_boltzmann

    @property
    def omega(self):
        return self.oscillator.omega


def _as_positive_array(x):
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr <= 0.0):
        raise DomainError("hyperbolic kernels need x > 0 (or inf)")
    return arr


def _return(arr, like):
    return float(arr) if np.ndim(like) == 0 else arr


def stable_coth(x):
    """Hyperbolic cotangent for ``x > 0``, finite for every input including ``inf``.

    Uses ``1/x + x/3 - x**3/45`` below :data:`SERIES_THRESHOLD` and returns
    exactly 1 at or above :data:`OVERFLOW_THRESHOLD`.
    """
    arr = _as_positive_array(x)
    out = np.ones_like(arr)
    small = arr < SERIES_THRESHOLD
    mid = ~small & (arr < OVERFLOW_THRESHOLD)
    xs = arr[small]
    out[small] = 1.0 / xs + xs / 3.0 - xs**3 / 45.0
    out[mid] = 1.0 / np.tanh(arr[mid])
    return _return(out, x)


def stable_csch(x):
    """``1/sinh(x)`` for ``x > 0``; exactly 0 at or above :data:`OVERFLOW_THRESHOLD`."""
    arr = _as_positive_array(x)
    out = np.zeros_like(arr)
    small = arr < SERIES_THRESHOLD
    mid = ~small & (arr < OVERFLOW_THRESHOLD)
    xs = arr[small]
    out[small] = 1.0 / xs - xs / 6.0 + 7.0 * xs**3 / 360.0
    out[mid] = 1.0 / np.sinh(arr[mid])
    return _return(out, x)
