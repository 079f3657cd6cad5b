"""Gaussian vacuum states of a quantum oscillator and their stochastic thermodynamics."""

from .bogolyubov import SqueezeParams, StateClass, UVPair, classify, tau_from_temperature, uv_from_params
from .errors import ConfigurationError, ConsistencyError, DomainError, PrecisionError, TruncationError
from .oscillator_core import (
    OscillatorConfig,
    PhysicalConstants,
    ThermalContext,
    stable_coth,
    stable_csch,
    thermal_argument,
)
from .vacuum_states import (
    GaussianVacuumState,
    energy_balance,
    holistic_influence,
    mean_influence_energy,
    mean_system_energy,
    schrodinger_residual,
    state_from_params,
    state_from_temperature,
    up_product,
    wavefunction_eval,
)

__version__ = "0.1.0"
