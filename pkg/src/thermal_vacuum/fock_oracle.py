"""Independent numerical oracles for the closed forms.

Two routes that never touch the analytic formulas of
:mod:`thermal_vacuum.vacuum_states`:

* truncated Fock-space matrices for the thermal density operator and the
  split-density traces ``tr[A rho^1/2 A rho^1/2]``;
* quadrature of the explicit wavefunction on a uniform position grid, with
  spectral (FFT) derivatives.

Exponent convention: the thermal state is ``rho ~ exp(-eps (N + 1/2))`` with
``eps = hbar w / k_B T = 2x``.  This is the Boltzmann weight that reproduces
``tr[p^2 rho] = (hbar w/2) coth x``; consequently
``rho^1/2 a = e^{x} a rho^1/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bogolyubov import double_angle_trig
from .errors import ConfigurationError, ConsistencyError, DomainError, PrecisionError, TruncationError
from .vacuum_states import squeeze_coefficients, wavefunction_eval

__all__ = [
    "DEFAULT_DIM",
    "TAIL_TOL",
    "FockWorkspace",
    "ThermalDensityMatrix",
    "PositionGrid",
    "build_workspace",
    "commutator_defect",
    "tail_mass",
    "minimum_dim",
    "thermal_density",
    "renormalized_ops",
    "park_renormalized_ops",
    "park_matrix",
    "park_determinant",
    "commutation_residual",
    "default_grid",
    "resolving_grid",
    "check_grid",
    "grid_expectations",
    "hamiltonian_kernel_residual",
]

DEFAULT_DIM = 200
MIN_DIM = 8
#: Largest allowed probability in the top 10% of the truncated basis.
TAIL_TOL = 1e-10
PINNING_TOL = 1e-8

DEFAULT_GRID_POINTS = 2048
DEFAULT_GRID_SIGMAS = 10.0
MIN_GRID_POINTS = 512
MIN_GRID_SIGMAS = 8.0
# Nyquist wavenumber must exceed this many momentum standard deviations.
MIN_NYQUIST_SIGMAS = 10.0


# -- Fock space ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FockWorkspace:
    dim: int
    omega: float
    hbar: float
    a: np.ndarray
    a_dag: np.ndarray
    n_op: np.ndarray
    q_op: np.ndarray
    p_op: np.ndarray
    identity: np.ndarray


def build_workspace(dim=DEFAULT_DIM, omega=1.0, hbar=1.0):
    """Ladder, number, position and momentum matrices on ``dim`` Fock states."""
    dim = int(dim)
    if dim < MIN_DIM:
        raise ConfigurationError(f"dim must be >= {MIN_DIM}, got {dim}")
    if not (omega > 0 and hbar > 0 and math.isfinite(omega) and math.isfinite(hbar)):
        raise ConfigurationError("omega and hbar must be finite and positive")
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)
    a_dag = a.conj().T
    q_op = math.sqrt(hbar / (2.0 * omega)) * (a + a_dag)
    p_op = 1j * math.sqrt(hbar * omega / 2.0) * (a_dag - a)
    for arr in (a, a_dag, q_op, p_op):
        arr.setflags(write=False)
    n_op = np.diag(np.arange(dim, dtype=float))
    identity = np.eye(dim)
    n_op.setflags(write=False)
    identity.setflags(write=False)
    return FockWorkspace(dim, float(omega), float(hbar), a, a_dag, n_op, q_op, p_op, identity)


def commutator_defect(ws):
    """Max-norm of ``[q, p] - i hbar`` on the first ``dim - 1`` basis states."""
    comm = ws.q_op @ ws.p_op - ws.p_op @ ws.q_op
    interior = slice(0, ws.dim - 1)
    target = 1j * ws.hbar * np.eye(ws.dim - 1)
    return float(np.max(np.abs(comm[interior, interior] - target)))


@dataclass(frozen=True, eq=False)
class ThermalDensityMatrix:
    x: float
    epsilon: float
    matrix: np.ndarray
    partition: float
    sqrt_matrix: np.ndarray
    populations: np.ndarray

    @property
    def mean_occupation(self):
        return float(np.dot(np.arange(self.populations.size), self.populations))


def tail_mass(dim, x):
    """Thermal probability carried by levels ``n >= dim - ceil(dim/10)``."""
    if math.isinf(x):
        return 0.0
    n0 = dim - math.ceil(dim / 10)
    return math.exp(-2.0 * x * n0)


def minimum_dim(x, tail_tol=TAIL_TOL):
    """Smallest truncation whose tail mass at ``x`` is below ``tail_tol``."""
    if math.isinf(x):
        return MIN_DIM
    n0 = math.log(1.0 / tail_tol) / (2.0 * x)
    dim = max(MIN_DIM, math.ceil(n0 / 0.9) + 1)
    while tail_mass(dim, x) >= tail_tol:
        dim += 1
    return dim


def _check_match(ws, ctx):
    if not (math.isclose(ws.omega, ctx.omega) and math.isclose(ws.hbar, ctx.hbar)):
        raise ConfigurationError(
            f"workspace (omega={ws.omega}, hbar={ws.hbar}) does not match "
            f"context (omega={ctx.omega}, hbar={ctx.hbar})"
        )


def thermal_density(ws, ctx, tail_tol=TAIL_TOL):
    """Diagonal Gibbs state ``Z^-1 exp(-2x (N + 1/2))`` truncated to ``ws.dim``.

    Raises :class:`TruncationError` when more than ``tail_tol`` of the
    probability would sit in the top tenth of the basis; ``x = inf`` gives
    the ground-state projector.
    """
    _check_match(ws, ctx)
    x = ctx.x
    eps = 2.0 * x
    if math.isinf(x):
        pops = np.zeros(ws.dim)
        pops[0] = 1.0
        partition = 0.0
    else:
        tail = tail_mass(ws.dim, x)
        if tail >= tail_tol:
            need = minimum_dim(x, tail_tol)
            raise TruncationError(
                f"dim={ws.dim} leaves tail mass {tail:.3e} >= {tail_tol:.1e} at x={x}; "
                f"use dim >= {need}",
                suggested_dim=need,
            )
        shifted = np.exp(-eps * np.arange(ws.dim))
        total = shifted.sum()
        pops = shifted / total
        partition = math.exp(-0.5 * eps) * total
    matrix = np.diag(pops)
    sqrt_matrix = np.diag(np.sqrt(pops))
    matrix.setflags(write=False)
    sqrt_matrix.setflags(write=False)
    pops.setflags(write=False)
    return ThermalDensityMatrix(x, eps, matrix, partition, sqrt_matrix, pops)


def _trace_real(m):
    return float(np.trace(m).real)


def renormalized_ops(ws, kappa):
    """``(p_T, q_T)`` for an explicit exponent ``kappa``, without any check."""
    up, down = math.exp(kappa), math.exp(-kappa)
    q_t = math.sqrt(ws.hbar / (2.0 * ws.omega)) * (up * ws.a + down * ws.a_dag)
    p_t = 1j * math.sqrt(ws.hbar * ws.omega / 2.0) * (down * ws.a_dag - up * ws.a)
    return p_t, q_t


def park_renormalized_ops(ws, ctx):
    """Renormalized momentum and coordinate ``(p_T, q_T)``.

    Defined by ``rho^1/2 A rho^1/2 = A_T rho``, so that
    ``tr[A rho^1/2 A rho^1/2] = tr[A A_T rho]``; with ``kappa = eps/2``::

        q_T = sqrt(hbar/2w) (e^{kappa} a + e^{-kappa} a+)
        p_T = i sqrt(hbar w/2) (e^{-kappa} a+ - e^{kappa} a)

    Both reduce to ``q`` and ``p`` at ``kappa = 0``.  The identities are
    checked numerically against the split traces before returning.
    """
    _check_match(ws, ctx)
    x = ctx.x
    if math.isinf(x) or x > 700.0:
        raise DomainError(f"renormalized operators need a finite x <= 700, got {x}")
    rho = thermal_density(ws, ctx)
    p_t, q_t = renormalized_ops(ws, rho.epsilon / 2.0)

    for name, op, op_t in (("q", ws.q_op, q_t), ("p", ws.p_op, p_t)):
        split = _trace_real(op @ rho.sqrt_matrix @ op @ rho.sqrt_matrix)
        renorm = _trace_real(op @ op_t @ rho.matrix)
        if abs(split - renorm) > PINNING_TOL * max(1.0, abs(split)):
            raise ConsistencyError(
                f"tr[{name} rho^1/2 {name} rho^1/2] = {split!r} but "
                f"tr[{name} {name}_T rho] = {renorm!r}"
            )
    return p_t, q_t


def park_matrix(ws, ctx):
    """``[[tr p^2 rho, tr p rho^1/2 p rho^1/2], [tr q rho^1/2 q rho^1/2, tr q^2 rho]]``."""
    rho = thermal_density(ws, ctx)
    half = rho.sqrt_matrix
    p, q = ws.p_op, ws.q_op
    return np.array(
        [
            [_trace_real(p @ p @ rho.matrix), _trace_real(p @ half @ p @ half)],
            [_trace_real(q @ half @ q @ half), _trace_real(q @ q @ rho.matrix)],
        ]
    )


def park_determinant(ws, ctx):
    """Determinant of :func:`park_matrix`; ``(hbar/2)^2`` up to truncation."""
    m = park_matrix(ws, ctx)
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def commutation_residual(ws, ctx, kappa=None):
    """Relative defect of ``rho^1/2 a = e^{kappa} a rho^1/2`` on the interior subspace.

    ``kappa`` defaults to the pinned value ``x``.  Returns ``None`` at
    ``x = inf``, where ``a rho^1/2`` vanishes and the ratio is undefined.
    """
    rho = thermal_density(ws, ctx)
    if math.isinf(rho.x):
        return None
    if kappa is None:
        kappa = rho.epsilon / 2.0
    lhs = rho.sqrt_matrix @ ws.a
    a_half = ws.a @ rho.sqrt_matrix
    interior = slice(0, ws.dim - 1)
    diff = (lhs - math.exp(kappa) * a_half)[interior, interior]
    return float(np.linalg.norm(diff) / np.linalg.norm(a_half[interior, interior]))


# -- position grid ------------------------------------------------------------


@dataclass(frozen=True)
class PositionGrid:
    q_min: float
    q_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < MIN_GRID_POINTS:
            raise ConfigurationError(f"n_points must be >= {MIN_GRID_POINTS}")
        if not self.q_min < 0 < self.q_max or not math.isclose(-self.q_min, self.q_max):
            raise ConfigurationError("grid must be symmetric about 0")

    @property
    def spacing(self):
        return (self.q_max - self.q_min) / (self.n_points - 1)

    @property
    def points(self):
        return np.linspace(self.q_min, self.q_max, self.n_points)


def default_grid(state, n_points=DEFAULT_GRID_POINTS, n_sigma=DEFAULT_GRID_SIGMAS):
    """``n_points`` samples over ``+/- n_sigma`` position standard deviations."""
    half = n_sigma * math.sqrt(state.var_q)
    return PositionGrid(-half, half, int(n_points))


def resolving_grid(state, n_sigma=DEFAULT_GRID_SIGMAS):
    """Power-of-two grid, at least the default size, that passes :func:`check_grid`."""
    n = DEFAULT_GRID_POINTS
    while True:
        grid = default_grid(state, n, n_sigma)
        try:
            check_grid(state, grid)
        except PrecisionError:
            n *= 2
            continue
        return grid


def check_grid(state, grid):
    """Raise :class:`PrecisionError` unless ``grid`` covers and resolves ``state``."""
    sigma_q = math.sqrt(state.var_q)
    coverage = min(-grid.q_min, grid.q_max) / sigma_q
    sigma_k = math.sqrt(state.var_p) / state.hbar
    nyquist = math.pi / grid.spacing / sigma_k
    if coverage < MIN_GRID_SIGMAS:
        raise PrecisionError(
            f"grid covers {coverage:.2f} sigma_q, needs >= {MIN_GRID_SIGMAS}"
        )
    if nyquist < MIN_NYQUIST_SIGMAS:
        raise PrecisionError(
            f"Nyquist wavenumber is {nyquist:.2f} sigma_k (beta={state.beta:.3g}), "
            f"needs >= {MIN_NYQUIST_SIGMAS}; increase n_points"
        )


def _spectral_derivatives(psi, h):
    k = 2.0 * np.pi * np.fft.fftfreq(psi.size, d=h)
    coeffs = np.fft.fft(psi)
    return np.fft.ifft(1j * k * coeffs), np.fft.ifft(-(k**2) * coeffs)


def grid_expectations(state, grid=None):
    """Quadrature estimates ``(var_q, var_p, cov, norm)`` from the wavefunction.

    ``cov`` is the symmetrized ``<(pq + qp)/2>``, obtained as
    ``hbar Im int psi* q psi'``.
    """
    grid = grid or default_grid(state)
    check_grid(state, grid)
    q, h = grid.points, grid.spacing
    psi = wavefunction_eval(state, q)
    d1, d2 = _spectral_derivatives(psi, h)
    hbar = state.hbar
    dens = np.abs(psi) ** 2
    norm = float(np.sum(dens) * h)
    mean_q = float(np.sum(q * dens) * h) / norm
    # <p> = -i hbar int psi* psi'
    mean_p = float((-1j * hbar * np.sum(psi.conj() * d1) * h).real) / norm
    second_q = float(np.sum(q**2 * dens) * h) / norm
    second_p = float((-(hbar**2) * np.sum(psi.conj() * d2) * h).real) / norm
    sym_qp = float(hbar * np.sum(psi.conj() * q * d1).imag * h) / norm
    return (
        second_q - mean_q**2,
        second_p - mean_p**2,
        sym_qp - mean_q * mean_p,
        norm,
    )


def hamiltonian_kernel_residual(state, grid=None):
    """``||(H_sys - H_inf) psi|| / ||H_sys psi||`` on the grid.

    The system part uses the ``(tau, phi)``-dependent kinetic and potential
    coefficients; the influence part is ``w hbar/2`` plus
    ``w beta (-i hbar)(q d/dq + 1/2)``.  Zero when the wavefunction is an
    exact zero-eigenvalue state of their difference.
    """
    grid = grid or default_grid(state)
    check_grid(state, grid)
    q, h = grid.points, grid.spacing
    psi = wavefunction_eval(state, q)
    d1, d2 = _spectral_derivatives(psi, h)
    kin, pot, _ = squeeze_coefficients(state.params)
    s2, _ = double_angle_trig(state.params.phi)
    beta = math.sinh(2.0 * state.params.tau) * s2
    hbar, omega = state.hbar, state.omega
    h_sys = kin * (-0.5 * hbar**2) * d2 + pot * 0.5 * omega**2 * q**2 * psi
    sigma_psi = -1j * hbar * (q * d1 + 0.5 * psi)
    h_inf = omega * 0.5 * hbar * psi + omega * beta * sigma_psi
    return float(np.linalg.norm(h_sys - h_inf) / np.linalg.norm(h_sys))
