"""Batch checks of every identity against its tolerance.

Used by ``thermal-vacuum verify``; each suite returns a :class:`VerifyReport`.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import fock_oracle as fo
from . import stochastic_thermo as st
from .bogolyubov import SqueezeParams, StateClass, tau_from_temperature, uv_from_params
from .oscillator_core import ThermalContext, stable_coth, stable_csch
from .vacuum_states import (
    energy_balance,
    state_from_params,
    state_from_temperature,
    up_product,
)

SUITES = ("analytic", "fock", "quadrature")


@dataclass
class Check:
    name: str
    value: float
    tolerance: float
    # "max": value must not exceed tolerance; "min": value must exceed it.
    bound: str = "max"

    @property
    def passed(self):
        if math.isnan(self.value):
            return False
        if self.bound == "max":
            return self.value <= self.tolerance
        return self.value > self.tolerance


@dataclass
class VerifyReport:
    suite: str
    checks: list = field(default_factory=list)
    cases_run: int = 0
    dim: int = fo.DEFAULT_DIM
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def format(self):
        lines = [f"suite: {self.suite}  cases: {self.cases_run}  dim: {self.dim}  time: {self.seconds:.2f}s"]
        for c in self.checks:
            op = "<=" if c.bound == "max" else ">"
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{status}] {c.name}: {c.value:.3e} {op} {c.tolerance:.1e}")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _tau_phi_grid(n_tau=50, n_phi=50, tau_max=3.0):
    taus = np.linspace(0.0, tau_max, n_tau)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
    return [SqueezeParams(t, p) for t in taus for p in phis]


def _analytic(report):
    checks = report.checks
    xs = np.logspace(-8, math.log10(699.0), 400)
    coth, csch = stable_coth(xs), stable_csch(xs)
    checks.append(Check(
        "coth^2 - csch^2 = 1 (relative to coth^2)",
        float(np.max(np.abs(coth**2 - csch**2 - 1.0) / coth**2)), 1e-12))

    grid = _tau_phi_grid()
    states = [state_from_params(p) for p in grid]
    report.cases_run += len(grid)
    checks.append(Check(
        "canonicity |u|^2 - |v|^2 = 1",
        max(abs(uv_from_params(p).canonicity_residual) for p in grid), 1e-12))
    checks.append(Check(
        "saturated Schrodinger UR (relative to var_q var_p)",
        max(abs(s.var_q * s.var_p - s.cov**2 - 0.25 * s.hbar**2) / (s.var_q * s.var_p)
            for s in states), 1e-12))
    checks.append(Check(
        "energy balance residual (relative)",
        max(abs(b.residual) / max(abs(b.mean_system), 0.5) for b in map(energy_balance, states)),
        1e-12))

    scs = [state_from_params(SqueezeParams(t, p))
           for t in np.linspace(0.0, 5.0, 51)
           for p in (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)]
    report.cases_run += len(scs)
    checks.append(Check("SCS up_product = hbar/2",
                        max(abs(up_product(s) - 0.5) for s in scs), 1e-12))
    checks.append(Check("SCS covariance exactly 0", max(abs(s.cov) for s in scs), 0.0))

    round_trip = 0.0
    for x in np.linspace(0.05, 20.0, 200):
        ctx = ThermalContext.from_x(x)
        tau = tau_from_temperature(ctx)
        round_trip = max(round_trip, abs(math.cosh(2 * tau) / stable_coth(x) - 1.0),
                         abs(math.sinh(2 * tau) / stable_csch(x) - 1.0))
    checks.append(Check("tau(T) round trip (relative)", round_trip, 1e-10))

    temps = np.linspace(50.0 / 40, 50.0, 40)
    template = ThermalContext.from_temperature(0.0)
    diag, off = 0.0, math.inf
    for i, t in enumerate(temps):
        for j, t0 in enumerate(temps):
            r = abs(st.zeroth_law_report(t, t0, template).residual)
            if i == j:
                diag = max(diag, r)
            else:
                off = min(off, r)
    report.cases_run += temps.size**2
    checks.append(Check("zeroth law residual at T = T0", diag, 1e-12))
    checks.append(Check("zeroth law residual at T != T0", off, 1e-6, bound="min"))

    triangle = 0.0
    for t in temps:
        ctx = template.with_temperature(t)
        u = st.planck_energy(ctx)
        kt = ctx.k_boltzmann * st.effective_temperature(ctx).value
        wj = ctx.omega * up_product(state_from_temperature(ctx))
        triangle = max(triangle, abs(kt / u - 1.0), abs(wj / u - 1.0))
    checks.append(Check("Planck energy = k_B T_eff = w UP_T (relative)", triangle, 1e-12))

    lorentz = max(abs(st.lorentz_invariant(ThermalContext.from_x(x)) / 0.25 - 1.0)
                  for x in np.logspace(-2, math.log10(350.0), 300))
    checks.append(Check("J^2 - sigma^2 = (hbar/2)^2 (relative)", lorentz, 1e-9))
    checks.append(Check(
        "SCS determinant = (hbar/2)^2",
        max(abs(st.scs_invariant_det(ThermalContext.from_x(x)) - 0.25)
            for x in np.logspace(-2, math.log10(350.0), 300)), 1e-12))
    ctx = ThermalContext.from_temperature(100.0)
    checks.append(Check("high-T estimate at T=100 (relative)",
                        abs(st.high_t_temperature_estimate(ctx) / 100.0 - 1.0), 1e-5))


def _fock(report, dim):
    checks = report.checks
    ws = fo.build_workspace(dim)
    checks.append(Check("[q, p] = i hbar on interior", fo.commutator_defect(ws), 1e-12))
    det_err = cross_err = var_err = 0.0
    for x in (0.3, 0.5, 1.0, 2.0, 5.0):
        ctx = ThermalContext.from_x(x)
        m = fo.park_matrix(ws, ctx)
        det_err = max(det_err, abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] - 0.25))
        cross = 0.5 * stable_csch(x)
        cross_err = max(cross_err, abs(m[0, 1] - cross), abs(m[1, 0] - cross))
        var_err = max(var_err, abs(m[0, 0] - 0.5 * stable_coth(x)), abs(m[1, 1] - 0.5 * stable_coth(x)))
        fo.park_renormalized_ops(ws, ctx)
        report.cases_run += 1
    checks.append(Check("Park determinant = (hbar/2)^2", det_err, 1e-8))
    checks.append(Check("split traces = (hbar/2) csch x", cross_err, 1e-8))
    checks.append(Check("thermal variances = (hbar/2) coth x", var_err, 1e-8))
    ctx = ThermalContext.from_x(0.5)
    checks.append(Check("rho^1/2 a = e^x a rho^1/2", fo.commutation_residual(ws, ctx), 1e-10))
    checks.append(Check("negative control, kappa = 0",
                        fo.commutation_residual(ws, ctx, kappa=0.0), 0.1, bound="min"))


def quadrature_states():
    """Twenty states spanning thermal CCS, SCS and general squeezing phases."""
    states = [state_from_temperature(ThermalContext.from_x(x), StateClass.CCS)
              for x in (0.3, 0.5, 1.0, 3.0)]
    states += [state_from_params(SqueezeParams(t, 0.0)) for t in (0.25, 0.5, 1.0)]
    states.append(state_from_params(SqueezeParams(0.0, 0.0)))
    rng = np.random.default_rng(20130117)
    for t, p in zip(rng.uniform(0.05, 1.2, 12), rng.uniform(0.0, 2.0 * math.pi, 12)):
        states.append(state_from_params(SqueezeParams(t, p)))
    return states


def _rel(a, b, scale):
    return abs(a - b) / max(abs(b), scale)


def _quadrature(report):
    checks = report.checks
    moment_err = norm_err = kernel = 0.0
    for s in quadrature_states():
        var_q, var_p, cov, norm = fo.grid_expectations(s)
        moment_err = max(moment_err, _rel(var_q, s.var_q, 0.0), _rel(var_p, s.var_p, 0.0),
                         _rel(cov, s.cov, 0.5 * s.hbar))
        norm_err = max(norm_err, abs(norm - 1.0))
        kernel = max(kernel, fo.hamiltonian_kernel_residual(s))
        report.cases_run += 1
    checks.append(Check("quadrature vs closed-form moments (relative)", moment_err, 1e-8))
    checks.append(Check("wavefunction normalization", norm_err, 1e-10))
    checks.append(Check("zero-eigenvalue residual of the vacuum Hamiltonian", kernel, 1e-5))


def run_suite(suite="all", dim=fo.DEFAULT_DIM, tol=None):
    """Run one suite (or ``"all"``).

    ``tol`` replaces every upper-bound tolerance; lower bounds of negative
    controls keep their own values.
    """
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    report = VerifyReport(suite=suite, dim=int(dim))
    start = time.perf_counter()
    if suite in ("all", "analytic"):
        _analytic(report)
    if suite in ("all", "fock"):
        _fock(report, int(dim))
    if suite in ("all", "quadrature"):
        _quadrature(report)
    if tol is not None:
        for c in report.checks:
            if c.bound == "max":
                c.tolerance = float(tol)
    report.seconds = time.perf_counter() - start
    return report
