"""Check the closed-form moments against a brute-force wavefunction.

The Gaussian wavefunction is sampled on a uniform grid, and the moments are
computed with spectral derivatives.  Agreement is at the rounding level,
which is why the grid route serves as an oracle for the formulas.
"""

import math

from thermal_vacuum import SqueezeParams, state_from_params
from thermal_vacuum import fock_oracle as fo

for tau, phi in [(0.0, 0.0), (0.5, 0.0), (0.5, math.pi / 4), (1.0, 1.0)]:
    s = state_from_params(SqueezeParams(tau, phi))
    var_q, var_p, cov, norm = fo.grid_expectations(s)
    print(f"tau={tau:.2f} phi={phi:.3f}  "
          f"var_q {var_q:.10f}/{s.var_q:.10f}  var_p {var_p:.10f}/{s.var_p:.10f}  "
          f"cov {cov:+.10f}/{s.cov:+.10f}  kernel {fo.hamiltonian_kernel_residual(s):.1e}")
