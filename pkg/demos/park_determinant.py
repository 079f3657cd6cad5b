"""Split traces in a truncated Fock space.

The ordinary thermal variances give a determinant that grows with T.
Evaluating the off-diagonal entries as split traces restores
the cold-vacuum value (hbar/2)^2 at every temperature.
"""

from thermal_vacuum import ThermalContext
from thermal_vacuum import fock_oracle as fo

ws = fo.build_workspace(200)
for x in (0.3, 0.5, 1.0, 2.0, 5.0):
    ctx = ThermalContext.from_x(x)
    m = fo.park_matrix(ws, ctx)
    naive = m[0, 0] * m[1, 1]
    print(f"x = {x:4.1f}  var_q var_p = {naive:9.5f}  with split traces: {fo.park_determinant(ws, ctx):.12f}")

# Convergence in the truncation.
ctx = ThermalContext.from_x(0.5)
for dim in (16, 32, 64, 128):
    try:
        err = abs(fo.park_determinant(fo.build_workspace(dim), ctx) - 0.25)
        print(f"dim {dim:4d}: |det - 1/4| = {err:.2e}")
    except fo.TruncationError as exc:
        print(f"dim {dim:4d}: refused ({exc})")
