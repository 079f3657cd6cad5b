"""Equilibrium as equal uncertainty.

A CCS prepared at T and a thermostat at T0 agree on their effective
temperatures exactly when T == T0.  We scan a small grid and print the
residual matrix; the diagonal is zero to the last bit.
"""

import numpy as np

from thermal_vacuum.stochastic_thermo import zeroth_law_report

temps = np.array([0.5, 1.0, 2.0, 4.0])

print("rows: system T, columns: environment T0")
print("       " + "".join(f"{t:>10.2f}" for t in temps))
for t in temps:
    cells = [zeroth_law_report(t, t0).residual for t0 in temps]
    print(f"{t:>7.2f}" + "".join(f"{c:>10.4f}" for c in cells))

r = zeroth_law_report(3.0, 3.0)
print(f"\nT = T0 = 3: T_eff(system) = {r.t_eff_system:.6f}, T_eff(env) = {r.t_eff_environment:.6f}")
