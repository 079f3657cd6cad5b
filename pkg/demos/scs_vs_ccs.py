"""Two ways to warm up a vacuum.

Both the squeezed coherent state (phase 0) and the correlated coherent state
(phase pi/4) can be parametrized by the same squeeze tau(T).  Only the CCS
carries a q-p covariance, and only its uncertainty product grows with T.
"""

import numpy as np

from thermal_vacuum import StateClass, ThermalContext, state_from_temperature, up_product


def main():
    print(f"{'T':>6} {'tau':>8} {'UP scs':>10} {'UP ccs':>10} {'cov ccs':>10}")
    for T in np.linspace(0.0, 5.0, 11):
        ctx = ThermalContext.from_temperature(T)
        scs = state_from_temperature(ctx, StateClass.SCS)
        ccs = state_from_temperature(ctx, StateClass.CCS)
        print(f"{T:6.2f} {scs.params.tau:8.4f} {up_product(scs):10.6f} {up_product(ccs):10.6f} {ccs.cov:10.6f}")
    print("\nThe SCS column never leaves hbar/2: squeezing alone does not heat a state.")


if __name__ == "__main__":
    main()
