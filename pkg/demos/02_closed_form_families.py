#!/usr/bin/env python3
"""Closed forms for the symmetric families, checked against the numerics.

Werner states (U (x) U invariant) and isotropic states (U (x) conj(U)
invariant) admit exact expressions for both the realignment trace norm tau
and the greatest cross norm gamma.  gamma = 1 characterizes separability
exactly; tau <= 1 is only a necessary condition, and the Werner family in
d >= 3 is precisely where the gap opens.
"""

import numpy as np

from ccnr import (
    ccnr_tau,
    gamma_isotropic_closed,
    gamma_werner_closed,
    isotropic_state,
    tau_isotropic_closed,
    tau_werner_closed,
    twirl_uu,
    random_density,
    werner_state,
)

print("Werner family, d = 3 (separable exactly for f >= 0)")
print(f"{'f':>6} {'tau num':>10} {'tau closed':>11} {'gamma':>7}  comment")
for f in np.linspace(-1, 1, 9):
    tau = ccnr_tau(werner_state(3, f))
    closed = tau_werner_closed(3, f)
    gamma = gamma_werner_closed(3, f).value
    if gamma > 1 and tau <= 1:
        comment = "entangled but invisible to tau"
    elif tau > 1:
        comment = "entangled, tau sees it"
    else:
        comment = "separable"
    print(f"{f:6.2f} {tau:10.6f} {closed:11.6f} {gamma:7.4f}  {comment}")

print()
print("isotropic family, d = 3 (separable exactly for F <= 1/d)")
print(f"{'F':>6} {'tau num':>10} {'tau closed':>11} {'gamma':>7}")
for F in np.linspace(0, 1, 9):
    tau = ccnr_tau(isotropic_state(3, F))
    print(
        f"{F:6.2f} {tau:10.6f} {tau_isotropic_closed(3, F):11.6f} "
        f"{gamma_isotropic_closed(3, F).value:7.4f}"
    )
print("for isotropic states tau and gamma cross 1 together: the criterion is exact")

# Twirling projects any state onto these families while preserving the
# relevant expectation value, which is how the closed forms get used on
# arbitrary inputs.
sigma = random_density(3, 3, seed=1)
projected = twirl_uu(sigma)
print("\ntwirling a random two-qutrit state onto the Werner family:")
print("  tau before twirl:", ccnr_tau(sigma))
print("  tau after twirl: ", ccnr_tau(projected), "(twirling never raises tau)")
