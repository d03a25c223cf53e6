"""
Long-time entanglement of an infinite bath
==========================================

For N -> infinity at infinite temperature, f(t) becomes a Gaussian-weighted
integral.  Its time average has a closed form in terms of erfcx.
"""
import numpy as np

from spintrace import ModelParams, f_and_g
from spintrace.limits import c_infinity, f_asymptote, f_infinite_n

###############################################################################
# Finite bath against the limit
# -----------------------------

p = ModelParams(lam=2.0, gamma=1.0, n_bath=100)
for t in (0.5, 1.0, 2.5, 5.0):
    print(f"t={t:3.1f}  N=100: {f_and_g(p, t)[0].real:.5f}   N=inf: {f_infinite_n(2, 1, t):.5f}")

###############################################################################
# Time average against the closed form
# ------------------------------------

mean = np.mean([f_infinite_n(2, 1, t) for t in np.linspace(50, 60, 500)])
print(f"mean f on [50, 60] = {mean:.5f},  closed form = {f_asymptote(2, 1):.5f}")

###############################################################################
# Sweeps
# ------
# Stronger flip-flop coupling protects entanglement; stronger bath coupling
# destroys it.

for lam in (0.0, 0.5, 1.0, 2.0, 5.0):
    print(f"gamma=2  lambda={lam:3.1f}  C_inf={c_infinity(lam, 2):.4f}")
for gamma in (0.1, 1.0, 4.0, 20.0):
    print(f"lambda=2  gamma={gamma:4.1f}  C_inf={c_infinity(2, gamma):.4f}")
