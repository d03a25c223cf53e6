"""
Gaussian decay of the outer coherence
=====================================

Two qubits start in (|--> + |++>)/sqrt(2).  Only rho14 evolves, and for a
large bath with couplings scaled by 1/sqrt(N) its modulus follows a Gaussian
whose width is the decoherence time.
"""
import numpy as np

from spintrace import ModelParams, TwoQubitState, concurrence, decoherence_time, evolve, rho14_ratio
from spintrace.limits import gaussian_envelope

params = ModelParams(gamma=2.0, mu=4.0, h=1.0, beta=1.0, n_bath=100)
t = np.linspace(0, 1.5, 7)

###############################################################################
# Closed form against the Gaussian envelope
# -----------------------------------------

ratio = rho14_ratio(params, t)
env = gaussian_envelope(params, t)
for ti, r, e in zip(t, ratio, env):
    print(f"t={ti:4.2f}  Re ratio={r.real:+.4f}  |ratio|={abs(r):.4f}  envelope={e:.4f}")

###############################################################################
# Concurrence is twice |rho14|
# ----------------------------

states = evolve(params, TwoQubitState.bell_outer(), t)
print("C(t):", np.round([concurrence(s) for s in states], 4))
print("tau_D =", decoherence_time(params))

###############################################################################
# A colder bath decoheres more slowly
# -----------------------------------

for hb in (0.0, 2.0, 6.0):
    print(f"h beta = {hb}:  tau_D = {decoherence_time(params.with_(h=hb)):.3f}")
