"""
Entanglement in the flip-flop block
===================================

Starting from (|-+> + |+->)/sqrt(2) the XY coupling and the bath compete.
The thermal traces f and g give the populations and the coherence directly.
"""
import numpy as np

from spintrace import ModelParams, TwoQubitState, concurrence, evolve, f_and_g

params = ModelParams(lam=2.0, gamma=1.0, h=1.0, beta=1.0, n_bath=100)
times = np.linspace(0, 20, 9)

###############################################################################
# f, g and the concurrence
# ------------------------

states = evolve(params, TwoQubitState.bell_inner(), times)
for t, s in zip(times, states):
    f, g = f_and_g(params, t)
    print(f"t={t:5.1f}  f={f.real:+.4f}{f.imag:+.4f}i  g={g:+.4f}  C={concurrence(s):.4f}")

###############################################################################
# Infinite temperature
# --------------------
# With h beta = 0, f is real, g vanishes and C = max(0, 1 - f).

hot = params.with_(h=0.0)
for t in (1.0, 5.0, 10.0):
    f, g = f_and_g(hot, t)
    c = concurrence(evolve(hot, TwoQubitState.bell_inner(), [t])[0])
    print(f"t={t:4.1f}  1-f={1 - f.real:.6f}  C={c:.6f}  g={g:.1e}")
