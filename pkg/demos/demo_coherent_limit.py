"""
Coherence preserved by 1/N coupling
===================================

If the bath Hamiltonian is the sum of both baths' J_z and the coupling
scales as 1/N, rho14 keeps unit modulus as N grows and only picks up a phase.
"""
import numpy as np

from spintrace import ModelParams, rho14_sigma_bath
from spintrace.limits import coherent_phase

t = np.linspace(0, 5, 6)
base = ModelParams(mu=1.0, gamma=2.0, h=2.0, beta=1.0, bath_type="sigmaz", scaling="linearn")

###############################################################################
# Approach to the pure phase
# --------------------------

for n in (10, 1000, 100000):
    r = rho14_sigma_bath(base.with_(n_bath=n), t)
    gap = np.abs(r - coherent_phase(base, t)).max()
    print(f"N={n:>6}  min |ratio|={np.abs(r).min():.6f}  max gap to phase law={gap:.1e}")

###############################################################################
# With 1/sqrt(N) scaling the same bath decoheres instead

r = rho14_sigma_bath(base.with_(n_bath=100000, scaling="sqrtn"), t)
print("1/sqrt(N) scaling |ratio|:", np.round(np.abs(r), 4))
