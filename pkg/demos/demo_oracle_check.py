"""
Checking closed forms against brute force
=========================================

For a few bath spins the full Hamiltonian fits in memory.  Exact evolution
followed by a partial trace over both baths must reproduce the closed forms,
including the Ising and bath-field terms they leave out.
"""
import numpy as np

from spintrace import ModelParams, TwoQubitState, evolve
from spintrace.oracle import build_full, compare_report, exact_evolve

params = ModelParams(lam=1.3, delta=0.7, gamma=-2.1, mu=0.4, h=0.9, beta=1.2, n_bath=3)
system = build_full(params)
print("full dimension:", system.dimension)

###############################################################################
# Compare along a time grid
# -------------------------

times = [0.3, 1.1, 2.7, 6.0]
for rho0 in (TwoQubitState.bell_inner(), TwoQubitState.bell_outer()):
    rep = compare_report(evolve(params, rho0, times), [exact_evolve(system, rho0, t) for t in times], 1e-10)
    print(f"passed={rep.passed}  worst elementwise gap={rep.worst.max_dev:.1e}")

###############################################################################
# States that mix the two blocks are outside the closed forms

mixed = TwoQubitState.from_ket(np.array([1, 1, 0, 0]) / np.sqrt(2))
try:
    evolve(params, mixed, [1.0])
except ValueError as err:
    print("refused:", err)
