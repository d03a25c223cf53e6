"""
Counting spin multiplets
========================

A bath of N spin-1/2 particles splits into total-spin multiplets j, each
appearing nu(N, j) times.  Everything here is exact integer arithmetic.
"""
from spintrace import allowed_j, collective_trace, computational_trace, identity_report, multiplicity

###############################################################################
# Multiplicities for a small bath
# -------------------------------
# For N = 4 the 16 product states regroup into one quintet, three triplets
# and two singlets.

for j in allowed_j(4):
    print(f"N=4  j={j!s:>3}  nu={multiplicity(4, j)}")

###############################################################################
# Traces in two bases
# -------------------
# A function of J_z can be traced over multiplets (weighting by nu) or over
# the 2^N product states.  Both give the same number.

g = lambda m: float(m) ** 2  # noqa: E731
print("collective    tr(Jz^2) =", collective_trace(4, lambda j, m: g(m)))
print("computational tr(Jz^2) =", computational_trace(4, g))

###############################################################################
# Sum rules
# ---------
# The report checks the multiplet count, the dimension 2^N, the Catalan sum
# of squares and positivity, all with Python integers.

rep = identity_report(30)
for check in rep.checks:
    print(f"{check.name:>9}: {check.lhs} == {check.rhs}  {check.passed}")
print("N = 50 stretched block multiplicity:", multiplicity(50, 25))
