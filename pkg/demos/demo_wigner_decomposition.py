"""
Splitting a bath in two
=======================

Multiplicities of a bath of N1 + N2 spins can be rebuilt from those of the
two parts, weighted by squared 3j symbols.  The symbols are exact values of
the form sign * sqrt(p/q).
"""
from spintrace import verify_decomposition, wigner3j

###############################################################################
# A few exact 3j symbols
# ----------------------

print(wigner3j("1/2", "1/2", 0, "1/2", "-1/2", 0))
print(wigner3j(1, 1, 0, 1, -1, 0))
print(wigner3j("3/2", 1, "5/2", "1/2", 0, "-1/2"))

###############################################################################
# The decomposition law row by row
# --------------------------------
# Each row compares the weighted sum with the direct multiplicity.

rep = verify_decomposition(4, 4)
for row in rep.rows:
    print(f"J={row.J!s:>3}  sum={row.rhs}  nu={row.nu}")
print("stretched identity:", rep.stretched, " J=0 cross-check:", rep.zero_j)
print("all rows exact:", rep.passed)
