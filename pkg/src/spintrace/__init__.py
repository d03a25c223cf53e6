"""Collective-spin traces, exact spin-multiplicity decompositions, and the
dynamics of two qubits coupled to separate spin baths."""

from .collective import (HalfInt, allowed_j, binomial, collective_trace, computational_trace,
                         identity_report, multiplicity)
from .dynamics import (BathType, BlockFormError, DeltaDistribution, ModelParams, Scaling, TwoQubitState,
                       concurrence, decoherence_time, delta_distribution, evolve, f_and_g, rho14_double_sum,
                       rho14_ratio, rho14_sigma_bath, u2_elements)
from .limits import (QuadratureSpec, c_infinity, coherent_phase, erfcx, f_asymptote, f_infinite_n,
                     gaussian_envelope)
from .oracle import FullSystem, build_full, compare_report, exact_evolve
from .wigner import (RootRational, ThreeJArgs, decomposition_rhs, verify_decomposition, wigner3j,
                     wigner3j_zero)

__version__ = "0.1.0"
