"""Two central qubits Ising-coupled to two separate spin baths of N spins each.

Qubit basis order is ``|--> , |-+>, |+->, |++>`` (indices 0..3).  The
Hamiltonian splits into an outer block on ``{|-->, |++>}``, which couples
to ``Sigma_z = J_z + Jc_z``, and an inner block on ``{|-+>, |+->}``, which
couples to ``Delta_z = J_z - Jc_z``.  Every bath operator is diagonal in
the bath product basis, so the reduced state is a thermal average over
bath magnetizations of a qubit-only unitary conjugation.
"""

import enum
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .collective import binomial, collective_trace


class BathType(enum.Enum):
    DELTA_Z = "deltaz"   # H_B = h (J_z - Jc_z)
    SIGMA_Z = "sigmaz"   # H_B = h (J_z + Jc_z)


class Scaling(enum.Enum):
    SQRT_N = "sqrtn"     # coupling gamma / sqrt(N)
    LINEAR_N = "linearn" # coupling gamma / N


@dataclass(frozen=True)
class ModelParams:
    lam: float = 0.0
    delta: float = 0.0
    gamma: float = 0.0
    mu: float = 0.0
    h: float = 0.0
    beta: float = 0.0
    n_bath: int = 1
    bath_type: BathType = BathType.DELTA_Z
    scaling: Scaling = Scaling.SQRT_N

    def __post_init__(self):
        object.__setattr__(self, "bath_type", BathType(self.bath_type))
        object.__setattr__(self, "scaling", Scaling(self.scaling))
        if int(self.n_bath) != self.n_bath or self.n_bath < 1:
            raise ValueError(f"n_bath must be a positive integer, got {self.n_bath}")
        object.__setattr__(self, "n_bath", int(self.n_bath))
        if not self.beta >= 0:
            raise ValueError(f"beta must be >= 0, got {self.beta}")
        for name in ("lam", "delta", "gamma", "mu", "h", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def hbeta(self):
        return self.h * self.beta

    @property
    def coupling(self):
        """Per-spin bath coupling: gamma/sqrt(N) or gamma/N."""
        if self.scaling is Scaling.SQRT_N:
            return self.gamma / math.sqrt(self.n_bath)
        return self.gamma / self.n_bath

    def with_(self, **changes):
        return replace(self, **changes)


# -- two-qubit states --------------------------------------------------------

_OUTER = (0, 3)
_INNER = (1, 2)
_BLOCK_MASK = np.zeros((4, 4), dtype=bool)
for _a in (_OUTER, _INNER):
    for _i in _a:
        for _j in _a:
            _BLOCK_MASK[_i, _j] = True


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """4x4 density matrix in the ``|-->, |-+>, |+->, |++>`` basis."""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __getitem__(self, idx):
        return self.matrix[idx]

    def block_form(self, tol=1e-12):
        return bool(np.all(np.abs(self.matrix[~_BLOCK_MASK]) <= tol))

    def problems(self, tol=1e-12, eig_tol=1e-10):
        """List of violated density-matrix invariants (empty when valid)."""
        m = self.matrix
        out = []
        if np.max(np.abs(m - m.conj().T)) > tol:
            out.append("not Hermitian")
        if abs(np.trace(m) - 1) > tol:
            out.append(f"trace {np.trace(m).real:.3g} != 1")
        herm = 0.5 * (m + m.conj().T)
        if np.linalg.eigvalsh(herm).min() < -eig_tol:
            out.append("not positive semidefinite")
        return out

    def is_valid(self, tol=1e-12, eig_tol=1e-10):
        return not self.problems(tol, eig_tol)

    @classmethod
    def from_ket(cls, ket):
        ket = np.asarray(ket, dtype=complex)
        ket = ket / np.linalg.norm(ket)
        return cls(np.outer(ket, ket.conj()))

    @classmethod
    def bell_outer(cls):
        """(|--> + |++>)/sqrt(2)."""
        return cls._bell((0, 3))

    @classmethod
    def bell_inner(cls):
        """(|-+> + |+->)/sqrt(2)."""
        return cls._bell((1, 2))

    @classmethod
    def _bell(cls, idx):
        # exact 1/2 entries; the outer product of 1/sqrt(2) kets rounds to 0.4999...
        m = np.zeros((4, 4), dtype=complex)
        m[np.ix_(idx, idx)] = 0.5
        return cls(m)


# -- bath statistics ---------------------------------------------------------

def _log_2cosh(x):
    x = abs(x)
    return x + math.log1p(math.exp(-2 * x))


@dataclass(frozen=True, eq=False)
class DeltaDistribution:
    """Thermal distribution of the ``Delta_z`` eigenvalue ``d`` (integer,
    ``-N..N``); ``weights`` sum to one."""

    d: np.ndarray
    weights: np.ndarray


def delta_distribution(params):
    """Distribution of ``Delta_z = M1 - M2`` in the initial thermal bath state.

    Pairs of bath magnetizations carry exact binomial degeneracies and
    thermal factors ``exp(-h beta M1 -/+ h beta M2)`` (sign by bath type);
    the ``(N+1)**2`` pairs are aggregated onto ``2N+1`` values of ``d``.
    Everything is done in log-space and normalized by the independently
    computed partition function ``[2 cosh(h beta / 2)]**(2N)``.
    """
    N = params.n_bath
    hb = params.hbeta
    s2 = -1.0 if params.bath_type is BathType.DELTA_Z else 1.0
    k = np.arange(N + 1)
    M = k - N / 2
    logC = np.array([math.log(binomial(N, int(i))) for i in k])
    log_pair = (logC[:, None] - hb * M[:, None]) + (logC[None, :] - s2 * hb * M[None, :])
    idx = (k[:, None] - k[None, :]) + N
    top = log_pair.max()
    agg = np.bincount(idx.ravel(), weights=np.exp(log_pair - top).ravel(), minlength=2 * N + 1)
    log_z = 2 * N * _log_2cosh(hb / 2)
    with np.errstate(divide="ignore"):
        w = np.exp(np.log(agg) + top - log_z)
    total = w.sum()
    if abs(total - 1) > 1e-12:
        raise ArithmeticError(f"thermal weights sum to {total!r}, not 1")
    # invariant holds; absorb the last few ulps so averages of constants are exact
    return DeltaDistribution(d=np.arange(-N, N + 1, dtype=float), weights=w / total)


# -- outer block: rho_14 -----------------------------------------------------

def rho14_ratio(params, t):
    """``rho14(t) / rho14(0)`` for the ``Delta_z`` bath, closed form.

    ``exp(4 i mu t) [1 + (cos^2(c t) - 1) / cosh^2(h beta / 2)]**N`` with
    ``c`` the per-spin coupling.
    """
    if params.bath_type is not BathType.DELTA_Z:
        raise ValueError("rho14_ratio is the Delta_z closed form; use rho14_sigma_bath or outer_ratio")
    t = np.asarray(t, dtype=float)
    c = params.coupling
    base = 1.0 - np.sin(c * t) ** 2 / np.cosh(params.hbeta / 2) ** 2
    return np.exp(4j * params.mu * t) * base ** params.n_bath


def rho14_double_sum(params, t):
    """``rho14(t) / rho14(0)`` from the collective-basis double sum over both baths.

    Each bath contributes ``sum_j nu(N,j) sum_m exp(2 i c m t -/+ h beta m)``;
    only valid for the ``Delta_z`` bath and moderate N (exact multiplicities).
    """
    if params.bath_type is not BathType.DELTA_Z:
        raise ValueError("rho14_double_sum is defined for the Delta_z bath")
    N = params.n_bath
    if N > 60:
        raise ValueError("rho14_double_sum is limited to n_bath <= 60")
    c, hb = params.coupling, params.hbeta
    half_z = 2 * math.cosh(hb / 2)

    def bath(sign, tt):
        return collective_trace(
            N, lambda j, m: np.exp(2j * c * float(m) * tt - sign * hb * float(m)) / half_z**N)

    out = []
    for tt in np.atleast_1d(np.asarray(t, dtype=float)):
        val = bath(+1, tt) * bath(-1, tt)
        out.append(np.exp(4j * params.mu * tt) * val)
    out = np.array(out)
    return out if np.ndim(t) else out[0]


def rho14_sigma_bath(params, t):
    """``rho14(t) / rho14(0)`` for the ``Sigma_z`` bath:
    ``exp(4 i mu t) [cos(c t) - i sin(c t) tanh(h beta / 2)]**(2N)``."""
    t = np.asarray(t, dtype=float)
    c = params.coupling
    base = np.cos(c * t) - 1j * np.sin(c * t) * np.tanh(params.hbeta / 2)
    # log form keeps the 2N-th power accurate for large N
    return np.exp(4j * params.mu * t + 2 * params.n_bath * np.log(base))


def outer_ratio(params, t):
    """``rho14(t) / rho14(0)`` for whichever bath the parameters describe."""
    if params.bath_type is BathType.DELTA_Z:
        return rho14_ratio(params, t)
    return rho14_sigma_bath(params, t)


# -- inner block -------------------------------------------------------------

def _sin_over(omega, t):
    """sin(t omega)/omega with the omega -> 0 limit t."""
    omega = np.asarray(omega, dtype=float)
    safe = np.where(omega == 0, 1.0, omega)
    return np.where(omega == 0, t, np.sin(t * safe) / safe)


def u2_elements(params, d, t):
    """Inner-block propagator entries ``(u22, u23, u33)`` for ``Delta_z = d``.

    Global phases from ``delta`` and the bath field are omitted; they cancel
    in every density-matrix element of a block-form state.
    """
    d = np.asarray(d, dtype=float)
    b = params.coupling * d
    omega = np.sqrt(4 * params.lam**2 + b**2)
    cos = np.cos(t * omega)
    s = _sin_over(omega, t)
    u22 = cos + 1j * b * s
    u23 = -2j * params.lam * s
    u33 = cos - 1j * b * s
    return u22, u23, u33


def f_and_g(params, t, dist=None):
    """Thermal traces ``f(t)`` (complex) and ``g(t)`` (real).

    For the Bell state (|-+> + |+->)/sqrt(2): ``rho22 = (1 - g)/2`` and
    ``rho23 = (1 - f)/2``.
    """
    if dist is None:
        dist = delta_distribution(params)
    b = params.coupling * dist.d
    omega = np.sqrt(4 * params.lam**2 + b**2)
    s = _sin_over(omega, t)
    s2 = _sin_over(omega, 2 * t)
    w = dist.weights
    g = np.sum(w * 4 * params.lam * b * s**2)
    f = np.sum(w * (2 * b**2 * s**2 - 1j * b * s2))
    return complex(f), float(g)


def _inner_evolve(params, rho_inner, t, dist):
    u22, u23, u33 = u2_elements(params, dist.d, t)
    U = np.empty((len(dist.d), 2, 2), dtype=complex)
    U[:, 0, 0], U[:, 0, 1], U[:, 1, 0], U[:, 1, 1] = u22, u23, u23, u33
    # average the change U rho U^+ - rho, not U rho U^+ itself, so rounding in
    # the weight sum cannot leak into the result (exact at t = 0)
    moved = np.einsum("nab,bc,ndc->nad", U, rho_inner, U.conj()) - rho_inner
    return rho_inner + np.einsum("n,nad->ad", dist.weights, moved)


class BlockFormError(ValueError):
    """Initial state couples the two pseudo two-level blocks."""


def evolve(params, rho0, times):
    """Reduced two-qubit state at each time in ``times``.

    The outer block keeps its populations and multiplies ``rho14`` by the
    closed-form ratio; the inner block is averaged over the ``Delta_z``
    distribution.  ``rho0`` must have block form.
    """
    if not isinstance(rho0, TwoQubitState):
        rho0 = TwoQubitState(rho0)
    if not rho0.block_form():
        raise BlockFormError("initial state has coherences between the |-->,|++> and |-+>,|+-> blocks")
    m0 = rho0.matrix
    inner0 = m0[np.ix_(_INNER, _INNER)]
    needs_inner = np.any(np.abs(inner0) > 0)
    dist = delta_distribution(params) if needs_inner else None
    states = []
    for t in np.atleast_1d(np.asarray(times, dtype=float)):
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[3, 3] = m0[0, 0], m0[3, 3]
        r14 = m0[0, 3] * complex(outer_ratio(params, t)) if m0[0, 3] != 0 else 0j
        m[0, 3], m[3, 0] = r14, np.conj(r14)
        if needs_inner:
            m[np.ix_(_INNER, _INNER)] = _inner_evolve(params, inner0, t, dist)
        states.append(TwoQubitState(m))
    return states


# -- entanglement and time scales --------------------------------------------

_YY = np.fliplr(np.diag([-1.0, 1.0, 1.0, -1.0]))


def _wootters_roots(m):
    """Square roots of the eigenvalues of ``rho (Y x Y) rho* (Y x Y)``.

    Block-form (X) states have them in closed form, which avoids the
    square-root amplification of round-off in near-zero eigenvalues.
    """
    if np.all(np.abs(m[~_BLOCK_MASK]) <= 1e-12):
        p = np.clip(np.real(np.diag(m)), 0.0, None)
        a = math.sqrt(p[0] * p[3])
        b = math.sqrt(p[1] * p[2])
        r14, r23 = abs(m[0, 3]), abs(m[1, 2])
        return np.array([a + r14, abs(a - r14), b + r23, abs(b - r23)])
    R = m @ _YY @ m.conj() @ _YY
    ev = np.linalg.eigvals(R).real
    if ev.min() < -1e-10:
        raise ValueError("concurrence: matrix is not a valid density matrix")
    return np.sqrt(np.clip(ev, 0.0, None))


def concurrence(rho):
    """Wootters concurrence ``max(0, 2 max sqrt(l_i) - sum sqrt(l_i))``."""
    m = rho.matrix if isinstance(rho, TwoQubitState) else np.asarray(rho, dtype=complex)
    r = _wootters_roots(m)
    return float(min(1.0, max(0.0, 2 * r.max() - r.sum())))


def decoherence_time(params):
    """Time scale of the Gaussian decay of ``|rho14|``.

    ``cosh(h beta / 2) / |gamma|`` under sqrt(N) scaling; infinite for
    ``gamma = 0`` and in the large-N limit of the 1/N scaling.
    """
    if params.gamma == 0 or params.scaling is Scaling.LINEAR_N:
        return math.inf
    return math.cosh(params.hbeta / 2) / abs(params.gamma)
