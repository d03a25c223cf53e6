"""Brute-force ground truth on the full ``4 * 2**(2N)`` dimensional space.

Tensor order is qubit1, qubit2, bath-1 sites, bath-2 sites.  Each site has
basis ``(|->, |+>)`` so ``sigma_z = diag(-1, +1)``.
"""

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .dynamics import BathType, TwoQubitState, concurrence

MAX_DIM = 4096

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, 1j], [-1j, 0]], dtype=complex)
SZ = np.array([[-1, 0], [0, 1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def site_op(op, site, n_sites):
    """Place a single-site operator at ``site`` among ``n_sites`` sites."""
    return reduce(np.kron, [op if k == site else I2 for k in range(n_sites)])


def _diag_sz(site, n_sites):
    """Diagonal of sigma_z on ``site`` as a real vector."""
    shape = [2] * n_sites
    v = np.array([-1.0, 1.0]).reshape([2 if k == site else 1 for k in range(n_sites)])
    return np.broadcast_to(v, shape).reshape(-1)


@dataclass(frozen=True, eq=False)
class FullSystem:
    n_bath: int
    hamiltonian: np.ndarray = field(repr=False)
    bath_weights: np.ndarray = field(repr=False)
    _eig: tuple = field(default=None, repr=False)

    @property
    def dimension(self):
        return self.hamiltonian.shape[0]

    def eig(self):
        if self._eig is None:
            object.__setattr__(self, "_eig", np.linalg.eigh(self.hamiltonian))
        return self._eig


def build_full(params):
    """Full Hamiltonian with every term kept, and the thermal bath weights."""
    N = params.n_bath
    n_sites = 2 + 2 * N
    dim = 2**n_sites
    if dim > MAX_DIM:
        raise ValueError(f"dimension {dim} exceeds the oracle cap {MAX_DIM} (n_bath <= 5)")

    def q(op, k):
        return site_op(op, k, n_sites)

    bath1 = range(2, 2 + N)
    bath2 = range(2 + N, n_sites)
    jz1 = 0.5 * sum(_diag_sz(s, n_sites) for s in bath1)
    jz2 = 0.5 * sum(_diag_sz(s, n_sites) for s in bath2)
    sz1, sz2 = _diag_sz(0, n_sites), _diag_sz(1, n_sites)

    H = params.lam * (q(SX, 0) @ q(SX, 1) + q(SY, 0) @ q(SY, 1))
    s2 = -1.0 if params.bath_type is BathType.DELTA_Z else 1.0
    diag = (params.delta * sz1 * sz2
            + params.coupling * (sz1 * jz1 + sz2 * jz2)
            + params.mu * (sz1 + sz2)
            + params.h * (jz1 + s2 * jz2))
    H = H + np.diag(diag)

    # bath-only magnetizations: the first two sites are qubits
    bj1 = 0.5 * sum(_diag_sz(s - 2, 2 * N) for s in bath1)
    bj2 = 0.5 * sum(_diag_sz(s - 2, 2 * N) for s in bath2)
    logw = -params.hbeta * (bj1 + s2 * bj2)
    w = np.exp(logw - logw.max())
    w /= w.sum()
    return FullSystem(N, H, w)


def partial_trace_baths(rho_full, n_bath):
    d_b = 2 ** (2 * n_bath)
    r = rho_full.reshape(4, d_b, 4, d_b)
    return np.einsum("ibjb->ij", r)


def exact_evolve(sys, rho_qubits0, t):
    """Evolve ``rho_q(0) (x) rho_B(0)`` under the full Hamiltonian and trace out the baths."""
    rho_q = rho_qubits0.matrix if isinstance(rho_qubits0, TwoQubitState) else np.asarray(rho_qubits0)
    rho_tot = np.kron(rho_q, np.diag(sys.bath_weights))
    evals, V = sys.eig()
    phase = np.exp(-1j * evals * t)
    U = (V * phase) @ V.conj().T
    rho_t = U @ rho_tot @ U.conj().T
    red = partial_trace_baths(rho_t, sys.n_bath)
    return TwoQubitState(0.5 * (red + red.conj().T))


@dataclass(frozen=True)
class CompareRow:
    index: int
    max_dev: float
    concurrence_dev: float
    passed: bool


@dataclass(frozen=True)
class CompareReport:
    rows: tuple
    tol: float
    phase_insensitive: bool

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    @property
    def worst(self):
        return max(self.rows, key=lambda r: max(r.max_dev, r.concurrence_dev))

    @property
    def first_failure(self):
        for r in self.rows:
            if not r.passed:
                return r
        return None


def compare_report(analytic, exact, tol, phase_insensitive=False):
    """Elementwise and concurrence deviations between two state sequences.

    With ``phase_insensitive`` only element magnitudes are compared.
    """
    if len(analytic) != len(exact):
        raise ValueError(f"length mismatch: {len(analytic)} vs {len(exact)}")
    rows = []
    for i, (a, e) in enumerate(zip(analytic, exact)):
        ma, me = _mat(a), _mat(e)
        if phase_insensitive:
            ma, me = np.abs(ma), np.abs(me)
        dev = float(np.max(np.abs(ma - me)))
        cdev = abs(concurrence(_mat(a)) - concurrence(_mat(e)))
        rows.append(CompareRow(i, dev, cdev, dev <= tol and cdev <= tol))
    return CompareReport(tuple(rows), tol, phase_insensitive)


def _mat(s):
    return s.matrix if isinstance(s, TwoQubitState) else np.asarray(s, dtype=complex)
