"""Large-bath (N -> infinity) limits of the two-qubit dynamics."""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.special

from .dynamics import BathType, Scaling

SQRT_PI = math.sqrt(math.pi)


def _require(params, bath_type, scaling, what):
    if params.bath_type is not bath_type or params.scaling is not scaling:
        raise ValueError(f"{what} needs bath_type={bath_type.value}, scaling={scaling.value}")


def gaussian_envelope(params, t):
    """``exp(-gamma^2 t^2 / cosh^2(h beta / 2))``, the large-N ``|rho14|`` decay."""
    _require(params, BathType.DELTA_Z, Scaling.SQRT_N, "gaussian_envelope")
    t = np.asarray(t, dtype=float)
    x = params.hbeta / 2
    if abs(x) > 700:
        return np.ones_like(t)
    return np.exp(-(params.gamma * t) ** 2 / math.cosh(x) ** 2)


def coherent_phase(params, t):
    """Large-N ``rho14(t) / rho14(0)`` with 1/N coupling and ``Sigma_z`` bath.

    ``exp(i t [4 mu - 2 gamma tanh(h beta / 2)])``; a pure phase, no decay.
    """
    _require(params, BathType.SIGMA_Z, Scaling.LINEAR_N, "coherent_phase")
    t = np.asarray(t, dtype=float)
    return np.exp(1j * t * (4 * params.mu - 2 * params.gamma * math.tanh(params.hbeta / 2)))


@lru_cache(maxsize=32)
def _hermite_rule(n):
    u, w = scipy.special.roots_hermite(n)
    u.setflags(write=False)
    w.setflags(write=False)
    return u, w


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss-Hermite rule for weight ``exp(-u^2)`` on the real line."""

    node_count: int = 64
    kind: str = "hermite"

    def __post_init__(self):
        if self.node_count < 16:
            raise ValueError("node_count must be >= 16")
        if self.kind != "hermite":
            raise ValueError(f"unsupported quadrature kind {self.kind!r}")

    def rule(self):
        return _hermite_rule(self.node_count)

    def doubled(self):
        return QuadratureSpec(2 * self.node_count, self.kind)

    @classmethod
    def for_time(cls, gamma, t):
        """Starting rule for an integrand oscillating like ``sin(|gamma| t u)``.

        ``max(64, 12 (1 + |gamma| t))`` rounded up to a power of two so that
        node tables are shared across time grids.
        """
        want = max(64, math.ceil(12 * (1 + abs(gamma) * abs(t))))
        return cls(1 << (want - 1).bit_length())


def _f_integral(lam, gamma, t, quad):
    u, w = quad.rule()
    omega2 = 4 * lam**2 + gamma**2 * u**2
    omega = np.sqrt(omega2)
    safe = np.where(omega == 0, 1.0, omega)
    s = np.where(omega == 0, t, np.sin(t * safe) / safe)
    return 2 * gamma**2 / SQRT_PI * np.sum(w * u**2 * s**2)


class QuadratureError(ArithmeticError):
    pass


def f_infinite_n(lam, gamma, t, quad=None, tol=1e-9, max_nodes=1 << 16, return_spec=False):
    """Infinite-temperature, infinite-N ``f(t)``.

    After ``x = u / sqrt(2)`` the integral becomes
    ``(2 gamma^2 / sqrt(pi)) int exp(-u^2) u^2 sin^2(t W) / W^2 du`` with
    ``W = sqrt(4 lam^2 + gamma^2 u^2)``.  The node count is doubled until two
    successive rules agree to ``tol``.
    """
    if quad is None:
        quad = QuadratureSpec.for_time(gamma, t)
    prev = _f_integral(lam, gamma, t, quad)
    while True:
        nxt_spec = quad.doubled()
        if nxt_spec.node_count > max_nodes:
            raise QuadratureError(f"f_infinite_n did not converge by {max_nodes} nodes at t={t}")
        nxt = _f_integral(lam, gamma, t, nxt_spec)
        if abs(nxt - prev) <= tol:
            break
        quad, prev = nxt_spec, nxt
    val = float(prev)
    return (val, quad) if return_spec else val


def erfcx(x):
    """Scaled complementary error function ``exp(x^2) erfc(x)``."""
    return scipy.special.erfcx(x)


def f_asymptote(lam, gamma):
    """Long-time value ``1 - 2 sqrt(pi) (lam/gamma) erfcx(2 lam / gamma)``.

    Only ``|lam|`` and ``|gamma|`` matter since f depends on their squares.
    """
    if gamma == 0:
        raise ValueError("f_asymptote is undefined for gamma = 0")
    r = abs(lam) / abs(gamma)
    return 1.0 - 2 * SQRT_PI * r * float(erfcx(2 * r))


def c_infinity(lam, gamma):
    """Asymptotic concurrence ``2 sqrt(pi) (lam/gamma) erfcx(2 lam / gamma)``.

    Raises for ``gamma = 0``; the concurrence then stays 1, which is the
    ``gamma -> 0`` limit but not a value of this formula.
    """
    if gamma == 0:
        raise ValueError("c_infinity is undefined for gamma = 0 (limit value is 1)")
    r = abs(lam) / abs(gamma)
    return 2 * SQRT_PI * r * float(erfcx(2 * r))
