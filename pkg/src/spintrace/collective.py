"""Exact combinatorics of N spin-1/2 particles.

Quantum numbers are stored as twice their value so that every triangle
rule and parity test is integer arithmetic.  Multiplicities are Python
integers and never overflow.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A half-integer quantum number, stored as ``twice = 2 * value``."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"HalfInt.twice must be int, got {type(self.twice).__name__}")

    @classmethod
    def of(cls, value):
        """Build from an int, a Fraction, a float that is an exact half-integer,
        or a string such as ``"3/2"``, ``"-1/2"`` or ``"0.5"``."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = value.strip()
            try:
                value = Fraction(value)
            except ValueError:
                raise ValueError(f"not a half-integer: {value!r}") from None
        frac = Fraction(value)
        twice = 2 * frac
        if twice.denominator != 1:
            raise ValueError(f"not a half-integer: {value!r}")
        return cls(int(twice))

    @property
    def is_integer(self):
        return self.twice % 2 == 0

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __lt__(self, other):
        return self.twice < HalfInt.of(other).twice

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        try:
            return self.twice == HalfInt.of(other).twice
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __float__(self):
        return self.twice / 2

    def to_fraction(self):
        return Fraction(self.twice, 2)

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def valid_pair(j, m):
    """True when (j, m) is a legal angular-momentum pair."""
    j, m = HalfInt.of(j), HalfInt.of(m)
    return j.twice >= 0 and abs(m.twice) <= j.twice and (j.twice - m.twice) % 2 == 0


def m_values(j):
    """m = -j, -j+1, ..., j."""
    j = HalfInt.of(j)
    return [HalfInt(tm) for tm in range(-j.twice, j.twice + 1, 2)]


def binomial(n, k):
    """Exact binomial coefficient; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def allowed_j(N):
    """Total-spin values kappa, kappa+1, ..., N/2 for N spins, increasing."""
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    return [HalfInt(tj) for tj in range(N % 2, N + 1, 2)]


def multiplicity(N, j):
    """Number of spin-j multiplets in the N-fold product of spin-1/2 spaces.

    ``nu(N, j) = C(N, N/2 - j) - C(N, N/2 - j - 1)``.

    Raises
    ------
    ValueError
        If N/2 - j is not a nonnegative integer.
    """
    j = HalfInt.of(j)
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    k_twice = N - j.twice
    if j.twice < 0 or k_twice < 0 or k_twice % 2:
        raise ValueError(f"j = {j} is not an allowed total spin for N = {N}")
    k = k_twice // 2
    return binomial(N, k) - binomial(N, k - 1)


def _fsum_complex(values):
    values = list(values)
    re = math.fsum(complex(v).real for v in values)
    im = math.fsum(complex(v).imag for v in values)
    return complex(re, im)


def collective_trace(N, G):
    """Trace of an operator that is diagonal in the ``|j, m>`` basis.

    ``G(j, m)`` gives the diagonal element; each j block is weighted by its
    exact multiplicity.  Terms are accumulated with :func:`math.fsum`.
    """
    terms = []
    for j in allowed_j(N):
        nu = multiplicity(N, j)
        for m in m_values(j):
            terms.append(nu * complex(G(j, m)))
    return _fsum_complex(terms)


def computational_trace(N, g):
    """Trace of ``g(J_z)`` summed over the 2**N product states.

    Independent of :func:`collective_trace`: uses only binomial
    degeneracies of each magnetization.
    """
    terms = []
    for k in range(N + 1):
        m = HalfInt(2 * k - N)
        terms.append(binomial(N, k) * complex(g(m)))
    return _fsum_complex(terms)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self):
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    N: int
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def identity_report(N):
    """Check the exact multiplicity sum rules for N spins.

    * ``sum_J nu(N, J) == C(N, N/2 - kappa)``
    * ``sum_J (2J+1) nu(N, J) == 2**N``
    * ``sum_J nu(N, J)**2 == (2N)! / ((N+1) (N!)**2)`` (Catalan number)
    * every multiplicity is positive (lhs counts positive ones)
    """
    js = allowed_j(N)
    nus = [multiplicity(N, j) for j in js]
    kappa_twice = N % 2
    catalan_num = math.factorial(2 * N)
    catalan_den = (N + 1) * math.factorial(N) ** 2
    if catalan_num % catalan_den:
        raise ArithmeticError("Catalan quotient is not integral")
    checks = (
        IdentityCheck("count", sum(nus), binomial(N, (N - kappa_twice) // 2)),
        IdentityCheck("dimension", sum((j.twice + 1) * nu for j, nu in zip(js, nus)), 2**N),
        IdentityCheck("catalan", sum(nu * nu for nu in nus), catalan_num // catalan_den),
        IdentityCheck("positive", sum(1 for nu in nus if nu > 0), len(nus)),
    )
    return IdentityReport(N, checks)
