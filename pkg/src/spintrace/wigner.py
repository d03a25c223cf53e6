"""Exact Wigner 3j symbols and the two-part decomposition of spin multiplicities.

Every 3j symbol is ``sign * sqrt(p/q)`` with rational ``p/q``, so squares are
exact fractions and the decomposition sums can be checked with zero
tolerance.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .collective import HalfInt, allowed_j, m_values, multiplicity, valid_pair


@dataclass(frozen=True)
class RootRational:
    """The real number ``sign * sqrt(radicand)`` with rational radicand."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        radicand = Fraction(self.radicand)
        object.__setattr__(self, "radicand", radicand)
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if (self.sign == 0) != (radicand == 0):
            raise ValueError("sign is zero iff radicand is zero")

    @classmethod
    def zero(cls):
        return cls(0, Fraction(0))

    @classmethod
    def from_signed_square(cls, sign, square):
        square = Fraction(square)
        if square == 0:
            return cls.zero()
        return cls(1 if sign > 0 else -1, square)

    def square(self):
        return self.sign * self.sign * self.radicand

    def to_float(self):
        if self.sign == 0:
            return 0.0
        p, q = self.radicand.numerator, self.radicand.denominator
        # sqrt of each factor keeps huge p, q representable
        if p.bit_length() > 1000 or q.bit_length() > 1000:
            return self.sign * math.exp(0.5 * (math.log(p) - math.log(q)))
        return self.sign * math.sqrt(p / q)

    __float__ = to_float

    def __neg__(self):
        return RootRational(-self.sign, self.radicand)

    def __mul__(self, other):
        if isinstance(other, RootRational):
            return RootRational.from_signed_square(self.sign * other.sign, self.radicand * other.radicand)
        return NotImplemented

    def __str__(self):
        if self.sign == 0:
            return "0"
        s = "-" if self.sign < 0 else "+"
        return f"{s}sqrt({self.radicand})"


@dataclass(frozen=True)
class ThreeJArgs:
    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    m1: HalfInt
    m2: HalfInt
    m3: HalfInt

    def __post_init__(self):
        for name in ("j1", "j2", "j3", "m1", "m2", "m3"):
            object.__setattr__(self, name, HalfInt.of(getattr(self, name)))

    @classmethod
    def of(cls, j1, j2, j3, m1, m2, m3):
        return cls(*(HalfInt.of(x) for x in (j1, j2, j3, m1, m2, m3)))

    def _pairs(self):
        return ((self.j1, self.m1), (self.j2, self.m2), (self.j3, self.m3))

    def well_formed(self):
        """Nonnegative j and integer j - m in every column."""
        return all(j.twice >= 0 and (j.twice - m.twice) % 2 == 0 for j, m in self._pairs())

    def pairs_valid(self):
        return all(valid_pair(j, m) for j, m in self._pairs())

    def triangle_ok(self):
        a, b, c = self.j1.twice, self.j2.twice, self.j3.twice
        return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0

    def selection_ok(self):
        return (self.m1.twice + self.m2.twice + self.m3.twice == 0
                and self.pairs_valid() and self.triangle_ok())


@lru_cache(maxsize=None)
def _fact(n):
    return math.factorial(n)


def wigner3j(*args):
    """Exact Wigner 3j symbol.

    Accepts a :class:`ThreeJArgs` or the six values ``j1, j2, j3, m1, m2, m3``.
    Uses the Racah single-sum formula with big-integer factorials; returns
    exact zero when the selection rules fail.

    Raises
    ------
    ValueError
        If any (j, m) pair is malformed (negative j or non-integer j - m).
        ``|m| > j`` is a selection-rule zero, not an error.
    """
    a = args[0] if len(args) == 1 and isinstance(args[0], ThreeJArgs) else ThreeJArgs.of(*args)
    if not a.well_formed():
        raise ValueError(f"invalid quantum numbers: {a}")
    if not a.selection_ok():
        return RootRational.zero()

    j1, j2, j3 = a.j1.twice, a.j2.twice, a.j3.twice
    m1, m2, m3 = a.m1.twice, a.m2.twice, a.m3.twice
    # all quantities below are twice-values halved into plain integers
    f = lambda tw: _fact(tw // 2)  # noqa: E731

    triangle = Fraction(f(j1 + j2 - j3) * f(j1 - j2 + j3) * f(-j1 + j2 + j3), f(j1 + j2 + j3 + 2))
    prefactor_sq = triangle * (f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j3 + m3) * f(j3 - m3))

    # k runs over integers where every factorial argument is >= 0
    k_min = max(0, (j2 - j3 - m1) // 2, (j1 - j3 + m2) // 2)
    k_max = min((j1 + j2 - j3) // 2, (j1 - m1) // 2, (j2 + m2) // 2)
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        den = (_fact(k) * f(j3 - j2 + m1 + 2 * k) * f(j3 - j1 - m2 + 2 * k)
               * f(j1 + j2 - j3 - 2 * k) * f(j1 - m1 - 2 * k) * f(j2 + m2 - 2 * k))
        total += Fraction(-1 if k % 2 else 1, den)
    if total == 0:
        return RootRational.zero()

    phase = -1 if ((j1 - j2 - m3) // 2) % 2 else 1
    sign = phase * (1 if total > 0 else -1)
    return RootRational.from_signed_square(sign, prefactor_sq * total * total)


def wigner3j_zero(j1, m1, j2, m2):
    """The 3j symbol with ``j3 = m3 = 0``: ``(-1)**(j1-m1) / sqrt(2 j1 + 1)``
    when ``j1 == j2`` and ``m2 == -m1``, zero otherwise."""
    j1, m1, j2, m2 = (HalfInt.of(x) for x in (j1, m1, j2, m2))
    if j1 != j2 or m2 != -m1 or not valid_pair(j1, m1) or not valid_pair(j2, m2):
        return RootRational.zero()
    sign = -1 if ((j1.twice - m1.twice) // 2) % 2 else 1
    return RootRational(sign, Fraction(1, j1.twice + 1))


def _parity_sign(twice_exponent):
    """(-1)**(twice_exponent / 2) for an even ``twice_exponent``."""
    if twice_exponent % 2:
        raise ValueError("phase exponent is not an integer")
    return -1 if (twice_exponent // 2) % 2 else 1


def decomposition_rhs(N1, N2, J):
    """Exact right-hand side of the two-part decomposition law.

    Returns ``sum nu(N1,j1) nu(N2,j2) (-1)**(2(j1-j2+J)) (2J+1) 3j(j1,j2,J; m1,m2,-J)**2``
    over all ``j1, m1, j2`` with ``m2 = J - m1``.  Should equal ``nu(N1+N2, J)``.
    """
    J = HalfInt.of(J)
    if J not in allowed_j(N1 + N2):
        raise ValueError(f"J = {J} not allowed for N = {N1 + N2}")
    total = Fraction(0)
    for j1 in allowed_j(N1):
        nu1 = multiplicity(N1, j1)
        for j2 in allowed_j(N2):
            nu2 = multiplicity(N2, j2)
            # exponent 2(j1 - j2 + J) in twice-units is 2 * (tj1 - tj2 + tJ)
            phase = _parity_sign(2 * (j1.twice - j2.twice + J.twice))
            for m1 in m_values(j1):
                m2 = J - m1
                if not valid_pair(j2, m2):
                    continue
                sq = wigner3j(j1, j2, J, m1, m2, -J).square()
                if sq:
                    total += nu1 * nu2 * phase * (J.twice + 1) * sq
    return total


def stretched_identity(N1, N2):
    """Value of ``(-1)**(N1+N2) (N1+N2+1) sum nu nu (-1)**(2(j1-j2)) 3j(...; -(N1+N2)/2)**2``;
    exactly 1 for every N1, N2."""
    Jtw = N1 + N2
    J = HalfInt(Jtw)
    total = Fraction(0)
    for j1 in allowed_j(N1):
        for j2 in allowed_j(N2):
            phase = _parity_sign(2 * (j1.twice - j2.twice))
            for m1 in m_values(j1):
                m2 = J - m1
                if not valid_pair(j2, m2):
                    continue
                total += (multiplicity(N1, j1) * multiplicity(N2, j2) * phase
                          * wigner3j(j1, j2, J, m1, m2, -J).square())
    return (-1) ** (N1 + N2) * (N1 + N2 + 1) * total


def zero_j_decomposition(N1, N2):
    """``nu(N1+N2, 0)`` rebuilt from the j3 = 0 symbol: ``sum_j nu(N1,j) nu(N2,j)``.

    Only defined when N1 + N2 is even.  Sums over m explicitly with the
    ``(-1)**(2(j-m)) / (2j+1)`` weight before collapsing.
    """
    if (N1 + N2) % 2:
        raise ValueError("J = 0 requires N1 + N2 even")
    common = set(allowed_j(N1)) & set(allowed_j(N2))
    total = Fraction(0)
    for j in sorted(common):
        w = Fraction(0)
        for m in m_values(j):
            w += _parity_sign(2 * (j.twice - m.twice)) * wigner3j_zero(j, m, j, -m).square()
        total += multiplicity(N1, j) * multiplicity(N2, j) * w
    return total


@dataclass(frozen=True)
class DecompositionRow:
    J: HalfInt
    rhs: Fraction
    nu: int

    @property
    def passed(self):
        return self.rhs.denominator == 1 and self.rhs == self.nu


@dataclass(frozen=True)
class DecompositionReport:
    N1: int
    N2: int
    rows: tuple
    stretched: Fraction
    zero_j: Fraction | None

    @property
    def passed(self):
        ok = all(r.passed for r in self.rows) and self.stretched == 1
        if self.zero_j is not None:
            ok = ok and self.zero_j == multiplicity(self.N1 + self.N2, 0)
        return ok


def verify_decomposition(N1, N2):
    """Compare the decomposition law against ``nu(N1+N2, J)`` for every J."""
    if N1 < 1 or N2 < 1:
        raise ValueError("N1 and N2 must be positive")
    rows = tuple(
        DecompositionRow(J, decomposition_rhs(N1, N2, J), multiplicity(N1 + N2, J))
        for J in allowed_j(N1 + N2)
    )
    zero = zero_j_decomposition(N1, N2) if (N1 + N2) % 2 == 0 else None
    return DecompositionReport(N1, N2, rows, stretched_identity(N1, N2), zero)
