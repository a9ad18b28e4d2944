"""Arithmetic of the principal congruence subgroups and the curves X(d).

Three ingredients live here:

* the exact rational Delta_d = (d^2/24) * prod_{p | d} (1 - 1/p^2) and the
  derived genus/cusp counts of X(d);
* membership in Gamma(d) = {M in SL_2(Z) : M = I mod d};
* the four index-2 complements of {+-1} inside Gamma(2), classified by their
  sets S of irregular cusps (S a subset of {0, 1, inf} of size 1 or 3).

Gamma(2)/{+-1} is free on the images of a = [[1,2],[0,1]] and
b = [[1,0],[2,1]] (the stabilizers of the cusps inf and 0).  A complement is
the image of the homomorphic section determined by a sign pair
(eps_a, eps_b): the section sends a-bar to eps_a*a and b-bar to eps_b*b.
The cusp dictionary is

    inf in S  <=>  eps_a = -1,
    0   in S  <=>  eps_b = -1,
    1   in S  <=>  eps_a * eps_b = +1,

because the stabilizer of the cusp 1 is generated by -+(a b^-1) and the
trace -2 representative lies in the section iff eps_a*eps_b = +1.  That
forces |S| in {1, 3}: exactly four complements.

Membership of M in a complement: write M = sigma * w(a, b) with sigma = +-1
by Euclidean reduction of the first column (the parity pattern of Gamma(2) -
odd diagonal, even off-diagonal - makes the reduction strict), then compare
sigma with eps_a^(e_A) * eps_b^(e_B), where e_A, e_B are the exponent sums
of the word (well defined modulo 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidCuspSet,
    LevelTooSmall,
    NonIntegralResult,
    UnsupportedCusp,
)
from .intlinalg import IntMatrix

CUSP_ZERO = "0"
CUSP_ONE = "1"
CUSP_INF = "inf"

REGULAR = "Regular"
IRREGULAR = "Irregular"

#: Stabilizer generators of the cusp at infinity inside Gamma(2), regular
#: and irregular flavour.
REGULAR_STABILIZER = IntMatrix([[1, 2], [0, 1]])
IRREGULAR_STABILIZER = IntMatrix([[-1, 2], [0, -1]])


@dataclass(frozen=True)
class ModularCurveData:
    d: int
    delta: Fraction
    genus: int
    cusps: int


@dataclass(frozen=True)
class CuspRegularityCase:
    variant: str  # REGULAR or IRREGULAR
    stabilizer_generator: IntMatrix


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def delta(d: int) -> Fraction:
    """Delta_d = (d^2 / 24) * prod over primes p | d of (1 - 1/p^2)."""
    if d < 2:
        raise LevelTooSmall(f"delta is defined for d >= 2, got {d}")
    value = Fraction(d * d, 24)
    for p in _prime_factors(d):
        value *= Fraction(p * p - 1, p * p)
    return value


def modular_data(d: int) -> ModularCurveData:
    """Genus and cusp count of X(d): g = (d-6)*Delta_d + 1, t = 12*Delta_d."""
    if d < 3:
        raise LevelTooSmall(f"modular data requires d >= 3, got {d}")
    dl = delta(d)
    genus = (d - 6) * dl + 1
    cusps = 12 * dl
    if genus.denominator != 1 or cusps.denominator != 1:
        raise NonIntegralResult(
            f"genus or cusp count non-integral at d={d}: {genus}, {cusps}"
        )
    return ModularCurveData(d=d, delta=dl, genus=int(genus), cusps=int(cusps))


def gamma_d_contains(m: IntMatrix, d: int) -> bool:
    """True iff m is in SL_2(Z) and congruent to the identity mod d."""
    if m.rows != 2 or m.cols != 2:
        return False
    a, b = m.row(0)
    c, e = m.row(1)
    if a * e - b * c != 1:
        return False
    return (a - 1) % d == 0 and b % d == 0 and c % d == 0 and (e - 1) % d == 0


def normalize_cusp(c) -> str:
    if c in (0, "0"):
        return CUSP_ZERO
    if c in (1, "1"):
        return CUSP_ONE
    if c in ("inf", "oo", "∞", float("inf")):
        return CUSP_INF
    raise InvalidCuspSet(f"unknown cusp {c!r}; cusps are 0, 1, inf")


def normalize_cusp_set(s) -> frozenset[str]:
    cusps = frozenset(normalize_cusp(c) for c in s)
    if len(cusps) != len(list(s)):
        raise InvalidCuspSet("cusp set contains duplicates")
    if len(cusps) not in (1, 3):
        raise InvalidCuspSet(f"cusp set must have size 1 or 3, got {set(s)!r}")
    return cusps


def _section_signs(s: frozenset[str]) -> tuple[int, int]:
    eps_a = -1 if CUSP_INF in s else 1
    eps_b = -1 if CUSP_ZERO in s else 1
    # consistency: 1 is irregular exactly when eps_a * eps_b = +1
    if (CUSP_ONE in s) != (eps_a * eps_b == 1):
        raise InvalidCuspSet(
            f"cusp set {set(s)!r} does not correspond to a complement"
        )
    return eps_a, eps_b


def _nearest_remainder(v: int, step: int) -> int:
    """Minimal-magnitude representative of v modulo |step|, in
    (-|step|/2, |step|/2]."""
    step = abs(step)
    r = v % step  # in [0, step)
    if r > step // 2:
        r -= step
    return r


def gamma2_complement_contains(m: IntMatrix, s) -> bool:
    """Membership of m in the complement of {+-1} in Gamma(2) labelled by
    the irregular-cusp set ``s``.

    Writes m = sigma * word(A, B) with sigma = +-1 by Euclidean reduction of
    the first column: left-multiplying by A^-k subtracts 2k * row1 from
    row0, by B^-j subtracts 2j * row0 from row1.  The lower-left entry is
    even and the diagonal odd throughout, so the minimal-magnitude remainder
    is strictly smaller than the divisor and the reduction terminates with
    the lower-left entry equal to 0, i.e. with +-A^t.  m lies in the
    complement iff sigma equals eps_a^e_A * eps_b^e_B for the word's
    exponent sums (well defined modulo 2 on a free group).
    """
    cusps = normalize_cusp_set(s)
    eps_a, eps_b = _section_signs(cusps)
    if not gamma_d_contains(m, 2):
        return False

    a, b = m.row(0)
    c, e = m.row(1)
    e_a = 0
    e_b = 0
    while c != 0:
        if abs(a) > abs(c):
            # a odd, 2c stride: remainder is odd, hence != |c|, hence < |c|
            k = (a - _nearest_remainder(a, 2 * c)) // (2 * c)
            a -= 2 * k * c
            b -= 2 * k * e
            e_a += k
        else:
            # c even, 2a stride: remainder is even, hence != |a|, hence < |a|
            j = (c - _nearest_remainder(c, 2 * a)) // (2 * a)
            c -= 2 * j * a
            e -= 2 * j * b
            e_b += j
    # m reduced to [[a, b], [0, e]] with a = e = +-1: that is sigma * A^t
    sigma = a
    e_a += b // (2 * a)
    target = (eps_a if e_a % 2 else 1) * (eps_b if e_b % 2 else 1)
    return sigma == target


def cusp_case(s, cusp="inf") -> CuspRegularityCase:
    """Regularity of the cusp at infinity for the complement labelled by s."""
    cusps = normalize_cusp_set(s)
    _section_signs(cusps)  # validates admissibility
    if normalize_cusp(cusp) != CUSP_INF:
        raise UnsupportedCusp("only the cusp at infinity is supported")
    if CUSP_INF in cusps:
        return CuspRegularityCase(IRREGULAR, IRREGULAR_STABILIZER)
    return CuspRegularityCase(REGULAR, REGULAR_STABILIZER)
