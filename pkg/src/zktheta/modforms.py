"""Constructors for the handful of q-expansions everything else consumes.

All series live in t = q^2: the weight-4 Eisenstein series E4, the
discriminant form Delta, its reciprocal eta-product h, the theta functions
f_0..f_k attached to the residue classes of Z_2k, and theta1, the theta
series of the lattice sqrt(2k)*Z^8.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GridViolation, IndexOutOfRange
from .series import FracSeries, invert, mul, power


def sigma3(m: int) -> int:
    """Divisor function sigma_3(m) = sum of d^3 over divisors d of m."""
    if m < 1:
        raise ValueError("sigma3 needs m >= 1")
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            total += d ** 3
            q = m // d
            if q != d:
                total += q ** 3
        d += 1
    return total


def eisenstein_e4(T) -> FracSeries:
    """E4 = 1 + 240 * sum_{m>=1} sigma3(m) t^m on the integer grid."""
    T = Fraction(T)
    terms = {0: 1}
    m = 1
    while m < T:
        terms[m] = 240 * sigma3(m)
        m += 1
    return FracSeries.from_terms(1, T, terms)


def delta24(T) -> FracSeries:
    """Delta = t * prod_{m>=1} (1 - t^m)^24, truncated at T."""
    T = Fraction(T)
    prod = FracSeries.constant(1, T - 1 if T > 1 else T)
    m = 1
    while m < T - 1:
        factor = FracSeries.from_terms(1, T - 1, {0: 1, m: -1})
        prod = mul(power(factor, 24), prod)
        m += 1
    # shift by one: multiply by t
    terms = {e + 1: c for e, c in prod.nonzero_terms()}
    return FracSeries.from_terms(1, T, terms)


def h_series(T) -> FracSeries:
    """h = prod_{r>=1} (1 - t^r)^(-24) = t/Delta; all coefficients positive."""
    T = Fraction(T)
    prod = FracSeries.constant(1, T)
    m = 1
    while m < T:
        factor = FracSeries.from_terms(1, T, {0: 1, m: -1})
        prod = mul(power(factor, 24), prod)
        m += 1
    return invert(prod)


def theta_f(k: int, i: int, T) -> FracSeries:
    """Theta function of the residue class 2kZ + i, on grid 1/(4k).

    f_i = sum over x = i mod 2k of t^(x^2/4k).  Support sits at grid index
    x^2 for positive x with x = +-i mod 2k; the stored coefficient is the
    number of class members with that square: 2 for i = 0 (x and -x, plus
    the constant 1) and for i = k (the class is its own negative), 1 for
    0 < i < k (x and -x fall in the two different classes i and 2k-i,
    which share the same series).  This single-class normalization is the
    one that makes swe_C8(f_0, ..., f_k) = E4 come out exactly.
    """
    if not 0 <= i <= k:
        raise IndexOutOfRange(f"theta index {i} outside 0..{k}")
    T = Fraction(T)
    D = 4 * k
    residues = {i % (2 * k), (2 * k - i) % (2 * k)}
    weight = 2 if i == 0 or i == k else 1
    terms = {0: 1} if i == 0 else {}
    x = 1
    while x * x < T * D:
        if x % (2 * k) in residues:
            terms[x * x] = weight
        x += 1
    return FracSeries.from_terms(D, T, terms)


def theta1(k: int, T) -> FracSeries:
    """Theta series of sqrt(2k)*Z^8 on the integer grid.

    Computed as theta_f(k, 0, .)^8 and re-gridded to D = 1; any nonzero
    coefficient off the integer grid would be a bug (GridViolation).
    The coefficient of t^m counts x in Z^8 with k * sum(x_i^2) = m.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    th8 = power(theta_f(k, 0, T), 8)
    try:
        return th8.regrid(1)
    except GridViolation as exc:  # pragma: no cover - would falsify setup
        raise GridViolation(f"theta1(k={k}) off integer grid: {exc}") from exc
