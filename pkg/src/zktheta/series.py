"""Exact truncated power series on a fractional exponent grid.

A :class:`FracSeries` stores coefficients of t^(e/D) for integer e >= 0 on a
dense grid, with everything below an explicit truncation T kept exactly.
Coefficients are Python ints whenever possible and ``fractions.Fraction``
otherwise; no floating point enters anywhere.

The variable t is q^2 throughout the package.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    GridViolation,
    NegativeExponent,
    OutOfTruncation,
    ZeroConstantTerm,
)


def _norm(c):
    """Collapse integral Fractions back to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _slots(D: int, T: Fraction) -> int:
    """Number of stored grid indices: all e with e/D < T."""
    td = T * D
    if td.denominator == 1:
        return max(td.numerator, 0)
    return max(math.ceil(td), 0)


class FracSeries:
    """Truncated exact series sum_e c_e * t^(e/D), kept for e/D < T.

    Immutable by convention: operations return new objects and never write
    into an existing coefficient list.
    """

    __slots__ = ("D", "T", "coeffs")

    def __init__(self, D: int, T, coeffs):
        if D < 1:
            raise ValueError("grid denominator must be >= 1")
        T = Fraction(T)
        if T <= 0:
            raise ValueError("truncation must be positive")
        ns = _slots(D, T)
        if len(coeffs) > ns:
            coeffs = coeffs[:ns]
        self.D = D
        self.T = T
        self.coeffs = [_norm(c) for c in coeffs]

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_terms(cls, D: int, T, terms) -> "FracSeries":
        """Build from {grid_index: coefficient} (indices on the e grid)."""
        T = Fraction(T)
        ns = _slots(D, T)
        coeffs = [0] * ns
        for e, c in terms.items():
            if 0 <= e < ns:
                coeffs[e] = coeffs[e] + c
        return cls(D, T, coeffs)

    @classmethod
    def constant(cls, value, T, D: int = 1) -> "FracSeries":
        return cls.from_terms(D, T, {0: value})

    @classmethod
    def monomial(cls, coeff, exponent, T, D: int = 1) -> "FracSeries":
        """coeff * t^exponent; exponent must land on the e/D grid."""
        exponent = Fraction(exponent)
        e = exponent * D
        if e.denominator != 1 or e < 0:
            raise GridViolation(f"exponent {exponent} not on grid 1/{D}")
        return cls.from_terms(D, T, {e.numerator: coeff})

    # -- basic queries -----------------------------------------------------

    def coeff_index(self, e: int):
        """Coefficient at grid index e (0 if beyond stored length)."""
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return 0

    def coeff_at(self, exponent):
        """Exact coefficient of t^exponent; 0 for off-grid exponents < T."""
        exponent = Fraction(exponent)
        if exponent >= self.T:
            raise OutOfTruncation(f"exponent {exponent} >= truncation {self.T}")
        e = exponent * self.D
        if e.denominator != 1 or e < 0:
            return 0
        return self.coeff_index(e.numerator)

    def nonzero_terms(self):
        """List of (grid_index, coefficient) with coefficient != 0."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) for c in self.coeffs)

    # -- grid management ---------------------------------------------------

    def regrid(self, D2: int) -> "FracSeries":
        """Re-express on grid denominator D2.

        Refining (D | D2) always works; coarsening requires every nonzero
        coefficient to sit on the coarser grid, else GridViolation.
        """
        if D2 == self.D:
            return self
        if D2 % self.D == 0:
            step = D2 // self.D
            ns = _slots(D2, self.T)
            coeffs = [0] * ns
            for e, c in enumerate(self.coeffs):
                if c and e * step < ns:
                    coeffs[e * step] = c
            return FracSeries(D2, self.T, coeffs)
        if self.D % D2 == 0:
            step = self.D // D2
            ns = _slots(D2, self.T)
            coeffs = [0] * ns
            for e, c in enumerate(self.coeffs):
                if not c:
                    continue
                if e % step:
                    raise GridViolation(
                        f"coefficient at t^{Fraction(e, self.D)} off grid 1/{D2}"
                    )
                if e // step < ns:
                    coeffs[e // step] = c
            return FracSeries(D2, self.T, coeffs)
        raise GridViolation(f"grids 1/{self.D} and 1/{D2} are incompatible")

    def truncate(self, T) -> "FracSeries":
        T = Fraction(T)
        if T >= self.T:
            return self
        return FracSeries(self.D, T, self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        return linear_combine(self, _coerce(other, self), 1, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return linear_combine(self, _coerce(other, self), 1, -1)

    def __rsub__(self, other):
        return linear_combine(_coerce(other, self), self, 1, -1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, FracSeries):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, m: int):
        return power(self, m)

    def scale(self, factor) -> "FracSeries":
        if factor == 1:
            return self
        return FracSeries(self.D, self.T, [c * factor if c else 0 for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        a, b = _align(self, other)
        la, lb = len(a.coeffs), len(b.coeffs)
        for e in range(max(la, lb)):
            if a.coeff_index(e) != b.coeff_index(e):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        shown = []
        for e, c in self.nonzero_terms():
            shown.append(f"{c}*t^({e}/{self.D})")
            if len(shown) >= 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"FracSeries(D={self.D}, T={self.T}: {body})"

    # -- serialization (golden-file format) --------------------------------

    def dumps(self) -> str:
        lines = [f"fracseries {self.D} {self.T}"]
        for e, c in self.nonzero_terms():
            if isinstance(c, Fraction):
                lines.append(f"{e}/{self.D}\t{c.numerator}/{c.denominator}")
            else:
                lines.append(f"{e}/{self.D}\t{c}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "FracSeries":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if head[0] != "fracseries":
            raise ValueError("not a fracseries dump")
        D = int(head[1])
        T = Fraction(head[2])
        terms = {}
        for ln in lines[1:]:
            expo, val = ln.split("\t")
            num, den = expo.split("/")
            if int(den) != D:
                raise ValueError(f"exponent denominator {den} != grid {D}")
            terms[int(num)] = _norm(Fraction(val))
        return cls.from_terms(D, T, terms)


def _coerce(x, like: FracSeries) -> FracSeries:
    if isinstance(x, FracSeries):
        return x
    return FracSeries.constant(x, like.T, like.D)


def _align(a: FracSeries, b: FracSeries):
    """Common grid (lcm of denominators); truncations left untouched."""
    if a.D == b.D:
        return a, b
    D = math.lcm(a.D, b.D)
    return a.regrid(D), b.regrid(D)


def linear_combine(a: FracSeries, b: FracSeries, alpha, beta) -> FracSeries:
    """alpha*a + beta*b, exact; truncation = min(T_a, T_b)."""
    a, b = _align(a, b)
    T = min(a.T, b.T)
    ns = _slots(a.D, T)
    out = [0] * ns
    if alpha:
        for e, c in enumerate(a.coeffs[:ns]):
            if c:
                out[e] = alpha * c
    if beta:
        for e, c in enumerate(b.coeffs[:ns]):
            if c:
                out[e] = out[e] + beta * c
    return FracSeries(a.D, T, out)


def mul(a: FracSeries, b: FracSeries) -> FracSeries:
    """Exact Cauchy product truncated at min(T_a, T_b).

    Schoolbook over the nonzero terms of the sparser factor; the series in
    this package are either genuinely dense (where schoolbook is fine at
    the degrees in scope) or very sparse on a refined grid (where skipping
    zeros is the whole game).
    """
    a, b = _align(a, b)
    T = min(a.T, b.T)
    ns = _slots(a.D, T)
    out = [0] * ns
    ta = a.nonzero_terms()
    tb = b.nonzero_terms()
    if len(tb) < len(ta):
        ta, tb = tb, ta
        outer, inner = b, a
    else:
        outer, inner = a, b
    inner_coeffs = inner.coeffs
    for ea, ca in ta:
        if ea >= ns:
            break
        lim = min(len(inner_coeffs), ns - ea)
        for eb in range(lim):
            cb = inner_coeffs[eb]
            if cb:
                out[ea + eb] = out[ea + eb] + ca * cb
    return FracSeries(a.D, T, out)


def power(a: FracSeries, m: int) -> FracSeries:
    """a**m by binary powering; power(a, 0) == 1."""
    if m < 0:
        raise ValueError("negative powers: invert first")
    result = FracSeries.constant(1, a.T, a.D)
    base = a
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def invert(a: FracSeries) -> FracSeries:
    """Multiplicative inverse up to truncation; needs a(0) != 0."""
    c0 = a.coeff_index(0)
    if c0 == 0:
        raise ZeroConstantTerm("cannot invert a series with a(0) = 0")
    ns = _slots(a.D, a.T)
    inv0 = 1 if c0 == 1 else Fraction(1, 1) / c0
    out = [0] * ns
    out[0] = _norm(inv0)
    terms = [(e, c) for e, c in a.nonzero_terms() if e > 0]
    for e in range(1, ns):
        acc = 0
        for ea, ca in terms:
            if ea > e:
                break
            ce = out[e - ea]
            if ce:
                acc = acc + ca * ce
        if acc:
            out[e] = _norm(-acc * inv0) if c0 != 1 else -acc
    return FracSeries(a.D, a.T, out)


def differentiate(a: FracSeries) -> FracSeries:
    """d/dt; c*t^(e/D) -> c*(e/D)*t^(e/D - 1); truncation drops by 1.

    A nonzero term with 0 < e/D < 1 has no home on the nonnegative grid;
    that raises NegativeExponent rather than silently dropping weight.
    (The constant term differentiates to zero and is fine.)
    """
    D = a.D
    T2 = a.T - 1
    if T2 <= 0:
        T2 = Fraction(1, D)  # keep a valid (empty-able) window
    ns = _slots(D, T2)
    out = [0] * ns
    for e, c in a.nonzero_terms():
        if not c:
            continue
        if e == 0:
            continue
        if e < D:
            raise NegativeExponent(
                f"term t^{Fraction(e, D)} differentiates below t^0"
            )
        e2 = e - D
        if e2 < ns:
            out[e2] = _norm(c * Fraction(e, D))
    return FracSeries(D, T2, out)


def euler_scaled(a: FracSeries) -> FracSeries:
    """D * t * d/dt: maps c*t^(e/D) to (c*e)*t^(e/D).

    Same grid, same truncation, integer coefficients stay integer.  Used to
    form D*t*(a*b' - a'*b) = a*euler_scaled(b) - euler_scaled(a)*b without
    ever leaving the nonnegative exponent grid.
    """
    return FracSeries(a.D, a.T, [c * e if c else 0 for e, c in enumerate(a.coeffs)])
