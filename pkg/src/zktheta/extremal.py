"""Extremal theta-series coefficients for Type II Z_2k-codes.

The chain is: theta0 = theta1^j is the theta series of the sublattice
sqrt(2k)*Z^n inside the Construction A lattice; b_{2s} are the coefficients
of E4^{-j} * theta0 expanded in powers of u = Delta / E4^3; the putative
extremal theta series is sum_{s<=mu} b_{2s} E4^{j-3s} Delta^s, and its
forced tail coefficients beta1 = beta*_{2(mu+1)}, beta2 = beta*_{2(mu+2)}
decide existence.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InvalidLength, PrecisionTooSmall
from .modforms import delta24, eisenstein_e4, theta1, theta_f
from .series import (
    FracSeries,
    differentiate,
    euler_scaled,
    invert,
    linear_combine,
    mul,
    power,
)


def _check_length(n: int) -> None:
    if n <= 0 or n % 8:
        raise InvalidLength(f"length {n} is not a positive multiple of 8")


def shape(n: int):
    """(j, mu, nu) with n = 8j, j = 3*mu + nu, nu in {0,1,2}."""
    _check_length(n)
    j = n // 8
    mu = n // 24
    nu = j - 3 * mu
    return j, mu, nu


@dataclass
class ExtremalProfile:
    n: int
    k: int
    j: int
    mu: int
    nu: int
    b: list  # b_{2s}, s = 0..mu+2, exact integers
    beta1: int
    beta2: int

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "j": self.j,
            "mu": self.mu,
            "nu": self.nu,
            "b": [str(v) for v in self.b],
            "beta1": str(self.beta1),
            "beta2": str(self.beta2),
        }


@dataclass
class PositivityReport:
    n: int
    k: int
    max_exponent: int  # checked up to this t-exponent (= mu)
    min_coeff: object  # smallest coefficient seen in the checked window
    min_exponent: Fraction
    verdict: bool

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max_exponent": self.max_exponent,
            "min_coeff": str(self.min_coeff),
            "min_exponent": str(self.min_exponent),
            "verdict": self.verdict,
        }


# ---------------------------------------------------------------------------
# raw-list helpers (hot path: plain int lists on the integer grid)
# ---------------------------------------------------------------------------

def _mul_trunc(a: list, b: list, ns: int) -> list:
    """Truncated Cauchy product of raw coefficient lists."""
    out = [0] * ns
    if len(a) > len(b):
        a, b = b, a
    for ea in range(min(len(a), ns)):
        ca = a[ea]
        if ca:
            lim = min(len(b), ns - ea)
            for eb in range(lim):
                cb = b[eb]
                if cb:
                    out[ea + eb] += ca * cb
    return out


def _u_coeffs(ns: int) -> list:
    """u = Delta / E4^3 as a raw list (u = t - 744 t^2 + ...)."""
    e4inv = invert(eisenstein_e4(ns))
    u = mul(delta24(ns), power(e4inv, 3))
    c = list(u.coeffs) + [0] * (ns - len(u.coeffs))
    return c[:ns]


def _u_powers(ns: int, count: int) -> list:
    """[u^0, u^1, ..., u^(count-1)] as raw lists of length ns."""
    pows = [[1] + [0] * (ns - 1)]
    if count > 1:
        u = _u_coeffs(ns)
        for _ in range(1, count):
            pows.append(_mul_trunc(pows[-1], u, ns))
    return pows


def _phi_coeffs(n: int, k: int, ns: int) -> list:
    """phi = (theta1 * E4^{-1})^j as a raw list of length ns."""
    j = n // 8
    psi = mul(theta1(k, ns), invert(eisenstein_e4(ns)))
    phi = power(psi, j)
    c = list(phi.coeffs) + [0] * (ns - len(phi.coeffs))
    return c[:ns]


def _extract_b(phi: list, upows: list, count: int) -> list:
    """Peel off b_{2s} by coefficient matching against powers of u.

    Valid because u = t + O(t^2): after subtracting b_{2r} u^r for r < s the
    residual starts at t^s with coefficient b_{2s}.
    """
    r = list(phi[:count])
    b = []
    for s in range(count):
        bs = r[s]
        b.append(bs)
        if bs:
            us = upows[s]
            for e in range(s, count):
                ce = us[e]
                if ce:
                    r[e] -= bs * ce
    return b


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def b_coefficients(n: int, k: int, extra: int = 0) -> list:
    """b_{2s} for s = 0..mu+extra, by matching against powers of Delta/E4^3."""
    _check_length(n)
    if extra < 0:
        raise ValueError("extra must be >= 0")
    _, mu, _ = shape(n)
    count = mu + extra + 1
    upows = _u_powers(count, count)
    phi = _phi_coeffs(n, k, count)
    return _extract_b(phi, upows, count)


def b_coefficients_burmann(n: int, k: int, extra: int = 0) -> list:
    """Same contract as b_coefficients via the Buermann derivative form.

    b_{2s} = (1/s) * [t^(s-1)] ( phi' * (t*E4^3/Delta)^s ) for s >= 1,
    with phi = E4^{-j} theta0; an independent second path used as an oracle
    against the matching extraction.
    """
    _check_length(n)
    if extra < 0:
        raise ValueError("extra must be >= 0")
    _, mu, _ = shape(n)
    count = mu + extra + 1
    ns = count + 1  # phi' loses one term
    e4 = eisenstein_e4(ns)
    psi = mul(theta1(k, ns), invert(e4))
    phi = power(psi, n // 8)
    dphi = differentiate(phi)
    # v = t * E4^3 / Delta; Delta/t has constant term 1
    delta_over_t = FracSeries(1, ns - 1, delta24(ns).coeffs[1:])
    v = mul(power(e4, 3), invert(delta_over_t))
    b = [phi.coeff_index(0)]
    vpow = FracSeries.constant(1, v.T)
    for s in range(1, count):
        vpow = mul(vpow, v)
        c = mul(dphi, vpow).coeff_index(s - 1)
        bs = Fraction(c, s)
        if bs.denominator != 1:
            raise ArithmeticError(f"non-integral b at s={s}: {bs}")
        b.append(bs.numerator)
    return b


def beta_stars(n: int, k: int):
    """(beta1, beta2) = forced tail coefficients of the extremal series."""
    j, mu, nu = shape(n)
    b = b_coefficients(n, k, extra=2)
    return _betas_from_b(b, mu, nu)


def _betas_from_b(b: list, mu: int, nu: int):
    beta1 = -b[mu + 1]
    beta2 = -b[mu + 2] + b[mu + 1] * (24 * mu - 240 * nu + 744)
    return beta1, beta2


def profile(n: int, k: int) -> ExtremalProfile:
    """Full per-(n, k) record: shape, b-list, beta values."""
    j, mu, nu = shape(n)
    b = b_coefficients(n, k, extra=2)
    beta1, beta2 = _betas_from_b(b, mu, nu)
    return ExtremalProfile(n=n, k=k, j=j, mu=mu, nu=nu, b=b,
                           beta1=beta1, beta2=beta2)


def extremal_theta(n: int, k: int, T) -> FracSeries:
    """sum_{s<=mu} b_{2s} E4^{j-3s} Delta^s, truncated at T."""
    j, mu, nu = shape(n)
    T = Fraction(T)
    if T <= mu + 2:
        raise PrecisionTooSmall(f"need T > mu+2 = {mu + 2}, got {T}")
    b = b_coefficients(n, k)
    e4 = eisenstein_e4(T)
    delta = delta24(T)
    dpows = [FracSeries.constant(1, T)]
    for _ in range(mu):
        dpows.append(mul(dpows[-1], delta))
    e4cube = power(e4, 3)
    epow = power(e4, nu)  # E4^(j-3s) at s = mu
    acc = None
    for s in range(mu, -1, -1):
        term = mul(epow, dpows[s]).scale(b[s])
        acc = term if acc is None else linear_combine(acc, term, 1, 1)
        if s:
            epow = mul(epow, e4cube)
    return acc


def eq3_value(s: int, k: int, y: int, xs) -> Fraction:
    """((s+2)*(1+2ky)^2 - l) / 4k with l the summed square norm.

    xs supplies the s+1 free lattice coordinates; positive whenever l < s+2.
    """
    xs = list(xs)
    if len(xs) != s + 1:
        raise ValueError(f"need s+1 = {s + 1} coordinates, got {len(xs)}")
    head = (1 + 2 * k * y) ** 2
    l = head + sum((2 * k * x) ** 2 for x in xs)
    return Fraction((s + 2) * head - l, 4 * k)


# ---------------------------------------------------------------------------
# positivity certificate (Theorem 1.1 machinery)
# ---------------------------------------------------------------------------

def _theta_bracket(k: int, T):
    """t * (theta1 * E4' - theta1' * E4) on the integer grid (exact ints)."""
    e4 = eisenstein_e4(T)
    th1 = theta1(k, T)
    return linear_combine(
        mul(th1, euler_scaled(e4)), mul(euler_scaled(th1), e4), 1, -1
    ), th1


def _f_bracket(k: int, i: int, T):
    """4k * t * (f0 * f_i' - f0' * f_i) on the 1/(4k) grid (exact ints)."""
    f0 = theta_f(k, 0, T)
    fi = theta_f(k, i, T)
    return linear_combine(
        mul(f0, euler_scaled(fi)), mul(euler_scaled(f0), fi), 1, -1
    ), f0


def positivity_certificate(n: int, k: int) -> PositivityReport:
    """Check the positivity that drives the d_E bound at this (n, k).

    Two layers, both exact:
      * t * theta1^(j-1) * (theta1 E4' - theta1' E4): every integer
        t-exponent 1..mu+1 must carry a strictly positive coefficient
        (this is the series the proof needs positive up to exponent mu).
      * for each i = 1..k, the scaled combination
        4k * t * f0^(8j-1) * (f0 f_i' - f0' f_i) on the 1/(4k) grid:
        no coefficient with exponent <= mu+1 may be negative, and the
        leading exponent i^2/(4k) must be positive.  Exponents absent from
        the underlying lattice sum carry coefficient zero and do not fail
        the certificate.
    """
    j, mu, nu = shape(n)
    T = mu + 2
    bracket, th1 = _theta_bracket(k, T)
    s1 = mul(power(th1, j - 1), bracket)
    min_c = None
    min_e = None
    ok = True
    for e in range(1, mu + 2):
        c = s1.coeff_index(e)
        if min_c is None or c < min_c:
            min_c, min_e = c, Fraction(e)
        if c <= 0:
            ok = False
    D = 4 * k
    for i in range(1, k + 1):
        brk, f0 = _f_bracket(k, i, T)
        pi = mul(power(f0, 8 * j - 1), brk)
        base = i * i  # grid index of the leading exponent i^2/4k
        if pi.coeff_index(base) <= 0:
            ok = False
        limit = D * (mu + 1)
        for e, c in pi.nonzero_terms():
            if e > limit:
                break
            if min_c is None or c < min_c:
                min_c, min_e = c, Fraction(e, D)
            if c < 0:
                ok = False
    return PositivityReport(n=n, k=k, max_exponent=mu, min_coeff=min_c,
                            min_exponent=min_e, verdict=ok)


# ---------------------------------------------------------------------------
# sweep drivers (incremental in j, deterministic merges)
# ---------------------------------------------------------------------------

@dataclass
class ScanRow:
    n: int
    beta1: int
    beta2: int


@dataclass
class ScanResult:
    k: int
    rows: list
    first_negative: Optional[int]  # least n with beta2 < 0, if any

    def to_jsonable(self) -> dict:
        return {
            "k": self.k,
            "first_negative": self.first_negative,
            "rows": [
                {"n": r.n, "beta1": str(r.beta1), "beta2": str(r.beta2)}
                for r in self.rows
            ],
        }


def _scan_chunk(k: int, ns_list: list) -> list:
    """beta values for an ascending run of lengths, one psi-multiply per step."""
    if not ns_list:
        return []
    mu_max = ns_list[-1] // 24
    slots = mu_max + 3
    upows = _u_powers(slots, slots)
    e4inv = invert(eisenstein_e4(slots))
    psi = mul(theta1(k, slots), e4inv)
    psi_c = (list(psi.coeffs) + [0] * slots)[:slots]
    j = ns_list[0] // 8
    phi = power(psi, j)
    phi_c = (list(phi.coeffs) + [0] * slots)[:slots]
    rows = []
    prev_n = ns_list[0]
    for n in ns_list:
        while prev_n < n:
            phi_c = _mul_trunc(phi_c, psi_c, slots)
            prev_n += 8
        _, mu, nu = shape(n)
        b = _extract_b(phi_c, upows, mu + 3)
        beta1, beta2 = _betas_from_b(b, mu, nu)
        rows.append(ScanRow(n=n, beta1=beta1, beta2=beta2))
    return rows


def crossover_scan(k: int, n_from: int, n_to: int,
                   workers: int = 1) -> ScanResult:
    """Exact beta1/beta2 for every n = 0 mod 8 in [n_from, n_to].

    Reports the least n with beta2 < 0 (None if no sign change in range).
    Worker count only affects wall time; the merged table is sorted by n.
    """
    _check_length(n_from)
    if n_to < n_from:
        raise ValueError("empty range")
    ns_list = list(range(n_from, n_to + 1, 8))
    if workers <= 1 or len(ns_list) < 2 * workers:
        rows = _scan_chunk(k, ns_list)
    else:
        size = (len(ns_list) + workers - 1) // workers
        chunks = [ns_list[i:i + size] for i in range(0, len(ns_list), size)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_chunk, [k] * len(chunks), chunks))
        rows = [r for part in parts for r in part]
    rows.sort(key=lambda r: r.n)
    first = next((r.n for r in rows if r.beta2 < 0), None)
    return ScanResult(k=k, rows=rows, first_negative=first)


@dataclass
class Theorem1Row:
    n: int
    beta1: int
    positivity: bool


def theorem1_sweep(k: int, n_max: int, workers: int = 1) -> list:
    """beta1 > 0 plus positivity certificate for all n = 0 mod 8 up to n_max.

    Incremental over j so the whole sweep costs one series multiply per
    step per maintained power; results identical to the per-n operations.
    """
    _check_length(n_max)
    ns_list = list(range(8, n_max + 1, 8))
    if workers <= 1 or len(ns_list) < 2 * workers:
        return _theorem1_chunk(k, ns_list)
    size = (len(ns_list) + workers - 1) // workers
    chunks = [ns_list[i:i + size] for i in range(0, len(ns_list), size)]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_theorem1_chunk, [k] * len(chunks), chunks))
    rows = [r for part in parts for r in part]
    rows.sort(key=lambda r: r.n)
    return rows


def _theorem1_chunk(k: int, ns_list: list) -> list:
    if not ns_list:
        return []
    mu_max = ns_list[-1] // 24
    slots = mu_max + 3
    # beta1 track
    upows = _u_powers(slots, slots)
    e4inv = invert(eisenstein_e4(slots))
    psi = mul(theta1(k, slots), e4inv)
    psi_c = (list(psi.coeffs) + [0] * slots)[:slots]
    j0 = ns_list[0] // 8
    phi_c = (list(power(psi, j0).coeffs) + [0] * slots)[:slots]
    # positivity track, integer grid part
    T = mu_max + 2
    bracket, th1 = _theta_bracket(k, T)
    th1pow = power(th1, j0 - 1)
    # positivity track, 1/(4k) grid part
    fparts = []
    for i in range(1, k + 1):
        brk, f0 = _f_bracket(k, i, T)
        fparts.append(brk)
    f0 = theta_f(k, 0, T)
    f0pow = power(f0, 8 * j0 - 1)
    f0_step = power(f0, 8)
    rows = []
    prev_n = ns_list[0]
    for n in ns_list:
        while prev_n < n:
            phi_c = _mul_trunc(phi_c, psi_c, slots)
            th1pow = mul(th1pow, th1)
            f0pow = mul(f0pow, f0_step)
            prev_n += 8
        _, mu, nu = shape(n)
        b = _extract_b(phi_c, upows, mu + 2)
        beta1 = -b[mu + 1]
        ok = True
        s1 = mul(th1pow, bracket)
        for e in range(1, mu + 2):
            if s1.coeff_index(e) <= 0:
                ok = False
        limit = 4 * k * (mu + 1)
        for i, brk in enumerate(fparts, start=1):
            pi = mul(f0pow, brk)
            if pi.coeff_index(i * i) <= 0:
                ok = False
            if any(c < 0 for e, c in pi.nonzero_terms() if e <= limit):
                ok = False
        rows.append(Theorem1Row(n=n, beta1=beta1, positivity=ok))
    return rows
