"""Bessel functions J_k of the first kind for small integer and half-integer
orders, plus the sphere-related constants the radial reductions need.

Orders are passed as ``twice_k`` (an integer, so k = twice_k/2 is exact for
half-integers).  Supported range is -1 <= twice_k <= 8, i.e. k from -1/2 to 4,
which covers every order the kernel formulas use in dimensions m <= 4 with
headroom for recurrence and derivative checks.

Branch structure (chosen for <= 1e-12 absolute accuracy in doubles):

* t < 8: ascending power series of the scaled function t^{-k} J_k(t).  The
  alternating terms peak near (t^2/4)^j / (j!)^2, which at t = 8 amplifies
  rounding by only ~1e3, keeping the sum near 1e-13.
* 8 <= t < 30, integer k: backward (Miller) recurrence normalized by
  J_0 + 2 J_2 + 2 J_4 + ... = 1.  The plain series loses too many digits to
  cancellation here, and the asymptotic expansion has not converged yet.
* t >= 30, integer k: Hankel asymptotic expansion
  J_k(t) = sqrt(2/(pi t)) (P cos w - Q sin w), w = t - k pi/2 - pi/4,
  truncated at the smallest term; for k <= 4 the smallest term is far below
  1e-15 once t >= 30.
* t >= 8, half-integer k: exact closed trigonometric forms, built by upward
  recurrence from J_{-1/2} = sqrt(2/(pi t)) cos t and
  J_{1/2} = sqrt(2/(pi t)) sin t.  Upward recurrence is only unstable for
  t << k, which the series branch covers.

All evaluators are vectorized over t; the scalar entry points wrap the array
ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

MAX_TWICE_K = 8

_SERIES_CUTOFF = 8.0
_ASYMPTOTIC_CUTOFF = 30.0


def _check_order(twice_k):
    if not isinstance(twice_k, (int, np.integer)):
        raise DomainError(f"order must be given as an integer twice_k, got {twice_k!r}")
    if not -1 <= twice_k <= MAX_TWICE_K:
        raise DomainError(
            f"unsupported order k = {twice_k}/2; supported twice_k range is [-1, {MAX_TWICE_K}]"
        )
    return int(twice_k)


def omega_constant(twice_k):
    """Weight-normalization constant Gamma(k + 1/2) * Gamma(1/2)."""
    twice_k = _check_order(twice_k)
    return math.exp(math.lgamma(twice_k / 2.0 + 0.5) + math.lgamma(0.5))


def sigma_constant(m):
    """Half the surface area of the unit m-sphere: pi^{(m+1)/2} / Gamma((m+1)/2)."""
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise DomainError(f"dimension must be a positive integer, got {m!r}")
    return math.pi ** ((m + 1) / 2.0) / math.gamma((m + 1) / 2.0)


@dataclass(frozen=True)
class GeometricConstants:
    """Dimension-dependent constants shared by the kernel formulas."""

    m: int
    sigma_m: float
    omega: dict

    @classmethod
    def for_dimension(cls, m):
        needed = (m - 2, m - 1, m, m + 1)
        return cls(
            m=int(m),
            sigma_m=sigma_constant(m),
            omega={tk: omega_constant(tk) for tk in needed},
        )


# --- branch evaluators (all take float arrays, return scaled values) --------


def _scaled_series(twice_k, t):
    """t^{-k} J_k(t) by the ascending series; accurate for t < 8."""
    k = twice_k / 2.0
    q = 0.25 * t * t
    total = np.ones_like(t)
    term = np.ones_like(t)
    for j in range(1, 40):
        term = term * (-q) / (j * (j + k))
        total = total + term
        if np.all(np.abs(term) < 1e-18):
            break
    return total * math.exp(-k * math.log(2.0) - math.lgamma(k + 1.0))


def _miller_integer(twice_k, t):
    """J_k(t) for integer k via normalized backward recurrence; t in [8, 30)."""
    k = twice_k // 2
    t = np.asarray(t, dtype=np.float64)
    tmax = float(np.max(t))
    start = int(tmax + 20 + 10.0 * tmax ** (1.0 / 3.0))
    if start % 2:
        start += 1
    jp = np.zeros_like(t)
    jc = np.full_like(t, 1e-30)
    norm = np.zeros_like(t)
    val = np.zeros_like(t)
    for n in range(start, 0, -1):
        jm = (2.0 * n / t) * jc - jp
        jp = jc
        jc = jm
        if n - 1 == k:
            val = jc.copy()
        if (n - 1) % 2 == 0:
            norm = norm + (jc if n - 1 == 0 else 2.0 * jc)
        big = np.abs(jc) > 1e100
        if np.any(big):
            scale = np.where(big, 1e-100, 1.0)
            jc = jc * scale
            jp = jp * scale
            norm = norm * scale
            val = val * scale
    return val / norm


def _hankel_integer(twice_k, t):
    """J_k(t) for integer k <= 4 via the large-argument asymptotic expansion."""
    k = twice_k // 2
    mu = 4.0 * k * k
    inv_t = 1.0 / t
    p = np.ones_like(t)
    q = np.zeros_like(t)
    a = np.ones_like(t)
    prev = np.full_like(t, np.inf)
    for n in range(1, 40):
        a = a * (mu - (2 * n - 1) ** 2) / (8.0 * n) * inv_t
        mag = np.max(np.abs(a))
        if mag >= np.max(prev):
            break  # smallest term reached; asymptotic optimum
        prev = np.abs(a)
        half = (n // 2) % 2
        sign = -1.0 if half else 1.0
        if n % 2 == 0:
            p = p + sign * a
        else:
            q = q + (a if n % 4 == 1 else -a)
        if mag < 1e-18:
            break
    w = t - k * (math.pi / 2.0) - math.pi / 4.0
    return np.sqrt(2.0 / (math.pi * t)) * (p * np.cos(w) - q * np.sin(w))


def _trig_half_integer(twice_k, t):
    """J_k(t) for half-integer k by upward recurrence from the trig forms."""
    amp = np.sqrt(2.0 / (math.pi * t))
    jm = amp * np.cos(t)  # J_{-1/2}
    jc = amp * np.sin(t)  # J_{+1/2}
    if twice_k == -1:
        return jm
    order = 0.5
    while order < twice_k / 2.0:
        jm, jc = jc, (2.0 * order / t) * jc - jm
        order += 1.0
    return jc


def bessel_scaled_array(twice_k, t):
    """Vectorized t^{-k} J_k(t), continuous at t = 0."""
    twice_k = _check_order(twice_k)
    t = np.asarray(t, dtype=np.float64)
    if t.ndim == 0:
        return bessel_scaled_array(twice_k, t[None])[0]
    if np.any(t < 0):
        raise DomainError("bessel argument must be nonnegative")
    out = np.empty_like(t)
    k = twice_k / 2.0

    small = t < _SERIES_CUTOFF
    if np.any(small):
        out[small] = _scaled_series(twice_k, t[small])

    large = ~small
    if np.any(large):
        tl = t[large]
        if twice_k % 2 == 0:
            mid = tl < _ASYMPTOTIC_CUTOFF
            jl = np.empty_like(tl)
            if np.any(mid):
                jl[mid] = _miller_integer(twice_k, tl[mid])
            if np.any(~mid):
                jl[~mid] = _hankel_integer(twice_k, tl[~mid])
        else:
            jl = _trig_half_integer(twice_k, tl)
        out[large] = jl * tl ** (-k)
    return out


def bessel_j(twice_k, t):
    """J_k(t) for k = twice_k/2, t >= 0.

    Absolute error <= 1e-12 over [0, 1000]; relative error <= 1e-12 away from
    the zeros of J_k.  J_{-1/2} diverges at t = 0 and returns +inf there.
    """
    twice_k = _check_order(twice_k)
    t = float(t)
    if t < 0:
        raise DomainError("bessel argument must be nonnegative")
    if t == 0.0:
        if twice_k < 0:
            return math.inf
        return 1.0 if twice_k == 0 else 0.0
    scaled = float(bessel_scaled_array(twice_k, np.float64(t)))
    return scaled * t ** (twice_k / 2.0)


def bessel_scaled(twice_k, t):
    """t^{-k} J_k(t) with the removable limit 1/(2^k Gamma(k+1)) at t = 0."""
    twice_k = _check_order(twice_k)
    t = float(t)
    if t < 0:
        raise DomainError("bessel argument must be nonnegative")
    return float(bessel_scaled_array(twice_k, np.float64(t)))


def derivative_identity_check(twice_k, alpha, t, step=1e-4):
    """Residual of d/dt (t^k J_k(alpha t)) = alpha t^k J_{k-1}(alpha t).

    The left side is a central difference with the given step, so a correct
    implementation shows an O(step^2) residual.  Needs k >= 1/2 so that the
    right side stays within the supported order range.
    """
    twice_k = _check_order(twice_k)
    if twice_k < 1:
        raise DomainError(
            "derivative identity needs k >= 1/2 so that order k-1 is supported"
        )
    t = float(t)
    if t <= 0:
        raise DomainError("derivative identity check requires t > 0")
    alpha = float(alpha)
    if alpha < 0:
        raise DomainError("derivative identity check requires alpha >= 0")
    k = twice_k / 2.0

    def lhs_fn(tt):
        return tt ** k * bessel_j(twice_k, alpha * tt)

    lhs = (lhs_fn(t + step) - lhs_fn(t - step)) / (2.0 * step)
    if alpha == 0.0:
        rhs = 0.0  # J_{k-1}(0) may diverge but carries weight alpha = 0
    else:
        rhs = alpha * t ** k * bessel_j(twice_k - 2, alpha * t)
    return abs(lhs - rhs)
