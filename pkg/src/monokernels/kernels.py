"""Monogenic kernels on strip and half-space domains.

All kernels here are specializations of one frequency-side template: a radial
weight w(|xi|) times the monogenic plane wave

    e(x, xi) = e^{i<x_vec, xi>} ( e^{-x0 |xi|} chi_+(xi) + e^{x0 |xi|} chi_-(xi) ),
    chi_pm(xi) = (1 pm i xi/|xi|) / 2,

integrated over frequency space with the (2 pi)^{-m} normalization.  Every
two-argument kernel depends on its arguments only through the combined
para-vector u = w + conj(x), so each evaluator forms u once and hands the pair
(u0, |u_vec|) to the radial reduction engine:

    band-limited (Paley-Wiener) kernel   w = indicator of B(0, pi)
    strip Szego kernel                   w = e^{-2a|xi|}
    strip Bergman kernel                 w = 2|xi| / (e^{2a|xi|} - e^{-2a|xi|})
    half-space Bergman kernels           w = 2|xi| e^{-2a|xi|}, one chi channel

The strip Szego kernel also has a closed form: the difference of Cauchy
kernels E(u + 2a) - E(u - 2a) with E(x) = conj(x) / (2 sigma_m |x|^{m+1}),
which is what the closed evaluator returns and what the integral evaluator is
tested against.  Values are para-vector valued multivectors; quadrature-backed
evaluators return a KernelEvalReport carrying an absolute error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bessel import sigma_constant
from .clifford import Multivector, ParaVector, algebra
from .errors import DomainError, OracleRefusalError, StripViolationError
from .radial import (
    RadialQuadrature,
    ball_indicator,
    bergman_halfspace,
    bergman_weight,
    exp_decay,
    radial_integral_with_error,
)

BOUNDARY_GUARD = 1e-9
_CUBE_AXIS_CAP = 1024

METHOD_CLOSED = "closed_form"
METHOD_RADIAL = "radial_bessel"
METHOD_TENSOR = "tensor_oracle"


@dataclass(frozen=True)
class StripGeometry:
    """Dimension m and strip half-width a: the domain is |x0| < half_width."""

    m: int
    half_width: float

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or not 1 <= self.m <= 4:
            raise DomainError(f"dimension m must be an integer in [1, 4], got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "half_width", float(self.half_width))
        if not self.half_width > 0:
            raise DomainError(f"strip half-width must be positive, got {self.half_width!r}")

    def check_strip_offset(self, u0):
        """Reject |u0| >= 2a (minus a guard band where kernels blow up)."""
        limit = 2.0 * self.half_width
        if abs(u0) >= limit - BOUNDARY_GUARD:
            raise StripViolationError(
                f"combined height offset |w0 + x0| = {abs(u0):.12g} is not inside the "
                f"strip condition |w0 + x0| < 2a = {limit:.12g} (guard band {BOUNDARY_GUARD:g})"
            )

    def check_halfspace_offset(self, sign, u0):
        limit = 2.0 * self.half_width
        if sign > 0:
            if u0 <= -limit + BOUNDARY_GUARD:
                raise StripViolationError(
                    f"combined height offset w0 + x0 = {u0:.12g} violates the half-space "
                    f"condition w0 + x0 > -2a = {-limit:.12g}"
                )
        else:
            if u0 >= limit - BOUNDARY_GUARD:
                raise StripViolationError(
                    f"combined height offset w0 + x0 = {u0:.12g} violates the half-space "
                    f"condition w0 + x0 < 2a = {limit:.12g}"
                )


@dataclass(frozen=True)
class KernelEvalReport:
    """A kernel value with a certified absolute error estimate."""

    value: Multivector
    abs_error_estimate: float
    method: str

    def __post_init__(self):
        if self.method not in (METHOD_CLOSED, METHOD_RADIAL, METHOD_TENSOR):
            raise DomainError(f"unknown evaluation method tag {self.method!r}")
        if not self.abs_error_estimate >= 0:
            raise DomainError("error estimate must be nonnegative")


# --------------------------------------------------------------------------
# frequency-side symbols


def _as_vector(m, xi):
    xi = np.asarray(xi, dtype=np.float64).reshape(-1)
    if xi.size != m:
        raise DomainError(f"frequency must have {m} components, got {xi.size}")
    return xi


def chi_projector(m, sign, xi):
    """Hardy projection symbol chi_pm(xi) = (1 pm i xi/|xi|)/2 as a multivector."""
    xi = _as_vector(m, xi)
    norm = float(np.linalg.norm(xi))
    if norm == 0.0:
        raise DomainError("chi projector is undefined at zero frequency")
    if sign not in (+1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    alg = algebra(m)
    coeffs = np.zeros(alg.dim, dtype=np.complex128)
    coeffs[0] = 0.5
    for j in range(m):
        coeffs[1 << j] = sign * 0.5j * xi[j] / norm
    return Multivector(alg, coeffs)


def monogenic_exponential(m, x, xi):
    """Monogenic plane wave e(x, xi); reduces to e^{i<x_vec, xi>} at x0 = 0."""
    xi = _as_vector(m, xi)
    norm = float(np.linalg.norm(xi))
    if norm == 0.0:
        raise DomainError("monogenic exponential is undefined at zero frequency")
    x = _as_paravector(m, x)
    phase = np.exp(1j * float(np.dot(x.vector(), xi)))
    up = math.exp(-x.x0 * norm)
    down = math.exp(+x.x0 * norm)
    alg = algebra(m)
    coeffs = np.zeros(alg.dim, dtype=np.complex128)
    coeffs[0] = phase * 0.5 * (up + down)
    for j in range(m):
        coeffs[1 << j] = phase * 0.5j * (xi[j] / norm) * (up - down)
    return Multivector(alg, coeffs)


def _as_paravector(m, x):
    if isinstance(x, ParaVector):
        if x.m != m:
            raise DomainError(f"para-vector has m={x.m}, expected {m}")
        return x
    seq = np.asarray(x, dtype=np.float64).reshape(-1)
    if seq.size != m + 1:
        raise DomainError(f"point must have {m + 1} components, got {seq.size}")
    return ParaVector(seq[0], tuple(seq[1:]))


def combined_argument(m, w, x):
    """The para-vector u = w + conj(x) that every two-point kernel depends on."""
    w = _as_paravector(m, w)
    x = _as_paravector(m, x)
    return w + x.conjugate()


def _pair_to_multivector(m, s, v, u_vec):
    """Assemble s + v * uhat into a para-vector valued multivector."""
    alg = algebra(m)
    coeffs = np.zeros(alg.dim, dtype=np.complex128)
    coeffs[0] = s
    norm = float(np.linalg.norm(u_vec))
    if norm > 0.0:
        for j in range(m):
            coeffs[1 << j] = v * u_vec[j] / norm
    return Multivector(alg, coeffs)


# --------------------------------------------------------------------------
# closed-form kernels


def cauchy_kernel(m, x):
    """Fundamental solution E(x) = conj(x) / (2 sigma_m |x|^{m+1})."""
    x = _as_paravector(m, x)
    norm = x.norm()
    if norm == 0.0:
        raise DomainError("the Cauchy kernel is singular at the origin")
    scale = 1.0 / (2.0 * sigma_constant(m) * norm ** (m + 1))
    conj = x.conjugate()
    alg = algebra(m)
    coeffs = np.zeros(alg.dim, dtype=np.complex128)
    coeffs[0] = scale * conj.x0
    for j in range(m):
        coeffs[1 << j] = scale * conj.xv[j]
    return Multivector(alg, coeffs)


def szego_kernel_closed(geometry, w, x):
    """Strip Hardy-space reproducing kernel, closed form E(u+2a) - E(u-2a)."""
    m = geometry.m
    u = combined_argument(m, w, x)
    geometry.check_strip_offset(u.x0)
    shift = 2.0 * geometry.half_width
    plus = ParaVector(u.x0 + shift, u.xv)
    minus = ParaVector(u.x0 - shift, u.xv)
    if plus.norm() == 0.0 or minus.norm() == 0.0:
        raise DomainError("shifted Szego argument hits the Cauchy-kernel singularity")
    return cauchy_kernel(m, plus) - cauchy_kernel(m, minus)


def szego_halfspace_closed(geometry, sign, w, x):
    """Half-space Hardy kernels: +E(u + 2a) for sign +, -E(u - 2a) for sign -."""
    m = geometry.m
    u = combined_argument(m, w, x)
    geometry.check_halfspace_offset(sign, u.x0)
    shift = 2.0 * geometry.half_width
    if sign > 0:
        return cauchy_kernel(m, ParaVector(u.x0 + shift, u.xv))
    return -cauchy_kernel(m, ParaVector(u.x0 - shift, u.xv))


def poisson_halfspace(geometry, x):
    """Scalar Poisson kernel of the half-space w0 > -2a pairing.

    Equals the scalar part of the matching half-space Hardy kernel:
    (x0 + 2a) / (2 sigma_m ((x0+2a)^2 + |x_vec|^2)^{(m+1)/2}).  Positive on
    its domain; its total mass over R^m is exactly 1/2.
    """
    m = geometry.m
    x = _as_paravector(m, x)
    geometry.check_halfspace_offset(+1, x.x0)
    height = x.x0 + 2.0 * geometry.half_width
    denom = (height * height + x.vector_norm() ** 2) ** ((m + 1) / 2.0)
    return height / (2.0 * sigma_constant(m) * denom)


# --------------------------------------------------------------------------
# quadrature-backed kernels


def sinc_ball(m, x, tol=1e-10):
    """Band-limited sinc: (2 pi)^{-m} integral of e(x, xi) over the ball B(0, pi)."""
    x = _as_paravector(m, x)
    pair, err = radial_integral_with_error(
        m, ball_indicator(math.pi), (-x.x0, +x.x0), x.vector_norm(), tol=tol
    )
    value = _pair_to_multivector(m, pair.s, pair.v, x.vector())
    return KernelEvalReport(value, err, METHOD_RADIAL)


def pw_kernel(geometry, w, x, tol=1e-10):
    """Reproducing kernel of the band-limited Paley-Wiener space: sinc_ball(w + conj(x))."""
    m = geometry.m
    u = combined_argument(m, w, x)
    return sinc_ball(m, u, tol=tol)


def szego_kernel_integral(geometry, w, x, tol=1e-10):
    """Strip Hardy kernel through the radial-Bessel route (weight e^{-2a|xi|})."""
    m = geometry.m
    u = combined_argument(m, w, x)
    geometry.check_strip_offset(u.x0)
    pair, err = radial_integral_with_error(
        m, exp_decay(2.0 * geometry.half_width), (-u.x0, +u.x0), u.vector_norm(), tol=tol
    )
    value = _pair_to_multivector(m, pair.s, pair.v, u.vector())
    return KernelEvalReport(value, err, METHOD_RADIAL)


def bergman_kernel(geometry, w, x, tol=1e-10):
    """Strip Bergman kernel: weight 2|xi|/(e^{2a|xi|} - e^{-2a|xi|})."""
    m = geometry.m
    u = combined_argument(m, w, x)
    geometry.check_strip_offset(u.x0)
    pair, err = radial_integral_with_error(
        m, bergman_weight(geometry.half_width), (-u.x0, +u.x0), u.vector_norm(), tol=tol
    )
    value = _pair_to_multivector(m, pair.s, pair.v, u.vector())
    return KernelEvalReport(value, err, METHOD_RADIAL)


def bergman_halfspace_kernel(geometry, sign, w, x, tol=1e-10):
    """Half-space Bergman kernels: weight 2|xi| e^{-2a|xi|} on a single chi channel."""
    m = geometry.m
    u = combined_argument(m, w, x)
    geometry.check_halfspace_offset(sign, u.x0)
    if sign > 0:
        weights = (1.0, 0.0)
    else:
        weights = (0.0, 1.0)
    quad = RadialQuadrature(m, bergman_halfspace(geometry.half_width), channel_weights=weights, tol=tol)
    s_mat, v_mat, err = quad.evaluate_grid(np.array([u.x0]), np.array([u.vector_norm()]))
    value = _pair_to_multivector(m, float(s_mat[0, 0]), float(v_mat[0, 0]), u.vector())
    return KernelEvalReport(value, err, METHOD_RADIAL)


# --------------------------------------------------------------------------
# cube-supported sinc (tensor quadrature; the cube is not radially symmetric)


@lru_cache(maxsize=16)
def _cube_axis_rule(n_panels):
    nodes1, weights1 = np.polynomial.legendre.leggauss(10)
    edges = np.linspace(-math.pi, math.pi, n_panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    halfs = 0.5 * (edges[1] - edges[0])
    x = (mids[:, None] + halfs * nodes1[None, :]).ravel()
    w = np.broadcast_to(halfs * weights1, (n_panels, 10)).ravel()
    return x, w


def _cube_accumulate(m, x0, x_vec, axes):
    """Complex scalar/vector sums of e(x, xi) over a tensor grid on [-pi, pi]^m."""
    nodes, weights = axes
    if m == 1:
        grids = [nodes]
        wt = weights
    elif m == 2:
        g1, g2 = np.meshgrid(nodes, nodes, indexing="ij")
        grids = [g1.ravel(), g2.ravel()]
        wt = np.outer(weights, weights).ravel()
    else:
        g2, g3 = np.meshgrid(nodes, nodes, indexing="ij")
        w23 = np.outer(weights, weights).ravel()
        s_acc = 0.0 + 0.0j
        v_acc = np.zeros(3, dtype=np.complex128)
        for x1, w1 in zip(nodes, weights):
            grids = [np.full(g2.size, x1), g2.ravel(), g3.ravel()]
            s_part, v_part = _cube_sums(x0, x_vec, grids, w1 * w23)
            s_acc += s_part
            v_acc += v_part
        return s_acc, v_acc
    return _cube_sums(x0, x_vec, grids, wt)


def _cube_sums(x0, x_vec, grids, wt):
    radius = np.sqrt(sum(g * g for g in grids))
    phase = np.exp(1j * sum(g * c for g, c in zip(grids, x_vec)))
    # smooth even/odd split: e(x, xi) = e^{i<x,xi>} (cosh(x0|xi|) - i xihat sinh(x0|xi|));
    # sinh(x0 r)/r extends analytically through r = 0
    ch = np.cosh(x0 * radius)
    safe = np.where(radius < 1e-30, 1.0, radius)
    shc = np.where(radius < 1e-30, x0, np.sinh(x0 * radius) / safe)
    base = wt * phase
    s_acc = np.sum(base * ch)
    v_acc = np.array([np.sum(base * (-1j) * g * shc) for g in grids])
    return s_acc, v_acc


def sinc_cube(m, x, tol=1e-10):
    """Cube-supported sinc: (2 pi)^{-m} integral of e(x, xi) over [-pi, pi]^m.

    At x0 = 0 this separates into a product of one-dimensional sinc factors
    sin(pi x_j)/(pi x_j).  Tensor Gauss-Legendre quadrature, m <= 3; panel
    counts step up until the two-resolution error estimate meets tol or the
    per-axis node cap is reached, in which case the larger estimate is
    reported honestly.
    """
    if m > 3:
        raise OracleRefusalError("cube quadrature supports m <= 3 only")
    x = _as_paravector(m, x)
    x_vec = x.vector()
    osc = max(1.0, float(np.max(np.abs(x_vec))))
    n_panels = 2 * math.ceil(max(4.0, 1.2 * osc))
    if n_panels * 10 > _CUBE_AXIS_CAP:
        raise OracleRefusalError(
            f"cube quadrature needs {n_panels * 10} nodes per axis, above the cap of {_CUBE_AXIS_CAP}"
        )
    scale = (2.0 * math.pi) ** (-m)
    coarse = _cube_accumulate(m, x.x0, x_vec, _cube_axis_rule(n_panels))
    while True:
        n_fine = n_panels + max(2, n_panels // 2)
        fine = _cube_accumulate(m, x.x0, x_vec, _cube_axis_rule(n_fine))
        err = scale * (abs(fine[0] - coarse[0]) + float(np.sum(np.abs(fine[1] - coarse[1]))))
        err += scale * (abs(fine[0].imag) + float(np.max(np.abs(fine[1].imag))))
        n_next = n_fine + max(2, n_fine // 2)
        if err <= tol or n_next * 10 > _CUBE_AXIS_CAP:
            break
        n_panels, coarse = n_fine, fine
    alg = algebra(m)
    coeffs = np.zeros(alg.dim, dtype=np.complex128)
    coeffs[0] = scale * fine[0].real
    for j in range(m):
        coeffs[1 << j] = scale * fine[1][j].real
    return KernelEvalReport(Multivector(alg, coeffs), float(err), METHOD_TENSOR)
