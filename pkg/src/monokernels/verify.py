"""Verification suites pairing each evaluation route with an independent check.

Every suite draws its random inputs from a fixed seed, so repeated runs of
the same suite produce identical numbers; the CLI serializes the results
with fixed float formatting to keep the output byte-stable.  Regression
constants (the Bergman diagonal band, the cube-sinc ratio bound, and the
reproducing-check configurations) are frozen here rather than computed on
the fly so that a regression shows up as a failed check instead of a moved
goalpost.

Suites and the property each one checks:

  szego-consistency   quadrature-built strip Hardy kernel vs its closed form
  kernel-anchors      S(0,0) and B(0,0) against exact constants
  radial-quadrature   radial-Bessel engine vs the tensor-grid oracle
  projections         chi projector identities and para-vector outputs
  dirac-residual      O(h^2) discrete monogenicity of kernel sections
  reproducing         discrete reproducing identity for P, S, B
  decay-rates         sinc/Bergman decay slopes and the cube-sinc bound
  bergman-diagonal    (a - |x0|)^{m+1}-scaled diagonal inside a fixed band
  hardy-suite         splitting, propagation, and norm identities
  pw-growth           exponential growth rate of the band-limited extension
"""

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .clifford import Multivector, algebra, paravector
from .kernels import (
    StripGeometry,
    bergman_kernel,
    cauchy_kernel,
    chi_projector,
    monogenic_exponential,
    pw_kernel,
    sinc_ball,
    sinc_cube,
    szego_kernel_closed,
    szego_kernel_integral,
)
from .radial import (
    ball_indicator,
    bergman_weight,
    exp_decay,
    radial_integral_with_error,
    tensor_oracle_with_error,
)
from .spectral import (
    GridFunction,
    SpectralAtom,
    atom_sum_value,
    dft,
    dirac_residual,
    hardy_split,
    propagate_slice,
    pw_extend,
    reproduce_check,
)

ZETA3 = 1.2020569031595943

# Regression-locked constants.  The diagonal band covers the exact values at
# the strip center (7 zeta(3)/(32 pi) for m = 2, pi^2/256 for m = 3) and the
# half-space limits at the edges (1/(8 pi) and 3/(16 pi^2)) with headroom;
# the scaled diagonal is dimensionless, so the band is independent of a.
BERGMAN_DIAGONAL_BANDS = {2: (0.035, 0.09), 3: (0.017, 0.042)}

# Measured maximum of |sinc_C(x)| prod(1 + |x_j|) / e^{sqrt(m) pi |x0|} over
# the probe grid below is close to 1; the bound is frozen with headroom.
SINC_CUBE_RATIO_BOUND = 2.0

ATOM_COUNT = 8
ATOM_SEED = 42


@dataclass(frozen=True)
class ReproduceConfig:
    """Frozen grid, window, and atom band for one reproducing check."""

    kind: str
    m: int
    half_width: float
    spacing: float
    n_points: int
    taper_fraction: float
    radius_min: float
    radius_max: float
    point: tuple

    def geometry(self):
        return StripGeometry(self.m, self.half_width)

    def atoms(self):
        return lattice_atoms(
            self.m,
            self.n_points,
            self.spacing,
            self.radius_min,
            self.radius_max,
        )

    def evaluation_point(self):
        return paravector(self.point[0], *self.point[1:])


def lattice_atoms(m, n_points, spacing, radius_min, radius_max, seed=ATOM_SEED):
    """Seeded atoms on the grid's frequency lattice inside a radius band."""
    rng = np.random.default_rng(seed)
    step = 2.0 * math.pi / (n_points * spacing)
    bound = int(radius_max / step)
    out = []
    while len(out) < ATOM_COUNT:
        k = rng.integers(-bound, bound + 1, size=m)
        radius = step * float(np.linalg.norm(k))
        if radius_min <= radius <= radius_max:
            phase = 2.0 * math.pi * rng.random()
            coefficient = np.exp(1j * phase) / ATOM_COUNT
            out.append(SpectralAtom(tuple(float(step * ki) for ki in k), coefficient))
    return out


REPRODUCE_CONFIGS = {
    "P": ReproduceConfig(
        kind="P",
        m=2,
        half_width=1.0,
        spacing=0.85,
        n_points=72,
        taper_fraction=0.6,
        radius_min=0.4,
        radius_max=1.25,
        point=(0.3, 0.85, -1.7),
    ),
    "S": ReproduceConfig(
        kind="S",
        m=2,
        half_width=1.0,
        spacing=0.5,
        n_points=112,
        taper_fraction=0.5,
        radius_min=0.9,
        radius_max=1.4,
        point=(0.3, 0.5, -1.0),
    ),
    "B": ReproduceConfig(
        kind="B",
        m=2,
        half_width=1.0,
        spacing=0.25,
        n_points=80,
        taper_fraction=0.5,
        radius_min=0.4,
        radius_max=1.0,
        point=(0.2, 0.25, -0.5),
    ),
}


@dataclass(frozen=True)
class CheckResult:
    """One measured number against one bound."""

    name: str
    passed: bool
    value: float
    bound: float


@dataclass(frozen=True, eq=False)
class SuiteResult:
    suite: str
    passed: bool
    checks: tuple
    elapsed_seconds: float
    plot_data: dict = field(default_factory=dict)


def _finish(suite, checks, started, plot_data=None):
    return SuiteResult(
        suite=suite,
        passed=all(c.passed for c in checks),
        checks=tuple(checks),
        elapsed_seconds=time.monotonic() - started,
        plot_data=plot_data or {},
    )


def _random_unit(rng, m):
    v = rng.standard_normal(m)
    return v / np.linalg.norm(v)


def _upper(name, value, bound):
    return CheckResult(name, value <= bound, float(value), float(bound))


def _lower(name, value, bound):
    return CheckResult(name, value >= bound, float(value), float(bound))


# --------------------------------------------------------------------------
# suites


def suite_szego_consistency():
    """Quadrature route vs closed form for the strip Hardy kernel."""
    started = time.monotonic()
    rng = np.random.default_rng(101)
    checks = []
    for m in (2, 3):
        for a in (0.5, 1.0):
            geometry = StripGeometry(m, a)
            worst = 0.0
            for _ in range(50):
                w0, x0 = rng.uniform(-0.9 * a, 0.9 * a, size=2)
                w_vec = rng.uniform(0.0, 2.5) * _random_unit(rng, m)
                x_vec = rng.uniform(0.0, 2.5) * _random_unit(rng, m)
                w = paravector(w0, *w_vec)
                x = paravector(x0, *x_vec)
                closed = szego_kernel_closed(geometry, w, x)
                report = szego_kernel_integral(geometry, w, x)
                worst = max(worst, (closed - report.value).norm() / closed.norm())
            checks.append(_upper(f"szego-rel-m{m}-a{a:g}", worst, 1e-8))
    return _finish("szego-consistency", checks, started)


def suite_kernel_anchors():
    """Kernel values at the origin against exact constants."""
    started = time.monotonic()
    checks = []
    origin2 = paravector(0.0, 0.0, 0.0)
    for a in (0.5, 1.0):
        geometry = StripGeometry(2, a)
        s_exact = 1.0 / (8.0 * math.pi * a**2)
        s_value = szego_kernel_integral(geometry, origin2, origin2).value.scalar_part().real
        checks.append(_upper(f"szego-origin-a{a:g}", abs(s_value - s_exact) / s_exact, 1e-8))
        b_exact = 7.0 * ZETA3 / (32.0 * math.pi * a**3)
        b_value = bergman_kernel(geometry, origin2, origin2).value.scalar_part().real
        checks.append(_upper(f"bergman-origin-a{a:g}", abs(b_value - b_exact) / b_exact, 1e-8))
    return _finish("kernel-anchors", checks, started)


def suite_radial_quadrature():
    """Radial-Bessel engine vs the tensor-grid oracle on random configs."""
    started = time.monotonic()
    rng = np.random.default_rng(103)
    # The 20 configurations per kernel are split 12 at m = 2 and 8 at m = 3.
    # Draw ranges and the m = 3 oracle tolerance keep the brute-force cube
    # affordable: its cost is nodes^m, and wide strips need large radial
    # cutoffs.  The oracle's own error estimate enters the agreement bound.
    profiles = {
        "ball": (lambda: ball_indicator(math.pi), {2: (0.8, 6.0), 3: (0.8, 4.0)}),
        "szego": (lambda: exp_decay(2.0), {2: (0.5, 3.0), 3: (0.3, 1.2)}),
        "bergman": (lambda: bergman_weight(1.0), {2: (0.4, 3.0), 3: (0.3, 1.2)}),
    }
    counts = {2: 12, 3: 8}
    oracle_tol = {2: 1e-8, 3: 1e-6}
    checks = []
    for label, (make, ranges) in profiles.items():
        for m in (2, 3):
            x0_max, u_max = ranges[m]
            worst = 0.0
            for _ in range(counts[m]):
                x0 = rng.uniform(-x0_max, x0_max)
                u = rng.uniform(0.0, u_max) * _random_unit(rng, m)
                profile = make()
                oracle_pair, oracle_err = tensor_oracle_with_error(
                    m, profile, paravector(x0, *np.zeros(m)), u, tol=oracle_tol[m]
                )
                pair, _ = radial_integral_with_error(
                    m, profile, (-x0, +x0), float(np.linalg.norm(u))
                )
                tol = max(1e-6, oracle_err)
                gap = max(abs(pair.s - oracle_pair.s), abs(pair.v - oracle_pair.v))
                worst = max(worst, gap / tol)
            checks.append(_upper(f"oracle-gap-over-tol-{label}-m{m}", worst, 1.0))
    return _finish("radial-quadrature", checks, started)


def suite_projections():
    """chi projector identities and para-vector-valuedness of kernel outputs."""
    started = time.monotonic()
    rng = np.random.default_rng(104)
    checks = []
    for m in (2, 3):
        one = Multivector.scalar(m, 1.0)
        zero = Multivector.zero(m)
        worst = 0.0
        for _ in range(500):
            xi = rng.uniform(0.05, 8.0) * _random_unit(rng, m)
            plus = chi_projector(m, +1, xi)
            minus = chi_projector(m, -1, xi)
            worst = max(
                worst,
                (plus + minus - one).norm(),
                (plus * plus - plus).norm(),
                (minus * minus - minus).norm(),
                (plus * minus - zero).norm(),
            )
        checks.append(_upper(f"chi-identities-m{m}", worst, 1e-14))
    for m in (2, 3):
        geometry = StripGeometry(m, 1.0)
        deviation = 0.0
        for _ in range(10):
            w = paravector(rng.uniform(-0.4, 0.4), *(rng.uniform(0.0, 2.0) * _random_unit(rng, m)))
            x = paravector(rng.uniform(-0.4, 0.4), *(rng.uniform(0.0, 2.0) * _random_unit(rng, m)))
            xi = rng.uniform(0.2, 4.0) * _random_unit(rng, m)
            outputs = [
                cauchy_kernel(m, w),
                szego_kernel_closed(geometry, w, x),
                szego_kernel_integral(geometry, w, x).value,
                bergman_kernel(geometry, w, x).value,
                sinc_ball(m, w).value,
                pw_kernel(geometry, w, x).value,
                sinc_cube(m, w).value,
            ]
            plane_wave = monogenic_exponential(m, w, xi)
            grade_two_plus = max(
                abs(plane_wave.coeffs[b])
                for b in range(plane_wave.algebra.dim)
                if b != 0 and bin(b).count("1") != 1
            )
            deviation = max(deviation, grade_two_plus)
            deviation = max(deviation, max(o.paravector_deviation() for o in outputs))
        checks.append(_upper(f"paravector-outputs-m{m}", deviation, 1e-12))
    return _finish("projections", checks, started)


def suite_dirac_residual():
    """Halving the stencil step must cut kernel-section residuals 4x."""
    started = time.monotonic()
    rng = np.random.default_rng(105)
    geometry = StripGeometry(2, 1.0)
    x_ref = paravector(0.15, 0.4, -0.2)
    n, d = 32, 0.5
    step = 2.0 * math.pi / (n * d)
    atoms = [
        SpectralAtom((step, -2.0 * step), 0.4 + 0.1j),
        SpectralAtom((-3.0 * step, 2.0 * step), -0.2 + 0.3j),
        SpectralAtom((4.0 * step, 0.0), 0.25),
    ]
    spectrum = dft(_atom_boundary_grid(2, atoms, n, d))
    fields = {
        "P-section": lambda p: pw_kernel(geometry, p, x_ref).value,
        "S-section": lambda p: szego_kernel_closed(geometry, p, x_ref),
        "B-section": lambda p: bergman_kernel(geometry, p, x_ref).value,
        "pw-extend": lambda p: pw_extend(spectrum, p),
    }
    checks = []
    for label, fn in fields.items():
        worst = 0.0
        for _ in range(10):
            w = paravector(rng.uniform(-0.5, 0.5), *rng.uniform(-2.0, 2.0, size=2))
            coarse = dirac_residual(fn, w, 1e-2)
            fine = dirac_residual(fn, w, 5e-3)
            ratio = coarse / fine
            worst = max(worst, abs(ratio - 4.0))
        checks.append(_upper(f"halving-ratio-deviation-{label}", worst, 0.5))
    return _finish("dirac-residual", checks, started)


def _atom_boundary_grid(m, atoms, n_points, spacing):
    origin = tuple(-(n_points // 2) * spacing for _ in range(m))
    axes = [origin[j] + spacing * np.arange(n_points) for j in range(m)]
    samples = np.zeros((n_points,) * m, dtype=np.complex128)
    for atom in atoms:
        exponent = 0.0
        for j in range(m):
            shape = [1] * m
            shape[j] = -1
            exponent = exponent + atom.frequency[j] * axes[j].reshape(shape)
        samples += atom.coefficient * np.exp(1j * exponent)
    return GridFunction.from_scalar_samples(m, (spacing,) * m, origin, samples)


def suite_reproducing():
    """Discrete reproducing identity at the frozen configurations."""
    started = time.monotonic()
    checks = []
    plot_data = {}
    for kind in ("P", "S", "B"):
        config = REPRODUCE_CONFIGS[kind]
        atoms = config.atoms()
        x = config.evaluation_point()
        geometry = config.geometry()
        reference = reproduce_check(
            kind, atoms, x, geometry, config.n_points, config.spacing,
            taper_fraction=config.taper_fraction,
        )
        refined = reproduce_check(
            kind, atoms, x, geometry, 2 * config.n_points, config.spacing,
            taper_fraction=config.taper_fraction,
        )
        checks.append(_upper(f"reference-residual-{kind}", reference, 1e-4))
        checks.append(_lower(f"refinement-shrink-{kind}", reference / refined, 4.0))
        plot_data[kind] = np.array(
            [[config.n_points, reference], [2 * config.n_points, refined]]
        )
    return _finish("reproducing", checks, started, plot_data)


def suite_decay_rates():
    """Decay slopes for the ball sinc and the Bergman kernel, cube-sinc bound."""
    started = time.monotonic()
    checks = []
    plot_data = {}
    for m in (2, 3):
        ts = np.arange(4.0, 40.0, 0.2)
        values = np.array(
            [sinc_ball(m, paravector(0.0, t, *np.zeros(m - 1))).value.norm() for t in ts]
        )
        block = 10
        centers, peaks = [], []
        for k in range(0, len(ts) - block + 1, block):
            centers.append(ts[k + block // 2])
            peaks.append(values[k : k + block].max())
        slope = float(np.polyfit(np.log(centers), np.log(peaks), 1)[0])
        checks.append(_upper(f"sinc-ball-slope-m{m}", slope, -(m + 1) / 2.0 + 0.15))
        plot_data[f"sinc-m{m}"] = np.array([ts, values])
        plot_data[f"sinc-envelope-m{m}"] = np.array([centers, peaks])
    for m in (2, 3):
        geometry = StripGeometry(m, 1.0)
        ts = np.geomspace(1.0, 6.0, 12)
        values = np.array(
            [
                bergman_kernel(
                    geometry, paravector(0.3, t, *np.zeros(m - 1)), paravector(0.0, *np.zeros(m))
                ).value.norm()
                for t in ts
            ]
        )
        slope = float(np.polyfit(np.log(ts), np.log(values), 1)[0])
        checks.append(_upper(f"bergman-offdiagonal-slope-m{m}", slope, -(m - 1) / 2.0 + 0.15))
        plot_data[f"bergman-offdiag-m{m}"] = np.array([ts, values])
    worst = 0.0
    for m in (2, 3):
        for x0 in (0.0, 0.5, 1.0):
            for t1 in (0.35, 1.3, 2.7, 5.1):
                for t2 in (0.6, 3.8):
                    point = paravector(x0, t1, t2, *np.zeros(m - 2))
                    value = sinc_cube(m, point).value.norm()
                    weight = math.exp(math.sqrt(m) * math.pi * abs(x0))
                    product = (1.0 + t1) * (1.0 + t2)
                    worst = max(worst, value * product / weight)
    checks.append(_upper("sinc-cube-ratio", worst, SINC_CUBE_RATIO_BOUND))
    return _finish("decay-rates", checks, started, plot_data)


def suite_bergman_diagonal():
    """(a - |x0|)^{m+1}-scaled Bergman diagonal stays inside the frozen band."""
    started = time.monotonic()
    rng = np.random.default_rng(108)
    checks = []
    plot_data = {}
    for m in (2, 3):
        low, high = BERGMAN_DIAGONAL_BANDS[m]
        for a in (1.0, 0.6):
            geometry = StripGeometry(m, a)
            count = 50 if a == 1.0 else 10
            heights = np.concatenate(
                [rng.uniform(-0.98 * a, 0.98 * a, size=count - 3), [0.0, -0.979 * a, 0.979 * a]]
            )
            products = []
            for x0 in heights:
                x = paravector(x0, *np.zeros(m))
                value = bergman_kernel(geometry, x, x).value.scalar_part().real
                products.append(value * (a - abs(x0)) ** (m + 1))
            products = np.array(products)
            checks.append(_lower(f"diagonal-min-m{m}-a{a:g}", float(products.min()), low))
            checks.append(_upper(f"diagonal-max-m{m}-a{a:g}", float(products.max()), high))
            if a == 1.0:
                order = np.argsort(heights)
                plot_data[f"diagonal-m{m}"] = np.array([heights[order], products[order]])
    return _finish("bergman-diagonal", checks, started, plot_data)


def suite_hardy():
    """Splitting, propagation, and norm identities on random grids."""
    started = time.monotonic()
    rng = np.random.default_rng(109)
    checks = []
    for m, n in ((1, 64), (2, 64), (3, 32)):
        geometry = StripGeometry(m, 1.0)
        spacing = 0.5
        dim = algebra(m).dim
        shape = (dim,) + (n,) * m
        values = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        origin = tuple(-(n // 2) * spacing for _ in range(m))
        f = GridFunction(m, (n,) * m, (spacing,) * m, origin, values)
        scale = float(np.max(np.abs(f.values)))
        plus, minus = hardy_split(f)
        recombination = float(np.max(np.abs((plus + minus).values - f.values))) / scale
        checks.append(_upper(f"recombination-m{m}", recombination, 1e-12))
        plus2, cross = hardy_split(plus)
        idempotence = float(np.max(np.abs(plus2.values - plus.values))) / scale
        checks.append(_upper(f"idempotence-m{m}", idempotence, 1e-12))
        cross_leak = float(np.max(np.abs(cross.values))) / scale
        checks.append(_upper(f"cross-leak-m{m}", cross_leak, 1e-12))
        norm2 = f.norm() ** 2
        pythagoras = abs(plus.norm() ** 2 + minus.norm() ** 2 - norm2) / norm2
        checks.append(_upper(f"pythagoras-m{m}", pythagoras, 1e-10))
        two_step = propagate_slice(propagate_slice(f, 0.3, geometry), -0.1, geometry)
        one_step = propagate_slice(f, 0.2, geometry)
        semigroup = float(np.max(np.abs(two_step.values - one_step.values))) / float(
            np.max(np.abs(one_step.values))
        )
        checks.append(_upper(f"semigroup-m{m}", semigroup, 1e-10))
        gp, gm = dft(plus), dft(minus)
        r = gp.frequency_radius()
        scale_measure = gp.bin_volume() / (2.0 * math.pi) ** m
        worst = 0.0
        for x0 in (-0.35, 0.2):
            lhs = propagate_slice(f, x0, geometry).norm() ** 2
            rhs = float(
                np.sum(
                    np.exp(-2.0 * x0 * r)[None, ...] * np.abs(gp.values) ** 2
                    + np.exp(2.0 * x0 * r)[None, ...] * np.abs(gm.values) ** 2
                )
                * scale_measure
            )
            worst = max(worst, abs(lhs - rhs) / rhs)
        checks.append(_upper(f"strip-norm-identity-m{m}", worst, 1e-10))
    return _finish("hardy-suite", checks, started)


def suite_pw_growth():
    """Fitted growth rate of the band-limited extension along the height axis."""
    started = time.monotonic()
    n, d = 32, 0.5
    step = 2.0 * math.pi / (n * d)
    atoms = [
        SpectralAtom((8.0 * step, 0.0), 0.5),
        SpectralAtom((5.0 * step, 5.0 * step), 0.3 - 0.2j),
        SpectralAtom((-3.0 * step, 6.0 * step), 0.2 + 0.4j),
        SpectralAtom((2.0 * step, -2.0 * step), -0.35),
    ]
    spectrum = dft(_atom_boundary_grid(2, atoms, n, d))
    heights = np.arange(0.0, 3.0001, 0.25)
    norms = np.array(
        [pw_extend(spectrum, paravector(t, 0.0, 0.0)).norm() for t in heights]
    )
    slope = float(np.polyfit(heights, np.log(norms), 1)[0])
    checks = [_upper("pw-growth-rate", slope, math.pi + 0.05)]
    exact = atom_sum_value(2, atoms, paravector(1.5, 0.0, 0.0))
    probe = pw_extend(spectrum, paravector(1.5, 0.0, 0.0))
    checks.append(
        _upper("pw-growth-probe-exactness", (probe - exact).norm() / exact.norm(), 1e-10)
    )
    return _finish(
        "pw-growth", checks, started, {"growth": np.array([heights, norms])}
    )


SUITES = {
    "szego-consistency": suite_szego_consistency,
    "kernel-anchors": suite_kernel_anchors,
    "radial-quadrature": suite_radial_quadrature,
    "projections": suite_projections,
    "dirac-residual": suite_dirac_residual,
    "reproducing": suite_reproducing,
    "decay-rates": suite_decay_rates,
    "bergman-diagonal": suite_bergman_diagonal,
    "hardy-suite": suite_hardy,
    "pw-growth": suite_pw_growth,
}


def suite_names():
    return tuple(SUITES)


def run_suite(name):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    return SUITES[name]()


def run_suites(names):
    return tuple(run_suite(name) for name in names)
