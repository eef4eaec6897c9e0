"""Discrete transform, Hardy splitting, propagation, and reproducing tests.

Conventions exercised below:
  - forward transform: rectangle-rule sum of f(x) e^{-i<x, xi>} dx^m, so a
    unit impulse maps to the flat value dx^m times a phase and the discrete
    Parseval identity holds to rounding.
  - Gaussian anchor: exp(-|y|^2 / 2) on R^m transforms to
    (2 pi)^{m/2} exp(-|xi|^2 / 2).
  - Hardy halves: multiplication by chi_{+/-}(xi) = (1 +/- i xi/|xi|) / 2 on
    the frequency side; the zero bin uses the first axis direction, which
    keeps the halves idempotent.
  - height propagation: multiplication by cosh(x0 |xi|) - i xihat sinh(x0 |xi|),
    which scales the chi halves by e^{-/+ x0 |xi|}.
  - reproducing checks: frozen 8-atom lattice test functions paired against
    quadrature-built kernel sections (configurations in reproduce_configs).
"""

import math

import numpy as np
import pytest
from monokernels.verify import REPRODUCE_CONFIGS, lattice_atoms

from monokernels.clifford import Multivector, ParaVector, algebra, paravector
from monokernels.errors import (
    DomainError,
    OverflowDiagnosticError,
    SpectralSupportError,
    StripViolationError,
)
from monokernels.kernels import StripGeometry, cauchy_kernel, monogenic_exponential
from monokernels.spectral import (
    GridFunction,
    SpectralAtom,
    SpectralCondition,
    Spectrum,
    atom_sum_value,
    check_ball_support,
    check_strip_weight,
    dft,
    dirac_residual,
    grid_inner_product,
    hardy_split,
    idft,
    planck_taper,
    plancherel_check,
    propagate_slice,
    pw_extend,
    reproduce_check,
)


def centered_origin(m, n_points, spacing):
    return tuple(-(n_points // 2) * spacing for _ in range(m))


def random_grid(m, n_points, spacing, seed, scalar_only=False):
    """Random complex grid function on a centered grid, fixed seed."""
    rng = np.random.default_rng(seed)
    dim = 1 if scalar_only else algebra(m).dim
    shape = (algebra(m).dim,) + (n_points,) * m
    values = np.zeros(shape, dtype=np.complex128)
    values[:dim] = rng.standard_normal((dim,) + (n_points,) * m) + 1j * rng.standard_normal(
        (dim,) + (n_points,) * m
    )
    return GridFunction(m, (n_points,) * m, (spacing,) * m, centered_origin(m, n_points, spacing), values)


def gaussian_grid(m, n_points, spacing):
    grid = GridFunction(
        m,
        (n_points,) * m,
        (spacing,) * m,
        centered_origin(m, n_points, spacing),
        np.zeros((algebra(m).dim,) + (n_points,) * m, dtype=np.complex128),
    )
    rad2 = 0.0
    for j, ax in enumerate(grid.axes()):
        shape = [1] * m
        shape[j] = -1
        rad2 = rad2 + ax.reshape(shape) ** 2
    samples = np.exp(-rad2 / 2.0)
    return GridFunction.from_scalar_samples(m, grid.spacing, grid.origin, samples)


# --------------------------------------------------------------------------
# grid containers


def test_grid_validation_errors():
    values = np.zeros((4, 8, 8), dtype=np.complex128)
    with pytest.raises(DomainError):
        GridFunction(2, (8, 8), (0.5, -0.5), (0.0, 0.0), values)
    with pytest.raises(DomainError):
        GridFunction(2, (8,), (0.5, 0.5), (0.0, 0.0), values)
    with pytest.raises(DomainError):
        GridFunction(2, (8, 8), (0.5, 0.5), (0.0, 0.0), values[:3])
    with pytest.raises(DomainError):
        GridFunction(2, (8, 8), (0.5, 0.5), (0.0, 0.0, 0.0), values)
    with pytest.raises(DomainError):
        Spectrum(2, (8, 8), (0.5, 0.5), (0.0, 0.0), values[:, :4])


def test_grid_values_are_frozen():
    f = random_grid(2, 8, 0.5, seed=0)
    with pytest.raises((ValueError, RuntimeError)):
        f.values[0, 0, 0] = 1.0


def test_from_scalar_samples_and_sample():
    samples = np.arange(16.0).reshape(4, 4)
    f = GridFunction.from_scalar_samples(2, (0.5, 0.5), (0.0, 0.0), samples)
    mv = f.sample((1, 2))
    assert isinstance(mv, Multivector)
    assert mv.coeffs[0] == pytest.approx(6.0)
    assert np.all(mv.coeffs[1:] == 0.0)
    assert f.norm() == pytest.approx(math.sqrt(np.sum(samples**2) * 0.25))


def test_grid_arithmetic_and_mismatch():
    f = random_grid(2, 8, 0.5, seed=1)
    g = random_grid(2, 8, 0.5, seed=2)
    total = f + g
    assert np.allclose(total.values, f.values + g.values)
    diff = (f - g) * 2.0
    assert np.allclose(diff.values, 2.0 * (f.values - g.values))
    other = random_grid(2, 8, 0.25, seed=3)
    with pytest.raises(DomainError):
        _ = f + other


def test_spectrum_axis_frequencies():
    f = random_grid(2, 8, 0.5, seed=4)
    g = dft(f)
    freqs = g.axis_frequencies()
    step = 2.0 * math.pi / (8 * 0.5)
    assert freqs[0][1] == pytest.approx(step)
    assert g.bin_volume() == pytest.approx(step**2)


# --------------------------------------------------------------------------
# discrete transform


@pytest.mark.parametrize("m,n_points", [(1, 32), (2, 16), (3, 8)])
def test_round_trip(m, n_points):
    f = random_grid(m, n_points, 0.4, seed=10 + m)
    back = idft(dft(f))
    scale = float(np.max(np.abs(f.values)))
    assert np.max(np.abs(back.values - f.values)) <= 1e-12 * scale


def test_impulse_transform_is_flat():
    n, d = 8, 0.5
    samples = np.zeros((n, n), dtype=np.complex128)
    samples[3, 5] = 1.0
    origin = centered_origin(2, n, d)
    f = GridFunction.from_scalar_samples(2, (d, d), origin, samples)
    g = dft(f)
    assert np.max(np.abs(np.abs(g.values[0]) - d * d)) <= 1e-14
    point = (origin[0] + 3 * d, origin[1] + 5 * d)
    comps = g.frequency_components()
    expected = d * d * np.exp(-1j * (point[0] * comps[0] + point[1] * comps[1]))
    assert np.max(np.abs(g.values[0] - expected)) <= 1e-13


def test_gaussian_transform_anchor():
    f = gaussian_grid(2, 64, 0.25)
    g = dft(f)
    expected = (2.0 * math.pi) * np.exp(-g.frequency_radius() ** 2 / 2.0)
    assert np.max(np.abs(g.values[0] - expected)) <= 1e-6 * (2.0 * math.pi)


def test_plancherel_identities():
    f = gaussian_grid(2, 32, 0.4)
    assert plancherel_check(f, f) <= 1e-12
    a = random_grid(2, 16, 0.5, seed=20)
    b = random_grid(2, 16, 0.5, seed=21)
    assert plancherel_check(a, b) <= 1e-12
    inner = grid_inner_product(a, a)
    assert inner.coeffs[0].imag == pytest.approx(0.0, abs=1e-12)
    assert inner.coeffs[0].real >= 0.0


# --------------------------------------------------------------------------
# Hardy splitting


def test_hardy_recombination_and_idempotence():
    f = random_grid(2, 16, 0.5, seed=30)
    constant = GridFunction.from_scalar_samples(
        2, f.spacing, f.origin, np.full(f.shape, 0.7 + 0.2j)
    )
    f = f + constant
    plus, minus = hardy_split(f)
    scale = float(np.max(np.abs(f.values)))
    assert np.max(np.abs((plus + minus).values - f.values)) <= 1e-12 * scale
    plus2, cross = hardy_split(plus)
    assert np.max(np.abs(plus2.values - plus.values)) <= 1e-12 * scale
    assert np.max(np.abs(cross.values)) <= 1e-12 * scale


def test_hardy_pythagoras():
    f = random_grid(3, 8, 0.5, seed=31)
    plus, minus = hardy_split(f)
    lhs = f.norm() ** 2
    rhs = plus.norm() ** 2 + minus.norm() ** 2
    assert abs(lhs - rhs) <= 1e-10 * lhs


def test_hardy_zero_bin_direction():
    samples = np.full((8, 8), 2.0, dtype=np.complex128)
    f = GridFunction.from_scalar_samples(2, (0.5, 0.5), (0.0, 0.0), samples)
    plus, minus = hardy_split(f)
    mv = plus.sample((0, 0))
    assert mv.coeffs[0] == pytest.approx(1.0)
    assert mv.coeffs[1] == pytest.approx(1.0j)
    assert np.max(np.abs(plus.values - plus.values[:, :1, :1])) <= 1e-13
    mv_minus = minus.sample((0, 0))
    assert mv_minus.coeffs[0] == pytest.approx(1.0)
    assert mv_minus.coeffs[1] == pytest.approx(-1.0j)


# --------------------------------------------------------------------------
# height propagation


GEOMETRY_2 = StripGeometry(2, 1.0)


def test_propagate_identity_at_zero():
    f = random_grid(2, 16, 0.5, seed=40)
    moved = propagate_slice(f, 0.0, GEOMETRY_2)
    assert np.max(np.abs(moved.values - f.values)) <= 1e-13 * float(np.max(np.abs(f.values)))


def test_propagate_single_atom_closed_form():
    n, d = 8, 0.5
    step = 2.0 * math.pi / (n * d)
    xi = (step, -2.0 * step)
    origin = centered_origin(2, n, d)
    axes = [origin[j] + d * np.arange(n) for j in range(2)]
    phase = np.exp(1j * (xi[0] * axes[0][:, None] + xi[1] * axes[1][None, :]))
    f0 = GridFunction.from_scalar_samples(2, (d, d), origin, phase)
    x0 = 0.25
    moved = propagate_slice(f0, x0, GEOMETRY_2)
    for idx in [(0, 0), (2, 5), (7, 3)]:
        point = ParaVector(x0, (axes[0][idx[0]], axes[1][idx[1]]))
        expected = monogenic_exponential(2, point, xi)
        assert moved.sample(idx).isclose(expected, tol=1e-12)


def test_propagate_semigroup():
    f = random_grid(2, 16, 0.4, seed=41)
    one = propagate_slice(propagate_slice(f, 0.3, GEOMETRY_2), -0.1, GEOMETRY_2)
    two = propagate_slice(f, 0.2, GEOMETRY_2)
    scale = float(np.max(np.abs(two.values)))
    assert np.max(np.abs(one.values - two.values)) <= 1e-10 * scale


def test_propagate_strip_rejection():
    f = random_grid(2, 8, 0.5, seed=42)
    with pytest.raises(StripViolationError):
        propagate_slice(f, 1.0, GEOMETRY_2)
    with pytest.raises(DomainError):
        propagate_slice(f, 0.1, StripGeometry(3, 1.0))


def test_propagate_overflow_diagnostic():
    f = random_grid(2, 16, 0.1, seed=43)
    wide = StripGeometry(2, 500.0)
    with pytest.raises(OverflowDiagnosticError) as info:
        propagate_slice(f, 400.0, wide)
    assert "|xi|" in str(info.value)


def band_limited_grid(m, n_points, spacing, seed, max_radius):
    """Random grid whose spectrum is truncated to |xi| <= max_radius."""
    f = random_grid(m, n_points, spacing, seed)
    g = dft(f)
    values = g.values.copy()
    values[:, g.frequency_radius() > max_radius] = 0.0
    return idft(Spectrum(m, g.shape, g.spacing, g.origin, values))


def test_strip_norm_identity():
    f0 = band_limited_grid(2, 16, 0.5, seed=44, max_radius=3.0)
    plus, minus = hardy_split(f0)
    gp, gm = dft(plus), dft(minus)
    r = gp.frequency_radius()
    scale = gp.bin_volume() / (2.0 * math.pi) ** 2
    for x0 in (-0.6, 0.3):
        lhs = propagate_slice(f0, x0, GEOMETRY_2).norm() ** 2
        rhs = float(
            np.sum(
                np.exp(-2.0 * x0 * r)[None, ...] * np.abs(gp.values) ** 2
                + np.exp(2.0 * x0 * r)[None, ...] * np.abs(gm.values) ** 2
            )
            * scale
        )
        assert abs(lhs - rhs) <= 1e-10 * rhs


def test_bergman_fubini_two_ways():
    a = 1.0
    f0 = band_limited_grid(2, 16, 0.5, seed=45, max_radius=3.0)
    nodes, weights = np.polynomial.legendre.leggauss(24)
    heights = a * nodes
    lhs = sum(
        a * w * propagate_slice(f0, t, GEOMETRY_2).norm() ** 2
        for t, w in zip(heights, weights)
    )
    g = dft(f0)
    r = g.frequency_radius()
    weight = np.where(r == 0.0, 2.0 * a, (np.exp(2.0 * a * r) - np.exp(-2.0 * a * r)) / np.where(r == 0.0, 1.0, 2.0 * r))
    scale = g.bin_volume() / (2.0 * math.pi) ** 2
    rhs = float(np.sum(weight[None, ...] * np.abs(g.values) ** 2) * scale)
    assert abs(lhs - rhs) <= 1e-8 * rhs


# --------------------------------------------------------------------------
# support conditions


def test_ball_support_verdicts():
    g = dft(band_limited_grid(2, 16, 0.5, seed=50, max_radius=3.0))
    ok = check_ball_support(g, 3.5)
    assert ok.verdict and ok.kind == "ball_support"
    bad = check_ball_support(g, 1.0)
    assert not bad.verdict
    r = g.frequency_radius()
    outside = math.sqrt(
        float(np.sum(np.abs(g.values[:, r > 1.0 + 1e-12]) ** 2)) * g.bin_volume() / (2.0 * math.pi) ** 2
    )
    assert bad.margin == pytest.approx(outside, rel=1e-12)


def test_strip_weight_condition():
    g = dft(gaussian_grid(2, 32, 0.4))
    cond = check_strip_weight(g, 0.5)
    assert cond.verdict
    r = g.frequency_radius()
    manual = math.sqrt(
        float(np.sum(np.exp(1.0 * r)[None, ...] * np.abs(g.values) ** 2))
        * g.bin_volume()
        / (2.0 * math.pi) ** 2
    )
    assert cond.margin == pytest.approx(manual, rel=1e-12)
    overflow = check_strip_weight(g, 1e6)
    assert not overflow.verdict and math.isinf(overflow.margin)


def test_condition_validation():
    with pytest.raises(DomainError):
        SpectralCondition("bogus", 1.0, True, 0.0)
    with pytest.raises(DomainError):
        SpectralCondition("ball_support", 1.0, True, -1.0)


# --------------------------------------------------------------------------
# band-limited extension


def atom_boundary_grid(m, atoms, n_points, spacing):
    """Grid samples of the atom sum on the x0 = 0 slice (scalar there)."""
    origin = centered_origin(m, n_points, spacing)
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


def pw_atoms(n_points=32, spacing=0.5):
    step = 2.0 * math.pi / (n_points * spacing)
    return [
        SpectralAtom((step, -2.0 * step), 0.4 + 0.1j),
        SpectralAtom((-3.0 * step, 2.0 * step), -0.2 + 0.3j),
        SpectralAtom((4.0 * step, 0.0), 0.25),
    ]


def test_pw_extend_matches_atom_sum():
    n, d = 32, 0.5
    atoms = pw_atoms(n, d)
    g = dft(atom_boundary_grid(2, atoms, n, d))
    for point in [paravector(0.0, 0.3, -0.7), paravector(0.45, 1.1, 0.2), paravector(-0.8, 0.0, 0.0)]:
        expected = atom_sum_value(2, atoms, point)
        got = pw_extend(g, point)
        assert got.isclose(expected, tol=1e-10)


def test_pw_extend_restricts_to_samples():
    n, d = 32, 0.5
    atoms = pw_atoms(n, d)
    f0 = atom_boundary_grid(2, atoms, n, d)
    g = dft(f0)
    axes = f0.axes()
    for idx in [(0, 0), (5, 20), (17, 9)]:
        point = paravector(0.0, axes[0][idx[0]], axes[1][idx[1]])
        assert pw_extend(g, point).isclose(f0.sample(idx), tol=1e-12)


def test_pw_extend_support_violation():
    f = random_grid(2, 16, 0.5, seed=60)
    g = dft(f)
    with pytest.raises(SpectralSupportError) as info:
        pw_extend(g, paravector(0.1, 0.0, 0.0), radius=1.0)
    assert info.value.outside_mass is not None and info.value.outside_mass > 0.0


def test_pw_extend_overflow_guard():
    n, d = 32, 0.5
    g = dft(atom_boundary_grid(2, pw_atoms(n, d), n, d))
    with pytest.raises(OverflowDiagnosticError):
        pw_extend(g, paravector(250.0, 0.0, 0.0))


def test_pw_extend_dirac_halving():
    n, d = 32, 0.5
    g = dft(atom_boundary_grid(2, pw_atoms(n, d), n, d))
    field = lambda p: pw_extend(g, p)
    x = paravector(0.2, 0.35, -0.15)
    coarse = dirac_residual(field, x, 1e-2)
    fine = dirac_residual(field, x, 5e-3)
    assert 3.5 <= coarse / fine <= 4.5


# --------------------------------------------------------------------------
# discrete Dirac operator


def test_dirac_residual_constant_field():
    constant = Multivector.scalar(2, 1.5 + 0.5j)
    residual = dirac_residual(lambda p: constant, paravector(0.3, 0.1, -0.2), 1e-3)
    assert residual <= 1e-12


def test_dirac_residual_cauchy_halving():
    x = paravector(1.0, 0.7, -0.4)
    field = lambda p: cauchy_kernel(2, p)
    coarse = dirac_residual(field, x, 2e-2)
    fine = dirac_residual(field, x, 1e-2)
    assert 3.5 <= coarse / fine <= 4.5


def test_dirac_residual_negative_control():
    xi = np.array([1.0, 2.0])

    def flat_plane_wave(p):
        return Multivector.scalar(2, complex(np.exp(1j * float(np.dot(p.vector(), xi)))))

    x = paravector(0.1, 0.3, 0.2)
    coarse = dirac_residual(flat_plane_wave, x, 1e-2)
    fine = dirac_residual(flat_plane_wave, x, 5e-3)
    assert coarse > 0.5
    assert coarse / fine < 1.5


def test_dirac_residual_rejections():
    field = lambda p: Multivector.scalar(2, 1.0)
    with pytest.raises(DomainError):
        dirac_residual(field, paravector(0.0, 0.0, 0.0), 0.0)
    with pytest.raises(DomainError):
        dirac_residual(field, (0.0, 0.0, 0.0), 1e-3)


# --------------------------------------------------------------------------
# Planck taper


def test_planck_taper_radial_profile():
    axes = [np.linspace(-4.0, 4.0, 33), np.linspace(-4.0, 4.0, 33)]
    w = planck_taper(axes, 0.4)
    assert w.shape == (33, 33)
    assert w[16, 16] == 1.0
    assert w[0, 0] == 0.0
    assert np.all((w >= 0.0) & (w <= 1.0))
    center = w[16, 16:]
    assert np.all(np.diff(center) <= 1e-15)
    rad = np.hypot(axes[0][:, None], axes[1][None, :])
    assert np.all(w[rad <= 0.6 * 4.0] == 1.0)
    assert np.all(w[rad >= 4.0 * (1.0 + 1e-9)] == 0.0)


# --------------------------------------------------------------------------
# reproducing checks


@pytest.mark.parametrize("kind", ["P", "S", "B"])
def test_reproduce_reference_residual(kind):
    config = REPRODUCE_CONFIGS[kind]
    residual = reproduce_check(
        kind,
        config.atoms(),
        config.evaluation_point(),
        config.geometry(),
        config.n_points,
        config.spacing,
        taper_fraction=config.taper_fraction,
    )
    assert residual <= 5e-5


def test_reproduce_zero_function():
    config = REPRODUCE_CONFIGS["P"]
    residual = reproduce_check(
        "P",
        [],
        config.evaluation_point(),
        config.geometry(),
        16,
        config.spacing,
        taper_fraction=config.taper_fraction,
    )
    assert residual == 0.0


def test_reproduce_error_paths():
    geometry = StripGeometry(2, 1.0)
    n, d = 16, 0.5
    step = 2.0 * math.pi / (n * d)
    good = SpectralAtom((step, step), 0.5)
    off_lattice = SpectralAtom((0.5 * step, step), 0.5)
    zero_freq = SpectralAtom((0.0, 0.0), 0.5)
    x = paravector(0.2, 0.0, 0.0)
    with pytest.raises(DomainError):
        reproduce_check("Q", [good], x, geometry, n, d)
    with pytest.raises(DomainError):
        reproduce_check("S", [off_lattice], x, geometry, n, d)
    with pytest.raises(DomainError):
        reproduce_check("S", [zero_freq], x, geometry, n, d)
    with pytest.raises(DomainError):
        reproduce_check("B", [zero_freq], x, geometry, n, d)
    beyond_nyquist = SpectralAtom((step * (n // 2), 0.0), 0.5)
    with pytest.raises(DomainError):
        reproduce_check("S", [beyond_nyquist], x, geometry, n, d)
    with pytest.raises(StripViolationError):
        reproduce_check("S", [good], paravector(1.0, 0.0, 0.0), geometry, n, d)
    over_pi = SpectralAtom((5.0 * step, 0.0), 0.5)
    assert np.linalg.norm(over_pi.frequency) > math.pi
    with pytest.raises(DomainError):
        reproduce_check("P", [over_pi], x, geometry, n, d)


def test_lattice_atoms_are_deterministic():
    first = lattice_atoms(2, 72, 0.85, 0.4, 1.25)
    second = lattice_atoms(2, 72, 0.85, 0.4, 1.25)
    assert len(first) == 8
    for a, b in zip(first, second):
        assert a.frequency == b.frequency
        assert a.coefficient == b.coefficient
        assert abs(a.coefficient) == pytest.approx(1.0 / 8.0)
