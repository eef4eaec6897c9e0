"""Monogenic reproducing kernels on strip domains.

Public surface, by layer: Clifford arithmetic (algebra, Multivector,
paravector), Bessel evaluation (bessel_j, bessel_scaled), radial quadrature
and its brute-force oracle, kernel evaluators on the strip, the spectral
toolbox (grids, Hardy split, slice propagation, band-limited extension),
grid file I/O, and the named verification suites that back both the CLI
`verify` command and the acceptance tests.
"""

from .bessel import GeometricConstants, bessel_j, bessel_scaled, sigma_constant
from .clifford import CliffordAlgebra, Multivector, ParaVector, algebra, paravector
from .errors import (
    DomainError,
    GridFormatError,
    OracleRefusalError,
    OverflowDiagnosticError,
    SpectralSupportError,
    StripViolationError,
)
from .gridio import blade_names, read_grid, write_grid
from .kernels import (
    KernelEvalReport,
    StripGeometry,
    bergman_halfspace_kernel,
    bergman_kernel,
    cauchy_kernel,
    chi_projector,
    monogenic_exponential,
    poisson_halfspace,
    pw_kernel,
    sinc_ball,
    sinc_cube,
    szego_halfspace_closed,
    szego_kernel_closed,
    szego_kernel_integral,
)
from .radial import (
    RadialPair,
    RadialProfile,
    ball_indicator,
    bergman_halfspace,
    bergman_weight,
    exp_decay,
    radial_integral,
    radial_integral_with_error,
    tensor_oracle,
    tensor_oracle_with_error,
)
from .spectral import (
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
    spectrum_inner_product,
)
from .verify import CheckResult, SuiteResult, run_suite, run_suites, suite_names

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # clifford
    "CliffordAlgebra",
    "Multivector",
    "ParaVector",
    "algebra",
    "paravector",
    # bessel
    "GeometricConstants",
    "bessel_j",
    "bessel_scaled",
    "sigma_constant",
    # errors
    "DomainError",
    "GridFormatError",
    "OracleRefusalError",
    "OverflowDiagnosticError",
    "SpectralSupportError",
    "StripViolationError",
    # grid file I/O
    "blade_names",
    "read_grid",
    "write_grid",
    # kernels
    "KernelEvalReport",
    "StripGeometry",
    "bergman_halfspace_kernel",
    "bergman_kernel",
    "cauchy_kernel",
    "chi_projector",
    "monogenic_exponential",
    "poisson_halfspace",
    "pw_kernel",
    "sinc_ball",
    "sinc_cube",
    "szego_halfspace_closed",
    "szego_kernel_closed",
    "szego_kernel_integral",
    # radial quadrature
    "RadialPair",
    "RadialProfile",
    "ball_indicator",
    "bergman_halfspace",
    "bergman_weight",
    "exp_decay",
    "radial_integral",
    "radial_integral_with_error",
    "tensor_oracle",
    "tensor_oracle_with_error",
    # spectral toolbox
    "GridFunction",
    "SpectralAtom",
    "SpectralCondition",
    "Spectrum",
    "atom_sum_value",
    "check_ball_support",
    "check_strip_weight",
    "dft",
    "dirac_residual",
    "grid_inner_product",
    "hardy_split",
    "idft",
    "planck_taper",
    "plancherel_check",
    "propagate_slice",
    "pw_extend",
    "reproduce_check",
    "spectrum_inner_product",
    # verification suites
    "CheckResult",
    "SuiteResult",
    "run_suite",
    "run_suites",
    "suite_names",
]
