"""Exception types shared across the package.

Domain violations are deliberately loud and specific: every guarded
precondition names the inequality it enforces so callers (and the CLI) can
report exactly which constraint was violated.
"""


class DomainError(ValueError):
    """A mathematical precondition was violated (divergent integral, bad point)."""


class StripViolationError(DomainError):
    """Evaluation point leaves the strip of convergence, e.g. |w0 + x0| >= 2a."""


class SpectralSupportError(DomainError):
    """Spectrum carries mass outside the admissible support set."""

    def __init__(self, message, outside_mass=None):
        super().__init__(message)
        self.outside_mass = outside_mass


class OverflowDiagnosticError(DomainError):
    """A frequency multiplier would overflow float range; names the worst bin."""


class OracleRefusalError(ValueError):
    """The brute-force oracle refuses a grid too large to evaluate honestly."""


class GridFormatError(ValueError):
    """A grid file failed to parse; carries the byte offset when known."""

    def __init__(self, message, byte_offset=None):
        super().__init__(message)
        self.byte_offset = byte_offset
