"""Complexified Clifford algebra Cl(0, m) and para-vector arithmetic.

Generators e_1..e_m satisfy e_j e_k + e_k e_j = -2 delta_jk, so every
generator squares to -1.  A basis blade is indexed by a bitmask over the
generators (bit j-1 set means e_j participates); blade 0 is the scalar unit.
Coefficients are complex throughout, since the frequency-side projectors the
package is built on are genuinely complex even when kernel values end up
real.

The product sign between two blades is computed once per dimension by
counting the transpositions needed to interleave the generator lists plus
one sign flip per squared generator, and cached in a dense table.  All value
types here are immutable and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

MAX_DIMENSION = 4

_ALGEBRA_CACHE = {}


def _blade_product(left_mask, right_mask):
    """Sign and blade index of e_L * e_R for basis blades given as bitmasks."""
    sign = 1
    result = left_mask
    j = 0
    rest = right_mask
    while rest:
        if rest & 1:
            # move e_{j+1} left past every generator of `result` above it
            higher = result >> (j + 1)
            if bin(higher).count("1") % 2:
                sign = -sign
            if (result >> j) & 1:
                sign = -sign  # e_j e_j = -1
            result ^= 1 << j
        rest >>= 1
        j += 1
    return sign, result


class CliffordAlgebra:
    """Structure constants for Cl(0, m), 1 <= m <= 4, cached per dimension."""

    def __init__(self, m):
        if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_DIMENSION:
            raise DomainError(
                f"algebra dimension m must be an integer in [1, {MAX_DIMENSION}], got {m!r}"
            )
        self.m = int(m)
        self.dim = 1 << self.m

        sign = np.zeros((self.dim, self.dim), dtype=np.float64)
        blade = np.zeros((self.dim, self.dim), dtype=np.intp)
        for s in range(self.dim):
            for t in range(self.dim):
                sg, u = _blade_product(s, t)
                sign[s, t] = sg
                blade[s, t] = u
        sign.flags.writeable = False
        blade.flags.writeable = False
        self.product_sign = sign
        self.product_blade = blade

        # structure tensor C[u, s, t] = sign(s, t) when blade(s, t) == u
        tensor = np.zeros((self.dim, self.dim, self.dim), dtype=np.float64)
        for s in range(self.dim):
            for t in range(self.dim):
                tensor[blade[s, t], s, t] = sign[s, t]
        tensor.flags.writeable = False
        self.product_tensor = tensor

        # Clifford conjugation: coefficient conj times (-1)^(k(k+1)/2) per grade k
        grades = np.array([bin(b).count("1") for b in range(self.dim)])
        conj = np.where(grades * (grades + 1) // 2 % 2, -1.0, 1.0)
        conj.flags.writeable = False
        self.conj_sign = conj
        self.grades = grades

    def __repr__(self):
        return f"CliffordAlgebra(m={self.m})"


def algebra(m):
    """Shared CliffordAlgebra instance for dimension m."""
    try:
        return _ALGEBRA_CACHE[m]
    except KeyError:
        _ALGEBRA_CACHE[m] = CliffordAlgebra(m)
        return _ALGEBRA_CACHE[m]


def product_arrays(alg, left, right):
    """Geometric product on coefficient arrays of shape (2^m, ...)."""
    shape = np.broadcast_shapes(left.shape, right.shape)
    lf = np.broadcast_to(left, shape).reshape(alg.dim, -1)
    rf = np.broadcast_to(right, shape).reshape(alg.dim, -1)
    out = np.einsum("ust,sx,tx->ux", alg.product_tensor, lf, rf, optimize=True)
    return out.reshape(shape)


def conjugate_arrays(alg, coeffs):
    """Clifford conjugation on coefficient arrays of shape (2^m, ...)."""
    shape = (alg.dim,) + (1,) * (coeffs.ndim - 1)
    return np.conj(coeffs) * alg.conj_sign.reshape(shape)


class Multivector:
    """Immutable element of Cl(0, m) with complex coefficients.

    Coefficient index = blade bitmask (index 0 is the scalar part).
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, alg, coeffs):
        if not isinstance(alg, CliffordAlgebra):
            alg = algebra(alg)
        arr = np.asarray(coeffs, dtype=np.complex128)
        if arr.shape != (alg.dim,):
            raise DomainError(
                f"coefficient array must have shape ({alg.dim},) for m={alg.m}, got {arr.shape}"
            )
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "algebra", alg)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # --- constructors -------------------------------------------------
    @classmethod
    def zero(cls, m):
        alg = algebra(m)
        return cls(alg, np.zeros(alg.dim))

    @classmethod
    def scalar(cls, m, value):
        alg = algebra(m)
        c = np.zeros(alg.dim, dtype=np.complex128)
        c[0] = value
        return cls(alg, c)

    @classmethod
    def basis_vector(cls, m, j):
        """e_j for 1 <= j <= m."""
        alg = algebra(m)
        if not 1 <= j <= alg.m:
            raise DomainError(f"generator index must be in [1, {alg.m}], got {j}")
        c = np.zeros(alg.dim, dtype=np.complex128)
        c[1 << (j - 1)] = 1.0
        return cls(alg, c)

    @classmethod
    def from_vector(cls, m, xv):
        """Pure vector sum(xv[j-1] * e_j); xv may be complex."""
        alg = algebra(m)
        xv = np.asarray(xv, dtype=np.complex128)
        if xv.shape != (alg.m,):
            raise DomainError(f"vector must have {alg.m} components, got shape {xv.shape}")
        c = np.zeros(alg.dim, dtype=np.complex128)
        for j in range(alg.m):
            c[1 << j] = xv[j]
        return cls(alg, c)

    # --- algebra ------------------------------------------------------
    def _check_same(self, other):
        if self.algebra.m != other.algebra.m:
            raise DomainError(
                f"dimension mismatch: m={self.algebra.m} vs m={other.algebra.m}"
            )

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check_same(other)
            return Multivector(self.algebra, self.coeffs + other.coeffs)
        if isinstance(other, (int, float, complex, np.number)):
            c = self.coeffs.copy()
            c[0] += other
            return Multivector(self.algebra, c)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector(self.algebra, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check_same(other)
            alg = self.algebra
            out = np.zeros(alg.dim, dtype=np.complex128)
            # dense blade-pair accumulation; the tables make the sign bookkeeping exact
            for s in range(alg.dim):
                cs = self.coeffs[s]
                if cs == 0:
                    continue
                out[alg.product_blade[s]] += alg.product_sign[s] * cs * other.coeffs
            return Multivector(alg, out)
        if isinstance(other, (int, float, complex, np.number)):
            return Multivector(self.algebra, self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            # scalars commute with everything
            return Multivector(self.algebra, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Multivector(self.algebra, self.coeffs / other)
        return NotImplemented

    def conjugate(self):
        """Clifford conjugation: reverses blades and negates generators."""
        return Multivector(self.algebra, conjugate_arrays(self.algebra, self.coeffs))

    def scalar_part(self):
        return complex(self.coeffs[0])

    def nonscalar_part(self):
        c = self.coeffs.copy()
        c[0] = 0.0
        return Multivector(self.algebra, c)

    def vector_coefficients(self):
        """Coefficients of e_1..e_m as a length-m complex array."""
        return np.array([self.coeffs[1 << j] for j in range(self.algebra.m)])

    def norm(self):
        """Euclidean coefficient norm, equal to sqrt(Sc{conj(x) x})."""
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2)))

    def paravector_deviation(self):
        """How far the value is from a real para-vector: max stray magnitude.

        Measures both imaginary parts of the scalar/vector coefficients and
        any coefficient on blades of grade >= 2.
        """
        dev = 0.0
        for b in range(self.algebra.dim):
            if b == 0 or bin(b).count("1") == 1:
                dev = max(dev, abs(self.coeffs[b].imag))
            else:
                dev = max(dev, abs(self.coeffs[b]))
        return dev

    def to_paravector(self, tol=1e-9):
        dev = self.paravector_deviation()
        if dev > tol:
            raise DomainError(
                f"multivector is not para-vector valued (stray magnitude {dev:.3e} > {tol:.1e})"
            )
        return ParaVector(self.coeffs[0].real, tuple(self.coeffs[1 << j].real for j in range(self.algebra.m)))

    def isclose(self, other, tol=1e-12):
        self._check_same(other)
        return bool(np.all(np.abs(self.coeffs - other.coeffs) <= tol))

    def __repr__(self):
        terms = []
        for b in range(self.algebra.dim):
            c = self.coeffs[b]
            if c != 0:
                name = "1" if b == 0 else "e" + "".join(str(j + 1) for j in range(self.algebra.m) if b >> j & 1)
                terms.append(f"({c:.6g})*{name}")
        return "Multivector[m=%d](%s)" % (self.algebra.m, " + ".join(terms) or "0")


@dataclass(frozen=True)
class ParaVector:
    """Real para-vector x0 + x1 e_1 + ... + xm e_m in R^(m+1)."""

    x0: float
    xv: tuple

    def __post_init__(self):
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "xv", tuple(float(v) for v in self.xv))
        if not 1 <= len(self.xv) <= MAX_DIMENSION:
            raise DomainError(
                f"para-vector needs between 1 and {MAX_DIMENSION} vector components, got {len(self.xv)}"
            )

    @property
    def m(self):
        return len(self.xv)

    def vector(self):
        return np.array(self.xv, dtype=np.float64)

    def vector_norm(self):
        return float(np.linalg.norm(self.xv))

    def norm(self):
        return float(math.hypot(self.x0, self.vector_norm()))

    def conjugate(self):
        return ParaVector(self.x0, tuple(-v for v in self.xv))

    def __add__(self, other):
        if isinstance(other, ParaVector):
            if other.m != self.m:
                raise DomainError(f"dimension mismatch: m={self.m} vs m={other.m}")
            return ParaVector(self.x0 + other.x0, tuple(a + b for a, b in zip(self.xv, other.xv)))
        if isinstance(other, (int, float, np.floating, np.integer)):
            return ParaVector(self.x0 + float(other), self.xv)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ParaVector):
            return self + ParaVector(-other.x0, tuple(-v for v in other.xv))
        if isinstance(other, (int, float, np.floating, np.integer)):
            return ParaVector(self.x0 - float(other), self.xv)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return ParaVector(self.x0 * other, tuple(v * other for v in self.xv))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        """x^-1 = conj(x) / |x|^2; raises on the zero para-vector."""
        n2 = self.x0 * self.x0 + sum(v * v for v in self.xv)
        if n2 == 0.0:
            raise DomainError("the zero para-vector has no inverse")
        return ParaVector(self.x0 / n2, tuple(-v / n2 for v in self.xv))

    def to_multivector(self):
        alg = algebra(self.m)
        c = np.zeros(alg.dim, dtype=np.complex128)
        c[0] = self.x0
        for j in range(self.m):
            c[1 << j] = self.xv[j]
        return Multivector(alg, c)


def paravector(x0, *xv):
    """Convenience constructor: paravector(x0, x1, ..., xm)."""
    return ParaVector(x0, tuple(xv))
