"""Real 2x2 unit-determinant maps of (X, P) and their action on squeeze parameters.

The three non-trivial one-parameter families are the Pauli exponentials

    generator_x(theta): [[cosh th, sinh th], [sinh th, cosh th]]   hyperbolic shear
    generator_y(nu):    [[cos nu,  sin nu],  [-sin nu, cos nu]]    rotation
    generator_z(rho):   [[e**rho, 0], [0, e**-rho]]                pure squeeze

Time evolution of the oscillator is the rotation family: the Heisenberg
flow of (X, P) equals ``time_evolution_matrix(t)``.  A squeezed state
transforms under any such coordinate change by the fractional-linear map
``mobius_squeeze``, and the map composes along matrix products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularTransformError, SymplecticInvariantError

__all__ = [
    "SymplecticMatrix",
    "generator_x",
    "generator_y",
    "generator_z",
    "compose",
    "transform_coords",
    "transform_operator_coeffs",
    "mobius_squeeze",
    "time_evolution_matrix",
]

DET_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SymplecticMatrix:
    """Row-major entries (a, b; c, d) with a*d - b*c = 1."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if abs(self.det - 1.0) > DET_TOLERANCE:
            raise SymplecticInvariantError(
                f"determinant {self.det!r} differs from 1 by more than {DET_TOLERANCE}"
            )

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "SymplecticMatrix":
        return cls(1.0, 0.0, 0.0, 1.0)

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])


def generator_x(theta: float) -> SymplecticMatrix:
    """Hyperbolic shear exp(-theta * sigma_x)."""
    ch, sh = math.cosh(theta), math.sinh(theta)
    return SymplecticMatrix(ch, sh, sh, ch)


def generator_y(nu: float) -> SymplecticMatrix:
    """Rotation exp(i * nu * sigma_y); the time-evolution family."""
    c, s = math.cos(nu), math.sin(nu)
    return SymplecticMatrix(c, s, -s, c)


def generator_z(rho: float) -> SymplecticMatrix:
    """Pure squeeze exp(rho * sigma_z) = diag(e**rho, e**-rho)."""
    e = math.exp(rho)
    return SymplecticMatrix(e, 0.0, 0.0, 1.0 / e)


def _check_det(m: SymplecticMatrix) -> None:
    if abs(m.det - 1.0) > DET_TOLERANCE:
        raise SymplecticInvariantError(
            f"determinant {m.det!r} differs from 1 by more than {DET_TOLERANCE}"
        )


def compose(second: SymplecticMatrix, first: SymplecticMatrix) -> SymplecticMatrix:
    """Matrix product second * first, i.e. ``first`` is applied first.

    The raw float product picks up determinant drift of order
    ``norm(M)**2 * eps``, which compounds over chains, so the product is
    rescaled by det**(-1/2) before returning.  The rescaling is a relative
    change at the level of the rounding error already present and leaves
    the fractional-linear squeeze action exactly invariant.
    """
    _check_det(second)
    _check_det(first)
    a = second.a * first.a + second.b * first.c
    b = second.a * first.b + second.b * first.d
    c = second.c * first.a + second.d * first.c
    d = second.c * first.b + second.d * first.d
    scale = 1.0 / math.sqrt(a * d - b * c)
    return SymplecticMatrix(a * scale, b * scale, c * scale, d * scale)


def transform_coords(m: SymplecticMatrix, x: float, p: float) -> tuple[float, float]:
    """(a*x + b*p, c*x + d*p)."""
    return m.a * x + m.b * p, m.c * x + m.d * p


def transform_operator_coeffs(
    m: SymplecticMatrix, alpha: complex, beta: complex
) -> tuple[complex, complex]:
    """Coefficients of i*alpha*P + beta*X rewritten in the new coordinates.

    In terms of (X2, P2) the operator reads i*(alpha*a + i*beta*b)*P2 +
    (beta*d - i*alpha*c)*X2; the ratio of the returned pair reproduces
    :func:`mobius_squeeze` by construction.
    """
    alpha, beta = complex(alpha), complex(beta)
    return alpha * m.a + 1j * beta * m.b, beta * m.d - 1j * alpha * m.c


def mobius_squeeze(m: SymplecticMatrix, squeeze: complex) -> complex:
    """Squeeze parameter in the new coordinates: (S*d - i*c) / (a + i*S*b).

    The denominator cannot vanish for Re(squeeze) > 0 and a valid matrix;
    for other inputs a vanishing denominator raises SingularTransformError.
    Positivity of the real part is guaranteed for the three generator
    families but is the caller's concern for arbitrary matrices.
    """
    squeeze = complex(squeeze)
    denominator = m.a + 1j * squeeze * m.b
    if denominator == 0:
        raise SingularTransformError(
            f"transform is singular at squeeze parameter {squeeze}"
        )
    return (squeeze * m.d - 1j * m.c) / denominator


def time_evolution_matrix(t: float) -> SymplecticMatrix:
    """Symplectic map effected by evolving (X, P) for time t: generator_y(t)."""
    return generator_y(t)
