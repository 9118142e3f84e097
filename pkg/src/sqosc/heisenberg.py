"""Linear X/P operators in the Heisenberg picture and their Gaussian eigenstates.

The object of interest is A = i*alpha*P + beta*X with complex coefficients.
Under H = (P**2 + X**2)/2 the Heisenberg flow rotates (X, P) with unit
frequency, which on the coefficient pair acts as

    alpha(t) = alpha*cos t - i*beta*sin t
    beta(t)  = beta*cos t  - i*alpha*sin t

while the spectrum of A(t) is time independent.  The eigenstate of A(t)
with eigenvalue lam is the (unnormalized) Gaussian

    phi(x) = exp(-(beta(t)/(2*alpha(t))) * (x - lam/beta(t))**2)

so a squeezed and displaced state with S = beta/alpha, D = lam/beta is just
such an eigenstate, and the backward-evolved coefficients at -t reproduce
the closed-form parameter flow in :mod:`sqosc.gaussian`.

Position representation: with [X, P] = i, the operator acts on samples as

    (i*alpha*P + beta*X) psi = alpha * dpsi/dx + beta * x * psi

and ``apply_operator`` evaluates the derivative by 4th-order finite
differences so eigen-residuals can be checked without reusing any of the
closed-form machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import GridTooSmallError, NonNormalizableStateError
from .grid import Grid, GridFunction

__all__ = [
    "OperatorCoeffs",
    "HeisenbergRotation",
    "coeffs_at",
    "params_from_coeffs",
    "evolved_params",
    "eigenstate_grid",
    "apply_operator",
    "eigenvalue_residual",
    "heisenberg_xp",
]


@dataclass(frozen=True)
class OperatorCoeffs:
    """Coefficients of A = i*alpha*P + beta*X and its eigenvalue."""

    alpha: complex
    beta: complex
    eigenvalue: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "eigenvalue", complex(self.eigenvalue))

    @classmethod
    def for_state(cls, squeeze: complex, displacement: complex = 0j) -> "OperatorCoeffs":
        """Coefficients (1, S, S*D) whose eigenstate has parameters (S, D)."""
        squeeze = complex(squeeze)
        return cls(1.0 + 0j, squeeze, squeeze * complex(displacement))


@dataclass(frozen=True)
class HeisenbergRotation:
    """Coefficients of X(t) = X cos t + P sin t, P(t) = P cos t - X sin t."""

    t: float
    cos_t: float
    sin_t: float


def heisenberg_xp(t: float) -> HeisenbergRotation:
    """Heisenberg rotation of the canonical pair at time t."""
    return HeisenbergRotation(t=float(t), cos_t=float(np.cos(t)), sin_t=float(np.sin(t)))


def coeffs_at(coeffs: OperatorCoeffs, t: float) -> OperatorCoeffs:
    """Coefficients of A(t); the eigenvalue is untouched (it is conserved)."""
    c, s = np.cos(t), np.sin(t)
    return replace(
        coeffs,
        alpha=coeffs.alpha * c - 1j * coeffs.beta * s,
        beta=coeffs.beta * c - 1j * coeffs.alpha * s,
    )


def params_from_coeffs(coeffs: OperatorCoeffs) -> tuple[complex, complex]:
    """Squeeze and displacement (beta/alpha, lam/beta) of the eigenstate.

    Raises ZeroDivisionError when alpha or beta vanishes.
    """
    if coeffs.alpha == 0:
        raise ZeroDivisionError("alpha = 0: squeeze parameter beta/alpha undefined")
    if coeffs.beta == 0:
        raise ZeroDivisionError("beta = 0: displacement eigenvalue/beta undefined")
    return coeffs.beta / coeffs.alpha, coeffs.eigenvalue / coeffs.beta


def evolved_params(coeffs: OperatorCoeffs, t: float) -> tuple[complex, complex]:
    """(S(t), D(t)) of the evolved state: the t = 0 parameters of A(-t).

    Agrees with ``gaussian.evolve_squeeze`` / ``gaussian.evolve_displacement``
    applied to params_from_coeffs(coeffs); the two routes are kept separate
    so tests can compare them.
    """
    return params_from_coeffs(coeffs_at(coeffs, -t))


def eigenstate_grid(coeffs: OperatorCoeffs, t: float, grid: Grid | None = None) -> GridFunction:
    """Unnormalized eigenstate of A(t) sampled on the grid.

    phi(x) = exp(-(beta(t)/(2 alpha(t))) * (x - lam/beta(t))**2).  Raises
    NonNormalizableStateError when Re(beta(t)/alpha(t)) <= 0.
    """
    if grid is None:
        grid = Grid.default()
    ct = coeffs_at(coeffs, t)
    squeeze = ct.beta / ct.alpha
    if not squeeze.real > 0:
        raise NonNormalizableStateError(
            f"Re(beta/alpha) = {squeeze.real} <= 0 at t = {t}: eigenstate not normalizable"
        )
    displacement = ct.eigenvalue / ct.beta
    values = np.exp(-0.5 * squeeze * (grid.x - displacement) ** 2)
    return GridFunction(grid, values)


def _derivative(values: np.ndarray, h: float) -> np.ndarray:
    """4th-order first derivative: central stencil inside, one-sided at edges."""
    f = values
    d = np.empty_like(f)
    d[2:-2] = (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / (12.0 * h)
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h)
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h)
    d[-2] = (3.0 * f[-1] + 10.0 * f[-2] - 18.0 * f[-3] + 6.0 * f[-4] - f[-5]) / (12.0 * h)
    d[-1] = (25.0 * f[-1] - 48.0 * f[-2] + 36.0 * f[-3] - 16.0 * f[-4] + 3.0 * f[-5]) / (12.0 * h)
    return d


def apply_operator(coeffs: OperatorCoeffs, t: float, psi: GridFunction) -> GridFunction:
    """Samples of A(t) psi = alpha(t) * psi' + beta(t) * x * psi.

    The derivative uses 4th-order finite differences, so this route is
    independent of the closed-form eigenstate algebra.  Needs at least 5
    grid points (GridTooSmallError otherwise).
    """
    if psi.grid.n < 5:
        raise GridTooSmallError(
            f"operator application needs >= 5 grid points, got {psi.grid.n}"
        )
    ct = coeffs_at(coeffs, t)
    dpsi = _derivative(psi.values, psi.grid.spacing)
    return GridFunction(psi.grid, ct.alpha * dpsi + ct.beta * psi.grid.x * psi.values)


def eigenvalue_residual(coeffs: OperatorCoeffs, t: float, grid: Grid | None = None) -> float:
    """Relative eigen-residual ||(A(t) - lam) phi|| / ||phi|| on the grid.

    phi is the analytic eigenstate, A(t) is applied by finite differences,
    and the two outermost points on each side (where the one-sided stencils
    live) are excluded from both norms.
    """
    phi = eigenstate_grid(coeffs, t, grid)
    a_phi = apply_operator(coeffs, t, phi)
    residual = a_phi.values - coeffs.eigenvalue * phi.values
    interior = slice(2, -2)
    return float(
        np.linalg.norm(residual[interior]) / np.linalg.norm(phi.values[interior])
    )
