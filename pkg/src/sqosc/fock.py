"""Fock-basis spectral machinery: the independent verification route.

Any state can be expanded over the oscillator eigenfunctions |n> with
E_n = n + 1/2 and propagated exactly by per-level phases e**(-i E_n t).
This route shares no code with the closed-form Gaussian evolution, which is
what makes agreement between the two meaningful.

The module also builds Schroedinger states out of backward-evolved operator
eigenstates: if phi is an eigenstate of A(0), the evolved state is

    psi(t) = e**(-i t/2) * (<0|phi(0)> / <0|phi(-t)>) * phi(-t)

where the vacuum overlaps are one-dimensional complex Gaussian integrals
evaluated in closed form (and validated against quadrature in the tests).
The continuous phase delta(t) of that prefactor is the quantity the
closed-form branch tracking must reproduce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import BoundaryDecayError, NonNormalizableStateError, TruncationError
from .grid import Grid, GridFunction
from .heisenberg import OperatorCoeffs, coeffs_at, eigenstate_grid, params_from_coeffs

__all__ = [
    "FockExpansion",
    "hermite_function",
    "hermite_functions",
    "project",
    "evolve_fock",
    "reconstruct",
    "vacuum_overlap",
    "phase_delta",
    "phase_delta_trajectory",
    "schrodinger_from_heisenberg",
]

DEFAULT_N_MAX = 128

# Fraction of the total weight allowed in the top TAIL_WINDOW levels.
TAIL_WINDOW = 8
TAIL_FRACTION = 1e-12
BOUNDARY_DECAY = 1e-14


@dataclass(frozen=True, eq=False)
class FockExpansion:
    """Coefficients b_n over the oscillator eigenstates, n = 0..n_max."""

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d array")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n_max(self) -> int:
        return self.coeffs.size - 1

    def total_weight(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


def hermite_functions(n_max: int, x) -> np.ndarray:
    """Orthonormal oscillator eigenfunctions psi_0..psi_n_max sampled at x.

    Uses the stable three-term recursion on the normalised functions

        psi_0 = pi**(-1/4) e**(-x**2/2)
        psi_1 = sqrt(2) x psi_0
        psi_n = sqrt(2/n) x psi_{n-1} - sqrt((n-1)/n) psi_{n-2}

    never forming raw Hermite polynomials, so there is no overflow for any
    n this package touches (values stay O(1)).  Returns an array of shape
    (n_max + 1, len(x)).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((n_max + 1, x.size))
    out[0] = np.pi**-0.25 * np.exp(-0.5 * x**2)
    if n_max >= 1:
        out[1] = math.sqrt(2.0) * x * out[0]
    for n in range(2, n_max + 1):
        out[n] = math.sqrt(2.0 / n) * x * out[n - 1] - math.sqrt((n - 1) / n) * out[n - 2]
    return out


def hermite_function(n: int, x):
    """Single orthonormal eigenfunction psi_n(x); scalar in, scalar out."""
    values = hermite_functions(n, x)[n]
    return float(values[0]) if np.ndim(x) == 0 else values


def project(
    psi: Union[GridFunction, Callable[[np.ndarray], np.ndarray]],
    n_max: int = DEFAULT_N_MAX,
    grid: Grid | None = None,
) -> FockExpansion:
    """Expand a state over |0>..|n_max> by quadrature and normalise it.

    ``psi`` is either a :class:`GridFunction` or a callable evaluated on
    ``grid`` (default grid when omitted).  The coefficients are rescaled so
    their total weight is exactly 1.

    Raises
    ------
    BoundaryDecayError
        If |psi| at either grid edge exceeds 1e-14 of its peak, in which
        case the quadrature cannot be trusted.
    TruncationError
        If, after normalisation, the top 8 levels hold >= 1e-12 of the
        weight, i.e. n_max is too small for this state.
    """
    if isinstance(psi, GridFunction):
        grid = psi.grid
        values = psi.values
    else:
        if grid is None:
            grid = Grid.default()
        values = np.asarray(psi(grid.x), dtype=complex)

    peak = float(np.max(np.abs(values)))
    if peak == 0.0:
        raise ValueError("cannot project the zero function")
    edge = max(abs(values[0]), abs(values[-1]))
    if edge > BOUNDARY_DECAY * peak:
        raise BoundaryDecayError(
            f"state has not decayed at the grid boundary (edge/peak = {edge / peak:.3e}); "
            "enlarge the grid"
        )

    basis = hermite_functions(n_max, grid.x)
    coeffs = basis @ (grid.weights * values)

    total = float(np.sum(np.abs(coeffs) ** 2))
    tail = float(np.sum(np.abs(coeffs[max(0, n_max - TAIL_WINDOW + 1):]) ** 2))
    if tail >= TAIL_FRACTION * total:
        raise TruncationError(
            f"top {TAIL_WINDOW} levels hold {tail / total:.3e} of the weight "
            f"(limit {TAIL_FRACTION:.0e}); raise n_max above {n_max}"
        )
    return FockExpansion(coeffs / math.sqrt(total))


def evolve_fock(expansion: FockExpansion, t: float) -> FockExpansion:
    """Exact spectral propagation: b_n -> e**(-i (n + 1/2) t) b_n."""
    n = np.arange(expansion.coeffs.size)
    return FockExpansion(expansion.coeffs * np.exp(-1j * (n + 0.5) * t))


def reconstruct(expansion: FockExpansion, grid: Grid | None = None) -> GridFunction:
    """Sum b_n psi_n(x) on the grid (summed in ascending n)."""
    if grid is None:
        grid = Grid.default()
    basis = hermite_functions(expansion.n_max, grid.x)
    return GridFunction(grid, expansion.coeffs @ basis)


def vacuum_overlap(squeeze, displacement=0j):
    """Overlap <0|phi> for the unnormalized phi(x) = exp(-(S/2)(x - D)**2).

    Closed form of the complex Gaussian integral:

        <0|phi> = pi**(-1/4) * sqrt(2*pi/(1+S)) * exp(-S*D**2 / (2*(1+S)))

    with the principal square root, which is continuous wherever Re S > 0
    (1 + S never leaves the right half-plane).  Broadcasts over array
    arguments.  Raises NonNormalizableStateError when any Re S <= 0.
    """
    squeeze = np.asarray(squeeze, dtype=complex)
    displacement = np.asarray(displacement, dtype=complex)
    if np.any(squeeze.real <= 0):
        raise NonNormalizableStateError("vacuum overlap requires Re(squeeze) > 0")
    value = (
        np.pi**-0.25
        * np.sqrt(2.0 * np.pi / (1.0 + squeeze))
        * np.exp(-squeeze * displacement**2 / (2.0 * (1.0 + squeeze)))
    )
    return complex(value) if value.ndim == 0 else value


def _overlap_along_trajectory(coeffs: OperatorCoeffs, times: np.ndarray) -> np.ndarray:
    """<0|phi(-t)> for each t, vectorized through the closed-form overlap."""
    c, s = np.cos(times), np.sin(times)
    alpha_m = coeffs.alpha * c + 1j * coeffs.beta * s
    beta_m = coeffs.beta * c + 1j * coeffs.alpha * s
    return vacuum_overlap(beta_m / alpha_m, coeffs.eigenvalue / beta_m)


def phase_delta_trajectory(
    coeffs: OperatorCoeffs,
    times,
    samples_per_period: int = 64,
    max_refinements: int = 16,
) -> np.ndarray:
    """Unwrapped phase delta(t) at each requested time, with delta(0) = 0.

    delta(t) is the argument of e**(-i t/2) <0|phi(0)> / <0|phi(-t)>, made
    continuous by evaluating the overlaps on a dense mesh covering [0, t]
    (at least ``samples_per_period`` points per period, refined until no
    step between neighbouring samples exceeds pi/2) and unwrapping.
    """
    times = np.atleast_1d(np.asarray(times, dtype=float))
    lo = min(0.0, float(times.min(initial=0.0)))
    hi = max(0.0, float(times.max(initial=0.0)))
    ov0 = _overlap_along_trajectory(coeffs, np.array([0.0]))[0]

    n = max(65, int(math.ceil((hi - lo) / (2.0 * np.pi) * samples_per_period)) + 1)
    for _ in range(max_refinements):
        mesh = np.union1d(np.union1d(np.linspace(lo, hi, n), times), [0.0])
        values = np.exp(-0.5j * mesh) * ov0 / _overlap_along_trajectory(coeffs, mesh)
        raw = np.angle(values)
        unwrapped = np.unwrap(raw)
        if np.all(np.abs(np.diff(unwrapped)) < 0.5 * np.pi):
            anchor = unwrapped[np.searchsorted(mesh, 0.0)]
            delta = unwrapped - anchor
            return delta[np.searchsorted(mesh, times)]
        n *= 2
    raise RuntimeError("phase unwrapping did not resolve; state parameters too wild")


def phase_delta(coeffs: OperatorCoeffs, t: float, samples_per_period: int = 64) -> float:
    """delta(t) for a single time; see :func:`phase_delta_trajectory`."""
    return float(
        phase_delta_trajectory(coeffs, [t], samples_per_period=samples_per_period)[0]
    )


def schrodinger_from_heisenberg(
    coeffs: OperatorCoeffs, t: float, grid: Grid | None = None
) -> GridFunction:
    """Normalised Schroedinger state at time t from the eigenstate of A(0).

    Evaluates e**(-i t/2) * (<0|phi(0)> / <0|phi(-t)>) * phi(-t) on the grid
    and rescales by its (real, positive) L2 norm, keeping the phase intact.
    Must agree with projecting phi(0) and propagating spectrally; that
    agreement is the point of this module.
    """
    if grid is None:
        grid = Grid.default()
    phi_back = eigenstate_grid(coeffs, -t, grid)
    squeeze0, displacement0 = params_from_coeffs(coeffs)
    back = coeffs_at(coeffs, -t)
    squeeze_b, displacement_b = params_from_coeffs(back)
    prefactor = (
        np.exp(-0.5j * t)
        * vacuum_overlap(squeeze0, displacement0)
        / vacuum_overlap(squeeze_b, displacement_b)
    )
    values = prefactor * phi_back.values
    return GridFunction(grid, values / GridFunction(grid, values).norm())
