"""Uniform 1-D spatial grids and complex-valued grid functions.

Everything downstream (projection, reconstruction, residual checks) shares
this representation, so quadrature conventions live here: plain trapezoid
weights, which are spectrally accurate for the Gaussian-decay integrands
this package deals in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Uniformly spaced points on [x_min, x_max], endpoints included."""

    x_min: float
    x_max: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.n}")
        if not self.x_max > self.x_min:
            raise ValueError("grid requires x_max > x_min")

    @classmethod
    def default(cls, half_width: float = 20.0, n: int = 4096) -> "Grid":
        return cls(-half_width, half_width, n)

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n - 1)

    @cached_property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n)

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.full(self.n, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    def integrate(self, values: np.ndarray) -> complex:
        """Trapezoid quadrature of sampled values over the grid."""
        return complex(np.dot(self.weights, values))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Complex samples of a wavefunction on a :class:`Grid`."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"expected {self.grid.n} samples, got shape {values.shape}"
            )
        object.__setattr__(self, "values", values)

    def norm(self) -> float:
        """L2 norm, trapezoid quadrature."""
        return float(
            np.sqrt(self.grid.integrate(np.abs(self.values) ** 2).real)
        )

    def normalized(self) -> "GridFunction":
        return GridFunction(self.grid, self.values / self.norm())

    def inner(self, other: "GridFunction") -> complex:
        self._check_same_grid(other)
        return self.grid.integrate(np.conj(self.values) * other.values)

    def l2_distance(self, other: "GridFunction") -> float:
        self._check_same_grid(other)
        diff = self.values - other.values
        return float(np.sqrt(self.grid.integrate(np.abs(diff) ** 2).real))

    def _check_same_grid(self, other: "GridFunction") -> None:
        if other.grid != self.grid:
            raise ValueError("grid functions live on different grids")
