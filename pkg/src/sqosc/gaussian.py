"""Closed-form dynamics of squeezed and displaced Gaussian states.

Units are fixed to hbar = m = omega = 1 throughout, so the Hamiltonian is
H = (P**2 + X**2) / 2 and the classical period is 2*pi.

A squeezed and displaced state is the normalised Gaussian

    psi(x) ~ exp(-(S/2) * (x - D)**2)

with complex squeeze parameter S (Re S > 0 for normalizability) and complex
displacement D.  Evolution keeps the state Gaussian; the parameters flow
through the fractional-linear maps

    S(t) = (S0*cos t + i*sin t) / (cos t + i*S0*sin t)
    D(t) = D0*S0 / (S0*cos t + i*sin t)

and the evolved wavefunction is

    psi(x, t) = N(t) * exp(-(S(t)/2) * (x**2 - 2*D(t)*x + D(t)*D0*cos t))
    N(t)      = (S0/pi)**(1/4) * (cos t + i*S0*sin t)**(-1/2)

where the complex square root in N(t) is continued continuously in t from
the principal branch at t = 0.  That branch choice is what makes the
wavefunction solve the Schroedinger equation (it reproduces the e**(-it/2)
ground-state phase and the sign flip of the full state after one period);
``evolution_phase`` exposes it and the Fock-side machinery in
:mod:`sqosc.fock` cross-checks it through an independent overlap
construction.

For real S0 and D0 the formulas above give a unit-norm state as written.
For complex parameters they leave a constant (time-independent) excess norm

    (|S0| / Re S0)**(1/4) * exp((Im D0)**2 * |S0|**2 / (2 * Re S0))

which ``wavefunction`` divides out so the returned state is always unit
norm; ``normalization`` returns the bare N(t).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonNormalizableStateError
from .grid import Grid, GridFunction

__all__ = [
    "SqueezedDisplacedState",
    "EvolvedParams",
    "evolve_squeeze",
    "evolve_displacement",
    "tracked_argument",
    "normalization",
    "evolve_state",
    "wavefunction",
    "wavefunction_grid",
    "evolution_phase",
    "probability_density",
    "density_width",
    "center",
]


def _require_normalizable(squeeze0: complex) -> complex:
    squeeze0 = complex(squeeze0)
    if not squeeze0.real > 0:
        raise NonNormalizableStateError(
            f"squeeze parameter must have positive real part, got {squeeze0}"
        )
    return squeeze0


@dataclass(frozen=True)
class SqueezedDisplacedState:
    """Initial data (S0, D0) of a squeezed and displaced Gaussian.

    Raises
    ------
    NonNormalizableStateError
        If Re(squeeze) <= 0, where exp(-(S/2) x**2) is not normalizable.
    """

    squeeze: complex
    displacement: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "squeeze", _require_normalizable(self.squeeze))
        object.__setattr__(self, "displacement", complex(self.displacement))

    @property
    def has_real_params(self) -> bool:
        return self.squeeze.imag == 0.0 and self.displacement.imag == 0.0


@dataclass(frozen=True)
class EvolvedParams:
    """Squeeze, displacement and bare normalization factor at time t."""

    t: float
    squeeze: complex
    displacement: complex
    norm_factor: complex


def evolve_squeeze(squeeze0: complex, t):
    """Squeeze parameter at time t.

    S(t) = (S0*cos t + i*sin t) / (cos t + i*S0*sin t).  The denominator
    never vanishes for Re S0 > 0, Re S(t) stays positive, and the map has
    period pi.  Vectorized over ``t``.
    """
    s0 = _require_normalizable(squeeze0)
    c, s = np.cos(t), np.sin(t)
    return (s0 * c + 1j * s) / (c + 1j * s0 * s)


def evolve_displacement(squeeze0: complex, displacement0: complex, t):
    """Displacement parameter at time t: D(t) = D0*S0 / (S0*cos t + i*sin t)."""
    s0 = _require_normalizable(squeeze0)
    d0 = complex(displacement0)
    c, s = np.cos(t), np.sin(t)
    return d0 * s0 / (s0 * c + 1j * s)


def tracked_argument(squeeze0: complex, t):
    """Continuous argument of w(t) = cos t + i*S0*sin t with value 0 at t = 0.

    Writing w(t) = ((1+S0)/2) * e**(it) * (1 + r*e**(-2it)) with
    r = (1-S0)/(1+S0) and |r| < 1 whenever Re S0 > 0, the last factor never
    leaves the right half-plane, so its principal argument is already
    continuous in t.  The winding lives entirely in the explicit ``t`` term;
    no sampling or unwrapping is needed.
    """
    s0 = _require_normalizable(squeeze0)
    r = (1 - s0) / (1 + s0)
    return t + np.angle(1 + s0) + np.angle(1 + r * np.exp(-2j * np.asarray(t, dtype=float)))


def normalization(squeeze0: complex, t):
    """Bare normalization factor N(t) = (S0/pi)**(1/4) * w(t)**(-1/2).

    The inverse square root is continued continuously in t from the
    principal branch at t = 0 (see :func:`tracked_argument`), so N picks up
    a factor of -1 over one full period -- the e**(-i t/2) zero-point phase.
    The fourth root of S0/pi is the principal branch.  Vectorized over t.
    """
    s0 = _require_normalizable(squeeze0)
    c, s = np.cos(t), np.sin(t)
    w = c + 1j * s0 * s
    theta = tracked_argument(s0, t)
    return (s0 / np.pi) ** 0.25 * np.abs(w) ** -0.5 * np.exp(-0.5j * theta)


def evolve_state(state: SqueezedDisplacedState, t: float) -> EvolvedParams:
    """All evolved parameters of the state at a single time."""
    return EvolvedParams(
        t=float(t),
        squeeze=complex(evolve_squeeze(state.squeeze, t)),
        displacement=complex(
            evolve_displacement(state.squeeze, state.displacement, t)
        ),
        norm_factor=complex(normalization(state.squeeze, t)),
    )


def _excess_norm(state: SqueezedDisplacedState) -> float:
    # Constant L2 norm of the bare construction; equals 1 for real (S0, D0).
    s0, d0 = state.squeeze, state.displacement
    sigma = s0.real
    return (abs(s0) / sigma) ** 0.25 * np.exp(
        d0.imag**2 * abs(s0) ** 2 / (2.0 * sigma)
    )


def wavefunction(state: SqueezedDisplacedState, t, x):
    """Unit-norm evolved wavefunction psi(x, t).

    Evaluates N(t) * exp(-(S(t)/2)(x**2 - 2 D(t) x + D(t) D0 cos t)) divided
    by the constant excess norm of that expression (1 for real parameters).
    ``t`` and ``x`` broadcast against each other.
    """
    s0 = state.squeeze
    d0 = state.displacement
    s_t = evolve_squeeze(s0, t)
    d_t = evolve_displacement(s0, d0, t)
    n_t = normalization(s0, t)
    x = np.asarray(x, dtype=float)
    exponent = -0.5 * s_t * (x**2 - 2.0 * d_t * x + d_t * d0 * np.cos(t))
    return n_t / _excess_norm(state) * np.exp(exponent)


def wavefunction_grid(
    state: SqueezedDisplacedState, t: float, grid: Grid | None = None
) -> GridFunction:
    """Sample :func:`wavefunction` on a grid (default 4096 points on [-20, 20])."""
    if grid is None:
        grid = Grid.default()
    return GridFunction(grid, wavefunction(state, t, grid.x))


def evolution_phase(state: SqueezedDisplacedState, t):
    """Continuous global phase of psi(.., t) relative to its Gaussian envelope.

    Returns the unwrapped argument of psi(x, t) / exp(-(S(t)/2)(x - D(t))**2),
    which is independent of x, with value 0 at t = 0.  For the ground state
    this is exactly -t/2.  The same quantity is produced independently by
    :func:`sqosc.fock.phase_delta` from vacuum overlaps, which is the
    cross-check that pins the branch of :func:`normalization`.
    """
    s0 = state.squeeze
    d0 = state.displacement
    s_t = evolve_squeeze(s0, t)
    d_t = evolve_displacement(s0, d0, t)
    theta = tracked_argument(s0, t)
    residue = 0.5 * s_t * d_t * (d_t - d0 * np.cos(t))
    return -0.5 * theta + np.imag(residue)


def density_width(squeeze0: float, t):
    """Inverse-variance parameter gamma(t) = S0 / (cos**2 t + S0**2 sin**2 t).

    Defined for real S0 > 0; equals Re S(t) there, and 1/(2*gamma) is the
    position variance of the packet.  gamma == S0 at t = 0 and swings to
    1/S0 a quarter period later; S0 = 1 is the rigid (coherent) case.
    """
    s0 = complex(squeeze0)
    if s0.imag != 0.0:
        raise ValueError("density_width is defined for real squeeze parameters")
    s0 = _require_normalizable(s0).real
    return s0 / (np.cos(t) ** 2 + s0**2 * np.sin(t) ** 2)


def center(displacement0: float, t):
    """Packet center D0*cos(t) for real D0: classical oscillation between +-D0."""
    d0 = complex(displacement0)
    if d0.imag != 0.0:
        raise ValueError("center is defined for real displacements")
    return d0.real * np.cos(t)


def probability_density(
    state: SqueezedDisplacedState, t, x, closed_form: bool | None = None
):
    """Position density |psi(x, t)|**2.

    For real (S0, D0) the density is the Gaussian

        sqrt(gamma/pi) * exp(-gamma * (x - D0*cos t)**2)

    with gamma from :func:`density_width`, and that closed form is used.
    For complex parameters no such form is exposed and the density is
    computed as |wavefunction|**2.  Pass ``closed_form=True`` to insist on
    the Gaussian formula (raises ValueError for complex parameters) or
    ``closed_form=False`` to force the |psi|**2 route.
    """
    if closed_form is None:
        closed_form = state.has_real_params
    if closed_form:
        if not state.has_real_params:
            raise ValueError(
                "closed-form density requires real squeeze and displacement"
            )
        gamma = density_width(state.squeeze.real, t)
        x = np.asarray(x, dtype=float)
        shift = x - center(state.displacement.real, t)
        return np.sqrt(gamma / np.pi) * np.exp(-gamma * shift**2)
    return np.abs(wavefunction(state, t, x)) ** 2
