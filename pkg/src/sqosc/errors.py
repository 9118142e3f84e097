"""Exception types shared across the package."""


class NonNormalizableStateError(ValueError):
    """Gaussian exponent has non-positive real part, so the state blows up."""


class GridTooSmallError(ValueError):
    """Operation needs more grid points than the supplied grid provides."""


class BoundaryDecayError(ValueError):
    """Wavefunction has not decayed at the grid edges; quadrature untrustworthy."""


class TruncationError(ValueError):
    """Fock truncation leaves non-negligible weight in the highest levels."""


class SymplecticInvariantError(ValueError):
    """Matrix determinant strays too far from one."""


class SingularTransformError(ZeroDivisionError):
    """Fractional-linear map evaluated at a pole."""


class GeneratorParseError(ValueError):
    """Malformed generator expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position
