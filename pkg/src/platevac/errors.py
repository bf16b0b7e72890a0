"""Exception hierarchy shared by all platevac modules."""


class PlateVacError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PlateVacError, ValueError):
    """Evaluation requested outside an operation's mathematical domain.

    Raised in particular on the plate surfaces (theta in {0, pi}), where
    the regularized sums genuinely diverge.  Returning an infinity there
    would silently poison downstream profiles, so it is an error instead.
    """


class PoleError(PlateVacError, ArithmeticError):
    """Gamma function, or a quantity built from it, evaluated at a pole."""


class ExtrapolationDivergenceError(PlateVacError, ArithmeticError):
    """Successive extrapolants grow: the series has no Abel limit."""


class IllConditionedFitError(PlateVacError, ArithmeticError):
    """The least-squares system for a finite part is numerically singular."""


class TruncationError(PlateVacError, ValueError):
    """A mode sum was truncated before the cutoff weight reached round-off."""


class QuadratureError(PlateVacError, ArithmeticError):
    """An adaptive quadrature failed to converge to the requested accuracy."""


class ConsistencyError(PlateVacError, ArithmeticError):
    """An internal cross-check failed (for instance, a position-dependent
    part that must cancel exceeded its cancellation tolerance)."""


class InvalidConfigError(PlateVacError, ValueError):
    """A runtime configuration violates its declared invariants."""
