"""Exception types raised by qevo."""


class QevoError(Exception):
    """Base class for all domain errors."""


class NotHermitian(QevoError, ValueError):
    pass


class NotUnitary(QevoError, ValueError):
    pass


class DimensionMismatch(QevoError, ValueError):
    pass


class WrongDimension(DimensionMismatch):
    pass


class ZeroOperator(QevoError, ValueError):
    pass


class SameRay(QevoError, ValueError):
    """Initial and final states differ only by a global phase."""


class Infeasible(QevoError, ValueError):
    """The requested suboptimal parameter cannot realize the endpoint separation."""


class OrthogonalEndpoints(QevoError, ValueError):
    """A stationary suboptimal evolution between orthogonal states needs more than
    the two-dimensional span of the endpoints."""

    def __init__(self, msg=None):
        super().__init__(
            msg
            or "orthogonal endpoints: a suboptimal stationary evolution between "
            "orthogonal states must exit the two-dimensional span of |A> and |B>; "
            "use build_four_level_orthogonal instead"
        )


class StationaryState(QevoError, ValueError):
    """The state is an eigenstate of H, so the evolution speed vanishes."""


class TracelessPropagator(QevoError, ArithmeticError):
    """Tr U = 0, so the nonentangling surrogate U_A ⊗ U_B / Tr U is undefined."""


class UnknownScenario(QevoError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown scenario"
