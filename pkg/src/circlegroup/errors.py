"""Exception hierarchy.

``NumericalError`` subclasses signal that a computation could not reach its
stated accuracy; the remaining ``CircleGroupError`` subclasses flag inputs
that violate an operation's preconditions.
"""


class CircleGroupError(Exception):
    pass


class NumericalError(CircleGroupError):
    pass


class NotADiffeomorphism(CircleGroupError):
    pass


class ModeOverflow(NumericalError):
    pass


class ConvergenceFailure(NumericalError):
    pass


class SlicingFailure(NumericalError):
    pass


class WordTooLong(NumericalError):
    pass


class CoverageGap(CircleGroupError):
    pass


class OutsideNeighborhood(CircleGroupError):
    pass


class NotApplicable(CircleGroupError):
    pass


class Infeasible(CircleGroupError):
    pass


class StepTooLarge(CircleGroupError):
    pass
