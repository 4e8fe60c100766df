"""Exception hierarchy.

``InvalidInput`` covers violated preconditions (CLI exit code 2);
``InternalError`` covers states that are impossible if the code is correct
(CLI exit code 3).
"""


class PureQuarticError(Exception):
    pass


class InvalidInput(PureQuarticError, ValueError):
    pass


class NotQuadraticResidue(InvalidInput):
    pass


class NotRepresentable(InvalidInput):
    pass


class InternalError(PureQuarticError, RuntimeError):
    pass


class SearchBoundExceeded(InternalError):
    pass


class NoNormTwoSolution(InternalError):
    pass


class InvariantViolation(InternalError):
    pass
