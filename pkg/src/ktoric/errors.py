"""Exception types shared across the library."""


class KtoricError(Exception):
    """Base class for failures of a mathematical check or resource budget."""


class NonSquareError(KtoricError):
    """A square matrix was required."""


class ValidationFailedError(KtoricError):
    """Input data failed a validator that a pipeline step depends on."""


class TieError(KtoricError):
    """A height functional took the same value on two vertices."""


class OrderPropertyError(KtoricError):
    """A vertex order is not induced by any generic height function."""


class NoBaseVertexError(KtoricError):
    """An operation needed a base vertex and none was fixed."""


class BudgetExceededError(KtoricError):
    """A computation passed its resource budget before finishing."""


class InfiniteDimensionError(KtoricError):
    """A quotient ring expected to be a finite rank module is not."""


class RankDeficientError(KtoricError):
    """The candidate module basis has rank below the vertex count."""


class NotAUnitError(KtoricError):
    """Inversion was requested for a non invertible element."""
