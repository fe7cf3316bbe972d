"""Exception hierarchy.

Everything raised on bad input derives from ``BilliardError`` so the CLI can
map it to a single exit status.
"""

from __future__ import annotations


class BilliardError(Exception):
    """Base class for all library errors."""


class ParseError(BilliardError, ValueError):
    """Text or JSON input could not be turned into a field element/structure."""


class FieldMismatchError(BilliardError, TypeError):
    """Two operands live in different fields."""


class DimensionError(BilliardError, ValueError):
    pass


class NotMultiplicityFreeError(BilliardError, ValueError):
    """The matrix is not multiplicity-free with the supplied spectrum."""


class DuplicateEigenvalueError(NotMultiplicityFreeError):
    def __init__(self, i: int, j: int, value) -> None:
        self.i, self.j, self.value = i, j, value
        super().__init__(f"theta_{i} = theta_{j} = {value}: eigenvalues must be pairwise distinct")


class SeedError(BilliardError, ValueError):
    """The seed vector has a zero component in some eigenspace."""

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"E_{index} v = 0: seed vector is not generic")


class LeonardSystemError(BilliardError, ValueError):
    """A Leonard system axiom fails.

    ``condition`` names the violated axiom ("multiplicity-free", "E A* E" or
    "E* A E*"); ``pair`` is the offending (i, j) when there is one.
    """

    def __init__(self, condition: str, message: str, pair: tuple[int, int] | None = None) -> None:
        self.condition = condition
        self.pair = pair
        super().__init__(message)


class QRacahError(BilliardError, ValueError):
    pass


class InconsistentLabelError(BilliardError, RuntimeError):
    """Two black cliques produced different labels for the same ordered edge."""
