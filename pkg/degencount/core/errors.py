"""Error types and exit codes for degencount.

Construction operations raise one of the exceptions below. Validation
operations return a result object instead of raising, so callers can report
the violated condition.
"""

from typing import Final


class ExitCode:
    """Process exit codes used by the command-line surface."""

    SUCCESS: Final[int] = 0
    VALIDATION_FAILURE: Final[int] = 1  # A verify/validate step rejected its input
    USAGE_ERROR: Final[int] = 2  # Bad arguments or unreadable input

    ALL_CODES: Final[frozenset[int]] = frozenset({0, 1, 2})

    @classmethod
    def is_failure(cls, code: int) -> bool:
        """Check if a code signals any kind of failure."""
        return code in cls.ALL_CODES and code != cls.SUCCESS


class DegenCountError(Exception):
    """Base class for every error raised by degencount."""


class GraphError(DegenCountError, ValueError):
    """Graph data violates the simple-graph invariants."""


class FormatError(GraphError):
    """A text file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(DegenCountError):
    """A quotient would create a self-loop (some block contains an edge)."""

    def __init__(self, block: frozenset[int], edge: tuple[int, int]) -> None:
        self.block = block
        self.edge = edge
        super().__init__(f"block {sorted(block)} contains edge {edge}")


class BoundExceededError(DegenCountError):
    """An exhaustive routine was asked to run past its configured bound."""

    def __init__(self, what: str, size: int, bound: int) -> None:
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: {size} exceeds bound {bound}")


class ColouringError(DegenCountError):
    """A colouring is not total, not a homomorphism, or not surjective."""


class DecompositionError(DegenCountError):
    """A decomposition, kernel or parse tree is malformed or inconsistent."""


class GadgetError(DegenCountError):
    """An F-gadget or a gadget construction is invalid."""


class WitnessError(DegenCountError):
    """A minor model or witness structure is invalid."""


class SingularSystemError(DegenCountError):
    """The tensor-product linear system stayed singular after all retries."""


class BasisIntegrityError(DegenCountError):
    """An evaluated basis produced a non-integer count."""


class ParameterError(DegenCountError, ValueError):
    """A numeric parameter such as epsilon is outside its allowed range."""
