"""Result type shared by every validator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of a validation check.

    Attributes:
        ok: Whether every condition holds
        condition: Name of the first violated condition, or None
        witness: Objects demonstrating the violation
        message: Human-readable description
    """

    ok: bool
    condition: str | None = None
    witness: tuple[Any, ...] = ()
    message: str = ""

    @classmethod
    def passed(cls) -> ValidationResult:
        return cls(True, None, (), "ok")

    @classmethod
    def failed(cls, condition: str, message: str, *witness: Any) -> ValidationResult:
        return cls(False, condition, tuple(witness), message)

    def __bool__(self) -> bool:
        return self.ok
