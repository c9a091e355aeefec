"""
Exception types raised by the library.

The CLI maps ParameterError (and pydantic validation errors) to exit status 2
and OSError to exit status 3; everything else is a bug.
"""

from __future__ import annotations

from typing import Any


class IsingEntanglementError(Exception):
    """Base class for every error raised by ising_entanglement."""


class ParameterError(IsingEntanglementError, ValueError):
    """A physical or sweep parameter is out of range."""

    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.field, self.message))


class PresetError(ParameterError):
    def __init__(self, preset_id: str, known: list[str]):
        self.preset_id = preset_id
        self.known = known
        super().__init__(
            "preset", f"unknown preset {preset_id!r} (known: {', '.join(known)})"
        )

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.preset_id, self.known))


class LinalgError(IsingEntanglementError, ArithmeticError):
    """Eigensolver did not converge, or a matrix violates a structural precondition.

    For stacked input, `index` is the flat position of the first offending matrix.
    """

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        self.message = message
        super().__init__(message if index is None else f"{message} (matrix {index})")

    def __reduce__(self) -> tuple[Any, ...]:
        return (type(self), (self.message, self.index))


class ConsistencyError(IsingEntanglementError):
    """Two routes that must agree did not (should never happen for valid input)."""


class SweepPointError(IsingEntanglementError):
    """An error raised while evaluating a single grid point of a sweep."""

    def __init__(self, coordinates: dict[str, Any], cause: Exception):
        self.coordinates = coordinates
        self.cause = cause
        where = ", ".join(f"{k}={v:.12g}" for k, v in coordinates.items())
        super().__init__(f"at grid point ({where}): {cause}")
