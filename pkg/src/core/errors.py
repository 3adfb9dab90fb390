"""
Exception hierarchy for the workbench.

Errors that carry a counterexample expose it as ``witness``. Everything the
command layer should report as bad input derives from ``InputError``.
"""

from typing import Any, Optional, Tuple


class WorkbenchError(Exception):
    """Base class for all workbench errors."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class InputError(WorkbenchError):
    """Raised for malformed user input (files, formulas, arguments)."""
    pass


class FileFormatError(InputError):
    """Raised when a frame, algebra or model file cannot be loaded."""

    def __init__(self, message: str, location: Tuple[Any, ...] = ()):
        super().__init__(message)
        self.location = tuple(location)

    def __str__(self) -> str:
        if not self.location:
            return self.message
        path = ".".join(str(part) for part in self.location)
        return f"{self.message} (at {path})"


class FormulaSyntaxError(InputError):
    """Raised when formula text does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} at offset {self.position}"


class UsageError(InputError):
    """Raised for unknown verbs or bad command-line arguments."""
    pass


class OrderError(WorkbenchError):
    """Raised when a relation is not the order it is required to be."""
    pass


class FrameError(WorkbenchError):
    """Raised for structurally invalid frames."""
    pass


class MorphismError(WorkbenchError):
    """Raised when a map is not the kind of morphism an operation needs."""
    pass


class AlgebraError(WorkbenchError):
    """Raised for structurally invalid algebras."""
    pass


class NonDistributiveError(AlgebraError):
    """Raised when a lattice has no relative pseudo-complement."""
    pass


class CorrespondenceError(WorkbenchError):
    """Raised when an object is outside the domain of a correspondence map."""
    pass


class DualityError(WorkbenchError):
    """Raised when a dual construction disagrees with itself."""
    pass


class ModelError(WorkbenchError):
    """Raised for invalid valuations."""
    pass


class UnboundAtomError(ModelError):
    """Raised when a formula mentions an atom the valuation does not bind."""

    def __init__(self, atom: str):
        super().__init__(f"Atom '{atom}' is not bound by the valuation", witness=atom)
        self.atom = atom


class FiltrationError(WorkbenchError):
    """Raised when a filtration is requested through a bad formula set."""
    pass


class ReachabilityError(WorkbenchError):
    """Raised when a reachability fixpoint fails to stabilise."""
    pass


def describe(error: Exception, witness: Optional[Any] = None) -> str:
    """Render an error with its witness for reports."""
    witness = witness if witness is not None else getattr(error, "witness", None)
    if witness is None:
        return str(error)
    return f"{error} [witness: {witness}]"
