"""Validation reports shared by frame, algebra and morphism checks."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """One failed clause with the witness that breaks it."""

    clause: str
    witness: Any
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "clause": self.clause,
            "witness": _plain(self.witness),
            "message": self.message,
        }


@dataclass
class ValidationReport:
    """
    Outcome of a structural check.

    Validators never raise on invalid input: every violated clause is
    recorded here with a witness, and an empty report means valid.
    ``details`` carries extra facts a check wants to expose (for instance
    which of two axiomatisations passed).
    """

    subject: str
    violations: List[Violation] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause: str, witness: Any, message: str) -> None:
        """Record a violated clause.

        Args:
            clause: Short clause name
            witness: Counterexample (tuple of indices, usually)
            message: Human-readable explanation
        """
        logger.debug(f"{self.subject}: {clause} violated by {witness}")
        self.violations.append(Violation(clause, witness, message))

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        """Merge another report, optionally prefixing its clause names."""
        for violation in other.violations:
            clause = f"{prefix}{violation.clause}" if prefix else violation.clause
            self.violations.append(Violation(clause, violation.witness, violation.message))

    def clauses(self) -> List[str]:
        return [violation.clause for violation in self.violations]

    def first(self, clause: str) -> Optional[Violation]:
        """First violation of the given clause, if any."""
        for violation in self.violations:
            if violation.clause == clause:
                return violation
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "valid": self.ok,
            "violations": [violation.to_dict() for violation in self.violations],
            "details": {key: _plain(value) for key, value in self.details.items()},
        }


def _plain(value: Any) -> Any:
    """Convert tuples to lists so reports serialise to JSON."""
    if isinstance(value, (tuple, list)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    return value
