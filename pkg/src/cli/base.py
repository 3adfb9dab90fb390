"""
Base command interface and common functionality.
"""

import argparse
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List

from src.core.errors import InputError, describe

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


@dataclass
class CommandResult:
    """
    Outcome of one command.

    Exit codes: 0 for success (valid, found), 1 for a negative answer
    (invalid, not found) or an internal failure, 2 for bad input.
    ``payload`` is the machine-readable report; ``lines`` its text form.
    """

    exit_code: int
    payload: Dict[str, Any] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.exit_code == EXIT_OK


class BaseCommand(ABC):
    """
    Base class for all workbench verbs.

    Provides common functionality like:
    - Argument registration
    - Error handling
    - Logging
    """

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description

    def configure(self, parser: argparse.ArgumentParser) -> None:
        """Register the verb's arguments. Override when the verb takes any."""
        pass

    @abstractmethod
    def _execute(self, args: argparse.Namespace) -> CommandResult:
        """
        Run the verb's core functionality.
        Must be implemented by subclasses.
        """
        pass

    def execute(self, args: argparse.Namespace) -> CommandResult:
        """
        Run the verb with error handling.

        Args:
            args: Parsed command-line arguments

        Returns:
            The verb's result, or an error result with exit code 2 for
            input errors and 1 for anything else
        """
        start_time = time.time()

        try:
            logger.info(f"Executing command: {self.name}")
            logger.debug(f"Command arguments: {vars(args)}")

            result = self._execute(args)
            result.payload.setdefault("command", self.name)
            result.payload["success"] = True

            logger.info(f"Command {self.name} completed in {time.time() - start_time:.2f}s")
            return result

        except Exception as e:
            logger.error(f"Command {self.name} failed: {str(e)}", exc_info=True)
            code = EXIT_INPUT if isinstance(e, InputError) else EXIT_FAILED
            payload = {
                "command": self.name,
                "success": False,
                "error": str(e),
                "error_type": type(e).__name__,
            }
            if getattr(e, "location", None):
                payload["location"] = list(e.location)
            if getattr(e, "witness", None) is not None:
                payload["witness"] = str(e.witness)
            return CommandResult(code, payload, [f"error: {describe(e)}"])
