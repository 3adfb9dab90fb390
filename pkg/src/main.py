"""
Main entry point for the Temporal Heyting Workbench.
"""

import argparse
import logging
import sys
from typing import List, Optional

from config.settings import DEFAULT_OUTPUT_FORMAT
from src.cli.base import EXIT_INPUT, CommandResult
from src.cli.commands import COMMANDS
from src.cli.output import FORMATS, render
from src.core.errors import UsageError
from src.utils.logging_config import setup_logging

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting."""

    def error(self, message: str):
        raise UsageError(message)


class Workbench:
    """
    Command dispatcher: one subcommand per registered verb.
    """

    def __init__(self):
        """Register every verb with the argument parser."""
        self.commands = {command.name: command for command in COMMANDS}
        self.parser = _ArgumentParser(
            prog="workbench",
            description="Finite-model workbench for temporal Heyting algebras and transits",
        )
        subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        for command in self.commands.values():
            sub = subparsers.add_parser(command.name, help=command.description, description=command.description)
            command.configure(sub)
            sub.add_argument(
                "--format",
                choices=FORMATS,
                default=DEFAULT_OUTPUT_FORMAT,
                help=f"Output format (default: {DEFAULT_OUTPUT_FORMAT})",
            )
        logger.debug(f"Registered {len(self.commands)} commands")

    def run(self, argv: List[str]) -> CommandResult:
        """
        Parse arguments and dispatch to the verb.

        Args:
            argv: Arguments without the program name

        Returns:
            The verb's result; usage errors give exit code 2
        """
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            logger.warning(f"Usage error: {e}")
            payload = {"success": False, "error": str(e), "error_type": type(e).__name__}
            return CommandResult(EXIT_INPUT, payload, [f"error: {e}"])
        return self.commands[args.command].execute(args)

    def output_format(self, argv: List[str]) -> str:
        """The --format value in argv, or the default when absent or unparsable."""
        for i, arg in enumerate(argv):
            if arg.startswith("--format="):
                value = arg.split("=", 1)[1]
            elif arg == "--format" and i + 1 < len(argv):
                value = argv[i + 1]
            else:
                continue
            if value in FORMATS:
                return value
        return DEFAULT_OUTPUT_FORMAT


def main(argv: Optional[List[str]] = None) -> int:
    """Main function for CLI usage."""
    setup_logging()
    argv = sys.argv[1:] if argv is None else argv
    workbench = Workbench()
    result = workbench.run(argv)
    sys.stdout.write(render(result, workbench.output_format(argv)))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
