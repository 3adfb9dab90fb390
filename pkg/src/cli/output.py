"""Rendering of command results as text or JSON."""

import json
import sys
from typing import Optional

from colorama import Fore, Style

from src.cli.base import EXIT_OK, CommandResult

FORMATS = ("text", "json")


def render(result: CommandResult, fmt: str = "text", color: Optional[bool] = None) -> str:
    """
    Render a result for stdout.

    The first text line is the status line; it is coloured only when
    ``color`` is set, which defaults to whether stdout is a terminal.
    """
    if fmt == "json":
        return json.dumps(result.payload, indent=2, ensure_ascii=False) + "\n"
    if color is None:
        color = sys.stdout.isatty()
    lines = list(result.lines)
    if color and lines:
        tint = Fore.GREEN if result.exit_code == EXIT_OK else Fore.RED
        lines[0] = f"{tint}{lines[0]}{Style.RESET_ALL}"
    return "\n".join(lines) + "\n" if lines else ""
