"""Helper utility functions for bitmask sets and text input."""

from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union
import json

from src.core.errors import FileFormatError


def mask_of(elements: Iterable[int]) -> int:
    """Pack element indices into a bitmask.

    Args:
        elements: Element indices

    Returns:
        Bitmask with bit i set for every i in elements
    """
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of a mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(size: int) -> int:
    return (1 << size) - 1


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; -1 for the empty mask."""
    return (mask & -mask).bit_length() - 1


def format_set(mask: int, labels: Sequence[str] = None) -> str:
    """Render a bitmask as ``{a,b}`` using optional labels."""
    names = [labels[i] if labels else str(i) for i in iter_bits(mask)]
    return "{" + ",".join(names) + "}"


def parse_json(json_string: str) -> dict:
    """Parse JSON text into an object.

    Args:
        json_string: JSON text

    Returns:
        Parsed object

    Raises:
        FileFormatError: If the text is not a JSON object
    """
    try:
        data = json.loads(json_string)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"Invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})")
    if not isinstance(data, dict):
        raise FileFormatError("Expected a JSON object at top level")
    return data


def read_text(path: Union[str, Path]) -> str:
    """Read an input file, mapping I/O failures to input errors."""
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FileFormatError(f"Cannot read {path}: {e.strerror}")
