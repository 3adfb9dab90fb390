"""Enumeration of all labeled temporal transits of a given size."""

import logging
from typing import Iterator, Tuple

from src.core.order import BinRel, FinPoset, enumerate_posets
from src.frames.reachability import z_roots
from src.frames.transit import TemporalTransit

logger = logging.getLogger(__name__)


def enumerate_transits(n: int, rooted_only: bool = False) -> Iterator[TemporalTransit]:
    """
    All labeled transits on ``range(n)``.

    A transit is a poset with some loops deleted, so the stream walks the
    labeled posets (see ``enumerate_posets``) and, for each, the loop masks
    0, 1, ..., 2^n - 1 (bit i set keeps the loop at i).

    Args:
        n: Number of points
        rooted_only: Keep only frames with at least one Z-root

    Yields:
        Frames in a fixed deterministic order
    """
    logger.info(f"Enumerating transits on {n} points (rooted_only={rooted_only})")
    for poset in enumerate_posets(n):
        for _, frame in poset_transits(poset, rooted_only):
            yield frame


def poset_transits(poset: FinPoset, rooted_only: bool = False) -> Iterator[Tuple[int, TemporalTransit]]:
    """
    The transits whose reflexive closure is ``poset``, with their loop masks.

    Yields:
        ``(loops, frame)`` pairs with loops ascending
    """
    n = poset.size
    strict = tuple(row & ~(1 << i) for i, row in enumerate(poset.leq.rows))
    for loops in range(1 << n):
        rows = tuple(row | (loops & (1 << i)) for i, row in enumerate(strict))
        frame = TemporalTransit(n, BinRel(n, rows))
        if rooted_only and not z_roots(frame):
            continue
        yield loops, frame


def enumerate_transits_upto(max_points: int, rooted_only: bool = False) -> Iterator[TemporalTransit]:
    """Transits on 0, 1, ..., max_points points, smallest first."""
    for n in range(max_points + 1):
        yield from enumerate_transits(n, rooted_only)
