"""
Filters, prime filters, ♦-filters and ♦-compatible elements.

Every filter of a finite lattice is principal, so filters are enumerated as
↑a for each element a. The improper filter ↑0 is included, as it belongs
to the ♦-filters and corresponds to the total congruence.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.algebra.tha import FiniteTHA
from src.utils.helpers import iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Filter:
    """A filter given by its element bitmask."""

    elements: int
    algebra: FiniteTHA = field(compare=False, repr=False)

    def __contains__(self, a: int) -> bool:
        return bool(self.elements >> a & 1)

    def __le__(self, other: "Filter") -> bool:
        return self.elements & ~other.elements == 0

    @property
    def is_proper(self) -> bool:
        return self.algebra.bot not in self

    @property
    def generator(self) -> int:
        """⋀F; for a finite filter F = ↑⋀F."""
        return self.algebra.meet_all(self.elements)

    def members(self) -> List[int]:
        return list(iter_bits(self.elements))


def is_filter(a: FiniteTHA, s: int) -> bool:
    """s contains top and is upward closed and closed under meets."""
    if not s >> a.top & 1:
        return False
    for x in iter_bits(s):
        if a.up(x) & ~s:
            return False
        for y in iter_bits(s):
            if not s >> a.meet[x][y] & 1:
                return False
    return True


def principal_filter(a: FiniteTHA, x: int) -> Filter:
    return Filter(a.up(x), a)


def filters(a: FiniteTHA) -> List[Filter]:
    """All filters, improper one included, in ascending bitmask order."""
    return sorted((principal_filter(a, x) for x in range(a.size)), key=lambda f: f.elements)


def prime_filters(a: FiniteTHA) -> List[Filter]:
    """Proper filters F with x∨y ∈ F implying x ∈ F or y ∈ F, by bitmask."""
    out = []
    for f in filters(a):
        if not f.is_proper:
            continue
        if all(
            x in f or y in f
            for x in range(a.size)
            for y in range(x, a.size)
            if a.join[x][y] in f
        ):
            out.append(f)
    return out


def filter_generated(a: FiniteTHA, s: int) -> Filter:
    """⟨s⟩ = ↑⋀s; ⟨∅⟩ = {top}."""
    return principal_filter(a, a.meet_all(s))


def dia_filter_witness(f: Filter) -> Optional[Tuple[int, int]]:
    """A pair (x, y) with x→y ∈ F but ♦x→♦y ∉ F, or None."""
    a = f.algebra
    for x in range(a.size):
        for y in range(a.size):
            if a.impl[x][y] in f and a.impl[a.dia[x]][a.dia[y]] not in f:
                return (x, y)
    return None


def is_dia_filter(f: Filter) -> bool:
    return dia_filter_witness(f) is None


def dia_filters(a: FiniteTHA) -> List[Filter]:
    """Filters closed under x→y ∈ F ⟹ ♦x→♦y ∈ F."""
    return [f for f in filters(a) if is_dia_filter(f)]


def dia_compatible(a: FiniteTHA) -> int:
    """Elements x with x∧♦y ≤ ♦(x∧y) for every y, as a bitmask."""
    out = 0
    for x in range(a.size):
        if all(a.le(a.meet[x][a.dia[y]], a.dia[a.meet[x][y]]) for y in range(a.size)):
            out |= 1 << x
    return out


def dia_opremum(a: FiniteTHA, compatible: Optional[int] = None) -> Optional[int]:
    """The greatest ♦-compatible element below top, if there is one."""
    compatible = dia_compatible(a) if compatible is None else compatible
    candidates = compatible & ~(1 << a.top)
    for c in iter_bits(candidates):
        if a.downs[c] & candidates == candidates:
            return c
    return None
