"""
Dual frame of a finite temporal Heyting algebra.

Points are the prime filters in ascending bitmask order. R▷ is read off □
and R◁ off ♦, independently; the two must be mutually inverse.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from src.algebra.filters import prime_filters
from src.algebra.tha import FiniteTHA
from src.core.errors import DualityError
from src.core.order import BinRel, inverse, reflexivisation
from src.frames.transit import TemporalTransit
from src.utils.helpers import iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumResult:
    """The dual frame and the prime filter each of its points denotes."""

    frame: TemporalTransit
    point_filters: Tuple[int, ...]
    r_back_from_dia: BinRel
    inclusion: BinRel

    def point_of(self, filter_mask: int) -> int:
        """Index of the point denoting a prime filter.

        Raises:
            DualityError: If the mask is not one of the prime filters
        """
        try:
            return self.point_filters.index(filter_mask)
        except ValueError:
            raise DualityError(f"{bin(filter_mask)} is not a prime filter", witness=filter_mask)


def _filter_label(a: FiniteTHA, mask: int) -> str:
    return "^" + a.label(a.meet_all(mask))


def spec_algebra(a: FiniteTHA) -> SpectrumResult:
    """
    Build the dual frame of an algebra.

    x R▷ y iff □c ∈ x implies c ∈ y for every c; x R◁ w iff c ∈ w implies
    ♦c ∈ x for every c.

    Raises:
        DualityError: If the relation read off ♦ is not the inverse of the
            one read off □, or ≤ is not filter inclusion
    """
    points = tuple(f.elements for f in prime_filters(a))
    n = len(points)

    fwd_rows = []
    back_rows = []
    incl_rows = []
    for x in points:
        boxed = 0
        for c in range(a.size):
            if x >> a.box[c] & 1:
                boxed |= 1 << c
        fwd = back = incl = 0
        for j, y in enumerate(points):
            if boxed & ~y == 0:
                fwd |= 1 << j
            if all(x >> a.dia[c] & 1 for c in iter_bits(y)):
                back |= 1 << j
            if x & ~y == 0:
                incl |= 1 << j
        fwd_rows.append(fwd)
        back_rows.append(back)
        incl_rows.append(incl)

    r_fwd = BinRel(n, tuple(fwd_rows))
    r_back = BinRel(n, tuple(back_rows))
    inclusion = BinRel(n, tuple(incl_rows))

    if r_back != inverse(r_fwd):
        pair = r_back.difference_pair(inverse(r_fwd)) or inverse(r_fwd).difference_pair(r_back)
        raise DualityError("R◁ read off ♦ is not the inverse of R▷ read off □", witness=pair)
    if reflexivisation(r_fwd) != inclusion:
        pair = reflexivisation(r_fwd).difference_pair(inclusion) or inclusion.difference_pair(reflexivisation(r_fwd))
        raise DualityError("Reflexivisation of R▷ differs from filter inclusion", witness=pair)

    labels = tuple(_filter_label(a, mask) for mask in points)
    frame = TemporalTransit(n, r_fwd, labels)
    logger.debug(f"Spectrum has {n} points")
    return SpectrumResult(frame, points, r_back, inclusion)
