"""
♦-filters of an algebra versus archival upsets of its spectrum.

Both maps are order-reversing and mutually inverse.
"""

import logging
from typing import Optional

from src.algebra.filters import Filter, dia_filter_witness
from src.algebra.tha import FiniteTHA
from src.core.errors import CorrespondenceError
from src.duality.spectrum import SpectrumResult, spec_algebra
from src.frames.reachability import archival_witness
from src.utils.helpers import iter_bits

logger = logging.getLogger(__name__)


def filter_to_arcup(a: FiniteTHA, f: Filter, spectrum: Optional[SpectrumResult] = None) -> int:
    """
    ⋂π[F]: the prime filters that contain F.

    Raises:
        CorrespondenceError: If f is not a ♦-filter
    """
    witness = dia_filter_witness(f)
    if witness is not None:
        raise CorrespondenceError("Not a ♦-filter", witness=witness)
    spectrum = spectrum if spectrum is not None else spec_algebra(a)
    out = 0
    for point, filter_mask in enumerate(spectrum.point_filters):
        if f.elements & ~filter_mask == 0:
            out |= 1 << point
    return out


def arcup_to_filter(a: FiniteTHA, c: int, spectrum: Optional[SpectrumResult] = None) -> Filter:
    """
    ⋂C: the elements lying in every prime filter of C; the improper filter
    for C = ∅.

    Raises:
        CorrespondenceError: If c is not an archival upset of the spectrum
    """
    spectrum = spectrum if spectrum is not None else spec_algebra(a)
    frame = spectrum.frame
    if c & ~frame.carrier:
        raise CorrespondenceError(f"{bin(c)} is not a set of spectrum points", witness=c)
    if not frame.is_upset(c):
        raise CorrespondenceError("Not an upset of the spectrum", witness=c)
    witness = archival_witness(frame, c)
    if witness is not None:
        raise CorrespondenceError("Not an archival upset of the spectrum", witness=witness)
    elements = (1 << a.size) - 1
    for point in iter_bits(c):
        elements &= spectrum.point_filters[point]
    return Filter(elements, a)
