"""
Dual algebra of a finite transit: its upsets under ∩, ∪ and the induced
→, □ and ♦.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from src.algebra.tha import FiniteTHA
from src.core.errors import DualityError
from src.core.order import BinRel
from src.frames.transit import TemporalTransit
from src.utils.helpers import format_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClopResult:
    """The dual algebra and the upset each of its elements denotes."""

    algebra: FiniteTHA
    element_upsets: Tuple[int, ...]

    def element_of(self, upset: int) -> int:
        return self.element_upsets.index(upset)


def clop_frame(f: TemporalTransit) -> ClopResult:
    """
    Build the algebra of upsets of a transit.

    Elements are the upsets in ascending bitmask order. K₁ → K₂ is
    −↓(K₁ − K₂), □K is −R▷⁻¹[−K] and ♦K is R▷[K].
    """
    ups = tuple(f.upsets())
    index: Dict[int, int] = {k: i for i, k in enumerate(ups)}
    n = len(ups)
    carrier = f.carrier

    rows = []
    for k1 in ups:
        row = 0
        for j, k2 in enumerate(ups):
            if k1 & ~k2 == 0:
                row |= 1 << j
        rows.append(row)

    try:
        meet = tuple(tuple(index[k1 & k2] for k2 in ups) for k1 in ups)
        join = tuple(tuple(index[k1 | k2] for k2 in ups) for k1 in ups)
        impl = tuple(
            tuple(index[carrier & ~f.down(k1 & ~k2)] for k2 in ups) for k1 in ups
        )
        box = tuple(index[carrier & ~f.r_fwd.preimage(carrier & ~k)] for k in ups)
        dia = tuple(index[f.r_fwd.image(k)] for k in ups)
    except KeyError as e:
        raise DualityError(f"Operation leaves the upsets of the frame: {bin(e.args[0])}", witness=e.args[0])

    labels = f.point_labels()
    algebra = FiniteTHA(
        size=n,
        leq=BinRel(n, tuple(rows)),
        meet=meet,
        join=join,
        impl=impl,
        box=box,
        dia=dia,
        bot=index[0],
        top=index[carrier],
        labels=tuple(format_set(k, labels) for k in ups),
    )
    logger.debug(f"Clop has {n} elements")
    return ClopResult(algebra, ups)
