"""Algebraic and relational models: a structure plus a valuation of atoms."""

import logging
from dataclasses import dataclass, field
from typing import Dict

from src.algebra.tha import FiniteTHA
from src.core.errors import ModelError, UnboundAtomError
from src.frames.transit import TemporalTransit

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraicModel:
    """An algebra with atoms valued as elements."""

    algebra: FiniteTHA
    valuation: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for atom, value in self.valuation.items():
            if not 0 <= value < self.algebra.size:
                raise ModelError(f"Atom '{atom}' is valued outside the algebra", witness=(atom, value))

    def value(self, atom: str) -> int:
        try:
            return self.valuation[atom]
        except KeyError:
            raise UnboundAtomError(atom)


@dataclass(frozen=True, eq=False)
class RelationalModel:
    """A transit with atoms valued as upsets (bitmasks of points)."""

    frame: TemporalTransit
    valuation: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        carrier = self.frame.carrier
        for atom, points in self.valuation.items():
            if points & ~carrier:
                raise ModelError(f"Atom '{atom}' mentions points outside the frame", witness=(atom, points))
            spill = self.frame.up(points) & ~points
            if spill:
                point = (spill & -spill).bit_length() - 1
                raise ModelError(f"Valuation of '{atom}' is not an upset", witness=(atom, point))

    def value(self, atom: str) -> int:
        try:
            return self.valuation[atom]
        except KeyError:
            raise UnboundAtomError(atom)
