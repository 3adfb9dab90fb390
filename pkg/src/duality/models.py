"""Dual relational model of an algebraic model."""

import logging
from typing import Optional

from src.duality.isomorphisms import pi_map
from src.duality.spectrum import SpectrumResult, spec_algebra
from src.logic.models import AlgebraicModel, RelationalModel

logger = logging.getLogger(__name__)


def spec_model(m: AlgebraicModel, spectrum: Optional[SpectrumResult] = None) -> RelationalModel:
    """The spectrum of the algebra with each atom valued as π(ν p)."""
    spectrum = spectrum if spectrum is not None else spec_algebra(m.algebra)
    pi = pi_map(m.algebra, spectrum)
    valuation = {atom: pi[value] for atom, value in m.valuation.items()}
    return RelationalModel(spectrum.frame, valuation)
