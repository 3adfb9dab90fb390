"""Frame-side routes for simplicity and subdirect irreducibility."""

import logging
from typing import Optional

from src.algebra.classify import Classification, classify
from src.algebra.tha import FiniteTHA
from src.duality.spectrum import SpectrumResult, spec_algebra
from src.frames.reachability import topo_relation, z_relation, z_roots

logger = logging.getLogger(__name__)


def classify_with_frame(
    a: FiniteTHA,
    spectrum: Optional[SpectrumResult] = None,
    classification: Optional[Classification] = None,
) -> Classification:
    """
    ``classify`` plus the routes read off the dual frame.

    Simple iff the dual frame is nonempty and Z-connected. SI iff it is
    Z-rooted, equivalently some point topo-reaches every point. The empty
    frame of the one-element algebra is neither.
    """
    spectrum = spectrum if spectrum is not None else spec_algebra(a)
    result = classification if classification is not None else classify(a)
    frame = spectrum.frame
    roots = z_roots(frame, z_relation(frame))
    topo = topo_relation(frame)
    topo_roots = [x for x, row in enumerate(topo.rows) if row == frame.carrier]

    result.simple_routes["z_connected"] = frame.size > 0 and roots == frame.carrier
    result.si_routes["z_rooted"] = roots != 0
    result.si_routes["topo_rooted"] = bool(topo_roots)
    logger.debug(f"Frame routes for algebra of size {a.size}: roots={bin(roots)}, topo roots={topo_roots}")
    return result
