"""
Reachability on transits: the descent relation B, its zig-zag closure Z,
archival sets and topo-reachability.

Rows are read forward: ``b_relation(f).rows[x]`` is the set of points x can
descend to, and ``z_relation(f).rows[x]`` is everything Z-reachable from x.
"""

import logging
from typing import List, Optional, Tuple

from src.core.errors import ReachabilityError
from src.core.order import BinRel, compose
from src.frames.transit import TemporalTransit
from src.utils.helpers import full_mask, iter_bits

logger = logging.getLogger(__name__)

GENERAL = "general"
FINITE = "finite"


def b_relation(f: TemporalTransit) -> BinRel:
    """x B w iff w ≤ x and no reflexive point lies in (w, x]."""
    rows = []
    for x in range(f.size):
        row = 0
        below = f.downs[x]
        for w in iter_bits(below):
            interval = f.leq.rows[w] & below & ~(1 << w)
            if not interval & f.refl:
                row |= 1 << w
        rows.append(row)
    return BinRel(f.size, tuple(rows))


def z_relation(f: TemporalTransit) -> BinRel:
    """
    Least fixpoint of S ↦ Δ ∪ S;B;≤.

    Raises:
        ReachabilityError: If the iteration does not settle within the
            size of the frame plus one step
    """
    step = compose(b_relation(f), f.leq)
    current = BinRel.identity(f.size)
    for _ in range(f.size + 1):
        grown = BinRel.identity(f.size) | compose(current, step)
        if grown == current:
            return current
        current = grown
    raise ReachabilityError(f"Z did not stabilise within {f.size + 1} iterations")


def z_roots(f: TemporalTransit, z: Optional[BinRel] = None) -> int:
    """Points from which every point is Z-reachable."""
    z = z if z is not None else z_relation(f)
    carrier = f.carrier
    out = 0
    for x, row in enumerate(z.rows):
        if row == carrier:
            out |= 1 << x
    return out


def is_z_connected(f: TemporalTransit) -> bool:
    return z_roots(f) == f.carrier


def is_z_rooted(f: TemporalTransit) -> bool:
    return z_roots(f) != 0


def z_closure(f: TemporalTransit, s: int, z: Optional[BinRel] = None) -> int:
    """Z[s]: everything Z-reachable from some point of s."""
    z = z if z is not None else z_relation(f)
    return z.image(s)


def archival_witness(f: TemporalTransit, s: int, mode: str = GENERAL) -> Optional[Tuple[int, int]]:
    """
    First pair (x, z) breaking the archival condition for s, or None.

    General mode needs a point of R◁[z] ∩ ↑x ∩ s for every x ∉ s, z ∈ s
    with x R▷ z; finite mode asks for one in ↓z ∩ ↑x ∩ Refl ∩ s instead.
    """
    if mode not in (GENERAL, FINITE):
        raise ValueError(f"Unknown archival mode: {mode}")
    outside = f.carrier & ~s
    for x in iter_bits(outside):
        up_x = f.leq.rows[x]
        for z in iter_bits(f.r_fwd.rows[x] & s):
            if mode == GENERAL:
                candidates = f.r_back.rows[z]
            else:
                candidates = f.downs[z] & f.refl
            if not candidates & up_x & s:
                return (x, z)
    return None


def is_archival(f: TemporalTransit, s: int, mode: str = GENERAL) -> bool:
    return archival_witness(f, s, mode) is None


def archival_upsets(f: TemporalTransit) -> List[int]:
    """Archival upsets in ascending bitmask order."""
    return [s for s in f.upsets() if is_archival(f, s)]


def topo_relation(f: TemporalTransit, arcups: Optional[List[int]] = None) -> BinRel:
    """Row x: the intersection of every archival upset containing x."""
    arcups = arcups if arcups is not None else archival_upsets(f)
    rows = []
    for x in range(f.size):
        row = full_mask(f.size)
        for s in arcups:
            if s >> x & 1:
                row &= s
        rows.append(row)
    return BinRel(f.size, tuple(rows))


def topo_reachable(f: TemporalTransit, x: int, y: int) -> bool:
    """y lies in every archival upset containing x."""
    return topo_relation(f).holds(x, y)
