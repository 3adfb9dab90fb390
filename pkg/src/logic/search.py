"""
Bounded countermodel search over finite temporal transits.

Frames are visited size by size in ``enumerate_transits`` order and, on
each frame, valuations of the formula's atoms by upsets in bitmask order.
The first refutation in that order is reported, refuted at its least
point. With ``jobs > 1`` worker k takes the labeled posets whose index is
k modulo jobs and builds only their transits; the merge keeps the least
hit, so the answer does not depend on the worker count.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from config.settings import MAX_FRAME_POINTS
from src.core.errors import UsageError
from src.core.order import BinRel, enumerate_posets, upsets
from src.frames.enumeration import poset_transits
from src.frames.transit import TemporalTransit
from src.logic.filtration import subformula_closure
from src.logic.formula import Formula, atoms
from src.logic.models import RelationalModel
from src.logic.parser import print_formula
from src.logic.semantics import truth_set, upset_valuations
from src.utils.helpers import iter_bits, lowest_bit

logger = logging.getLogger(__name__)

# (size, poset index, loop mask, valuation index, point, rows, valuation)
Hit = Tuple[int, int, int, int, int, Tuple[int, ...], Dict[str, int]]

# (size, poset index) -> frames of that poset the stripe examined
FrameCounts = Dict[Tuple[int, int], int]


@dataclass(frozen=True)
class CountermodelResult:
    """
    Outcome of a bounded search.

    ``certified`` is set only when nothing was found and the budget reaches
    the filtration bound 2^|closure(f)|, in which case absence is a proof of
    validity rather than validity up to ``max_points``.
    """

    formula: Formula
    found: bool
    model: Optional[RelationalModel]
    point: Optional[int]
    certified: bool
    bound: int
    max_points: int
    frames_checked: int
    rooted_only: bool

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "formula": print_formula(self.formula),
            "found": self.found,
            "max_points": self.max_points,
            "rooted_only": self.rooted_only,
            "frames_checked": self.frames_checked,
            "bound": self.bound,
            "certified": self.certified,
        }
        if self.found:
            frame = self.model.frame
            out["model"] = {
                "points": frame.size,
                "r": [list(pair) for pair in frame.r_fwd.pairs()],
                "val": {atom: sorted(iter_bits(v)) for atom, v in sorted(self.model.valuation.items())},
            }
            out["point"] = self.point
        return out


def _search_stripe(
    f: Formula,
    max_points: int,
    rooted_only: bool,
    jobs: int,
    stripe: int,
) -> Tuple[Optional[Hit], FrameCounts]:
    """
    Scan the frames of the posets whose index is congruent to ``stripe``
    modulo ``jobs``. Frames of other stripes' posets are never built.

    Returns:
        The first hit in this stripe (or None) and, per poset scanned, how
        many frames were examined; for the hit's poset, up to and including
        the hit frame
    """
    names = atoms(f)
    counts: FrameCounts = {}
    for n in range(1, max_points + 1):
        for p_index, poset in enumerate(enumerate_posets(n)):
            if p_index % jobs != stripe:
                continue
            seen = 0
            ups = upsets(poset)
            for loops, frame in poset_transits(poset, rooted_only):
                seen += 1
                counts[n, p_index] = seen
                carrier = frame.carrier
                for v_index, valuation in enumerate(upset_valuations(frame, names, ups)):
                    missing = carrier & ~truth_set(RelationalModel(frame, valuation), f)
                    if missing:
                        hit = (n, p_index, loops, v_index, lowest_bit(missing), frame.r_fwd.rows, valuation)
                        return hit, counts
            counts.setdefault((n, p_index), 0)
    return None, counts


def countermodel_search(
    f: Formula,
    max_points: int,
    rooted_only: bool = True,
    jobs: int = 1,
) -> CountermodelResult:
    """
    Look for a finite relational countermodel of f.

    Args:
        f: Formula to refute
        max_points: Largest frame size to try
        rooted_only: Restrict to Z-rooted transits
        jobs: Worker processes; 1 runs in-process

    Returns:
        CountermodelResult; identical for every value of ``jobs``

    Raises:
        UsageError: If the budget or the worker count is out of range
    """
    if not 1 <= max_points <= MAX_FRAME_POINTS:
        raise UsageError(f"Frame budget must be between 1 and {MAX_FRAME_POINTS}, got {max_points}")
    if jobs < 1:
        raise UsageError(f"Worker count must be positive, got {jobs}")

    logger.info(f"Searching countermodels of {print_formula(f)} up to {max_points} points with {jobs} worker(s)")
    start_time = time.time()
    if jobs == 1:
        outcomes = [_search_stripe(f, max_points, rooted_only, 1, 0)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_search_stripe, f, max_points, rooted_only, jobs, k) for k in range(jobs)]
            outcomes = [future.result() for future in futures]

    # Every poset before the least hit was fully scanned by its own stripe.
    counts: FrameCounts = {}
    for _, stripe_counts in outcomes:
        counts.update(stripe_counts)
    hits: List[Hit] = [hit for hit, _ in outcomes if hit is not None]
    bound = 2 ** len(subformula_closure(f))
    logger.info(f"Search finished in {time.time() - start_time:.2f}s")

    if hits:
        n, p_index, _, _, point, rows, valuation = min(hits, key=lambda hit: hit[:5])
        checked = sum(seen for key, seen in counts.items() if key < (n, p_index))
        frame = TemporalTransit(n, BinRel(n, rows))
        return CountermodelResult(
            formula=f,
            found=True,
            model=RelationalModel(frame, valuation),
            point=point,
            certified=False,
            bound=bound,
            max_points=max_points,
            frames_checked=checked + counts[n, p_index],
            rooted_only=rooted_only,
        )

    return CountermodelResult(
        formula=f,
        found=False,
        model=None,
        point=None,
        certified=max_points >= bound,
        bound=bound,
        max_points=max_points,
        frames_checked=sum(counts.values()),
        rooted_only=rooted_only,
    )
