"""
Smallest relational filtration of a model through a subformula-closed set.

Points are grouped by the formulas of Σ they force. The three class
relations are the images of R▷, R◁ and ≤ on classes, and the filtrated
frame takes their transitive closures. Only atoms that belong to Σ are
valued in the result.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.errors import FiltrationError
from src.core.order import BinRel, inverse, reflexivisation, transitive_closure
from src.frames.transit import TemporalTransit, validate_transit
from src.logic.formula import Atom, Box, Dia, Formula, children, node_count, subformulas
from src.logic.models import RelationalModel
from src.logic.parser import print_formula
from src.logic.semantics import truth_set
from src.utils.helpers import iter_bits, mask_of
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)


def _closure_key(f: Formula) -> Tuple[int, str]:
    return node_count(f), print_formula(f)


def subformula_closure(f: Formula) -> List[Formula]:
    """Distinct subformulas of f, ordered by (node count, printed text)."""
    return sorted(set(subformulas(f)), key=_closure_key)


def subformula_witness(sigma: Sequence[Formula]) -> Optional[Tuple[Formula, Formula]]:
    """A member of sigma with a child outside sigma, or None."""
    members = set(sigma)
    for f in sigma:
        for child in children(f):
            if child not in members:
                return f, child
    return None


def is_subformula_closed(sigma: Sequence[Formula]) -> bool:
    return subformula_witness(sigma) is None


@dataclass(frozen=True)
class FiltrationResult:
    """
    The filtrated model with the map from source points to classes.

    ``classes[i]`` is the bitmask of source points in class i; classes are
    numbered by their least point.
    """

    model: RelationalModel
    class_of: Tuple[int, ...]
    sigma: Tuple[Formula, ...]
    classes: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    def to_dict(self) -> Dict:
        frame = self.model.frame
        return {
            "sigma": [print_formula(f) for f in self.sigma],
            "classes": [sorted(iter_bits(c)) for c in self.classes],
            "points": frame.size,
            "r": [list(pair) for pair in frame.r_fwd.pairs()],
            "val": {atom: sorted(iter_bits(points)) for atom, points in sorted(self.model.valuation.items())},
        }


def _class_image(rel: BinRel, class_of: Sequence[int], k: int) -> BinRel:
    """[x] r [y] iff x' r y' for some x' ~ x and y' ~ y."""
    rows = [0] * k
    for x, row in enumerate(rel.rows):
        for y in iter_bits(row):
            rows[class_of[x]] |= 1 << class_of[y]
    return BinRel(k, tuple(rows))


def filtrate(m: RelationalModel, sigma: Sequence[Formula]) -> FiltrationResult:
    """
    Filtrate a relational model through Σ.

    Args:
        m: Source model
        sigma: Subformula-closed list of formulas; its atoms must be bound

    Returns:
        FiltrationResult whose frame is a temporal transit

    Raises:
        FiltrationError: If sigma is not subformula-closed, or if the
            filtrated relations fail to form a temporal transit
    """
    witness = subformula_witness(sigma)
    if witness is not None:
        parent, child = witness
        raise FiltrationError(
            f"Formula set is not subformula-closed: {print_formula(child)} is missing",
            witness=(print_formula(parent), print_formula(child)),
        )

    frame = m.frame
    cache: Dict[Formula, int] = {}
    truths = [truth_set(m, f, cache) for f in sigma]

    class_of: List[int] = []
    index: Dict[Tuple[bool, ...], int] = {}
    for x in range(frame.size):
        signature = tuple(bool(t >> x & 1) for t in truths)
        if signature not in index:
            index[signature] = len(index)
        class_of.append(index[signature])
    k = len(index)
    classes = [0] * k
    for x, c in enumerate(class_of):
        classes[c] |= 1 << x

    r_fwd = transitive_closure(_class_image(frame.r_fwd, class_of, k))
    r_back = transitive_closure(_class_image(frame.r_back, class_of, k))
    leq = transitive_closure(_class_image(frame.leq, class_of, k))
    if r_back != inverse(r_fwd):
        raise FiltrationError("Filtrated R◁ is not the inverse of filtrated R▷", witness=r_back.difference_pair(inverse(r_fwd)))
    if leq != reflexivisation(r_fwd):
        raise FiltrationError("Filtrated order is not the reflexivisation of filtrated R▷", witness=leq.difference_pair(reflexivisation(r_fwd)))

    labels = None
    if frame.labels:
        labels = tuple("[" + ",".join(frame.label(x) for x in iter_bits(c)) + "]" for c in classes)
    target = TemporalTransit(k, r_fwd, labels)
    report = validate_transit(target)
    if not report.ok:
        first = report.violations[0]
        raise FiltrationError(f"Filtrated frame is not a transit ({first.clause})", witness=first.witness)

    valuation = {}
    for f in sigma:
        if isinstance(f, Atom):
            valuation[f.name] = mask_of(class_of[x] for x in iter_bits(m.value(f.name)))
    logger.debug(f"Filtrated {frame.size} points into {k} classes through {len(sigma)} formulas")
    return FiltrationResult(
        model=RelationalModel(target, valuation),
        class_of=tuple(class_of),
        sigma=tuple(sigma),
        classes=tuple(classes),
    )


def filtration_lemma_check(m: RelationalModel, f: Formula) -> bool:
    """Every subformula of f holds at x iff it holds at [x]."""
    sigma = subformula_closure(f)
    result = filtrate(m, sigma)
    source_cache: Dict[Formula, int] = {}
    target_cache: Dict[Formula, int] = {}
    for g in sigma:
        source = truth_set(m, g, source_cache)
        target = truth_set(result.model, g, target_cache)
        for x, c in enumerate(result.class_of):
            if bool(source >> x & 1) != bool(target >> c & 1):
                logger.debug(f"Filtration disagrees on {print_formula(g)} at point {x}")
                return False
    return True


def filtration_conditions_check(
    m: RelationalModel,
    sigma: Sequence[Formula],
    result: Optional[FiltrationResult] = None,
) -> ValidationReport:
    """
    Check the six filtration conditions pointwise.

    Forth conditions: x R▷ y, x R◁ w and x ≤ y each survive on classes.
    Back conditions: [x] R▷_Σ [y] with x ⊨ □φ gives y ⊨ φ; [x] R◁_Σ [w]
    with w ⊨ φ gives x ⊨ ♦φ; [x] ≤_Σ [y] with x ⊨ φ gives y ⊨ φ, for the
    relevant members of Σ.
    """
    result = result if result is not None else filtrate(m, sigma)
    report = ValidationReport(subject="filtration")
    source, target = m.frame, result.model.frame
    cls = result.class_of
    cache: Dict[Formula, int] = {}
    truth = {f: truth_set(m, f, cache) for f in sigma}

    forth = (
        ("r-fwd-forth", source.r_fwd, target.r_fwd),
        ("r-back-forth", source.r_back, target.r_back),
        ("leq-forth", source.leq, target.leq),
    )
    for clause, rel, small in forth:
        for x, y in rel.pairs():
            if not small.holds(cls[x], cls[y]):
                report.add(clause, (x, y), f"Pair ({x},{y}) is lost on classes")
                break

    n = source.size
    for x in range(n):
        for y in range(n):
            if target.r_fwd.holds(cls[x], cls[y]):
                for f in sigma:
                    if isinstance(f, Box) and truth[f] >> x & 1 and not truth[f.body] >> y & 1:
                        report.add("r-fwd-back", (x, y, print_formula(f)), f"{print_formula(f)} at {x} does not reach {y}")
            if target.r_back.holds(cls[x], cls[y]):
                for f in sigma:
                    if isinstance(f, Dia) and truth[f.body] >> y & 1 and not truth[f] >> x & 1:
                        report.add("r-back-back", (x, y, print_formula(f)), f"{print_formula(f)} fails at {x} though its body holds at {y}")
            if target.leq.holds(cls[x], cls[y]):
                for f in sigma:
                    if truth[f] >> x & 1 and not truth[f] >> y & 1:
                        report.add("leq-back", (x, y, print_formula(f)), f"{print_formula(f)} is not persistent from {x} to {y}")
    return report
