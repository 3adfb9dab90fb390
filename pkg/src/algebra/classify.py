"""
Simple and subdirectly irreducible algebras.

Each property is decided along three independent routes (♦-filters,
♦-compatible elements, brute-force congruences) and the routes must agree.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.algebra.congruences import (
    Congruence,
    congruences_bruteforce,
    minimal_nontrivial,
)
from src.algebra.filters import Filter, dia_compatible, dia_filters, dia_opremum
from src.algebra.tha import FiniteTHA
from src.core.errors import CorrespondenceError

logger = logging.getLogger(__name__)


@dataclass
class Classification:
    """Per-route verdicts for simplicity and subdirect irreducibility."""

    simple_routes: Dict[str, bool] = field(default_factory=dict)
    si_routes: Dict[str, bool] = field(default_factory=dict)
    opremum: Optional[int] = None
    dia_filter_count: int = 0
    congruence_count: int = 0
    compatible: int = 0

    @property
    def consistent(self) -> bool:
        return len(set(self.simple_routes.values())) <= 1 and len(set(self.si_routes.values())) <= 1

    @property
    def simple(self) -> bool:
        return all(self.simple_routes.values())

    @property
    def subdirectly_irreducible(self) -> bool:
        return all(self.si_routes.values())

    def to_dict(self) -> Dict:
        return {
            "simple": self.simple,
            "subdirectly_irreducible": self.subdirectly_irreducible,
            "opremum": self.opremum,
            "simple_routes": dict(self.simple_routes),
            "si_routes": dict(self.si_routes),
            "dia_filters": self.dia_filter_count,
            "congruences": self.congruence_count,
        }


def second_least_dia_filter(a: FiniteTHA, dfs: List[Filter]) -> Optional[Filter]:
    """The least ♦-filter other than {top}, if one exists."""
    nontrivial = [f for f in dfs if f.elements != 1 << a.top]
    for f in nontrivial:
        if all(f <= g for g in nontrivial):
            return f
    return None


def classify(
    a: FiniteTHA,
    congs: Optional[List[Congruence]] = None,
    dfs: Optional[List[Filter]] = None,
) -> Classification:
    """
    Decide simplicity and subdirect irreducibility along every route.

    Simple: exactly the two ♦-filters {1} ≠ A; ♦Com = {0, 1} with 0 ≠ 1;
    exactly two congruences. SI: a second-least ♦-filter; a ♦-opremum; a
    unique minimal nontrivial congruence. The one-element algebra is
    neither.
    """
    dfs = dfs if dfs is not None else dia_filters(a)
    congs = congs if congs is not None else congruences_bruteforce(a)
    compatible = dia_compatible(a)
    opremum = dia_opremum(a, compatible)
    bounds = (1 << a.bot) | (1 << a.top)

    result = Classification(
        opremum=opremum,
        dia_filter_count=len(dfs),
        congruence_count=len(congs),
        compatible=compatible,
    )
    result.simple_routes = {
        "dia_filters": len(dfs) == 2,
        "dia_compatible": a.bot != a.top and compatible == bounds,
        "congruences": len(congs) == 2,
    }
    result.si_routes = {
        "dia_filters": second_least_dia_filter(a, dfs) is not None,
        "opremum": opremum is not None,
        "congruences": len(minimal_nontrivial(congs)) == 1,
    }
    logger.debug(f"Classified algebra of size {a.size}: {result.to_dict()}")
    return result


def _agreed(routes: Dict[str, bool], prop: str) -> bool:
    if len(set(routes.values())) > 1:
        raise CorrespondenceError(f"Routes disagree on {prop}: {routes}", witness=routes)
    return all(routes.values())


def is_simple(a: FiniteTHA) -> bool:
    """
    Raises:
        CorrespondenceError: If the routes disagree
    """
    return _agreed(classify(a).simple_routes, "simplicity")


def is_subdirectly_irreducible(a: FiniteTHA) -> bool:
    """
    Raises:
        CorrespondenceError: If the routes disagree
    """
    return _agreed(classify(a).si_routes, "subdirect irreducibility")
