"""Seeded random formulas, frames and valuations for the sampling sweeps."""

import logging
from typing import Dict, Sequence

import numpy as np

from src.algebra.tha import FiniteTHA
from src.core.order import BinRel, transitive_closure
from src.frames.transit import TemporalTransit
from src.logic.formula import And, Atom, Bot, Box, Dia, Formula, Imp, Or, Top
from src.logic.models import AlgebraicModel, RelationalModel

logger = logging.getLogger(__name__)

DEFAULT_ATOMS = ("p", "q")
_BINARY = (And, Or, Imp)
_UNARY = (Box, Dia)


def random_formula(rng: np.random.Generator, names: Sequence[str] = DEFAULT_ATOMS, depth: int = 4) -> Formula:
    """A formula of depth at most ``depth`` over the given atoms."""
    if depth == 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.1:
            return Bot()
        if roll < 0.15:
            return Top()
        return Atom(names[int(rng.integers(len(names)))])
    if rng.random() < 0.6:
        node = _BINARY[int(rng.integers(len(_BINARY)))]
        return node(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))
    node = _UNARY[int(rng.integers(len(_UNARY)))]
    return node(random_formula(rng, names, depth - 1))


def random_transit(rng: np.random.Generator, n: int, edge_probability: float = 0.35) -> TemporalTransit:
    """
    A random transit on n points.

    The strict order is the transitive closure of a random DAG over a
    shuffled linear extension; each point then keeps its loop with
    probability one half.
    """
    order = rng.permutation(n)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                rows[int(order[i])] |= 1 << int(order[j])
    strict = transitive_closure(BinRel(n, tuple(rows)))
    loops = int(rng.integers(1 << n)) if n else 0
    return TemporalTransit(n, BinRel(n, tuple(row | (loops & (1 << i)) for i, row in enumerate(strict.rows))))


def random_valuation(rng: np.random.Generator, frame: TemporalTransit, names: Sequence[str] = DEFAULT_ATOMS) -> Dict[str, int]:
    """Each atom gets the upset generated by a random set of points."""
    return {name: frame.up(int(rng.integers(1 << frame.size))) for name in names}


def random_model(rng: np.random.Generator, max_points: int, names: Sequence[str] = DEFAULT_ATOMS) -> RelationalModel:
    n = int(rng.integers(1, max_points + 1))
    frame = random_transit(rng, n)
    return RelationalModel(frame, random_valuation(rng, frame, names))


def random_algebraic_model(rng: np.random.Generator, a: FiniteTHA, names: Sequence[str] = DEFAULT_ATOMS) -> AlgebraicModel:
    return AlgebraicModel(a, {name: int(rng.integers(a.size)) for name in names})
