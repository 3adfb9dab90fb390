"""
Algebraic and relational semantics.

``forces`` follows the pointwise clauses literally and is the reference;
``truth_set`` computes the same sets with bitmask operations and is what
search and filtration use. Relational clauses:

- p: x ∈ ν(p)
- φ → ψ: every y ≥ x forcing φ forces ψ
- □φ: every y with x R▷ y forces φ
- ♦φ: some w with x R◁ w (that is, w R▷ x) forces φ
"""

import itertools
import logging
from typing import Dict, Optional, Tuple, Union

from src.algebra.tha import FiniteTHA
from src.duality.models import spec_model
from src.duality.spectrum import spec_algebra
from src.frames.transit import TemporalTransit
from src.logic.formula import And, Atom, Bot, Box, Dia, Formula, Imp, Or, Top, atoms
from src.logic.models import AlgebraicModel, RelationalModel
from src.utils.helpers import iter_bits, lowest_bit

logger = logging.getLogger(__name__)


def eval_algebraic(m: AlgebraicModel, f: Formula) -> int:
    """Value of f under the homomorphic extension of the valuation.

    Raises:
        UnboundAtomError: If f mentions an atom the valuation lacks
    """
    a = m.algebra
    if isinstance(f, Atom):
        return m.value(f.name)
    if isinstance(f, Bot):
        return a.bot
    if isinstance(f, Top):
        return a.top
    if isinstance(f, And):
        return a.meet[eval_algebraic(m, f.left)][eval_algebraic(m, f.right)]
    if isinstance(f, Or):
        return a.join[eval_algebraic(m, f.left)][eval_algebraic(m, f.right)]
    if isinstance(f, Imp):
        return a.impl[eval_algebraic(m, f.left)][eval_algebraic(m, f.right)]
    if isinstance(f, Box):
        return a.box[eval_algebraic(m, f.body)]
    if isinstance(f, Dia):
        return a.dia[eval_algebraic(m, f.body)]
    raise TypeError(f"Not a formula: {f!r}")


def forces(m: RelationalModel, x: int, f: Formula) -> bool:
    """Whether point x forces f, clause by clause.

    Raises:
        UnboundAtomError: If f mentions an atom the valuation lacks
    """
    frame = m.frame
    if isinstance(f, Atom):
        return bool(m.value(f.name) >> x & 1)
    if isinstance(f, Bot):
        return False
    if isinstance(f, Top):
        return True
    if isinstance(f, And):
        return forces(m, x, f.left) and forces(m, x, f.right)
    if isinstance(f, Or):
        return forces(m, x, f.left) or forces(m, x, f.right)
    if isinstance(f, Imp):
        return all(
            not forces(m, y, f.left) or forces(m, y, f.right)
            for y in iter_bits(frame.leq.rows[x])
        )
    if isinstance(f, Box):
        return all(forces(m, y, f.body) for y in iter_bits(frame.r_fwd.rows[x]))
    if isinstance(f, Dia):
        return any(forces(m, w, f.body) for w in iter_bits(frame.r_back.rows[x]))
    raise TypeError(f"Not a formula: {f!r}")


def truth_set(m: RelationalModel, f: Formula, cache: Optional[Dict[Formula, int]] = None) -> int:
    """Points forcing f, as a bitmask.

    Args:
        m: Relational model
        f: Formula
        cache: Optional memo shared across calls on the same model
    """
    cache = {} if cache is None else cache
    if f in cache:
        return cache[f]
    frame = m.frame
    carrier = frame.carrier
    if isinstance(f, Atom):
        out = m.value(f.name)
    elif isinstance(f, Bot):
        out = 0
    elif isinstance(f, Top):
        out = carrier
    elif isinstance(f, And):
        out = truth_set(m, f.left, cache) & truth_set(m, f.right, cache)
    elif isinstance(f, Or):
        out = truth_set(m, f.left, cache) | truth_set(m, f.right, cache)
    elif isinstance(f, Imp):
        bad = truth_set(m, f.left, cache) & ~truth_set(m, f.right, cache)
        out = carrier & ~frame.down(bad)
    elif isinstance(f, Box):
        out = carrier & ~frame.r_fwd.preimage(carrier & ~truth_set(m, f.body, cache))
    elif isinstance(f, Dia):
        out = frame.r_fwd.image(truth_set(m, f.body, cache))
    else:
        raise TypeError(f"Not a formula: {f!r}")
    cache[f] = out
    return out


def validates(m: Union[AlgebraicModel, RelationalModel], f: Formula) -> bool:
    """f evaluates to top, or holds at every point."""
    if isinstance(m, AlgebraicModel):
        return eval_algebraic(m, f) == m.algebra.top
    return truth_set(m, f) == m.frame.carrier


def refutation_point(m: RelationalModel, f: Formula) -> Optional[int]:
    """Least point not forcing f, or None."""
    missing = m.frame.carrier & ~truth_set(m, f)
    return lowest_bit(missing) if missing else None


def upset_valuations(frame: TemporalTransit, names: Tuple[str, ...], ups=None):
    """Every valuation of the atoms by upsets, in lexicographic bitmask order."""
    ups = ups if ups is not None else frame.upsets()
    for combo in itertools.product(ups, repeat=len(names)):
        yield dict(zip(names, combo))


def frame_validates(frame: TemporalTransit, f: Formula) -> Optional[Tuple[Dict[str, int], int]]:
    """
    Check f on a frame under every upset valuation of its atoms.

    Returns:
        None when valid, otherwise the first refuting valuation and point
    """
    names = atoms(f)
    for valuation in upset_valuations(frame, names):
        point = refutation_point(RelationalModel(frame, valuation), f)
        if point is not None:
            return valuation, point
    return None


def pd_preserves(frame: TemporalTransit, phi: Formula, chi: Formula) -> bool:
    """If φ → χ is valid on the frame then so is ♦φ → ♦χ."""
    if frame_validates(frame, Imp(phi, chi)) is not None:
        return True
    return frame_validates(frame, Imp(Dia(phi), Dia(chi))) is None


def algebra_validates(a: FiniteTHA, f: Formula) -> Optional[Dict[str, int]]:
    """First valuation of f's atoms under which f is not top, or None."""
    names = atoms(f)
    for combo in itertools.product(range(a.size), repeat=len(names)):
        valuation = dict(zip(names, combo))
        if not validates(AlgebraicModel(a, valuation), f):
            return valuation
    return None


def truth_lemma_check(m: AlgebraicModel, f: Formula) -> bool:
    """The value of f lies in a prime filter iff its point forces f."""
    spectrum = spec_algebra(m.algebra)
    relational = spec_model(m, spectrum)
    value = eval_algebraic(m, f)
    return all(
        bool(filter_mask >> value & 1) == forces(relational, x, f)
        for x, filter_mask in enumerate(spectrum.point_filters)
    )


def model_validity_transfer_check(m: AlgebraicModel, f: Formula) -> bool:
    """An algebraic model validates f iff its dual relational model does."""
    return validates(m, f) == validates(spec_model(m), f)
