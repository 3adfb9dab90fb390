"""
Temporal transits and temporal p-morphisms.

A transit is stored by its forward relation R▷ alone; the order ≤ (the
reflexivisation of R▷) and the backward relation R◁ (its inverse) are
derived on first use and cached.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.errors import MorphismError
from src.core.order import (
    BinRel,
    compose,
    inverse,
    order_witness,
    reflexivisation,
)
from src.utils.helpers import full_mask, iter_bits
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TemporalTransit:
    """
    Finite frame ⟨X, R◁, R▷, ≤⟩ on ``range(size)``.

    Construction does not validate; use ``validate_transit`` for that, so
    that invalid input can be reported clause by clause.
    """

    size: int
    r_fwd: BinRel
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    @classmethod
    def from_pairs(
        cls,
        size: int,
        pairs: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "TemporalTransit":
        return cls(size, BinRel.from_pairs(size, pairs), tuple(labels) if labels else None)

    @cached_property
    def leq(self) -> BinRel:
        return reflexivisation(self.r_fwd)

    @cached_property
    def r_back(self) -> BinRel:
        return inverse(self.r_fwd)

    @cached_property
    def downs(self) -> Tuple[int, ...]:
        return inverse(self.leq).rows

    @cached_property
    def refl(self) -> int:
        return self.r_fwd.diagonal()

    @property
    def carrier(self) -> int:
        return full_mask(self.size)

    def up(self, s: int) -> int:
        return self.leq.image(s)

    def down(self, s: int) -> int:
        out = 0
        for i in iter_bits(s):
            out |= self.downs[i]
        return out

    def is_upset(self, s: int) -> bool:
        return self.up(s) == s

    def upsets(self) -> List[int]:
        """All upsets in ascending bitmask order."""
        return [s for s in range(1 << self.size) if self.is_upset(s)]

    def label(self, point: int) -> str:
        return self.labels[point] if self.labels else str(point)

    def point_labels(self) -> List[str]:
        return [self.label(i) for i in range(self.size)]


def validate_transit(f: TemporalTransit) -> ValidationReport:
    """
    Check every frame invariant of a temporal transit.

    Args:
        f: Candidate frame

    Returns:
        Report with one entry per violated clause; empty means valid
    """
    report = ValidationReport(subject="transit")
    r = f.r_fwd

    if f.labels is not None and len(f.labels) != f.size:
        report.add("labels", (len(f.labels),), f"Expected {f.size} labels, got {len(f.labels)}")

    for i, row in enumerate(r.rows):
        for j in iter_bits(row):
            if j > i and r.rows[j] >> i & 1:
                report.add("antisymmetry", (i, j), f"{i} R {j} and {j} R {i} with {i} != {j}")
                break
        else:
            continue
        break

    for i, row in enumerate(r.rows):
        missing = r.image(row) & ~row
        if missing:
            k = (missing & -missing).bit_length() - 1
            middle = next(j for j in iter_bits(row) if r.rows[j] >> k & 1)
            report.add("transitivity", (i, middle, k), f"{i} R {middle} R {k} but not {i} R {k}")
            break

    order_failure = order_witness(f.leq)
    if order_failure is not None:
        clause, witness = order_failure
        report.add("order", witness, f"Reflexivisation of R fails {clause}")

    strict = f.leq - BinRel.identity(f.size)
    missing_strict = strict.difference_pair(r)
    if missing_strict is not None:
        report.add("strict-inclusion", missing_strict, "< is not contained in R")
    outside = r.difference_pair(f.leq)
    if outside is not None:
        report.add("order-inclusion", outside, "R is not contained in ≤")

    mixed = compose(compose(f.leq, r), f.leq)
    mix_failure = mixed.difference_pair(r) or r.difference_pair(mixed)
    if mix_failure is not None:
        report.add("mix", mix_failure, "≤;R;≤ differs from R")

    back_failure = f.r_back.difference_pair(inverse(r)) or inverse(r).difference_pair(f.r_back)
    if back_failure is not None:
        report.add("inverse", back_failure, "R◁ is not the inverse of R▷")

    return report


def is_transit(f: TemporalTransit) -> bool:
    return validate_transit(f).ok


def refl_points(f: TemporalTransit) -> int:
    """{p : p R▷ p} as a bitmask."""
    return f.refl


@dataclass(frozen=True)
class PMorphism:
    """A map between the carriers of two transits."""

    source: TemporalTransit
    target: TemporalTransit
    mapping: Tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.size:
            raise MorphismError(
                f"Map covers {len(self.mapping)} of {self.source.size} source points"
            )
        for x, y in enumerate(self.mapping):
            if not 0 <= y < self.target.size:
                raise MorphismError(f"Point {x} maps outside the target", witness=(x, y))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self, s: int) -> int:
        out = 0
        for x in iter_bits(s):
            out |= 1 << self.mapping[x]
        return out

    def preimage(self, s: int) -> int:
        out = 0
        for x, y in enumerate(self.mapping):
            if s >> y & 1:
                out |= 1 << x
        return out

    def then(self, other: "PMorphism") -> "PMorphism":
        """Composite: first self, then other."""
        return PMorphism(self.source, other.target, tuple(other.mapping[y] for y in self.mapping))


def is_temporal_p_morphism(m: PMorphism) -> ValidationReport:
    """
    Check the Esakia, frontal and temporal morphism clauses.

    Clauses: ``monotone``; ``leq-back`` (f x ≤ y implies some z ≥ x with
    f z = y); ``r-forth``; ``r-back`` (f x R▷ y implies some z with x R▷ z
    and f z = y); ``back-forth`` (x₃ R◁ x₂ implies f x₃ R◁ f x₂);
    ``back-lift`` (f x₂ R◁ y implies some x₁ with x₂ R◁ x₁ and y ≤ f x₁).

    Returns:
        Report listing each violated clause with its witness
    """
    report = ValidationReport(subject="temporal p-morphism")
    f, src, dst = m.mapping, m.source, m.target

    def first(clause: str, witness: Tuple[int, ...], message: str) -> None:
        if report.first(clause) is None:
            report.add(clause, witness, message)

    for x in range(src.size):
        for y in iter_bits(src.leq.rows[x]):
            if not dst.leq.holds(f[x], f[y]):
                first("monotone", (x, y), f"{x} ≤ {y} but f {x} ≰ f {y}")
        reached = m.image(src.leq.rows[x])
        for y in iter_bits(dst.leq.rows[f[x]] & ~reached):
            first("leq-back", (x, y), f"f {x} ≤ {y} has no preimage above {x}")

        for y in iter_bits(src.r_fwd.rows[x]):
            if not dst.r_fwd.holds(f[x], f[y]):
                first("r-forth", (x, y), f"{x} R▷ {y} but not f {x} R▷ f {y}")
        reached = m.image(src.r_fwd.rows[x])
        for y in iter_bits(dst.r_fwd.rows[f[x]] & ~reached):
            first("r-back", (x, y), f"f {x} R▷ {y} has no R▷-successor preimage")

        for y in iter_bits(src.r_back.rows[x]):
            if not dst.r_back.holds(f[x], f[y]):
                first("back-forth", (x, y), f"{x} R◁ {y} but not f {x} R◁ f {y}")
        lifted = dst.down(m.image(src.r_back.rows[x]))
        for y in iter_bits(dst.r_back.rows[f[x]] & ~lifted):
            first("back-lift", (x, y), f"f {x} R◁ {y} has no R◁-successor of {x} mapping above {y}")

    return report


def frame_isomorphism(f: TemporalTransit, g: TemporalTransit) -> Optional[Tuple[int, ...]]:
    """
    Find an isomorphism of transits by backtracking.

    Candidates are pruned by an invariant per point (loop, up-degree,
    down-degree) and by consistency of R▷ with every earlier assignment.

    Returns:
        The mapping f-point -> g-point, or None if the frames differ
    """
    if f.size != g.size or len(f.r_fwd) != len(g.r_fwd):
        return None

    def signature(frame: TemporalTransit, x: int) -> Tuple[int, int, int]:
        return (frame.refl >> x & 1, frame.leq.rows[x].bit_count(), frame.downs[x].bit_count())

    f_sig = [signature(f, x) for x in range(f.size)]
    buckets: Dict[Tuple[int, int, int], List[int]] = {}
    for y in range(g.size):
        buckets.setdefault(signature(g, y), []).append(y)
    if sorted(f_sig) != sorted(s for s, ys in buckets.items() for _ in ys):
        return None

    mapping = [-1] * f.size
    used = 0

    def place(x: int) -> bool:
        nonlocal used
        if x == f.size:
            return True
        for y in buckets.get(f_sig[x], []):
            if used >> y & 1:
                continue
            if any(
                f.r_fwd.holds(x, z) != g.r_fwd.holds(y, mapping[z])
                or f.r_fwd.holds(z, x) != g.r_fwd.holds(mapping[z], y)
                for z in range(x)
            ):
                continue
            mapping[x] = y
            used |= 1 << y
            if place(x + 1):
                return True
            used &= ~(1 << y)
            mapping[x] = -1
        return False

    if place(0):
        return tuple(mapping)
    return None
