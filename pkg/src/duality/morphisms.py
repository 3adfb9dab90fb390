"""Duals of homomorphisms and p-morphisms, and the pointwise naturality of π."""

import logging
from typing import Optional, Sequence, Tuple

from src.algebra.constructions import homomorphism_witness
from src.algebra.tha import FiniteTHA
from src.core.errors import MorphismError
from src.duality.clop import clop_frame
from src.duality.isomorphisms import pi_map
from src.duality.spectrum import SpectrumResult, spec_algebra
from src.frames.transit import PMorphism, is_temporal_p_morphism
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)


def spec_hom(
    h: Sequence[int],
    a: FiniteTHA,
    b: FiniteTHA,
    spec_a: Optional[SpectrumResult] = None,
    spec_b: Optional[SpectrumResult] = None,
) -> PMorphism:
    """
    Spec(h): Spec b → Spec a, sending a prime filter to its preimage.

    Raises:
        MorphismError: If h is not a homomorphism
    """
    witness = homomorphism_witness(h, a, b)
    if witness is not None:
        raise MorphismError(f"Not a homomorphism: fails {witness[0]}", witness=witness)
    spec_a = spec_a if spec_a is not None else spec_algebra(a)
    spec_b = spec_b if spec_b is not None else spec_algebra(b)
    mapping = []
    for filter_mask in spec_b.point_filters:
        preimage = 0
        for x in range(a.size):
            if filter_mask >> h[x] & 1:
                preimage |= 1 << x
        mapping.append(spec_a.point_of(preimage))
    return PMorphism(spec_b.frame, spec_a.frame, tuple(mapping))


def clop_hom(m: PMorphism) -> Tuple[int, ...]:
    """
    Clop(f): Clop(target) → Clop(source), sending an upset to its preimage.

    Raises:
        MorphismError: If m is not a temporal p-morphism
    """
    report = is_temporal_p_morphism(m)
    if not report.ok:
        violation = report.violations[0]
        raise MorphismError(f"Not a temporal p-morphism: fails {violation.clause}", witness=violation.witness)
    source = clop_frame(m.source)
    target = clop_frame(m.target)
    return tuple(source.element_of(m.preimage(k)) for k in target.element_upsets)


def naturality_check(h: Sequence[int], a: FiniteTHA, b: FiniteTHA) -> ValidationReport:
    """
    Check π_b ∘ h = Clop(Spec h) ∘ π_a element by element.

    Both sides are compared as upsets of Spec b.
    """
    report = ValidationReport(subject="pi naturality")
    spec_a, spec_b = spec_algebra(a), spec_algebra(b)
    dual = spec_hom(h, a, b, spec_a, spec_b)
    pi_a, pi_b = pi_map(a, spec_a), pi_map(b, spec_b)
    for x in range(a.size):
        left = pi_b[h[x]]
        right = dual.preimage(pi_a[x])
        if left != right:
            report.add("square", (x,), f"π_b(h {x}) differs from Spec(h)⁻¹[π_a {x}]")
    return report


def image_points(m: PMorphism) -> int:
    """Set of target points hit by m."""
    return m.image((1 << m.source.size) - 1)


def is_injective(m: PMorphism) -> bool:
    return len(set(m.mapping)) == len(m.mapping)

