"""
The unit and counit of the finite duality.

π sends an element to the set of prime filters containing it; γ sends a
point to the set of upsets containing it. Both checks build the map,
then verify it is a bijection that preserves the relevant structure.
"""

import logging
from typing import Optional, Tuple

from src.algebra.constructions import homomorphism_witness
from src.algebra.tha import FiniteTHA
from src.duality.clop import ClopResult, clop_frame
from src.duality.spectrum import SpectrumResult, spec_algebra
from src.frames.transit import PMorphism, TemporalTransit, is_temporal_p_morphism
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)


def pi_map(a: FiniteTHA, spectrum: SpectrumResult) -> Tuple[int, ...]:
    """a ↦ {x : a ∈ x} as point bitmasks."""
    out = []
    for element in range(a.size):
        mask = 0
        for point, filter_mask in enumerate(spectrum.point_filters):
            if filter_mask >> element & 1:
                mask |= 1 << point
        out.append(mask)
    return tuple(out)


def gamma_map(f: TemporalTransit, clop: ClopResult) -> Tuple[int, ...]:
    """x ↦ {K : x ∈ K} as element bitmasks of the dual algebra."""
    out = []
    for point in range(f.size):
        mask = 0
        for element, upset in enumerate(clop.element_upsets):
            if upset >> point & 1:
                mask |= 1 << element
        out.append(mask)
    return tuple(out)


def _injective_witness(values: Tuple[int, ...]) -> Optional[Tuple[int, int]]:
    seen = {}
    for i, value in enumerate(values):
        if value in seen:
            return (seen[value], i)
        seen[value] = i
    return None


def pi_check(a: FiniteTHA) -> ValidationReport:
    """
    Verify that π is an isomorphism from a onto Clop(Spec a).

    Returns:
        Report with clauses ``image``, ``injective``, ``surjective`` or the
        first operation π fails to preserve
    """
    report = ValidationReport(subject="pi isomorphism")
    spectrum = spec_algebra(a)
    clop = clop_frame(spectrum.frame)
    masks = pi_map(a, spectrum)

    mapping = []
    for element, mask in enumerate(masks):
        if mask not in clop.element_upsets:
            report.add("image", (element,), f"π({element}) is not an upset of the spectrum")
            return report
        mapping.append(clop.element_of(mask))

    duplicate = _injective_witness(tuple(mapping))
    if duplicate is not None:
        report.add("injective", duplicate, "π identifies two elements")
    if len(set(mapping)) != clop.algebra.size:
        missing = min(set(range(clop.algebra.size)) - set(mapping))
        report.add("surjective", (missing,), f"Upset {missing} is not in the image of π")

    witness = homomorphism_witness(tuple(mapping), a, clop.algebra)
    if witness is not None:
        report.add(witness[0], witness[1:], f"π does not preserve {witness[0]}")
    report.details["mapping"] = tuple(mapping)
    return report


def gamma_check(f: TemporalTransit) -> ValidationReport:
    """
    Verify that γ is an isomorphism from f onto Spec(Clop f).

    γ and its inverse must both be temporal p-morphisms.
    """
    report = ValidationReport(subject="gamma isomorphism")
    clop = clop_frame(f)
    spectrum = spec_algebra(clop.algebra)
    masks = gamma_map(f, clop)

    mapping = []
    for point, mask in enumerate(masks):
        if mask not in spectrum.point_filters:
            report.add("image", (point,), f"γ({point}) is not a prime filter")
            return report
        mapping.append(spectrum.point_of(mask))

    duplicate = _injective_witness(tuple(mapping))
    if duplicate is not None:
        report.add("injective", duplicate, "γ identifies two points")
    if len(set(mapping)) != spectrum.frame.size:
        missing = min(set(range(spectrum.frame.size)) - set(mapping))
        report.add("surjective", (missing,), f"Prime filter {missing} is not in the image of γ")
    if not report.ok:
        return report

    forward = PMorphism(f, spectrum.frame, tuple(mapping))
    backward_map = [0] * f.size
    for point, image in enumerate(mapping):
        backward_map[image] = point
    backward = PMorphism(spectrum.frame, f, tuple(backward_map))
    report.extend(is_temporal_p_morphism(forward), prefix="gamma.")
    report.extend(is_temporal_p_morphism(backward), prefix="gamma-inverse.")
    report.details["mapping"] = tuple(mapping)
    return report
