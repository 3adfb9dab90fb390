"""
Quotients, products and homomorphisms of finite algebras, and the check
that an algebra embeds into the product of its subdirectly irreducible
quotients.
"""

import logging
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from config.settings import PRODUCT_SIZE_LIMIT
from src.algebra.classify import is_subdirectly_irreducible
from src.algebra.congruences import (
    Congruence,
    congruences_bruteforce,
    meet_irreducible_congruences,
)
from src.algebra.tha import FiniteTHA, trivial_algebra
from src.core.order import BinRel
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)

Map = Tuple[int, ...]


def quotient(a: FiniteTHA, theta: Congruence) -> FiniteTHA:
    """A/θ with classes numbered in the congruence's class order."""
    cls_of = theta.node_to_class
    reps = [c[0] for c in theta.classes]
    k = len(reps)

    def lift(table) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(cls_of[table[x][y]] for y in reps) for x in reps)

    meet = lift(a.meet)
    rows = []
    for i in range(k):
        row = 0
        for j in range(k):
            if meet[i][j] == i:
                row |= 1 << j
        rows.append(row)
    labels = None
    if a.labels:
        labels = tuple("[" + ",".join(a.label(x) for x in c) + "]" for c in theta.classes)
    return FiniteTHA(
        size=k,
        leq=BinRel(k, tuple(rows)),
        meet=meet,
        join=lift(a.join),
        impl=lift(a.impl),
        box=tuple(cls_of[a.box[x]] for x in reps),
        dia=tuple(cls_of[a.dia[x]] for x in reps),
        bot=cls_of[a.bot],
        top=cls_of[a.top],
        labels=labels,
    )


def quotient_map(theta: Congruence) -> Map:
    """The canonical projection a ↦ [a]θ."""
    return theta.node_to_class


def product(a: FiniteTHA, b: FiniteTHA) -> FiniteTHA:
    """a × b with componentwise operations; pair (x, y) is x * |b| + y."""
    m = b.size
    n = a.size * m

    def pair(x: int, y: int) -> int:
        return x * m + y

    def split(p: int) -> Tuple[int, int]:
        return divmod(p, m)

    def lift(ta, tb) -> Tuple[Tuple[int, ...], ...]:
        out = []
        for p in range(n):
            x1, y1 = split(p)
            out.append(tuple(pair(ta[x1][x2], tb[y1][y2]) for x2, y2 in map(split, range(n))))
        return tuple(out)

    rows = []
    for p in range(n):
        x, y = split(p)
        row = 0
        for q in range(n):
            x2, y2 = split(q)
            if a.le(x, x2) and b.le(y, y2):
                row |= 1 << q
        rows.append(row)
    labels = None
    if a.labels or b.labels:
        labels = tuple(f"({a.label(x)},{b.label(y)})" for x, y in map(split, range(n)))
    return FiniteTHA(
        size=n,
        leq=BinRel(n, tuple(rows)),
        meet=lift(a.meet, b.meet),
        join=lift(a.join, b.join),
        impl=lift(a.impl, b.impl),
        box=tuple(pair(a.box[x], b.box[y]) for x, y in map(split, range(n))),
        dia=tuple(pair(a.dia[x], b.dia[y]) for x, y in map(split, range(n))),
        bot=pair(a.bot, b.bot),
        top=pair(a.top, b.top),
        labels=labels,
    )


def projections(a: FiniteTHA, b: FiniteTHA) -> Tuple[Map, Map]:
    """The two projections out of ``product(a, b)``."""
    m = b.size
    n = a.size * m
    return tuple(p // m for p in range(n)), tuple(p % m for p in range(n))


def product_of(algebras: Sequence[FiniteTHA]) -> FiniteTHA:
    """Iterated product; the empty product is the one-element algebra."""
    return reduce(product, algebras, trivial_algebra())


def homomorphism_witness(h: Sequence[int], a: FiniteTHA, b: FiniteTHA) -> Optional[Tuple]:
    """
    First operation a map fails to preserve, or None.

    Returns:
        ``(operation, arguments...)`` for the first failure found
    """
    if len(h) != a.size or any(not 0 <= y < b.size for y in h):
        return ("total", len(h))
    if h[a.bot] != b.bot:
        return ("bot",)
    if h[a.top] != b.top:
        return ("top",)
    for x in range(a.size):
        if h[a.box[x]] != b.box[h[x]]:
            return ("box", x)
        if h[a.dia[x]] != b.dia[h[x]]:
            return ("dia", x)
        for y in range(a.size):
            for name in ("meet", "join", "impl"):
                ta, tb = getattr(a, name), getattr(b, name)
                if h[ta[x][y]] != tb[h[x]][h[y]]:
                    return (name, x, y)
    return None


def is_homomorphism(h: Sequence[int], a: FiniteTHA, b: FiniteTHA) -> bool:
    """h preserves ∧, ∨, →, □, ♦, 0 and 1."""
    return homomorphism_witness(h, a, b) is None


def compose_maps(h: Sequence[int], g: Sequence[int]) -> Map:
    """g ∘ h: first h, then g."""
    return tuple(g[y] for y in h)


def subdirect_embedding_check(
    a: FiniteTHA,
    congs: Optional[List[Congruence]] = None,
    product_limit: int = PRODUCT_SIZE_LIMIT,
) -> ValidationReport:
    """
    Check that a embeds into the product of its quotients by the
    meet-irreducible congruences.

    The joint map a ↦ ([a]θ₁, ..., [a]θₖ) must be injective and each
    component must be a homomorphism onto a subdirectly irreducible
    quotient. When the product has at most ``product_limit`` elements it is
    built and the joint map is checked as a homomorphism into it.
    """
    report = ValidationReport(subject="subdirect embedding")
    congs = congs if congs is not None else congruences_bruteforce(a)
    irreducible = meet_irreducible_congruences(congs)
    report.details["factors"] = len(irreducible)

    factors = [quotient(a, theta) for theta in irreducible]
    for index, (theta, factor) in enumerate(zip(irreducible, factors)):
        witness = homomorphism_witness(quotient_map(theta), a, factor)
        if witness is not None:
            report.add("projection", (index,) + witness, f"Projection {index} is not a homomorphism")
        if not is_subdirectly_irreducible(factor):
            report.add("irreducible-factor", (index,), f"Quotient {index} is not subdirectly irreducible")

    joint = [tuple(theta.node_to_class[x] for theta in irreducible) for x in range(a.size)]
    seen = {}
    for x, code in enumerate(joint):
        if code in seen:
            report.add("injective", (seen[code], x), f"Elements {seen[code]} and {x} are not separated")
            break
        seen[code] = x

    size = 1
    for factor in factors:
        size *= factor.size
    report.details["product_size"] = size
    if size <= product_limit:
        target = product_of(factors)
        sizes = [factor.size for factor in factors]

        def encode(code: Tuple[int, ...]) -> int:
            # trivial_algebra() seeds the product, so the leading factor is 1
            index = 0
            for value, width in zip(code, sizes):
                index = index * width + value
            return index

        h = tuple(encode(code) for code in joint)
        witness = homomorphism_witness(h, a, target)
        if witness is not None:
            report.add("embedding", witness, "Joint map is not a homomorphism into the product")
    else:
        logger.debug(f"Skipping explicit product of size {size}")
    return report
