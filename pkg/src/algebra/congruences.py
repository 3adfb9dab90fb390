"""
Congruences of finite temporal Heyting algebras.

A congruence is a partition of the carrier compatible with ∧, ∨, →, □ and
♦. Classes are kept sorted, so two congruences are equal exactly when
their class tuples are. The brute-force oracle never looks at filters: it
scans set partitions on small carriers and closes principal congruences
under joins on larger ones.
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from config.settings import PARTITION_ORACLE_LIMIT
from src.algebra.filters import Filter, dia_filter_witness
from src.algebra.tha import FiniteTHA
from src.core.errors import CorrespondenceError
from src.utils.helpers import mask_of

logger = logging.getLogger(__name__)

BINARY_OPS = ("meet", "join", "impl")
UNARY_OPS = ("box", "dia")


@dataclass(frozen=True)
class Congruence:
    """An equivalence on the carrier, stored as sorted classes."""

    classes: Tuple[Tuple[int, ...], ...]
    algebra: FiniteTHA = field(compare=False, repr=False)

    @classmethod
    def from_classes(cls, algebra: FiniteTHA, classes: Iterable[Iterable[int]]) -> "Congruence":
        return cls(tuple(sorted(tuple(sorted(c)) for c in classes)), algebra)

    @classmethod
    def identity(cls, algebra: FiniteTHA) -> "Congruence":
        return cls.from_classes(algebra, [[x] for x in range(algebra.size)])

    @classmethod
    def total(cls, algebra: FiniteTHA) -> "Congruence":
        return cls.from_classes(algebra, [range(algebra.size)])

    @cached_property
    def node_to_class(self) -> Tuple[int, ...]:
        out = [0] * self.algebra.size
        for i, c in enumerate(self.classes):
            for x in c:
                out[x] = i
        return tuple(out)

    def relates(self, a: int, b: int) -> bool:
        return self.node_to_class[a] == self.node_to_class[b]

    def class_of(self, a: int) -> Tuple[int, ...]:
        return self.classes[self.node_to_class[a]]

    def class_mask(self, a: int) -> int:
        return mask_of(self.class_of(a))

    @property
    def is_identity(self) -> bool:
        return len(self.classes) == self.algebra.size

    @property
    def is_total(self) -> bool:
        return len(self.classes) == 1

    def __le__(self, other: "Congruence") -> bool:
        """Containment as relations: every class of self sits in one of other."""
        return all(
            len({other.node_to_class[x] for x in c}) == 1 for c in self.classes
        )

    def __lt__(self, other: "Congruence") -> bool:
        return self <= other and self != other

    def __and__(self, other: "Congruence") -> "Congruence":
        classes = []
        for c in self.classes:
            refinement = defaultdict(list)
            for x in c:
                refinement[other.node_to_class[x]].append(x)
            classes.extend(refinement.values())
        return Congruence.from_classes(self.algebra, classes)

    def __or__(self, other: "Congruence") -> "Congruence":
        merged = _UnionFind(self.algebra.size)
        for c in itertools.chain(self.classes, other.classes):
            for x in c[1:]:
                merged.union(c[0], x)
        return Congruence.from_classes(self.algebra, merged.classes())

    def __str__(self) -> str:
        return ", ".join("(" + " ~ ".join(map(str, c)) + ")" if len(c) > 1 else str(c[0]) for c in self.classes)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def classes(self) -> List[List[int]]:
        groups = defaultdict(list)
        for x in range(len(self.parent)):
            groups[self.find(x)].append(x)
        return list(groups.values())


def congruence_witness(a: FiniteTHA, classes: Sequence[Sequence[int]]) -> Optional[Tuple[str, int, int, int]]:
    """
    First compatibility failure of a partition, or None.

    It suffices to vary one argument at a time: with x ~ x' the results of
    op(x, y) and op(x', y) (and symmetrically) must be related.

    Returns:
        ``(operation, x, x', y)``; y is -1 for the unary operations
    """
    node_to_class = [0] * a.size
    for i, c in enumerate(classes):
        for x in c:
            node_to_class[x] = i
    for c in classes:
        x = c[0]
        for x2 in c[1:]:
            for name in UNARY_OPS:
                table = getattr(a, name)
                if node_to_class[table[x]] != node_to_class[table[x2]]:
                    return (name, x, x2, -1)
            for name in BINARY_OPS:
                table = getattr(a, name)
                for y in range(a.size):
                    if node_to_class[table[x][y]] != node_to_class[table[x2][y]]:
                        return (name, x, x2, y)
                    if node_to_class[table[y][x]] != node_to_class[table[y][x2]]:
                        return (name, x, x2, y)
    return None


def is_congruence(a: FiniteTHA, classes: Sequence[Sequence[int]]) -> bool:
    return congruence_witness(a, classes) is None


def _partitions(n: int) -> Iterator[List[List[int]]]:
    """Set partitions of range(n) as restricted growth strings."""
    if n == 0:
        yield []
        return
    codes = [0] * n

    def grow(i: int, max_code: int) -> Iterator[List[List[int]]]:
        if i == n:
            classes: List[List[int]] = [[] for _ in range(max_code + 1)]
            for x, code in enumerate(codes):
                classes[code].append(x)
            yield classes
            return
        for code in range(max_code + 2):
            codes[i] = code
            yield from grow(i + 1, max(max_code, code))

    codes[0] = 0
    yield from grow(1, 0)


def principal_congruence(a: FiniteTHA, x: int, y: int) -> Congruence:
    """Cg(x, y): least congruence relating x and y."""
    merged = _UnionFind(a.size)
    merged.union(x, y)
    changed = True
    while changed:
        changed = False
        for c in merged.classes():
            head = c[0]
            for other in c[1:]:
                for name in UNARY_OPS:
                    table = getattr(a, name)
                    changed |= merged.union(table[head], table[other])
                for name in BINARY_OPS:
                    table = getattr(a, name)
                    for z in range(a.size):
                        changed |= merged.union(table[head][z], table[other][z])
                        changed |= merged.union(table[z][head], table[z][other])
    return Congruence.from_classes(a, merged.classes())


def _canonical(congs: Iterable[Congruence]) -> List[Congruence]:
    return sorted(set(congs), key=lambda c: (-len(c.classes), c.classes))


def congruences_bruteforce(a: FiniteTHA, partition_limit: int = PARTITION_ORACLE_LIMIT) -> List[Congruence]:
    """
    Every congruence of the algebra, finest first.

    Up to ``partition_limit`` elements every set partition is tested
    against the operation tables. Above it, the principal congruences
    Cg(x, y) are closed under joins, which yields the whole lattice of a
    finite algebra.
    """
    if a.size <= partition_limit:
        found = [
            Congruence.from_classes(a, classes)
            for classes in _partitions(a.size)
            if is_congruence(a, classes)
        ]
        return _canonical(found)

    logger.debug(f"Closing principal congruences on {a.size} elements")
    found = {Congruence.identity(a)}
    for x in range(a.size):
        for y in range(x + 1, a.size):
            found.add(principal_congruence(a, x, y))
    frontier = list(found)
    while frontier:
        fresh = []
        for theta in frontier:
            for psi in list(found):
                joined = theta | psi
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    return _canonical(found)


def cong_to_filter(theta: Congruence) -> Filter:
    """[1]θ, the class of top."""
    a = theta.algebra
    return Filter(theta.class_mask(a.top), a)


def filter_to_cong(f: Filter) -> Congruence:
    """
    {(x, y) : x↔y ∈ F}.

    Raises:
        CorrespondenceError: If f is not a ♦-filter; the witness is the
            pair whose ♦-closure fails
    """
    witness = dia_filter_witness(f)
    if witness is not None:
        x, y = witness
        raise CorrespondenceError(
            f"Not a ♦-filter: {x}→{y} is in the filter but ♦{x}→♦{y} is not",
            witness=witness,
        )
    a = f.algebra
    merged = _UnionFind(a.size)
    for x in range(a.size):
        for y in range(x + 1, a.size):
            if a.iff(x, y) in f:
                merged.union(x, y)
    return Congruence.from_classes(a, merged.classes())


def upper_covers(theta: Congruence, congs: Sequence[Congruence]) -> List[Congruence]:
    above = [psi for psi in congs if theta < psi]
    return [psi for psi in above if not any(theta < chi < psi for chi in above)]


def meet_irreducible_congruences(congs: Sequence[Congruence]) -> List[Congruence]:
    """Proper congruences with exactly one upper cover."""
    return [theta for theta in congs if not theta.is_total and len(upper_covers(theta, congs)) == 1]


def minimal_nontrivial(congs: Sequence[Congruence]) -> List[Congruence]:
    """Atoms of the congruence lattice."""
    nontrivial = [theta for theta in congs if not theta.is_identity]
    return [theta for theta in nontrivial if not any(psi < theta for psi in nontrivial)]
