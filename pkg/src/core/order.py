"""
Finite binary relations and posets.

Carriers are always ``range(n)``. A relation is stored row-wise as Python
integers used as bit vectors: bit ``j`` of ``rows[i]`` is set iff ``i R j``.
Sets of elements are bitmasks too, and every set operation is word-parallel.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from src.core.errors import OrderError
from src.utils.helpers import full_mask, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinRel:
    """
    Square boolean relation on ``range(size)``.

    Immutable and hashable. The ``matrix`` view is a read-only numpy array
    used by the brute-force oracles; the bitmask rows are what every
    operation works on.
    """

    size: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.size:
            raise OrderError(
                f"Relation on {self.size} elements has {len(self.rows)} rows"
            )
        limit = full_mask(self.size)
        for i, row in enumerate(self.rows):
            if row & ~limit:
                raise OrderError(f"Row {i} mentions an element outside the carrier", witness=i)

    # Constructors

    @classmethod
    def empty(cls, size: int) -> "BinRel":
        return cls(size, (0,) * size)

    @classmethod
    def identity(cls, size: int) -> "BinRel":
        return cls(size, tuple(1 << i for i in range(size)))

    @classmethod
    def full(cls, size: int) -> "BinRel":
        return cls(size, (full_mask(size),) * size)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Tuple[int, int]]) -> "BinRel":
        """Build a relation from (i, j) pairs.

        Raises:
            OrderError: If a pair mentions an element outside the carrier
        """
        rows = [0] * size
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise OrderError(f"Pair ({i}, {j}) is outside a carrier of size {size}", witness=(i, j))
            rows[i] |= 1 << j
        return cls(size, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "BinRel":
        size = matrix.shape[0]
        rows = []
        for i in range(size):
            row = 0
            for j in np.flatnonzero(matrix[i]):
                row |= 1 << int(j)
            rows.append(row)
        return cls(size, tuple(rows))

    # Queries

    def holds(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def row(self, i: int) -> int:
        return self.rows[i]

    def pairs(self) -> List[Tuple[int, int]]:
        """All related pairs, sorted lexicographically."""
        return [(i, j) for i in range(self.size) for j in iter_bits(self.rows[i])]

    def image(self, s: int) -> int:
        """R[s] as a bitmask."""
        out = 0
        for i in iter_bits(s):
            out |= self.rows[i]
        return out

    def preimage(self, s: int) -> int:
        """R⁻¹[s] as a bitmask."""
        out = 0
        for i, row in enumerate(self.rows):
            if row & s:
                out |= 1 << i
        return out

    def diagonal(self) -> int:
        """Mask of the points related to themselves."""
        out = 0
        for i, row in enumerate(self.rows):
            if row >> i & 1:
                out |= 1 << i
        return out

    def issubset(self, other: "BinRel") -> bool:
        _same_size(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def difference_pair(self, other: "BinRel") -> Optional[Tuple[int, int]]:
        """Least pair in self but not in other, or None."""
        for i, (a, b) in enumerate(zip(self.rows, other.rows)):
            extra = a & ~b
            if extra:
                return (i, (extra & -extra).bit_length() - 1)
        return None

    def __or__(self, other: "BinRel") -> "BinRel":
        _same_size(self, other)
        return BinRel(self.size, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: "BinRel") -> "BinRel":
        _same_size(self, other)
        return BinRel(self.size, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "BinRel") -> "BinRel":
        _same_size(self, other)
        return BinRel(self.size, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Read-only boolean matrix; ``matrix[i, j]`` iff ``i R j``."""
        out = np.zeros((self.size, self.size), dtype=bool)
        for i, j in self.pairs():
            out[i, j] = True
        out.flags.writeable = False
        return out


def _same_size(r: BinRel, s: BinRel) -> None:
    if r.size != s.size:
        raise OrderError(f"Relations on carriers of size {r.size} and {s.size} cannot be combined")


def reflexivisation(r: BinRel) -> BinRel:
    """r ∪ Δ."""
    return BinRel(r.size, tuple(row | (1 << i) for i, row in enumerate(r.rows)))


def inverse(r: BinRel) -> BinRel:
    """r⁻¹: (i, j) ∈ result iff (j, i) ∈ r."""
    rows = [0] * r.size
    for i, row in enumerate(r.rows):
        for j in iter_bits(row):
            rows[j] |= 1 << i
    return BinRel(r.size, tuple(rows))


def compose(r: BinRel, s: BinRel) -> BinRel:
    """Relational composition r;s (first r, then s).

    Raises:
        OrderError: If the carriers differ in size
    """
    _same_size(r, s)
    return BinRel(r.size, tuple(s.image(row) for row in r.rows))


def transitive_closure(r: BinRel) -> BinRel:
    """Least transitive superset of r (Warshall on bit rows)."""
    rows = list(r.rows)
    for k in range(r.size):
        bit = 1 << k
        row_k = rows[k]
        for i in range(r.size):
            if rows[i] & bit:
                rows[i] |= row_k
    return BinRel(r.size, tuple(rows))


def compose_by_matrix(r: BinRel, s: BinRel) -> BinRel:
    """Composition through an integer matrix product. Oracle for ``compose``."""
    _same_size(r, s)
    product = np.matmul(r.matrix.astype(np.int64), s.matrix.astype(np.int64)) > 0
    return BinRel.from_matrix(product)


def transitive_closure_by_fixpoint(r: BinRel) -> BinRel:
    """Naive matrix fixpoint of R ∪ R;R. Oracle for ``transitive_closure``."""
    current = r.matrix.copy()
    while True:
        step = np.matmul(current.astype(np.int64), current.astype(np.int64)) > 0
        grown = current | step
        if np.array_equal(grown, current):
            return BinRel.from_matrix(current)
        current = grown


@dataclass(frozen=True)
class FinPoset:
    """
    Finite poset ``⟨range(size), leq⟩``.

    ``leq.rows[i]`` is the principal upset of ``i``.
    """

    size: int
    leq: BinRel

    def __post_init__(self):
        witness = order_witness(self.leq)
        if witness is not None:
            clause, pair = witness
            raise OrderError(f"Relation is not a partial order ({clause})", witness=pair)

    @cached_property
    def downs(self) -> Tuple[int, ...]:
        return inverse(self.leq).rows

    def up(self, s: int) -> int:
        return self.leq.image(s)

    def down(self, s: int) -> int:
        out = 0
        for i in iter_bits(s):
            out |= self.downs[i]
        return out

    def is_upset(self, s: int) -> bool:
        return self.up(s) == s

    def is_downset(self, s: int) -> bool:
        return self.down(s) == s

    def upsets(self) -> List[int]:
        return upsets(self)


def order_witness(leq: BinRel) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """First failed partial-order clause of a relation, or None.

    Returns:
        ``(clause, witness)`` with clause one of reflexivity, antisymmetry,
        transitivity
    """
    for i, row in enumerate(leq.rows):
        if not row >> i & 1:
            return "reflexivity", (i,)
    for i, row in enumerate(leq.rows):
        for j in iter_bits(row):
            if j != i and leq.rows[j] >> i & 1:
                return "antisymmetry", (min(i, j), max(i, j))
    for i, row in enumerate(leq.rows):
        for j in iter_bits(row):
            missing = leq.rows[j] & ~row
            if missing:
                return "transitivity", (i, j, (missing & -missing).bit_length() - 1)
    return None


def up_down(p: FinPoset, s: int, direction: str) -> int:
    """↑s or ↓s in a poset.

    Args:
        p: The poset
        s: Element set as a bitmask
        direction: ``"up"`` or ``"down"``

    Returns:
        ≤[s] for up, ≤⁻¹[s] for down

    Raises:
        OrderError: If s mentions an element outside the carrier
    """
    if s & ~full_mask(p.size):
        raise OrderError(f"Set {bin(s)} is not within a carrier of size {p.size}", witness=s)
    if direction == "up":
        return p.up(s)
    if direction == "down":
        return p.down(s)
    raise ValueError(f"Unknown direction: {direction}")


def upsets(p: FinPoset) -> List[int]:
    """All upsets of a poset in ascending bitmask order."""
    return [s for s in range(1 << p.size) if p.is_upset(s)]


def enumerate_posets(n: int) -> Iterator[FinPoset]:
    """
    All labeled posets on ``range(n)``.

    Posets on k+1 points are one-point extensions of posets on k points: the
    new point k chooses the downset D of points below it and the upset U of
    points above it, with every point of D below every point of U. Each
    labeled poset arises exactly once. Order: the extension tree walked
    depth-first, with D then U ascending by bitmask.
    """
    def extend(rows: List[int], k: int) -> Iterator[List[int]]:
        if k == n:
            yield rows
            return
        current = FinPoset(k, BinRel(k, tuple(rows)))
        downs = [s for s in range(1 << k) if current.is_downset(s)]
        ups = upsets(current)
        for d in downs:
            above_all = full_mask(k)
            for i in iter_bits(d):
                above_all &= rows[i]
            for u in ups:
                if u & d or u & ~above_all:
                    continue
                new_rows = [row | (1 << k) if d >> i & 1 else row for i, row in enumerate(rows)]
                new_rows.append(u | (1 << k))
                yield from extend(new_rows, k + 1)

    for rows in extend([], 0):
        yield FinPoset(n, BinRel(n, tuple(rows)))
