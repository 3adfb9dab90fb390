"""Shared frames and algebras for the test suite."""

from config.settings import EXAMPLES_DIR
from src.algebra.tha import FiniteTHA, chain_order
from src.frames.transit import TemporalTransit

# Points of the three-point example: x below y below z, loop at y only.
X, Y, Z = 0, 1, 2

# Points of the ten-point example.
W4, X4, Y4, Z4, W4P, X4P, Y4P, Z4P, Y4PP, Y4PPP = range(10)


def example_path(name: str) -> str:
    return str(EXAMPLES_DIR / name)


def three_point_frame() -> TemporalTransit:
    """x < y < z with R = {(x,y), (x,z), (y,y), (y,z)}."""
    return TemporalTransit.from_pairs(3, [(X, Y), (X, Z), (Y, Y), (Y, Z)], ["x", "y", "z"])


def ten_point_frame() -> TemporalTransit:
    """The ten-point frame where w and w' are not Z-reachable from z."""
    covers = [
        (Z4, Z4P), (Y4, Z4), (Y4, Y4P), (Y4PP, Y4P), (Y4PP, Y4PPP),
        (X4, Y4), (X4, X4P), (W4, X4), (W4, W4P),
    ]
    rows = [0] * 10
    for lower, upper in covers:
        rows[lower] |= 1 << upper
    # transitive closure by repeated relaxation
    changed = True
    while changed:
        changed = False
        for i in range(10):
            grown = rows[i]
            for j in range(10):
                if rows[i] >> j & 1:
                    grown |= rows[j]
            if grown != rows[i]:
                rows[i] = grown
                changed = True
    pairs = [(i, j) for i in range(10) for j in range(10) if rows[i] >> j & 1]
    pairs.append((X4, X4))
    labels = ["w", "x", "y", "z", "w'", "x'", "y'", "z'", "y''", "y'''"]
    return TemporalTransit.from_pairs(10, pairs, labels)


def point(reflexive: bool) -> TemporalTransit:
    return TemporalTransit.from_pairs(1, [(0, 0)] if reflexive else [])


def chain2(loops=()) -> TemporalTransit:
    """0 < 1 with the given points reflexive."""
    return TemporalTransit.from_pairs(2, [(0, 1)] + [(i, i) for i in loops])


def antichain(n: int, reflexive: bool = True) -> TemporalTransit:
    return TemporalTransit.from_pairs(n, [(i, i) for i in range(n)] if reflexive else [])


def two_cycle() -> TemporalTransit:
    return TemporalTransit.from_pairs(2, [(0, 1), (1, 0)])


def boolean2() -> FiniteTHA:
    """Two-element algebra with identity modalities."""
    return FiniteTHA.from_order(chain_order(2), [0, 1], [0, 1])


def chain3() -> FiniteTHA:
    """0 < m < 1 with □ = (m, 1, 1) and ♦ = (0, 0, m); Clop of the irreflexive 2-chain."""
    return FiniteTHA.from_order(chain_order(3), [1, 2, 2], [0, 0, 1])


def chain3_bad_dia() -> FiniteTHA:
    """chain3 with ♦1 = 1, which breaks the adjunction."""
    return FiniteTHA.from_order(chain_order(3), [1, 2, 2], [0, 0, 2])


def chain4() -> FiniteTHA:
    """Clop of the three-point frame: ∅ < {z} < {y,z} < X."""
    return FiniteTHA.from_order(chain_order(4), [1, 1, 3, 3], [0, 0, 2, 2])
