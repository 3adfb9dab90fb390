"""
Finite temporal Heyting algebras.

An algebra is a bounded distributive lattice on ``range(size)`` with
explicit operation tables. The lattice operations and the Heyting
implication can be derived from the order; the modalities □ and ♦ are
always given as tables.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from src.core.errors import AlgebraError, NonDistributiveError
from src.core.order import BinRel, inverse, order_witness
from src.utils.helpers import iter_bits
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteTHA:
    """
    Finite temporal Heyting algebra with explicit tables.

    ``leq.rows[a]`` is the principal filter ↑a. Construction does not check
    the axioms; ``validate_tha`` does.
    """

    size: int
    leq: BinRel
    meet: Table
    join: Table
    impl: Table
    box: Tuple[int, ...]
    dia: Tuple[int, ...]
    bot: int
    top: int
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    @classmethod
    def from_order(
        cls,
        leq: BinRel,
        box: Sequence[int],
        dia: Sequence[int],
        labels: Optional[Sequence[str]] = None,
    ) -> "FiniteTHA":
        """Build an algebra from its order and modal tables.

        Args:
            leq: Lattice order on the carrier
            box: □ table
            dia: ♦ table
            labels: Optional element names

        Returns:
            Algebra with derived ∧, ∨, → and bounds

        Raises:
            AlgebraError: If the order is not a bounded lattice or a table
                has the wrong shape
            NonDistributiveError: If the lattice is not distributive
        """
        if len(box) != leq.size or len(dia) != leq.size:
            raise AlgebraError(f"Modal tables must have {leq.size} entries")
        for table in (box, dia):
            for value in table:
                if not 0 <= value < leq.size:
                    raise AlgebraError(f"Modal table value {value} is outside the carrier", witness=value)
        meet, join, bot, top = derive_lattice(leq)
        impl = derive_heyting_implication(leq, meet, join)
        return cls(
            size=leq.size,
            leq=leq,
            meet=meet,
            join=join,
            impl=impl,
            box=tuple(box),
            dia=tuple(dia),
            bot=bot,
            top=top,
            labels=tuple(labels) if labels else None,
        )

    @cached_property
    def downs(self) -> Tuple[int, ...]:
        return inverse(self.leq).rows

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq.rows[a] >> b & 1)

    def iff(self, a: int, b: int) -> int:
        return self.meet[self.impl[a][b]][self.impl[b][a]]

    def up(self, a: int) -> int:
        """Principal filter ↑a as a bitmask."""
        return self.leq.rows[a]

    def meet_all(self, s: int) -> int:
        """⋀s; top for the empty set."""
        out = self.top
        for a in iter_bits(s):
            out = self.meet[out][a]
        return out

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


def derive_lattice(leq: BinRel) -> Tuple[Table, Table, int, int]:
    """Meet and join tables plus bounds of a finite lattice order.

    Raises:
        AlgebraError: If leq is not a partial order with all binary meets
            and joins, or the carrier is empty
    """
    failure = order_witness(leq)
    if failure is not None:
        clause, witness = failure
        raise AlgebraError(f"Order fails {clause}", witness=witness)
    n = leq.size
    if n == 0:
        raise AlgebraError("An algebra needs at least one element")
    ups = leq.rows
    downs = inverse(leq).rows

    def extremum(candidates: int, cone: Tuple[int, ...]) -> Optional[int]:
        for c in iter_bits(candidates):
            if cone[c] & candidates == candidates:
                return c
        return None

    meet, join = [], []
    for a in range(n):
        meet_row, join_row = [], []
        for b in range(n):
            glb = extremum(downs[a] & downs[b], downs)
            lub = extremum(ups[a] & ups[b], ups)
            if glb is None or lub is None:
                raise AlgebraError(f"Elements {a} and {b} lack a meet or join", witness=(a, b))
            meet_row.append(glb)
            join_row.append(lub)
        meet.append(tuple(meet_row))
        join.append(tuple(join_row))

    every = (1 << n) - 1
    bot = extremum(every, ups)
    top = extremum(every, downs)
    if bot is None or top is None:
        raise AlgebraError("Order has no least or greatest element")
    return tuple(meet), tuple(join), bot, top


def derive_heyting_implication(leq: BinRel, meet: Table, join: Table) -> Table:
    """
    Relative pseudo-complement table: a → b is the greatest c with a∧c ≤ b.

    Raises:
        NonDistributiveError: If the lattice is not distributive (the
            witness is the failing triple)
    """
    n = leq.size
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    raise NonDistributiveError(
                        f"a∧(b∨c) != (a∧b)∨(a∧c) for a={a}, b={b}, c={c}",
                        witness=(a, b, c),
                    )

    impl = []
    for a in range(n):
        row = []
        for b in range(n):
            best = None
            for c in range(n):
                if leq.holds(meet[a][c], b):
                    best = c if best is None else join[best][c]
            if best is None or not leq.holds(meet[a][best], b):
                raise NonDistributiveError(f"No relative pseudo-complement for {a} → {b}", witness=(a, b))
            row.append(best)
        impl.append(tuple(row))
    return tuple(impl)


def validate_tha(a: FiniteTHA) -> ValidationReport:
    """
    Check a finite algebra against every temporal Heyting axiom.

    Both axiomatisations of ♦ are checked: the adjunction ♦a ≤ b ⟺ a ≤ □b
    and the equational laws (♦0 = 0, ♦ preserves joins, a ≤ □♦a,
    ♦□a ≤ a). ``details`` records which of them passed; a disagreement
    between the two is itself reported.

    Returns:
        Report of violated clauses with witnesses
    """
    report = ValidationReport(subject="temporal Heyting algebra")
    n = a.size
    le = a.le

    def first(clause, witness, message):
        if report.first(clause) is None:
            report.add(clause, witness, message)

    shape_ok = all(len(t) == n for t in (a.meet, a.join, a.impl, a.box, a.dia)) and all(
        len(row) == n for t in (a.meet, a.join, a.impl) for row in t
    )
    if not shape_ok or n == 0:
        report.add("shape", (n,), "Operation tables do not match the carrier size")
        return report

    failure = order_witness(a.leq)
    if failure is not None:
        report.add("order", failure[1], f"Order fails {failure[0]}")
        return report

    for x in range(n):
        if not le(a.bot, x) or not le(x, a.top):
            first("bounds", (x,), f"{x} is not between bot and top")
        for y in range(n):
            m, j = a.meet[x][y], a.join[x][y]
            lower = a.downs[x] & a.downs[y]
            upper = a.leq.rows[x] & a.leq.rows[y]
            if not (lower >> m & 1) or a.downs[m] & lower != lower:
                first("meet", (x, y), f"{m} is not the meet of {x} and {y}")
            if not (upper >> j & 1) or a.leq.rows[j] & upper != upper:
                first("join", (x, y), f"{j} is not the join of {x} and {y}")
            for z in range(n):
                if a.meet[x][a.join[y][z]] != a.join[a.meet[x][y]][a.meet[x][z]]:
                    first("distributivity", (x, y, z), "Meet does not distribute over join")
                if le(a.meet[x][z], y) != le(z, a.impl[x][y]):
                    first("residuation", (x, y, z), f"{x}∧{z} ≤ {y} disagrees with {z} ≤ {x}→{y}")

    for x in range(n):
        if not le(x, a.box[x]):
            first("box-inflationary", (x,), f"{x} ≰ □{x}")
        for y in range(n):
            if a.box[a.meet[x][y]] != a.meet[a.box[x]][a.box[y]]:
                first("box-meet", (x, y), f"□({x}∧{y}) != □{x}∧□{y}")
            if not le(a.box[x], a.join[y][a.impl[y][x]]):
                first("box-frontal", (x, y), f"□{x} ≰ {y} ∨ ({y}→{x})")

    adjunction_ok = True
    for x in range(n):
        for y in range(n):
            if le(a.dia[x], y) != le(x, a.box[y]):
                adjunction_ok = False
                first("adjunction", (x, y), f"♦{x} ≤ {y} disagrees with {x} ≤ □{y}")

    equational_ok = True
    if a.dia[a.bot] != a.bot:
        equational_ok = False
        report.add("dia-bot", (a.bot,), "♦0 != 0")
    for x in range(n):
        if not le(x, a.box[a.dia[x]]):
            equational_ok = False
            first("unit", (x,), f"{x} ≰ □♦{x}")
        if not le(a.dia[a.box[x]], x):
            equational_ok = False
            first("counit", (x,), f"♦□{x} ≰ {x}")
        for y in range(n):
            if a.dia[a.join[x][y]] != a.join[a.dia[x]][a.dia[y]]:
                equational_ok = False
                first("dia-join", (x, y), f"♦({x}∨{y}) != ♦{x}∨♦{y}")

    # □ preserving meets is assumed by the equational form
    box_monotone = report.first("box-meet") is None
    if box_monotone and adjunction_ok != equational_ok:
        report.add(
            "axiomatisation-mismatch",
            (int(adjunction_ok), int(equational_ok)),
            "Adjunction and equational axioms disagree",
        )

    report.details["adjunction"] = adjunction_ok
    report.details["equational"] = equational_ok
    return report


def is_valid_tha(a: FiniteTHA) -> bool:
    return validate_tha(a).ok


def chain_order(n: int) -> BinRel:
    """The order 0 < 1 < ... < n-1."""
    return BinRel(n, tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)))


def trivial_algebra() -> FiniteTHA:
    """The one-element algebra."""
    return FiniteTHA.from_order(BinRel.identity(1), [0], [0])


def element_table(a: FiniteTHA) -> List[List[int]]:
    """Rows of (element, □, ♦) used by reports."""
    return [[x, a.box[x], a.dia[x]] for x in range(a.size)]
