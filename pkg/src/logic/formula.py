"""
Formulas of the temporal Heyting language: atoms, ⊥, ⊤, ∧, ∨, →, □ and ♦.

Nodes are frozen dataclasses, so formulas are hashable, comparable and
picklable (search workers receive them across process boundaries).
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Box:
    body: "Formula"


@dataclass(frozen=True)
class Dia:
    body: "Formula"


Formula = Union[Atom, Bot, Top, And, Or, Imp, Box, Dia]
BINARY = (And, Or, Imp)
UNARY = (Box, Dia)


def children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, BINARY):
        return (f.left, f.right)
    if isinstance(f, UNARY):
        return (f.body,)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    """Every subformula occurrence, children before parents."""
    for child in children(f):
        yield from subformulas(child)
    yield f


def node_count(f: Formula) -> int:
    return 1 + sum(node_count(child) for child in children(f))


def depth(f: Formula) -> int:
    kids = children(f)
    return 0 if not kids else 1 + max(depth(child) for child in kids)


def atoms(f: Formula) -> Tuple[str, ...]:
    """Atom names occurring in f, sorted."""
    return tuple(sorted({g.name for g in subformulas(f) if isinstance(g, Atom)}))


def neg(f: Formula) -> Formula:
    """Intuitionistic negation f → ⊥."""
    return Imp(f, Bot())


_P, _Q = Atom("p"), Atom("q")

THC_AXIOMS: List[Tuple[str, Formula]] = [
    ("box-k", Imp(Box(Imp(_P, _Q)), Imp(Box(_P), Box(_Q)))),
    ("box-frontal", Imp(Box(_P), Or(_Q, Imp(_Q, _P)))),
    ("box-inflationary", Imp(_P, Box(_P))),
    ("dia-join", Imp(Dia(Or(_P, _Q)), Or(Dia(_P), Dia(_Q)))),
    ("dia-bot", Imp(Dia(Bot()), Bot())),
    ("unit", Imp(_P, Box(Dia(_P)))),
    ("counit", Imp(Dia(Box(_P)), _P)),
]


def thc_axioms() -> List[Formula]:
    """The three modal and four temporal axioms, in that order."""
    return [formula for _, formula in THC_AXIOMS]


def thc_axiom_names() -> List[str]:
    return [name for name, _ in THC_AXIOMS]
