"""
Parser and printer for formulas.

Grammar (lowest binding first): ``->`` is right-associative, ``|`` and
``&`` are left-associative, ``box`` and ``dia`` are prefix operators.
Keywords ``box``, ``dia``, ``bot`` and ``top`` are reserved; a longer
identifier such as ``boxer`` is still an atom.
"""

import logging

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from src.core.errors import FormulaSyntaxError
from src.logic.formula import And, Atom, Bot, Box, Dia, Formula, Imp, Or, Top

logger = logging.getLogger(__name__)

GRAMMAR = r'''
?start: impl

?impl: disj
    | disj "->" impl -> imp

?disj: conj
    | disj "|" conj -> or_

?conj: unary
    | conj "&" unary -> and_

?unary: "box" unary -> box
    | "dia" unary -> dia
    | atom

?atom: "bot" -> bot
    | "top" -> top
    | IDENT -> var
    | "(" impl ")"

IDENT: /[a-z][a-z0-9_]*/

%import common.WS
%ignore WS
'''


@v_args(inline=True)
class _FormulaBuilder(Transformer):
    """Translate the Lark tree into formula nodes."""

    def imp(self, left, right):
        return Imp(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def and_(self, left, right):
        return And(left, right)

    def box(self, body):
        return Box(body)

    def dia(self, body):
        return Dia(body)

    def bot(self):
        return Bot()

    def top(self):
        return Top()

    def var(self, token):
        return Atom(str(token))


_PARSER = Lark(GRAMMAR, parser="lalr")
_BUILDER = _FormulaBuilder()


def _error_offset(text: str, error: UnexpectedInput) -> int:
    """1-based offset of a syntax error; end of input is len(text) + 1."""
    if isinstance(error, UnexpectedEOF):
        return len(text) + 1
    if isinstance(error, UnexpectedToken):
        token = error.token
        if token.type == "$END" or token.start_pos is None:
            return len(text) + 1
        return token.start_pos + 1
    if isinstance(error, UnexpectedCharacters):
        return error.pos_in_stream + 1
    position = getattr(error, "pos_in_stream", None)
    return len(text) + 1 if position is None else position + 1


def parse_formula(text: str) -> Formula:
    """Parse formula text.

    Args:
        text: Formula in the surface syntax, e.g. ``box p -> (q | dia r)``

    Returns:
        The formula tree

    Raises:
        FormulaSyntaxError: With the 1-based offset of the offending input
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        offset = _error_offset(text, e)
        logger.debug(f"Syntax error in {text!r} at offset {offset}")
        raise FormulaSyntaxError(f"Unexpected input in formula {text!r}", offset)
    return _BUILDER.transform(tree)


_PRECEDENCE = {Imp: 1, Or: 2, And: 3, Box: 4, Dia: 4}
_SYMBOL = {Imp: "->", Or: "|", And: "&", Box: "box", Dia: "dia"}


def _precedence(f: Formula) -> int:
    return _PRECEDENCE.get(type(f), 5)


def print_formula(f: Formula) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Top):
        return "top"

    prec = _precedence(f)
    if isinstance(f, (Box, Dia)):
        body = print_formula(f.body)
        if _precedence(f.body) < prec:
            body = f"({body})"
        return f"{_SYMBOL[type(f)]} {body}"

    left, right = print_formula(f.left), print_formula(f.right)
    if isinstance(f, Imp):
        # right-associative
        if _precedence(f.left) <= prec:
            left = f"({left})"
        if _precedence(f.right) < prec:
            right = f"({right})"
    else:
        if _precedence(f.left) < prec:
            left = f"({left})"
        if _precedence(f.right) <= prec:
            right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"
