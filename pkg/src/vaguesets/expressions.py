"""The linguistic expression language: lexer, parser and evaluators.

Grammar, lowest to highest precedence, binary operators left-associative::

    expr   := term (("or" | "xor") term)*
    term   := factor ("and" factor)*
    factor := "not" factor | HEDGE factor | ATOM | "(" expr ")"

ATOM is ``[A-Za-z_][A-Za-z0-9_]*``; HEDGE is ``very``, ``more_or_less`` or
``essentially``.  ``xor`` is the symmetric difference.

Three evaluators interpret one AST:

* :func:`eval_event` — subject-by-subject set combination over a selection
  matrix, then exact counting.  Hedges act on the aggregated curve (the
  per-subject events carry no hedge semantics), so below a hedge only
  ``not`` and further hedges may apply; combining a hedged subexpression
  with ``and``/``or``/``xor`` is rejected.
* :func:`eval_vague` — componentwise (t, f) algebra over bound vague curves.
* :func:`eval_tnorm` — a chosen t-norm/t-conorm pair over bound membership
  curves, for comparison against the event semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .curves import MembershipCurve, StepCurve
from .errors import InvalidHedge, LexError, ParseError, UnknownAtom
from .eventology import SelectionMatrix, VagueEvent
from .tnorms import TNorm, curve_tconorm, curve_tnorm
from .vague import DEFAULT_HEDGES, VagueCurve

__all__ = [
    "Atom",
    "Not",
    "And",
    "Or",
    "SymDiff",
    "Hedge",
    "Expr",
    "Token",
    "HEDGE_KINDS",
    "RESERVED_WORDS",
    "tokenize",
    "parse_tokens",
    "parse",
    "to_text",
    "expr_atoms",
    "eval_event",
    "eval_vague",
    "eval_tnorm",
]

HEDGE_KINDS = ("very", "more_or_less", "essentially")
RESERVED_WORDS = frozenset({"and", "or", "not", "xor", *HEDGE_KINDS})


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("atom name must be non-empty")


@dataclass(frozen=True, slots=True)
class Not:
    operand: "Expr"


@dataclass(frozen=True, slots=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True, slots=True)
class SymDiff:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True, slots=True)
class Hedge:
    kind: str
    operand: "Expr"

    def __post_init__(self) -> None:
        if self.kind not in HEDGE_KINDS:
            raise ValueError(f"hedge kind must be one of {HEDGE_KINDS}, got {self.kind!r}")


Expr = Union[Atom, Not, And, Or, SymDiff, Hedge]


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "atom", "lparen", "rparen", "hedge", or the keyword itself
    text: str
    position: int


def _is_word_start(c: str) -> bool:
    return c == "_" or "a" <= c <= "z" or "A" <= c <= "Z"


def _is_word_char(c: str) -> bool:
    return _is_word_start(c) or "0" <= c <= "9"


def tokenize(text: str) -> list[Token]:
    """Split expression text into keyword, paren and atom tokens."""
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "(":
            tokens.append(Token("lparen", "(", i))
            i += 1
            continue
        if c == ")":
            tokens.append(Token("rparen", ")", i))
            i += 1
            continue
        if _is_word_start(c):
            start = i
            while i < len(text) and _is_word_char(text[i]):
                i += 1
            word = text[start:i]
            if word in HEDGE_KINDS:
                tokens.append(Token("hedge", word, start))
            elif word in ("and", "or", "not", "xor"):
                tokens.append(Token(word, word, start))
            else:
                tokens.append(Token("atom", word, start))
            continue
        raise LexError(i, f"illegal character {c!r}")
    return tokens


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        self._tokens = list(tokens)
        self._pos = 0
        if self._tokens:
            last = self._tokens[-1]
            self._end = last.position + len(last.text)
        else:
            self._end = 0

    def _peek(self) -> Token | None:
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return None

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _fail(self, expected: str) -> ParseError:
        token = self._peek()
        if token is None:
            return ParseError(self._end, expected, "end of input")
        return ParseError(token.position, expected, repr(token.text))

    def parse(self) -> Expr:
        expr = self._expr()
        if self._peek() is not None:
            raise self._fail("end of input")
        return expr

    def _expr(self) -> Expr:
        node = self._term()
        while (token := self._peek()) is not None and token.kind in ("or", "xor"):
            self._advance()
            right = self._term()
            node = Or(node, right) if token.kind == "or" else SymDiff(node, right)
        return node

    def _term(self) -> Expr:
        node = self._factor()
        while (token := self._peek()) is not None and token.kind == "and":
            self._advance()
            node = And(node, self._factor())
        return node

    def _factor(self) -> Expr:
        token = self._peek()
        if token is None:
            raise self._fail("an expression")
        if token.kind == "not":
            self._advance()
            return Not(self._factor())
        if token.kind == "hedge":
            self._advance()
            return Hedge(token.text, self._factor())
        if token.kind == "atom":
            self._advance()
            return Atom(token.text)
        if token.kind == "lparen":
            self._advance()
            node = self._expr()
            closing = self._peek()
            if closing is None or closing.kind != "rparen":
                raise self._fail("')'")
            self._advance()
            return node
        raise self._fail("an expression")


def parse_tokens(tokens: Sequence[Token]) -> Expr:
    return _Parser(tokens).parse()


def parse(text: str) -> Expr:
    """Tokenize and parse expression text into an AST."""
    return parse_tokens(tokenize(text))


def to_text(expr: Expr) -> str:
    """Fully parenthesized rendering; parses back to the same tree."""
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, Not):
        return f"(not {to_text(expr.operand)})"
    if isinstance(expr, Hedge):
        return f"({expr.kind} {to_text(expr.operand)})"
    if isinstance(expr, And):
        return f"({to_text(expr.left)} and {to_text(expr.right)})"
    if isinstance(expr, Or):
        return f"({to_text(expr.left)} or {to_text(expr.right)})"
    if isinstance(expr, SymDiff):
        return f"({to_text(expr.left)} xor {to_text(expr.right)})"
    raise TypeError(f"not an expression node: {expr!r}")


def expr_atoms(expr: Expr) -> tuple[str, ...]:
    """Sorted distinct atom names occurring in the expression."""
    names: set[str] = set()

    def walk(node: Expr) -> None:
        if isinstance(node, Atom):
            names.add(node.name)
        elif isinstance(node, Not):
            walk(node.operand)
        elif isinstance(node, Hedge):
            walk(node.operand)
        else:
            walk(node.left)
            walk(node.right)

    walk(expr)
    return tuple(sorted(names))


def _exponent(kind: str, hedges: Mapping[str, float] | None) -> float:
    table = dict(DEFAULT_HEDGES)
    if hedges:
        table.update(hedges)
    exponent = table[kind]
    if not exponent > 0:
        raise InvalidHedge(f"exponent for {kind!r} must be positive, got {exponent}")
    return float(exponent)


def eval_event(
    expr: Expr,
    matrix: SelectionMatrix,
    hedges: Mapping[str, float] | None = None,
) -> MembershipCurve | StepCurve:
    """Evaluate under the subject-counting semantics.

    Returns an exact :class:`MembershipCurve` unless a hedge occurs, in which
    case the hedge exponent is applied to the aggregated curve and the result
    is a float :class:`StepCurve`.
    """
    node = _eval_event_node(expr, matrix, hedges)
    if isinstance(node, VagueEvent):
        return node.membership()
    return node


def _eval_event_node(
    expr: Expr,
    matrix: SelectionMatrix,
    hedges: Mapping[str, float] | None,
) -> VagueEvent | MembershipCurve | StepCurve:
    if isinstance(expr, Atom):
        return matrix.event(expr.name)
    if isinstance(expr, Not):
        inner = _eval_event_node(expr.operand, matrix, hedges)
        if isinstance(inner, VagueEvent):
            return inner.complement()
        if isinstance(inner, MembershipCurve):
            return inner.complement()
        return inner.map(lambda v: 1.0 - v)
    if isinstance(expr, Hedge):
        inner = _eval_event_node(expr.operand, matrix, hedges)
        if isinstance(inner, VagueEvent):
            inner = inner.membership()
        exponent = _exponent(expr.kind, hedges)
        if isinstance(inner, MembershipCurve):
            return inner.map_float(lambda v: v**exponent)
        return inner.map(lambda v: v**exponent)
    if isinstance(expr, (And, Or, SymDiff)):
        left = _eval_event_node(expr.left, matrix, hedges)
        right = _eval_event_node(expr.right, matrix, hedges)
        if not (isinstance(left, VagueEvent) and isinstance(right, VagueEvent)):
            raise InvalidHedge(
                "a hedged subexpression cannot be combined with and/or/xor "
                "under event semantics; hedges may only wrap the whole "
                "set expression (negation is fine)"
            )
        if isinstance(expr, And):
            return left.intersect(right)
        if isinstance(expr, Or):
            return left.union(right)
        return left.symdiff(right)
    raise TypeError(f"not an expression node: {expr!r}")


def eval_vague(
    expr: Expr,
    bindings: Mapping[str, VagueCurve],
    hedges: Mapping[str, float] | None = None,
) -> VagueCurve:
    """Evaluate under the componentwise (t, f) semantics."""
    if isinstance(expr, Atom):
        try:
            return bindings[expr.name]
        except KeyError:
            raise UnknownAtom(expr.name) from None
    if isinstance(expr, Not):
        return ~eval_vague(expr.operand, bindings, hedges)
    if isinstance(expr, And):
        return eval_vague(expr.left, bindings, hedges) & eval_vague(
            expr.right, bindings, hedges
        )
    if isinstance(expr, Or):
        return eval_vague(expr.left, bindings, hedges) | eval_vague(
            expr.right, bindings, hedges
        )
    if isinstance(expr, SymDiff):
        expanded = Or(
            And(expr.left, Not(expr.right)), And(Not(expr.left), expr.right)
        )
        return eval_vague(expanded, bindings, hedges)
    if isinstance(expr, Hedge):
        return eval_vague(expr.operand, bindings, hedges).hedge(
            _exponent(expr.kind, hedges)
        )
    raise TypeError(f"not an expression node: {expr!r}")


def eval_tnorm(
    expr: Expr,
    kind: TNorm,
    bindings: Mapping[str, MembershipCurve | StepCurve],
    hedges: Mapping[str, float] | None = None,
) -> StepCurve:
    """Evaluate with the chosen t-norm for "and" and its dual for "or"."""
    if isinstance(expr, Atom):
        try:
            curve = bindings[expr.name]
        except KeyError:
            raise UnknownAtom(expr.name) from None
        return curve.as_step() if isinstance(curve, MembershipCurve) else curve
    if isinstance(expr, Not):
        return eval_tnorm(expr.operand, kind, bindings, hedges).map(lambda v: 1.0 - v)
    if isinstance(expr, And):
        return curve_tnorm(
            kind,
            eval_tnorm(expr.left, kind, bindings, hedges),
            eval_tnorm(expr.right, kind, bindings, hedges),
        )
    if isinstance(expr, Or):
        return curve_tconorm(
            kind,
            eval_tnorm(expr.left, kind, bindings, hedges),
            eval_tnorm(expr.right, kind, bindings, hedges),
        )
    if isinstance(expr, SymDiff):
        expanded = Or(
            And(expr.left, Not(expr.right)), And(Not(expr.left), expr.right)
        )
        return eval_tnorm(expanded, kind, bindings, hedges)
    if isinstance(expr, Hedge):
        exponent = _exponent(expr.kind, hedges)
        return eval_tnorm(expr.operand, kind, bindings, hedges).map(
            lambda v: v**exponent
        )
    raise TypeError(f"not an expression node: {expr!r}")
