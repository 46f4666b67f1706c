"""Text syntax for propositional formulas: tokenizer, parser, pretty-printer.

The grammar accepts alias spellings for every connective (symbolic, ASCII,
and the Spanish keywords), so ``P y Q``, ``P & Q`` and ``P ∧ Q`` all denote
the same formula.  Precedence, tightest first: not, and, or, implies, iff;
and/or associate left, implies/iff associate right.

Printing is parenthesization-minimal: the output re-parses to a structurally
equal formula in any of the three styles.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .logic import And, Atom, Atomic, Formula, Iff, Implies, Not, Or


class SourceSpan(NamedTuple):
    """Half-open character range into the original input."""

    start: int
    end: int


class ErrorKind(Enum):
    UNBALANCED_PAREN = "UnbalancedParen"
    UNKNOWN_TOKEN = "UnknownToken"
    UNEXPECTED_END = "UnexpectedEnd"
    TRAILING_INPUT = "TrailingInput"


class ParseError(ValueError):
    """Parse failure with a typed kind and the offending input span."""

    def __init__(self, kind: ErrorKind, span: SourceSpan, message: str):
        super().__init__(f"{message} at {span.start}..{span.end}")
        self.kind = kind
        self.span = span
        self.message = message


class Style(Enum):
    ASCII = "ascii"
    UNICODE = "unicode"
    SPANISH = "spanish"


class _Tok(Enum):
    ATOM = "atom"
    NOT = "not"
    AND = "and"
    OR = "or"
    IMPLIES = "implies"
    IFF = "iff"
    LPAREN = "("
    RPAREN = ")"


@dataclass(frozen=True)
class _Token:
    kind: _Tok
    text: str
    start: int
    end: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.start, self.end)


# Symbolic operators, longest first so "<->" wins over "<" garbage.
_SYMBOLS: tuple[tuple[str, _Tok], ...] = (
    ("<->", _Tok.IFF),
    ("<=>", _Tok.IFF),
    ("->", _Tok.IMPLIES),
    ("=>", _Tok.IMPLIES),
    ("¬", _Tok.NOT),
    ("!", _Tok.NOT),
    ("~", _Tok.NOT),
    ("&", _Tok.AND),
    ("∧", _Tok.AND),
    ("|", _Tok.OR),
    ("∨", _Tok.OR),
    ("⇒", _Tok.IMPLIES),
    ("⇔", _Tok.IFF),
    ("(", _Tok.LPAREN),
    (")", _Tok.RPAREN),
)

# Reserved lowercase words; atom names start uppercase so they can never clash.
_WORDS = {"no": _Tok.NOT, "y": _Tok.AND, "o": _Tok.OR, "ó": _Tok.OR}

_ATOM_START = set("ABCDEFGHIJKLMNOPQRSTUVWXYZ")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isalnum():
            j = i + 1
            while j < n and text[j].isalnum():
                j += 1
            word = text[i:j]
            span = SourceSpan(i, j)
            if word[0] in _ATOM_START and word.isascii():
                tokens.append(_Token(_Tok.ATOM, word, i, j))
            elif word in _WORDS:
                tokens.append(_Token(_WORDS[word], word, i, j))
            else:
                raise ParseError(
                    ErrorKind.UNKNOWN_TOKEN, span, f"unknown word {word!r}"
                )
            i = j
            continue
        for symbol, kind in _SYMBOLS:
            if text.startswith(symbol, i):
                tokens.append(_Token(kind, symbol, i, i + len(symbol)))
                i += len(symbol)
                break
        else:
            raise ParseError(
                ErrorKind.UNKNOWN_TOKEN,
                SourceSpan(i, i + 1),
                f"unknown character {ch!r}",
            )
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def eof_span(self) -> SourceSpan:
        return SourceSpan(len(self.text), len(self.text))

    def parse(self) -> Formula:
        formula = self.iff()
        leftover = self.peek()
        if leftover is not None:
            raise ParseError(
                ErrorKind.TRAILING_INPUT,
                leftover.span,
                f"unexpected input {leftover.text!r} after a complete formula",
            )
        return formula

    def iff(self) -> Formula:
        left = self.implies()
        token = self.peek()
        if token is not None and token.kind is _Tok.IFF:
            self.advance()
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        token = self.peek()
        if token is not None and token.kind is _Tok.IMPLIES:
            self.advance()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while (token := self.peek()) is not None and token.kind is _Tok.OR:
            self.advance()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while (token := self.peek()) is not None and token.kind is _Tok.AND:
            self.advance()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        token = self.peek()
        if token is not None and token.kind is _Tok.NOT:
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        token = self.peek()
        if token is None:
            raise ParseError(
                ErrorKind.UNEXPECTED_END, self.eof_span(), "expected a formula"
            )
        if token.kind is _Tok.ATOM:
            self.advance()
            return Atomic(Atom(token.text))
        if token.kind is _Tok.LPAREN:
            self.advance()
            inner = self.iff()
            closing = self.peek()
            if closing is None:
                raise ParseError(
                    ErrorKind.UNBALANCED_PAREN, self.eof_span(), "missing ')'"
                )
            if closing.kind is not _Tok.RPAREN:
                raise ParseError(
                    ErrorKind.UNBALANCED_PAREN,
                    closing.span,
                    f"expected ')', found {closing.text!r}",
                )
            self.advance()
            return inner
        if token.kind is _Tok.RPAREN:
            raise ParseError(
                ErrorKind.UNBALANCED_PAREN, token.span, "unmatched ')'"
            )
        raise ParseError(
            ErrorKind.UNKNOWN_TOKEN,
            token.span,
            f"expected a formula, found {token.text!r}",
        )


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula; raises ``ParseError`` on the first fault."""
    return _Parser(text).parse()


_STYLE_TOKENS = {
    Style.ASCII: {"not": "!", "and": "&", "or": "|", "implies": "->", "iff": "<->"},
    Style.UNICODE: {"not": "¬", "and": "∧", "or": "∨", "implies": "⇒", "iff": "⇔"},
    Style.SPANISH: {"not": "¬", "and": "y", "or": "ó", "implies": "⇒", "iff": "⇔"},
}

# Binding tightness; parentheses appear exactly where a child binds too loosely.
_PREC_ATOM = 5
_PREC_NOT = 4
_PREC_AND = 3
_PREC_OR = 2
_PREC_IMPLIES = 1
_PREC_IFF = 0


def format_formula(formula: Formula, style: Style = Style.ASCII) -> str:
    """Render ``formula`` with minimal parentheses in the given style."""
    ops = _STYLE_TOKENS[style]

    def fmt(f: Formula, min_prec: int) -> str:
        match f:
            case Atomic(atom):
                text, prec = atom.name, _PREC_ATOM
            case Not(inner):
                text, prec = ops["not"] + fmt(inner, _PREC_NOT), _PREC_NOT
            case And(a, b):
                text = f"{fmt(a, _PREC_AND)} {ops['and']} {fmt(b, _PREC_AND + 1)}"
                prec = _PREC_AND
            case Or(a, b):
                text = f"{fmt(a, _PREC_OR)} {ops['or']} {fmt(b, _PREC_OR + 1)}"
                prec = _PREC_OR
            case Implies(a, b):
                text = f"{fmt(a, _PREC_IMPLIES + 1)} {ops['implies']} {fmt(b, _PREC_IMPLIES)}"
                prec = _PREC_IMPLIES
            case Iff(a, b):
                text = f"{fmt(a, _PREC_IFF + 1)} {ops['iff']} {fmt(b, _PREC_IFF)}"
                prec = _PREC_IFF
            case _:
                raise TypeError(f"not a formula: {f!r}")
        if prec < min_prec:
            return f"({text})"
        return text

    return fmt(formula, 0)
