"""Categorical statements, Aristotelian syllogisms, and finite-model checking.

A categorical form is one of the four classical statement shapes over two
predicate names (all/no/some/some-not).  Syllogism validity is decided by
exhaustive search over canonical finite models: three predicates split any
universe into at most eight regions, and duplicating elements inside a
region never changes a categorical form's truth value, so the 256 models
with at most one element per region are enough.  The same module carries a
small monadic quantifier language with negation rewriting into negation
normal form.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum

from .parser import ErrorKind, ParseError, SourceSpan

_NAME = re.compile(r"[A-Z][A-Za-z0-9]*\Z")


class UnknownPredicate(LookupError):
    """A model does not give an extension for some predicate."""

    def __init__(self, name: str):
        super().__init__(f"model has no extension for predicate {name!r}")
        self.name = name


class UnknownSyllogism(LookupError):
    """No syllogism with the requested name exists in the registry."""

    def __init__(self, name: str):
        super().__init__(f"unknown syllogism {name!r}")
        self.name = name


class FormKind(Enum):
    UNIVERSAL_AFFIRMATIVE = "all"
    UNIVERSAL_NEGATIVE = "no"
    PARTICULAR_AFFIRMATIVE = "some"
    PARTICULAR_NEGATIVE = "some-not"


_SPANISH_TEMPLATES = {
    FormKind.UNIVERSAL_AFFIRMATIVE: "todo {s} es {p}",
    FormKind.UNIVERSAL_NEGATIVE: "ningún {s} es {p}",
    FormKind.PARTICULAR_AFFIRMATIVE: "algún {s} es {p}",
    FormKind.PARTICULAR_NEGATIVE: "algún {s} no es {p}",
}

_KIND_BY_CODE = {kind.value: kind for kind in FormKind}


@dataclass(frozen=True)
class CategoricalForm:
    """One of the four statement shapes applied to two predicate names.

    Subject and predicate may coincide ("todo A es A" is legal and always
    true); names follow the identifier rule: uppercase letter, then letters
    or digits.
    """

    kind: FormKind
    subject: str
    predicate: str

    def __post_init__(self) -> None:
        for name in (self.subject, self.predicate):
            if not _NAME.match(name):
                raise ValueError(f"invalid predicate name {name!r}")

    @property
    def code(self) -> str:
        """Compact spelling, e.g. ``all:S:P``."""
        return f"{self.kind.value}:{self.subject}:{self.predicate}"

    def describe(self) -> str:
        """Classical Spanish reading, e.g. ``todo S es P``."""
        return _SPANISH_TEMPLATES[self.kind].format(s=self.subject, p=self.predicate)


def parse_categorical(code: str) -> CategoricalForm:
    """Parse the compact ``kind:Subject:Predicate`` spelling."""
    parts = code.split(":")
    if len(parts) != 3 or parts[0] not in _KIND_BY_CODE:
        raise ValueError(
            f"malformed categorical form {code!r}: expected "
            "all:S:P, no:S:P, some:S:P, or some-not:S:P"
        )
    return CategoricalForm(_KIND_BY_CODE[parts[0]], parts[1], parts[2])


@dataclass(frozen=True)
class Syllogism:
    """Two premises and a conclusion naming exactly three distinct terms."""

    major: CategoricalForm
    minor: CategoricalForm
    conclusion: CategoricalForm

    def __post_init__(self) -> None:
        if len(self.term_names()) != 3:
            raise ValueError("a syllogism must mention exactly three distinct terms")

    def term_names(self) -> tuple[str, ...]:
        names = set()
        for form in (self.major, self.minor, self.conclusion):
            names.add(form.subject)
            names.add(form.predicate)
        return tuple(sorted(names))


@dataclass(frozen=True)
class FiniteModel:
    """A universe ``{0, ..., universe_size - 1}`` with predicate extensions."""

    universe_size: int
    extensions: Mapping[str, frozenset[int]]

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ValueError("universe size must be non-negative")
        frozen = {name: frozenset(members) for name, members in self.extensions.items()}
        universe = range(self.universe_size)
        for name, members in frozen.items():
            if not all(member in universe for member in members):
                raise ValueError(
                    f"extension of {name!r} reaches outside the universe"
                )
        object.__setattr__(self, "extensions", frozen)

    def extension(self, name: str) -> frozenset[int]:
        try:
            return self.extensions[name]
        except KeyError:
            raise UnknownPredicate(name) from None


@dataclass(frozen=True)
class Verdict:
    """Valid, or invalid with a counter-model satisfying both premises and
    falsifying the conclusion."""

    valid: bool
    counter_model: FiniteModel | None = None

    def __bool__(self) -> bool:
        return self.valid


def eval_categorical(form: CategoricalForm, model: FiniteModel) -> bool:
    """Truth of a categorical form in a model, by its set reading."""
    subject = model.extension(form.subject)
    predicate = model.extension(form.predicate)
    match form.kind:
        case FormKind.UNIVERSAL_AFFIRMATIVE:
            return subject <= predicate
        case FormKind.UNIVERSAL_NEGATIVE:
            return not (subject & predicate)
        case FormKind.PARTICULAR_AFFIRMATIVE:
            return bool(subject & predicate)
        case FormKind.PARTICULAR_NEGATIVE:
            return bool(subject - predicate)
    raise TypeError(f"not a categorical kind: {form.kind!r}")


_SYLLOGISM_SOURCES: tuple[tuple[str, tuple[str, str, str], tuple[str, str, str], tuple[str, str, str]], ...] = (
    ("barbara", ("all", "M", "B"), ("all", "A", "M"), ("all", "A", "B")),
    ("celarent", ("no", "M", "B"), ("all", "A", "M"), ("no", "A", "B")),
    ("darii", ("all", "M", "B"), ("some", "A", "M"), ("some", "A", "B")),
    ("ferio", ("no", "M", "B"), ("some", "A", "M"), ("some-not", "A", "B")),
    ("cesare", ("no", "B", "M"), ("all", "A", "M"), ("no", "A", "B")),
    ("camestres", ("all", "B", "M"), ("no", "A", "M"), ("no", "A", "B")),
    ("festino", ("no", "B", "M"), ("some", "A", "M"), ("some-not", "A", "B")),
    ("baroco", ("all", "B", "M"), ("some-not", "A", "M"), ("some-not", "A", "B")),
    ("darapti", ("all", "M", "B"), ("all", "M", "A"), ("some", "A", "B")),
    ("felapton", ("no", "M", "B"), ("all", "M", "A"), ("some-not", "A", "B")),
)


def _form(triple: tuple[str, str, str]) -> CategoricalForm:
    kind, subject, predicate = triple
    return CategoricalForm(_KIND_BY_CODE[kind], subject, predicate)


_SYLLOGISMS: tuple[tuple[str, Syllogism], ...] = tuple(
    (name, Syllogism(_form(major), _form(minor), _form(conclusion)))
    for name, major, minor, conclusion in _SYLLOGISM_SOURCES
)
_SYLLOGISM_BY_NAME = {name: syllogism for name, syllogism in _SYLLOGISMS}


def registry_syllogisms() -> tuple[tuple[str, Syllogism], ...]:
    """The ten named moods, in their traditional order."""
    return _SYLLOGISMS


def get_syllogism(name: str) -> Syllogism:
    """Look up a mood by name (case-insensitive); raises ``UnknownSyllogism``."""
    syllogism = _SYLLOGISM_BY_NAME.get(name.lower())
    if syllogism is None:
        raise UnknownSyllogism(name)
    return syllogism


def canonical_models(
    names: tuple[str, str, str], existential_import: bool = False
) -> Iterator[FiniteModel]:
    """All 256 canonical models over three predicate names, ascending.

    Each of the eight membership regions appears zero or one times; region
    ``r`` contains the predicate ``names[i]`` exactly when bit ``i`` of ``r``
    is set.  With ``existential_import`` only models where every extension
    is non-empty are produced.
    """
    for mask in range(256):
        regions = [r for r in range(8) if mask >> r & 1]
        extensions = {
            name: frozenset(i for i, r in enumerate(regions) if r >> bit & 1)
            for bit, name in enumerate(names)
        }
        if existential_import and not all(extensions.values()):
            continue
        yield FiniteModel(len(regions), extensions)


def valid_syllogism(syllogism: Syllogism, existential_import: bool = False) -> Verdict:
    """Exhaustively search canonical models for a counterexample.

    The first counter-model in the canonical enumeration order is reported,
    so output is deterministic.  ``existential_import`` restricts the search
    to models where all three terms denote non-empty sets.
    """
    names = syllogism.term_names()
    for model in canonical_models((names[0], names[1], names[2]), existential_import):
        if (
            eval_categorical(syllogism.major, model)
            and eval_categorical(syllogism.minor, model)
            and not eval_categorical(syllogism.conclusion, model)
        ):
            return Verdict(valid=False, counter_model=model)
    return Verdict(valid=True)


# --- Monadic quantifier language ------------------------------------------


class MonadicFormula:
    """Base class for the quantified fragment: one variable sort, unary
    predicates, no functions or equality."""

    __slots__ = ()


@dataclass(frozen=True)
class PredApp(MonadicFormula):
    pred: str
    var: str


@dataclass(frozen=True)
class MNot(MonadicFormula):
    inner: MonadicFormula


@dataclass(frozen=True)
class MAnd(MonadicFormula):
    left: MonadicFormula
    right: MonadicFormula


@dataclass(frozen=True)
class MOr(MonadicFormula):
    left: MonadicFormula
    right: MonadicFormula


@dataclass(frozen=True)
class MImplies(MonadicFormula):
    left: MonadicFormula
    right: MonadicFormula


@dataclass(frozen=True)
class ForAll(MonadicFormula):
    var: str
    body: MonadicFormula


@dataclass(frozen=True)
class Exists(MonadicFormula):
    var: str
    body: MonadicFormula


def free_variables(formula: MonadicFormula) -> frozenset[str]:
    match formula:
        case PredApp(_, var):
            return frozenset((var,))
        case MNot(inner):
            return free_variables(inner)
        case MAnd(a, b) | MOr(a, b) | MImplies(a, b):
            return free_variables(a) | free_variables(b)
        case ForAll(var, body) | Exists(var, body):
            return free_variables(body) - {var}
    raise TypeError(f"not a monadic formula: {formula!r}")


def predicates(formula: MonadicFormula) -> tuple[str, ...]:
    """All predicate names occurring in the formula, sorted."""
    names: set[str] = set()

    def walk(f: MonadicFormula) -> None:
        match f:
            case PredApp(pred, _):
                names.add(pred)
            case MNot(inner):
                walk(inner)
            case MAnd(a, b) | MOr(a, b) | MImplies(a, b):
                walk(a)
                walk(b)
            case ForAll(_, body) | Exists(_, body):
                walk(body)
            case _:
                raise TypeError(f"not a monadic formula: {f!r}")

    walk(formula)
    return tuple(sorted(names))


def _require_closed(formula: MonadicFormula) -> None:
    free = free_variables(formula)
    if free:
        raise ValueError(
            f"formula must be closed; free variables: {', '.join(sorted(free))}"
        )


def eval_monadic(formula: MonadicFormula, model: FiniteModel) -> bool:
    """Standard finite-domain semantics for a closed monadic formula.

    A universal over the empty universe is true and an existential false.
    """
    _require_closed(formula)

    def go(f: MonadicFormula, env: dict[str, int]) -> bool:
        match f:
            case PredApp(pred, var):
                return env[var] in model.extension(pred)
            case MNot(inner):
                return not go(inner, env)
            case MAnd(a, b):
                return go(a, env) and go(b, env)
            case MOr(a, b):
                return go(a, env) or go(b, env)
            case MImplies(a, b):
                return (not go(a, env)) or go(b, env)
            case ForAll(var, body):
                return all(
                    go(body, env | {var: element})
                    for element in range(model.universe_size)
                )
            case Exists(var, body):
                return any(
                    go(body, env | {var: element})
                    for element in range(model.universe_size)
                )
        raise TypeError(f"not a monadic formula: {f!r}")

    return go(formula, {})


def negate_quantifiers(formula: MonadicFormula) -> MonadicFormula:
    """Negation normal form of the NEGATION of a closed formula.

    Quantifier duals, De Morgan, and implication elimination push negation
    inward until it sits only on predicate applications.
    """
    _require_closed(formula)
    return _negated_nnf(formula)


def _nnf(formula: MonadicFormula) -> MonadicFormula:
    match formula:
        case PredApp():
            return formula
        case MNot(inner):
            return _negated_nnf(inner)
        case MAnd(a, b):
            return MAnd(_nnf(a), _nnf(b))
        case MOr(a, b):
            return MOr(_nnf(a), _nnf(b))
        case MImplies(a, b):
            return MOr(_negated_nnf(a), _nnf(b))
        case ForAll(var, body):
            return ForAll(var, _nnf(body))
        case Exists(var, body):
            return Exists(var, _nnf(body))
    raise TypeError(f"not a monadic formula: {formula!r}")


def _negated_nnf(formula: MonadicFormula) -> MonadicFormula:
    match formula:
        case PredApp():
            return MNot(formula)
        case MNot(inner):
            return _nnf(inner)
        case MAnd(a, b):
            return MOr(_negated_nnf(a), _negated_nnf(b))
        case MOr(a, b):
            return MAnd(_negated_nnf(a), _negated_nnf(b))
        case MImplies(a, b):
            return MAnd(_nnf(a), _negated_nnf(b))
        case ForAll(var, body):
            return Exists(var, _negated_nnf(body))
        case Exists(var, body):
            return ForAll(var, _negated_nnf(body))
    raise TypeError(f"not a monadic formula: {formula!r}")


# --- Surface syntax for monadic formulas ------------------------------------
#
# Same connective aliases as the propositional grammar plus "forall",
# "exists" and ".".  A quantifier's body extends as far right as possible.
# Lowercase identifiers are variables except the reserved words, so "y" is
# the conjunction keyword and cannot name a variable.

_RESERVED_WORDS = {"y", "o", "ó", "no", "forall", "exists"}

_M_SYMBOLS: tuple[tuple[str, str], ...] = (
    ("->", "implies"),
    ("=>", "implies"),
    ("¬", "not"),
    ("!", "not"),
    ("~", "not"),
    ("&", "and"),
    ("∧", "and"),
    ("|", "or"),
    ("∨", "or"),
    ("⇒", "implies"),
    ("(", "lparen"),
    (")", "rparen"),
    (".", "dot"),
)

_M_WORD_OPS = {"y": "and", "o": "or", "ó": "or", "no": "not"}


@dataclass(frozen=True)
class _MToken:
    kind: str  # "upper", "lower", or a symbol kind
    text: str
    start: int
    end: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.start, self.end)


def _m_tokenize(text: str) -> list[_MToken]:
    tokens: list[_MToken] = []
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
            if word.isascii() and word[0].isupper():
                tokens.append(_MToken("upper", word, i, j))
            elif word == "ó" or (word.isascii() and word[0].islower()):
                tokens.append(_MToken("lower", word, i, j))
            else:
                raise ParseError(
                    ErrorKind.UNKNOWN_TOKEN,
                    SourceSpan(i, j),
                    f"unknown word {word!r}",
                )
            i = j
            continue
        for symbol, kind in _M_SYMBOLS:
            if text.startswith(symbol, i):
                tokens.append(_MToken(kind, symbol, i, i + len(symbol)))
                i += len(symbol)
                break
        else:
            raise ParseError(
                ErrorKind.UNKNOWN_TOKEN,
                SourceSpan(i, i + 1),
                f"unknown character {ch!r}",
            )
    return tokens


class _MonadicParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _m_tokenize(text)
        self.pos = 0

    def peek(self) -> _MToken | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def advance(self) -> _MToken:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def eof_span(self) -> SourceSpan:
        return SourceSpan(len(self.text), len(self.text))

    def _is_word(self, token: _MToken | None, *words: str) -> bool:
        return token is not None and token.kind == "lower" and token.text in words

    def _is_op(self, token: _MToken | None, op: str) -> bool:
        if token is None:
            return False
        if token.kind == op:
            return True
        return token.kind == "lower" and _M_WORD_OPS.get(token.text) == op

    def parse(self) -> MonadicFormula:
        formula = self.formula()
        leftover = self.peek()
        if leftover is not None:
            raise ParseError(
                ErrorKind.TRAILING_INPUT,
                leftover.span,
                f"unexpected input {leftover.text!r} after a complete formula",
            )
        return formula

    def formula(self) -> MonadicFormula:
        if self._is_word(self.peek(), "forall", "exists"):
            return self.quantified()
        return self.implication()

    def quantified(self) -> MonadicFormula:
        keyword = self.advance()
        var = self.variable()
        dot = self.peek()
        if dot is None:
            raise ParseError(
                ErrorKind.UNEXPECTED_END, self.eof_span(), "expected '.'"
            )
        if dot.kind != "dot":
            raise ParseError(
                ErrorKind.UNKNOWN_TOKEN, dot.span, f"expected '.', found {dot.text!r}"
            )
        self.advance()
        body = self.formula()
        if keyword.text == "forall":
            return ForAll(var, body)
        return Exists(var, body)

    def variable(self) -> str:
        token = self.peek()
        if token is None:
            raise ParseError(
                ErrorKind.UNEXPECTED_END, self.eof_span(), "expected a variable"
            )
        if token.kind != "lower" or token.text in _RESERVED_WORDS:
            raise ParseError(
                ErrorKind.UNKNOWN_TOKEN,
                token.span,
                f"expected a variable, found {token.text!r}",
            )
        self.advance()
        return token.text

    def implication(self) -> MonadicFormula:
        left = self.disjunction()
        if self._is_op(self.peek(), "implies"):
            self.advance()
            return MImplies(left, self.formula())
        return left

    def disjunction(self) -> MonadicFormula:
        left = self.conjunction()
        while self._is_op(self.peek(), "or"):
            self.advance()
            left = MOr(left, self.conjunction())
        return left

    def conjunction(self) -> MonadicFormula:
        left = self.unary()
        while self._is_op(self.peek(), "and"):
            self.advance()
            left = MAnd(left, self.unary())
        return left

    def unary(self) -> MonadicFormula:
        if self._is_op(self.peek(), "not"):
            self.advance()
            return MNot(self.unary())
        return self.primary()

    def primary(self) -> MonadicFormula:
        token = self.peek()
        if token is None:
            raise ParseError(
                ErrorKind.UNEXPECTED_END, self.eof_span(), "expected a formula"
            )
        if self._is_word(token, "forall", "exists"):
            return self.quantified()
        if token.kind == "upper":
            self.advance()
            opening = self.peek()
            if opening is None:
                raise ParseError(
                    ErrorKind.UNEXPECTED_END, self.eof_span(), "expected '('"
                )
            if opening.kind != "lparen":
                raise ParseError(
                    ErrorKind.UNKNOWN_TOKEN,
                    opening.span,
                    f"expected '(', found {opening.text!r}",
                )
            self.advance()
            var = self.variable()
            closing = self.peek()
            if closing is None:
                raise ParseError(
                    ErrorKind.UNBALANCED_PAREN, self.eof_span(), "missing ')'"
                )
            if closing.kind != "rparen":
                raise ParseError(
                    ErrorKind.UNBALANCED_PAREN,
                    closing.span,
                    f"expected ')', found {closing.text!r}",
                )
            self.advance()
            return PredApp(token.text, var)
        if token.kind == "lparen":
            self.advance()
            inner = self.formula()
            closing = self.peek()
            if closing is None:
                raise ParseError(
                    ErrorKind.UNBALANCED_PAREN, self.eof_span(), "missing ')'"
                )
            if closing.kind != "rparen":
                raise ParseError(
                    ErrorKind.UNBALANCED_PAREN,
                    closing.span,
                    f"expected ')', found {closing.text!r}",
                )
            self.advance()
            return inner
        if token.kind == "rparen":
            raise ParseError(ErrorKind.UNBALANCED_PAREN, token.span, "unmatched ')'")
        raise ParseError(
            ErrorKind.UNKNOWN_TOKEN,
            token.span,
            f"expected a formula, found {token.text!r}",
        )


def parse_monadic(text: str) -> MonadicFormula:
    """Parse the monadic surface syntax; raises ``ParseError`` on a fault."""
    return _MonadicParser(text).parse()


_M_PREC_APP = 5
_M_PREC_NOT = 4
_M_PREC_AND = 3
_M_PREC_OR = 2
_M_PREC_IMPLIES = 1
_M_PREC_QUANT = 0


def format_monadic(formula: MonadicFormula) -> str:
    """Render in the ASCII surface syntax with minimal parentheses."""

    def fmt(f: MonadicFormula, min_prec: int) -> str:
        match f:
            case PredApp(pred, var):
                text, prec = f"{pred}({var})", _M_PREC_APP
            case MNot(inner):
                text, prec = "~" + fmt(inner, _M_PREC_NOT), _M_PREC_NOT
            case MAnd(a, b):
                text = f"{fmt(a, _M_PREC_AND)} & {fmt(b, _M_PREC_AND + 1)}"
                prec = _M_PREC_AND
            case MOr(a, b):
                text = f"{fmt(a, _M_PREC_OR)} | {fmt(b, _M_PREC_OR + 1)}"
                prec = _M_PREC_OR
            case MImplies(a, b):
                text = f"{fmt(a, _M_PREC_IMPLIES + 1)} -> {fmt(b, _M_PREC_IMPLIES)}"
                prec = _M_PREC_IMPLIES
            case ForAll(var, body):
                text, prec = f"forall {var}. {fmt(body, 0)}", _M_PREC_QUANT
            case Exists(var, body):
                text, prec = f"exists {var}. {fmt(body, 0)}", _M_PREC_QUANT
            case _:
                raise TypeError(f"not a monadic formula: {f!r}")
        if prec < min_prec:
            return f"({text})"
        return text

    return fmt(formula, 0)
