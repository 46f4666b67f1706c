"""Propositional formulas, valuation semantics, and truth-table classification.

Formulas are immutable trees over named atoms with five connectives:
negation, disjunction, conjunction, conditional, and biconditional.
Truth values are plain booleans; ``format_truth_value`` renders them in the
classroom V/F notation and ``parse_truth_value`` accepts V/F and 1/0.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

#: Hard ceiling on distinct atoms per classification query.  2^24 rows is
#: still desk-scale exhaustive enumeration; anything larger is refused.
MAX_ATOMS = 24

_ATOM_NAME = re.compile(r"[A-Z][A-Za-z0-9]*\Z")


class MissingAtom(LookupError):
    """A valuation does not assign some atom of the formula."""

    def __init__(self, name: str):
        super().__init__(f"valuation does not assign atom {name!r}")
        self.name = name


class TooManyAtoms(ValueError):
    """A query would enumerate more atoms than ``MAX_ATOMS`` allows."""

    def __init__(self, count: int, limit: int = MAX_ATOMS):
        super().__init__(f"formula has {count} atoms; the limit is {limit}")
        self.count = count
        self.limit = limit


@dataclass(frozen=True, order=True)
class Atom:
    """A named proposition letter: an uppercase letter then letters/digits."""

    name: str

    def __post_init__(self) -> None:
        if not _ATOM_NAME.match(self.name):
            raise ValueError(
                f"invalid atom name {self.name!r}: must start with an uppercase "
                "letter followed by letters or digits"
            )


class Formula:
    """Base class for formula nodes; construction sugar lives here.

    ``~f`` negates, ``f & g`` conjoins, ``f | g`` disjoins, ``f >> g`` builds
    the conditional and ``f.iff(g)`` the biconditional.
    """

    __slots__ = ()

    def __invert__(self) -> "Not":
        return Not(self)

    def __and__(self, other: "Formula") -> "And":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Or":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Implies":
        return Implies(self, other)

    def iff(self, other: "Formula") -> "Iff":
        return Iff(self, other)


@dataclass(frozen=True)
class Atomic(Formula):
    atom: Atom


@dataclass(frozen=True)
class Not(Formula):
    inner: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


def prop(name: str) -> Atomic:
    """Shorthand for the atomic formula with the given atom name."""
    return Atomic(Atom(name))


#: A (total) assignment of truth values, keyed by atom name.
Valuation = Mapping[str, bool]


class Classification(Enum):
    """Tautology, contradiction, or the unnamed remainder: contingent."""

    TAUTOLOGY = "tautology"
    CONTRADICTION = "contradiction"
    CONTINGENT = "contingent"


@dataclass(frozen=True)
class TableRow:
    valuation: dict[str, bool]
    value: bool


@dataclass(frozen=True)
class TruthTable:
    """All 2^n valuations of a formula, first atom varying slowest, V before F."""

    atoms: tuple[Atom, ...]
    rows: tuple[TableRow, ...]


def evaluate(formula: Formula, valuation: Valuation) -> bool:
    """Compute the truth value of ``formula`` under ``valuation``.

    Raises ``MissingAtom`` if the valuation lacks an atom of the formula.
    """
    match formula:
        case Atomic(atom):
            try:
                return valuation[atom.name]
            except KeyError:
                raise MissingAtom(atom.name) from None
        case Not(inner):
            return not evaluate(inner, valuation)
        case Or(left, right):
            return evaluate(left, valuation) or evaluate(right, valuation)
        case And(left, right):
            return evaluate(left, valuation) and evaluate(right, valuation)
        case Implies(left, right):
            # False exactly when the antecedent holds and the consequent fails.
            return (not evaluate(left, valuation)) or evaluate(right, valuation)
        case Iff(left, right):
            return evaluate(left, valuation) == evaluate(right, valuation)
    raise TypeError(f"not a formula: {formula!r}")


def atoms(formula: Formula) -> tuple[Atom, ...]:
    """All atoms occurring in ``formula``, deduplicated, alphabetical by name."""
    seen: set[Atom] = set()

    def walk(f: Formula) -> None:
        match f:
            case Atomic(atom):
                seen.add(atom)
            case Not(inner):
                walk(inner)
            case Or(a, b) | And(a, b) | Implies(a, b) | Iff(a, b):
                walk(a)
                walk(b)
            case _:
                raise TypeError(f"not a formula: {f!r}")

    walk(formula)
    return tuple(sorted(seen))


def _valuations(names: Sequence[str]) -> Iterable[dict[str, bool]]:
    # Canonical row order: first atom varies slowest, True (V) before False (F).
    for bits in itertools.product((True, False), repeat=len(names)):
        yield dict(zip(names, bits))


def _check_limit(count: int) -> None:
    if count > MAX_ATOMS:
        raise TooManyAtoms(count)


def truth_table(formula: Formula, over: Sequence[Atom] | None = None) -> TruthTable:
    """Build the canonical truth table of ``formula``.

    ``over`` widens the table to an explicit atom tuple (a superset of the
    formula's own atoms, in the order given); by default the formula's atoms
    in alphabetical order are used.
    """
    columns = tuple(over) if over is not None else atoms(formula)
    _check_limit(len(columns))
    names = [a.name for a in columns]
    rows = tuple(
        TableRow(valuation=v, value=evaluate(formula, v)) for v in _valuations(names)
    )
    return TruthTable(atoms=columns, rows=rows)


def classify(formula: Formula) -> Classification:
    """Classify by exhaustive enumeration of all valuations."""
    names = [a.name for a in atoms(formula)]
    _check_limit(len(names))
    seen_true = seen_false = False
    for valuation in _valuations(names):
        if evaluate(formula, valuation):
            seen_true = True
        else:
            seen_false = True
        if seen_true and seen_false:
            return Classification.CONTINGENT
    return Classification.TAUTOLOGY if seen_true else Classification.CONTRADICTION


def falsifying_valuation(formula: Formula) -> dict[str, bool] | None:
    """First valuation (canonical row order) making ``formula`` false, if any."""
    names = [a.name for a in atoms(formula)]
    _check_limit(len(names))
    for valuation in _valuations(names):
        if not evaluate(formula, valuation):
            return valuation
    return None


def equivalent(f: Formula, g: Formula) -> bool:
    """Whether ``f`` and ``g`` are equivalent: their biconditional is a tautology."""
    return classify(Iff(f, g)) is Classification.TAUTOLOGY


def substitute(formula: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneously replace mapped atoms (by name) with their image formulas.

    Atoms absent from the mapping are left unchanged; images are inserted
    as-is and never rewritten again.
    """
    match formula:
        case Atomic(atom):
            return mapping.get(atom.name, formula)
        case Not(inner):
            return Not(substitute(inner, mapping))
        case Or(a, b):
            return Or(substitute(a, mapping), substitute(b, mapping))
        case And(a, b):
            return And(substitute(a, mapping), substitute(b, mapping))
        case Implies(a, b):
            return Implies(substitute(a, mapping), substitute(b, mapping))
        case Iff(a, b):
            return Iff(substitute(a, mapping), substitute(b, mapping))
    raise TypeError(f"not a formula: {formula!r}")


def format_truth_value(value: bool) -> str:
    return "V" if value else "F"


def parse_truth_value(text: str) -> bool:
    """Accept the dual notation: V or 1 for true, F or 0 for false."""
    normalized = text.strip().upper()
    if normalized in ("V", "1"):
        return True
    if normalized in ("F", "0"):
        return False
    raise ValueError(f"not a truth value: {text!r} (expected V, F, 1, or 0)")
