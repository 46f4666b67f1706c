"""Registry of the eight classically named tautology schemata, and entailment.

Each schema is a formula pattern over metavariables; instantiating one
substitutes arbitrary formulas for the metavariables, which preserves
tautology.  ``entails`` is the general semantic check: the premises entail
the conclusion exactly when premises-conjoined-implies-conclusion is a
tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from collections.abc import Mapping, Sequence

from .logic import (
    And,
    Atom,
    Classification,
    Formula,
    Implies,
    atoms,
    classify,
    falsifying_valuation,
    substitute,
)
from .parser import parse


class UnknownRule(LookupError):
    """No schema with the requested name exists in the registry."""

    def __init__(self, name: str):
        super().__init__(f"unknown rule {name!r}")
        self.name = name


@dataclass(frozen=True)
class RuleSchema:
    name: str
    metavariables: tuple[Atom, ...]
    pattern: Formula


@dataclass(frozen=True)
class Entailment:
    """Premises and a conclusion; empty premises ask whether the conclusion
    is a tautology outright."""

    premises: tuple[Formula, ...]
    conclusion: Formula


@dataclass(frozen=True)
class Verdict:
    """Either valid, or invalid with one countervaluation (canonical row
    order) making every premise true and the conclusion false."""

    valid: bool
    countervaluation: dict[str, bool] | None = None

    def __bool__(self) -> bool:
        return self.valid


# Names are ASCII, lowercase, hyphenated; accents are stripped so they work
# as command arguments.  Patterns in the keyword notation.
_RULE_SOURCES: tuple[tuple[str, str], ...] = (
    ("modus-ponens", "((P ⇒ Q) y P) ⇒ Q"),
    ("tollendo-ponens", "((P ó Q) y ¬P) ⇒ Q"),
    ("tollendo-tollens", "((P ⇒ Q) y ¬Q) ⇒ ¬P"),
    ("contrapuesta", "(P ⇒ Q) ⇒ (¬Q ⇒ ¬P)"),
    ("silogismo-hipotetico", "((P ⇒ Q) y (Q ⇒ R)) ⇒ (P ⇒ R)"),
    ("dilema-constructivo", "((P ⇒ Q) y (R ⇒ S) y (P ó R)) ⇒ (Q ó S)"),
    ("dilema-destructivo", "((P ⇒ Q) y (R ⇒ S) y (¬Q ó ¬S)) ⇒ (¬P ó ¬R)"),
    ("exportacion", "(P ⇒ (Q ⇒ R)) ⇔ ((P y Q) ⇒ R)"),
)


def _build_registry() -> tuple[RuleSchema, ...]:
    schemata = []
    for name, source in _RULE_SOURCES:
        pattern = parse(source)
        if classify(pattern) is not Classification.TAUTOLOGY:
            raise RuntimeError(f"rule {name!r} failed its tautology check")
        schemata.append(
            RuleSchema(name=name, metavariables=atoms(pattern), pattern=pattern)
        )
    return tuple(schemata)


_REGISTRY: tuple[RuleSchema, ...] = _build_registry()
_BY_NAME: dict[str, RuleSchema] = {schema.name: schema for schema in _REGISTRY}


def registry() -> tuple[RuleSchema, ...]:
    """The eight named schemata, in their traditional order."""
    return _REGISTRY


def get_rule(name: str) -> RuleSchema:
    """Look up a schema by name (case-insensitive); raises ``UnknownRule``."""
    schema = _BY_NAME.get(name.lower())
    if schema is None:
        raise UnknownRule(name)
    return schema


def verify_rule(name: str) -> Classification:
    """Re-classify the named schema's pattern from scratch."""
    return classify(get_rule(name).pattern)


def instantiate(name: str, substitution: Mapping[str, Formula]) -> Formula:
    """Substitute formulas for the schema's metavariables.

    Unmapped metavariables stay atomic; mapping a name that is not a
    metavariable of the schema is rejected.
    """
    schema = get_rule(name)
    allowed = {atom.name for atom in schema.metavariables}
    extra = set(substitution) - allowed
    if extra:
        raise ValueError(
            f"not metavariables of {schema.name!r}: {', '.join(sorted(extra))}"
        )
    return substitute(schema.pattern, substitution)


def entails(entailment: Entailment) -> Verdict:
    """Decide semantic entailment via the implication-tautology reduction.

    The premises (conjoined, left-associated) implying the conclusion is
    checked for tautology; the first falsifying valuation in canonical row
    order, if any, is returned as the countervaluation.
    """
    formula: Formula = entailment.conclusion
    if entailment.premises:
        formula = Implies(reduce(And, entailment.premises), formula)
    counter = falsifying_valuation(formula)
    if counter is None:
        return Verdict(valid=True)
    return Verdict(valid=False, countervaluation=counter)


def entail(premises: Sequence[Formula], conclusion: Formula) -> Verdict:
    """Convenience wrapper building the ``Entailment`` record."""
    return entails(Entailment(premises=tuple(premises), conclusion=conclusion))
