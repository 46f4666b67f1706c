"""Deduction toolkit.

Propositional formulas with truth-table semantics, the eight named
tautology schemata and semantic entailment, the ten Aristotelian syllogisms
checked over finite models, quantifier negation rewriting, and gcd-based
two-vessel measuring plans.  The ``deduce`` command exposes all of it.
"""

from .logic import (
    MAX_ATOMS,
    And,
    Atom,
    Atomic,
    Classification,
    Formula,
    Iff,
    Implies,
    MissingAtom,
    Not,
    Or,
    TableRow,
    TooManyAtoms,
    TruthTable,
    atoms,
    classify,
    equivalent,
    evaluate,
    falsifying_valuation,
    format_truth_value,
    parse_truth_value,
    prop,
    substitute,
    truth_table,
)
from .parser import ErrorKind, ParseError, SourceSpan, Style, format_formula, parse

__version__ = "0.1.0"

__all__ = [
    "MAX_ATOMS",
    "And",
    "Atom",
    "Atomic",
    "Classification",
    "ErrorKind",
    "Formula",
    "Iff",
    "Implies",
    "MissingAtom",
    "Not",
    "Or",
    "ParseError",
    "SourceSpan",
    "Style",
    "TableRow",
    "TooManyAtoms",
    "TruthTable",
    "atoms",
    "classify",
    "equivalent",
    "evaluate",
    "falsifying_valuation",
    "format_formula",
    "format_truth_value",
    "parse",
    "parse_truth_value",
    "prop",
    "substitute",
    "truth_table",
    "__version__",
]
