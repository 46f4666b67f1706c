"""Shared generators and independent oracles for the test suite.

Oracles here deliberately avoid the library code paths they are checking:
entailment is scanned premise-by-premise without building the implication
formula, syllogism validity is decided by naive enumeration of every model
up to a universe size, and jug reachability is a plain breadth-first
closure over running totals.
"""

from __future__ import annotations

import itertools
from collections import deque
from random import Random

import hypothesis.strategies as st

from deduce.categorical import (
    CategoricalForm,
    Exists,
    FiniteModel,
    ForAll,
    FormKind,
    MAnd,
    MImplies,
    MNot,
    MOr,
    MonadicFormula,
    PredApp,
    Syllogism,
    eval_categorical,
)
from deduce.logic import And, Formula, Iff, Implies, Not, Or, atoms, evaluate, prop

# --- Random propositional formulas ------------------------------------------

_BINARY = (Or, And, Implies, Iff)


def random_formula(rng: Random, names: tuple[str, ...], max_depth: int) -> Formula:
    if max_depth == 0 or rng.random() < 0.3:
        return prop(rng.choice(names))
    kind = rng.randrange(5)
    if kind == 0:
        return Not(random_formula(rng, names, max_depth - 1))
    left = random_formula(rng, names, max_depth - 1)
    right = random_formula(rng, names, max_depth - 1)
    return _BINARY[kind - 1](left, right)


def formula_strategy(names=("P", "Q", "R", "S", "T"), max_leaves=12):
    leaves = st.sampled_from([prop(name) for name in names])
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.builds(Not, kids),
            st.builds(And, kids, kids),
            st.builds(Or, kids, kids),
            st.builds(Implies, kids, kids),
            st.builds(Iff, kids, kids),
        ),
        max_leaves=max_leaves,
    )


# --- Entailment oracle: direct scan, no implication formula ------------------


def scan_entails(premises, conclusion) -> tuple[bool, dict[str, bool] | None]:
    """Check every valuation of the joint atoms directly."""
    joint: set[str] = {atom.name for atom in atoms(conclusion)}
    for premise in premises:
        joint.update(atom.name for atom in atoms(premise))
    names = sorted(joint)
    for bits in itertools.product((True, False), repeat=len(names)):
        valuation = dict(zip(names, bits))
        if all(evaluate(premise, valuation) for premise in premises) and not evaluate(
            conclusion, valuation
        ):
            return False, valuation
    return True, None


# --- Random monadic formulas (closed, depth-bounded) -------------------------

_VARS = ("x", "z", "w")


def random_monadic(
    rng: Random, max_depth: int = 4, preds: tuple[str, ...] = ("P", "Q", "R")
) -> MonadicFormula:
    var = rng.choice(_VARS)
    quantifier = rng.choice((ForAll, Exists))
    return quantifier(var, _random_monadic_body(rng, max_depth - 1, preds, [var]))


def _random_monadic_body(rng, depth, preds, scope) -> MonadicFormula:
    if depth == 0 or rng.random() < 0.3:
        return PredApp(rng.choice(preds), rng.choice(scope))
    choice = rng.randrange(6)
    if choice == 0:
        return MNot(_random_monadic_body(rng, depth - 1, preds, scope))
    if choice < 4:
        connective = (MAnd, MOr, MImplies)[choice - 1]
        return connective(
            _random_monadic_body(rng, depth - 1, preds, scope),
            _random_monadic_body(rng, depth - 1, preds, scope),
        )
    var = rng.choice(_VARS)
    quantifier = ForAll if choice == 4 else Exists
    return quantifier(var, _random_monadic_body(rng, depth - 1, preds, scope + [var]))


def is_nnf(formula: MonadicFormula) -> bool:
    """Negations only on predicate applications (and no implications left
    behind negation pushing would need)."""
    match formula:
        case PredApp():
            return True
        case MNot(inner):
            return isinstance(inner, PredApp)
        case MAnd(a, b) | MOr(a, b) | MImplies(a, b):
            return is_nnf(a) and is_nnf(b)
        case ForAll(_, body) | Exists(_, body):
            return is_nnf(body)
    return False


def all_models(names: tuple[str, ...], max_size: int) -> list[FiniteModel]:
    """Every model over the given predicates with universe size up to max_size."""
    models = []
    codes = range(2 ** len(names))
    for size in range(max_size + 1):
        for assignment in itertools.product(codes, repeat=size):
            extensions = {
                name: frozenset(
                    element
                    for element, code in enumerate(assignment)
                    if code >> bit & 1
                )
                for bit, name in enumerate(names)
            }
            models.append(FiniteModel(size, extensions))
    return models


# --- Syllogism oracle: naive enumeration -------------------------------------


def random_mood(rng: Random) -> Syllogism:
    kinds = list(FormKind)
    major_terms = rng.choice((("M", "B"), ("B", "M")))
    minor_terms = rng.choice((("A", "M"), ("M", "A")))
    return Syllogism(
        CategoricalForm(rng.choice(kinds), *major_terms),
        CategoricalForm(rng.choice(kinds), *minor_terms),
        CategoricalForm(rng.choice(kinds), "A", "B"),
    )


def naive_valid_syllogism(
    syllogism: Syllogism, models: list[FiniteModel], existential_import: bool
) -> bool:
    names = syllogism.term_names()
    for model in models:
        if existential_import and not all(model.extensions[name] for name in names):
            continue
        if (
            eval_categorical(syllogism.major, model)
            and eval_categorical(syllogism.minor, model)
            and not eval_categorical(syllogism.conclusion, model)
        ):
            return False
    return True


# --- Jug oracle: breadth-first closure over running totals -------------------


def oracle_ceiling(n: int, m: int, target: int) -> int:
    # Generous: covers both the certificate-style peak (< n·m) and the
    # reordering bound 2·max(n, m).
    return max(target, n * m, 2 * max(n, m))


def bfs_reachable(n: int, m: int, ceiling: int) -> set[int]:
    seen = {0}
    queue = deque([0])
    while queue:
        total = queue.popleft()
        for neighbor in (total + n, total + m, total - n, total - m):
            if 0 <= neighbor <= ceiling and neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return seen


def bfs_min_plan_length(n: int, m: int, target: int, ceiling: int) -> int | None:
    distances = {0: 0}
    queue = deque([0])
    while queue:
        total = queue.popleft()
        if total == target:
            return distances[total]
        for neighbor in (total + n, total + m, total - n, total - m):
            if 0 <= neighbor <= ceiling and neighbor not in distances:
                distances[neighbor] = distances[total] + 1
                queue.append(neighbor)
    return None
