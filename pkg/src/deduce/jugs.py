"""Two-vessel measuring: gcd, Bézout certificates, and pour-plan synthesis.

The model is one unbounded marked container plus two vessels of capacities
``n`` and ``m``: an action either pours a full vessel in (AddJug) or
measures a full vessel out and discards it (RemoveJug).  The running total
therefore moves by whole vessel amounts, may never go negative, and a
vessel can only be measured out when the container holds at least that
much.  Exactly the positive multiples of gcd(n, m) are producible, and a
Bézout identity turns that fact into a concrete plan.

Amounts are exact integers in abstract units; scaling all quantities by a
common factor changes nothing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

MAX_CAPACITY = 10**6
MAX_TARGET = 10**9
MAX_STATES = 10**7
MAX_LIMIT = 10**6


class ViolationKind(Enum):
    NEGATIVE_AMOUNT = "NegativeAmount"
    FOREIGN_CAPACITY = "ForeignCapacity"


class PlanViolation(ValueError):
    """A plan action broke an invariant; carries the first offending index."""

    def __init__(self, index: int, reason: ViolationKind):
        super().__init__(f"action {index} violates the plan model: {reason.value}")
        self.index = index
        self.reason = reason


class NotAchievable(ValueError):
    """The target is not a multiple of gcd(n, m), so no plan exists."""

    def __init__(self, n: int, m: int, target: int, g: int):
        super().__init__(
            f"{target} is not achievable with vessels {n} and {m}: "
            f"gcd({n}, {m}) = {g} does not divide it"
        )
        self.n = n
        self.m = m
        self.target = target
        self.gcd = g


class StateSpaceTooLarge(ValueError):
    """The shortest-plan search would need too many states."""

    def __init__(self, states: int):
        super().__init__(
            f"shortest-plan search needs {states} states (limit {MAX_STATES}); "
            "use the certificate strategy instead"
        )
        self.states = states


def _check_capacity(value: int, name: str, minimum: int = 1) -> None:
    if not minimum <= value <= MAX_CAPACITY:
        raise ValueError(
            f"{name} must be between {minimum} and {MAX_CAPACITY}, got {value}"
        )


@dataclass(frozen=True)
class JugProblem:
    """Two vessel capacities and a target amount, all positive integers."""

    n: int
    m: int
    target: int

    def __post_init__(self) -> None:
        _check_capacity(self.n, "n")
        _check_capacity(self.m, "m")
        if not 1 <= self.target <= MAX_TARGET:
            raise ValueError(
                f"target must be between 1 and {MAX_TARGET}, got {self.target}"
            )


@dataclass(frozen=True)
class BezoutCertificate:
    """Integers with a·n + b·m = g = gcd(n, m), a normalized to 0 ≤ a < m/g."""

    g: int
    a: int
    b: int


@dataclass(frozen=True)
class AddJug:
    capacity: int


@dataclass(frozen=True)
class RemoveJug:
    capacity: int


Action = AddJug | RemoveJug


@dataclass(frozen=True)
class PourPlan:
    actions: tuple[Action, ...]

    def __len__(self) -> int:
        return len(self.actions)


class Strategy(Enum):
    CERTIFICATE = "certificate"
    SHORTEST = "shortest"


def gcd(n: int, m: int) -> int:
    """Greatest common divisor by the Euclidean algorithm; n ≥ 1, m ≥ 0."""
    _check_capacity(n, "n")
    _check_capacity(m, "m", minimum=0)
    while m:
        n, m = m, n % m
    return n


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    # Returns (g, x, y) with x·a + y·b = g for a ≥ 1, b ≥ 0.
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def bezout(n: int, m: int) -> BezoutCertificate:
    """Extended Euclid with the canonical representative for the coefficient
    of n: 0 ≤ a < m/g.  When m/g = 1 that interval forces a = 0 and the
    whole weight falls on b."""
    _check_capacity(n, "n")
    _check_capacity(m, "m")
    g, x, _ = _extended_gcd(n, m)
    period = m // g
    a = x % period
    b = (g - a * n) // m
    return BezoutCertificate(g=g, a=a, b=b)


def is_achievable(problem: JugProblem) -> bool:
    """Whether the target is a positive multiple of gcd(n, m)."""
    return problem.target % gcd(problem.n, problem.m) == 0


def achievable_amounts(n: int, m: int, limit: int) -> list[int]:
    """All producible amounts up to ``limit``: the multiples of gcd(n, m)."""
    _check_capacity(n, "n")
    _check_capacity(m, "m")
    if not 1 <= limit <= MAX_LIMIT:
        raise ValueError(f"limit must be between 1 and {MAX_LIMIT}, got {limit}")
    g = gcd(n, m)
    return list(range(g, limit + 1, g))


def _certificate_plan(problem: JugProblem) -> PourPlan:
    n, m, target = problem.n, problem.m, problem.target
    cert = bezout(n, m)
    k = target // cert.g
    period = m // cert.g
    adds_n = (k * cert.a) % period
    count_m = (target - adds_n * n) // m
    # All additions happen first, so the total peaks at adds_n·n (or at the
    # target itself when count_m ≥ 0) and every removal still has at least a
    # full vessel available: before each one the total is target plus a
    # whole number of m's.
    actions: list[Action] = [AddJug(n)] * adds_n
    if count_m >= 0:
        actions.extend([AddJug(m)] * count_m)
    else:
        actions.extend([RemoveJug(m)] * -count_m)
    return PourPlan(tuple(actions))


def _search_ceiling(problem: JugProblem) -> int:
    # The certificate plan peaks at max(target, adds_n·n).  Additionally,
    # any achievable action multiset can be reordered to keep the running
    # total below max(target, 2·max(n, m)): play removals whenever the total
    # reaches max(n, m), additions otherwise; once removals are exhausted
    # the total only climbs to the target.  The ceiling below therefore
    # contains a true shortest plan, not merely some plan.
    n, m, target = problem.n, problem.m, problem.target
    cert = bezout(n, m)
    k = target // cert.g
    adds_n = (k * cert.a) % (m // cert.g)
    return max(target, adds_n * n, 2 * max(n, m))


def _shortest_plan(problem: JugProblem) -> PourPlan:
    n, m, target = problem.n, problem.m, problem.target
    ceiling = _search_ceiling(problem)
    if ceiling + 1 > MAX_STATES:
        raise StateSpaceTooLarge(ceiling + 1)
    moves: list[Action] = [AddJug(n), AddJug(m), RemoveJug(n), RemoveJug(m)]
    parents: dict[int, tuple[int, Action]] = {}
    seen = {0}
    queue = deque([0])
    while queue:
        total = queue.popleft()
        if total == target:
            actions: list[Action] = []
            while total != 0:
                total, action = parents[total]
                actions.append(action)
            actions.reverse()
            return PourPlan(tuple(actions))
        for action in moves:
            if isinstance(action, AddJug):
                neighbor = total + action.capacity
            else:
                neighbor = total - action.capacity
            if 0 <= neighbor <= ceiling and neighbor not in seen:
                seen.add(neighbor)
                parents[neighbor] = (total, action)
                queue.append(neighbor)
    raise AssertionError("unreachable: an achievable target fits in the ceiling")


def plan(problem: JugProblem, strategy: Strategy = Strategy.CERTIFICATE) -> PourPlan:
    """Synthesize a valid pour plan for an achievable target.

    ``CERTIFICATE`` scales the Bézout identity: all additions, then all
    removals.  ``SHORTEST`` breadth-first-searches the running totals and
    returns a minimal-length plan.  Raises ``NotAchievable`` when gcd(n, m)
    does not divide the target.
    """
    g = gcd(problem.n, problem.m)
    if problem.target % g:
        raise NotAchievable(problem.n, problem.m, problem.target, g)
    if strategy is Strategy.SHORTEST:
        return _shortest_plan(problem)
    return _certificate_plan(problem)


def simulate(pour_plan: PourPlan, n: int, m: int) -> int:
    """Replay a plan, returning the final amount in the container.

    Raises ``PlanViolation`` at the first action that uses a foreign
    capacity or would drive the total negative.
    """
    _check_capacity(n, "n")
    _check_capacity(m, "m")
    total = 0
    for index, action in enumerate(pour_plan.actions):
        if action.capacity not in (n, m):
            raise PlanViolation(index, ViolationKind.FOREIGN_CAPACITY)
        if isinstance(action, AddJug):
            total += action.capacity
        elif isinstance(action, RemoveJug):
            if total < action.capacity:
                raise PlanViolation(index, ViolationKind.NEGATIVE_AMOUNT)
            total -= action.capacity
        else:
            raise TypeError(f"not a plan action: {action!r}")
    return total
