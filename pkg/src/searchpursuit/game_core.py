"""Search game model: locations, feasible inspection sets, payoff matrices.

A hider picks one of n locations. The searcher may inspect any set of
locations whose summed search times fit within a time budget; if the
hider's location is inspected, the pursuit succeeds with that
location's capture probability, otherwise the hider survives. The
searcher's undominated pure strategies are the inclusion-maximal
feasible sets: a strictly larger feasible set finds the hider at least
as often and sometimes strictly more often.

Everything is kept in exact ``Fraction`` arithmetic so downstream game
values reproduce bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import parse_rational

DEFAULT_MAX_SETS = 1 << 22


class InstanceTooLarge(RuntimeError):
    """Enumeration refused: the instance exceeds the configured subset cap."""


def _rational_tuple(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


@dataclass(frozen=True)
class GameSpec:
    """One game instance: per-location search times and capture
    probabilities plus the searcher's total time budget."""

    times: tuple[Fraction, ...]
    captures: tuple[Fraction, ...]
    budget: Fraction

    def __post_init__(self):
        object.__setattr__(self, "times", _rational_tuple(self.times))
        object.__setattr__(self, "captures", _rational_tuple(self.captures))
        object.__setattr__(self, "budget", parse_rational(self.budget))
        if not self.times:
            raise ValueError("at least one location is required")
        if len(self.times) != len(self.captures):
            raise ValueError("times and captures must have equal length")
        for i, t in enumerate(self.times, start=1):
            if t <= 0:
                raise ValueError(f"search time of location {i} must be positive")
        for i, p in enumerate(self.captures, start=1):
            if not 0 < p <= 1:
                raise ValueError(
                    f"capture probability of location {i} must be in (0, 1]"
                )
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.times)


@dataclass(frozen=True, order=True)
class SearchSet:
    """A set of locations (sorted 1-based indices) and its total time."""

    members: tuple[int, ...]
    total_time: Fraction

    def __contains__(self, location: int) -> bool:
        return location in self.members

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.members) + "}"


def search_set(spec: GameSpec, members: Iterable[int]) -> SearchSet:
    """Build a :class:`SearchSet` for ``members``, validating indices."""
    ordered = tuple(sorted(set(members)))
    for i in ordered:
        if not 1 <= i <= spec.n:
            raise ValueError(f"location index {i} out of range 1..{spec.n}")
    total = sum((spec.times[i - 1] for i in ordered), Fraction(0))
    return SearchSet(ordered, total)


@dataclass(frozen=True)
class HiderStrategy:
    """A mixed hiding strategy: nonnegative weights summing to exactly 1."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "probs", _rational_tuple(self.probs))
        if any(p < 0 for p in self.probs):
            raise ValueError("hider probabilities must be nonnegative")
        if sum(self.probs) != 1:
            raise ValueError("hider probabilities must sum to exactly 1")


@dataclass(frozen=True)
class PayoffMatrix:
    """Capture-probability matrix: rows are search sets, columns locations.

    entry(A, i) is the capture probability of location i when i is in A,
    and 0 otherwise.
    """

    rows: tuple[SearchSet, ...]
    captures: tuple[Fraction, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.captures)


@dataclass(frozen=True)
class KnapsackInstance:
    """The searcher's best-response problem against a known hider mix:
    weights are search times, benefits are find-and-capture chances."""

    weights: tuple[Fraction, ...]
    benefits: tuple[Fraction, ...]
    capacity: Fraction


def feasible_sets(spec: GameSpec, max_sets: int = DEFAULT_MAX_SETS) -> list[SearchSet]:
    """All inspection sets within budget, in lexicographic member order.

    The empty set is always included. Raises :class:`InstanceTooLarge`
    when more than ``max_sets`` sets would be returned.
    """
    out: list[SearchSet] = []
    members: list[int] = []

    def walk(total: Fraction, start: int) -> None:
        if len(out) >= max_sets:
            raise InstanceTooLarge(
                f"more than {max_sets} feasible sets; "
                "instance too large for exhaustive enumeration"
            )
        out.append(SearchSet(tuple(members), total))
        for i in range(start, spec.n + 1):
            t = spec.times[i - 1]
            if total + t <= spec.budget:
                members.append(i)
                walk(total + t, i + 1)
                members.pop()

    walk(Fraction(0), 1)
    return out


def maximal_feasible_sets(
    spec: GameSpec, max_sets: int = DEFAULT_MAX_SETS
) -> list[SearchSet]:
    """Feasible sets with no feasible strict superset.

    These are the searcher's undominated pure strategies. The empty set
    only survives when no single location fits the budget.
    """
    result = []
    for s in feasible_sets(spec, max_sets=max_sets):
        slack = spec.budget - s.total_time
        chosen = set(s.members)
        if all(
            spec.times[i - 1] > slack
            for i in range(1, spec.n + 1)
            if i not in chosen
        ):
            result.append(s)
    return result


def build_matrix(spec: GameSpec, rows: Sequence[SearchSet]) -> PayoffMatrix:
    """Assemble the payoff matrix over ``rows`` in the given order."""
    zero = Fraction(0)
    for s in rows:
        if s.total_time > spec.budget:
            raise ValueError(f"row {s} is infeasible for budget {spec.budget}")
    entries = tuple(
        tuple(
            spec.captures[i - 1] if i in s else zero for i in range(1, spec.n + 1)
        )
        for s in rows
    )
    return PayoffMatrix(tuple(rows), tuple(spec.captures), entries)


def knapsack_instance(spec: GameSpec, hider: HiderStrategy) -> KnapsackInstance:
    if len(hider.probs) != spec.n:
        raise ValueError("hider strategy length does not match the game")
    benefits = tuple(h * p for h, p in zip(hider.probs, spec.captures))
    return KnapsackInstance(spec.times, benefits, spec.budget)


def best_response_value(
    spec: GameSpec, hider: HiderStrategy, max_sets: int = DEFAULT_MAX_SETS
) -> tuple[SearchSet, Fraction]:
    """Exact best searcher response to a known hiding distribution.

    Maximizes the summed find-and-capture chance over every feasible
    set; ties resolve to the lexicographically smallest member list.
    """
    inst = knapsack_instance(spec, hider)
    best_set: SearchSet | None = None
    best_val = Fraction(-1)
    for s in feasible_sets(spec, max_sets=max_sets):
        val = sum((inst.benefits[i - 1] for i in s.members), Fraction(0))
        if val > best_val:
            best_set, best_val = s, val
    assert best_set is not None
    return best_set, best_val
