"""Closed-form solutions for structured game families.

Four families admit exact solutions without touching the LP:

* constant search times (every location takes one time unit),
* staircase times (location i takes i units, captures decreasing,
  budget exactly n),
* a floor test for whether the value has bottomed out at the last
  location's capture probability,
* two location types (many interchangeable locations of two kinds).

Each solver returns strategies that the enumeration + LP pipeline can
re-derive; the staircase solver additionally records in ``verified``
that its output passed an exact two-sided slack check against the
pruned matrix, since its even-n variant rests on a direct construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import game_core
from .game_core import GameSpec, HiderStrategy, SearchSet
from .lp_solver import solve_zero_sum
from .rationals import parse_rational

ZERO = Fraction(0)
ONE = Fraction(1)


class RegimeError(ValueError):
    """Parameters fall outside the closed form's validity regime."""


# ---------------------------------------------------------------------------
# Constant search times


@dataclass(frozen=True)
class ConstantTimeSolution:
    """``regime`` is "interior" (equalizing mix, value k / inv_capture_sum)
    or "corner" (point mass on a lowest-capture location, value that
    capture probability)."""

    inv_capture_sum: Fraction
    regime: str
    hider: HiderStrategy
    value: Fraction


def solve_constant_times(captures, budget) -> ConstantTimeSolution:
    """Unit-time locations, integer budget k: the searcher inspects any
    k locations.

    Below the threshold the hider equalizes capture chance times hiding
    probability across all locations; at or beyond it the hider commits
    to a location with the smallest capture probability. On the exact
    boundary both regimes tie and the interior mix is returned.
    """
    ps = [parse_rational(p) for p in captures]
    n = len(ps)
    if n == 0:
        raise ValueError("at least one location is required")
    for p in ps:
        if not 0 < p <= 1:
            raise ValueError("capture probabilities must be in (0, 1]")
    k = parse_rational(budget)
    if k.denominator != 1:
        raise ValueError("budget must be an integer number of inspections")
    if not 1 <= k <= n:
        raise ValueError(
            "budget must be between 1 and the location count; "
            "use the general solver outside that range"
        )
    lam = sum(ONE / p for p in ps)
    interior_value = k / lam
    min_idx = min(range(n), key=lambda i: ps[i])
    p_min = ps[min_idx]
    if interior_value <= p_min:
        probs = tuple((ONE / p) / lam for p in ps)
        return ConstantTimeSolution(lam, "interior", HiderStrategy(probs), interior_value)
    probs = tuple(ONE if i == min_idx else ZERO for i in range(n))
    return ConstantTimeSolution(lam, "corner", HiderStrategy(probs), p_min)


# ---------------------------------------------------------------------------
# Staircase search times (t_i = i, budget = n)


@dataclass(frozen=True)
class ArithmeticTimesSolution:
    """Solution of the staircase game.

    The hider mixes over locations ``support_start..n`` inversely to
    their capture probabilities; ``inv_capture_sum`` is the sum of the
    reciprocals over that support and the value is its reciprocal.
    ``searcher_mix`` pairs each supported location with a feasible set
    that covers it. ``verified`` records the exact slack check;
    ``uniqueness_expected`` is True when the captures strictly decrease
    (ties void the hider-uniqueness guarantee, not the solution).
    """

    n: int
    support_start: int
    inv_capture_sum: Fraction
    hider: HiderStrategy
    searcher_mix: tuple[tuple[SearchSet, Fraction], ...]
    value: Fraction
    verified: bool
    uniqueness_expected: bool


def _two_sided_check(spec, hider_probs, searcher_mix, value, max_sets) -> bool:
    for row in game_core.maximal_feasible_sets(spec, max_sets=max_sets):
        payoff = sum(
            (hider_probs[i - 1] * spec.captures[i - 1] for i in row.members),
            ZERO,
        )
        if payoff > value:
            return False
    for i in range(1, spec.n + 1):
        covered = sum((w for s, w in searcher_mix if i in s), ZERO)
        if covered * spec.captures[i - 1] < value:
            return False
    return True


def solve_arithmetic_times(captures, certify: bool = True) -> ArithmeticTimesSolution:
    """Location i takes i time units, captures never increase with i,
    and the budget equals the location count n.

    No feasible set reaches two locations in the top half (their times
    alone exceed n), so the hider spreads inverse-proportionally over
    that half, and the searcher mixes complementary pairs {j, n-j}
    ({n} alone when j = n). For even n the support extends one slot
    lower, to location n/2, which the pairs miss; one greedily filled
    feasible set covers it. ``certify=False`` skips the slack check
    (``verified`` is then False), useful when n is large enough that
    enumerating the pruned matrix is unwanted.
    """
    ps = [parse_rational(p) for p in captures]
    n = len(ps)
    if n == 0:
        raise ValueError("at least one location is required")
    for p in ps:
        if not 0 < p <= 1:
            raise ValueError("capture probabilities must be in (0, 1]")
    for i in range(1, n):
        if ps[i] > ps[i - 1]:
            raise ValueError(
                "capture probabilities must not increase with the location index"
            )
    strict = all(ps[i] < ps[i - 1] for i in range(1, n))
    half = n // 2
    support_start = n - half
    inv_sum = sum(ONE / ps[j - 1] for j in range(support_start, n + 1))
    value = 1 / inv_sum
    probs = tuple(
        (ONE / ps[j - 1]) / inv_sum if j >= support_start else ZERO
        for j in range(1, n + 1)
    )
    spec = GameSpec(
        tuple(Fraction(i) for i in range(1, n + 1)), tuple(ps), Fraction(n)
    )
    mix: list[tuple[SearchSet, Fraction]] = []
    for j in range(support_start, n + 1):
        weight = (ONE / ps[j - 1]) / inv_sum
        if j > half:
            partner = n - j
            members = (j,) if partner == 0 else (partner, j)
        else:
            # Even n, j == n/2: pack small locations around it while they fit.
            chosen = [j]
            total = j
            for i in range(1, n + 1):
                if i != j and total + i <= n:
                    chosen.append(i)
                    total += i
            members = tuple(sorted(chosen))
        mix.append((game_core.search_set(spec, members), weight))
    verified = (
        _two_sided_check(spec, probs, mix, value, game_core.DEFAULT_MAX_SETS)
        if certify
        else False
    )
    return ArithmeticTimesSolution(
        n, support_start, inv_sum, HiderStrategy(probs), tuple(mix), value,
        verified, strict,
    )


# ---------------------------------------------------------------------------
# Value floor test


@dataclass(frozen=True)
class ValueFloorCheck:
    """``holds`` is True exactly when the game's value equals the last
    location's capture probability. ``reduced_value`` is the value of
    the game with that location removed and the budget cut by its
    search time; None when no smaller game exists (single location)."""

    holds: bool
    reduced_value: Fraction | None


def check_value_floor(
    spec: GameSpec, max_sets: int = game_core.DEFAULT_MAX_SETS
) -> ValueFloorCheck:
    """Has the value bottomed out at the slowest location's capture
    probability?

    Requires staircase times (t_i = i) and budget >= n so the slowest
    location is searchable at all. The floor is reached exactly when
    the one-smaller game, with budget reduced by n, is still worth at
    least that capture probability: then the searcher can always
    inspect location n and still cover the rest well enough, while the
    hider can cap the value at p_n by hiding there.
    """
    n = spec.n
    expected = tuple(Fraction(i) for i in range(1, n + 1))
    if spec.times != expected:
        raise ValueError("the floor test requires search times 1, 2, ..., n")
    if spec.budget < n:
        raise ValueError(
            "budget below n: the slowest location cannot be searched and "
            "the floor test does not apply"
        )
    if n == 1:
        return ValueFloorCheck(True, None)
    reduced = GameSpec(expected[:-1], spec.captures[:-1], spec.budget - n)
    rows = game_core.maximal_feasible_sets(reduced, max_sets=max_sets)
    matrix = game_core.build_matrix(reduced, rows)
    reduced_value = solve_zero_sum(matrix).value
    return ValueFloorCheck(reduced_value >= spec.captures[-1], reduced_value)


# ---------------------------------------------------------------------------
# Two location types


@dataclass(frozen=True)
class TwoTypeSpec:
    """``type1_count`` quick locations (unit search time, capture
    ``type1_capture``) and ``type2_count`` slow ones (``type2_time``
    units, capture ``type2_capture``), with total budget ``budget``."""

    type1_count: int
    type2_count: int
    type2_time: int
    type1_capture: Fraction
    type2_capture: Fraction
    budget: int

    def __post_init__(self):
        for name in ("type1_count", "type2_count", "type2_time", "budget"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be a positive integer")
        for name in ("type1_capture", "type2_capture"):
            p = parse_rational(getattr(self, name))
            object.__setattr__(self, name, p)
            if not 0 < p <= 1:
                raise ValueError(f"{name} must be in (0, 1]")


@dataclass(frozen=True)
class TwoTypeSolution:
    """``type1_mass`` is the probability of hiding at a random quick
    location (split evenly within the type). ``searcher_mix`` gives the
    probability of inspecting j slow locations (and budget-many quick
    ones with the rest of the time), for j in 0..max_type2_searches;
    only the mean of j matters and the minimal-support mix achieving
    ``mean_type2_searches`` is returned."""

    type1_mass: Fraction
    mean_type2_searches: Fraction
    max_type2_searches: int
    value: Fraction
    searcher_mix: tuple[tuple[int, Fraction], ...]


def solve_two_type(spec: TwoTypeSpec) -> TwoTypeSolution:
    """Closed form for the two-type game.

    Valid when the searcher could spend the whole budget within either
    type (type1_count >= budget and type2_count * type2_time >= budget)
    and the equalizing mean number of slow-type inspections does not
    exceed the feasible maximum; outside that regime the formula is
    provably wrong and :class:`RegimeError` is raised.
    """
    a, b = Fraction(spec.type1_count), Fraction(spec.type2_count)
    tau = Fraction(spec.type2_time)
    p, q = spec.type1_capture, spec.type2_capture
    k = Fraction(spec.budget)
    if a < k or b * tau < k:
        raise RegimeError(
            "the searcher cannot spend the whole budget within one location "
            "type; use the general solver"
        )
    m = spec.budget // spec.type2_time
    denom = a * q + b * p * tau
    type1_mass = a * q / denom
    j_mean = p * b * k / denom
    if j_mean > m:
        raise RegimeError(
            "no searcher mix over 0..floor(budget / type2_time) slow-type "
            "inspections attains the equalizing mean; use the general solver"
        )
    value = p * q * k / denom
    if j_mean.denominator == 1:
        mix: tuple[tuple[int, Fraction], ...] = ((int(j_mean), ONE),)
    else:
        low = j_mean.numerator // j_mean.denominator
        hi_weight = j_mean - low
        mix = ((low, ONE - hi_weight), (low + 1, hi_weight))
    return TwoTypeSolution(type1_mass, j_mean, m, value, mix)


def two_type_payoff(spec: TwoTypeSpec, j, type1_mass) -> Fraction:
    """Searcher win probability when j slow locations are inspected and
    the hider puts ``type1_mass`` on a random quick location."""
    y = parse_rational(type1_mass)
    jq = parse_rational(j)
    a, b = Fraction(spec.type1_count), Fraction(spec.type2_count)
    tau = Fraction(spec.type2_time)
    k = Fraction(spec.budget)
    return (
        y * spec.type1_capture * (k - tau * jq) / a
        + (1 - y) * spec.type2_capture * jq / b
    )


def expand_two_type(spec: TwoTypeSpec) -> GameSpec:
    """The same game with every location listed individually: quick
    locations first, then slow ones."""
    times = (ONE,) * spec.type1_count + (Fraction(spec.type2_time),) * spec.type2_count
    captures = (spec.type1_capture,) * spec.type1_count + (
        spec.type2_capture,
    ) * spec.type2_count
    return GameSpec(times, captures, Fraction(spec.budget))
