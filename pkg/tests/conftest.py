"""Shared test helpers: seeded rational generators and the acceptance
report that gets echoed into the terminal summary."""

from __future__ import annotations

import random
from fractions import Fraction

ACCEPTANCE_LINES: list[str] = []


def report(number: int, description: str, ok: bool, detail: str = "") -> None:
    """Record and print one acceptance-criterion verdict, then assert it."""
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number}: {description}"
    if detail:
        line += f" -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def unit_fraction(rng: random.Random, max_den: int = 24, positive: bool = False) -> Fraction:
    """A rational in [0, 1], or (0, 1] when ``positive``."""
    den = rng.randint(1, max_den)
    num = rng.randint(1 if positive else 0, den)
    return Fraction(num, den)


def strictly_decreasing_captures(rng: random.Random, n: int, max_den: int = 60):
    """n distinct capture probabilities in (0, 1], sorted descending."""
    values: set[Fraction] = set()
    while len(values) < n:
        values.add(unit_fraction(rng, max_den=max_den, positive=True))
    return tuple(sorted(values, reverse=True))


def random_matrix(rng: random.Random, max_dim: int = 6, max_den: int = 12):
    """A random rational matrix with entries in [0, 1]."""
    m = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    return [[unit_fraction(rng, max_den=max_den) for _ in range(n)] for _ in range(m)]


def random_game(rng: random.Random, max_n: int = 5, max_time: int = 6, max_den: int = 10):
    """A random GameSpec with integer times and rational captures."""
    from searchpursuit import GameSpec

    n = rng.randint(1, max_n)
    times = tuple(rng.randint(1, max_time) for _ in range(n))
    captures = tuple(unit_fraction(rng, max_den=max_den, positive=True) for _ in range(n))
    budget = Fraction(rng.randint(0, sum(times)))
    return GameSpec(times, captures, budget)
