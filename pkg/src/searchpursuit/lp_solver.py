"""Exact zero-sum matrix game solving.

``solve_zero_sum`` computes the value and one optimal mixed strategy
per player with a primal simplex over exact Fractions. The matrix is
first mapped affinely onto [1, 2]; mixed strategies are invariant under
positive affine payoff maps, and with all entries positive the standard
maximize-total-mass formulation is bounded and starts feasible at the
all-slack basis. Bland's rule keeps the pivot sequence deterministic
and cycle-free, and the minimizer's strategy is read off the dual
multipliers in the final tableau. Matrices with more rows than columns
are solved through the negated transpose so the tableau always has
min(m, n) constraint rows.

``hider_uniqueness`` probes the optimal-strategy polytope coordinate by
coordinate with a two-phase variant of the same tableau machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import parse_rational

ZERO = Fraction(0)
ONE = Fraction(1)


class UnboundedError(RuntimeError):
    """The linear program is unbounded (cannot happen for finite games)."""


class InfeasibleError(RuntimeError):
    """The linear program has no feasible point."""


@dataclass(frozen=True)
class MixedSolution:
    """Game value plus one optimal mixed strategy per player.

    The row player maximizes: every column yields at least ``value``
    under ``row_strategy`` and every row at most ``value`` under
    ``col_strategy``, both exactly.
    """

    value: Fraction
    row_strategy: tuple[Fraction, ...]
    col_strategy: tuple[Fraction, ...]


@dataclass(frozen=True)
class UniquenessReport:
    """Per-coordinate (min, max) over the hider's optimal polytope."""

    ranges: tuple[tuple[Fraction, Fraction], ...]
    unique: bool


def _entries(matrix) -> list[list[Fraction]]:
    raw = getattr(matrix, "entries", matrix)
    rows = [[parse_rational(v) for v in row] for row in raw]
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix rows must have equal length")
    return rows


def _pivot(rows, obj, basis, r, c) -> None:
    inv = ONE / rows[r][c]
    row_r = [v * inv for v in rows[r]]
    rows[r] = row_r
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[c]
        if f:
            rows[i] = [a - f * b for a, b in zip(row, row_r)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, row_r)]
    basis[r] = c


def _optimize(rows, obj, basis, width) -> None:
    """Pivot under Bland's rule until no objective coefficient is positive.

    ``obj`` holds the current objective expression with the running
    value negated in its last slot, so the same row operation updates
    it and the constraint rows alike.
    """
    while True:
        enter = None
        for j in range(width):
            if obj[j] > 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best = None
        for i, row in enumerate(rows):
            coeff = row[enter]
            if coeff > 0:
                ratio = row[-1] / coeff
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best, leave = ratio, i
        if leave is None:
            raise UnboundedError("unbounded linear program")
        _pivot(rows, obj, basis, leave, enter)


def _maximize(costs, lhs, rhs):
    """max costs.x subject to lhs.x <= rhs and x >= 0, all exact.

    Negative right-hand sides trigger a phase-1 start with artificial
    variables. Returns ``(value, x, duals)``; the dual multipliers are
    only extracted on the single-phase path (all rhs nonnegative) and
    are ``None`` otherwise.
    """
    m, n = len(lhs), len(costs)
    neg = [i for i in range(m) if rhs[i] < 0]
    n_art = len(neg)
    width = n + m + n_art
    art_col = {i: n + m + a for a, i in enumerate(neg)}

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    for i in range(m):
        row = [ZERO] * (width + 1)
        sign = -ONE if i in art_col else ONE
        for j, v in enumerate(lhs[i]):
            if v:
                row[j] = sign * v
        row[n + i] = sign
        row[-1] = sign * rhs[i]
        if i in art_col:
            row[art_col[i]] = ONE
            basis.append(art_col[i])
        else:
            basis.append(n + i)
        rows.append(row)

    if n_art:
        obj1 = [ZERO] * (width + 1)
        for i in neg:
            obj1[art_col[i]] = -ONE
        for i in neg:
            for j in range(width + 1):
                obj1[j] += rows[i][j]
        _optimize(rows, obj1, basis, width)
        if obj1[-1] != 0:
            raise InfeasibleError("infeasible linear program")
        # Drive any zero-valued artificial out of the basis; rows whose
        # structural and slack coefficients all vanished are redundant.
        drop = []
        for i in range(len(rows)):
            if basis[i] >= n + m:
                col = next((j for j in range(n + m) if rows[i][j] != 0), None)
                if col is None:
                    drop.append(i)
                else:
                    _pivot(rows, obj1, basis, i, col)
        for i in reversed(drop):
            del rows[i]
            del basis[i]
        for row in rows:
            del row[n + m : n + m + n_art]

    obj = [Fraction(c) for c in costs] + [ZERO] * (m + 1)
    for i, row in enumerate(rows):
        f = obj[basis[i]]
        if f:
            obj[:] = [a - f * b for a, b in zip(obj, row)]
    _optimize(rows, obj, basis, n + m)

    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = rows[i][-1]
    value = -obj[-1]
    duals = None if n_art else [-obj[n + i] for i in range(m)]
    return value, x, duals


def solve_zero_sum(matrix) -> MixedSolution:
    """Solve the matrix game exactly for both players.

    Accepts a :class:`~searchpursuit.game_core.PayoffMatrix` or any
    rectangular nested sequence of rationals. Deterministic: identical
    matrices produce identical strategies.
    """
    M = _entries(matrix)
    m, n = len(M), len(M[0])
    if m > n:
        flipped = solve_zero_sum(
            [[-M[i][j] for i in range(m)] for j in range(n)]
        )
        return MixedSolution(
            -flipped.value, flipped.col_strategy, flipped.row_strategy
        )
    lo = min(min(row) for row in M)
    hi = max(max(row) for row in M)
    if hi == lo:
        # Constant payoff: every strategy pair is optimal.
        return MixedSolution(
            lo, tuple([Fraction(1, m)] * m), tuple([Fraction(1, n)] * n)
        )
    span = hi - lo
    norm = [[(v - lo) / span + 1 for v in row] for row in M]
    total, mass, duals = _maximize([ONE] * n, norm, [ONE] * m)
    if total <= 0 or duals is None or sum(duals) != total:
        raise RuntimeError("simplex postcondition violated")  # pragma: no cover
    v_norm = 1 / total
    col = tuple(z * v_norm for z in mass)
    row = tuple(u * v_norm for u in duals)
    return MixedSolution(lo + (v_norm - 1) * span, row, col)


def solve_diagonal(diag) -> MixedSolution:
    """Diagonal game: value 1/sum(1/d_i); each side plays strategy i with
    probability inversely proportional to its diagonal entry."""
    d = [parse_rational(v) for v in diag]
    if not d:
        raise ValueError("diagonal must be nonempty")
    if any(v <= 0 for v in d):
        raise ValueError("diagonal entries must be positive")
    value = 1 / sum(ONE / v for v in d)
    probs = tuple(value / v for v in d)
    return MixedSolution(value, probs, probs)


def hider_uniqueness(matrix, value) -> UniquenessReport:
    """Range of each hider coordinate over the optimal-strategy polytope.

    ``value`` must be the exact game value and is checked: a value below
    it leaves the polytope {col mixes capping every row at the value}
    empty, a value above it would silently widen the ranges, so both
    directions raise ``ValueError``. The hider strategy is unique
    exactly when every coordinate's range is degenerate.
    """
    M = _entries(matrix)
    v = parse_rational(value)
    actual = solve_zero_sum(M).value
    if actual != v:
        raise ValueError(f"claimed value {v} is not the exact game value {actual}")
    m, n = len(M), len(M[0])
    lhs = [list(row) for row in M]
    lhs.append([ONE] * n)
    lhs.append([-ONE] * n)
    rhs = [v] * m + [ONE, -ONE]
    ranges = []
    for j in range(n):
        lo_cost = [ZERO] * n
        lo_cost[j] = -ONE
        hi_cost = [ZERO] * n
        hi_cost[j] = ONE
        try:
            neg_lo, _, _ = _maximize(lo_cost, lhs, rhs)
            hi, _, _ = _maximize(hi_cost, lhs, rhs)
        except InfeasibleError as exc:
            raise ValueError(
                "no column strategy achieves the claimed value; "
                "it is not the exact game value"
            ) from exc
        ranges.append((-neg_lo, hi))
    return UniquenessReport(tuple(ranges), all(a == b for a, b in ranges))
