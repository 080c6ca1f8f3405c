"""Exact linear algebra over the field of rational functions in parameters.

Supports the cohomology solver: reduced row echelon form with deterministic
pivot selection, linear solving with a canonical representative (free
variables set to zero), rank certificates, and a genericity cross-check that
re-verifies symbolic rank decisions at random rational parameter points.

Rank decisions over a function field are generic-parameter statements: a
pivot that is a nonconstant polynomial is only nonzero away from its zero
set.  Every such pivot is recorded as an assumption and surfaced to callers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import Poly, RatFunc, as_poly

__all__ = [
    "as_ratfunc",
    "RrefResult",
    "rref",
    "LinearSolveResult",
    "solve_linear",
    "matrix_rank",
    "rank_at_point",
    "sample_points",
    "verify_rank_generically",
    "GenericityError",
]


class GenericityError(RuntimeError):
    """A symbolic rank decision disagreed with random-point evaluation."""


def as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc(as_poly(value))


def _pivot_complexity(entry: RatFunc) -> tuple[int, int]:
    return (len(entry.num), len(entry.den))


@dataclass(frozen=True)
class RrefResult:
    rows: tuple[tuple[RatFunc, ...], ...]
    pivot_cols: tuple[int, ...]
    assumptions: tuple[Poly, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


def rref(matrix: Sequence[Sequence]) -> RrefResult:
    """Reduced row echelon form with deterministic pivoting.

    Pivot choice: among candidate rows, the entry with the fewest numerator
    terms (then fewest denominator terms, then lowest row index).  Pivots
    whose numerator is a nonconstant polynomial are recorded as nonvanishing
    assumptions.
    """
    m = [[as_ratfunc(e) for e in row] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivot_cols: list[int] = []
    assumptions: list[Poly] = []
    seen_assumptions: set[str] = set()
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        candidates = [i for i in range(r, nrows) if m[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (*_pivot_complexity(m[i][c]), i))
        m[r], m[best] = m[best], m[r]
        pivot = m[r][c]
        if not pivot.num.is_constant():
            key = str(pivot.num)
            if key not in seen_assumptions:
                seen_assumptions.add(key)
                assumptions.append(pivot.num)
        m[r] = [e / pivot for e in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
    return RrefResult(tuple(tuple(row) for row in m), tuple(pivot_cols),
                      tuple(assumptions))


@dataclass(frozen=True)
class LinearSolveResult:
    status: str  # "solved" | "inconsistent"
    solution: tuple[RatFunc, ...] | None
    rank: int
    rank_augmented: int
    free_columns: tuple[int, ...]
    assumptions: tuple[Poly, ...]


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> LinearSolveResult:
    """Solve A x = b exactly; canonical solution sets free variables to zero."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    if not nrows:
        return LinearSolveResult("solved", tuple(), 0, 0, tuple(), tuple())
    result = rref(aug)
    rank_aug = result.rank
    rank = sum(1 for c in result.pivot_cols if c < ncols)
    if rank_aug > rank:
        return LinearSolveResult("inconsistent", None, rank, rank_aug,
                                 tuple(), result.assumptions)
    zero = as_ratfunc(0)
    solution = [zero] * ncols
    for row_idx, col in enumerate(result.pivot_cols):
        solution[col] = result.rows[row_idx][ncols]
    free = tuple(c for c in range(ncols) if c not in result.pivot_cols)
    return LinearSolveResult("solved", tuple(solution), rank, rank_aug,
                             free, result.assumptions)


def matrix_rank(matrix: Sequence[Sequence]) -> RrefResult:
    return rref(matrix)


def rank_at_point(matrix: Sequence[Sequence], point: dict[str, Fraction]) -> int:
    """Rank after substituting exact rationals for every parameter."""
    rows: list[list[Fraction]] = []
    for row in matrix:
        vals = []
        for e in row:
            r = as_ratfunc(e).substitute(point)
            poly = r.as_poly()
            if poly is None or not poly.is_constant():
                raise ValueError("point does not evaluate all parameters")
            vals.append(poly.as_fraction())
        rows.append(vals)
    rank = 0
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        rows[r] = [v / pivot for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        if r == len(rows):
            break
    return rank


def sample_points(params: Sequence[str], avoid: Sequence[Poly],
                  count: int = 2, seed: int = 20240801,
                  max_tries: int = 64) -> list[dict[str, Fraction]]:
    """Random rational points where none of the ``avoid`` polynomials vanish."""
    rng = random.Random(seed)
    params = sorted(params)
    points: list[dict[str, Fraction]] = []
    for _ in range(max_tries):
        if len(points) >= count:
            break
        point = {p: Fraction(rng.randint(1, 97), rng.randint(1, 13))
                 for p in params}
        if all(bool(poly.substitute(point)) for poly in avoid):
            points.append(point)
    if len(points) < count:
        raise GenericityError("could not sample points avoiding assumptions")
    return points


def verify_rank_generically(matrix: Sequence[Sequence], expected_rank: int,
                            assumptions: Sequence[Poly]) -> None:
    """Re-check a symbolic rank at random rational points.

    At a point avoiding the recorded assumptions and denominators the rank
    can only drop on a further measure-zero set, so requiring the symbolic
    rank to be reproduced at two independent random points is a strong guard
    against pivoting mistakes.
    """
    rows = [[as_ratfunc(e) for e in row] for row in matrix]
    if not rows:
        return
    params: set[str] = set()
    avoid: list[Poly] = list(assumptions)
    for row in rows:
        for e in row:
            params |= e.parameters()
            if not e.den.is_constant():
                avoid.append(e.den)
    if not params:
        return  # constant matrix: the symbolic computation was already exact
    for point in sample_points(sorted(params), avoid):
        if rank_at_point(rows, point) != expected_rank:
            raise GenericityError(
                f"symbolic rank {expected_rank} not reproduced at {point}")
