"""Deciding whether a linear family of matrices contains an invertible member.

For operators L_1..L_d (n x n) the polynomial p(t) = det(sum t_k L_k) has total
degree <= n.  If (n+1)^d points fit in the grid budget, p is evaluated on
{0..n}^d, which certifies p == 0 when every value vanishes.  Otherwise a
seeded random search runs and a "none" answer is only probabilistic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .field import Scalar
from .matrix import Matrix

__all__ = [
    "GRID_BUDGET",
    "PIT_SEED",
    "RANDOM_RANGE",
    "RANDOM_TRIALS",
    "InvertibilityResult",
    "combine",
    "grid_points",
    "invertible_in_subspace",
    "symbolic_determinant",
]

PIT_SEED = 20240917
GRID_BUDGET = 10**6
RANDOM_TRIALS = 64
RANDOM_RANGE = 2**20


@dataclass(frozen=True)
class InvertibilityResult:
    witness: tuple[int, ...] | None
    certified: bool
    method: str  # "empty" | "grid" | "random"
    evaluations: int
    seed: int | None = None
    error_bound: Fraction | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def combine(operators: Sequence[Matrix], t: Sequence) -> Matrix:
    acc = None
    for tk, op in zip(t, operators):
        if not tk:
            continue
        term = op if tk == 1 else op * tk
        acc = term if acc is None else acc + term
    if acc is None:
        return Matrix.zeros(operators[0].rows, operators[0].cols, operators[0].order)
    return acc


def grid_points(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """All of {0..n}^d, by increasing coordinate sum, larger leading entries first."""

    def parts(total: int, k: int):
        if k == 1:
            if total <= n:
                yield (total,)
            return
        for first in range(min(n, total), -1, -1):
            for rest in parts(total - first, k - 1):
                yield (first,) + rest

    for total in range(n * d + 1):
        yield from parts(total, d)


def invertible_in_subspace(
    operators: Sequence[Matrix],
    seed: int = PIT_SEED,
    grid_budget: int = GRID_BUDGET,
) -> InvertibilityResult:
    """Search for t with sum t_k operators[k] invertible."""
    d = len(operators)
    if d == 0:
        return InvertibilityResult(None, True, "empty", 0)
    n = operators[0].rows
    if (n + 1) ** d <= grid_budget:
        count = 0
        for t in grid_points(d, n):
            count += 1
            if combine(operators, t).is_invertible():
                return InvertibilityResult(t, True, "grid", count)
        return InvertibilityResult(None, True, "grid", count)
    rng = random.Random(seed)
    for trial in range(1, RANDOM_TRIALS + 1):
        t = tuple(rng.randrange(RANDOM_RANGE) for _ in range(d))
        if combine(operators, t).is_invertible():
            return InvertibilityResult(t, True, "random", trial, seed)
    bound = Fraction(n, RANDOM_RANGE) ** RANDOM_TRIALS
    return InvertibilityResult(None, False, "random", RANDOM_TRIALS, seed, bound)


def _poly_mul_linear(poly: dict, lin: dict) -> dict:
    out: dict = {}
    for mono, c in poly.items():
        for k, a in lin.items():
            key = list(mono)
            key[k] += 1
            key = tuple(key)
            v = out.get(key)
            out[key] = c * a if v is None else v + c * a
    return {m: c for m, c in out.items() if not c.is_zero()}


def symbolic_determinant(operators: Sequence[Matrix]) -> dict[tuple[int, ...], Scalar]:
    """det(sum t_k L_k) as {exponent tuple: coefficient}, by Laplace expansion over column subsets.

    Exponential in n; meant for n <= 8.
    """
    d = len(operators)
    n = operators[0].rows
    order = operators[0].order
    entries = [op.to_scalars() for op in operators]
    lin = [[{k: entries[k][i][j] for k in range(d) if not entries[k][i][j].is_zero()} for j in range(n)] for i in range(n)]
    layer: dict[int, dict] = {0: {(0,) * d: Scalar(1, order)}}
    for i in range(n):
        nxt: dict[int, dict] = {}
        for mask, poly in layer.items():
            for j in range(n):
                if mask >> j & 1 or not lin[i][j]:
                    continue
                above = bin(mask >> (j + 1)).count("1")
                term = _poly_mul_linear(poly, lin[i][j])
                if above % 2:
                    term = {m: -c for m, c in term.items()}
                tgt = nxt.setdefault(mask | 1 << j, {})
                for m, c in term.items():
                    v = tgt.get(m)
                    tgt[m] = c if v is None else v + c
        layer = {mk: {m: c for m, c in p.items() if not c.is_zero()} for mk, p in nxt.items()}
    return layer.get((1 << n) - 1, {})
