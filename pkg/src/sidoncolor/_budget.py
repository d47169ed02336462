"""Search budgets shared by the exponential solvers."""
from __future__ import annotations

import os

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "SIDON_COLOR_BUDGET"


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """A search ran out of nodes; ``best`` holds the best non-optimal result."""

    optimal = False

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class Counter:
    __slots__ = ("left", "limit", "what")

    def __init__(self, limit: int, what: str):
        self.left = limit
        self.limit = limit
        self.what = what

    def tick(self, best=None):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"{self.what}: node budget of {self.limit} exhausted", best)
