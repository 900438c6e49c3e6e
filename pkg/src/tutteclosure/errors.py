"""Exception types and the node-expansion budget shared by the exact searches."""

from __future__ import annotations

import os
from typing import Any

BUDGET_ENV = "TUTTECLOSURE_BUDGET"
DEFAULT_BUDGET = 10**7


class InputError(ValueError):
    """Raised for malformed input or a violated precondition."""


class BudgetExceeded(RuntimeError):
    """The search hit its expansion cap; the answer is indeterminate."""

    def __init__(self, limit: int, partial: Any = None):
        super().__init__(f"search budget of {limit} expansions exceeded")
        self.limit = limit
        self.partial = partial


class Counterexample(RuntimeError):
    """A checked guarantee failed on concrete data.

    ``report`` carries everything needed to replay the failure (graph6 of the
    input, witnesses, the name of the failed check).
    """

    def __init__(self, check: str, report: dict[str, Any] | None = None):
        super().__init__(check)
        self.check = check
        self.report = dict(report or {})
        self.report.setdefault("check", check)


class InconsistencyError(RuntimeError):
    """Two independent characterizations disagreed."""


class Budget:
    """Mutable counter of search-node expansions.

    ``limit=None`` reads the environment variable and falls back to
    ``DEFAULT_BUDGET``.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is None:
            limit = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))
        if limit <= 0:
            raise InputError("budget must be positive")
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)

    def __repr__(self) -> str:
        return f"Budget(limit={self.limit}, used={self.used})"


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
