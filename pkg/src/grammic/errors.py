"""Exception types and combinatorial budgets shared across the package."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class GrammicError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidIntervalError(GrammicError):
    pass


class RankError(GrammicError):
    pass


class NotStandardError(GrammicError):
    pass


class EmptyWordError(GrammicError):
    pass


class BudgetExceeded(GrammicError):
    pass


class HypothesisError(GrammicError):
    """A theorem's hypotheses do not hold, so the check is not applicable."""


class PreconditionError(GrammicError):
    """One or more preconditions failed; ``violations`` names each of them."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class MisuseError(GrammicError):
    pass


class PropertyViolation(AssertionError):
    """A property that a proved result guarantees failed on a concrete instance."""


@dataclass(frozen=True)
class Budget:
    """Upper limits on exhaustive work. Exceeding one raises BudgetExceeded."""

    steps: int = 10**7  # row-action / rewrite steps
    words: int = 10**6  # size of an enumerated word space
    assignments: int = 10**6  # identity substitutions tried

    def check(self, kind: str, needed: int) -> None:
        limit = getattr(self, kind)
        if needed > limit:
            raise BudgetExceeded(
                f"{kind} budget exceeded: need {needed}, limit {limit}"
            )


def budget_from_env(env=None) -> Budget:
    """Read GRAMMIC_BUDGET.

    Either a bare integer (applied to ``steps``) or comma-separated
    ``key=value`` items, e.g. ``steps=1e8,words=5000000``.
    """
    env = os.environ if env is None else env
    raw = env.get("GRAMMIC_BUDGET", "").strip()
    budget = Budget()
    if not raw:
        return budget
    if "=" not in raw:
        return replace(budget, steps=_positive(raw))
    fields = {}
    for item in raw.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in ("steps", "words", "assignments"):
            raise GrammicError(f"unknown budget key {key!r}")
        fields[key] = _positive(value)
    return replace(budget, **fields)


def _positive(text: str) -> int:
    try:
        value = int(float(text))
    except ValueError:
        raise GrammicError(f"malformed budget value {text!r}") from None
    if value <= 0:
        raise GrammicError(f"budget must be positive, got {text!r}")
    return value


DEFAULT_BUDGET = Budget()
