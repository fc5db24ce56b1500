"""Exception types and scale-guard plumbing shared across the toolkit."""

from __future__ import annotations

import os

ENV_MAX_N = "COARSEKIT_MAX_N"


class InputError(ValueError):
    """A caller violated a documented precondition (bad ids, bad params)."""


class ParseError(InputError):
    """Malformed graph/document text; carries the offending position."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line})" if offset is None else f" (line {line}, offset {offset})"
        super().__init__(message + where)
        self.line = line
        self.offset = offset


class ScaleError(RuntimeError):
    """An exact-search operation refused an input above its configured limit."""

    def __init__(self, operation: str, n: int, limit: int):
        super().__init__(
            f"{operation}: n={n} exceeds limit {limit} "
            f"(raise via the max_n argument or {ENV_MAX_N})"
        )
        self.operation = operation
        self.n = n
        self.limit = limit


class InternalError(RuntimeError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""


class HypothesisViolation(RuntimeError):
    """Separator search failed for an independent set the construction needs.

    The carried set is a counterexample: it admits no balanced separator made
    of at most k balls of radius r in the stated host graph.
    """

    def __init__(self, independent_set: frozenset, k: int, r: int):
        super().__init__(
            f"no ({k},{r})-centred balanced separator exists for the "
            f"independent set {sorted(independent_set)}"
        )
        self.independent_set = independent_set
        self.k = k
        self.r = r

    def relabel(self, translation: dict[int, int]) -> "HypothesisViolation":
        """Return a copy with witness ids mapped through ``translation``."""
        return HypothesisViolation(
            frozenset(translation[v] for v in self.independent_set), self.k, self.r
        )


def effective_limit(default: int, explicit: int | None = None) -> int:
    """Resolve a scale guard: explicit argument, else env override, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_MAX_N)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"{ENV_MAX_N} must be an integer, got {env!r}") from exc
    return default
