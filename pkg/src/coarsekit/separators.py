"""Balanced separators, ball-centred separator search, and separation number.

Weights are exact nonnegative integers so "at most half" is the exact test
2*w(C) <= w(V); the denominator is the weight of the whole graph, separator
included.  Quantification over arbitrary real weightings is not finitely
enumerable, so the toolkit restricts itself to 0/1 indicator weightings
throughout: the recursive constructions only ever demand separators for
indicator sets, and indicator separation number lower-bounds the unrestricted
one, which keeps every law check conservative.  Every searching operation
fixes its scan order (size, then lexicographic), so witnesses are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import InputError, ScaleError, effective_limit
from .graph import Graph, bits_of, set_of

ADMITS_DEFAULT_MAX_N = 16
SEPARATION_DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class WeightFunction:
    """Exact nonnegative integer vertex weights, defined on all of V."""

    weights: tuple[int, ...]

    def __post_init__(self):
        for w in self.weights:
            if not isinstance(w, int) or w < 0:
                raise InputError(f"weights must be nonnegative integers, got {w!r}")

    @classmethod
    def indicator(cls, n: int, members: Iterable[int]) -> "WeightFunction":
        w = [0] * n
        for v in members:
            if not 0 <= v < n:
                raise InputError(f"indicator member {v} outside 0..{n - 1}")
            w[v] = 1
        return cls(tuple(w))

    @classmethod
    def all_ones(cls, n: int) -> "WeightFunction":
        return cls((1,) * n)

    @classmethod
    def zeros(cls, n: int) -> "WeightFunction":
        return cls((0,) * n)

    @property
    def total(self) -> int:
        return sum(self.weights)

    def of_mask(self, mask: int) -> int:
        w = self.weights
        return sum(w[v] for v in bits_of(mask))

    def of_set(self, vs: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vs)


@dataclass(frozen=True)
class SeparatorWitness:
    """A ball-shaped balanced separator: S = N^r[centres] balances the weighting."""

    centres: frozenset[int]
    radius: int
    separator: frozenset[int]
    heaviest_component_weight: int
    total_weight: int


def _check_weights(g: Graph, mu: WeightFunction) -> None:
    if len(mu.weights) != g.n:
        raise InputError(f"weight function covers {len(mu.weights)} vertices, graph has {g.n}")


def is_balanced(
    g: Graph, s: Iterable[int], mu: WeightFunction
) -> tuple[bool, Optional[frozenset[int]]]:
    """Whether every component of g - s carries at most half the total weight.

    Also returns the heaviest component (first one in min-vertex order on
    ties), or None when nothing remains.  An all-zero weighting is vacuously
    balanced.
    """
    _check_weights(g, mu)
    s_mask = g._check_subset(s)
    total = mu.total
    heaviest = None
    heaviest_w = -1
    ok = True
    for comp in g.components_masks(s_mask):
        w = mu.of_mask(comp)
        if w > heaviest_w:
            heaviest_w = w
            heaviest = comp
        if 2 * w > total:
            ok = False
    return ok, (set_of(heaviest) if heaviest is not None else None)


def _balanced_mask(g: Graph, sep_mask: int, mu: WeightFunction, total: int) -> tuple[bool, int]:
    heaviest = 0
    for comp in g.components_masks(sep_mask):
        w = mu.of_mask(comp)
        if w > heaviest:
            heaviest = w
        if 2 * w > total:
            return False, heaviest
    return True, heaviest


def find_centred_balanced_separator(
    g: Graph, mu: WeightFunction, k: int, r: int
) -> Optional[SeparatorWitness]:
    """First centre set (by size, then lex order) whose r-ball balances mu.

    Exhaustive over all centre sets of size <= k, so O(n^k) balance checks;
    returns None when no such ball-separator exists.
    """
    if k < 0 or r < 0:
        raise InputError("centre budget and radius must be nonnegative")
    _check_weights(g, mu)
    total = mu.total
    for size in range(0, k + 1):
        for centres in combinations(range(g.n), size):
            sep = g.ball_mask(sum(1 << c for c in centres), r)
            ok, heaviest = _balanced_mask(g, sep, mu, total)
            if ok:
                return SeparatorWitness(
                    frozenset(centres), r, set_of(sep), heaviest, total
                )
    return None


def admits_kr_balanced_separators_indicator(
    g: Graph, k: int, r: int, max_n: int | None = None
) -> tuple[bool, Optional[frozenset[int]]]:
    """Check every indicator weighting X ⊆ V for a balanced (k, r)-centred separator.

    Returns (True, None) or (False, X) for the first X (ascending bitmask
    order) with no balanced ball.  2^n indicator sets are swept, guarded by a
    configurable vertex limit.
    """
    if k < 0 or r < 0:
        raise InputError("centre budget and radius must be nonnegative")
    limit = effective_limit(ADMITS_DEFAULT_MAX_N, max_n)
    if g.n > limit:
        raise ScaleError("admits_kr_balanced_separators_indicator", g.n, limit)
    # Candidate balls do not depend on X: precompute each ball's components.
    candidates = []
    for size in range(0, k + 1):
        for centres in combinations(range(g.n), size):
            sep = g.ball_mask(sum(1 << c for c in centres), r)
            candidates.append(g.components_masks(sep))
    for x_mask in range(1 << g.n):
        x_size = x_mask.bit_count()
        found = False
        for comps in candidates:
            if all(2 * (c & x_mask).bit_count() <= x_size for c in comps):
                found = True
                break
        if not found:
            return False, set_of(x_mask)
    return True, None


def _min_indicator_separator_size(
    g: Graph,
    x_mask: int,
    comps_by_sep: dict[int, list[int]],
    masks_by_size: list[list[int]],
) -> int:
    """Minimum size of an (arbitrary) vertex set balanced for indicator(x_mask).

    ``comps_by_sep`` caches component lists per separator mask across calls.
    """
    x_size = x_mask.bit_count()
    for size, masks in enumerate(masks_by_size):
        for sep in masks:
            comps = comps_by_sep.get(sep)
            if comps is None:
                comps = g.components_masks(sep)
                comps_by_sep[sep] = comps
            if all(2 * (c & x_mask).bit_count() <= x_size for c in comps):
                return size
    raise AssertionError("removing all vertices always balances")  # pragma: no cover


def separation_number_indicator(g: Graph, max_n: int | None = None) -> int:
    """Exact separation number over indicator weightings.

    max over X ⊆ V of the minimum size of a balanced separator for
    indicator(X), by exhaustive search; exponential, guarded by a vertex
    limit (default 12).
    """
    limit = effective_limit(SEPARATION_DEFAULT_MAX_N, max_n)
    if g.n > limit:
        raise ScaleError("separation_number_indicator", g.n, limit)
    if g.n == 0:
        return 0
    masks_by_size: list[list[int]] = [[] for _ in range(g.n + 1)]
    for sep in range(1 << g.n):
        masks_by_size[sep.bit_count()].append(sep)
    comps_by_sep: dict[int, list[int]] = {}
    best = 0
    for x_mask in range(1, 1 << g.n):
        need = _min_indicator_separator_size(g, x_mask, comps_by_sep, masks_by_size)
        if need > best:
            best = need
    return best
