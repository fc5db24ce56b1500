"""Recognition and optimization of ball-cover ("centred") structure.

A vertex set S is (k, r)-centred when S fits inside the union of at most k
closed r-balls.  Distances are measured either in the whole graph (ambient
mode) or inside the induced subgraph on a stated vertex set (induced mode);
the two must never be conflated, so the mode is an explicit field of every
certificate.  The search is an exact minimum set cover, branch-and-bound with
memoization, with ties broken to the lexicographically smallest centre set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InputError
from .graph import Graph, bits_of, mask_of, set_of


@dataclass(frozen=True)
class CentreCertificate:
    """Evidence that ``covered`` lies inside the union of r-balls of ``centres``.

    ``within`` is None for ambient-graph distances; otherwise distances are
    taken in the induced subgraph on that set (bag-induced mode).
    """

    centres: frozenset[int]
    radius: int
    covered: frozenset[int]
    within: Optional[frozenset[int]] = None

    @property
    def mode(self) -> str:
        return "ambient" if self.within is None else "induced"

    @property
    def size(self) -> int:
        return len(self.centres)


def certificate_is_valid(g: Graph, cert: CentreCertificate) -> bool:
    """Re-check a certificate against the graph it talks about."""
    allowed = None
    if cert.within is not None:
        allowed = g._check_subset(cert.within)
        if not cert.covered <= cert.within or not cert.centres <= cert.within:
            return False
    centre_mask = g._check_subset(cert.centres)
    covered_mask = g._check_subset(cert.covered)
    ball = g.ball_mask(centre_mask, cert.radius, allowed)
    return covered_mask & ~ball == 0


def _cover_candidates(g: Graph, s_mask: int, r: int, allowed: int) -> list[tuple[int, int]]:
    """Candidate centres (ascending id) with their coverage of s.

    Only vertices whose r-ball meets s can contribute; candidates with a
    coverage already seen on a smaller id are dropped (never needed by a
    lexicographically smallest optimum).
    """
    out = []
    seen = set()
    for v in bits_of(allowed):
        cover = g.ball_mask(1 << v, r, allowed) & s_mask
        if cover and cover not in seen:
            seen.add(cover)
            out.append((v, cover))
    return out


class _CoverSearch:
    """Exact minimum set cover over an ordered candidate list."""

    def __init__(self, covers: list[tuple[int, int]]):
        self.covers = covers
        m = len(covers)
        suffix = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            suffix[i] = suffix[i + 1] | covers[i][1]
        self.suffix = suffix
        self.memo: dict[tuple[int, int], float] = {}

    def min_size(self, uncovered: int, start: int = 0) -> float:
        """Minimum number of candidates from index >= start covering ``uncovered``."""
        if uncovered == 0:
            return 0
        if uncovered & ~self.suffix[start]:
            return float("inf")
        key = (uncovered, start)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        v, cover = self.covers[start]
        best = self.min_size(uncovered, start + 1)
        if cover & uncovered:
            best = min(best, 1 + self.min_size(uncovered & ~cover, start + 1))
        self.memo[key] = best
        return best

    def lex_min_cover(self, universe: int) -> list[int]:
        """The lexicographically smallest centre list among minimum covers."""
        total = self.min_size(universe, 0)
        chosen = []
        uncovered = universe
        budget = total
        start = 0
        while uncovered:
            for i in range(start, len(self.covers)):
                v, cover = self.covers[i]
                if not cover & uncovered:
                    continue
                if 1 + self.min_size(uncovered & ~cover, i + 1) == budget:
                    chosen.append(v)
                    uncovered &= ~cover
                    budget -= 1
                    start = i + 1
                    break
            else:  # pragma: no cover - the suffix-union guard makes this unreachable
                raise AssertionError("cover forcing failed")
        return chosen


def _resolve_mode(g: Graph, s: Iterable[int], within: Optional[Iterable[int]]):
    s_mask = g._check_subset(s)
    if within is None:
        allowed = g.full_mask
        within_set = None
    else:
        allowed = g._check_subset(within)
        if s_mask & ~allowed:
            raise InputError("induced mode requires the stated set to contain s")
        within_set = set_of(allowed)
    return s_mask, allowed, within_set


def centre_number(
    g: Graph, s: Iterable[int], r: int, within: Optional[Iterable[int]] = None
) -> tuple[int, CentreCertificate]:
    """Minimum k admitting a (k, r) certificate for s, plus that certificate.

    Always at most |s|, since every vertex covers itself at any radius.
    """
    if r < 0:
        raise InputError(f"radius must be nonnegative, got {r}")
    s_mask, allowed, within_set = _resolve_mode(g, s, within)
    if s_mask == 0:
        return 0, CentreCertificate(frozenset(), r, frozenset(), within_set)
    search = _CoverSearch(_cover_candidates(g, s_mask, r, allowed))
    centres = frozenset(search.lex_min_cover(s_mask))
    cert = CentreCertificate(centres, r, set_of(s_mask), within_set)
    if not certificate_is_valid(g, cert):  # pragma: no cover - internal check
        raise AssertionError("centre search produced an invalid certificate")
    return len(centres), cert


def is_centred(
    g: Graph, s: Iterable[int], k: int, r: int, within: Optional[Iterable[int]] = None
) -> Optional[CentreCertificate]:
    """A certificate with at most k centres at radius r, or None.

    Centres may lie anywhere in the host (they need not belong to s); in
    induced mode the host is the subgraph induced on ``within``.
    """
    if k < 0:
        raise InputError(f"centre budget must be nonnegative, got {k}")
    size, cert = centre_number(g, s, r, within)
    return cert if size <= k else None
