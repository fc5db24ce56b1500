"""Tree-decompositions: validator, width, exact treewidth, separator-driven builder.

Exact treewidth runs a subset dynamic program over elimination prefixes,
sandwiched between a min-fill upper bound and a contraction-degeneracy lower
bound; when the bounds meet, the min-fill ordering is returned directly.  The
separator-driven builder runs the classical recursion: pad the tracked set to
3k+1 vertices, demand a balanced separator of size at most k for it, bag the
two together, and recurse into components.  Every search scans subsets in
(size, lexicographic) order, so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import InputError, ScaleError, effective_limit
from .graph import Graph, bits_of, set_of
from .separators import separation_number_indicator  # noqa: F401  (re-export convenience)

TREEWIDTH_DEFAULT_MAX_N = 20
CLASSIC_DEFAULT_MAX_N = 16


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree (nodes 0..len(bags)-1, explicit edge list) plus one bag per node."""

    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def node_count(self) -> int:
        return len(self.bags)


def width(td: TreeDecomposition) -> int:
    """Maximum bag size minus one."""
    if not td.bags:
        raise InputError("width of an empty decomposition is undefined")
    return max(len(b) for b in td.bags) - 1


def validate(g: Graph, td: TreeDecomposition) -> list[str]:
    """All violations of the tree-decomposition conditions; [] means valid.

    Checks tree-ness, bag membership, vertex and edge coverage, and that each
    vertex's bag-node set induces a connected subtree.
    """
    out: list[str] = []
    nodes = td.node_count
    if nodes == 0:
        return ["decomposition has no nodes"]

    nbr: list[list[int]] = [[] for _ in range(nodes)]
    seen_edges = set()
    edges_ok = True
    for a, b in td.edges:
        if not (0 <= a < nodes and 0 <= b < nodes):
            out.append(f"tree edge ({a},{b}) references a missing node")
            edges_ok = False
            continue
        if a == b:
            out.append(f"tree edge ({a},{b}) is a self-loop")
            edges_ok = False
            continue
        key = (min(a, b), max(a, b))
        if key in seen_edges:
            out.append(f"duplicate tree edge ({a},{b})")
            edges_ok = False
            continue
        seen_edges.add(key)
        nbr[a].append(b)
        nbr[b].append(a)
    if edges_ok:
        if len(seen_edges) != nodes - 1:
            out.append(f"tree has {len(seen_edges)} edges, expected {nodes - 1}")
        reach = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y not in reach:
                    reach.add(y)
                    stack.append(y)
        if len(reach) != nodes:
            out.append("decomposition tree is not connected")

    for i, bag in enumerate(td.bags):
        for v in bag:
            if not (0 <= v < g.n):
                out.append(f"bag {i} contains unknown vertex {v}")

    holders: list[list[int]] = [[] for _ in range(g.n)]
    for i, bag in enumerate(td.bags):
        for v in bag:
            if 0 <= v < g.n:
                holders[v].append(i)
    for v in range(g.n):
        hs = holders[v]
        if not hs:
            out.append(f"vertex {v} appears in no bag")
            continue
        member = set(hs)
        reach = {hs[0]}
        stack = [hs[0]]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y in member and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != member:
            out.append(f"bag nodes of vertex {v} do not induce a connected subtree")

    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            out.append(f"edge ({u},{v}) is covered by no bag")
    return out


# -- exact treewidth -----------------------------------------------------------


def _min_fill_order(g: Graph) -> tuple[int, list[int]]:
    """Greedy min-fill elimination: an upper bound plus its ordering."""
    n = g.n
    adj = list(g.adj)
    remaining = g.full_mask
    order = []
    widest = 0
    while remaining:
        best_v = -1
        best_fill = -1
        for v in bits_of(remaining):
            nb = adj[v] & remaining
            fill = 0
            for u in bits_of(nb):
                fill += (nb & ~adj[u] & ~(1 << u)).bit_count()
            if best_v < 0 or fill < best_fill:
                best_v = v
                best_fill = fill
        v = best_v
        nb = adj[v] & remaining
        widest = max(widest, nb.bit_count())
        for u in bits_of(nb):
            adj[u] |= nb & ~(1 << u)
        remaining &= ~(1 << v)
        order.append(v)
    return widest, order


def _minor_min_width(g: Graph) -> int:
    """Contraction-degeneracy lower bound on treewidth."""
    adj = list(g.adj)
    remaining = g.full_mask
    lb = 0
    while remaining:
        best_v = -1
        best_deg = -1
        for v in bits_of(remaining):
            d = (adj[v] & remaining).bit_count()
            if best_v < 0 or d < best_deg:
                best_v = v
                best_deg = d
        u = best_v
        lb = max(lb, best_deg)
        nb_u = adj[u] & remaining
        if not nb_u:
            remaining &= ~(1 << u)
            continue
        best_w = -1
        best_common = -1
        for w in bits_of(nb_u):
            c = (adj[u] & adj[w] & remaining).bit_count()
            if best_w < 0 or c < best_common:
                best_w = w
                best_common = c
        w = best_w
        # contract w into u
        merged = (adj[u] | adj[w]) & ~(1 << u) & ~(1 << w)
        adj[u] = merged
        for x in bits_of(adj[w] & remaining):
            if x != u:
                adj[x] = (adj[x] & ~(1 << w)) | (1 << u)
        remaining &= ~(1 << w)
    return lb


def _treewidth_dp(g: Graph, ub: int) -> Optional[tuple[int, list[int]]]:
    """Subset DP over elimination prefixes, exploring only widths < ub.

    Returns (treewidth, ordering) when some ordering beats ub, else None
    (meaning the true treewidth equals ub).
    """
    n = g.n
    adj = g.adj
    full = g.full_mask
    size = 1 << n
    dp = bytearray(b"\xff") * size
    choice = bytearray(size)
    dp[0] = 0
    for s_mask in range(size):
        cur = dp[s_mask]
        if cur >= ub:
            continue
        comps: list[tuple[int, int]] = []
        rest = s_mask
        while rest:
            start = rest & -rest
            comp = start
            frontier = start
            ext = 0
            while frontier:
                grow = 0
                for w in bits_of(frontier):
                    grow |= adj[w]
                ext |= grow
                frontier = grow & s_mask & ~comp
                comp |= frontier
            comps.append((comp, ext & ~s_mask))
            rest &= ~comp
        for v in bits_of(full & ~s_mask):
            av = adj[v]
            qm = av & ~s_mask
            for comp, ext in comps:
                if av & comp:
                    qm |= ext
            q = (qm & ~(1 << v)).bit_count()
            val = q if q > cur else cur
            if val < ub:
                t_mask = s_mask | (1 << v)
                if val < dp[t_mask]:
                    dp[t_mask] = val
                    choice[t_mask] = v
    if dp[full] >= ub:
        return None
    order = []
    m = full
    while m:
        v = choice[m]
        order.append(v)
        m &= ~(1 << v)
    order.reverse()
    return dp[full], order


def _decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """The clique-at-elimination decomposition of an elimination ordering."""
    n = g.n
    if n == 0:
        return TreeDecomposition((frozenset(),), ())
    adj = list(g.adj)
    remaining = g.full_mask
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    later_nb = []
    for v in order:
        nb = adj[v] & remaining & ~(1 << v)
        bags.append(set_of(nb | (1 << v)))
        for u in bits_of(nb):
            adj[u] |= nb & ~(1 << u)
        remaining &= ~(1 << v)
        later_nb.append(nb)
    edges = []
    for i in range(n - 1):
        nb = later_nb[i]
        if nb:
            edges.append((i, min(pos[w] for w in bits_of(nb))))
        else:
            edges.append((i, i + 1))
    return TreeDecomposition(tuple(bags), tuple(edges))


def exact_treewidth(g: Graph, max_n: int | None = None) -> tuple[int, TreeDecomposition]:
    """Exact treewidth and a witnessing decomposition that validates at it.

    Dynamic programming over vertex subsets (elimination orderings);
    exponential, guarded by a vertex limit (default 20).
    """
    limit = effective_limit(TREEWIDTH_DEFAULT_MAX_N, max_n)
    if g.n > limit:
        raise ScaleError("exact_treewidth", g.n, limit)
    if g.n == 0:
        return -1, TreeDecomposition((frozenset(),), ())
    ub, order = _min_fill_order(g)
    if _minor_min_width(g) < ub:
        improved = _treewidth_dp(g, ub)
        if improved is not None:
            value, order = improved
        else:
            value = ub
    else:
        value = ub
    td = _decomposition_from_order(g, order)
    if width(td) != value:  # pragma: no cover - internal consistency
        raise AssertionError("witness width disagrees with computed treewidth")
    return value, td


# -- classical separator-driven construction -----------------------------------


@dataclass(frozen=True)
class ClassicBuildResult:
    """Outcome of the separator-oracle recursion.

    On failure the decomposition is None and ``failing_set`` holds a tracked
    set with no balanced separator of the requested size.  ``tracked_cap`` is
    the internal 3k+1 constant bounding tracked sets, recorded so the realized
    width bound (tracked_cap + k - 1) is auditable.
    """

    decomposition: Optional[TreeDecomposition]
    failing_set: Optional[frozenset[int]]
    max_sep_size: int
    tracked_cap: int

    @property
    def ok(self) -> bool:
        return self.decomposition is not None


class _OracleFailure(Exception):
    def __init__(self, w_mask: int):
        self.w_mask = w_mask


def _min_balanced_separator_in_region(
    g: Graph, region: int, w_mask: int, max_size: int
) -> Optional[int]:
    """Smallest (size, then lex) subset of the region balancing indicator(w) there."""
    outside = g.full_mask & ~region
    w_size = w_mask.bit_count()
    region_verts = list(bits_of(region))
    for size in range(max_size + 1):
        for combo in combinations(region_verts, size):
            sep = 0
            for c in combo:
                sep |= 1 << c
            balanced = True
            for comp in g.components_masks(outside | sep):
                if 2 * (comp & w_mask).bit_count() > w_size:
                    balanced = False
                    break
            if balanced:
                return sep
    return None


def decomposition_from_separator_oracle(
    g: Graph, max_sep_size: int, max_n: int | None = None
) -> ClassicBuildResult:
    """Recursive construction from balanced separators for tracked indicator sets.

    Maintains a tracked set W, padded to 3k+1 vertices; finds a minimum
    balanced separator S (|S| <= k) for indicator(W) inside the current
    region by exact search; bags W ∪ S; recurses into components with their
    bag-boundary as the new tracked set.  Succeeds iff every encountered
    tracked set admits such a separator; on success the result validates and
    has width at most 4k.
    """
    if max_sep_size < 1:
        raise InputError(f"max_sep_size must be >= 1, got {max_sep_size}")
    limit = effective_limit(CLASSIC_DEFAULT_MAX_N, max_n)
    if g.n > limit:
        raise ScaleError("decomposition_from_separator_oracle", g.n, limit)
    k = max_sep_size
    cap = 3 * k + 1
    adj = g.adj
    bags: list[frozenset[int]] = []
    edges: list[tuple[int, int]] = []

    def build(region: int, w_mask: int) -> int:
        # pad the tracked set with the smallest free region vertices
        need = min(cap, region.bit_count()) - w_mask.bit_count()
        free = region & ~w_mask
        while need > 0:
            low = free & -free
            w_mask |= low
            free ^= low
            need -= 1
        sep = _min_balanced_separator_in_region(g, region, w_mask, k)
        if sep is None:
            raise _OracleFailure(w_mask)
        bag_mask = w_mask | sep
        node = len(bags)
        bags.append(set_of(bag_mask))
        removed = (g.full_mask & ~region) | bag_mask
        for comp in g.components_masks(removed):
            nb = 0
            for w in bits_of(comp):
                nb |= adj[w]
            boundary = nb & bag_mask
            child = build(comp | boundary, boundary)
            edges.append((node, child))
        return node

    try:
        build(g.full_mask, 0)
    except _OracleFailure as fail:
        return ClassicBuildResult(None, set_of(fail.w_mask), k, cap)
    td = TreeDecomposition(tuple(bags), tuple(edges))
    if width(td) > 4 * k:  # pragma: no cover - internal consistency
        raise AssertionError("construction exceeded its width bound")
    return ClassicBuildResult(td, None, k, cap)


# -- exhaustive law sweep -------------------------------------------------------


@dataclass(frozen=True)
class LawSweepReport:
    """Result of sweeping sep <= tw + 1 and tw <= 4*sep over all labelled graphs."""

    max_n: int
    graphs_checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_width_separation_laws(max_n: int = 6) -> LawSweepReport:
    """Exhaustively verify the two width/separation inequalities up to max_n.

    Sweeps every labelled graph on 1..max_n vertices; intended for max_n <= 6
    (33867 graphs).
    """
    from .graph import all_labelled_graphs

    checked = 0
    violations: list[str] = []
    for n in range(1, max_n + 1):
        for g in all_labelled_graphs(n):
            checked += 1
            sep = separation_number_indicator(g, max_n=n)
            tw, _ = exact_treewidth(g, max_n=n)
            if sep > tw + 1:
                violations.append(f"sep>tw+1 on n={n} edges={g.edges()} sep={sep} tw={tw}")
            if tw > 4 * sep:
                violations.append(f"tw>4*sep on n={n} edges={g.edges()} sep={sep} tw={tw}")
    return LawSweepReport(max_n, checked, tuple(violations))
