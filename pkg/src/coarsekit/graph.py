"""Immutable simple graphs on dense integer vertex ids, with exact metric ops.

Adjacency is stored as one Python-int bitmask per vertex, which keeps the
exact searches elsewhere in the toolkit (independence, separators, treewidth)
fast without any third-party dependency.  All operations are pure and iterate
vertices in ascending id order, so every downstream construction is
reproducible byte for byte.
"""

from __future__ import annotations

import heapq
import random as _random
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, ParseError

INFINITE = float("inf")  # explicit marker for disconnected pairs


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits_of(mask))


class Graph:
    """A finite simple graph with vertices 0..n-1.

    Instances are immutable; no self-loops or parallel edges can exist by
    construction.  Equality is vertex-identical (same n, same edge set).
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Trusted constructor from a prebuilt symmetric adjacency tuple."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for d in bits_of(rest):
                out.append((u, u + 1 + d))
        return out

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} outside 0..{self.n - 1}")

    def _check_subset(self, vs: Iterable[int]) -> int:
        mask = 0
        for v in vs:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return set_of(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    # -- metric operations --------------------------------------------------

    def distance(self, u: int, v: int):
        """Shortest-path edge count between u and v, or INFINITE."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        adj = self.adj
        seen = 1 << u
        frontier = seen
        target = 1 << v
        d = 0
        while frontier:
            d += 1
            grow = 0
            for w in bits_of(frontier):
                grow |= adj[w]
            frontier = grow & ~seen
            if frontier & target:
                return d
            seen |= frontier
        return INFINITE

    def distances_from(self, u: int) -> list:
        """BFS distances from u to every vertex (INFINITE where unreachable)."""
        self._check_vertex(u)
        dist = [INFINITE] * self.n
        dist[u] = 0
        adj = self.adj
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            grow = 0
            for w in bits_of(frontier):
                grow |= adj[w]
            frontier = grow & ~seen
            for w in bits_of(frontier):
                dist[w] = d
            seen |= frontier
        return dist

    def ball_mask(self, sources: int, r: int, allowed: int | None = None) -> int:
        """Vertices within distance r of ``sources``, as a bitmask.

        With ``allowed`` set, distances are taken in the induced subgraph on
        that mask; sources outside it contribute nothing.
        """
        if allowed is None:
            allowed = self.full_mask
        reached = sources & allowed
        adj = self.adj
        frontier = reached
        for _ in range(r):
            if not frontier:
                break
            grow = 0
            for w in bits_of(frontier):
                grow |= adj[w]
            frontier = grow & allowed & ~reached
            reached |= frontier
        return reached

    def ball(self, centres: Iterable[int], r: int) -> frozenset[int]:
        """Closed r-ball around a vertex set, in whole-graph distances."""
        if r < 0:
            raise InputError(f"radius must be nonnegative, got {r}")
        return set_of(self.ball_mask(self._check_subset(centres), r))

    def components_masks(self, removed: int = 0) -> list[int]:
        """Connected components of the graph minus ``removed``, as bitmasks.

        Ordered by minimum vertex id, which makes every consumer deterministic.
        """
        adj = self.adj
        rest = self.full_mask & ~removed
        comps = []
        while rest:
            start = rest & -rest
            comp = start
            frontier = start
            while frontier:
                grow = 0
                for w in bits_of(frontier):
                    grow |= adj[w]
                frontier = grow & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        return [set_of(c) for c in self.components_masks(self._check_subset(removed))]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components_masks()) == 1

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph plus the id-translation map (old id -> new id).

        New ids follow ascending old-id order, so the inverse map is simply
        ``sorted(keep)`` indexed by new id; certificates computed in the
        subgraph can be lifted back through it.
        """
        keep_mask = self._check_subset(keep)
        old_ids = list(bits_of(keep_mask))
        to_new = {old: new for new, old in enumerate(old_ids)}
        adj = []
        for old in old_ids:
            row = 0
            for w in bits_of(self.adj[old] & keep_mask):
                row |= 1 << to_new[w]
            adj.append(row)
        return Graph._from_adj(len(old_ids), tuple(adj)), to_new

    def anti_complete(self, x: Iterable[int], y: Iterable[int]) -> bool:
        """True iff x and y are disjoint and no edge joins them."""
        xm = self._check_subset(x)
        ym = self._check_subset(y)
        if xm & ym:
            return False
        return all(not (self.adj[v] & ym) for v in bits_of(xm))


# -- transformations ---------------------------------------------------------


def two_subdivision(h: Graph) -> tuple[Graph, frozenset[int]]:
    """Replace every edge of h by a path of length 3; report the original ids.

    Original vertices keep their ids 0..n-1 (the high-degree side in dense
    inputs); each edge (u, v) with u < v gains two fresh vertices w1, w2 with
    u-w1, w1-w2, w2-v.  The result has n + 2m vertices and 3m edges.
    """
    n = h.n
    edges = h.edges()
    adj = [0] * (n + 2 * len(edges))
    for i, (u, v) in enumerate(edges):
        w1 = n + 2 * i
        w2 = n + 2 * i + 1
        adj[u] |= 1 << w1
        adj[w1] |= (1 << u) | (1 << w2)
        adj[w2] |= (1 << w1) | (1 << v)
        adj[v] |= 1 << w2
    return Graph._from_adj(n + 2 * len(edges), tuple(adj)), frozenset(range(n))


def is_biclique_free(g: Graph, t: int) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """Exact test for induced-K_{t,t}-freeness.

    Returns (True, None) when no induced complete bipartite subgraph with
    independent parts of size t exists, else (False, (side_a, side_b)).
    Enumerates independent t-subsets and searches their common neighborhood;
    exponential, intended for n <= ~40 and t <= 3.
    """
    if t < 1:
        raise InputError(f"biclique parameter must be >= 1, got {t}")
    adj = g.adj
    verts = range(g.n)

    def independent(vs: tuple[int, ...]) -> bool:
        m = mask_of(vs)
        return all(not (adj[v] & m) for v in vs)

    for a in combinations(verts, t):
        if not independent(a):
            continue
        common = g.full_mask
        for v in a:
            common &= adj[v]
        common &= ~mask_of(a)
        if common.bit_count() < t:
            continue
        for b in combinations(sorted(bits_of(common)), t):
            if independent(b):
                return False, (frozenset(a), frozenset(b))
    return True, None


# -- generators ---------------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_adj(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def grid(a: int, b: int) -> Graph:
    edges = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                edges.append((v, v + 1))
            if r + 1 < a:
                edges.append((v, v + b))
    return Graph(a * b, edges)


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); identical output for identical seed."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must be in [0,1], got {p}")
    rng = _random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a seeded Pruefer sequence."""
    if n <= 0:
        raise InputError(f"tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = _random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Random connected graph: a random spanning tree plus extra edges at rate p."""
    tree = random_tree(n, seed)
    rng = _random.Random(seed ^ 0x5EED)
    adj = list(tree.adj)
    for u in range(n):
        for v in range(u + 1, n):
            if not (adj[u] >> v & 1) and rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph._from_adj(n, tuple(adj))


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on n vertices, by ascending edge-set mask."""
    pairs = list(combinations(range(n), 2))
    for picks in range(1 << len(pairs)):
        adj = [0] * n
        rest = picks
        while rest:
            low = rest & -rest
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rest ^= low
        yield Graph._from_adj(n, tuple(adj))


# -- file formats --------------------------------------------------------------


def emit_edgelist(g: Graph) -> str:
    """Edge-list text: "n m" header, then one "u v" line per edge, 0-indexed."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty edge-list input", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"header must hold two integers, got {lines[0]!r}", line=1)
    if n < 0 or m < 0:
        raise ParseError("header counts must be nonnegative", line=1)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}", line=len(lines))
    adj = [0] * n
    seen = set()
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {line!r}", line=i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"edge line must hold two integers, got {line!r}", line=i)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) outside 0..{n - 1}", line=i)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=i)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u},{v})", line=i)
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._from_adj(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Standard graph6 encoding (printable bytes 63..126, no format header)."""
    n = g.n
    if n > 68719476735:
        raise InputError("graph too large for graph6")
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)]
    bits = []
    for v in range(1, n):
        col = g.adj[v]
        bits.extend((col >> u) & 1 for u in range(v))
    body = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 input", line=1)
    data = []
    for i, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", line=1, offset=i)
        data.append(code - 63)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise ParseError("truncated graph6 size header", line=1, offset=len(s))
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 body holds {len(body)} bytes, expected {need} for n={n}",
            line=1,
            offset=len(s),
        )
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (body[idx // 6] >> (5 - idx % 6)) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph._from_adj(n, tuple(adj))
