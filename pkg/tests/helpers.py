"""Independent brute-force oracles used to cross-check the exact solvers.

These deliberately avoid the library's search code: independence by subset
enumeration, treewidth by scanning elimination orderings.  They are the
reference values frozen into the tests.
"""

import random
from itertools import permutations

from coarsekit import Graph


def brute_alpha(g) -> int:
    """Maximum independent set size by 2^n subset enumeration."""
    adj = g.adj
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        rest = mask
        ok = True
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if adj[v] & mask:
                ok = False
                break
        if ok:
            best = size
    return best


def elimination_width(g, order) -> int:
    adj = list(g.adj)
    remaining = (1 << g.n) - 1
    widest = 0
    for v in order:
        nb = adj[v] & remaining & ~(1 << v)
        widest = max(widest, nb.bit_count())
        rest = nb
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            adj[u] |= nb & ~(1 << u)
        remaining &= ~(1 << v)
    return widest


def random_series_parallel(n_target: int, seed: int) -> Graph:
    """Partial-2-tree sample: grow K_2 by subdividing or doubling random edges.

    Subdividing an edge and hanging a new vertex on an edge's endpoints both
    preserve treewidth <= 2, so every sample is series-parallel.
    """
    rng = random.Random(seed)
    edges = {(0, 1)}
    n = 2
    while n < n_target:
        u, v = rng.choice(sorted(edges))
        w = n
        n += 1
        if rng.random() < 0.5:
            edges.remove((u, v))
            edges.add((min(u, w), max(u, w)))
            edges.add((min(v, w), max(v, w)))
        else:
            edges.add((min(u, w), max(u, w)))
            edges.add((min(v, w), max(v, w)))
    return Graph(n, sorted(edges))


def brute_treewidth(g) -> int:
    """Minimum elimination width over all n! orderings."""
    if g.n == 0:
        return -1
    best = g.n - 1
    for order in permutations(range(g.n)):
        adj = list(g.adj)
        remaining = (1 << g.n) - 1
        widest = 0
        for v in order:
            nb = adj[v] & remaining & ~(1 << v)
            if nb.bit_count() > widest:
                widest = nb.bit_count()
                if widest >= best:
                    break
            rest = nb
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                adj[u] |= nb & ~(1 << u)
            remaining &= ~(1 << v)
        else:
            best = widest
    return best
