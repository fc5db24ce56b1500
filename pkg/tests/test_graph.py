import random

import pytest

from coarsekit import (
    Graph,
    INFINITE,
    InputError,
    ParseError,
    complete,
    complete_bipartite,
    cycle,
    emit_edgelist,
    emit_graph6,
    grid,
    is_biclique_free,
    parse_edgelist,
    parse_graph6,
    path,
    random_graph,
    random_tree,
    two_subdivision,
)


def test_distance_path_metric():
    g = path(3)
    assert g.distance(0, 2) == 2
    assert g.distance(2, 0) == 2
    assert g.distance(1, 1) == 0


def test_distance_disconnected_is_infinite():
    g = Graph(4, [(0, 1), (2, 3)])
    assert g.distance(0, 3) == INFINITE
    assert g.distance(0, 3) > 10**9  # marker compares above any real distance


def test_distance_rejects_bad_vertex():
    with pytest.raises(InputError):
        path(3).distance(0, 7)


def test_ball_basics():
    g = path(3)
    assert g.ball({0}, 1) == {0, 1}
    assert g.ball({0}, 2) == {0, 1, 2}
    assert g.ball({0, 2}, 0) == {0, 2}


def test_ball_monotone_and_unions():
    rng = random.Random(5)
    for trial in range(20):
        g = random_graph(9, 0.3, seed=trial)
        centres = {v for v in range(9) if rng.random() < 0.4}
        for r in range(3):
            assert g.ball(centres, r) <= g.ball(centres, r + 1)
        union = frozenset()
        for c in centres:
            union |= g.ball({c}, 2)
        assert g.ball(centres, 2) == union


def test_components_cut_vertex():
    g = path(3)
    assert g.components({1}) == [frozenset({0}), frozenset({2})]
    assert g.components() == [frozenset({0, 1, 2})]
    assert g.components({0, 1, 2}) == []


def test_components_partition_no_crossing_edges():
    for seed in range(15):
        g = random_graph(10, 0.25, seed=seed)
        removed = frozenset(range(0, 10, 3))
        comps = g.components(removed)
        seen = set()
        for comp in comps:
            assert not comp & seen
            seen |= comp
        assert seen == set(range(10)) - removed
        for a in comps:
            for b in comps:
                if a != b:
                    assert g.anti_complete(a, b)


def test_induced_subgraph():
    g = complete(3)
    sub, to_new = g.induced_subgraph({0, 2})
    assert sub == complete(2)
    assert to_new == {0: 0, 2: 1}

    g = cycle(5)
    sub, _ = g.induced_subgraph({0, 1, 2})
    assert sub == path(3)

    sub, to_new = g.induced_subgraph(range(5))
    assert sub == g
    assert to_new == {v: v for v in range(5)}


def test_anti_complete():
    g = Graph(4, [(0, 1), (2, 3)])
    assert g.anti_complete({0}, {2})
    assert not g.anti_complete({0}, {0, 2})
    assert not g.anti_complete({0}, {1})


def test_two_subdivision_shapes():
    g, branch = two_subdivision(complete(2))
    assert g == path(4) or (g.n == 4 and g.m == 3)
    assert branch == {0, 1}

    g, _ = two_subdivision(complete(3))
    assert (g.n, g.m) == (9, 9)
    assert all(g.degree(v) == 2 for v in range(9))  # C_9

    g, _ = two_subdivision(complete(4))
    assert (g.n, g.m) == (16, 18)


def test_two_subdivision_branch_distance_exactly_three():
    h = complete(5)
    g, branch = two_subdivision(h)
    for u in branch:
        for v in branch:
            if u != v:
                assert g.distance(u, v) == 3


@pytest.mark.parametrize(
    "g,t,free",
    [
        (cycle(4), 2, False),  # C_4 is the biclique itself
        (random_tree(8, 3), 2, True),
        (complete(5), 2, True),  # no independent pair at all
    ],
)
def test_biclique_freeness(g, t, free):
    got, witness = is_biclique_free(g, t)
    assert got is free
    if not free:
        a, b = witness
        assert len(a) == len(b) == t
        for u in a:
            for v in b:
                assert g.has_edge(u, v)
        for side in (a, b):
            for u in side:
                for v in side:
                    assert u == v or not g.has_edge(u, v)


def test_biclique_rejects_t_zero():
    with pytest.raises(InputError):
        is_biclique_free(path(3), 0)


def test_generators():
    assert complete(3) == cycle(3)
    assert grid(1, 4) == path(4)
    k22 = complete_bipartite(2, 2)
    assert (k22.n, k22.m) == (4, 4)
    assert k22.anti_complete({0}, {1}) and k22.anti_complete({2}, {3})
    assert random_graph(12, 0.3, seed=7) == random_graph(12, 0.3, seed=7)
    assert random_graph(12, 0.3, seed=7) != random_graph(12, 0.3, seed=8)
    t = random_tree(9, 4)
    assert t.m == 8 and t.is_connected()


def test_edgelist_roundtrip():
    text = "3 2\n0 1\n1 2\n"
    assert parse_edgelist(text) == path(3)
    assert emit_edgelist(path(3)) == text
    for seed in range(10):
        g = random_graph(11, 0.4, seed=seed)
        assert parse_edgelist(emit_edgelist(g)) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 2\n0 1\n",  # missing edge line
        "3 1\n0 3\n",  # out of range
        "3 1\n1 1\n",  # self loop
        "3 2\n0 1\n1 0\n",  # duplicate
        "3 1\na b\n",
    ],
)
def test_edgelist_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_edgelist(text)


def test_graph6_known_string():
    # "D?{" encodes the 5-vertex star centred at vertex 4
    g = parse_graph6("D?{")
    assert g == Graph(5, [(0, 4), (1, 4), (2, 4), (3, 4)])


def test_graph6_roundtrip_and_cross_format_agreement():
    # the two parsers are independent code paths; they must agree
    for seed in range(40):
        g = random_graph(5, 0.5, seed=seed)
        assert parse_graph6(emit_graph6(g)) == parse_edgelist(emit_edgelist(g))
    for seed in range(10):
        g = random_graph(30, 0.2, seed=seed)
        assert parse_graph6(emit_graph6(g)) == g


def test_graph6_large_n_header():
    g = path(100)
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_rejects_malformed():
    with pytest.raises(ParseError):
        parse_graph6("")
    with pytest.raises(ParseError):
        parse_graph6("D?")  # truncated body
    with pytest.raises(ParseError):
        parse_graph6("D?{{")  # oversized body
    with pytest.raises(ParseError):
        parse_graph6("D?\x1f")  # byte below 63


def test_graph_constructor_validation():
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])
    with pytest.raises(InputError):
        Graph(2, [(1, 1)])
    assert Graph(3, [(0, 1), (1, 0)]).m == 1  # duplicates collapse
