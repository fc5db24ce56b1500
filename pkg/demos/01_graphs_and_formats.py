"""Graphs, exact metrics, and the two file formats.

Everything in coarsekit is built on one immutable graph type with dense
integer vertex ids.  This script walks through the metric operations the rest
of the toolkit leans on, then round-trips the two supported formats.
"""

import coarsekit as ck

# A 4x4 grid: vertex r*4+c sits at row r, column c.
g = ck.grid(4, 4)
print(f"grid(4,4): n={g.n}, m={g.m}")
print("distance corner to corner:", g.distance(0, 15))
print("ball of radius 1 around the centre pair {5, 10}:", sorted(g.ball({5, 10}, 1)))

# Distances are infinite across components, as an explicit marker.
h = ck.Graph(4, [(0, 1), (2, 3)])
print("\ntwo disjoint edges, distance(0, 3):", h.distance(0, 3))

# Removing a separator splits the grid; components come back in min-id order.
removed = {1, 5, 9, 13}  # the second column
parts = g.components(removed)
print("\ngrid minus its second column ->", [sorted(p) for p in parts])
print("parts are anti-complete:", g.anti_complete(parts[0], parts[1]))

# The 2-subdivision replaces each edge with a path of length 3.  Original
# vertices keep their ids and end up pairwise at distance 3 when adjacent.
k4 = ck.complete(4)
sub, branch = ck.two_subdivision(k4)
print(f"\nK_4 subdivided: n={sub.n}, m={sub.m}, branch vertices {sorted(branch)}")
print("branch distances:", {(u, v): sub.distance(u, v) for u in (0,) for v in (1, 2, 3)})

# Biclique detection is exact: C_4 is K_{2,2} itself, trees never contain one.
free, witness = ck.is_biclique_free(ck.cycle(4), 2)
print("\nC_4 K_{2,2}-free?", free, "witness:", witness)
print("tree K_{2,2}-free?", ck.is_biclique_free(ck.random_tree(12, 1), 2)[0])

# Formats: an edge list with an "n m" header, and standard graph6.
text = ck.emit_edgelist(ck.path(4))
print("\nedge list for P_4:")
print(text, end="")
print("graph6 for C_5:", ck.emit_graph6(ck.cycle(5)))
roundtrip = ck.parse_graph6(ck.emit_graph6(g))
print("graph6 round-trip is vertex-identical:", roundtrip == g)
