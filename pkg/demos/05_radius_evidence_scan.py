"""Radius-1 versus radius-2 evidence, and the quasi-isometry checker.

The builder produces bags covered by radius-2 balls.  Whether radius 1 would
always suffice is open; the scan collects per-bag radius-1 centre numbers
next to the realized radius-2 counts so the gap is visible on a corpus.
"""

from fractions import Fraction

import coarsekit as ck

rows = ck.scan_corpus(ck.builtin_corpus("trees-cycles"), k=1)
print(",".join(ck.SCAN_FIELDS))
for row in rows:
    print(",".join(str(row[f]) for f in ck.SCAN_FIELDS))

gap = [
    (row["graph"], row["realized_k_r2"], row["max_bag_r1_centres"])
    for row in rows
    if row["admits"] == "true" and row["max_bag_r1_centres"] > row["realized_k_r2"]
]
print("\nbags where radius 1 needs strictly more centres than radius 2:")
for name, r2, r1 in gap:
    print(f"  {name}: radius-2 {r2}, radius-1 {r1}")

# Quasi-isometry: the coarse notion of "same global shape", checked exactly.
g = ck.grid(2, 6)
print("\nidentity map on a grid at q=1:",
      ck.verify_quasi_isometry(g, g, list(range(g.n)), 1))

# Collapsing a long path to a point distorts distances beyond any fixed q.
violation = ck.verify_quasi_isometry(ck.path(10), ck.complete(1), [0] * 10, 2)
print("P_10 collapsed to a point at q=2:", violation)

# The arithmetic is exact rational: q = 2 tolerates distance 4, not 5.
print("P_5 collapsed, q=2:", ck.verify_quasi_isometry(ck.path(5), ck.complete(1), [0] * 5, 2))
print("P_6 collapsed, q=5/2:",
      ck.verify_quasi_isometry(ck.path(6), ck.complete(1), [0] * 6, Fraction(5, 2)))
