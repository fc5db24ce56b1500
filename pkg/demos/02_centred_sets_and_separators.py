"""Centred sets, balanced separators, and the subdivided-clique obstruction.

A set is (k, r)-centred when it fits inside k closed r-balls; a separator is
balanced for a weighting when every component it leaves behind carries at
most half the total weight.  The interesting graphs are the ones where no
small ball family can balance anything: the 2-subdivision of a clique is the
canonical obstruction, and this script reproduces it exhaustively.
"""

import coarsekit as ck

# -- centred sets ----------------------------------------------------------------

g = ck.path(10)
k, cert = ck.centre_number(g, set(range(10)), 1)
print(f"P_10 needs {k} radius-1 balls; centres {sorted(cert.centres)}")

# Distances can be ambient or taken inside an induced subgraph; the two modes
# genuinely differ and certificates carry the mode explicitly.
c6 = ck.cycle(6)
print("C_6, cover {0,2} ambient:", ck.centre_number(c6, {0, 2}, 1)[0])
print("C_6, cover {0,2} induced on {0,2}:", ck.centre_number(c6, {0, 2}, 1, within={0, 2})[0])

# -- balanced separators ------------------------------------------------------------

p5 = ck.path(5)
ones = ck.WeightFunction.all_ones(5)
ok, heaviest = ck.is_balanced(p5, {2}, ones)
print(f"\nmiddle vertex balances P_5: {ok} (heaviest side {sorted(heaviest)})")

witness = ck.find_centred_balanced_separator(p5, ones, k=1, r=0)
print("first centred balanced separator of P_5:", sorted(witness.centres))

# -- the obstruction ------------------------------------------------------------------

sub, branch = ck.two_subdivision(ck.complete(4))
mu = ck.WeightFunction.indicator(sub.n, branch)
print("\nsubdivided K_4, branch set as the weighting:")
print("  single ball balancing it:", ck.find_centred_balanced_separator(sub, mu, 1, 1))

report = ck.check_subdivided_clique_obstruction(1)
print(f"  exhaustive: {report.centre_sets_checked} centre sets, "
      f"{report.balanced_found} balanced")
report = ck.check_subdivided_clique_obstruction(2)
print(f"  and for K_6 subdivided: {report.centre_sets_checked} centre sets, "
      f"{report.balanced_found} balanced")

# Control: without subdividing, a single ball handles K_4 easily.
k4 = ck.complete(4)
print("  unsubdivided K_4 control:",
      ck.find_centred_balanced_separator(k4, ck.WeightFunction.indicator(4, range(4)), 1, 1))

# Whether EVERY indicator weighting has a small centred separator is decidable
# by a 2^n sweep at desk scale.
ok, failing = ck.admits_kr_balanced_separators_indicator(sub, 1, 1)
print(f"\nsubdivided K_4 admits (1,1)-balanced separators: {ok}; "
      f"first failing set {sorted(failing)}")
print("C_6 admits (1,1):", ck.admits_kr_balanced_separators_indicator(ck.cycle(6), 1, 1)[0])
print("C_8 admits (1,1):", ck.admits_kr_balanced_separators_indicator(ck.cycle(8), 1, 1)[0])
