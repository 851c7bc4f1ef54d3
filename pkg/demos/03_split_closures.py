"""
Split closures and budgeted split ranks
=======================================

A budgeted closure intersects the split cuts whose normals have entries at
most ``norm_bound``.  It contains the true split closure, so a budgeted rank
that reaches the integer hull is an upper bound on the true split rank.
"""
from fractions import Fraction

from splitrank import (
    ClosureBudget,
    Split,
    cg_closure_budgeted,
    integer_hull,
    make_Qt,
    rank_budgeted,
    split_closure_budgeted,
    split_cut,
)
from splitrank.reverse import growth_experiment

Q1 = make_Qt(1)

# One split cut removes the apex (1/2, 1/2, 1).
cut = split_cut(Q1, Split((1, 0, 0), 0))
print("apex removed:", not cut.contains((Fraction(1, 2), Fraction(1, 2), 1)))
print("new vertices:", [tuple(str(x) for x in v) for v in cut.vertices])

# Integer hull, split closure, CG closure and Q itself are nested.
H = integer_hull(Q1)
SC = split_closure_budgeted(Q1, 2)
CG = cg_closure_budgeted(Q1, 2)
print("hull <= SC <= CG <= Q:", H <= SC <= CG <= Q1)

# Rounds needed to reach the hull.
r = rank_budgeted(Q1, ClosureBudget(norm_bound=2))
print("rank", r.rank, r.status)

# Raising the apex makes the budgeted rank grow.
for row in growth_experiment([1, 2, 4, 8, 16], norm_bound=2):
    print("t = %-3s rank %s" % (row["t"], row["rank"]))
