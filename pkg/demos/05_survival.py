"""
Two points that survive one round of split cuts
===============================================

Q_F^lambda is the hull of F and the points xbar +- lambda v.  For every
split S, the cut conv(Q_F^lambda minus int S) still contains
xbar +- min(lambda - 1, lambda r / (2 (r + R))) v, where r and R are the
inner and outer radii of F around xbar.  The check compares squares, so it
is exact even though r and R are irrational.
"""
from splitrank import enumerate_effective_splits, make_QF_lambda
from splitrank.builtins import builtin
from splitrank.polyhedra import barycenter
from splitrank.reverse import inner_radius2, outer_radius2, survival_check

T = builtin("triangle3d")
xbar = barycenter(T)
print("xbar", [str(x) for x in xbar], "r^2 =", inner_radius2(T, xbar), "R^2 =", outer_radius2(T, xbar))

for lam in (4, 16):
    Q = make_QF_lambda(T, xbar, [(0, 0, 1)], lam)
    splits = enumerate_effective_splits(Q, 2)
    ok = all(passed for S in splits for _, _, passed in survival_check(T, xbar, [(0, 0, 1)], lam, S, Q=Q))
    print("lambda = %d: %d splits with norm bound 2, all keep both points: %s" % (lam, len(splits), ok))
