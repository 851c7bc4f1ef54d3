"""
Mixed-integer instances of infinite split rank
==============================================

A certificate (F, L) turns into a mixed-integer polyhedron of infinite
split rank: send L onto the last coordinates, project, and lift a relative
interior point of F by one unit along each continuous coordinate.
"""
from fractions import Fraction

from splitrank import Polyhedron, Subspace, face, mi_infinite_rank_check, prop72_construct
from splitrank.builtins import builtin
from splitrank.cuts import ClosureBudget, mixed_hull, rank_budgeted
from splitrank.polyhedra import barycenter

T = builtin("triangle3d")
inst = prop72_construct(T, face(T), Subspace([(0, 0, 1)]), xbar=(Fraction(1, 2), Fraction(1, 2), 0))
print("k =", inst.k, "vertices:", [tuple(str(x) for x in v) for v in inst.Q.vertices])
print(mi_infinite_rank_check(inst.Q, inst.k, inst.c, inst.delta))

# Budgeted closures keep shrinking the apex without ever reaching the hull.
target = mixed_hull(inst.Q, inst.k)
r = rank_budgeted(inst.Q, ClosureBudget(norm_bound=2, max_rounds=5, mixed_k=inst.k), target=target)
print(r.status, "apex heights:", [str(max(v[-1] for v in P.vertices)) for P in r.trajectory])

# For the five-vertex polytope the analogous lift has finite split rank:
# no facet inequality admits a qualifying face.
P = builtin("sec7-polytope")
xb = barycenter(P)
Q = Polyhedron.from_vrep(list(P.vertices) + [(xb[0], xb[1], xb[2] + 2)])
for a, b in P.inequalities:
    print(a, "<=", b, mi_infinite_rank_check(Q, 2, a, b).infinite)
