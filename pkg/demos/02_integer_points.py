"""
Integer points, lattice width and lattice-free sets
===================================================
"""
from fractions import Fraction

from splitrank import (
    Polyhedron,
    Subspace,
    enum_integer_points,
    integer_hull,
    is_relatively_lattice_free,
    lattice_width,
    make_Qt,
    minkowski_sum_subspace,
    near_subspace_point,
)

triangle = Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0)])

# Integer points of the triangle, in lexicographic order.
print(enum_integer_points(triangle))

# Lifting a fractional apex above the triangle adds no integer point, so the
# integer hull of Q_t is the triangle for every t.
for t in (1, 4, 16):
    print("t =", t, "integer hull is the triangle:", integer_hull(make_Qt(t)) == triangle)

# Lattice width within a direction budget, with the attaining direction.
w = lattice_width(Polyhedron.from_vrep([(0, 0), (2, 0), (0, 2)]), 2)
print("width", w.width, "along", w.direction)

# The prism triangle + <e3> has no integer point in its relative interior:
# every integer point has x1 = 0, x2 = 0 or x1 + x2 = 2.
prism = minkowski_sum_subspace(triangle, [(0, 0, 1)])
print("prism lattice-free:", is_relatively_lattice_free(prism))

# A segment of length two has its midpoint as a witness.
print("segment:", is_relatively_lattice_free(Polyhedron.from_vrep([(0, 0), (2, 0)])))

# Integer points close to a rational line.
L = Subspace([(2, 1)])
print("near (1, 1/2):", near_subspace_point(L, (1, Fraction(1, 2)), Fraction(1, 2), 2))
