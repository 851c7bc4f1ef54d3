"""
Converting between inequalities and generators
===============================================

Every polyhedron keeps both descriptions.  Inequalities come out in a
canonical form (primitive integer normals, sorted), so two descriptions of
the same set print identically.
"""
from fractions import Fraction

from splitrank import Polyhedron, all_faces, format_polyhedron

# A pyramid over the triangle conv{0, 2e1, 2e2} with apexes above and below.
P = Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, 1), (1, 1, -1)])
print(format_polyhedron(P, "H"))

# Going back from the inequalities recovers the same vertices.
Q = Polyhedron.from_hrep(P.inequalities)
print("same set:", Q == P)
print("vertices:", [tuple(str(x) for x in v) for v in Q.vertices])

# Unbounded sets have rays and lines.
wedge = Polyhedron.from_hrep([((-1, 0), 0), ((0, -1), 0), ((0, 1), 1)])
print("rays:", wedge.rays, "lines:", wedge.lines)
slab = Polyhedron.from_hrep([((0, 1), 1), ((0, -1), 0)])
print("rays:", slab.rays, "lines:", slab.lines)

# Rational data stays exact.
tri = Polyhedron.from_vrep([(Fraction(1, 2), 0), (Fraction(3, 2), 0), (1, Fraction(1, 2))])
print(format_polyhedron(tri, "H"))

# The face lattice of the pyramid: 5 vertices, 8 edges, 5 facets and P itself.
dims = [G.dimension for G in all_faces(P)]
print("faces by dimension:", {d: dims.count(d) for d in sorted(set(dims))})
