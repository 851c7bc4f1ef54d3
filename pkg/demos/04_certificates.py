"""
Certificates of infinite reverse split rank
===========================================

An integral polytope P has relaxations of arbitrarily large split rank
exactly when some nonempty face F and rational subspace L (not inside the
lineality space of P) satisfy two conditions:

(i)  relint(F + L) is not inside the interior of any split;
(ii) G + L is relatively lattice-free for every face G of P containing F.

``find_certificate`` searches for such a pair within explicit budgets.
"""
from splitrank import Subspace, check_condition_i, check_condition_ii, face, find_certificate, find_cg_certificate
from splitrank.builtins import builtin
from splitrank.polyhedra import face_from_polyhedron

# The triangle in R^3 with L the vertical line.
T = builtin("triangle3d")
cert = find_certificate(T, entry_budget=1, dir_budget=2)
print(cert.to_text())
print("re-verified:", cert.verify())

# The triangle conv{0, e1, e2} in R^4 needs a two-dimensional L.
P = builtin("sec81-triangle4d")
print("one-dimensional L:", find_certificate(P, 2, 2, max_dim=1))
cert = find_certificate(P, 2, 2)
print("two-dimensional L:", cert.subspace.basis)
print("F + L is a face of P + L:", cert.face_plus_subspace_is_face())

# The choice of face matters: with F = P condition (i) fails, with the face
# x1 = 1 both conditions hold.
P = builtin("sec82-polytope4d")
L = Subspace([(0, 0, 0, 1)])
print("F = P:", check_condition_i(face(P), L))
F1 = face_from_polyhedron(P, P.intersect(equalities=[((1, 0, 0, 0), 1)]))
print("F = {x1 = 1}:", check_condition_i(F1, L).holds, check_condition_ii(P, F1, L).holds)

# The segment conv{(0,0),(0,1)} has no split certificate, but a single
# direction makes it lattice-free, which is the weaker CG condition.
S = builtin("zero-one-segment")
print("split certificate:", find_certificate(S, 2, 2))
print("CG direction:", find_cg_certificate(S, 2))
