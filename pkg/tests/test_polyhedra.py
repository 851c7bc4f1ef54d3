import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import facets_from_vertices, integer_points, random_points, vertices_from_hrep
from splitrank import (
    Polyhedron,
    PolyhedronError,
    dd_convert,
    face,
    faces_containing,
    hull_union,
    minkowski_sum_subspace,
    project_out,
    quotient_lineality,
    recession_and_lineality,
    relint_contains,
)
from splitrank.polyhedra import (
    affine_hull,
    all_faces,
    barycenter,
    embed,
    face_from_polyhedron,
    is_face_of,
    project_onto,
)

F = Fraction
SQUARE_H = [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]


def test_square_h_to_v():
    P = Polyhedron.from_hrep(SQUARE_H)
    assert set(P.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert P.rays == () and P.lines == ()
    assert P.dimension == 2 and P.is_bounded()


def test_redundant_rows_removed():
    P = Polyhedron.from_hrep(SQUARE_H + [((1, 1), 5), ((2, 0), 2)])
    assert set(P.inequalities) == {((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)}


def test_unbounded_ray():
    P = Polyhedron.from_hrep([((-1, 0), 0), ((0, -1), 0), ((0, 1), 1)])
    assert set(P.vertices) == {(0, 0), (0, 1)}
    assert P.rays == ((1, 0),)
    assert not P.is_bounded()


def test_lineality():
    P = Polyhedron.from_hrep([((0, 1), 1), ((0, -1), 0)])
    assert len(P.lines) == 1
    assert P.lines[0] in ((1, 0), (-1, 0))
    assert P.contains((100, F(1, 2)))


def test_empty_and_infeasible():
    P = Polyhedron.from_hrep([((1,), 0), ((-1,), -1)])
    assert P.is_empty()
    assert P.vertices == ()
    assert Polyhedron.empty(3).is_empty()
    with pytest.raises(PolyhedronError):
        barycenter(P)


def test_five_facets():
    P = Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, 1), (1, 1, -1)])
    dd_convert(P)
    assert set(P.inequalities) == {
        ((-1, 0, -1), 0), ((-1, 0, 1), 0), ((0, -1, -1), 0), ((0, -1, 1), 0), ((1, 1, 0), 2)}
    assert P.equalities == ()


def test_lower_dimensional_equalities():
    T = Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0)])
    assert T.equalities == (((0, 0, 1), 0),)
    assert T.dimension == 2
    eqs, d = affine_hull(T)
    assert d == 2 and eqs == T.equalities
    assert set(T.inequalities) == {((-1, 0, 0), 0), ((0, -1, 0), 0), ((1, 1, 0), 2)}


def test_contains_and_relint():
    T = Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0)])
    assert T.contains((1, 1, 0)) and not relint_contains(T, (1, 1, 0))
    assert relint_contains(T, (F(1, 2), F(1, 2), 0))
    assert not T.contains((F(1, 2), F(1, 2), F(1, 3)))


def test_hull_union_example():
    A = Polyhedron.from_vrep([(0, 0)])
    B = Polyhedron.from_vrep([(1, 0)], rays=[(0, 1)])
    H = hull_union(A, B)
    assert set(H.vertices) == {(0, 0), (1, 0)}
    assert H.rays == ((0, 1),)


def test_quotient_lineality_example():
    P = Polyhedron.from_vrep([(0, 0, 0), (1, 0, 0)], lines=[(0, 0, 1)])
    Pq, u = quotient_lineality(P)
    assert Pq.n == 2
    assert set(Pq.vertices) == {(0, 0), (1, 0)}
    assert u.U == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_faces_of_square():
    P = Polyhedron.from_hrep(SQUARE_H)
    faces = all_faces(P)
    dims = sorted(G.dimension for G in faces)
    assert dims == [0, 0, 0, 0, 1, 1, 1, 1, 2]
    v = face_from_polyhedron(P, Polyhedron.from_vrep([(0, 0)]))
    above = faces_containing(P, v)
    assert sorted(G.dimension for G in above) == [0, 1, 1, 2]


def test_face_descriptor_closure():
    P = Polyhedron.from_hrep(SQUARE_H)
    i = P.inequalities.index(((1, 0), 1))
    j = P.inequalities.index(((0, 1), 1))
    G = face(P, [i, j])
    assert G.polyhedron.vertices == ((1, 1),)
    assert face(P, [i]).dimension == 1
    assert face(P).polyhedron == P


def test_is_face_of():
    P = Polyhedron.from_hrep(SQUARE_H)
    assert is_face_of(Polyhedron.from_vrep([(1, 0), (1, 1)]), P)
    assert not is_face_of(Polyhedron.from_vrep([(0, 0), (1, 1)]), P)


def test_projection_and_embedding():
    P = Polyhedron.from_vrep([(0, 0, 0), (1, 2, 3), (2, 0, 1)])
    Q = project_out(P, [2])
    assert set(Q.vertices) == {(0, 0), (1, 2), (2, 0)}
    assert project_onto(P, 1) == Polyhedron.from_vrep([(0,), (2,)])
    assert embed(Q, 3).equalities == (((0, 0, 1), 0),)


def test_minkowski_sum_subspace():
    P = Polyhedron.from_vrep([(0, 0), (1, 0)])
    S = minkowski_sum_subspace(P, [(0, 1)])
    assert len(S.lines) == 1
    assert minkowski_sum_subspace(P, []) == P
    rays, lines = recession_and_lineality(S)
    assert rays == () and lines == S.lines


def test_map_and_translate():
    from splitrank import UnimodularMap
    P = Polyhedron.from_hrep(SQUARE_H)
    u = UnimodularMap(((1, 1), (0, 1)), (1, 0))
    assert set(P.map(u).vertices) == {(1, 0), (2, 0), (2, 1), (3, 1)}
    assert set(P.translate((1, 1)).vertices) == {(1, 1), (2, 1), (1, 2), (2, 2)}


def test_dimension_mismatch():
    with pytest.raises(PolyhedronError):
        Polyhedron.from_vrep([(0, 0), (1, 0, 0)])
    with pytest.raises(PolyhedronError):
        Polyhedron.from_hrep(SQUARE_H).issubset(Polyhedron.empty(3))


def test_floats_rejected():
    with pytest.raises(TypeError):
        Polyhedron.from_vrep([(0.5, 0)])


# ---------------------------------------------------------------------------
# properties


@st.composite
def vpolytopes(draw, max_n=3):
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n + 3))
    return Polyhedron.from_vrep(random_points(rng, n, k), n=n)


@settings(max_examples=60, deadline=None)
@given(vpolytopes())
def test_dd_roundtrip(P):
    # V -> H -> V -> H returns the same set
    Q = Polyhedron.from_hrep(P.inequalities, P.equalities, n=P.n)
    assert set(Q.vertices) == set(P.vertices)
    assert Q.inequalities == P.inequalities and Q.equalities == P.equalities
    assert Q == P


@settings(max_examples=40, deadline=None)
@given(vpolytopes())
def test_dd_against_oracle(P):
    if P.dimension == P.n and P.n >= 1 and len(P.vertices) > P.n:
        assert set(P.inequalities) == facets_from_vertices(P.vertices)
    if P.dimension == P.n:
        ineqs = list(P.inequalities)
        assert vertices_from_hrep(ineqs, P.n) == set(P.vertices)


@settings(max_examples=40, deadline=None)
@given(vpolytopes(), vpolytopes())
def test_hull_union_properties(A, B):
    if A.n != B.n:
        return
    H = hull_union(A, B)
    assert A <= H and B <= H
    assert hull_union(H, A) == H


@settings(max_examples=40, deadline=None)
@given(vpolytopes(3))
def test_projection_vertices(P):
    if P.n < 2:
        return
    Q = project_out(P, [P.n - 1])
    proj = {v[:-1] for v in P.vertices}
    assert set(Q.vertices) <= proj


@settings(max_examples=30, deadline=None)
@given(vpolytopes(3))
def test_faces_containing_closed_under_join(P):
    faces = all_faces(P)
    sets = {G.tight_set for G in faces}
    # join of two faces = the face cut out by the common tight rows
    for G in faces:
        for H in faces:
            assert face(P, G.tight_set & H.tight_set).tight_set in sets
    for G in faces:
        for H in faces_containing(P, G):
            assert G.polyhedron <= H.polyhedron


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_quotient_preserves_integer_points(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 3)
    pts = random_points(rng, n, rng.randint(1, 3))
    line = tuple(rng.randint(-2, 2) for _ in range(n))
    if not any(line):
        line = (1,) + (0,) * (n - 1)
    P = Polyhedron.from_vrep(pts, lines=[line])
    Pq, u = quotient_lineality(P)
    assert Pq.n == n - 1
    # P meets Z^n iff P' meets Z^(n-1); since the line is integral it is
    # enough to scan conv(pts) + [-1, 1] * line
    from splitrank import enum_integer_points
    lhs = bool(enum_integer_points(Pq))
    thick = [tuple(p + s * c for p, c in zip(q, line)) for q in pts for s in (-1, 1)]
    rhs = bool(integer_points(Polyhedron.from_vrep(thick)))
    assert lhs == rhs
