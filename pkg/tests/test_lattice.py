import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import integer_points, random_points, random_unimodular, relint_points
from splitrank import (
    Polyhedron,
    PolyhedronError,
    Subspace,
    UnimodularMap,
    enum_integer_points,
    integer_hull,
    is_relatively_lattice_free,
    lattice_width,
    minkowski_sum_subspace,
    near_subspace_point,
    relint_contains,
)
from splitrank.lattice import dist2_to_subspace, span_key, width_along

F = Fraction
TRIANGLE = Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0)])


@st.composite
def polytopes(draw, max_n=3, max_k=5):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    n = draw(st.integers(1, max_n))
    return Polyhedron.from_vrep(random_points(rng, n, draw(st.integers(1, max_k))), n=n)


def test_subspace_canonical():
    a = Subspace([(2, 4, 0), (0, 0, 3)])
    b = Subspace([(1, 2, 5), (0, 0, -1)])
    assert a == b
    assert a.basis == ((1, 2, 0), (0, 0, 1))
    assert a.dim == 2
    assert a.contains((3, 6, 7)) and not a.contains((1, 0, 0))
    assert Subspace([(1, 0, 0)]).issubspace(Subspace([(1, 0, 0), (0, 1, 0)]))
    assert (Subspace([(1, 0)]) + Subspace([(0, 1)])).dim == 2
    assert Subspace([], 3).dim == 0
    with pytest.raises(ValueError):
        Subspace([])


def test_subspace_order():
    keys = sorted([Subspace([(1, 1, 0)]), Subspace([(0, 0, 1)]), Subspace([(1, 0, 0), (0, 1, 0)]),
                   Subspace([(1, 0, 0)])], key=Subspace.sort_key)
    assert [s.basis for s in keys] == [((1, 0, 0),), ((0, 0, 1),), ((1, 1, 0),), ((1, 0, 0), (0, 1, 0))]


def test_span_key():
    assert span_key([(1, 0, 2), (0, 1, 0)], 3) == span_key([(1, 1, 2), (2, 1, 4)], 3)
    assert span_key([(1, 0, 2), (2, 0, 4)], 3) == (0, 0, 0)


def test_enumeration_examples():
    sq = Polyhedron.from_vrep([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert enum_integer_points(sq) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    tri = Polyhedron.from_vrep([(0, 0), (2, 0), (0, 2)])
    assert len(enum_integer_points(tri)) == 6
    cell = Polyhedron.from_vrep([(F(1, 4), F(1, 4)), (F(3, 4), F(1, 4)), (F(1, 2), F(3, 4))])
    assert enum_integer_points(cell) == []
    with pytest.raises(PolyhedronError, match="boundedness"):
        enum_integer_points(Polyhedron.from_vrep([(0, 0)], rays=[(1, 0)]))


def test_integer_hull_examples():
    from splitrank import make_Qt
    for t in (1, 2, 5):
        assert integer_hull(make_Qt(t)) == TRIANGLE
    assert integer_hull(TRIANGLE) == TRIANGLE
    P = Polyhedron.from_vrep([(F(1, 2), 0), (F(3, 2), 0), (1, F(1, 2))])
    assert integer_hull(P) == Polyhedron.from_vrep([(1, 0)])
    assert integer_hull(Polyhedron.from_vrep([(F(1, 2),)])).is_empty()


@settings(max_examples=50, deadline=None)
@given(polytopes())
def test_enumeration_against_box_scan(P):
    assert enum_integer_points(P) == integer_points(P)


@settings(max_examples=40, deadline=None)
@given(polytopes(), st.integers(0, 10 ** 6))
def test_integer_hull_properties(P, seed):
    H = integer_hull(P)
    assert H <= P
    assert integer_hull(H) == H
    assert integer_points(H) == integer_points(P)
    # monotone: grow P by an extra point
    rng = random.Random(seed)
    P2 = Polyhedron.from_vrep(list(P.vertices) + random_points(rng, P.n, 1), n=P.n)
    assert H <= integer_hull(P2)


def test_width_examples():
    sq = Polyhedron.from_vrep([(0, 0), (1, 0), (0, 1), (1, 1)])
    w = lattice_width(sq, 1)
    assert (w.width, w.direction, w.budget) == (1, (1, 0), 1)
    tri = Polyhedron.from_vrep([(0, 0), (2, 0), (0, 2)])
    assert lattice_width(tri, 2).width == 2
    for c in [(1, 0), (0, 1), (1, 1)]:
        assert width_along(tri, c) == 2
    prism = minkowski_sum_subspace(TRIANGLE, [(0, 0, 1)])
    w = lattice_width(prism, 1)
    assert (w.width, w.direction) == (2, (1, 0, 0))
    ray = Polyhedron.from_vrep([(0,)], rays=[(1,)])
    assert lattice_width(ray, 2).infinite


@settings(max_examples=40, deadline=None)
@given(polytopes(3, 5))
def test_width_antitone_in_budget(P):
    w1, w2 = lattice_width(P, 1), lattice_width(P, 2)
    assert w2.width <= w1.width
    assert width_along(P, w2.direction) == w2.width


@settings(max_examples=30, deadline=None)
@given(polytopes(2, 4), st.integers(0, 10 ** 6))
def test_width_unimodular_invariance(P, seed):
    rng = random.Random(seed)
    U, v = random_unimodular(rng, P.n, steps=2, entry=1)
    u = UnimodularMap(tuple(map(tuple, U)), tuple(v))
    Q = P.map(u)
    wp = lattice_width(P, 2)
    # the optimal direction of P maps to a'=aU^-1 on u(P); with that budget u(P) is no wider
    a2 = u.transform_normal(wp.direction)
    wq = lattice_width(Q, max(abs(x) for x in a2))
    assert wq.width <= wp.width
    assert width_along(Q, a2) == wp.width
    # and back again
    a1 = u.inverse().transform_normal(wq.direction)
    assert lattice_width(P, max(abs(x) for x in a1)).width <= wq.width


def test_lattice_free_examples():
    prism = minkowski_sum_subspace(TRIANGLE, [(0, 0, 1)])
    assert is_relatively_lattice_free(prism) == (True, None)
    seg = Polyhedron.from_vrep([(0, 0), (2, 0)])
    assert is_relatively_lattice_free(seg) == (False, (1, 0))
    P82 = Polyhedron.from_vrep([(0, 0, 0, 0), (1, 0, 0, 0), (1, 2, 0, 0), (1, 0, 2, 0)])
    assert is_relatively_lattice_free(minkowski_sum_subspace(P82, [(0, 0, 0, 1)]))[0]
    with pytest.raises(PolyhedronError):
        is_relatively_lattice_free(Polyhedron.empty(2))


@settings(max_examples=80, deadline=None)
@given(polytopes(3, 5))
def test_lattice_free_against_brute_force(P):
    free, w = is_relatively_lattice_free(P)
    pts = relint_points(P)
    assert free == (not pts)
    if not free:
        assert w in pts


@settings(max_examples=40, deadline=None)
@given(polytopes(3, 4), st.integers(0, 10 ** 6))
def test_lattice_free_unimodular_invariance(P, seed):
    rng = random.Random(seed)
    U, v = random_unimodular(rng, P.n)
    u = UnimodularMap(tuple(map(tuple, U)), tuple(v))
    assert is_relatively_lattice_free(P)[0] == is_relatively_lattice_free(P.map(u))[0]


@settings(max_examples=40, deadline=None)
@given(polytopes(3, 3), st.integers(0, 10 ** 6))
def test_unbounded_witness_in_relint(P, seed):
    rng = random.Random(seed)
    ray = tuple(rng.randint(-1, 2) for _ in range(P.n))
    if not any(ray):
        return
    Q = Polyhedron.from_vrep(P.vertices, rays=[ray], n=P.n)
    free, w = is_relatively_lattice_free(Q)
    if not free:
        assert relint_contains(Q, w)


def test_near_subspace_examples():
    assert near_subspace_point(Subspace([(1, 0)]), (5, 0), 0, 1) == (5, 0)
    assert near_subspace_point(Subspace([(1, 2)]), (3, 6), 0, 1) == (3, 6)
    L = Subspace([(2, 1)])
    y = near_subspace_point(L, (1, F(1, 2)), F(1, 2), 2)
    assert y is not None and dist2_to_subspace(L, y) <= F(1, 4)
    # brute force: y is the closest qualifying point in the box
    best = min((sum((a - b) ** 2 for a, b in zip(z, (1, F(1, 2)))), z)
               for z in itertools.product(range(-1, 4), range(-2, 3))
               if dist2_to_subspace(L, z) <= F(1, 4))
    assert y == best[1]


def test_dist2():
    assert dist2_to_subspace(Subspace([(1, 0)]), (3, 4)) == 16
    assert dist2_to_subspace(Subspace([(1, 1)]), (1, 0)) == F(1, 2)
    assert dist2_to_subspace(Subspace([], 2), (1, 1)) == 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.fractions(0, 2, max_denominator=4),
       st.integers(1, 2))
def test_near_subspace_distance(v, delta, radius):
    if not any(v):
        return
    L = Subspace([v])
    x = tuple(F(c, 2) for c in v)
    y = near_subspace_point(L, x, delta, radius)
    if y is not None:
        assert dist2_to_subspace(L, y) <= delta * delta
        assert max(abs(a - b) for a, b in zip(y, x)) <= radius
