"""Brute-force reference computations used to check the library.

Nothing here calls into splitrank's conversion or lattice code: vertices and
facets come from exhaustive subset enumeration with sympy linear algebra,
integer points from scanning a bounding box.
"""
import itertools
import math
import random
from fractions import Fraction

import sympy


def _solve(rows, rhs):
    """Unique solution of a square system or None."""
    M = sympy.Matrix(rows)
    if M.det() == 0:
        return None
    x = M.LUsolve(sympy.Matrix(rhs))
    return tuple(Fraction(int(c.p), int(c.q)) for c in x)


def _dot(a, x):
    return sum(Fraction(u) * Fraction(v) for u, v in zip(a, x))


def _primitive(v):
    den = 1
    for c in v:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    w = [int(Fraction(c) * den) for c in v]
    g = 0
    for c in w:
        g = math.gcd(g, c)
    return tuple(c // g for c in w) if g else tuple(w)


def vertices_from_hrep(ineqs, n):
    """Vertices of {a.x <= b} by solving every n-subset of tight rows."""
    out = set()
    for rows in itertools.combinations(ineqs, n):
        x = _solve([list(a) for a, _ in rows], [b for _, b in rows])
        if x is None:
            continue
        if all(_dot(a, x) <= b for a, b in ineqs):
            out.add(x)
    return out


def facets_from_vertices(verts):
    """Facets (primitive a, b) with a.x <= b of a full-dimensional polytope."""
    verts = [tuple(Fraction(c) for c in v) for v in verts]
    n = len(verts[0])
    out = set()
    for sub in itertools.combinations(verts, n):
        diffs = sympy.Matrix([[c - d for c, d in zip(v, sub[0])] for v in sub[1:]]) if n > 1 else None
        if n == 1:
            normal = (1,)
        else:
            ns = diffs.nullspace()
            if len(ns) != 1:
                continue
            normal = _primitive([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in ns[0]])
        vals = [_dot(normal, v) for v in verts]
        b = _dot(normal, sub[0])
        if all(t <= b for t in vals):
            a = normal
        elif all(t >= b for t in vals):
            a, b = tuple(-c for c in normal), -b
        else:
            continue
        on = [v for v, t in zip(verts, vals) if t == _dot(normal, sub[0])]
        # a facet needs n affinely independent points on it
        if sympy.Matrix([[c - d for c, d in zip(v, on[0])] for v in on[1:]] or [[0] * n]).rank() == n - 1:
            out.add((a, b))
    return out


def bounding_box(verts):
    n = len(verts[0])
    lo = [math.floor(min(v[i] for v in verts)) for i in range(n)]
    hi = [math.ceil(max(v[i] for v in verts)) for i in range(n)]
    return lo, hi


def box_points(verts, pad=0):
    lo, hi = bounding_box(verts)
    return itertools.product(*[range(a - pad, b + pad + 1) for a, b in zip(lo, hi)])


def integer_points(P, pad=0):
    """Integer points of a bounded P by scanning the box around its vertices."""
    if P.is_empty():
        return []
    return sorted(z for z in box_points(P.vertices, pad) if P.contains(z))


def relint_points(P, pad=0):
    from splitrank import relint_contains
    if P.is_empty():
        return []
    return sorted(z for z in box_points(P.vertices, pad) if relint_contains(P, z))


# ---------------------------------------------------------------------------
# random corpus


def random_rational(rng, lo=-3, hi=3, maxden=4):
    q = rng.randint(1, maxden)
    return Fraction(rng.randint(lo * q, hi * q), q)


def random_points(rng, n, k, lo=-3, hi=3, maxden=4):
    return [tuple(random_rational(rng, lo, hi, maxden) for _ in range(n)) for _ in range(k)]


def random_polytope(rng, n=None, k=None, lo=-3, hi=3, maxden=4):
    from splitrank import Polyhedron
    if n is None:
        n = rng.choice([1, 2, 2, 3, 3, 4])
    if k is None:
        k = rng.randint(1, n + 3)
    return Polyhedron.from_vrep(random_points(rng, n, k, lo, hi, maxden), n=n)


def corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_polytope(rng, **kw) for _ in range(count)]


def random_unimodular(rng, n, steps=4, entry=2):
    """Product of elementary integer row operations plus a shift."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-entry, entry)
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]
    if rng.random() < 0.5:
        p = list(range(n))
        rng.shuffle(p)
        U = [U[i] for i in p]
    if rng.random() < 0.5:
        U[0] = [-x for x in U[0]]
    v = [rng.randint(-2, 2) for _ in range(n)]
    return U, v
