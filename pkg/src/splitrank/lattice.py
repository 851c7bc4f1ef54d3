"""Integer points of polyhedra: enumeration, integer hulls, lattice width,
relative lattice-freeness and integer points close to a subspace."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import NamedTuple, Optional

from .exact import (
    ExactError,
    as_fraction,
    canonical_sign,
    direction_key,
    dot,
    integer_scaling,
    inverse,
    mat_vec,
    primitive,
    primitive_directions,
    saturate,
    solve_diophantine,
    unimodular_to_last,
)
from .polyhedra import (
    Polyhedron,
    PolyhedronError,
    hull_of_generators,
    relint_contains,
)


class Subspace:
    """Rational linear subspace of R^n, stored by the HNF basis of its lattice.

    Two subspaces are equal exactly when their stored bases are equal.
    """

    __slots__ = ("n", "basis")

    def __init__(self, vectors, n=None):
        vectors = [tuple(v) for v in vectors]
        if n is None:
            if not vectors:
                raise ValueError("ambient dimension required for the zero subspace")
            n = len(vectors[0])
        self.n = n
        self.basis = tuple(saturate([v for v in vectors if any(v)], n)) if vectors else ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        if not any(v):
            return True
        return Subspace(list(self.basis) + [tuple(v)], self.n).dim == self.dim

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other):
        return Subspace(list(self.basis) + list(other.basis), self.n)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def sort_key(self):
        """Small dimension first, then short basis vectors."""
        flat = tuple(x for row in self.basis for x in row)
        return (self.dim, direction_key(flat) if flat else ())

    def __repr__(self):
        return "Subspace(%r, n=%d)" % (list(self.basis), self.n)


def _int_det(M):
    """Determinant of a small integer matrix (fraction-free elimination)."""
    M = [list(r) for r in M]
    k = len(M)
    sign, prev = 1, 1
    for i in range(k):
        p = next((r for r in range(i, k) if M[r][i]), None)
        if p is None:
            return 0
        if p != i:
            M[i], M[p] = M[p], M[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) // prev
        prev = M[i][i]
    return sign * M[k - 1][k - 1]


def span_key(rows, n):
    """Plucker coordinates of the span of integer rows, normalized.

    Equal for two independent families exactly when they span the same
    subspace; all zeros when the rows are dependent.
    """
    k = len(rows)
    minors = tuple(_int_det([[r[c] for c in cols] for r in rows])
                   for cols in itertools.combinations(range(n), k))
    if not any(minors):
        return minors
    return canonical_sign(primitive(minors))


class WidthResult(NamedTuple):
    width: Optional[Fraction]  # None when infinite
    direction: Optional[tuple]
    budget: int

    @property
    def infinite(self) -> bool:
        return self.width is None


# ---------------------------------------------------------------------------
# enumeration


def _coord_range(P, i):
    vals = [v[i] for v in P.vertices]
    return math.ceil(min(vals)), math.floor(max(vals))


def enum_integer_points(P: Polyhedron) -> list:
    """All integer points of a bounded polyhedron, in lexicographic order."""
    if P.is_empty():
        return []
    if not P.is_bounded():
        raise PolyhedronError("enumeration requires boundedness")
    out = []
    _enum(P, 0, (), out)
    return out


def _enum(P, i, prefix, out):
    n = P.n
    lo, hi = _coord_range(P, i)
    if lo > hi:
        return
    if i == n - 1:
        for z in range(lo, hi + 1):
            out.append(prefix + (z,))
        return
    if lo == hi and all(v[i] == lo for v in P.vertices):
        _enum(P, i + 1, prefix + (lo,), out)
        return
    e = tuple(int(j == i) for j in range(n))
    for z in range(lo, hi + 1):
        S = P.intersect(equalities=[(e, z)])
        if not S.is_empty():
            _enum(S, i + 1, prefix + (z,), out)


def integer_hull(P: Polyhedron) -> Polyhedron:
    pts = enum_integer_points(P)
    if not pts:
        return Polyhedron.empty(P.n)
    return Polyhedron.from_vrep(pts, n=P.n)


def has_integer_point(P: Polyhedron) -> bool:
    return bool(enum_integer_points(P)) if not P.is_empty() else False


# ---------------------------------------------------------------------------
# width


def width_along(P: Polyhedron, c):
    """max c.x - min c.x over P, or None if unbounded in direction c."""
    for r in P.rays:
        if dot(c, r) != 0:
            return None
    for l in P.lines:
        if dot(c, l) != 0:
            return None
    vals = [dot(c, v) for v in P.vertices]
    return max(vals) - min(vals)


def lattice_width(P: Polyhedron, budget: int = 3) -> WidthResult:
    """Minimum width over primitive integer directions with entries bounded by ``budget``."""
    if P.is_empty():
        raise PolyhedronError("width of empty set")
    best, arg = None, None
    for c in primitive_directions(P.n, budget):
        w = width_along(P, c)
        if w is None:
            continue
        if best is None or w < best:
            best, arg = w, c
            if best == 0:
                break
    return WidthResult(best, arg, budget)


# ---------------------------------------------------------------------------
# relative lattice-freeness


def _coset_points(Pp: Polyhedron):
    """Integer points of a polytope enumerated inside the lattice of its affine hull."""
    m = Pp.n
    eqs = Pp.equalities
    if eqs:
        sol = solve_diophantine([a for a, _ in eqs], [b for _, b in eqs])
        if sol is None:
            return
        x0, K = tuple(sol.particular), [tuple(k) for k in sol.kernel]
    else:
        x0 = (0,) * m
        K = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    if not K:
        if Pp.contains(x0):
            yield x0
        return
    j = len(K)
    rows = []
    for a, b in Pp.inequalities:
        aK = tuple(dot(a, k) for k in K)
        rows.append((aK, b - dot(a, x0)))
    W = Polyhedron.from_hrep(rows, n=j)
    for w in enum_integer_points(W):
        yield tuple(x0[i] + sum(w[t] * K[t][i] for t in range(j)) for i in range(m))


def is_relatively_lattice_free(P: Polyhedron):
    """``(True, None)`` if relint P has no integer point, else ``(False, witness)``.

    Recession directions are first turned into lines (this does not change
    whether the relative interior meets Z^n), the lineality space is then
    factored out by a unimodular map, and the remaining polytope is scanned
    in the integer lattice of its affine hull.
    """
    if P.is_empty():
        raise PolyhedronError("lattice-freeness of empty set")
    n = P.n
    ls, pts, rs = P.hom_generators()
    dirs = [tuple(l[:-1]) for l in ls] + [tuple(r[:-1]) for r in rs]
    z = None
    if not dirs:
        for y in _coset_points(P):
            if relint_contains(P, y):
                z = y
                break
    else:
        sat = saturate(dirs, n)
        k = len(sat)
        if k == n:
            z = (0,) * n
        else:
            u = unimodular_to_last(sat, n)
            m = n - k
            U = u.U
            img = [tuple(sum(U[i][j] * p[j] for j in range(n)) for i in range(m)) + (p[n],) for p in pts]
            Pp = hull_of_generators(m, [], img, [])
            for y in _coset_points(Pp):
                if relint_contains(Pp, y):
                    z = tuple(int(c) for c in u.inverse()(tuple(y) + (0,) * k))
                    break
    if z is None:
        return True, None
    # move the witness of relint(P + <rec P>) into relint P along the rays
    shift = [sum(r[i] for r in P.rays) for i in range(n)]
    N = 0
    while True:
        y = tuple(z[i] + N * shift[i] for i in range(n))
        if relint_contains(P, y):
            return False, y
        N += 1
        if N > 10 ** 6:  # pragma: no cover - unreachable for rational input
            raise ExactError("could not move witness into the relative interior")


def relint_integer_points(P: Polyhedron) -> list:
    """All integer points of relint P for a polytope P (lexicographic)."""
    return [y for y in enum_integer_points(P) if relint_contains(P, y)]


# ---------------------------------------------------------------------------
# integer points near a subspace


def dist2_to_subspace(L: Subspace, y) -> Fraction:
    """Squared Euclidean distance from y to L, exact."""
    y = [as_fraction(c) for c in y]
    if L.dim == 0:
        return sum(c * c for c in y)
    B = L.basis
    G = [[Fraction(dot(a, b)) for b in B] for a in B]
    By = [dot(b, y) for b in B]
    coef = mat_vec(inverse(G), By)
    return sum(c * c for c in y) - sum(c * v for c, v in zip(coef, By))


def near_subspace_point(L: Subspace, x, delta, radius):
    """Integer y with |y - x|_inf <= radius and dist(y, L) <= delta, closest to x.

    Ties are broken lexicographically.  Returns None when the box holds no
    such point.
    """
    x = [as_fraction(c) for c in x]
    delta = as_fraction(delta)
    radius = as_fraction(radius)
    if any(x) and not L.contains(integer_scaling(x)):
        raise ExactError("x must lie on L")
    d2 = delta * delta
    ranges = [range(math.ceil(c - radius), math.floor(c + radius) + 1) for c in x]
    best = None
    for y in itertools.product(*ranges):
        if dist2_to_subspace(L, y) > d2:
            continue
        key = (sum((a - b) ** 2 for a, b in zip(y, x)), y)
        if best is None or key < best:
            best = key
    return None if best is None else best[1]
