"""Exact rational polyhedra in H- and V-representation.

A polyhedron ``P = {x : A x <= b, E x = d}`` is handled through its
homogenization, the cone ``{(x, t) : A x - b t <= 0, E x - d t = 0, t >= 0}``.
Constraint rows and generators of that cone are primitive integer vectors,
so the double description method below runs on Python ints only.

Generators of the cone are

* ``(v t, t)`` with ``t > 0`` for a vertex ``v``,
* ``(r, 0)`` for a ray ``r``,
* lines ``(l, 0)`` for the lineality space.

Conversions are lazy and guarded by a per-instance lock, so a polyhedron can
be shared between threads.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import (
    UnimodularMap,
    as_fraction,
    canonical_sign,
    dot,
    integer_scaling,
    inverse,
    mat_vec,
    lcm_of_denominators,
    nullspace,
    rank,
    rref,
    saturate,
    unimodular_to_last,
    vector_gcd,
)


class PolyhedronError(ValueError):
    pass


def _prim(v) -> tuple:
    g = vector_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _hom_point(x: Sequence) -> tuple:
    fr = [as_fraction(c) for c in x]
    m = lcm_of_denominators(fr)
    return _prim(tuple(int(c * m) for c in fr) + (m,))


def _hom_direction(d: Sequence) -> tuple:
    return tuple(integer_scaling(d)) + (0,)


def _hom_constraint(a: Sequence, b) -> tuple:
    """Row h with h.(x, 1) <= 0  <=>  a.x <= b."""
    fr = [as_fraction(c) for c in a] + [-as_fraction(b)]
    m = lcm_of_denominators(fr)
    return _prim(tuple(int(c * m) for c in fr))


# ---------------------------------------------------------------------------
# double description on homogeneous integer cones


class _Cone:
    """State of the double description method.

    ``cons`` lists processed constraint rows with an equality flag;
    ``rays`` holds ``(vector, mask)`` where bit i of ``mask`` says constraint
    i is tight.  Every processed constraint vanishes on every line.
    """

    __slots__ = ("d", "cons", "lines", "rays")

    def __init__(self, d, cons=(), lines=None, rays=()):
        self.d = d
        self.cons = list(cons)
        if lines is None:
            lines = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        self.lines = list(lines)
        self.rays = list(rays)

    @classmethod
    def from_generators(cls, d, cons, lines, rays):
        """Rebuild a state from a known minimal generator set and constraint list."""
        masks = []
        for r in rays:
            m = 0
            for i, (h, _) in enumerate(cons):
                if dot(h, r) == 0:
                    m |= 1 << i
            masks.append(m)
        return cls(d, cons, lines, list(zip(rays, masks)))

    def copy(self):
        return _Cone(self.d, self.cons, self.lines, self.rays)

    def add(self, h, is_eq=False):
        h = tuple(h)
        idx = len(self.cons)
        bit = 1 << idx
        self.cons.append((h, is_eq))
        # a line not orthogonal to h absorbs the constraint
        l0 = None
        for i, l in enumerate(self.lines):
            s = dot(h, l)
            if s:
                l0, s0, i0 = l, s, i
                break
        if l0 is not None:
            sg = 1 if s0 > 0 else -1
            new_lines = []
            for i, l in enumerate(self.lines):
                if i == i0:
                    continue
                hl = dot(h, l)
                new_lines.append(_prim(tuple(a * s0 - b * hl for a, b in zip(l, l0))) if hl else l)
            new_rays = []
            for r, m in self.rays:
                hr = dot(h, r)
                if hr:
                    r = _prim(tuple(a * abs(s0) - b * hr * sg for a, b in zip(r, l0)))
                new_rays.append((r, m | bit))
            if not is_eq:
                all_old = bit - 1
                new_rays.append((tuple(-sg * x for x in l0), all_old))
            self.lines = new_lines
            self.rays = new_rays
            return self

        pos, neg, zero = [], [], []
        for r, m in self.rays:
            v = dot(h, r)
            if v > 0:
                pos.append((r, m, v))
            elif v < 0:
                neg.append((r, m, v))
            else:
                zero.append((r, m | bit))
        if not pos and (not is_eq or not neg):
            # constraint redundant for the current cone
            self.rays = [(r, m) for r, m, _ in neg] + zero
            return self
        need = self.d - len(self.lines) - 2
        all_masks = [m for _, m in self.rays]
        pos_idx = [i for i, (r, m) in enumerate(self.rays) if dot(h, r) > 0]
        neg_idx = [i for i, (r, m) in enumerate(self.rays) if dot(h, r) < 0]
        new = []
        for ip, (rp, mp, vp) in zip(pos_idx, pos):
            for ineg, (rn, mn, vn) in zip(neg_idx, neg):
                common = mp & mn
                if bin(common).count("1") < need:
                    continue
                adjacent = True
                for j, m in enumerate(all_masks):
                    if j != ip and j != ineg and (m & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                y = _prim(tuple(vp * a - vn * b for a, b in zip(rn, rp)))
                new.append((y, common | bit))
        kept = zero if is_eq else [(r, m) for r, m, _ in neg] + zero
        self.rays = kept + new
        return self


def _t_row(n):
    return tuple([0] * n + [-1])


# ---------------------------------------------------------------------------
# the polyhedron


class Polyhedron:
    """Immutable rational polyhedron in R^n.

    Build one with :meth:`from_hrep`, :meth:`from_vrep` or :meth:`empty`.
    Inequalities are reported in canonical form ``a.x <= b`` with ``a`` a
    primitive integer vector and ``b`` rational, reduced modulo the
    equalities and sorted; equalities have their first nonzero entry
    positive.
    """

    __slots__ = ("n", "_hraw", "_cone", "_gens", "_hmin", "_lock", "_empty", "_raw", "_cache")

    def __init__(self, n, *, hraw=None, gens=None, hmin=None, raw=None, empty=None):
        self.n = n
        self._hraw = hraw  # (eq rows, ineq rows) homogeneous, maybe redundant
        self._gens = gens  # (lines, points, rays) homogeneous, minimal
        self._hmin = hmin  # (eq rows, ineq rows) canonical minimal
        self._raw = raw  # (lines, points, rays) homogeneous, maybe redundant
        self._cone = None  # double description state, when known
        self._empty = empty
        self._cache = {}
        self._lock = threading.RLock()

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_hrep(cls, inequalities=(), equalities=(), n=None):
        """``inequalities``: pairs (a, b) for a.x <= b; ``equalities``: pairs for a.x = b."""
        inequalities = list(inequalities)
        equalities = list(equalities)
        if n is None:
            first = (inequalities or equalities)
            if not first:
                raise PolyhedronError("ambient dimension required")
            n = len(first[0][0])
        ineqs, eqs = [], []
        for a, b in inequalities:
            if len(a) != n:
                raise PolyhedronError("inequality of wrong dimension")
            ineqs.append(_hom_constraint(a, b))
        for a, b in equalities:
            if len(a) != n:
                raise PolyhedronError("equality of wrong dimension")
            eqs.append(_hom_constraint(a, b))
        return cls(n, hraw=(tuple(eqs), tuple(ineqs)))

    @classmethod
    def from_vrep(cls, vertices=(), rays=(), lines=(), n=None):
        vertices, rays, lines = list(vertices), list(rays), list(lines)
        if n is None:
            first = vertices or rays or lines
            if not first:
                raise PolyhedronError("ambient dimension required")
            n = len(first[0])
        for g in vertices + rays + lines:
            if len(g) != n:
                raise PolyhedronError("generator of wrong dimension")
        if not vertices:
            return cls.empty(n)
        pts = [_hom_point(v) for v in vertices]
        rs = [_hom_direction(r) for r in rays if any(r)]
        ls = [_hom_direction(l) for l in lines if any(l)]
        return hull_of_generators(n, ls, pts, rs)

    @classmethod
    def empty(cls, n):
        return cls(n, hraw=((), (_prim((0,) * n + (1,)),)), gens=((), (), ()),
                   hmin=((), ()), empty=True)

    @classmethod
    def whole_space(cls, n):
        return cls.from_vrep([(0,) * n], lines=[tuple(int(i == j) for j in range(n)) for i in range(n)])

    @classmethod
    def _from_minimal(cls, n, lines, pts, rays, hraw=None):
        if not pts:
            return cls.empty(n)
        return cls(n, hraw=hraw, gens=(tuple(lines), tuple(pts), tuple(rays)), empty=False)

    # -- conversions -------------------------------------------------------

    def _compute_gens(self):
        if self._gens is not None:
            return self._gens
        with self._lock:
            if self._gens is not None:
                return self._gens
            if self._raw is not None:
                hmin = self._compute_hmin()
                ls, pts, rs = self._raw
                self._gens = _minimal_generators(self.n, hmin, pts, rs)
                return self._gens
            eqs, ineqs = self._hraw
            cone = _run_dd(self.n, eqs, ineqs)
            self._set_from_cone(cone)
            return self._gens

    def _set_from_cone(self, cone):
        n = self.n
        pts, rays = [], []
        for r, _ in cone.rays:
            if r[n] > 0:
                pts.append(r)
            elif r[n] == 0:
                rays.append(r)
        self._cone = cone
        if not pts:
            self._empty = True
            self._gens = ((), (), ())
            self._hmin = ((), ())
        else:
            self._empty = False
            self._gens = (tuple(cone.lines), tuple(sorted(pts)), tuple(sorted(rays)))

    def _compute_hmin(self):
        if self._hmin is not None:
            return self._hmin
        with self._lock:
            if self._hmin is not None:
                return self._hmin
            if self._raw is not None:
                ls, pts, rs = self._raw
            else:
                ls, pts, rs = self._compute_gens()
                if self._hmin is not None:
                    return self._hmin
            eqs, ineqs = _polar(self.n, ls, list(pts) + list(rs))
            self._hmin = _canonical_h(self.n, eqs, ineqs)
            if self._hraw is None:
                self._hraw = self._hmin
            return self._hmin

    def _state(self) -> _Cone:
        """DD state (generators with tight masks) w.r.t. some H-description."""
        with self._lock:
            c = self._cone
            if isinstance(c, _Cone):
                return c.copy()
            eqs, ineqs = self._compute_hmin()
            lines, pts, rays = self._compute_gens()
            cons = [(e, True) for e in eqs] + [(_t_row(self.n), False)] + [(h, False) for h in ineqs]
            st = _Cone.from_generators(self.n + 1, cons, lines, list(pts) + list(rays))
            self._cone = st
            return st.copy()

    def _cached(self, key, fn):
        v = self._cache.get(key)
        if v is None:
            v = fn()
            self._cache[key] = v
        return v

    # -- accessors ---------------------------------------------------------

    def is_empty(self) -> bool:
        if self._empty is None:
            self._compute_gens()
        return self._empty

    @property
    def vertices(self) -> tuple:
        def make():
            _, pts, _ = self._compute_gens()
            n = self.n
            return tuple(tuple(Fraction(p[i], p[n]) for i in range(n)) for p in pts)
        return self._cached("v", make)

    @property
    def rays(self) -> tuple:
        return self._cached("r", lambda: tuple(r[:-1] for r in self._compute_gens()[2]))

    @property
    def lines(self) -> tuple:
        return self._cached("l", lambda: tuple(canonical_sign(l[:-1]) for l in self._compute_gens()[0]))

    @property
    def inequalities(self) -> tuple:
        """Irredundant inequalities as (a, b) with a.x <= b."""
        return self._cached("i", lambda: tuple(_split_row(h) for h in self._compute_hmin()[1]))

    @property
    def equalities(self) -> tuple:
        return self._cached("e", lambda: tuple(_split_row(h) for h in self._compute_hmin()[0]))

    def hom_generators(self):
        return self._compute_gens()

    def raw_constraints(self):
        """A (possibly redundant) homogeneous H-description."""
        if self._hraw is not None:
            return self._hraw
        return self._compute_hmin()

    def is_bounded(self) -> bool:
        ls, _, rs = self._compute_gens()
        return not ls and not rs

    @property
    def dimension(self) -> int:
        """Dimension of the affine hull; -1 for the empty set."""
        return self._cached("d", self._dimension)

    def _dimension(self):
        if self.is_empty():
            return -1
        ls, pts, rs = self._compute_gens()
        n = self.n
        p0 = pts[0]
        rows = []
        for p in pts[1:]:
            rows.append(tuple(Fraction(p[i], p[n]) - Fraction(p0[i], p0[n]) for i in range(n)))
        rows += [r[:-1] for r in rs] + [l[:-1] for l in ls]
        return rank(rows, n) if rows else 0

    # -- predicates --------------------------------------------------------

    def contains(self, x) -> bool:
        x = [as_fraction(c) for c in x]
        eqs, ineqs = self.raw_constraints()
        if self._empty:
            return False
        for h in eqs:
            if dot(h[:-1], x) + h[-1] != 0:
                return False
        for h in ineqs:
            if dot(h[:-1], x) + h[-1] > 0:
                return False
        return True

    def __contains__(self, x):
        return self.contains(x)

    def issubset(self, other: "Polyhedron") -> bool:
        if self.n != other.n:
            raise PolyhedronError("dimension mismatch")
        if self.is_empty():
            return True
        if other.is_empty():
            return False
        ls, pts, rs = self._compute_gens()
        eqs, ineqs = other.raw_constraints()
        for h in eqs:
            for g in ls + pts + rs:
                if dot(h, g) != 0:
                    return False
        for h in ineqs:
            for g in pts + rs:
                if dot(h, g) > 0:
                    return False
            for g in ls:
                if dot(h, g) != 0:
                    return False
        return True

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.n == other.n and self.issubset(other) and other.issubset(self)

    def __lt__(self, other):
        return self.issubset(other) and not other.issubset(self)

    __hash__ = None

    def __repr__(self):
        if self.is_empty():
            return "Polyhedron(empty, n=%d)" % self.n
        return "Polyhedron(n=%d, vertices=%d, rays=%d, lines=%d)" % (
            self.n, len(self.vertices), len(self.rays), len(self.lines))

    # -- combinators -------------------------------------------------------

    def intersect(self, other=None, inequalities=(), equalities=()) -> "Polyhedron":
        """Intersection with another polyhedron and/or extra constraints.

        When only a few constraints are added the generators of ``self``
        are updated incrementally.
        """
        extra_eq = [_hom_constraint(a, b) for a, b in equalities]
        extra_in = [_hom_constraint(a, b) for a, b in inequalities]
        if other is not None:
            if other.n != self.n:
                raise PolyhedronError("dimension mismatch")
            if other.is_empty():
                return Polyhedron.empty(self.n)
            oe, oi = other.raw_constraints()
            extra_eq += list(oe)
            extra_in += list(oi)
        return self._add_rows(extra_eq, extra_in)

    def _add_rows(self, eq_rows, in_rows) -> "Polyhedron":
        if self.is_empty():
            return Polyhedron.empty(self.n)
        st = self._state()
        for h in eq_rows:
            st.add(h, True)
        for h in in_rows:
            st.add(h, False)
        base_eq, base_in = self.raw_constraints()
        P = Polyhedron(self.n, hraw=(tuple(base_eq) + tuple(eq_rows), tuple(base_in) + tuple(in_rows)))
        P._set_from_cone(st)
        return P

    def map(self, u: UnimodularMap) -> "Polyhedron":
        """Image under a unimodular (or any invertible integer affine) map."""
        if self.is_empty():
            return Polyhedron.empty(self.n)
        return Polyhedron.from_vrep([u(v) for v in self.vertices],
                                    [u.linear(r) for r in self.rays],
                                    [u.linear(l) for l in self.lines], n=self.n)

    def translate(self, t) -> "Polyhedron":
        if self.is_empty():
            return self
        return Polyhedron.from_vrep([tuple(a + b for a, b in zip(v, t)) for v in self.vertices],
                                    self.rays, self.lines, n=self.n)


def _split_row(h):
    a = h[:-1]
    g = vector_gcd(a)
    if g == 0:
        return a, Fraction(-h[-1])
    return tuple(x // g for x in a), Fraction(-h[-1], g)


def _run_dd(n, eqs, ineqs) -> _Cone:
    cone = _Cone(n + 1)
    seen = set()
    for h in eqs:
        if h in seen:
            continue
        seen.add(h)
        cone.add(h, True)
    cone.add(_t_row(n), False)
    for h in sorted(set(ineqs)):
        if h in seen:
            continue
        seen.add(h)
        cone.add(h, False)
    return cone


def _polar(n, lines, rays):
    """Equality and inequality rows h (h.y = 0, h.y <= 0) of cone(rays) + span(lines)."""
    cone = _Cone(n + 1)
    for l in lines:
        cone.add(l, True)
    for r in sorted(set(rays)):
        cone.add(r, False)
    return [tuple(l) for l in cone.lines], [tuple(r) for r, _ in cone.rays]


def _minimal_generators(n, hmin, pts, rays):
    """Drop redundant generators given the minimal constraint rows of their hull.

    A generator is kept when its set of tight constraints is maximal among
    all generators; generators with equal tight sets lie in the same
    minimal face and only the first is kept.
    """
    eqs, ineqs = hmin
    t_row = _t_row(n)
    cons = list(ineqs) + [t_row]
    lines = [tuple(l) for l in nullspace(list(eqs) + cons, n + 1)]
    full = (1 << len(cons)) - 1
    gens, masks = [], []
    for g in list(pts) + list(rays):
        m = 0
        for i, h in enumerate(cons):
            if dot(h, g) == 0:
                m |= 1 << i
        if m == full and g[n] == 0:
            continue  # direction inside the lineality space
        gens.append(g)
        masks.append(m)
    uniq = sorted(set(masks))
    maximal = set(m for m in uniq if not any(o != m and (o & m) == m for o in uniq))
    seen = set()
    keep_p, keep_r = [], []
    for g, m in zip(gens, masks):
        if m not in maximal or m in seen:
            continue
        seen.add(m)
        if lines:
            g = _reduce_mod_lines(g, lines)
        (keep_p if g[n] else keep_r).append(g)
    return tuple(lines), tuple(sorted(keep_p)), tuple(sorted(keep_r))


def _reduce_mod_lines(g, lines):
    """Representative of g + span(lines) orthogonal to the lines."""
    G = [[Fraction(dot(a, b)) for b in lines] for a in lines]
    rhs = [Fraction(dot(l, g)) for l in lines]
    coef = mat_vec(inverse(G), rhs)
    y = [Fraction(x) for x in g]
    for c, l in zip(coef, lines):
        y = [a - c * b for a, b in zip(y, l)]
    return _prim(tuple(integer_scaling(y))) if any(y) else tuple(g)


def _canonical_h(n, eqs, ineqs):
    """Canonical equality basis (rref, primitive, sign) and reduced inequalities."""
    eq_rows = []
    piv = []
    if eqs:
        R, piv = rref(eqs, n + 1)
        eq_rows = [canonical_sign(integer_scaling(r)) for r in R]
    out = []
    for h in ineqs:
        h = list(h)
        for row, p in zip(eq_rows, piv):
            if h[p]:
                # eliminate pivot column p
                hp, rp = h[p], row[p]
                h = [a * rp - hp * b for a, b in zip(h, row)]
        h = _prim(tuple(h))
        if not any(h[:-1]):
            # 0 <= c : either the homogenizing row or trivially true
            continue
        out.append(h)
    if eqs and any(p == n for p in piv):
        # an equality forcing t = 0: empty
        return tuple(eq_rows), ()
    return tuple(eq_rows), tuple(sorted(set(out)))


# ---------------------------------------------------------------------------
# module level operations


@dataclass(frozen=True)
class FaceDescriptor:
    """Face of ``owner`` cut out by turning ``tight_set`` inequalities into equalities.

    ``tight_set`` indexes ``owner.inequalities``; it is stored closed, i.e.
    it contains every inequality tight on the whole face.
    """

    owner: Polyhedron
    tight_set: frozenset

    @property
    def polyhedron(self) -> Polyhedron:
        return face_polyhedron(self.owner, self.tight_set)

    @property
    def dimension(self) -> int:
        return self.polyhedron.dimension

    def __hash__(self):
        return hash((id(self.owner), self.tight_set))

    def __eq__(self, other):
        return (isinstance(other, FaceDescriptor) and self.owner is other.owner
                and self.tight_set == other.tight_set)


def dd_convert(P: Polyhedron) -> Polyhedron:
    """Populate both minimal representations and return ``P``."""
    P._compute_gens()
    P._compute_hmin()
    return P


def intersect(P: Polyhedron, Q=None, inequalities=(), equalities=()) -> Polyhedron:
    return P.intersect(Q, inequalities, equalities)


def hull_union(P: Polyhedron, Q: Polyhedron) -> Polyhedron:
    """Closed convex hull of the union."""
    if P.n != Q.n:
        raise PolyhedronError("dimension mismatch")
    if P.is_empty():
        return Q
    if Q.is_empty():
        return P
    l1, p1, r1 = P.hom_generators()
    l2, p2, r2 = Q.hom_generators()
    return hull_of_generators(P.n, list(l1) + list(l2), list(p1) + list(p2), list(r1) + list(r2))


def hull_of_generators(n, lines, pts, rays) -> Polyhedron:
    """Convex hull from homogeneous integer generators (internal fast path)."""
    if not pts:
        return Polyhedron.empty(n)
    return Polyhedron(n, raw=(tuple(lines), tuple(pts), tuple(rays)), empty=False)


def affine_hull(P: Polyhedron):
    """Minimal equality system (a, b) of aff P and its dimension."""
    if P.is_empty():
        raise PolyhedronError("affine hull of empty set")
    eqs = P.equalities
    return eqs, P.n - len(eqs)


def relint_contains(P: Polyhedron, x) -> bool:
    if P.is_empty():
        return False
    x = [as_fraction(c) for c in x]
    for a, b in P.equalities:
        if dot(a, x) != b:
            return False
    for a, b in P.inequalities:
        if dot(a, x) >= b:
            return False
    return True


def tight_set_of(P: Polyhedron, hom_gens) -> frozenset:
    """Indices of inequalities of P tight on every given homogeneous generator."""
    _, ineqs = P._compute_hmin()
    return frozenset(i for i, h in enumerate(ineqs) if all(dot(h, g) == 0 for g in hom_gens))


def face_polyhedron(P: Polyhedron, tight) -> Polyhedron:
    eqs, ineqs = P._compute_hmin()
    lines, pts, rays = P.hom_generators()
    tight = frozenset(tight)
    rows = [ineqs[i] for i in tight]
    fp = [p for p in pts if all(dot(h, p) == 0 for h in rows)]
    fr = [r for r in rays if all(dot(h, r) == 0 for h in rows)]
    if not fp:
        return Polyhedron.empty(P.n)
    hraw = (tuple(eqs) + tuple(rows), tuple(h for i, h in enumerate(ineqs) if i not in tight))
    return Polyhedron._from_minimal(P.n, lines, fp, fr, hraw=hraw)


def face(P: Polyhedron, tight=()) -> FaceDescriptor:
    """Face descriptor with its tight set closed."""
    fp = face_polyhedron(P, tight)
    if fp.is_empty():
        _, ineqs = P._compute_hmin()
        return FaceDescriptor(P, frozenset(range(len(ineqs))))
    ls, pts, rs = fp.hom_generators()
    return FaceDescriptor(P, tight_set_of(P, list(pts) + list(rs)))


def face_from_polyhedron(P: Polyhedron, F: Polyhedron) -> FaceDescriptor:
    """Descriptor of the smallest face of P containing the set F."""
    ls, pts, rs = F.hom_generators()
    return face(P, tight_set_of(P, list(pts) + list(rs)))


def faces_containing(P: Polyhedron, F: Optional[FaceDescriptor] = None) -> list:
    """All faces G of P with F contained in G, P included.

    Faces are generated by intersecting tight sets with the tight sets of
    single generators, which reaches every face above F.  With ``F=None``
    every nonempty face of P is returned.
    """
    if P.is_empty():
        return []
    eqs, ineqs = P._compute_hmin()
    lines, pts, rays = P.hom_generators()
    zsets = []
    for g in list(pts) + list(rays):
        zsets.append(frozenset(i for i, h in enumerate(ineqs) if dot(h, g) == 0))
    if F is None:
        start = [z for z, g in zip(zsets, list(pts) + list(rays)) if g[-1] != 0]
    else:
        if F.owner is not P:
            raise PolyhedronError("face belongs to a different polyhedron")
        start = [F.tight_set]
    seen = set(start)
    queue = list(start)
    while queue:
        T = queue.pop()
        for z in zsets:
            T2 = T & z
            if T2 not in seen:
                seen.add(T2)
                queue.append(T2)
    out = [FaceDescriptor(P, T) for T in seen]
    out.sort(key=lambda G: (len(G.tight_set), sorted(G.tight_set)))
    return out


def all_faces(P: Polyhedron) -> list:
    return faces_containing(P, None)


def minkowski_sum_subspace(P: Polyhedron, L) -> Polyhedron:
    """P + L for a linear subspace L (a ``Subspace`` or a list of spanning vectors)."""
    basis = getattr(L, "basis", L)
    basis = [tuple(b) for b in basis if any(b)]
    if P.is_empty() or not basis:
        return P
    ls, pts, rs = P.hom_generators()
    return hull_of_generators(P.n, list(ls) + [_hom_direction(b) for b in basis], list(pts), list(rs))


def project_out(P: Polyhedron, coords: Iterable[int]) -> Polyhedron:
    """Orthogonal projection dropping the listed coordinates."""
    drop = set(coords)
    keep = [i for i in range(P.n) if i not in drop]
    m = len(keep)
    if P.is_empty():
        return Polyhedron.empty(m)
    return Polyhedron.from_vrep([tuple(v[i] for i in keep) for v in P.vertices],
                                [tuple(r[i] for i in keep) for r in P.rays],
                                [tuple(l[i] for i in keep) for l in P.lines], n=m)


def project_onto(P: Polyhedron, k: int) -> Polyhedron:
    """Projection onto the first k coordinates, viewed in R^k."""
    return project_out(P, range(k, P.n))


def embed(P: Polyhedron, n: int) -> Polyhedron:
    """View P in R^k as P x {0}^(n-k)."""
    pad = (0,) * (n - P.n)
    if P.is_empty():
        return Polyhedron.empty(n)
    return Polyhedron.from_vrep([tuple(v) + pad for v in P.vertices],
                                [tuple(r) + pad for r in P.rays],
                                [tuple(l) + pad for l in P.lines], n=n)


def recession_and_lineality(P: Polyhedron):
    """Generators of rec P and a basis of lin P."""
    if P.is_empty():
        raise PolyhedronError("recession cone of empty set")
    return P.rays, P.lines


def quotient_lineality(P: Polyhedron):
    """Factor out lin P.

    Returns ``(P', u)`` where ``u`` is unimodular, ``u(P) = P' x R^k`` with
    lin P sent onto the last k coordinates, and ``P'`` lives in R^(n-k).
    """
    if P.is_empty():
        raise PolyhedronError("quotient of empty set")
    lines = P.lines
    n = P.n
    if not lines:
        return P, UnimodularMap(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    u = unimodular_to_last(lines, n)
    k = len(saturate(lines, n))
    image = P.map(u)
    return project_onto(image, n - k), u


def is_face_of(F: Polyhedron, P: Polyhedron) -> bool:
    """True when F is a face of P (the empty set counts as a face)."""
    if F.is_empty():
        return True
    if not F.issubset(P):
        return False
    G = face_polyhedron(P, face_from_polyhedron(P, F).tight_set)
    return G == F


def barycenter(P: Polyhedron) -> tuple:
    """Average of the vertices (lies in relint P for a polytope)."""
    vs = P.vertices
    if not vs:
        raise PolyhedronError("barycenter of empty set")
    k = len(vs)
    return tuple(sum(v[i] for v in vs) / k for i in range(P.n))


def direction_space(P: Polyhedron) -> list:
    """Integer basis of the linear space parallel to aff P."""
    if P.is_empty():
        return []
    eqs = [a for a, _ in P.equalities]
    if not eqs:
        return [tuple(int(i == j) for j in range(P.n)) for i in range(P.n)]
    return nullspace(eqs, P.n)
