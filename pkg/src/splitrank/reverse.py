"""Infinite reverse split rank: certificates (F, L) and the related constructions.

An integral polyhedron P has infinite reverse split rank exactly when there
are a nonempty face F of P and a rational subspace L not contained in
lin P such that

(i)  relint(F + L) is not contained in the interior of any split, and
(ii) G + L is relatively lattice-free for every face G of P containing F.

Condition (ii) is decided exactly.  Condition (i) is searched over split
normals with bounded entries, so "no split found" is relative to that
budget; a split that is found is an exact witness.  Candidate subspaces
are spanned by primitive vectors with bounded entries.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .cuts import Split, mixed_hull, split_cut
from .exact import (
    ExactError,
    as_fraction,
    dot,
    extend_to_unimodular,
    inverse,
    mat_vec,
    primitive_directions,
    rank,
    saturate,
    solve_diophantine,
    unimodular_to_last,
    UnimodularMap,
)
from .lattice import Subspace, enum_integer_points, is_relatively_lattice_free, span_key
from .polyhedra import (
    FaceDescriptor,
    Polyhedron,
    all_faces,
    barycenter,
    direction_space,
    embed,
    face_from_polyhedron,
    faces_containing,
    is_face_of,
    minkowski_sum_subspace,
    project_onto,
    quotient_lineality,
    relint_contains,
)


class ReverseRankError(ValueError):
    pass


def _face_poly(F) -> Polyhedron:
    return F.polyhedron if isinstance(F, FaceDescriptor) else F


def _subspace(L, n) -> Subspace:
    if isinstance(L, Subspace):
        return L
    return Subspace(list(L), n)


# ---------------------------------------------------------------------------
# condition (i)


class ConditionI(NamedTuple):
    holds: bool
    split_witness: Optional[Split]
    exhaustive: bool  # True when the answer does not depend on the budget


def containing_split(G: Polyhedron, budget: int) -> Optional[Split]:
    """A split whose interior contains relint G, or None if none is found.

    Normals with entries bounded by ``budget`` are tried first.  If G is not
    full-dimensional the affine hull is handled exactly: without integer
    points it lies inside some split; with one, G is mapped unimodularly
    onto a full-dimensional set in fewer coordinates and the search repeats
    there, lifting any split found.
    """
    n = G.n
    dirs = list(G.lines) + list(G.rays)
    verts = G.vertices
    for a in primitive_directions(n, budget):
        if any(dot(a, d) != 0 for d in dirs):
            continue
        vals = [dot(a, v) for v in verts]
        m, M = min(vals), max(vals)
        beta = math.floor(m)
        if m == M:
            if Fraction(m).denominator != 1:
                return Split(a, beta)
            continue
        if M <= beta + 1:
            return Split(a, beta)
    eqs = G.equalities
    if not eqs:
        return None
    A = [a for a, _ in eqs]
    sol = solve_diophantine(A, [b for _, b in eqs])
    if sol is None:
        v0 = verts[0]
        for c in saturate(A, n):
            val = dot(c, v0)
            if Fraction(val).denominator != 1:
                return Split(tuple(c), math.floor(val))
        raise ExactError("inconsistent affine hull data")  # pragma: no cover
    z0 = tuple(sol.particular)
    K = [tuple(k) for k in sol.kernel]
    d = len(K)
    if d == 0:
        return None  # a single integer point is in no split interior
    u = extend_to_unimodular(K, n)
    um = UnimodularMap(u.U, tuple(-x for x in mat_vec(u.U, z0)))
    Gred = project_onto(G.map(um), d)
    s = containing_split(Gred, budget)
    if s is None:
        return None
    a_full = tuple(s.a) + (0,) * (n - d)
    a = tuple(sum(a_full[i] * u.U[i][j] for i in range(n)) for j in range(n))
    return Split(a, s.beta + dot(a, z0))


def check_condition_i(F, L, budget: int = 2) -> ConditionI:
    """Search for a split whose interior contains relint(F + L)."""
    Fp = _face_poly(F)
    if Fp.is_empty():
        raise ReverseRankError("face is empty")
    L = _subspace(L, Fp.n)
    s = containing_split(minkowski_sum_subspace(Fp, L), budget)
    if s is None:
        return ConditionI(True, None, False)
    return ConditionI(False, s, True)


# ---------------------------------------------------------------------------
# condition (ii)


class ConditionII(NamedTuple):
    holds: bool
    violating_face: Optional[FaceDescriptor]
    witness: Optional[tuple]


def check_condition_ii(P: Polyhedron, F: FaceDescriptor, L) -> ConditionII:
    L = _subspace(L, P.n)
    for G in faces_containing(P, F):
        free, w = is_relatively_lattice_free(minkowski_sum_subspace(G.polyhedron, L))
        if not free:
            return ConditionII(False, G, w)
    return ConditionII(True, None, None)


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Certificate:
    """A pair (F, L) satisfying both conditions, with the evidence collected."""

    polyhedron: Polyhedron
    face: FaceDescriptor
    subspace: Subspace
    entry_budget: int
    dir_budget: int
    evidence: list = field(default_factory=list)  # (tight set, lattice-free) per face G >= F
    condition_i: Optional[ConditionI] = None

    def verify(self) -> bool:
        """Re-run every check from scratch."""
        P, F, L = self.polyhedron, self.face, self.subspace
        if F.polyhedron.is_empty():
            return False
        if L.dim == 0 or (P.lines and L.issubspace(Subspace(P.lines, P.n))):
            return False
        ev = _evidence(P, F, L)
        if not all(ok for _, ok in ev) or ev != self.evidence:
            return False
        c = check_condition_i(F, L, self.dir_budget)
        return c.holds and c == self.condition_i

    def face_plus_subspace_is_face(self) -> bool:
        P, F, L = self.polyhedron, self.face, self.subspace
        return is_face_of(minkowski_sum_subspace(F.polyhedron, L), minkowski_sum_subspace(P, L))

    def to_text(self) -> str:
        from .textio import format_point

        lines = ["certificate"]
        lines.append("face tight-set: %s" % " ".join(str(i) for i in sorted(self.face.tight_set)))
        lines.append("face dimension: %d" % self.face.dimension)
        lines.append("subspace dimension: %d" % self.subspace.dim)
        for b in self.subspace.basis:
            lines.append("subspace basis: %s" % format_point(b))
        for T, ok in self.evidence:
            lines.append("evidence face {%s}: %s" % (" ".join(str(i) for i in T),
                                                    "lattice-free" if ok else "not lattice-free"))
        lines.append("condition (i): no split found with normal entries <= %d" % self.dir_budget)
        lines.append("budgets: entry=%d dir=%d" % (self.entry_budget, self.dir_budget))
        return "\n".join(lines) + "\n"


def _evidence(P, F, L):
    out = []
    for G in faces_containing(P, F):
        free, _ = is_relatively_lattice_free(minkowski_sum_subspace(G.polyhedron, L))
        out.append((tuple(sorted(G.tight_set)), free))
    return out


def _check_integral(P: Polyhedron):
    if P.is_empty():
        raise ReverseRankError("polyhedron is empty")
    if any(Fraction(x).denominator != 1 for v in P.vertices for x in v):
        raise ReverseRankError("polyhedron is not integral")


def _one_dim_pool(P: Polyhedron, entry_budget: int):
    """Directions v with P + <v> relatively lattice-free and v outside lin P."""
    lin = Subspace(P.lines, P.n) if P.lines else None
    out = []
    for v in primitive_directions(P.n, entry_budget):
        if lin is not None and lin.contains(v):
            continue
        if is_relatively_lattice_free(minkowski_sum_subspace(P, [v]))[0]:
            out.append(v)
    return out


def candidate_subspaces(P: Polyhedron, entry_budget: int, max_dim=None):
    """Yield candidate subspaces in search order: by dimension, then by size.

    Only subspaces L with P + L relatively lattice-free are produced: this is
    needed for condition (ii) at G = P, and it is inherited by subspaces of
    L, so dimension-k candidates are spans of a dimension-(k-1) candidate
    and one more direction.  Each layer is filtered lazily, so a search that
    stops early does not pay for the rest of the layer.
    """
    n = P.n
    pool = _one_dim_pool(P, entry_budget)
    top = n if max_dim is None else min(n, max_dim)
    layer = sorted({Subspace([v], n) for v in pool}, key=Subspace.sort_key)
    for k in range(1, top + 1):
        free = []
        for L in layer:
            if k == 1 or is_relatively_lattice_free(minkowski_sum_subspace(P, L))[0]:
                free.append(L)
                yield L
        if k == top or not free:
            return
        seen = {}
        for L in free:
            for v in pool:
                rows = list(L.basis) + [v]
                key = span_key(rows, n)
                if any(key) and key not in seen:
                    seen[key] = rows
        layer = sorted((Subspace(rows, n) for rows in seen.values()), key=Subspace.sort_key)


def _try_pair(P, F, L, dir_budget):
    c2 = check_condition_ii(P, F, L)
    if not c2.holds:
        return None
    c1 = check_condition_i(F, L, dir_budget)
    if not c1.holds:
        return None
    return c1


def _search(P, entry_budget, dir_budget, max_dim, prune, threads):
    faces = [G for G in all_faces(P) if not prune or G.dimension >= 2]
    faces.sort(key=lambda G: (-G.dimension, sorted(G.tight_set)))
    if not faces:
        return None
    for L in candidate_subspaces(P, entry_budget, max_dim):
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                results = list(ex.map(lambda F: _try_pair(P, F, L, dir_budget), faces))
            for F, c1 in zip(faces, results):
                if c1 is not None:
                    return F, L, c1
        else:
            for F in faces:
                c1 = _try_pair(P, F, L, dir_budget)
                if c1 is not None:
                    return F, L, c1
    return None


def find_certificate(P: Polyhedron, entry_budget: int = 2, dir_budget: int = 2, max_dim=None,
                     prune: bool = True, threads: int = 1) -> Optional[Certificate]:
    """First (F, L) satisfying both conditions within the budgets, or None.

    Candidates are ordered by dim L, then by the size of the basis of L,
    then by decreasing dim F.  With a nontrivial lineality space the search
    runs on the quotient and the result is lifted back; budgets then refer
    to the quotient coordinates.  ``prune`` skips faces of dimension < 2,
    which can never qualify.
    """
    if P.is_empty():
        raise ReverseRankError("polyhedron is empty")
    Pq, u = quotient_lineality(P)
    _check_integral(Pq)
    n, m = P.n, Pq.n
    if m == 0:
        return None
    found = _search(Pq, entry_budget, dir_budget, max_dim, prune, threads)
    if found is None:
        return None
    Fq, Lq, c1 = found
    if m == n:
        F, L = Fq, Lq
    else:
        ui = u.inverse()
        k = n - m
        extra = [tuple(int(i == j) for j in range(n)) for i in range(m, n)]
        Fl = minkowski_sum_subspace(embed(Fq.polyhedron, n), extra).map(ui)
        F = face_from_polyhedron(P, Fl)
        L = Subspace([ui.linear(tuple(b) + (0,) * k) for b in Lq.basis], n)
        c1 = check_condition_i(F, L, dir_budget)
    cert = Certificate(P, F, L, entry_budget, dir_budget, _evidence(P, F, L), c1)
    return cert


def find_cg_certificate(P: Polyhedron, entry_budget: int = 2) -> Optional[Subspace]:
    """First direction v (bounded entries, v outside lin P) with P + <v> relatively lattice-free."""
    if P.is_empty():
        raise ReverseRankError("polyhedron is empty")
    lin = Subspace(P.lines, P.n) if P.lines else None
    for v in primitive_directions(P.n, entry_budget):
        if lin is not None and lin.contains(v):
            continue
        if is_relatively_lattice_free(minkowski_sum_subspace(P, [v]))[0]:
            return Subspace([v], P.n)
    return None


# ---------------------------------------------------------------------------
# constructions

TRIANGLE = ((0, 0, 0), (2, 0, 0), (0, 2, 0))


def make_Qt(t) -> Polyhedron:
    """conv(T, (1/2, 1/2, t)) for the triangle T with vertices 0, 2e1, 2e2."""
    t = as_fraction(t)
    if t < 0:
        raise ReverseRankError("t must be nonnegative")
    return Polyhedron.from_vrep(list(TRIANGLE) + [(Fraction(1, 2), Fraction(1, 2), t)])


def make_QF_lambda(F, xbar, basis, lam) -> Polyhedron:
    """Closed convex hull of F and the points xbar +- lam * v for v in basis."""
    Fp = _face_poly(F)
    xbar = tuple(as_fraction(x) for x in xbar)
    lam = as_fraction(lam)
    if lam < 0:
        raise ReverseRankError("lambda must be nonnegative")
    if not relint_contains(Fp, xbar):
        raise ReverseRankError("xbar is not in the relative interior")
    pts = list(Fp.vertices)
    for v in basis:
        for s in (1, -1):
            pts.append(tuple(x + s * lam * c for x, c in zip(xbar, v)))
    return Polyhedron.from_vrep(pts, Fp.rays, Fp.lines, n=Fp.n)


def make_P_eps(P: Polyhedron, xbar, basis, eps):
    """conv(P, xbar + eps * b for b in basis), and whether integer points are preserved.

    ``basis`` must span the orthogonal complement of the direction space of
    aff P.  The flag is None for unbounded P.
    """
    xbar = tuple(as_fraction(x) for x in xbar)
    eps = as_fraction(eps)
    if eps <= 0:
        raise ReverseRankError("eps must be positive")
    if not relint_contains(P, xbar):
        raise ReverseRankError("xbar is not in the relative interior")
    D = direction_space(P)
    basis = [tuple(as_fraction(x) for x in b) for b in basis]
    codim = P.n - P.dimension
    if len(basis) != codim or (basis and rank(basis, P.n) != codim) or \
            any(dot(b, d) != 0 for b in basis for d in D):
        raise ReverseRankError("basis does not span the orthogonal complement of aff P")
    if not basis:
        return P, True if P.is_bounded() else None
    pts = list(P.vertices) + [tuple(x + eps * c for x, c in zip(xbar, b)) for b in basis]
    Q = Polyhedron.from_vrep(pts, P.rays, P.lines, n=P.n)
    if not Q.is_bounded():
        return Q, None
    return Q, enum_integer_points(Q) == enum_integer_points(P)


# ---------------------------------------------------------------------------
# survival of the two points under one split cut


def inner_radius2(F: Polyhedron, xbar) -> Fraction:
    """Squared radius of the largest ball in aff F centred at xbar inside F."""
    D = direction_space(F)
    best = None
    for a, b in F.inequalities:
        # component of a along the direction space of aff F
        if len(D) == F.n:
            pa = a
        else:
            G = [[Fraction(dot(u, v)) for v in D] for u in D]
            coef = mat_vec(inverse(G), [dot(u, a) for u in D])
            pa = [sum(c * u[i] for c, u in zip(coef, D)) for i in range(F.n)]
        nn = sum(x * x for x in pa)
        if nn == 0:
            continue
        s = b - dot(a, xbar)
        val = Fraction(s * s) / nn
        if best is None or val < best:
            best = val
    if best is None:
        raise ReverseRankError("face equals its affine hull")
    return best


def outer_radius2(F: Polyhedron, xbar) -> Fraction:
    """max of |xbar - g|^2 over vertices g and (2|h|)^2 over rays h."""
    vals = [sum((x - g) ** 2 for x, g in zip(xbar, v)) for v in F.vertices]
    vals += [4 * sum(Fraction(x) ** 2 for x in h) for h in F.rays]
    return max(vals + [Fraction(0)])


def max_step(T: Polyhedron, x, v):
    """Largest t >= 0 with x + t v in T (None if unbounded, -1 if x not in T)."""
    if not T.contains(x):
        return -1
    best = None
    for a, b in T.equalities:
        if dot(a, v) != 0:
            return Fraction(0)
    for a, b in T.inequalities:
        av = dot(a, v)
        if av > 0:
            t = (b - dot(a, x)) / av
            if best is None or t < best:
                best = t
    return best


def survival_check(F, xbar, basis, lam, split: Split, Q=None):
    """Whether split_cut(Q_F^lam, S) contains xbar +- min(lam-1, lam r/(2(r+R))) v for each v.

    r and R are irrational in general; the comparison is done on squares.
    Returns a list of (v, sign, passed).
    """
    Fp = _face_poly(F)
    lam = as_fraction(lam)
    if Q is None:
        Q = make_QF_lambda(Fp, xbar, basis, lam)
    T = split_cut(Q, split)
    r2 = inner_radius2(Fp, xbar)
    R2 = outer_radius2(Fp, xbar)
    out = []
    for v in basis:
        for s in (1, -1):
            d = tuple(s * c for c in v)
            tm = max_step(T, xbar, d)
            out.append((tuple(v), s, _step_suffices(tm, lam, r2, R2)))
    return out


def _step_suffices(tm, lam, r2, R2) -> bool:
    if tm is None:
        return True
    if tm < 0:
        return False
    if tm >= lam - 1:
        return True
    if tm == 0:
        return False
    # need lam r / (2 (r + R)) <= tm, i.e. R / r >= lam / (2 tm) - 1
    rhs = lam / (2 * tm) - 1
    if rhs <= 0:
        return True
    return R2 >= rhs * rhs * r2


# ---------------------------------------------------------------------------
# mixed-integer connection


class MixedCheck(NamedTuple):
    infinite: bool
    face: Optional[FaceDescriptor]  # face M of the projected face, in R^k
    exhaustive: bool


def mi_infinite_rank_check(Q: Polyhedron, k: int, c, delta, dir_budget: int = 2, Q_I=None) -> MixedCheck:
    """Look for a face M certifying that c.x <= delta has infinite split rank for Q,
    with x_1..x_k integer and the remaining coordinates continuous.

    M ranges over faces of the projection of {x in Q_I : c.x = delta}; it
    must meet the projection of {x in Q : c.x > delta}, and relint M must
    avoid the interior of every split of R^k (searched with ``dir_budget``).
    """
    n = Q.n
    c = tuple(as_fraction(x) for x in c)
    delta = as_fraction(delta)
    if Q_I is None:
        Q_I = mixed_hull(Q, k)
    if Q_I.is_empty():
        return MixedCheck(False, None, True)
    if any(dot(c, l) != 0 for l in Q_I.lines) or any(dot(c, r) > 0 for r in Q_I.rays) or \
            any(dot(c, v) > delta for v in Q_I.vertices):
        raise ReverseRankError("inequality is not valid for the mixed-integer hull")
    top = Q_I.intersect(equalities=[(c, delta)])
    if top.is_empty():
        return MixedCheck(False, None, True)
    proj = project_onto(top, k)
    faces = all_faces(proj)
    faces.sort(key=lambda G: (-G.dimension, sorted(G.tight_set)))
    for M in faces:
        Mp = M.polyhedron
        lifted_in = [(tuple(a) + (0,) * (n - k), b) for a, b in Mp.inequalities]
        lifted_eq = [(tuple(a) + (0,) * (n - k), b) for a, b in Mp.equalities]
        QM = Q.intersect(inequalities=lifted_in, equalities=lifted_eq)
        if QM.is_empty() or not _exceeds(QM, c, delta):
            continue
        if containing_split(Mp, dir_budget) is None:
            return MixedCheck(True, M, False)
    # every face failed for a budget-independent reason
    return MixedCheck(False, None, True)


def _exceeds(P, c, delta) -> bool:
    if any(dot(c, l) != 0 for l in P.lines) or any(dot(c, r) > 0 for r in P.rays):
        return True
    return any(dot(c, v) > delta for v in P.vertices)


@dataclass
class MixedInstance:
    Q: Polyhedron
    k: int
    P_tilde: Polyhedron
    x_tilde: tuple
    c: tuple
    delta: Fraction
    transform: object  # unimodular map applied before projecting


def prop72_construct(P: Polyhedron, F, L, xbar=None) -> MixedInstance:
    """Mixed-integer polyhedron clconv(pi(P), pi(xbar) + e_j for j > k) from a certificate.

    A unimodular map first sends L onto the last coordinates; pi zeroes
    them.  Also returns an inequality c.x <= delta defining the smallest
    face of pi(P) containing pi(F), with c not orthogonal to L.
    """
    n = P.n
    Fd = F if isinstance(F, FaceDescriptor) else face_from_polyhedron(P, F)
    Fp = Fd.polyhedron
    L = _subspace(L, n)
    if Fp.is_empty() or L.dim == 0:
        raise ReverseRankError("invalid certificate")
    if not check_condition_ii(P, Fd, L).holds:
        raise ReverseRankError("invalid certificate: condition (ii) fails")
    if xbar is None:
        xbar = barycenter(Fp)
    xbar = tuple(as_fraction(x) for x in xbar)
    if not relint_contains(Fp, xbar):
        raise ReverseRankError("xbar is not in the relative interior of F")
    u = unimodular_to_last(L.basis, n)
    k = n - L.dim
    pad = (0,) * (n - k)

    def pi(x):
        return tuple(x[:k]) + pad

    Pu = P.map(u)
    Pt = Polyhedron.from_vrep([pi(v) for v in Pu.vertices], [pi(r) for r in Pu.rays],
                              [pi(l) for l in Pu.lines], n=n)
    xt = pi(u(xbar))
    extra = []
    for j in range(k, n):
        extra.append(tuple(xt[i] + (1 if i == j else 0) for i in range(n)))
    Q = Polyhedron.from_vrep(list(Pt.vertices) + extra, Pt.rays, Pt.lines, n=n)
    Fu = Fp.map(u)
    Ft = Polyhedron.from_vrep([pi(v) for v in Fu.vertices], [pi(r) for r in Fu.rays],
                              [pi(l) for l in Fu.lines], n=n)
    Fbar = face_from_polyhedron(Pt, Ft)
    ineqs = Pt.inequalities
    c = [Fraction(0)] * n
    delta = Fraction(0)
    for i in Fbar.tight_set:
        a, b = ineqs[i]
        c = [x + y for x, y in zip(c, a)]
        delta += b
    c[k] += 1  # x_{k+1} = 0 on pi(P), and c is no longer orthogonal to L
    return MixedInstance(Q, k, Pt, xt, tuple(c), delta, u)


# ---------------------------------------------------------------------------
# experiments


def growth_experiment(ts, norm_bound: int = 2, max_rounds: int = 50, threads: int = 1) -> list:
    """Budgeted split ranks of make_Qt(t) for each t; rows are dicts."""
    from .cuts import ClosureBudget, rank_budgeted

    budget = ClosureBudget(norm_bound=norm_bound, max_rounds=max_rounds)
    rows = []
    for t in ts:
        res = rank_budgeted(make_Qt(t), budget, "split", threads=threads)
        rows.append({
            "t": as_fraction(t),
            "rank": res.rank if res.reached_hull else None,
            "reached_hull": res.reached_hull,
            "rounds": res.rank,
            "budget": norm_bound,
            "max_rounds": max_rounds,
            "status": res.status,
        })
    return rows
