"""Split cuts, Chvatal-Gomory cuts and their budgeted closures and ranks.

A split is ``S = {x : beta <= a.x <= beta + 1}`` with ``a`` primitive
integer and ``beta`` integer.  Its cut is the closed convex hull of the two
pieces ``Q & {a.x <= beta}`` and ``Q & {a.x >= beta + 1}``.

The true split closure intersects over all splits.  Here the family is
restricted to normals with ``|a|_inf <= norm_bound``; the only splits in
that family that can change ``Q`` are those with some vertex strictly
inside the strip (if every vertex lies in one of the two pieces, so does
the hull of the vertices, and rays are kept by whichever piece is
nonempty).  Those are enumerated exactly, so each budgeted round is a
finite computation.  Budgeted closures contain the true closures.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .exact import dot, primitive_directions, vector_gcd
from .lattice import integer_hull, enum_integer_points
from .polyhedra import (
    FaceDescriptor,
    Polyhedron,
    PolyhedronError,
    hull_union,
    project_onto,
)


@dataclass(frozen=True, order=True)
class Split:
    a: tuple
    beta: int
    integer_coords: Optional[int] = None  # splits of a mixed-integer budget use the first k coords

    def __post_init__(self):
        if vector_gcd(self.a) != 1:
            raise ValueError("split normal must be primitive")
        if self.integer_coords is not None and any(self.a[self.integer_coords:]):
            raise ValueError("mixed split normal must vanish on continuous coordinates")

    def interior_contains(self, x) -> bool:
        v = dot(self.a, x)
        return self.beta < v < self.beta + 1

    def __str__(self):
        return "%d <= %s.x <= %d" % (self.beta, list(self.a), self.beta + 1)


@dataclass(frozen=True)
class ClosureBudget:
    norm_bound: int = 1
    max_rounds: int = 20
    mixed_k: Optional[int] = None

    def __post_init__(self):
        if self.norm_bound < 1:
            raise ValueError("norm_bound must be at least 1")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be at least 1")


def _as_budget(budget) -> ClosureBudget:
    if isinstance(budget, ClosureBudget):
        return budget
    return ClosureBudget(norm_bound=int(budget))


# ---------------------------------------------------------------------------
# single cuts


def split_pieces(Q: Polyhedron, S: Split):
    a = S.a
    lo = Q.intersect(inequalities=[(a, S.beta)])
    hi = Q.intersect(inequalities=[(tuple(-x for x in a), -(S.beta + 1))])
    return lo, hi


def split_changes(Q: Polyhedron, S: Split) -> bool:
    """Whether the split cut can differ from Q (some vertex strictly inside, no crossing line)."""
    if Q.is_empty():
        return False
    if any(dot(S.a, l) != 0 for l in Q.lines):
        return False
    return any(S.interior_contains(v) for v in Q.vertices)


def split_cut(Q: Polyhedron, S: Split) -> Polyhedron:
    """Closed convex hull of Q minus the interior of the split."""
    if len(S.a) != Q.n:
        raise PolyhedronError("dimension mismatch")
    if not split_changes(Q, S):
        return Q
    lo, hi = split_pieces(Q, S)
    return hull_union(lo, hi)


def enumerate_effective_splits(Q: Polyhedron, budget) -> List[Split]:
    """Budgeted splits with a vertex of Q strictly inside, sorted canonically."""
    budget = _as_budget(budget)
    if Q.is_empty():
        return []
    k = budget.mixed_k
    n = Q.n
    lines = Q.lines
    verts = Q.vertices
    if k is None:
        dirs = primitive_directions(n, budget.norm_bound)
    else:
        dirs = tuple(d + (0,) * (n - k) for d in primitive_directions(k, budget.norm_bound))
    out = set()
    for a in dirs:
        if any(dot(a, l) != 0 for l in lines):
            continue
        for v in verts:
            t = dot(a, v)
            if Fraction(t).denominator != 1:
                out.add(Split(a, math.floor(t), k))
    return sorted(out)


def _cut_rows(Q, cut):
    """Inequalities of ``cut`` that are not already rows of Q."""
    if cut is Q:
        return []
    have = set(Q.raw_constraints()[1])
    eqs, ineqs = cut.raw_constraints()
    rows = [h for h in ineqs if h not in have]
    # equalities of the cut become pairs of inequalities
    qeq = set(Q.raw_constraints()[0])
    for h in eqs:
        if h not in qeq:
            rows.append(h)
            rows.append(tuple(-x for x in h))
    return rows


def intersect_cuts(Q: Polyhedron, cuts) -> Polyhedron:
    if any(c.is_empty() for c in cuts):
        return Polyhedron.empty(Q.n)
    rows = []
    for c in cuts:
        for h in _cut_rows(Q, c):
            rows.append(h)
    if not rows:
        return Q
    return Q._add_rows([], sorted(set(rows)))


def split_closure_with(Q: Polyhedron, splits, threads: int = 1) -> Polyhedron:
    """Intersection of the split cuts of Q over a given family."""
    if Q.is_empty():
        return Q
    splits = sorted(s for s in splits if split_changes(Q, s))
    if threads > 1 and len(splits) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            cuts = list(ex.map(lambda s: split_cut(Q, s), splits))
    else:
        cuts = [split_cut(Q, s) for s in splits]
    return intersect_cuts(Q, cuts)


def split_closure_budgeted(Q: Polyhedron, budget, splits=None, threads: int = 1) -> Polyhedron:
    """Budgeted split closure (a superset of the true split closure)."""
    if splits is None:
        splits = enumerate_effective_splits(Q, budget)
    return split_closure_with(Q, splits, threads)


def mixed_split_closure_budgeted(Q: Polyhedron, budget, threads: int = 1) -> Polyhedron:
    budget = _as_budget(budget)
    if budget.mixed_k is None:
        raise ValueError("mixed closure needs mixed_k")
    return split_closure_budgeted(Q, budget, threads=threads)


def cg_closure_budgeted(Q: Polyhedron, budget) -> Polyhedron:
    """Q cut by every budgeted CG inequality c.x <= floor(max_Q c.x)."""
    budget = _as_budget(budget)
    if Q.is_empty():
        return Q
    rays, lines, verts = Q.rays, Q.lines, Q.vertices
    rows = []
    k = budget.mixed_k
    for c in primitive_directions(Q.n if k is None else k, budget.norm_bound, True):
        if k is not None:
            c = c + (0,) * (Q.n - k)
        if any(dot(c, l) != 0 for l in lines) or any(dot(c, r) > 0 for r in rays):
            continue
        m = max(dot(c, v) for v in verts)
        if Fraction(m).denominator != 1:
            rows.append((c, math.floor(m)))
    if not rows:
        return Q
    return Q.intersect(inequalities=rows)


# ---------------------------------------------------------------------------
# ranks


class RankResult(NamedTuple):
    rank: int
    reached_hull: bool
    trajectory: list
    status: str  # "reached", "stalled" or "round-limit"


def rank_budgeted(Q: Polyhedron, budget, kind: str = "split", target=None, threads: int = 1) -> RankResult:
    """Iterate a budgeted closure until the integer hull is reached.

    ``rank`` counts the rounds performed.  Only ``reached_hull=True`` gives
    an upper bound on the true rank.  ``target`` overrides the fixpoint
    (used for mixed-integer hulls).
    """
    budget = _as_budget(budget)
    if kind not in ("split", "cg"):
        raise ValueError("kind must be 'split' or 'cg'")
    if target is None:
        if not Q.is_bounded():
            raise PolyhedronError("rank requires a bounded polyhedron")
        target = integer_hull(Q)
    cur = Q
    traj = [Q]
    rounds = 0
    while True:
        if cur == target:
            return RankResult(rounds, True, traj, "reached")
        if rounds >= budget.max_rounds:
            return RankResult(rounds, False, traj, "round-limit")
        if kind == "split":
            nxt = split_closure_budgeted(cur, budget, threads=threads)
        else:
            nxt = cg_closure_budgeted(cur, budget)
        rounds += 1
        if nxt == cur:
            return RankResult(rounds, False, traj, "stalled")
        traj.append(nxt)
        cur = nxt


def face_closure_commutes(Q: Polyhedron, F: FaceDescriptor, budget) -> bool:
    """Check SC(Q) & F == SC(F) for the budgeted split family of Q."""
    if F.owner is not Q:
        raise PolyhedronError("face belongs to a different polyhedron")
    splits = enumerate_effective_splits(Q, budget)
    G = F.polyhedron
    left = split_closure_with(Q, splits)
    left = left.intersect(G)
    right = split_closure_with(G, splits)
    return left == right


# ---------------------------------------------------------------------------
# mixed-integer hull


def mixed_hull(Q: Polyhedron, k: int) -> Polyhedron:
    """conv(Q & (Z^k x R^(n-k))), computed from the fibers over integer points of
    the projection onto the first k coordinates (which must be bounded)."""
    if Q.is_empty():
        return Q
    n = Q.n
    proj = project_onto(Q, k)
    if not proj.is_bounded():
        raise PolyhedronError("projection onto the integer coordinates must be bounded")
    out = None
    for z in enum_integer_points(proj):
        fiber = Q.intersect(equalities=[(tuple(int(j == i) for j in range(n)), z[i]) for i in range(k)])
        if fiber.is_empty():
            continue
        out = fiber if out is None else hull_union(out, fiber)
    return out if out is not None else Polyhedron.empty(n)
