"""Exact integer and rational linear algebra.

All scalars are Python ints or :class:`fractions.Fraction`; nothing here
touches floating point.  Matrices are tuples of row tuples.  Sizes are
meant to be small (ambient dimension up to about 8).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence

Rational = Fraction
IntVector = tuple  # tuple[int, ...]
IntMatrix = tuple  # tuple[IntVector, ...]


class ExactError(ValueError):
    """Raised when an integer linear algebra precondition fails."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted: %r" % (x,))
    return Fraction(x)


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def lcm_of_denominators(v: Iterable[Fraction]) -> int:
    m = 1
    for x in v:
        d = as_fraction(x).denominator
        m = m * d // gcd(m, d)
    return m


def integer_scaling(v: Sequence) -> tuple:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    fr = [as_fraction(x) for x in v]
    m = lcm_of_denominators(fr)
    ints = [int(x * m) for x in fr]
    g = vector_gcd(ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def primitive(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries.

    The sign is kept, so ``primitive((-4, 6)) == (-2, 3)``.
    """
    v = tuple(int(x) for x in v)
    g = vector_gcd(v)
    if g == 0:
        raise ExactError("no primitive form: zero vector")
    return tuple(x // g for x in v)


def canonical_sign(v: Sequence) -> tuple:
    """Flip ``v`` so that its first nonzero entry is positive."""
    v = tuple(v)
    for x in v:
        if x != 0:
            return v if x > 0 else tuple(-y for y in v)
    return v


def canonical_primitive(v: Sequence) -> tuple:
    return canonical_sign(primitive(integer_scaling(v)))


def direction_key(v: Sequence) -> tuple:
    """Total order used for every deterministic direction/subspace search.

    Smaller sup-norm first, then smaller l1-norm, then vectors whose early
    coordinates carry the weight, then positive entries before negative.
    Under this order e_1 < e_2 < ... < e_n.
    """
    return (
        max((abs(x) for x in v), default=0),
        sum(abs(x) for x in v),
        tuple(-abs(x) for x in v),
        tuple(-x for x in v),
    )


@lru_cache(maxsize=None)
def primitive_directions(n: int, bound: int, signed: bool = False) -> tuple:
    """All primitive integer vectors with sup-norm at most ``bound``.

    With ``signed=False`` only the canonical representative (first nonzero
    entry positive) of each +-pair is returned.  Sorted by :func:`direction_key`.
    """
    out = []

    def rec(prefix):
        if len(prefix) == n:
            if any(prefix) and vector_gcd(prefix) == 1:
                t = tuple(prefix)
                if signed or canonical_sign(t) == t:
                    out.append(t)
            return
        for x in range(-bound, bound + 1):
            prefix.append(x)
            rec(prefix)
            prefix.pop()

    rec([])
    out.sort(key=direction_key)
    return tuple(out)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = list(zip(*B)) if B else []
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def mat_vec(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(dot(row, x) for row in A)


def transpose(A: Sequence[Sequence], ncols: Optional[int] = None) -> tuple:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def determinant(A: Sequence[Sequence]) -> Fraction:
    n = len(A)
    M = [[as_fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def rref(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[as_fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [tuple(row) for row in M[:r]], pivots


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    return len(rref(rows, ncols if ncols is not None else len(rows[0]))[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Rational basis of {x : rows . x = 0}, each vector scaled to primitive integers."""
    R, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, piv):
            x[p] = -row[f]
        basis.append(integer_scaling(x))
    return basis


def inverse(A: Sequence[Sequence]) -> tuple:
    n = len(A)
    M = [[as_fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    R, piv = rref(M, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ExactError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def _xgcd(a: int, b: int):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


# ---------------------------------------------------------------------------
# Hermite normal form


class HNFResult(NamedTuple):
    H: tuple
    U: tuple
    pivots: tuple


def hnf(M: Sequence[Sequence[int]]) -> HNFResult:
    """Row-style Hermite normal form with transformation.

    Returns ``H, U, pivots`` with ``U @ M == H``, ``|det U| == 1``, ``H`` in
    row echelon form, pivots positive and entries above each pivot reduced
    into ``[0, pivot)``.  Zero rows of ``H`` sit at the bottom and the rows of
    ``U`` matching them span the integer left kernel of ``M``.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    H = [[int(x) for x in row] for row in M]
    U = [list(r) for r in identity(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        # gather the gcd of column c (rows r..) into row r
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            # [[x, y], [-q, p]] has determinant x*p + y*q = 1
            H[r], H[i] = ([x * s + y * t for s, t in zip(H[r], H[i])],
                          [-q * s + p * t for s, t in zip(H[r], H[i])])
            U[r], U[i] = ([x * s + y * t for s, t in zip(U[r], U[i])],
                          [-q * s + p * t for s, t in zip(U[r], U[i])])
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        piv = H[r][c]
        for i in range(r):
            f = H[i][c] // piv
            if f:
                H[i] = [s - f * t for s, t in zip(H[i], H[r])]
                U[i] = [s - f * t for s, t in zip(U[i], U[r])]
        pivots.append(c)
        r += 1
    return HNFResult(tuple(map(tuple, H)), tuple(map(tuple, U)), tuple(pivots))


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> tuple:
    """Lattice basis (rows) of {x in Z^n : rows . x = 0}."""
    if not rows:
        return identity(ncols)
    res = hnf(transpose(rows))
    r = len(res.pivots)
    return tuple(res.U[r:])


def saturate(rows: Sequence[Sequence], ncols: int) -> tuple:
    """Canonical (HNF) lattice basis of span(rows) intersected with Z^n."""
    rows = [integer_scaling(r) for r in rows if any(r)]
    if not rows:
        return ()
    perp = integer_kernel(rows, ncols)
    basis = integer_kernel(perp, ncols) if perp else identity(ncols)
    H = hnf(basis).H
    return tuple(row for row in H if any(row))


# ---------------------------------------------------------------------------
# Unimodular maps


@dataclass(frozen=True)
class UnimodularMap:
    """x -> U x + v with U an integer matrix of determinant +-1 and v integer."""

    U: tuple
    v: tuple = None

    def __post_init__(self):
        U = tuple(tuple(int(x) for x in row) for row in self.U)
        object.__setattr__(self, "U", U)
        n = len(U)
        v = self.v if self.v is not None else (0,) * n
        object.__setattr__(self, "v", tuple(int(x) for x in v))
        if any(len(row) != n for row in U):
            raise ExactError("unimodular map needs a square matrix")
        if abs(determinant(U)) != 1:
            raise ExactError("matrix is not unimodular")

    @property
    def dim(self) -> int:
        return len(self.U)

    def __call__(self, x: Sequence) -> tuple:
        return tuple(dot(row, x) + c for row, c in zip(self.U, self.v))

    def linear(self, d: Sequence) -> tuple:
        """Image of a direction (no translation)."""
        return mat_vec(self.U, d)

    def inverse(self) -> "UnimodularMap":
        Ui = tuple(tuple(int(x) for x in row) for row in inverse(self.U))
        return UnimodularMap(Ui, tuple(-x for x in mat_vec(Ui, self.v)))

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """``self`` after ``other``."""
        return UnimodularMap(mat_mul(self.U, other.U),
                             tuple(a + b for a, b in zip(self.linear(other.v), self.v)))

    def transform_normal(self, a: Sequence) -> tuple:
        """Normal vector a' with a'.u(x) = a.x + const, i.e. a U^{-1}."""
        Ui = inverse(self.U)
        return tuple(int(dot(a, col)) for col in zip(*Ui))


def extend_to_unimodular(B: Sequence[Sequence[int]], n: Optional[int] = None) -> UnimodularMap:
    """Map sending the rows of ``B`` to e_1, ..., e_k and Z^n onto Z^n.

    ``B`` holds k integer vectors (as rows) that must form a basis of a
    direct summand of Z^n; otherwise ``ExactError`` is raised.
    """
    B = [tuple(int(x) for x in row) for row in B]
    if n is None:
        if not B:
            raise ExactError("ambient dimension required for an empty basis")
        n = len(B[0])
    k = len(B)
    if k == 0:
        return UnimodularMap(identity(n))
    res = hnf(transpose(B))
    if len(res.pivots) < k:
        raise ExactError("vectors are linearly dependent")
    Hk = [row[:k] for row in res.H[:k]]
    if abs(determinant(Hk)) != 1:
        raise ExactError("not a direct summand of Z^n")
    # U0 B^T = [H; 0]; U = diag(H^-1, I) U0 gives U B^T = [I; 0]
    Hinv = inverse(Hk)
    U = []
    for i in range(k):
        U.append(tuple(int(sum(Hinv[i][j] * res.U[j][c] for j in range(k))) for c in range(n)))
    U.extend(res.U[k:])
    return UnimodularMap(tuple(U))


def unimodular_to_last(L: Sequence[Sequence[int]], n: int) -> UnimodularMap:
    """Unimodular map sending span(L) onto the last dim(L) coordinates.

    The first n-k rows of the matrix are the HNF basis of the integer
    lattice orthogonal to L, so coordinate-aligned inputs give the identity.
    """
    L = saturate(L, n)
    k = len(L)
    if k == 0:
        return UnimodularMap(identity(n))
    C = hnf(integer_kernel(L, n)).H
    C = tuple(row for row in C if any(row))
    if not C:
        return UnimodularMap(identity(n))
    E = extend_to_unimodular(C, n)
    W = inverse(E.U)  # first n-k columns equal C^T
    return UnimodularMap(tuple(tuple(int(x) for x in row) for row in transpose(W)))


# ---------------------------------------------------------------------------
# Linear diophantine systems


class DiophantineSolution(NamedTuple):
    particular: tuple
    kernel: tuple  # rows; solution set is particular + Z-span(kernel)


def solve_diophantine(A: Sequence[Sequence], b: Sequence) -> Optional[DiophantineSolution]:
    """Integer solutions of A x = b, or ``None`` when there are none.

    Rational data is accepted; each equation is scaled to integers first.
    """
    A = [list(row) for row in A]
    if not A:
        raise ExactError("empty system: dimension unknown")
    n = len(A[0])
    Ai, bi = [], []
    for row, rhs in zip(A, b):
        fr = [as_fraction(x) for x in row] + [as_fraction(rhs)]
        m = lcm_of_denominators(fr)
        Ai.append([int(x * m) for x in fr[:-1]])
        bi.append(int(fr[-1] * m))
    m_eq = len(Ai)
    res = hnf(transpose(Ai))  # U A^T = H  =>  A U^T = H^T
    H, U, piv = res.H, res.U, res.pivots
    r = len(piv)
    y = [0] * n
    for j, p in enumerate(piv):
        s = bi[p] - sum(H[jj][p] * y[jj] for jj in range(j))
        if s % H[j][p]:
            return None
        y[j] = s // H[j][p]
    for i in range(m_eq):
        if sum(H[j][i] * y[j] for j in range(r)) != bi[i]:
            return None
    x0 = tuple(sum(U[j][c] * y[j] for j in range(n)) for c in range(n))
    return DiophantineSolution(x0, tuple(U[r:]))
