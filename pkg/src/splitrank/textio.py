"""Plain-text format for polyhedra and points.

::

    # unit square
    H 2
    1 0 <= 1
    -1 0 <= 0
    0 1 <= 1
    0 -1 <= 0

    V 3
    v 0 0 1/2
    r 1 0 0
    l 0 0 1

H lines may also use ``>=`` and ``=``.  Numbers are integers or ``p/q``.
"""
from __future__ import annotations

from fractions import Fraction

from .polyhedra import Polyhedron


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = "line %d" % line
            if column is not None:
                where += ", column %d" % column
            where += ": "
        super().__init__(where + message)


def format_number(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def format_point(x) -> str:
    return " ".join(format_number(c) for c in x)


def _tokens(line):
    """Split on whitespace, keeping 1-based start columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _number(tok, lineno, col):
    try:
        if "/" in tok:
            p, q = tok.split("/")
            q = int(q)
            if q == 0:
                raise ParseError("zero denominator", lineno, col)
            return Fraction(int(p), q)
        return Fraction(int(tok))
    except ValueError:
        raise ParseError("expected a number, got %r" % tok, lineno, col) from None


def parse_point(text: str, n=None) -> tuple:
    toks = _tokens(text.split("#", 1)[0])
    pt = tuple(_number(t, 1, c) for t, c in toks)
    if n is not None and len(pt) != n:
        raise ParseError("expected %d coordinates, got %d" % (n, len(pt)), 1)
    return pt


def parse_polyhedron(text: str) -> Polyhedron:
    kind = None
    n = None
    ineqs, eqs = [], []
    verts, rays, lines = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        if kind is None:
            head, col = toks[0]
            if head not in ("H", "V") or len(toks) != 2:
                raise ParseError("expected header 'H n' or 'V n'", lineno, col)
            try:
                n = int(toks[1][0])
            except ValueError:
                raise ParseError("bad dimension %r" % toks[1][0], lineno, toks[1][1]) from None
            if n < 1:
                raise ParseError("dimension must be positive", lineno, toks[1][1])
            kind = head
            continue
        if kind == "H":
            if len(toks) != n + 2:
                raise ParseError("expected %d coefficients, a relation and a right-hand side" % n,
                                 lineno, toks[0][1])
            rel, rcol = toks[n]
            a = [_number(t, lineno, c) for t, c in toks[:n]]
            b = _number(toks[n + 1][0], lineno, toks[n + 1][1])
            if rel == "<=":
                ineqs.append((a, b))
            elif rel == ">=":
                ineqs.append(([-x for x in a], -b))
            elif rel in ("=", "=="):
                eqs.append((a, b))
            else:
                raise ParseError("expected '<=', '>=' or '=', got %r" % rel, lineno, rcol)
        else:
            tag, tcol = toks[0]
            if tag not in ("v", "r", "l"):
                raise ParseError("expected 'v', 'r' or 'l', got %r" % tag, lineno, tcol)
            if len(toks) != n + 1:
                raise ParseError("expected %d coordinates" % n, lineno, tcol)
            x = tuple(_number(t, lineno, c) for t, c in toks[1:])
            {"v": verts, "r": rays, "l": lines}[tag].append(x)
    if kind is None:
        raise ParseError("missing header 'H n' or 'V n'")
    if kind == "H":
        return Polyhedron.from_hrep(ineqs, eqs, n=n)
    if not verts and (rays or lines):
        raise ParseError("V-representation needs at least one vertex")
    return Polyhedron.from_vrep(verts, rays, lines, n=n)


def format_hrep(P: Polyhedron) -> str:
    out = ["H %d" % P.n]
    if P.is_empty():
        out.append(" ".join(["0"] * P.n) + " <= -1")
        return "\n".join(out) + "\n"
    for a, b in P.equalities:
        out.append("%s = %s" % (format_point(a), format_number(b)))
    for a, b in P.inequalities:
        out.append("%s <= %s" % (format_point(a), format_number(b)))
    return "\n".join(out) + "\n"


def format_vrep(P: Polyhedron) -> str:
    out = ["V %d" % P.n]
    if P.is_empty():
        out.append("# empty")
    for v in P.vertices:
        out.append("v " + format_point(v))
    for r in P.rays:
        out.append("r " + format_point(r))
    for l in P.lines:
        out.append("l " + format_point(l))
    return "\n".join(out) + "\n"


def format_polyhedron(P: Polyhedron, kind="H") -> str:
    return format_hrep(P) if kind == "H" else format_vrep(P)
