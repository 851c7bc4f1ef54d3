"""Named example polyhedra."""
from __future__ import annotations

from .polyhedra import Polyhedron

BUILTINS = {
    "triangle3d": (
        "triangle conv{(0,0,0),(2,0,0),(0,2,0)} in R^3",
        lambda: Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0)]),
    ),
    "sec7-polytope": (
        "conv{(0,0,0),(2,0,0),(0,2,0),(1,1,1),(1,1,-1)}",
        lambda: Polyhedron.from_vrep([(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, 1), (1, 1, -1)]),
    ),
    "sec81-triangle4d": (
        "triangle conv{0, e1, e2} in R^4",
        lambda: Polyhedron.from_vrep([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0)]),
    ),
    "sec82-polytope4d": (
        "conv{(0,0,0,0),(1,0,0,0),(1,2,0,0),(1,0,2,0)}",
        lambda: Polyhedron.from_vrep([(0, 0, 0, 0), (1, 0, 0, 0), (1, 2, 0, 0), (1, 0, 2, 0)]),
    ),
    "unit-square": (
        "[0,1]^2",
        lambda: Polyhedron.from_vrep([(0, 0), (1, 0), (0, 1), (1, 1)]),
    ),
    "zero-one-segment": (
        "segment conv{(0,0),(0,1)}",
        lambda: Polyhedron.from_vrep([(0, 0), (0, 1)]),
    ),
}


def builtin(name: str) -> Polyhedron:
    try:
        return BUILTINS[name][1]()
    except KeyError:
        raise KeyError("unknown builtin %r" % name) from None


def describe(name: str) -> str:
    return BUILTINS[name][0]
