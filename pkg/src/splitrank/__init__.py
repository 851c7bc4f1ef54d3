"""Exact split closures, split ranks and reverse split rank certificates for
rational polyhedra."""
from .cuts import (
    ClosureBudget,
    RankResult,
    Split,
    cg_closure_budgeted,
    enumerate_effective_splits,
    face_closure_commutes,
    mixed_hull,
    mixed_split_closure_budgeted,
    rank_budgeted,
    split_closure_budgeted,
    split_cut,
)
from .exact import UnimodularMap, extend_to_unimodular, hnf, solve_diophantine, unimodular_to_last
from .lattice import (
    Subspace,
    WidthResult,
    enum_integer_points,
    integer_hull,
    is_relatively_lattice_free,
    lattice_width,
    near_subspace_point,
)
from .polyhedra import (
    FaceDescriptor,
    Polyhedron,
    PolyhedronError,
    affine_hull,
    all_faces,
    dd_convert,
    face,
    faces_containing,
    hull_union,
    intersect,
    minkowski_sum_subspace,
    project_out,
    quotient_lineality,
    recession_and_lineality,
    relint_contains,
)
from .reverse import (
    Certificate,
    check_condition_i,
    check_condition_ii,
    find_certificate,
    find_cg_certificate,
    make_P_eps,
    make_QF_lambda,
    make_Qt,
    mi_infinite_rank_check,
    prop72_construct,
)
from .textio import ParseError, format_polyhedron, parse_polyhedron

__all__ = [
    "affine_hull",
    "all_faces",
    "Certificate",
    "cg_closure_budgeted",
    "check_condition_i",
    "check_condition_ii",
    "ClosureBudget",
    "dd_convert",
    "enum_integer_points",
    "enumerate_effective_splits",
    "extend_to_unimodular",
    "face",
    "face_closure_commutes",
    "FaceDescriptor",
    "faces_containing",
    "find_certificate",
    "find_cg_certificate",
    "format_polyhedron",
    "hnf",
    "hull_union",
    "integer_hull",
    "intersect",
    "is_relatively_lattice_free",
    "lattice_width",
    "make_P_eps",
    "make_QF_lambda",
    "make_Qt",
    "mi_infinite_rank_check",
    "minkowski_sum_subspace",
    "mixed_hull",
    "mixed_split_closure_budgeted",
    "near_subspace_point",
    "parse_polyhedron",
    "ParseError",
    "Polyhedron",
    "PolyhedronError",
    "project_out",
    "prop72_construct",
    "quotient_lineality",
    "rank_budgeted",
    "RankResult",
    "recession_and_lineality",
    "relint_contains",
    "solve_diophantine",
    "Split",
    "split_closure_budgeted",
    "split_cut",
    "Subspace",
    "unimodular_to_last",
    "UnimodularMap",
    "WidthResult",
]
