"""Transitive (q-1)-fold packings of PG(n, 2^k).

Field elements are integers in the polynomial-basis encoding, points are
``(x, x0)`` tuples and lines are sorted lists of points.
"""

from ._tfpack import (
    ConstructionError,
    FieldContext,
    FormatError,
    PreconditionError,
    alpha_set,
    apply_beta,
    build_packing,
    build_spread,
    canonical_point,
    classify_bruteforce,
    enumerate_lines,
    enumerate_points,
    eval_form,
    lambda_bruteforce,
    line_through,
    line_through_affine_point,
    line_through_U_point,
    read_packing,
    unique_lambda,
    verify_packing,
    verify_spread,
    verify_transitivity,
    write_packing,
)

__all__ = [
    "ConstructionError",
    "FieldContext",
    "FormatError",
    "PreconditionError",
    "alpha_set",
    "apply_beta",
    "build_packing",
    "build_spread",
    "canonical_point",
    "classify_bruteforce",
    "enumerate_lines",
    "enumerate_points",
    "eval_form",
    "lambda_bruteforce",
    "line_through",
    "line_through_affine_point",
    "line_through_U_point",
    "read_packing",
    "unique_lambda",
    "verify_packing",
    "verify_spread",
    "verify_transitivity",
    "write_packing",
]
