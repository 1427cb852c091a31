"""Exact encodings of finite groups as 0/1 matrices and the XB = BY solver."""

from ._core import (
    BMatrix,
    Group,
    GrpmatError,
    build_b,
    canonical_b,
    catalog,
    catalog_names,
    census,
    classified_names,
    cross_check,
    d_z,
    enumerate_groups,
    iso,
    parse_b,
    structured_solutions,
    verify,
)

__all__ = [
    "BMatrix",
    "Group",
    "GrpmatError",
    "build_b",
    "canonical_b",
    "catalog",
    "catalog_names",
    "census",
    "classified_names",
    "cross_check",
    "d_z",
    "enumerate_groups",
    "iso",
    "parse_b",
    "structured_solutions",
    "verify",
]
