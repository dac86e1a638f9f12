"""Right-angled polytopes, 4-colourings and characteristic functions."""

from ._core import (
    FormatError,
    InvalidPolytope,
    Polytope,
    betti,
    charfuns_equivalent,
    classify,
    colourings,
    colourings_equivalent,
    count_colourings,
    find_belts,
    fullerene_status,
    is_complete,
    is_orientable,
    is_pogorelov,
    lambda_chi,
    load,
    load_file,
    run_cli,
    validate_charfun,
)

__all__ = [
    "FormatError",
    "InvalidPolytope",
    "Polytope",
    "betti",
    "charfuns_equivalent",
    "classify",
    "colourings",
    "colourings_equivalent",
    "count_colourings",
    "find_belts",
    "fullerene_status",
    "is_complete",
    "is_orientable",
    "is_pogorelov",
    "lambda_chi",
    "load",
    "load_file",
    "run_cli",
    "validate_charfun",
]
