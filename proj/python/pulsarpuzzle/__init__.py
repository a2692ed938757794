"""Pulsar puzzles: counting-circle Latin squares and their sequence."""

from ._core import (
    CellCoord,
    Grid,
    InferenceLevel,
    Piece,
    SolveReport,
    SpiralPattern,
    VerifyReport,
    block,
    build_pattern,
    circled_walk_outward,
    construct_direct,
    construct_recursive,
    count_latin_only,
    dual,
    dual_block,
    dual_grid,
    enumerate_solutions,
    grid_ascii,
    nth_term,
    pattern_ascii,
    pattern_json,
    prefix,
    solution_json,
    uncircled_walk_outward,
    verify,
)

__all__ = [
    "CellCoord",
    "Grid",
    "InferenceLevel",
    "Piece",
    "SolveReport",
    "SpiralPattern",
    "VerifyReport",
    "block",
    "build_pattern",
    "circled_walk_outward",
    "construct_direct",
    "construct_recursive",
    "count_latin_only",
    "dual",
    "dual_block",
    "dual_grid",
    "enumerate_solutions",
    "grid_ascii",
    "nth_term",
    "pattern_ascii",
    "pattern_json",
    "prefix",
    "solution_json",
    "uncircled_walk_outward",
    "verify",
]
