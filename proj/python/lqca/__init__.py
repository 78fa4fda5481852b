"""Unitarity decision for linear quantum cellular automata."""

from ._lqca import (
    Automaton,
    DynamicBasis,
    InputError,
    OracleScaleError,
    Tolerance,
    border_vectors,
    check,
    decide_closed,
    expand_to_simple,
    load,
    mirror,
    normalize_neighborhood,
    parse,
    row_norm_squared,
    step,
    transfer_operators,
    truncated_row_norm,
    validate,
)

__all__ = [
    "Automaton",
    "DynamicBasis",
    "InputError",
    "OracleScaleError",
    "Tolerance",
    "border_vectors",
    "check",
    "decide_closed",
    "expand_to_simple",
    "load",
    "mirror",
    "normalize_neighborhood",
    "parse",
    "row_norm_squared",
    "step",
    "transfer_operators",
    "truncated_row_norm",
    "validate",
]
