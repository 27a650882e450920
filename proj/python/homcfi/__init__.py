"""Exact colored-graph homomorphism algebra, CFI filters and the
motif-oracle reduction.

Graphs and quantum graphs cross the boundary as JSON strings in the same
format the `homcfi` CLI uses; counts come back as exact ints and rationals
as `fractions.Fraction`.
"""

from _homcfi import (  # noqa: F401
    PromiseViolation,
    cardinality_filter,
    cfi_build,
    cfi_filter,
    evaluate,
    expand_ind,
    expand_sub,
    hom,
    hom_quantum,
    ie_filter,
    ind,
    minor_lift,
    reduce,
    sub,
    tensor,
    to_dot,
    verify,
)

__all__ = [
    "PromiseViolation",
    "cardinality_filter",
    "cfi_build",
    "cfi_filter",
    "evaluate",
    "expand_ind",
    "expand_sub",
    "hom",
    "hom_quantum",
    "ie_filter",
    "ind",
    "minor_lift",
    "reduce",
    "sub",
    "tensor",
    "to_dot",
    "verify",
]
