"""Exact cyclotomic scalars."""

from .cyclotomic import (
    CycRational,
    as_scalar,
    common_conductor,
    cyc_arith,
    field,
    roots_of_unity,
    unity_order,
    zeta,
)

__all__ = [
    "CycRational",
    "as_scalar",
    "common_conductor",
    "cyc_arith",
    "field",
    "roots_of_unity",
    "unity_order",
    "zeta",
]
