"""Presentations, group data and the named catalog of Hopf (super)algebras."""

from .datum import DatumEntry, build_A_gamma_D, datum_orders, datum_presentation, format_datum, validate_datum
from .families import (
    build_AN,
    build_AN_presented,
    build_exterior,
    build_group_hopf,
    build_table_entry,
    build_taft,
    build_taft_presented,
    build_taft_superform,
)
from .groups import GroupData, automorphisms, invariant_factors_from_orders
from .presentation import (
    CrossRelation,
    Rewriter,
    SkewGenerator,
    SkewPresentation,
    build_from_presentation,
    parse_element,
    rewriter_for,
)
from .registry import PATTERNS, build_named, list_names

__all__ = [
    "PATTERNS",
    "CrossRelation",
    "DatumEntry",
    "GroupData",
    "Rewriter",
    "SkewGenerator",
    "SkewPresentation",
    "automorphisms",
    "build_AN",
    "build_AN_presented",
    "build_A_gamma_D",
    "build_exterior",
    "build_from_presentation",
    "build_group_hopf",
    "build_named",
    "build_table_entry",
    "build_taft",
    "build_taft_presented",
    "build_taft_superform",
    "datum_orders",
    "datum_presentation",
    "format_datum",
    "invariant_factors_from_orders",
    "list_names",
    "parse_element",
    "rewriter_for",
    "validate_datum",
]
