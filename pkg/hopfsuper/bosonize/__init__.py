"""Bosonization H#𝕜ℤ₂ and its inverse through coinvariants."""

from .coinvariants import (
    CoinvariantRecord,
    GenerationReport,
    ProjectionRecord,
    carrier_space,
    coinvariants,
    generation_check,
    projection_pi,
    roundtrip_iso,
)
from .smash import BosonizationRecord, bosonize

__all__ = [
    "BosonizationRecord",
    "CoinvariantRecord",
    "GenerationReport",
    "ProjectionRecord",
    "bosonize",
    "carrier_space",
    "coinvariants",
    "generation_check",
    "projection_pi",
    "roundtrip_iso",
]
