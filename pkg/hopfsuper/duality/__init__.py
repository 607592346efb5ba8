"""Dual Hopf superalgebras and Hopf pairings."""

from .constructions import exterior_pairing, pairing_from_generators, search_pairing
from .dual import double_dual_check, dual
from .pairing import (
    HopfPairing,
    PairingMorphism,
    PairingStatus,
    bosonization_duality,
    pairing_to_morphism,
    verify_hopf_pairing,
)

__all__ = [
    "HopfPairing",
    "PairingMorphism",
    "PairingStatus",
    "bosonization_duality",
    "double_dual_check",
    "dual",
    "exterior_pairing",
    "pairing_from_generators",
    "pairing_to_morphism",
    "search_pairing",
    "verify_hopf_pairing",
]
