"""Group-likes, characters, super-data, skew primitives and invariants of Hopf superalgebras."""

from .characters import Character, CharacterSet, certificate_count, character_product, characters
from .data import SuperDatum, admissible_data, find_datum, hit_left, hit_right, super_data
from .fingerprint import Fingerprint, fingerprint, fingerprints_equal
from .grouplikes import GroupLikes, grouplikes, is_grouplike
from .primitives import reduced_skew_dimension, skew_primitives
from .properties import PropertyReport, is_pointed, is_semisimple

__all__ = [
    "Character",
    "CharacterSet",
    "Fingerprint",
    "GroupLikes",
    "PropertyReport",
    "SuperDatum",
    "admissible_data",
    "certificate_count",
    "character_product",
    "characters",
    "find_datum",
    "fingerprint",
    "fingerprints_equal",
    "grouplikes",
    "hit_left",
    "hit_right",
    "is_grouplike",
    "is_pointed",
    "is_semisimple",
    "reduced_skew_dimension",
    "skew_primitives",
    "super_data",
]
