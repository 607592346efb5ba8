"""Lookup of catalog algebras by stable name."""

import re
from typing import Callable, Dict, List

import structlog

from ..core import HopfSuperAlgebraData
from ..errors import UnknownNameError
from ..scalars import zeta
from .families import (
    AN_2P_NAMES,
    SIXTEEN_NAMES,
    SQUARE_NAMES,
    STEFAN_NAMES,
    TABLE_2P_LABELS,
    TABLE_ENTRIES,
    an_2p,
    an_square,
    build_exterior,
    build_group_hopf,
    build_table_entry,
    build_taft,
    build_taft_superform,
    exotic_presentation,
    sixteen_presentation,
    stefan_presentation,
)
from .groups import GroupData
from .presentation import build_from_presentation

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

Builder = Callable[[int], HopfSuperAlgebraData]

PATTERNS = {
    "k": "the one-dimensional Hopf algebra",
    "kC<n>[xC<m>…]": "group algebra of C_n × C_m × …",
    "ext<n>": "exterior superalgebra on n odd primitives",
    "Taft(<n>[,<k>])": "T_{n²}(ζ_n^k), k = 1 by default",
    "TaftSuper(<n>[,<k>])": "super-form of T_{n²}(ζ_n^k) for n ≡ 2 mod 4",
}

_GROUP_RE = re.compile(r"^kC(\d+)((?:xC\d+)*)$")
_EXT_RE = re.compile(r"^ext(\d+)$")
_TAFT_RE = re.compile(r"^Taft(Super)?\((\d+)(?:,(\d+))?\)$")


def _fixed() -> Dict[str, Builder]:
    table: Dict[str, Builder] = {}
    for key in (*STEFAN_NAMES, "A''_C4:printed"):
        table[key] = lambda p, key=key: build_from_presentation(stefan_presentation(key), key)
    table["exotic"] = lambda p: build_from_presentation(exotic_presentation(), "exotic")
    table["exotic:printed"] = lambda p: build_from_presentation(exotic_presentation(printed=True), "exotic:printed")
    for key in (*SIXTEEN_NAMES, "A^(6):linked"):
        table[key] = lambda p, key=key: build_from_presentation(sixteen_presentation(key), key)
    for key in TABLE_ENTRIES:
        table[key] = lambda p, key=key: build_table_entry(key)
    for key in TABLE_2P_LABELS:
        table[key] = lambda p, key=key: build_table_entry(key, p)
    for key in AN_2P_NAMES:
        table[key] = lambda p, key=key: an_2p(p, key)
    for key in SQUARE_NAMES:
        table[key] = lambda p, key=key: an_square(p, key)
    return table


REGISTRY: Dict[str, Builder] = _fixed()

P_PARAMETERISED = frozenset((*TABLE_2P_LABELS, *AN_2P_NAMES, *SQUARE_NAMES))


def list_names() -> List[str]:
    return sorted(REGISTRY)


def build_named(name: str, p: int = 3) -> HopfSuperAlgebraData:
    """Build a catalog algebra.

    Args:
        name: A registered name or one of PATTERNS
        p: Odd prime for the p-parameterised families

    Raises:
        UnknownNameError: If the name is neither registered nor matches a pattern
        PresentationError: For "A^(6)", whose printed cross relation is not confluent
    """
    builder = REGISTRY.get(name)
    if builder is not None:
        logger.debug("catalog_build", name=name, p=p if name in P_PARAMETERISED else None)
        return builder(p)
    if name == "k":
        return build_group_hopf(GroupData([]), "k")
    if m := _GROUP_RE.match(name):
        factors = [int(m.group(1))] + [int(x) for x in re.findall(r"\d+", m.group(2))]
        return build_group_hopf(GroupData(factors), name)
    if m := _EXT_RE.match(name):
        return build_exterior(int(m.group(1)), name)
    if m := _TAFT_RE.match(name):
        n = int(m.group(2))
        omega = zeta(n, int(m.group(3) or 1))
        return build_taft_superform(n, omega, name) if m.group(1) else build_taft(n, omega, name)
    raise UnknownNameError(f"unknown catalog name {name!r}; see `catalog list`")
