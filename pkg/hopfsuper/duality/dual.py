"""Dual Hopf superalgebras."""

from functools import lru_cache

import structlog

from ..core import HopfSuperAlgebraData, LinearMap, MorphismCheck, check_morphism
from ..core.algebra import dual_structure

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


@lru_cache(maxsize=256)
def dual(h: HopfSuperAlgebraData) -> HopfSuperAlgebraData:
    """H* with mult and comult exchanged by transposition, on the dual basis f[label].

    Results are cached per instance, so dual(h) is dual(h) and analyses of the dual are shared.
    """
    d = dual_structure(h)
    logger.debug("dual_built", algebra=h.name, dim=d.dim)
    return d


def double_dual_check(h: HopfSuperAlgebraData) -> MorphismCheck:
    """Evaluation H → H** checked as a Hopf superalgebra isomorphism."""
    return check_morphism(h, dual(dual(h)), LinearMap.identity(h.dim), require_iso=True)
