"""Pointedness and semisimplicity, decided on the bosonization."""

import structlog
from pydantic import BaseModel, Field

from ..bosonize.smash import bosonize
from ..core import HopfSuperAlgebraData, QuotientAlgebra, jacobson_radical
from ..core.algebra import dual_structure

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class PropertyReport(BaseModel):
    """A yes/no answer with the quotient dimensions that witness it."""

    holds: bool
    algebra_dim: int = Field(..., description="Dimension of the algebra the radical was taken in")
    radical_dim: int
    quotient_commutative: bool

    def __bool__(self) -> bool:
        return self.holds


def is_pointed(h: HopfSuperAlgebraData) -> PropertyReport:
    """H is pointed iff B/J(B) is commutative for B the dual of the bosonization."""
    b = dual_structure(bosonize(h).result)
    rad = jacobson_radical(b)
    commutative = QuotientAlgebra(b, rad).is_commutative()
    logger.debug("pointedness", algebra=h.name, pointed=commutative, radical_dim=rad.dim)
    return PropertyReport(holds=commutative, algebra_dim=b.dim, radical_dim=rad.dim, quotient_commutative=commutative)


def is_semisimple(h: HopfSuperAlgebraData) -> PropertyReport:
    """H is semisimple iff its bosonization has zero radical."""
    hat = bosonize(h).result
    rad = jacobson_radical(hat)
    commutative = QuotientAlgebra(hat, rad).is_commutative()
    return PropertyReport(
        holds=rad.dim == 0, algebra_dim=hat.dim, radical_dim=rad.dim, quotient_commutative=commutative
    )
