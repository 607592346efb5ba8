"""Data (Γ, D) and the pointed Hopf superalgebras 𝒜(Γ, D) they generate."""

from typing import Dict, List, Optional, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..core import HopfSuperAlgebraData
from ..errors import DatumError
from ..scalars import CycRational, unity_order
from .groups import Exps, GroupData
from .presentation import CrossRelation, SkewGenerator, SkewPresentation, build_from_presentation

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class DatumEntry(BaseModel):
    """One quadruple (g_i, χ_i, μ_i; ε_i) with g_i and χ_i as exponent tuples of Γ."""

    model_config = ConfigDict(frozen=True)

    g: Exps = Field(..., description="Group element g_i with Δ(z_i) = u_{g_i}⊗z_i + z_i⊗1")
    chi: Exps = Field(..., description="Character χ_i with u_g z_i = χ_i(g) z_i u_g")
    mu: int = Field(default=0, ge=0, le=1, description="Power-relation parameter μ_i")
    eps: int = Field(default=1, ge=0, le=1, description="Parity ε_i of z_i")


Datum = Sequence[DatumEntry]


def _sign(eps: int) -> int:
    return -1 if eps else 1


def datum_orders(group: GroupData, datum: Datum) -> List[Optional[int]]:
    """N_i = ord((−1)^{ε_i} χ_i(g_i)) for each entry."""
    return [unity_order(group.char_value(e.chi, e.g) * _sign(e.eps)) for e in datum]


def validate_datum(group: GroupData, datum: Datum) -> List[str]:
    """Check the three compatibility conditions; returns one message per violation."""
    violations: List[str] = []
    orders = datum_orders(group, datum)
    for i, (e, n) in enumerate(zip(datum, orders), start=1):
        if len(e.g) != group.rank or len(e.chi) != group.rank:
            violations.append(f"entry {i}: g and χ need {group.rank} components")
            continue
        if n is None:
            violations.append(f"entry {i}: (−1)^ε χ(g) is not a root of unity")
            continue
        if e.eps == 1 and n % 2:
            violations.append(f"condition (1) fails for entry {i}: N_{i} = {n} is odd but z_{i} is odd")
        if e.mu and any(group.char_value(group.pow(e.chi, n), h) != 1 for h in group.elements):
            violations.append(f"condition (2) fails for entry {i}: μ_{i} = 1 but χ_{i}^{n} is not trivial")
    for i in range(len(datum)):
        for j in range(i + 1, len(datum)):
            a, b = datum[i], datum[j]
            if group.char_value(a.chi, b.g) * group.char_value(b.chi, a.g) != 1:
                violations.append(f"condition (3) fails for entries {i + 1}, {j + 1}: χ_i(g_j)χ_j(g_i) ≠ 1")
    return violations


def generator_names(theta: int) -> List[str]:
    return ["z"] if theta == 1 else [f"z{i}" for i in range(1, theta + 1)]


def datum_presentation(
    group: GroupData, datum: Datum, names: Optional[Sequence[str]] = None, name: str = ""
) -> SkewPresentation:
    """Presentation of 𝒜(Γ, D).

    Raises:
        DatumError: If the datum violates a compatibility condition or some N_i < 2
    """
    violations = validate_datum(group, datum)
    orders = datum_orders(group, datum)
    for i, n in enumerate(orders, start=1):
        if n is not None and n < 2:
            violations.append(f"entry {i}: N_{i} = {n}, so z_{i} would be a scalar")
    if violations:
        logger.info("datum_rejected", algebra=name, violations=violations)
        raise DatumError(violations)
    names = list(names) if names is not None else generator_names(len(datum))
    generators = []
    for e, n, gen_name in zip(datum, orders, names):
        assert n is not None
        power_value: Dict[Exps, CycRational] = {}
        if e.mu:
            top = group.pow(e.g, n)
            if top != group.identity:
                power_value = {group.identity: CycRational.one(), top: CycRational.rational(-1)}
        generators.append(
            SkewGenerator(
                name=gen_name,
                coproduct_loc=group.normalize(e.g),
                conj=group.char_on_generators(e.chi),
                parity=e.eps,
                power_exp=n,
                power_value=power_value,
            )
        )
    cross: Dict[tuple[int, int], CrossRelation] = {}
    for i in range(len(datum)):
        for j in range(i + 1, len(datum)):
            # z_i z_j = (−1)^{ε_iε_j} χ_j(g_i) z_j z_i
            braid = group.char_value(datum[j].chi, datum[i].g) * _sign(datum[i].eps * datum[j].eps)
            cross[(i, j)] = CrossRelation(q=braid.inverse())
    return SkewPresentation(group=group, generators=generators, cross=cross, name=name)


def build_A_gamma_D(
    group: GroupData, datum: Datum, names: Optional[Sequence[str]] = None, name: str = ""
) -> HopfSuperAlgebraData:
    """Build 𝒜(Γ, D) by rewriting.

    Args:
        group: The abelian group Γ
        datum: Entries (g_i, χ_i, μ_i; ε_i)
        names: Names of the skew generators; z or z1, z2, … by default
        name: Catalog name of the result

    Returns:
        The Hopf superalgebra with G(𝒜(Γ, D)) ≅ Γ

    Raises:
        DatumError: If validate_datum reports a violation
    """
    return build_from_presentation(datum_presentation(group, datum, names, name), name)


def format_datum(group: GroupData, datum: Datum) -> str:
    """Render as ``(g^2, χ^2, 0; 1)`` or a parenthesized tuple of such entries."""
    parts = [f"({group.label(e.g)}, {group.char_label(e.chi)}, {e.mu}; {e.eps})" for e in datum]
    return parts[0] if len(parts) == 1 else f"({', '.join(parts)})"
