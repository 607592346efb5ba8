"""Admissible data and super-data (g, α) of ordinary Hopf algebras."""

from typing import List, Optional

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..core import HopfSuperAlgebraData, LinearMap, center
from ..core.linalg import Vec, vec_iadd
from ..errors import RouteDisagreementError, StructureError, UnknownNameError
from ..scalars import CycRational
from ..catalog.presentation import rewriter_for
from .characters import Character, character_product, characters
from .grouplikes import grouplikes

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class SuperDatum(BaseModel):
    """A pair (g, α) with g a group-like and α a character."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    g: Vec = Field(..., exclude=True)
    g_label: str
    g_index: int = Field(..., description="Position of g in grouplikes(H)")
    alpha: Character = Field(..., exclude=True)
    alpha_index: int = Field(..., description="Position of α in characters(H); 0 is the counit")
    alpha_label: str
    admissible: bool = True
    is_super: bool = False

    def label(self) -> str:
        return f"({self.g_label}, α{self.alpha_index})"


def hit_left(h: HopfSuperAlgebraData, alpha: Character) -> LinearMap:
    """α⇀a = a₁ α(a₂)."""
    columns: List[Vec] = []
    for k in range(h.dim):
        col: Vec = {}
        for (i, j), c in h.comult.get(k, {}).items():
            a = alpha.values[j]
            if not a.is_zero():
                vec_iadd(col, {i: c * a})
        columns.append(col)
    return LinearMap(h.dim, h.dim, columns)


def hit_right(h: HopfSuperAlgebraData, alpha: Character) -> LinearMap:
    """a↼α = α(a₁) a₂."""
    columns: List[Vec] = []
    for k in range(h.dim):
        col: Vec = {}
        for (i, j), c in h.comult.get(k, {}).items():
            a = alpha.values[i]
            if not a.is_zero():
                vec_iadd(col, {j: c * a})
        columns.append(col)
    return LinearMap(h.dim, h.dim, columns)


def _require_even(h: HopfSuperAlgebraData) -> None:
    if not h.is_purely_even():
        raise StructureError(f"{h.name}: admissible data are defined for ordinary Hopf algebras only")


def admissible_data(h: HopfSuperAlgebraData) -> List[SuperDatum]:
    """All (g, α) with g² = 1, α*α = ε and α(g) = −1.

    Raises:
        StructureError: If H has a nonzero odd part
        CertificateError: Propagated from the group-like or character search
    """
    _require_even(h)
    gl = grouplikes(h)
    chars = characters(h)
    one = h.one()
    eps = chars.counit.values
    squares_to_counit = [character_product(a, a).values == eps for a in chars.characters]
    out = []
    for gi, g in enumerate(gl.elements):
        if h.multiply(g, g) != one:
            continue
        for ai, alpha in enumerate(chars.characters):
            if squares_to_counit[ai] and alpha(g) == -1:
                out.append(
                    SuperDatum(
                        g=g,
                        g_label=gl.labels[gi],
                        g_index=gi,
                        alpha=alpha,
                        alpha_index=ai,
                        alpha_label=alpha.label(),
                    )
                )
    logger.debug("admissible_data", algebra=h.name, count=len(out))
    return out


def _generic_test(h: HopfSuperAlgebraData, d: SuperDatum, central: bool) -> bool:
    if central:
        return False
    left = hit_left(h, d.alpha)
    right = hit_right(h, d.alpha)
    for k in range(h.dim):
        conj = h.multiply(h.multiply(d.g, {k: CycRational.one()}), d.g)
        if right.apply(left.columns[k]) != conj:
            return False
    return True


def _presentation_test(h: HopfSuperAlgebraData, d: SuperDatum) -> Optional[bool]:
    rw = rewriter_for(h)
    if rw is None or rw.p.coproduct_overrides:
        return None
    identity = rw.group.identity
    noncentral = False
    for i, gen in enumerate(rw.p.generators):
        x = {rw.index[(identity, (i,))]: CycRational.one()}
        gx, xg = h.multiply(d.g, x), h.multiply(x, d.g)
        if gx != xg:
            noncentral = True
        scale = d.alpha.values[rw.index[(rw.group.normalize(gen.coproduct_loc), ())]]
        expected = {k: c * scale for k, c in x.items() if not scale.is_zero()}
        if h.multiply(gx, d.g) != expected:
            return False
    return noncentral


def super_data(h: HopfSuperAlgebraData) -> List[SuperDatum]:
    """The admissible data with g ∉ Z(H) and α(a₁)a₂α(a₃) = gag for every basis vector a.

    Presented algebras are cross-checked on generators (g x_i g = α(u_{c_i}) x_i and g not central).

    Raises:
        RouteDisagreementError: If the basis test and the generator test disagree
    """
    z = center(h)
    out = []
    for d in admissible_data(h):
        generic = _generic_test(h, d, z.contains(d.g))
        shortcut = _presentation_test(h, d)
        if shortcut is not None and shortcut != generic:
            logger.error("super_datum_routes_disagree", algebra=h.name, datum=d.label(), generic=generic)
            raise RouteDisagreementError(f"{h.name}: {d.label()} is super by one test only (basis test: {generic})")
        if generic:
            out.append(d.model_copy(update={"is_super": True}))
    logger.debug("super_data", algebra=h.name, count=len(out))
    return out


def find_datum(data: List[SuperDatum], g_label: str, alpha_index: int) -> SuperDatum:
    for d in data:
        if d.g_label == g_label and d.alpha_index == alpha_index:
            return d
    raise UnknownNameError(f"no datum ({g_label}, α{alpha_index}); choices: {[d.label() for d in data]}")
