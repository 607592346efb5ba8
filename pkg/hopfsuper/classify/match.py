"""Matching a coinvariant Hopf superalgebra against a presented 𝒜(Γ, D)."""

from itertools import product
from math import lcm
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..analysis import grouplikes
from ..bosonize import CoinvariantRecord
from ..catalog.presentation import parse_element, rewriter_for
from ..core import CoordinateSystem, HopfSuperAlgebraData, LinearMap, MorphismCheck, check_morphism
from ..core.linalg import Vec
from ..errors import HopfSuperError, StructureError
from ..scalars import CycRational, roots_of_unity
from .automorphisms import extend_on_basis

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

STAGES = ("printed", "rescaled", "regrouped")


class MatchResult(BaseModel):
    """Outcome of matching; ``assignment`` holds the images that worked, written in the parent algebra."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    ok: bool
    stage: Optional[str] = Field(default=None, description="printed, rescaled or regrouped; None on failure")
    target: str
    assignment: Dict[str, str] = Field(default_factory=dict)
    printed_check: MorphismCheck
    tried: int = 0
    map: Optional[LinearMap] = Field(default=None, exclude=True)


def _try(
    target: HopfSuperAlgebraData, record: CoinvariantRecord, images: Mapping[str, Vec]
) -> Tuple[LinearMap, MorphismCheck]:
    f = extend_on_basis(target, record.result, images)
    return f, check_morphism(target, record.result, f, require_iso=True)


def _scaled(v: Vec, c: CycRational) -> Vec:
    return {k: a * c for k, a in v.items()}


def _rescalings(
    skew: Sequence[str], images: Mapping[str, Vec], roots: Sequence[CycRational]
) -> Iterator[Dict[str, Vec]]:
    for combo in product(roots, repeat=len(skew)):
        if all(c == 1 for c in combo):
            continue
        out = dict(images)
        for name, c in zip(skew, combo):
            out[name] = _scaled(images[name], c)
        yield out


def _regroupings(
    target: HopfSuperAlgebraData, record: CoinvariantRecord, images: Mapping[str, Vec]
) -> Iterator[Dict[str, Vec]]:
    """Group generator images replaced by group-likes of the coinvariants of the same order."""
    rw = rewriter_for(target)
    assert rw is not None
    gl = grouplikes(record.result)
    choices: List[List[Vec]] = []
    for n in rw.group.factors:
        choices.append([g for g, e in zip(gl.elements, gl.exponents) if gl.group.element_order(e) == n])
    for combo in product(*choices):
        out = dict(images)
        for name, g in zip(rw.group.names, combo):
            out[name] = g
        yield out


def match_presentation(
    a: HopfSuperAlgebraData,
    record: CoinvariantRecord,
    target: HopfSuperAlgebraData,
    assignment: Mapping[str, str],
    search: bool = True,
) -> MatchResult:
    """Verify that the generator assignment extends to an isomorphism target → coinvariants.

    The assignment maps every generator of the presented target to an element string of A that
    must lie in the coinvariant carrier. When the printed images fail and search is on, skew images
    are rescaled by roots of unity, and then group images are also replaced by group-likes of the
    coinvariants of the right order.

    Args:
        a: The algebra the coinvariants were taken in
        record: Coinvariants of a at a super-datum
        target: A presented Hopf superalgebra, usually build_A_gamma_D output
        assignment: Target generator name → element text of a
        search: Whether to try the rescaled and regrouped stages

    Returns:
        MatchResult with the first stage that produced a verified isomorphism

    Raises:
        StructureError: If the target has no presentation
    """
    rw = rewriter_for(target)
    if rw is None:
        raise StructureError(f"{target.name} has no presentation to match against")
    coords = CoordinateSystem(a.dim, record.inclusion.columns)
    skew = [g.name for g in rw.p.generators]

    images: Dict[str, Vec] = {}
    printed_check = MorphismCheck(ok=True)
    for name, text in assignment.items():
        try:
            c = coords.coordinates(parse_element(a, text))
        except HopfSuperError as e:
            printed_check = MorphismCheck(ok=False, failed="images", witness=[name, str(e)])
            break
        if c is None:
            printed_check = MorphismCheck(ok=False, failed="carrier", witness=[name, text])
            break
        images[name] = c

    def result(stage: Optional[str], f: Optional[LinearMap], used: Mapping[str, Vec], tried: int) -> MatchResult:
        rendered = {n: a.format_vec(record.inclusion.apply(v)) for n, v in used.items()}
        if f is not None:
            logger.debug("presentation_matched", algebra=record.result.name, target=target.name, stage=stage)
        return MatchResult(
            ok=f is not None,
            stage=stage,
            target=target.name,
            assignment=rendered,
            printed_check=printed_check,
            tried=tried,
            map=f,
        )

    if not printed_check:
        logger.info("assignment_rejected", target=target.name, failed=printed_check.failed)
        return result(None, None, {}, 0)
    try:
        f, printed_check = _try(target, record, images)
    except HopfSuperError as e:
        printed_check = MorphismCheck(ok=False, failed="images", witness=[str(e)])
        return result(None, None, {}, 1)
    if printed_check:
        return result("printed", f, images, 1)
    tried = 1
    if search:
        roots = roots_of_unity(lcm(2, a.conductor), a.conductor)
        for candidate in _rescalings(skew, images, roots):
            tried += 1
            f, check = _try(target, record, candidate)
            if check:
                return result("rescaled", f, candidate, tried)
        for regrouped in _regroupings(target, record, images):
            for candidate in (regrouped, *_rescalings(skew, regrouped, roots)):
                tried += 1
                f, check = _try(target, record, candidate)
                if check:
                    return result("regrouped", f, candidate, tried)
    logger.info(
        "presentation_match_failed",
        algebra=record.result.name,
        target=target.name,
        failed=printed_check.failed,
        witness=printed_check.witness,
        tried=tried,
    )
    return result(None, None, images, tried)
