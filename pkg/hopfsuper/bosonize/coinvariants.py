"""Inverse bosonization: projections onto 𝕜ℤ₂ and coinvariant Hopf superalgebras."""

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..catalog.presentation import rewriter_for
from ..analysis.data import SuperDatum, hit_left
from ..analysis.grouplikes import grouplikes
from ..catalog.families import build_group_hopf
from ..catalog.groups import GroupData
from ..core import CoordinateSystem, HopfSuperAlgebraData, LinearMap, Pair, Subspace, TensorVec, check_morphism
from ..core import subalgebra_generated, verify_axioms
from ..core.algebra import tensor_iadd
from ..core.linalg import Vec, vec_add, vec_iadd
from ..errors import MorphismError, NotSuperDatumError, StructureError
from ..scalars import CycRational
from .smash import bosonize

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class ProjectionRecord(BaseModel):
    """π: A → 𝕜ℤ₂ with its section e ↦ 1, σ ↦ g."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    target: HopfSuperAlgebraData
    projection: LinearMap
    section: LinearMap


class CoinvariantRecord(BaseModel):
    """The coinvariant Hopf superalgebra of A at a super-datum and its inclusion into A."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    result: HopfSuperAlgebraData
    inclusion: LinearMap = Field(..., description="result → A")
    datum: SuperDatum


class GenerationReport(BaseModel):
    ok: bool
    generated_dim: int
    carrier_dim: int


def _minus_identity(f: LinearMap, scale: int = 1) -> LinearMap:
    """f − scale·id."""
    columns = [vec_add(col, {k: CycRational.one()}, -scale) for k, col in enumerate(f.columns)]
    return LinearMap(f.source_dim, f.target_dim, columns)


def projection_pi(a: HopfSuperAlgebraData, d: SuperDatum) -> ProjectionRecord:
    """π(a) = ε(a)(e+σ)/2 + α(a)(e−σ)/2, a split epimorphism onto 𝕜ℤ₂.

    Raises:
        MorphismError: If π is not a Hopf algebra map or π∘section is not the identity
    """
    target = build_group_hopf(GroupData([2], ["σ"]), "kZ2")
    half = CycRational.rational(Fraction(1, 2))
    columns: List[Vec] = []
    for k in range(a.dim):
        e, al = a.counit[k], d.alpha.values[k]
        columns.append({0: (e + al) * half, 1: (e - al) * half})
    pi = LinearMap(a.dim, 2, columns)
    section = LinearMap(2, a.dim, [a.one(), dict(d.g)])
    check = check_morphism(a, target, pi)
    if not check:
        raise MorphismError(f"π{d.label()} on {a.name} fails {check.failed} at {check.witness}")
    if pi.compose(section) != LinearMap.identity(2):
        raise MorphismError(f"π{d.label()} on {a.name} does not split the section")
    return ProjectionRecord(target=target, projection=pi, section=section)


def _label(a: HopfSuperAlgebraData, v: Mapping[int, CycRational]) -> str:
    if len(v) == 1:
        k, c = next(iter(v.items()))
        if c == 1:
            return a.labels[k]
    return a.format_vec(v)


def _coords(cs: CoordinateSystem, v: Mapping[int, CycRational], what: str, d: SuperDatum) -> Vec:
    c = cs.coordinates(v)
    if c is None:
        raise NotSuperDatumError(f"{d.label()}: {what} leaves the coinvariant carrier")
    return c


def coinvariants(a: HopfSuperAlgebraData, d: SuperDatum, verify: bool = True) -> CoinvariantRecord:
    """The Hopf superalgebra {b : α⇀b = b} graded by gbg = (−1)^ε b.

    With Δ_A(b) = Σ u_s ⊗ b_s over a homogeneous basis b_s of the carrier, the induced coproduct is
    Σ u_s g^{|b_s|} ⊗ b_s and the antipode is (−1)^{|b|} S_A(b) g^{|b|}.

    Raises:
        NotSuperDatumError: If d is not flagged super, or the carrier is not closed under the structure maps
        StructureError: If the induced structure fails an axiom
    """
    if not d.is_super:
        raise NotSuperDatumError(f"{d.label()} is not a super-datum of {a.name}")
    g = dict(d.g)
    carrier = carrier_space(a, d)
    if 2 * carrier.dim != a.dim:
        raise NotSuperDatumError(f"{d.label()}: coinvariant carrier has dimension {carrier.dim}, not {a.dim // 2}")
    conj = LinearMap(a.dim, a.dim, [a.multiply(a.multiply(g, {k: CycRational.one()}), g) for k in range(a.dim)])
    graded = [_minus_identity(conj, 1 - 2 * eps).kernel().intersection(carrier) for eps in (0, 1)]
    if graded[0].dim + graded[1].dim != carrier.dim:
        raise NotSuperDatumError(f"{d.label()}: conjugation by g does not grade the carrier")
    tagged = sorted(((v, eps) for eps in (0, 1) for v in graded[eps].basis), key=lambda item: min(item[0]))
    basis = [v for v, _ in tagged]
    parity = [eps for _, eps in tagged]
    n = len(basis)
    cs = CoordinateSystem(a.dim, basis)

    mult: Dict[Pair, Vec] = {}
    for i in range(n):
        for j in range(n):
            mult[(i, j)] = _coords(cs, a.multiply(basis[i], basis[j]), "multiplication", d)
    unit = _coords(cs, a.unit, "the unit", d)
    counit = [a.counit_of(b) for b in basis]

    g_powers = [a.one(), g]
    comult: Dict[int, TensorVec] = {}
    for t, b in enumerate(basis):
        second_legs: Dict[int, Vec] = {}
        for (p, q), c in a.coproduct(b).items():
            vec_iadd(second_legs.setdefault(p, {}), {q: c})
        first_legs: Dict[int, Vec] = {}
        for p, w in second_legs.items():
            for s, lam in _coords(cs, w, "a second coproduct leg", d).items():
                vec_iadd(first_legs.setdefault(s, {}), {p: lam})
        out: TensorVec = {}
        for s, u in first_legs.items():
            shifted = a.multiply(u, g_powers[parity[s]])
            for r, c in _coords(cs, shifted, "a first coproduct leg", d).items():
                tensor_iadd(out, (r, s), c)
        comult[t] = out

    antipode: List[Vec] = []
    for b, eps in zip(basis, parity):
        image = a.multiply(a.apply_antipode(b), g_powers[eps])
        if eps:
            image = {k: -c for k, c in image.items()}
        antipode.append(_coords(cs, image, "the antipode", d))

    result = HopfSuperAlgebraData(
        n,
        [_label(a, v) for v in basis],
        parity,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=f"coinv({a.name}, {d.label()})",
        conductor=a.conductor,
    )
    if verify:
        report = verify_axioms(result)
        if not report.passed:
            raise StructureError(f"{result.name}: induced structure fails {report.failures()}")
    logger.debug("coinvariants_built", algebra=a.name, datum=d.label(), dim=n, odd=result.odd_dim)
    return CoinvariantRecord(result=result, inclusion=LinearMap(n, a.dim, basis), datum=d)


def default_generators(a: HopfSuperAlgebraData, d: SuperDatum) -> List[Vec]:
    """G(A)^α together with the skew generators of the presentation of A."""
    rw = rewriter_for(a)
    if rw is None:
        raise StructureError(f"{a.name} has no presentation; pass the generating set explicitly")
    gens = [g for g in grouplikes(a).elements if d.alpha(g) == 1]
    identity = rw.group.identity
    gens.extend({rw.index[(identity, (i,))]: CycRational.one()} for i in range(rw.p.theta))
    return gens


def generation_check(
    a: HopfSuperAlgebraData, d: SuperDatum, generators: Optional[Sequence[Mapping[int, CycRational]]] = None
) -> GenerationReport:
    """Whether the given elements generate the coinvariant carrier as an algebra."""
    gens = list(generators) if generators is not None else default_generators(a, d)
    carrier = carrier_space(a, d)
    span = subalgebra_generated(a, gens)
    ok = span == carrier
    logger.debug("generation_checked", algebra=a.name, datum=d.label(), ok=ok, generated=span.dim)
    return GenerationReport(ok=ok, generated_dim=span.dim, carrier_dim=carrier.dim)


def carrier_space(a: HopfSuperAlgebraData, d: SuperDatum) -> Subspace:
    return _minus_identity(hit_left(a, d.alpha)).kernel()


def roundtrip_iso(a: HopfSuperAlgebraData, d: SuperDatum, record: Optional[CoinvariantRecord] = None) -> LinearMap:
    """The map h⊗σ^i ↦ h·g^i from the bosonization of the coinvariants back to A, verified bijective.

    Raises:
        MorphismError: If the map is not a Hopf algebra isomorphism
    """
    rec = record if record is not None else coinvariants(a, d)
    hat = bosonize(rec.result).result
    cols = list(rec.inclusion.columns)
    cols += [a.multiply(c, d.g) for c in rec.inclusion.columns]
    f = LinearMap(hat.dim, a.dim, cols)
    check = check_morphism(hat, a, f, require_iso=True)
    if not check:
        raise MorphismError(f"round trip for {a.name} at {d.label()} fails {check.failed} at {check.witness}")
    logger.debug("roundtrip_verified", algebra=a.name, datum=d.label())
    return f
