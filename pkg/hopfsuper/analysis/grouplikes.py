"""Group-like elements and the abelian group they form."""

from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..catalog.groups import Exps, GroupData, invariant_factors_from_orders, standard_generators
from ..core import HopfSuperAlgebraData
from ..core.algebra import dual_structure
from ..core.linalg import Vec
from ..errors import CertificateError, StructureError
from ..scalars import CycRational
from .characters import certificate_count, characters

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

VecKey = Tuple[Tuple[int, CycRational], ...]


def vec_key(v: Mapping[int, CycRational]) -> VecKey:
    return tuple(sorted(v.items(), key=lambda item: item[0]))


class GroupLikes(BaseModel):
    """G(H) as vectors, with a presentation as a product of cyclic groups.

    ``exponents[i]`` writes ``elements[i]`` in the standard generators ``generators``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    parent: HopfSuperAlgebraData = Field(..., exclude=True, repr=False)
    elements: List[Vec]
    labels: List[str]
    group: GroupData = Field(..., exclude=True)
    generators: List[int] = Field(..., description="Indices of the standard generators in elements")
    exponents: List[Exps]

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.group.factors

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, v: Mapping[int, CycRational]) -> Optional[int]:
        key = vec_key(v)
        for i, g in enumerate(self.elements):
            if vec_key(g) == key:
                return i
        return None

    def element(self, exps: Exps) -> Vec:
        return self.elements[self.exponents.index(self.group.normalize(exps))]

    def find_label(self, label: str) -> int:
        if label in self.labels:
            return self.labels.index(label)
        raise StructureError(f"{label!r} is not a group-like of {self.parent.name}")


def is_grouplike(h: HopfSuperAlgebraData, v: Mapping[int, CycRational]) -> bool:
    if not v or any(h.parity[k] for k in v) or h.counit_of(v) != 1:
        return False
    expected: Dict[Tuple[int, int], CycRational] = {}
    for i, a in v.items():
        for j, b in v.items():
            expected[(i, j)] = a * b
    return h.coproduct(v) == expected


def grouplikes(h: HopfSuperAlgebraData) -> GroupLikes:
    """All g with Δ(g) = g⊗g and ε(g) = 1, certified complete.

    Group-likes of H are the characters of the dual algebra, so the dual's character certificate
    bounds the count. Basis vectors are tried first; when they fall short the dual's characters
    are computed by joint eigenspaces.

    Raises:
        CertificateError: If the count differs from the dual's quotient dimension
    """
    return _grouplikes(h)


@lru_cache(maxsize=256)
def _grouplikes(h: HopfSuperAlgebraData) -> GroupLikes:
    d = dual_structure(h)
    expected = certificate_count(d)
    found: List[Vec] = [{k: CycRational.one()} for k in range(h.dim) if is_grouplike(h, {k: CycRational.one()})]
    route = "basis"
    if len(found) != expected:
        route = "dual"
        found = [{k: c for k, c in enumerate(chi.values) if not c.is_zero()} for chi in characters(d).characters]
    if len(found) != expected or not all(is_grouplike(h, g) for g in found):
        raise CertificateError(f"{h.name}: {len(found)} group-likes against a certificate of {expected}")
    result = _structure(h, found)
    logger.debug("grouplikes_found", algebra=h.name, order=result.order, factors=list(result.invariant_factors),
                 route=route)
    return result


def _structure(h: HopfSuperAlgebraData, found: List[Vec]) -> GroupLikes:
    one = h.one()
    found.sort(key=lambda g: (vec_key(g) != vec_key(one), min(g)))
    keys = {vec_key(g): i for i, g in enumerate(found)}
    table: Dict[Tuple[int, int], int] = {}
    for i, a in enumerate(found):
        for j, b in enumerate(found):
            k = keys.get(vec_key(h.multiply(a, b)))
            if k is None:
                raise StructureError(f"{h.name}: group-likes not closed under multiplication")
            table[(i, j)] = k
    identity = keys[vec_key(one)]

    def mul(i: int, j: int) -> int:
        return table[(i, j)]

    def order(i: int) -> int:
        n, x = 1, i
        while x != identity:
            x, n = mul(x, i), n + 1
        return n

    factors = invariant_factors_from_orders(order(i) for i in range(len(found)))
    factors = [n for n in factors if n > 1]
    labels = [h.format_vec(g) if len(g) > 1 or next(iter(g.values())) != 1 else h.labels[min(g)] for g in found]
    preferred = sorted(range(len(found)), key=lambda i: (len(labels[i]), labels[i]))
    gens = standard_generators(preferred, mul, identity, factors)
    if gens is None:
        raise StructureError(f"{h.name}: no standard generators for invariant factors {factors}")
    names = _generator_names(labels, gens)
    group = GroupData(factors, names)
    exponents: List[Exps] = [group.identity] * len(found)
    for exps in group.elements:
        x = identity
        for g, a in zip(gens, exps):
            for _ in range(a):
                x = mul(x, g)
        exponents[x] = exps
    return GroupLikes(
        parent=h, elements=found, labels=labels, group=group, generators=list(gens), exponents=exponents
    )


def _generator_names(labels: List[str], gens: Tuple[int, ...]) -> List[str]:
    names = []
    for r, i in enumerate(gens):
        label = labels[i]
        names.append(label if len(label) == 1 and label.isidentifier() else f"g{r + 1}")
    if len(set(names)) != len(names):
        names = [f"g{r + 1}" for r in range(len(gens))]
    return names
