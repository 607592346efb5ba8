"""The bosonization Ĥ = H#𝕜ℤ₂ of a Hopf superalgebra."""

from typing import Dict, List

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..core import HopfSuperAlgebraData, LinearMap, TensorVec
from ..core.algebra import MultTable, tensor_iadd
from ..core.linalg import Vec
from ..scalars import CycRational

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class BosonizationRecord(BaseModel):
    """Ĥ with the embedding h ↦ h⊗e and the section σ^i ↦ 1⊗σ^i."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    source: HopfSuperAlgebraData
    result: HopfSuperAlgebraData
    embedding: LinearMap = Field(..., description="H → Ĥ")
    section: LinearMap = Field(..., description="𝕜ℤ₂ → Ĥ with basis (e, σ)")

    @property
    def sigma(self) -> Vec:
        return self.section.columns[1]


def _labels(h: HopfSuperAlgebraData) -> List[str]:
    unit_index = next(iter(h.unit)) if len(h.unit) == 1 and next(iter(h.unit.values())) == 1 else None
    odd_labels = ["σ" if k == unit_index else f"{label}σ" for k, label in enumerate(h.labels)]
    return list(h.labels) + odd_labels


def bosonize(h: HopfSuperAlgebraData) -> BosonizationRecord:
    """Smash H with 𝕜ℤ₂ = ⟨σ⟩, σ acting by the parity automorphism.

    The basis vector h⊗σ^i sits at index i·dim(H) + k for h = e_k. Structure:

        (h⊗σ^i)(h'⊗σ^j) = (−1)^{i|h'|} hh'⊗σ^{i+j}
        Δ(h⊗σ^i) = h₁⊗σ^{i+|h₂|} ⊗ h₂⊗σ^i
        S(h⊗σ^i) = (−1)^{|h|(i+1)} S(h)⊗σ^{i+|h|}
        ε(h⊗σ^i) = ε(h)
    """
    n = h.dim
    par = h.parity

    mult: MultTable = {}
    for (a, b), v in h.mult.items():
        for i in (0, 1):
            sign = -1 if i and par[b] else 1
            for j in (0, 1):
                mult[(i * n + a, j * n + b)] = {((i + j) % 2) * n + k: c * sign for k, c in v.items()}

    comult: Dict[int, TensorVec] = {}
    for k, t in h.comult.items():
        for i in (0, 1):
            out: TensorVec = {}
            for (p, q), c in t.items():
                tensor_iadd(out, (((i + par[q]) % 2) * n + p, i * n + q), c)
            comult[i * n + k] = out

    antipode: List[Vec] = []
    for i in (0, 1):
        for k in range(n):
            sign = -1 if par[k] and (i + 1) % 2 else 1
            shift = ((i + par[k]) % 2) * n
            antipode.append({shift + a: c * sign for a, c in h.antipode[k].items()})

    one = CycRational.one()
    result = HopfSuperAlgebraData(
        2 * n,
        _labels(h),
        [0] * (2 * n),
        mult,
        dict(h.unit),
        comult,
        list(h.counit) * 2,
        antipode,
        name=f"bosonize({h.name})",
        conductor=h.conductor,
    )
    embedding = LinearMap(n, 2 * n, [{k: one} for k in range(n)])
    section = LinearMap(2, 2 * n, [dict(h.unit), {n + k: c for k, c in h.unit.items()}])
    logger.debug("bosonized", source=h.name, dim=2 * n)
    return BosonizationRecord(source=h, result=result, embedding=embedding, section=section)
