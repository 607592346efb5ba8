"""Hopf pairings ⟨ , ⟩: H × A → 𝕜 and the maps H → A* they induce."""

from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..bosonize.smash import bosonize
from ..core import HopfSuperAlgebraData, LinearMap, MorphismCheck, Pair, check_morphism
from ..core.linalg import Vec, rank
from ..errors import MorphismError, StructureError
from ..scalars import CycRational
from .dual import dual

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class PairingStatus(BaseModel):
    """Outcome of checking the Hopf pairing identities on basis elements."""

    parity: bool = Field(..., description="⟨H_ε, A_ν⟩ = 0 for ε ≠ ν")
    multiplication: bool = Field(..., description="⟨xy, a⟩ = ⟨x, a₁⟩⟨y, a₂⟩")
    comultiplication: bool = Field(..., description="⟨x, ab⟩ = ⟨x₁, a⟩⟨x₂, b⟩")
    unit: bool = Field(..., description="⟨x, 1⟩ = ε(x)")
    counit: bool = Field(..., description="⟨1, a⟩ = ε(a)")
    nondegenerate: bool
    failed: Optional[str] = None
    witness: List[str] = Field(default_factory=list)

    @property
    def is_hopf(self) -> bool:
        return self.parity and self.multiplication and self.comultiplication and self.unit and self.counit


class HopfPairing(BaseModel):
    """A bilinear form between two Hopf superalgebras, stored as a sparse matrix ⟨e_i, f_j⟩."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    left: HopfSuperAlgebraData
    right: HopfSuperAlgebraData
    matrix: Dict[Tuple[int, int], CycRational] = Field(default_factory=dict)
    status: Optional[PairingStatus] = None

    def rows(self) -> List[Vec]:
        """Row i is the covector a ↦ ⟨e_i, a⟩ on the basis of the right algebra."""
        out: List[Vec] = [{} for _ in range(self.left.dim)]
        for (i, j), c in self.matrix.items():
            if not c.is_zero():
                out[i][j] = c
        return out

    def value(self, i: int, j: int) -> CycRational:
        return self.matrix.get((i, j), CycRational.zero())


class PairingMorphism(BaseModel):
    """x ↦ ⟨x, −⟩ as a map H → A*, with its verification."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    map: LinearMap
    target: HopfSuperAlgebraData
    check: MorphismCheck
    isomorphism: bool


def _evaluate(row: Mapping[int, CycRational], v: Mapping[int, CycRational]) -> CycRational:
    """⟨e_i, v⟩ for the covector row of e_i."""
    total = CycRational.zero()
    for m, c in v.items():
        x = row.get(m)
        if x is not None:
            total = total + c * x
    return total


def _column(rows: List[Vec], v: Mapping[int, CycRational], j: int) -> CycRational:
    """⟨v, f_j⟩."""
    total = CycRational.zero()
    for m, c in v.items():
        x = rows[m].get(j)
        if x is not None:
            total = total + c * x
    return total


def _parity_witness(h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, rows: List[Vec]) -> Optional[List[str]]:
    for i, row in enumerate(rows):
        for j in row:
            if h.parity[i] != a.parity[j]:
                return [h.labels[i], a.labels[j]]
    return None


def _unit_witness(h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, rows: List[Vec]) -> Optional[List[str]]:
    for i, row in enumerate(rows):
        if _evaluate(row, a.unit) != h.counit[i]:
            return [h.labels[i]]
    return None


def _counit_witness(h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, rows: List[Vec]) -> Optional[List[str]]:
    for j in range(a.dim):
        if _column(rows, h.unit, j) != a.counit[j]:
            return [a.labels[j]]
    return None


def _tensor_value(t: Mapping[Pair, CycRational], first: Vec, second: Vec) -> CycRational:
    total = CycRational.zero()
    for (p, q), c in t.items():
        x, y = first.get(p), second.get(q)
        if x is not None and y is not None:
            total = total + c * x * y
    return total


def _multiplication_witness(h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, rows: List[Vec]) -> Optional[List[str]]:
    for i, k in product(range(h.dim), repeat=2):
        prod = h.mul_basis(i, k)
        for j in range(a.dim):
            if _column(rows, prod, j) != _tensor_value(a.comult.get(j, {}), rows[i], rows[k]):
                return [h.labels[i], h.labels[k], a.labels[j]]
    return None


def _comultiplication_witness(
    h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, rows: List[Vec]
) -> Optional[List[str]]:
    columns: List[Vec] = [{} for _ in range(a.dim)]
    for i, row in enumerate(rows):
        for j, c in row.items():
            columns[j][i] = c
    for j, k in product(range(a.dim), repeat=2):
        prod = a.mul_basis(j, k)
        for i in range(h.dim):
            # Σ ⟨e_p, f_j⟩⟨e_q, f_k⟩ over Δ(e_i)
            if _evaluate(rows[i], prod) != _tensor_value(h.comult.get(i, {}), columns[j], columns[k]):
                return [h.labels[i], a.labels[j], a.labels[k]]
    return None


_CHECKS = (
    ("parity", _parity_witness),
    ("unit", _unit_witness),
    ("counit", _counit_witness),
    ("multiplication", _multiplication_witness),
    ("comultiplication", _comultiplication_witness),
)


def verify_hopf_pairing(pairing: HopfPairing) -> PairingStatus:
    """Check every pairing identity exactly on basis pairs and triples, and non-degeneracy by rank.

    The status is also stored on the pairing; the witness belongs to the first failing identity.
    """
    h, a = pairing.left, pairing.right
    rows = pairing.rows()
    flags: Dict[str, bool] = {}
    failed: Optional[str] = None
    witness: List[str] = []
    for name, check in _CHECKS:
        found = check(h, a, rows)
        flags[name] = found is None
        if found is not None and failed is None:
            failed, witness = name, found
    nondegenerate = h.dim == a.dim and rank(rows) == h.dim
    result = PairingStatus(
        parity=flags["parity"],
        multiplication=flags["multiplication"],
        comultiplication=flags["comultiplication"],
        unit=flags["unit"],
        counit=flags["counit"],
        nondegenerate=nondegenerate,
        failed=failed,
        witness=witness,
    )
    pairing.status = result
    logger.debug(
        "pairing_verified",
        left=h.name,
        right=a.name,
        hopf=result.is_hopf,
        nondegenerate=nondegenerate,
        failed=failed,
    )
    return result


def pairing_to_morphism(pairing: HopfPairing) -> PairingMorphism:
    """The map x ↦ ⟨x, −⟩ into dual(A), verified as a Hopf superalgebra map.

    Raises:
        StructureError: If the pairing fails an identity
        MorphismError: If the induced map fails a morphism check
    """
    status = pairing.status or verify_hopf_pairing(pairing)
    if not status.is_hopf:
        raise StructureError(f"not a Hopf pairing: {status.failed} fails at {status.witness}")
    target = dual(pairing.right)
    f = LinearMap(pairing.left.dim, target.dim, pairing.rows())
    check = check_morphism(pairing.left, target, f)
    if not check:
        raise MorphismError(f"{pairing.left.name} → {target.name} fails {check.failed} at {check.witness}")
    iso = f.is_bijective()
    if status.nondegenerate != iso:
        logger.warning("pairing_rank_mismatch", left=pairing.left.name, nondegenerate=status.nondegenerate, iso=iso)
    return PairingMorphism(map=f, target=target, check=check, isomorphism=iso)


def bosonization_duality(h: HopfSuperAlgebraData) -> HopfPairing:
    """The pairing (f⊗σ^i, h⊗σ^j) ↦ (−1)^{ij} f(h) between the bosonizations of H* and H, verified."""
    left = bosonize(dual(h)).result
    right = bosonize(h).result
    n = h.dim
    one = CycRational.one()
    matrix: Dict[Tuple[int, int], CycRational] = {}
    for i in (0, 1):
        for j in (0, 1):
            for k in range(n):
                matrix[(i * n + k, j * n + k)] = -one if i and j else one
    pairing = HopfPairing(left=left, right=right, matrix=matrix)
    verify_hopf_pairing(pairing)
    return pairing


def matrix_from_rows(rows: List[Vec]) -> Dict[Tuple[int, int], CycRational]:
    matrix: Dict[Tuple[int, int], CycRational] = {}
    for i, row in enumerate(rows):
        for j, c in row.items():
            if not c.is_zero():
                matrix[(i, j)] = c
    return matrix
