"""JSON documents for structure constants.

All scalars are written in the exact ``a0 + a1*z + ... @N`` form, so a round trip reproduces the
tensors bit for bit. Purely even Hopf algebras use the same schema with parity all zero.
"""

import json
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from ..core import HopfSuperAlgebraData, TensorVec
from ..core.linalg import Vec
from ..errors import HopfSuperError, SchemaError, StructureError
from ..scalars import CycRational

FORMAT = "hopfsuper/1"


class AlgebraDocument(BaseModel):
    """Sparse structure constants; every index refers to the basis order of ``labels``."""

    format: Literal["hopfsuper/1"] = FORMAT
    name: str = ""
    dim: int = Field(..., ge=1)
    conductor: Optional[int] = Field(default=None, ge=1)
    labels: List[str]
    parity: List[int]
    unit: List[Tuple[int, str]] = Field(..., description="[k, c]: 1 = Σ c e_k")
    mult: List[Tuple[int, int, int, str]] = Field(default_factory=list, description="[i, j, k, c]: e_i e_j ∋ c e_k")
    comult: List[Tuple[int, int, int, str]] = Field(
        default_factory=list, description="[k, i, j, c]: Δ(e_k) ∋ c e_i⊗e_j"
    )
    counit: List[str]
    antipode: List[Tuple[int, int, str]] = Field(default_factory=list, description="[k, i, c]: S(e_k) ∋ c e_i")


def json_pointer(loc: Sequence[Union[int, str]]) -> str:
    return "/" + "/".join(str(part).replace("~", "~0").replace("/", "~1") for part in loc)


def schema_error(e: ValidationError, context: str = "") -> SchemaError:
    """The first pydantic error as a SchemaError with its JSON pointer."""
    first = e.errors()[0]
    message = f"{context}: {first['msg']}" if context else first["msg"]
    return SchemaError(message, json_pointer(first["loc"]))


def to_document(h: HopfSuperAlgebraData) -> AlgebraDocument:
    return AlgebraDocument(
        name=h.name,
        dim=h.dim,
        conductor=h.conductor,
        labels=list(h.labels),
        parity=list(h.parity),
        unit=[(k, c.format()) for k, c in sorted(h.unit.items())],
        mult=[(i, j, k, c.format()) for (i, j), v in sorted(h.mult.items()) for k, c in sorted(v.items())],
        comult=[(k, i, j, c.format()) for k, t in sorted(h.comult.items()) for (i, j), c in sorted(t.items())],
        counit=[c.format() for c in h.counit],
        antipode=[(k, i, c.format()) for k, s in enumerate(h.antipode) for i, c in sorted(s.items())],
    )


def _scalar(text: str, pointer: str) -> CycRational:
    try:
        return CycRational.parse(text)
    except HopfSuperError as e:
        raise SchemaError(str(e), pointer) from e


def _index(k: int, dim: int, pointer: str) -> int:
    if not 0 <= k < dim:
        raise SchemaError(f"index {k} outside 0..{dim - 1}", pointer)
    return k


def from_document(doc: AlgebraDocument) -> HopfSuperAlgebraData:
    """Rebuild the Hopf superalgebra and check shapes and parity homogeneity.

    Raises:
        SchemaError: For wrong lengths, indices out of range or malformed scalars
        StructureError: If a structure map does not preserve parity
    """
    n = doc.dim
    for field_name, values in (("labels", doc.labels), ("parity", doc.parity), ("counit", doc.counit)):
        if len(values) != n:
            raise SchemaError(f"expected {n} entries, got {len(values)}", f"/{field_name}")
    for k, p in enumerate(doc.parity):
        if p not in (0, 1):
            raise SchemaError("parity must be 0 or 1", f"/parity/{k}")
    unit: Vec = {}
    for r, (k, c) in enumerate(doc.unit):
        unit[_index(k, n, f"/unit/{r}/0")] = _scalar(c, f"/unit/{r}/1")
    mult: Dict[Tuple[int, int], Vec] = {}
    for r, (i, j, k, c) in enumerate(doc.mult):
        key = (_index(i, n, f"/mult/{r}/0"), _index(j, n, f"/mult/{r}/1"))
        mult.setdefault(key, {})[_index(k, n, f"/mult/{r}/2")] = _scalar(c, f"/mult/{r}/3")
    comult: Dict[int, TensorVec] = {}
    for r, (k, i, j, c) in enumerate(doc.comult):
        pair = (_index(i, n, f"/comult/{r}/1"), _index(j, n, f"/comult/{r}/2"))
        comult.setdefault(_index(k, n, f"/comult/{r}/0"), {})[pair] = _scalar(c, f"/comult/{r}/3")
    counit = [_scalar(c, f"/counit/{k}") for k, c in enumerate(doc.counit)]
    antipode: List[Vec] = [{} for _ in range(n)]
    for r, (k, i, c) in enumerate(doc.antipode):
        antipode[_index(k, n, f"/antipode/{r}/0")][_index(i, n, f"/antipode/{r}/1")] = _scalar(
            c, f"/antipode/{r}/2"
        )
    h = HopfSuperAlgebraData(
        n, doc.labels, doc.parity, mult, unit, comult, counit, antipode, name=doc.name, conductor=doc.conductor
    )
    violations = h.parity_violations()
    if violations:
        raise StructureError(f"{doc.name or 'document'}: {violations[0]}")
    return h


def dumps(h: HopfSuperAlgebraData) -> str:
    return json.dumps(to_document(h).model_dump(mode="json"), indent=2)


def document_from_json(payload: Any) -> AlgebraDocument:
    try:
        return AlgebraDocument.model_validate(payload)
    except ValidationError as e:
        raise schema_error(e) from e


def loads(text: str) -> HopfSuperAlgebraData:
    """Parse a JSON document.

    Raises:
        SchemaError: If the text is not JSON or violates the schema
        StructureError: If the structure maps do not respect parity
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg} at line {e.lineno}") from e
    return from_document(document_from_json(payload))
