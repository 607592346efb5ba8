"""Expected classification tables, loaded from a versioned YAML file."""

from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

import structlog
import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from ..errors import SchemaError, UnknownNameError
from ..scalars import CycRational
from ..storage.codec import schema_error
from .automorphisms import AutomorphismInput

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

DEFAULT_TABLES_PATH = Path(__file__).resolve().parent.parent / "data" / "expected_tables.yaml"

Stage = Literal["printed", "rescaled", "regrouped"]


class DatumRef(BaseModel):
    """A super-datum named by a group-like label and the character's values on generators."""

    g: str
    alpha: Dict[str, str]

    def resolved(self, p: int) -> "DatumRef":
        return DatumRef(g=self.g.replace("{p}", str(p)), alpha=dict(self.alpha))

    def alpha_values(self) -> Dict[str, CycRational]:
        return {name: CycRational.parse(text) for name, text in self.alpha.items()}


class ClassEntry(BaseModel):
    datum: DatumRef
    label: str = Field(..., description="Catalog name of the table entry the coinvariants must match")
    assignment: Dict[str, str] = Field(default_factory=dict)
    expected_stage: Stage = "printed"
    note: str = ""


class CandidateEntry(BaseModel):
    """One Hopf algebra of the input list with the counts it should produce."""

    name: str
    ad: Optional[int] = Field(default=None, ge=0, description="Expected number of admissible data; None skips")
    sd: Optional[int] = Field(default=None, ge=0)
    orbits: Optional[int] = Field(default=None, ge=0)
    presentation_error: bool = Field(default=False, description="The printed presentation is not confluent")
    probe: bool = Field(default=False, description="Analysed and reported, never counted")
    automorphisms: List[AutomorphismInput] = Field(default_factory=list)
    classes: List[ClassEntry] = Field(default_factory=list)
    note: str = ""


class PairValue(BaseModel):
    left: str
    right: str
    value: str


class PairingEntry(BaseModel):
    method: Literal["exterior", "generators", "search"]
    values: List[PairValue] = Field(default_factory=list)

    def as_mapping(self) -> Dict[Tuple[str, str], CycRational]:
        return {(v.left, v.right): CycRational.parse(v.value) for v in self.values}


class RowEntry(BaseModel):
    """A row of a printed table: the entry, its dual partner and whether the dual is pointed."""

    label: str
    dual: Optional[str] = Field(default=None, description="Label of the entry isomorphic to the dual")
    dual_pointed: bool = True
    pairing: Optional[PairingEntry] = None


class Erratum(BaseModel):
    key: str
    printed: str
    corrected: str
    note: str = ""
    probe: Optional[str] = Field(default=None, description="Catalog name holding the printed data")


class TableSpec(BaseModel):
    title: str
    classes: int = Field(..., ge=0, description="Expected number of isomorphism classes")
    parameterised: bool = False
    candidates: List[CandidateEntry]
    rows: List[RowEntry] = Field(default_factory=list)
    errata: List[str] = Field(default_factory=list, description="Keys of the errata that concern this table")


class ExpectedTables(BaseModel):
    version: int
    tables: Dict[str, TableSpec]
    errata: List[Erratum] = Field(default_factory=list)

    @model_validator(mode="after")
    def _errata_keys_known(self) -> "ExpectedTables":
        known = {e.key for e in self.errata}
        for key, spec in self.tables.items():
            missing = [k for k in spec.errata if k not in known]
            if missing:
                raise ValueError(f"table {key!r} refers to unknown errata {missing}")
        return self

    def table(self, key: str) -> TableSpec:
        if key not in self.tables:
            raise UnknownNameError(f"unknown table {key!r}; choices: {sorted(self.tables)}")
        return self.tables[key]

    def erratum(self, key: str) -> Optional[Erratum]:
        return next((e for e in self.errata if e.key == key), None)


def load_expected_tables(path: Optional[Path] = None) -> ExpectedTables:
    """Read and validate the expected tables.

    Args:
        path: YAML file; the packaged data file when omitted

    Raises:
        SchemaError: If the file is not valid YAML or does not match the model
        OSError: If the file cannot be read
    """
    source = path or DEFAULT_TABLES_PATH
    try:
        raw = yaml.safe_load(source.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise SchemaError(f"{source}: {e}") from e
    try:
        tables = ExpectedTables.model_validate(raw)
    except ValidationError as e:
        raise schema_error(e, str(source)) from e
    logger.debug("expected_tables_loaded", path=str(source), version=tables.version, tables=sorted(tables.tables))
    return tables
