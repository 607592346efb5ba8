import json
from pathlib import Path

import pytest

from hopfsuper.catalog import build_named
from hopfsuper.core import HopfSuperAlgebraData, verify_axioms
from hopfsuper.errors import SchemaError, StructureError
from hopfsuper.storage import ReportArchive, dumps, from_document, loads, to_document


def _same_tensors(a: HopfSuperAlgebraData, b: HopfSuperAlgebraData) -> None:
    assert a.labels == b.labels
    assert a.parity == b.parity
    assert a.unit == b.unit
    assert a.mult == b.mult
    assert a.comult == b.comult
    assert a.counit == b.counit
    assert a.antipode == b.antipode


@pytest.mark.parametrize("name", ["Taft(2)", "ext2", "A^(14)", "H_8^(12)"])
def test_document_reproduces_the_tensors(name):
    h = build_named(name)
    back = loads(dumps(h))
    _same_tensors(h, back)
    assert back.name == h.name
    assert back.conductor == h.conductor
    assert verify_axioms(back).passed


def test_document_keeps_the_conductor():
    h = build_named("Taft(3)")
    doc = to_document(h)
    assert doc.conductor == h.conductor
    assert doc.dim == 9
    _same_tensors(h, from_document(doc))


def _payload(name: str) -> dict:
    return json.loads(dumps(build_named(name)))


def test_index_out_of_range_has_a_pointer():
    payload = _payload("Taft(2)")
    payload["mult"][0][2] = 99
    with pytest.raises(SchemaError) as info:
        loads(json.dumps(payload))
    assert info.value.pointer == "/mult/0/2"


def test_bad_parity_value():
    payload = _payload("Taft(2)")
    payload["parity"][0] = 2
    with pytest.raises(SchemaError) as info:
        loads(json.dumps(payload))
    assert info.value.pointer == "/parity/0"


def test_malformed_scalar():
    payload = _payload("ext1")
    payload["counit"][0] = "1*q @4"
    with pytest.raises(SchemaError) as info:
        loads(json.dumps(payload))
    assert info.value.pointer == "/counit/0"


def test_missing_field_is_reported_by_the_model():
    payload = _payload("ext1")
    del payload["unit"]
    with pytest.raises(SchemaError) as info:
        loads(json.dumps(payload))
    assert info.value.pointer == "/unit"


def test_wrong_label_count():
    payload = _payload("ext1")
    payload["labels"].append("extra")
    with pytest.raises(SchemaError) as info:
        loads(json.dumps(payload))
    assert info.value.pointer == "/labels"


def test_inhomogeneous_parity_is_a_structure_error():
    payload = _payload("Taft(2)")
    payload["parity"] = [0, 0, 1, 0]
    with pytest.raises(StructureError) as info:
        loads(json.dumps(payload))
    assert not isinstance(info.value, SchemaError)


def test_invalid_json():
    with pytest.raises(SchemaError):
        loads("{not json")


@pytest.mark.parametrize("name, stem", [("A^(14)", "A_14"), ("H_8^(3)", "H_8_3"), ("A''_C4", "A_C4"), ("^", "unnamed")])
def test_safe_name(name, stem):
    assert ReportArchive.safe_name(name) == stem


async def test_archive_round_trip(tmp_path: Path):
    archive = ReportArchive(tmp_path / "out")
    h = build_named("H_4^(3)")
    path = await archive.save_algebra(h)
    assert path == tmp_path / "out" / "H_4_3.json"
    _same_tensors(h, await archive.load_algebra(path))


async def test_archive_json_and_text(tmp_path: Path):
    archive = ReportArchive(tmp_path)
    json_path = await archive.save_json("report", {"classes": ["H_4^(1)"], "ok": True})
    assert json.loads(json_path.read_text(encoding="utf-8")) == {"classes": ["H_4^(1)"], "ok": True}
    text_path = await archive.save_text("report", "Γ = C2\n", tmp_path / "nested" / "report.txt")
    assert text_path.read_text(encoding="utf-8") == "Γ = C2\n"


async def test_archive_missing_file(tmp_path: Path):
    with pytest.raises(OSError):
        await ReportArchive(tmp_path).load_algebra(tmp_path / "missing.json")
