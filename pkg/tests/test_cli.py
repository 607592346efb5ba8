import json
from pathlib import Path

import pytest

from hopfsuper.cli import main
from hopfsuper.storage import loads


def test_catalog_list(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "A^(14)" in out
    assert "H_8^(18)" in out


def test_build_then_verify(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    path = isolated_cwd / "h8_7.json"
    assert main(["catalog", "build", "H_8^(7)", "-o", str(path)]) == 0
    assert loads(path.read_text(encoding="utf-8")).dim == 8
    capsys.readouterr()
    assert main(["verify", str(path)]) == 0
    assert "all axioms hold" in capsys.readouterr().out


def test_conductor_flag(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["--conductor", "12", "catalog", "build", "Taft(3)"]) == 0
    assert json.loads(capsys.readouterr().out)["conductor"] == 12


def test_conductor_must_be_a_multiple(isolated_cwd: Path):
    assert main(["--conductor", "4", "verify", "Taft(3)"]) == 2


def test_super_data_listing(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["superdata", "A'_C4"]) == 0
    assert json.loads(capsys.readouterr().out) == []
    assert main(["superdata", "A_C2xC2"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 3


def test_skew_primitives(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["skewprim", "Taft(2)", "--g", "c", "--parity", "0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dim"] == 2
    assert payload["reduced_dim"] == 1


def test_fingerprint_comparison(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    assert main(["fingerprint", "H_4^(3)", "H_4^(4)"]) == 0
    assert "different" in capsys.readouterr().out


def test_bosonization_duality(isolated_cwd: Path):
    assert main(["bosondual", "ext1"]) == 0


def test_unknown_name(isolated_cwd: Path):
    assert main(["verify", "nonsense"]) == 2


def test_unknown_super_datum(isolated_cwd: Path):
    assert main(["coinv", "A_C2", "--g", "c", "--alpha", "7"]) == 2


def test_missing_document(isolated_cwd: Path):
    assert main(["verify", str(isolated_cwd / "missing.json")]) == 3


def test_malformed_document(isolated_cwd: Path):
    path = isolated_cwd / "broken.json"
    path.write_text('{"dim": 0}')
    assert main(["verify", str(path)]) == 2


def test_missing_settings_file(isolated_cwd: Path):
    assert main(["--config", str(isolated_cwd / "absent.yaml"), "catalog", "list"]) == 3


def test_even_prime_is_a_usage_error(isolated_cwd: Path):
    with pytest.raises(SystemExit) as info:
        main(["classify", "--table", "2p", "--p", "4"])
    assert info.value.code == 2


def test_classify_writes_reports(isolated_cwd: Path, capsys: pytest.CaptureFixture[str]):
    output = isolated_cwd / "out" / "table4.json"
    assert main(["classify", "--table", "4", "-o", str(output)]) == 0
    assert "result: matches the expected table" in capsys.readouterr().out
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["found_classes"] == 4
    assert output.with_suffix(".txt").is_file()


def test_classify_default_output(isolated_cwd: Path):
    assert main(["classify", "--table", "taft"]) == 0
    assert (isolated_cwd / "reports" / "classify_taft.json").is_file()
    assert (isolated_cwd / "reports" / "classify_taft.txt").is_file()
