from pathlib import Path

import pytest

from hopfsuper.analysis import characters, super_data
from hopfsuper.bosonize import coinvariants
from hopfsuper.catalog import build_named
from hopfsuper.classify import (
    DEFAULT_TABLES_PATH,
    AutomorphismInput,
    Classifier,
    analyse_candidate,
    analyse_row,
    automorphism_map,
    load_expected_tables,
    match_presentation,
    orbits,
    render_report,
    run_classification,
    verify_automorphisms,
)
from hopfsuper.config import ClassifyConfig, DataConfig, Settings
from hopfsuper.errors import SchemaError, UnknownNameError
from hopfsuper.scalars import CycRational


def _datum(h, g_label, **alpha):
    chars = characters(h)
    chi = chars.find({name: CycRational.parse(v) for name, v in alpha.items()})
    assert chi is not None
    index = chars.index_of(chi)
    return next(d for d in super_data(h) if d.g_label == g_label and d.alpha_index == index)


def _auto(name, **images):
    return AutomorphismInput(name=name, images=images)


def test_swap_of_skew_generators_in_a2():
    (spec,) = verify_automorphisms(build_named("A^(2)"), [_auto("phi_P", x1="x2", x2="x1")])
    assert spec.ok
    assert spec.map is not None


def test_scalar_family_is_checked_at_every_sample():
    family = AutomorphismInput(name="phi_u", parameters=["u"], images={"x": "(u)*x"})
    (spec,) = verify_automorphisms(build_named("A^(9)"), [family], samples=(-1, 2, 3))
    assert spec.ok
    assert spec.is_family
    assert spec.instances_checked == 3


def test_printed_and_corrected_sigma_of_a9():
    h = build_named("A^(9)")
    printed, corrected = verify_automorphisms(h, [_auto("sigma", d="c^2d"), _auto("sigma", c="c^3", d="c^2d")])
    assert not printed.ok
    assert printed.check.failed is not None
    assert corrected.ok


def test_exchange_of_d_and_e_in_a7():
    (spec,) = verify_automorphisms(build_named("A^(7)"), [_auto("tau", d="e", e="d")])
    assert spec.ok


def test_automorphism_map_rejects_unknown_generator():
    with pytest.raises(UnknownNameError):
        automorphism_map(build_named("A^(7)"), {"y": "x"})


def _a7_orbit_sets(order):
    h = build_named("A^(7)")
    specs = [
        _auto("sigma", d="de"),
        _auto("tau", d="e", e="d"),
        AutomorphismInput(name="phi_u", parameters=["u"], images={"x": "(u)*x"}),
    ]
    autos = verify_automorphisms(h, [specs[i] for i in order])
    assert all(a.ok for a in autos)
    data = super_data(h)
    return data, orbits(h, data, autos)


def test_scalar_family_of_a14_only_allows_signs():
    h = build_named("A^(14)")
    family = AutomorphismInput(name="phi_u", parameters=["u"], images={"x": "(u)*x"})
    (every_u,) = verify_automorphisms(h, [family], samples=(-1, 2))
    assert not every_u.ok
    assert every_u.failing_instance == {"u": "2"}
    assert every_u.check.failed == "multiplication"
    signs = family.model_copy(update={"instances": [{"u": "1"}, {"u": "-1"}]})
    (only_signs,) = verify_automorphisms(h, [signs])
    assert only_signs.ok
    assert only_signs.instances_checked == 2


def test_orbits_of_a7():
    data, found = _a7_orbit_sets([0, 1, 2])
    assert len(data) == 10
    assert len(found) == 4
    assert sorted(m for o in found for m in o.members) == list(range(10))


def test_orbits_do_not_depend_on_automorphism_order():
    _, forward = _a7_orbit_sets([0, 1, 2])
    _, backward = _a7_orbit_sets([2, 1, 0])
    assert [o.members for o in forward] == [o.members for o in backward]


def test_orbits_of_a2_and_a4():
    a2 = build_named("A^(2)")
    autos = verify_automorphisms(a2, [_auto("phi_P", x1="x2", x2="x1")])
    assert len(orbits(a2, super_data(a2), autos)) == 3
    a4 = build_named("A^(4)")
    autos = verify_automorphisms(a4, [_auto("tau", c="d", d="c", x1="x2", x2="x1")])
    assert len(orbits(a4, super_data(a4), autos)) == 1


def test_match_a9_against_h8_13():
    a = build_named("A^(9)")
    record = coinvariants(a, _datum(a, "d", c="1", d="-1"))
    result = match_presentation(a, record, build_named("H_8^(13)"), {"g": "c", "z": "x"})
    assert result.ok
    assert result.stage == "printed"


def test_match_a4_against_h8_7():
    a = build_named("A^(4)")
    record = coinvariants(a, _datum(a, "c", c="-1", d="1"))
    result = match_presentation(a, record, build_named("H_8^(7)"), {"g": "d", "z1": "x2", "z2": "x1"})
    assert result.ok


def test_match_linked_family_with_square_of_generator():
    a = build_named("AN(-1,1,0)", p=3)
    (d,) = super_data(a)
    result = match_presentation(a, coinvariants(a, d), build_named("H_2p^(2)", p=3), {"g": "c^2", "z": "x"})
    assert result.ok


def test_a14_needs_a_rescaled_generator():
    a = build_named("A^(14)")
    record = coinvariants(a, _datum(a, "d", c="1", d="-1"))
    target = build_named("H_8^(18)")
    assert not match_presentation(a, record, target, {"g": "c", "z": "x"}, search=False).ok
    result = match_presentation(a, record, target, {"g": "c", "z": "x"})
    assert result.ok
    assert result.stage == "rescaled"
    assert not result.printed_check.ok


def test_assignment_outside_the_carrier_is_rejected():
    a = build_named("A^(9)")
    record = coinvariants(a, _datum(a, "d", c="1", d="-1"))
    result = match_presentation(a, record, build_named("H_8^(13)"), {"g": "d", "z": "x"})
    assert not result.ok
    assert result.printed_check.failed == "carrier"


def test_expected_tables_load():
    tables = load_expected_tables()
    assert set(tables.tables) == {"4", "8", "2p", "taft", "square"}
    assert tables.table("8").classes == 18
    assert tables.erratum("A^(9):sigma") is not None
    with pytest.raises(UnknownNameError):
        tables.table("16")


def test_schema_error_points_at_the_field(tmp_path: Path):
    path = tmp_path / "tables.yaml"
    path.write_text('version: 1\ntables:\n  "4":\n    title: t\n    classes: -1\n    candidates: []\n')
    with pytest.raises(SchemaError) as info:
        load_expected_tables(path)
    assert info.value.pointer == "/tables/4/classes"


def test_unknown_erratum_key_is_a_schema_error(tmp_path: Path):
    path = tmp_path / "tables.yaml"
    path.write_text('version: 1\ntables:\n  "4":\n    title: t\n    classes: 0\n    candidates: []\n    errata: [x]\n')
    with pytest.raises(SchemaError):
        load_expected_tables(path)


def test_invalid_yaml(tmp_path: Path):
    path = tmp_path / "tables.yaml"
    path.write_text("tables: [unclosed\n")
    with pytest.raises(SchemaError):
        load_expected_tables(path)


def test_analyse_candidate_with_presentation_error():
    entry = next(c for c in load_expected_tables().table("8").candidates if c.name == "A^(6)")
    report = analyse_candidate(entry, 3)
    assert report.status == "presentation_error"
    assert report.overlap


def test_analyse_row_with_printed_pairing():
    row = next(r for r in load_expected_tables().table("4").rows if r.label == "H_4^(2)")
    report = analyse_row(row, 3)
    assert report.pairing_ok
    assert report.dual_pointed
    assert not report.mismatches


async def test_classify_four_dimensional(settings: Settings):
    report = await Classifier(settings).run("4")
    assert report.ok, report.mismatches
    assert report.found_classes == 4
    assert sorted(report.classes) == ["H_4^(1)", "H_4^(2)", "H_4^(3)", "H_4^(4)"]
    assert report.fingerprints_distinct
    keys = {e.key for e in report.errata}
    assert "A_C2xC2:classes" in keys
    assert all(e.evidence for e in report.errata if e.known)

    text = render_report(report)
    assert "H_4^(3)" in text
    assert "result: matches the expected table" in text
    assert "Errata" in text


async def test_classify_with_concurrency_limit(settings: Settings):
    limited = settings.model_copy(update={"classify": ClassifyConfig(max_concurrent=1)})
    report = await Classifier(limited).run("taft")
    assert report.ok, report.mismatches
    assert report.found_classes == 3


@pytest.mark.parametrize("p", [3, 5])
async def test_classify_dimension_2p(settings: Settings, p: int):
    report = await run_classification("2p", p=p, settings=settings)
    assert report.ok, report.mismatches
    assert report.p == p
    assert report.found_classes == 4


async def test_square_dimension_scan_finds_nothing(settings: Settings):
    report = await run_classification("square", p=3, settings=settings)
    assert report.ok, report.mismatches
    assert report.found_classes == 0
    assert all(not c.super_data for c in report.candidates)


async def test_classify_eight_dimensional(settings: Settings):
    report = await Classifier(settings).run("8")
    assert report.ok, report.mismatches
    assert report.found_classes == 18
    assert report.fingerprints_distinct
    stages = {cls.name: cls.stage for c in report.candidates for cls in c.classes}
    assert stages["H_8^(18)"] == "rescaled"
    rows = {r.label: r for r in report.rows}
    assert rows["H_8^(18)"].dual_pointed is False
    assert rows["H_8^(11)"].pairing_ok
    assert rows["H_8^(11)"].pairing_source in ("searched", "swapped")
    assert all(e.known for e in report.errata), [e.key for e in report.errata if not e.known]
    keys = {e.key for e in report.errata}
    assert {"A^(14):phi_u", "H_8^(11):pairing"} <= keys


async def test_classify_rejects_even_prime(settings: Settings):
    with pytest.raises(ValueError):
        await Classifier(settings).run("2p", p=4)


async def test_mismatch_against_altered_tables(settings: Settings, tmp_path: Path):
    altered = tmp_path / "tables.yaml"
    text = DEFAULT_TABLES_PATH.read_text(encoding="utf-8")
    altered.write_text(text.replace("      - name: A_C2\n        sd: 1", "      - name: A_C2\n        sd: 2"))
    custom = settings.model_copy(update={"data": DataConfig(expected_tables=altered)})
    report = await Classifier(custom).run("4")
    assert not report.ok
    assert any("A_C2" in m for m in report.mismatches)
    assert "mismatches" in render_report(report)
