import pytest

from hopfsuper.analysis import characters, fingerprint, fingerprints_equal, grouplikes, super_data
from hopfsuper.bosonize import (
    bosonize,
    carrier_space,
    coinvariants,
    generation_check,
    projection_pi,
    roundtrip_iso,
)
from hopfsuper.catalog import build_named, parse_element
from hopfsuper.core import LinearMap, verify_axioms
from hopfsuper.errors import NotSuperDatumError
from hopfsuper.scalars import CycRational

ONE = CycRational.one()


def _datum(h, g_label, **alpha):
    chars = characters(h)
    chi = chars.find({name: CycRational.parse(v) for name, v in alpha.items()})
    assert chi is not None
    index = chars.index_of(chi)
    return next(d for d in super_data(h) if d.g_label == g_label and d.alpha_index == index)


def test_bosonization_of_exterior_is_sweedler(ext1, sweedler):
    record = bosonize(ext1)
    hat = record.result
    assert hat.dim == 4
    assert hat.is_purely_even()
    assert verify_axioms(hat).passed
    assert grouplikes(hat).order == 2
    assert fingerprints_equal(fingerprint(hat), fingerprint(sweedler))
    assert record.embedding.source_dim == 2
    assert record.section.target_dim == 4
    assert hat.multiply(record.sigma, record.sigma) == hat.one()


def test_bosonization_antipode_fixes_sigma(ext1):
    hat = bosonize(ext1).result
    n = ext1.dim
    z = ext1.index("z")
    assert hat.antipode[n] == {n: ONE}
    assert hat.antipode[z] == {n + z: ONE}
    assert hat.antipode[n + z] == {z: -ONE}


@pytest.mark.parametrize("name", ["H_4^(2)", "H_4^(3)", "H_8^(7)"])
def test_bosonization_doubles_grouplikes(name):
    h = build_named(name)
    hat = bosonize(h).result
    assert hat.dim == 2 * h.dim
    assert verify_axioms(hat).passed
    assert grouplikes(hat).order == 2 * grouplikes(h).order


def test_coinvariants_of_sweedler(sweedler, ext1):
    (d,) = super_data(sweedler)
    assert d.g_label == "c"
    record = coinvariants(sweedler, d)
    assert record.result.dim == 2
    assert record.result.odd_dim == 1
    assert fingerprints_equal(fingerprint(record.result), fingerprint(ext1))
    assert carrier_space(sweedler, d).dim == 2


def test_projection_splits(sweedler):
    (d,) = super_data(sweedler)
    rec = projection_pi(sweedler, d)
    assert rec.projection.compose(rec.section) == LinearMap.identity(2)


def test_coinvariants_of_a_c2(a_c2):
    (d,) = super_data(a_c2)
    record = coinvariants(a_c2, d)
    assert record.result.dim == 4
    assert verify_axioms(record.result).passed
    assert fingerprints_equal(fingerprint(record.result), fingerprint(build_named("H_4^(1)")))
    assert roundtrip_iso(a_c2, d, record).is_bijective()


@pytest.mark.parametrize("name", ["A_C2xC2", "Taft(6)", "AN(-1,1,1)"])
def test_roundtrip_for_every_super_datum(name):
    a = build_named(name, p=3)
    data = super_data(a)
    assert data
    for d in data:
        f = roundtrip_iso(a, d)
        assert f.source_dim == a.dim


def test_roundtrip_recovers_the_source(ext1):
    hat = bosonize(ext1).result
    (d,) = super_data(hat)
    assert fingerprints_equal(fingerprint(coinvariants(hat, d).result), fingerprint(ext1))


def test_a14_bosonizes_h8_18():
    a = build_named("A^(14)")
    d = _datum(a, "d", c="1", d="-1")
    record = coinvariants(a, d)
    roundtrip_iso(a, d, record)
    assert fingerprints_equal(fingerprint(record.result), fingerprint(build_named("H_8^(18)")))


def test_generation_by_grouplikes_and_skew_generators():
    a = build_named("A^(2)")
    d = _datum(a, "c", c="-1", d="1")
    assert generation_check(a, d).ok
    partial = [parse_element(a, "1"), parse_element(a, "d"), parse_element(a, "x1")]
    report = generation_check(a, d, partial)
    assert not report.ok
    assert report.generated_dim < report.carrier_dim


def test_commutative_algebras_have_no_super_data():
    assert super_data(build_named("kC2xC2")) == []
    assert super_data(build_named("kC4")) == []


def test_non_super_datum_is_rejected(a_c2):
    (d,) = super_data(a_c2)
    with pytest.raises(NotSuperDatumError):
        coinvariants(a_c2, d.model_copy(update={"is_super": False}))
