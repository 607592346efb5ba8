import pytest

from hopfsuper.analysis import fingerprint, fingerprints_equal, grouplikes
from hopfsuper.catalog import (
    DatumEntry,
    GroupData,
    build_A_gamma_D,
    build_AN,
    build_AN_presented,
    build_exterior,
    build_group_hopf,
    build_named,
    build_taft,
    build_taft_presented,
    format_datum,
    list_names,
    parse_element,
    validate_datum,
)
from hopfsuper.core import HopfSuperAlgebraData, verify_axioms
from hopfsuper.errors import DatumError, PresentationError, UnknownNameError
from hopfsuper.scalars import CycRational, zeta

ONE = CycRational.one()


def _by_label(h: HopfSuperAlgebraData):
    """Structure constants keyed by basis labels, independent of the basis order."""

    def named(v):
        return {h.labels[k]: c for k, c in v.items()}

    mult = {(h.labels[i], h.labels[j]): named(v) for (i, j), v in h.mult.items()}
    comult = {
        h.labels[k]: {(h.labels[i], h.labels[j]): c for (i, j), c in t.items()} for k, t in h.comult.items()
    }
    antipode = {h.labels[k]: named(s) for k, s in enumerate(h.antipode)}
    return mult, comult, antipode


def test_group_algebras():
    assert build_group_hopf(GroupData([])).dim == 1
    c4 = build_named("kC4")
    assert c4.dim == 4
    assert grouplikes(c4).order == 4
    klein = build_named("kC2xC2")
    assert klein.dim == 4
    assert grouplikes(klein).invariant_factors == (2, 2)


def test_exterior_algebras():
    assert build_exterior(0).dim == 1
    ext1 = build_exterior(1)
    assert ext1.dim == 2
    assert ext1.odd_dim == 1
    ext3 = build_exterior(3)
    assert ext3.dim == 8
    assert fingerprints_equal(fingerprint(ext3), fingerprint(build_named("H_8^(1)")))


def test_sweedler_algebra():
    h = build_taft(2, CycRational.rational(-1))
    assert h.dim == 4
    assert h.labels == ("1", "c", "x", "cx")
    assert verify_axioms(h).passed


@pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (3, 2), (4, 1)])
def test_taft_closed_formulas_agree_with_rewriting(n, k):
    assert _by_label(build_taft(n, zeta(n, k))) == _by_label(build_taft_presented(n, zeta(n, k)))


def test_taft_needs_primitive_root():
    with pytest.raises(ValueError):
        build_taft(4, zeta(4, 2))
    with pytest.raises(ValueError):
        build_named("TaftSuper(4)")


@pytest.mark.parametrize("omega, j, mu", [(-1, 3, 0), (-1, 1, 0), (-1, 1, 1), (None, 3, 0)])
def test_an_family_dimension_2p(omega, j, mu):
    w = zeta(6) if omega is None else CycRational.rational(omega)
    h = build_AN(w, j, mu, 3, 2)
    assert h.dim == 12
    assert verify_axioms(h).passed
    assert _by_label(h) == _by_label(build_AN_presented(w, j, mu, 3, 2))


def test_an_power_relation():
    h = build_named("AN(-1,1,1)", p=3)
    x = parse_element(h, "x")
    assert h.multiply(x, x) == parse_element(h, "1 + -1*c^2")


def test_an_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_AN(CycRational.rational(-1), 3, 1, 3, 2)
    with pytest.raises(ValueError):
        build_AN(CycRational.rational(-1), 1, 0, 2, 2)


@pytest.mark.parametrize("label", [f"H_8^({i})" for i in range(1, 19)])
def test_eight_dimensional_table_entries(label):
    h = build_named(label)
    assert h.dim == 8
    assert verify_axioms(h).passed


@pytest.mark.parametrize("name", [f"A^({i})" for i in range(1, 15) if i != 6])
def test_sixteen_dimensional_candidates(name):
    h = build_named(name)
    assert h.dim == 16
    assert h.is_purely_even()
    assert verify_axioms(h).passed


def test_a2_has_four_grouplikes():
    assert grouplikes(build_named("A^(2)")).order == 4


def test_printed_a6_is_not_confluent():
    with pytest.raises(PresentationError) as info:
        build_named("A^(6)")
    assert info.value.overlap is not None
    assert verify_axioms(build_named("A^(6):linked")).passed


@pytest.mark.parametrize("name", ["A_C2", "A_C2xC2", "A'_C4", "A''_C4", "exotic"])
def test_eight_dimensional_hopf_algebras(name):
    h = build_named(name)
    assert h.dim == 8
    assert verify_axioms(h).passed


@pytest.mark.parametrize("name", ["A''_C4:printed", "exotic:printed"])
def test_printed_structures_fail_the_axioms(name):
    try:
        h = build_named(name)
    except PresentationError:
        return
    assert not verify_axioms(h).passed


def test_h8_13_is_a_c4_datum():
    group = GroupData([4], ["g"])
    direct = build_A_gamma_D(group, [DatumEntry(g=(1,), chi=(0,))])
    assert fingerprints_equal(fingerprint(direct), fingerprint(build_named("H_8^(13)")))


def test_datum_conditions():
    trivial = GroupData([])
    assert validate_datum(trivial, [DatumEntry(g=(), chi=())]) == []
    c2 = GroupData([2], ["g"])
    assert validate_datum(c2, [DatumEntry(g=(1,), chi=(1,), eps=0), DatumEntry(g=(0,), chi=(0,))]) == []
    violations = validate_datum(c2, [DatumEntry(g=(1,), chi=(1,))])
    assert len(violations) == 1
    assert "condition (1)" in violations[0]


def test_invalid_datum_raises():
    with pytest.raises(DatumError) as info:
        build_named("H_8^(11):printed")
    assert info.value.violations


def test_cyclic_datum_with_odd_generator():
    group = GroupData([3], ["g"])
    h = build_A_gamma_D(group, [DatumEntry(g=(0,), chi=(1,))])
    assert h.dim == 6
    assert h.odd_dim == 3
    g, z = parse_element(h, "g"), parse_element(h, "z")
    assert h.multiply(z, z) == {}
    assert h.multiply(g, z) == {k: c * zeta(3) for k, c in h.multiply(z, g).items()}


def test_format_datum():
    group = GroupData([4], ["g"])
    assert format_datum(group, [DatumEntry(g=(2,), chi=(2,))]) == "(g^2, χ^2, 0; 1)"
    two = [DatumEntry(g=(1,), chi=(0,)), DatumEntry(g=(0,), chi=(0,), mu=0, eps=1)]
    assert format_datum(group, two) == "((g, 1, 0; 1), (1, 1, 0; 1))"


def test_parse_element(sweedler):
    v = parse_element(sweedler, "x + 2*cx")
    assert v == {sweedler.index("x"): ONE, sweedler.index("cx"): CycRational.rational(2)}
    assert parse_element(sweedler, "-c") == {sweedler.index("c"): -ONE}
    w = parse_element(sweedler, "(1*z @4)*x")
    assert w == {sweedler.index("x"): zeta(4)}
    with pytest.raises(UnknownNameError):
        parse_element(sweedler, "y")


def test_registry():
    names = list_names()
    assert {"A_C2", "A^(14)", "H_8^(18)", "H_2p^(4)", "AN(tau,1,1)"} <= set(names)
    with pytest.raises(UnknownNameError):
        build_named("nonsense")
    assert build_named("H_2p^(1)", p=5).dim == 10
    assert build_named("H_2p^(1)", p=5).name == "H_10^(1)"
