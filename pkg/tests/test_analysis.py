from collections import Counter
from itertools import combinations

import pytest

from hopfsuper.analysis import (
    admissible_data,
    certificate_count,
    character_product,
    characters,
    find_datum,
    fingerprint,
    fingerprints_equal,
    grouplikes,
    is_grouplike,
    is_pointed,
    is_semisimple,
    reduced_skew_dimension,
    skew_primitives,
    super_data,
)
from hopfsuper.catalog import build_named
from hopfsuper.errors import StructureError, UnknownNameError
from hopfsuper.scalars import CycRational

ONE = CycRational.one()


@pytest.mark.parametrize("name, count", [("kC3", 3), ("kC2xC2", 4), ("Taft(2)", 2), ("ext2", 1), ("A^(7)", 8)])
def test_character_counts(name, count):
    h = build_named(name)
    chars = characters(h)
    assert len(chars.characters) == count
    assert chars.expected == count == certificate_count(h)
    assert chars.counit.is_counit()


def test_characters_of_linked_family_have_no_involution():
    h = build_named("AN(tau,1,1)", p=3)
    chars = characters(h)
    involutive = [chi for chi in chars.characters if character_product(chi, chi).is_counit()]
    assert [chi.is_counit() for chi in involutive] == [True]
    assert admissible_data(h) == []


def test_character_lookup_by_generator_values(a_c2xc2):
    chars = characters(a_c2xc2)
    chi = chars.find({"c": -ONE, "d": ONE})
    assert chi is not None
    assert chars.index_of(chi) > 0
    assert chars.find({"c": CycRational.rational(2)}) is None


def test_grouplikes():
    c4 = grouplikes(build_named("kC4"))
    assert c4.order == 4
    assert c4.invariant_factors == (4,)
    sweedler = build_named("Taft(2)")
    gl = grouplikes(sweedler)
    assert sorted(gl.labels) == ["1", "c"]
    assert not is_grouplike(sweedler, {sweedler.index("x"): ONE})
    assert grouplikes(build_named("ext3")).order == 1


def test_grouplike_label_lookup(sweedler):
    gl = grouplikes(sweedler)
    assert gl.labels[gl.find_label("c")] == "c"
    with pytest.raises(StructureError):
        gl.find_label("x")


def test_admissible_data_of_a8():
    data = admissible_data(build_named("A^(8)"))
    assert len(data) == 4
    assert Counter(d.g_label for d in data) == Counter({"d": 2, "c^2d": 2})


def test_admissible_data_counts():
    assert admissible_data(build_named("Taft(3)")) == []
    assert len(admissible_data(build_named("A_C2xC2"))) == 6
    assert len(admissible_data(build_named("Taft(2)"))) == 1


def test_admissible_data_need_an_ordinary_hopf_algebra(ext1):
    with pytest.raises(StructureError):
        admissible_data(ext1)


@pytest.mark.parametrize(
    "name, count",
    [("A_C2", 1), ("A_C2xC2", 3), ("A'_C4", 0), ("A''_C4", 0), ("A^(10)", 0), ("A^(7)", 10), ("A^(4)", 2)],
)
def test_super_data_counts(name, count):
    data = super_data(build_named(name))
    assert len(data) == count
    assert all(d.is_super for d in data)


def test_super_datum_of_an_family():
    data = super_data(build_named("AN(-1,p,0)", p=3))
    assert [d.g_label for d in data] == ["c^3"]


def test_find_datum(a_c2):
    data = super_data(a_c2)
    d = data[0]
    assert find_datum(data, d.g_label, d.alpha_index) is d
    with pytest.raises(UnknownNameError):
        find_datum(data, "c", 99)


def test_skew_primitives(sweedler):
    ext2 = build_named("ext2")
    assert skew_primitives(ext2, ext2.one(), 1).dim == 2
    assert skew_primitives(ext2, ext2.one(), 0).dim == 0
    c = {sweedler.index("c"): ONE}
    space = skew_primitives(sweedler, c, 0)
    assert space.dim == 2
    assert space.contains({sweedler.index("x"): ONE})
    assert space.contains({sweedler.index("c"): ONE, sweedler.index("1"): -ONE})
    assert reduced_skew_dimension(sweedler, c, 0) == 1


def test_pointed_and_semisimple():
    kc2 = build_named("kC2")
    assert is_pointed(kc2)
    assert is_semisimple(kc2)
    assert not is_semisimple(build_named("H_4^(1)"))
    assert not is_semisimple(build_named("Taft(2)"))
    assert is_pointed(build_named("H_4^(3)"))


def test_exotic_algebra_is_not_pointed():
    report = is_pointed(build_named("exotic"))
    assert not report.holds
    assert not report.quotient_commutative


def test_fingerprint_is_reflexive(sweedler):
    assert fingerprints_equal(fingerprint(sweedler), fingerprint(sweedler))


def test_fingerprints_separate_four_dimensional_classes():
    prints = [fingerprint(build_named(f"H_4^({i})")) for i in range(1, 5)]
    for a, b in combinations(prints, 2):
        assert not fingerprints_equal(a, b)


def test_fingerprints_separate_by_conjugation_characters():
    assert not fingerprints_equal(fingerprint(build_named("H_8^(14)")), fingerprint(build_named("H_8^(17)")))


def test_fingerprints_separate_by_nilpotency():
    f3 = fingerprint(build_named("H_2p^(3)", p=3))
    f4 = fingerprint(build_named("H_2p^(4)", p=3))
    assert not fingerprints_equal(f3, f4)


def test_fingerprint_contents(ext1):
    f = fingerprint(ext1)
    assert (f.dim, f.even_dim, f.odd_dim) == (2, 1, 1)
    assert any(c.eps == 1 and c.dim == 1 for c in f.components)
