import pytest

from hopfsuper.analysis import fingerprint, fingerprints_equal, grouplikes, is_pointed
from hopfsuper.catalog import build_named
from hopfsuper.core import verify_axioms
from hopfsuper.duality import (
    HopfPairing,
    bosonization_duality,
    double_dual_check,
    dual,
    exterior_pairing,
    pairing_from_generators,
    pairing_to_morphism,
    search_pairing,
    verify_hopf_pairing,
)
from hopfsuper.errors import StructureError, UnknownNameError
from hopfsuper.scalars import CycRational, zeta

ONE = CycRational.one()
MINUS_ONE = CycRational.rational(-1)


def test_dual_of_group_algebra_has_characters_as_grouplikes():
    d = dual(build_named("kC4"))
    assert verify_axioms(d).passed
    assert grouplikes(d).order == 4


def test_dual_is_cached(sweedler):
    assert dual(sweedler) is dual(sweedler)


@pytest.mark.parametrize("name", ["Taft(2)", "ext2", "H_4^(3)", "H_8^(13)"])
def test_double_dual(name):
    h = build_named(name)
    assert verify_axioms(dual(h)).passed
    assert double_dual_check(h).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exterior_pairing(n):
    pairing = exterior_pairing(n)
    assert pairing.status is not None
    assert pairing.status.is_hopf
    assert pairing.status.nondegenerate
    assert pairing_to_morphism(pairing).isomorphism


def test_degenerate_exterior_pairing_is_a_morphism_but_not_iso():
    pairing = exterior_pairing(2, form=[[1, 0], [0, 0]])
    assert pairing.status is not None
    assert pairing.status.is_hopf
    assert not pairing.status.nondegenerate
    morphism = pairing_to_morphism(pairing)
    assert morphism.check.ok
    assert not morphism.isomorphism


def test_broken_unit_value_fails():
    good = exterior_pairing(1)
    matrix = dict(good.matrix)
    matrix[(0, 0)] = CycRational.zero()
    status = verify_hopf_pairing(HopfPairing(left=good.left, right=good.right, matrix=matrix))
    assert not status.is_hopf
    assert not (status.unit and status.counit)
    assert status.failed is not None
    with pytest.raises(StructureError):
        pairing_to_morphism(HopfPairing(left=good.left, right=good.right, matrix=matrix))


def test_pairing_between_h4_3_and_h4_4():
    h, a = build_named("H_4^(3)"), build_named("H_4^(4)")
    pairing = pairing_from_generators(h, a, {("g", "g"): MINUS_ONE, ("z", "z"): ONE})
    assert pairing.status is not None
    assert pairing.status.is_hopf and pairing.status.nondegenerate
    assert pairing_to_morphism(pairing).isomorphism


def test_self_pairing_of_h8_12():
    h = build_named("H_8^(12)")
    pairing = pairing_from_generators(h, h, {("g", "g"): zeta(4), ("z", "z"): ONE})
    assert pairing.status is not None
    assert pairing.status.is_hopf and pairing.status.nondegenerate


def test_pairing_rejects_mixed_generator_pairs():
    h = build_named("H_4^(3)")
    with pytest.raises(UnknownNameError):
        pairing_from_generators(h, h, {("g", "z"): ONE})


@pytest.mark.parametrize("i, j", [(2, 2), (5, 6), (8, 8), (9, 10), (11, 11), (12, 12), (14, 16), (17, 17)])
def test_eight_dimensional_duals_by_search(i, j):
    h, a = build_named(f"H_8^({i})"), build_named(f"H_8^({j})")
    skew = {(g.name, g.name): ONE for g in h.presentation.generators}
    pairing = search_pairing(h, a, skew)
    assert pairing is not None
    assert pairing_to_morphism(pairing).isomorphism
    assert fingerprints_equal(fingerprint(h), fingerprint(dual(a)))


@pytest.mark.parametrize("name", ["kC2", "ext1", "H_4^(2)", "H_8^(13)"])
def test_bosonization_duality(name):
    pairing = bosonization_duality(build_named(name))
    assert pairing.status is not None
    assert pairing.status.is_hopf
    assert pairing.status.nondegenerate


@pytest.mark.parametrize("name, p", [("H_8^(18)", 3), ("H_2p^(4)", 3)])
def test_non_pointed_duals(name, p):
    h = build_named(name, p=p)
    assert is_pointed(h)
    assert not is_pointed(dual(h))
