from fractions import Fraction

import pytest

from hopfsuper.analysis import fingerprint, fingerprints_equal, grouplikes
from hopfsuper.catalog import build_named
from hopfsuper.core import (
    AlgebraData,
    HopfSuperAlgebraData,
    LinearMap,
    QuotientAlgebra,
    Subspace,
    center,
    check_morphism,
    jacobson_radical,
    nullspace,
    solve,
    tensor_product,
    trivial_hopf,
    verify_axioms,
)
from hopfsuper.errors import StructureError
from hopfsuper.scalars import CycRational

ONE = CycRational.one()


def _mutant(h: HopfSuperAlgebraData, key, value) -> HopfSuperAlgebraData:
    mult = {k: dict(v) for k, v in h.mult.items()}
    mult[key] = value
    return HopfSuperAlgebraData(h.dim, h.labels, h.parity, mult, h.unit, h.comult, h.counit, h.antipode, name="mutant")


@pytest.mark.parametrize("name", ["k", "kC4", "kC2xC2", "ext1", "ext2", "Taft(2)", "Taft(3)", "H_4^(3)", "H_8^(7)"])
def test_catalog_structures_pass_every_axiom(name):
    report = verify_axioms(build_named(name))
    assert report.passed, report.failures()
    assert set(report.checks) >= {"associativity", "coassociativity", "compatibility", "antipode", "parity"}


def test_flipped_product_fails_associativity_with_witness(ext1):
    z = ext1.index("z")
    mutant = _mutant(ext1, (z, 0), {z: -ONE})
    report = verify_axioms(mutant)
    assert not report.passed
    assert not report.checks["associativity"].passed
    assert len(report.checks["associativity"].witness) == 3
    assert "associativity" in report.failures()


def test_verify_only_selected_axioms(ext1):
    report = verify_axioms(ext1, only=["unit", "counit"])
    assert set(report.checks) == {"unit", "counit"}


def test_parity_violation_is_reported(ext1):
    z = ext1.index("z")
    mutant = _mutant(ext1, (z, 0), {0: ONE})
    assert mutant.parity_violations()
    assert not verify_axioms(mutant).checks["parity"].passed


def test_malformed_structure_constants():
    with pytest.raises(StructureError):
        HopfSuperAlgebraData(0, [], [], {}, {}, {}, [], [])
    with pytest.raises(StructureError):
        HopfSuperAlgebraData(1, ["1"], [0], {(0, 1): {0: ONE}}, {0: ONE}, {}, [ONE], [{0: ONE}])
    with pytest.raises(StructureError):
        HopfSuperAlgebraData(1, ["1"], [2], {}, {0: ONE}, {}, [ONE], [{0: ONE}])
    with pytest.raises(StructureError):
        HopfSuperAlgebraData(2, ["a", "a"], [0, 0], {}, {0: ONE}, {}, [ONE, ONE], [{}, {}])


def test_tensor_with_exterior():
    h = tensor_product(build_named("kC2"), build_named("ext1"))
    assert h.dim == 4
    assert h.odd_dim == 2
    assert grouplikes(h).order == 2
    assert verify_axioms(h).passed
    assert fingerprints_equal(fingerprint(h), fingerprint(build_named("H_4^(2)")))


def test_tensor_with_trivial_is_isomorphic(sweedler):
    h = tensor_product(sweedler, trivial_hopf())
    assert h.dim == sweedler.dim
    assert check_morphism(sweedler, h, LinearMap.identity(4), require_iso=True)


def test_tensor_of_exteriors_matches_ext2():
    h = tensor_product(build_named("ext1"), build_named("ext1"))
    assert verify_axioms(h).passed
    assert fingerprints_equal(fingerprint(h), fingerprint(build_named("ext2")))


def test_tensor_antipode_has_no_koszul_sign():
    ext1 = build_named("ext1")
    h = tensor_product(ext1, ext1)
    zz = h.index("z⊗z")
    assert h.antipode[zz] == {zz: ONE}
    assert verify_axioms(h).checks["antipode"].passed


def test_jacobson_radical(sweedler, ext1):
    assert jacobson_radical(build_named("kC4")).dim == 0
    rad = jacobson_radical(sweedler)
    assert rad.dim == 2
    assert rad.contains({sweedler.index("x"): ONE})
    assert rad.contains({sweedler.index("cx"): ONE})
    rad1 = jacobson_radical(ext1)
    assert rad1.dim == 1
    assert rad1.contains({ext1.index("z"): ONE})


def test_quotient_by_the_whole_space_is_zero(sweedler):
    quotient = QuotientAlgebra(sweedler, Subspace.full(sweedler.dim))
    assert quotient.dim == 0
    assert quotient.labels == ()
    assert quotient.mult == {}
    assert quotient.unit == {}
    with pytest.raises(StructureError):
        AlgebraData(0, [], {}, {})


def test_center_of_commutative_algebra():
    h = build_named("kC2xC2")
    assert center(h).dim == 4
    assert center(build_named("Taft(2)")).dim == 1


def test_identity_is_a_morphism(sweedler):
    assert check_morphism(sweedler, sweedler, LinearMap.identity(sweedler.dim), require_iso=True).ok


def test_parity_violating_swap_is_rejected(ext1):
    swap = LinearMap(2, 2, [{1: ONE}, {0: ONE}])
    check = check_morphism(ext1, ext1, swap)
    assert not check
    assert check.failed == "parity"
    assert check.witness


def test_rank_deficient_map_is_not_an_isomorphism(ext1):
    k = trivial_hopf()
    counit = LinearMap(2, 1, [{0: ONE}, {}])
    assert check_morphism(ext1, k, counit).ok
    assert check_morphism(ext1, k, counit, require_iso=True).failed == "bijectivity"


def test_with_conductor(sweedler):
    lifted = sweedler.with_conductor(12)
    assert lifted.conductor == 12
    assert verify_axioms(lifted).passed
    with pytest.raises(StructureError):
        sweedler.with_conductor(3)


def test_linear_algebra_helpers():
    half = CycRational.rational(Fraction(1, 2))
    rows = [{0: ONE, 1: ONE}, {1: ONE, 2: ONE}]
    kernel = nullspace(rows, 3)
    assert len(kernel) == 1
    x = solve(rows, [ONE, half], 3)
    assert x is not None
    assert solve([{0: ONE}, {0: ONE}], [ONE, half], 1) is None

    f = LinearMap.from_rows([[ONE, ONE], [CycRational.zero(), ONE]])
    assert f.compose(f.inverse()) == LinearMap.identity(2)
    with pytest.raises(StructureError):
        LinearMap.from_rows([[ONE, ONE], [ONE, ONE]]).inverse()

    s = Subspace(3, [{0: ONE}, {1: ONE}])
    t = Subspace(3, [{1: ONE}, {2: ONE}])
    assert s.intersection(t).dim == 1
