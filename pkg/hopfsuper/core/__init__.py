"""Structure constants, axiom verification and exact linear algebra."""

from .algebra import AlgebraData, HopfSuperAlgebraData, Pair, TensorVec, dual_structure
from .axioms import AxiomCheck, AxiomReport, verify_axioms
from .linalg import CoordinateSystem, Echelon, LinearMap, Subspace, Vec, nullspace, solve
from .structure import (
    MorphismCheck,
    QuotientAlgebra,
    center,
    check_morphism,
    commutative_semisimple_quotient,
    ideal_generated,
    is_nilpotent_ideal,
    jacobson_radical,
    power_dims,
    radical_filtration,
    subalgebra_generated,
)
from .tensor import tensor_product, trivial_hopf

__all__ = [
    "AlgebraData",
    "AxiomCheck",
    "AxiomReport",
    "CoordinateSystem",
    "Echelon",
    "HopfSuperAlgebraData",
    "LinearMap",
    "MorphismCheck",
    "Pair",
    "QuotientAlgebra",
    "Subspace",
    "TensorVec",
    "Vec",
    "center",
    "check_morphism",
    "commutative_semisimple_quotient",
    "dual_structure",
    "ideal_generated",
    "is_nilpotent_ideal",
    "jacobson_radical",
    "nullspace",
    "power_dims",
    "radical_filtration",
    "solve",
    "subalgebra_generated",
    "tensor_product",
    "trivial_hopf",
    "verify_axioms",
]
