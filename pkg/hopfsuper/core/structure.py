"""Algebraic structure of finite-dimensional algebras: radical, center, ideals, quotients, morphisms."""

from typing import Dict, List, Mapping, Optional, Sequence

import structlog
from pydantic import BaseModel, Field

from ..scalars import CycRational
from .algebra import AlgebraData, HopfSuperAlgebraData, Pair, TensorVec, tensor_iadd
from .linalg import Echelon, LinearMap, Subspace, Vec, nullspace, vec_add

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


def left_traces(a: AlgebraData) -> List[CycRational]:
    """Trace of left multiplication by each basis vector."""
    zero = CycRational.zero()
    return [sum((a.mul_basis(m, j).get(j, zero) for j in range(a.dim)), zero) for m in range(a.dim)]


def jacobson_radical(a: AlgebraData) -> Subspace:
    """Radical of the trace form Tr(L_{xy}); equals J(A) in characteristic zero."""
    tr = left_traces(a)
    rows: List[Vec] = []
    for j in range(a.dim):
        row: Vec = {}
        for i in range(a.dim):
            s = CycRational.zero()
            for k, c in a.mul_basis(i, j).items():
                if not tr[k].is_zero():
                    s = s + c * tr[k]
            if not s.is_zero():
                row[i] = s
        rows.append(row)
    return Subspace(a.dim, nullspace(rows, a.dim))


def center(a: AlgebraData) -> Subspace:
    """The ordinary (unsigned) center {x : xb = bx for all b}."""
    rows: List[Vec] = []
    for b in range(a.dim):
        per_k: Dict[int, Vec] = {}
        for i in range(a.dim):
            diff = vec_add(a.mul_basis(i, b), a.mul_basis(b, i), -1)
            for k, c in diff.items():
                per_k.setdefault(k, {})[i] = c
        rows.extend(per_k.values())
    return Subspace(a.dim, nullspace(rows, a.dim))


def product_space(a: AlgebraData, left: Sequence[Vec], right: Sequence[Vec]) -> Subspace:
    return Subspace(a.dim, (a.multiply(u, v) for u in left for v in right))


def ideal_generated(a: AlgebraData, generators: Sequence[Mapping[int, CycRational]]) -> Subspace:
    """Two-sided ideal generated by the given vectors."""
    ech = Echelon()
    pending = [dict(g) for g in generators]
    basis = [{i: CycRational.one()} for i in range(a.dim)]
    while pending:
        v = pending.pop()
        if not ech.add(v):
            continue
        for b in basis:
            pending.append(a.multiply(b, v))
            pending.append(a.multiply(v, b))
    return Subspace(a.dim, ech.basis())


def subalgebra_generated(a: AlgebraData, generators: Sequence[Mapping[int, CycRational]]) -> Subspace:
    """Span of all products of generators, including the unit."""
    ech = Echelon()
    ech.add(a.unit)
    frontier: List[Vec] = [a.one()]
    gens = [dict(g) for g in generators]
    while frontier:
        nxt: List[Vec] = []
        for u in frontier:
            for g in gens:
                w = a.multiply(u, g)
                if ech.add(w):
                    nxt.append(w)
        frontier = nxt
    return Subspace(a.dim, ech.basis())


def power_dims(a: AlgebraData, ideal: Subspace, limit: Optional[int] = None) -> List[int]:
    """Dimensions of I, I², I³, … up to the first zero power or stabilization."""
    dims = [ideal.dim]
    current = ideal
    for _ in range(limit or a.dim + 1):
        if current.dim == 0:
            break
        nxt = product_space(a, current.basis, ideal.basis)
        if nxt.dim == current.dim:
            break
        dims.append(nxt.dim)
        current = nxt
    return dims


def is_nilpotent_ideal(a: AlgebraData, ideal: Subspace) -> bool:
    return ideal.dim == 0 or power_dims(a, ideal)[-1] == 0


def radical_filtration(a: AlgebraData) -> List[int]:
    """dim J^k for k = 1, 2, … until J^k = 0."""
    return power_dims(a, jacobson_radical(a))


class QuotientAlgebra(AlgebraData):
    """A/I with basis the unit vectors of the coordinates not used as pivots of I.

    Attributes:
        ideal: The ideal I
        lift: Index in A of each quotient basis vector
    """

    def __init__(self, parent: AlgebraData, ideal: Subspace) -> None:
        self.parent = parent
        self.ideal = ideal
        self.lift: List[int] = ideal.complement_indices()
        position = {k: q for q, k in enumerate(self.lift)}
        self._position = position
        mult: Dict[Pair, Vec] = {}
        for qi, i in enumerate(self.lift):
            for qj, j in enumerate(self.lift):
                v = self.project(parent.mul_basis(i, j))
                if v:
                    mult[(qi, qj)] = v
        labels = [parent.labels[i] for i in self.lift]
        super().__init__(len(self.lift), labels, mult, self.project(parent.unit), allow_zero=True)

    def project(self, v: Mapping[int, CycRational]) -> Vec:
        r = self.ideal.reduce(v)
        return {self._position[k]: c for k, c in r.items()}

    def lift_vec(self, v: Mapping[int, CycRational]) -> Vec:
        return {self.lift[q]: c for q, c in v.items()}


def commutator_ideal(a: AlgebraData, generators: Optional[Sequence[Vec]] = None) -> Subspace:
    """Ideal generated by commutators of basis vectors, or of the given algebra generators."""
    gens = generators if generators is not None else [{i: CycRational.one()} for i in range(a.dim)]
    comms = []
    for x in range(len(gens)):
        for y in range(x + 1, len(gens)):
            c = vec_add(a.multiply(gens[x], gens[y]), a.multiply(gens[y], gens[x]), -1)
            if c:
                comms.append(c)
    return ideal_generated(a, comms)


def commutative_semisimple_quotient(a: AlgebraData, generators: Optional[Sequence[Vec]] = None) -> QuotientAlgebra:
    """Largest commutative semisimple quotient of A.

    With algebra generators the commutator ideal is taken first (the quotient is then commutative and
    its radical is computed); otherwise the radical is taken first and the commutator ideal of the
    semisimple quotient follows.
    """
    if generators is not None:
        comm = commutator_ideal(a, generators)
        b = QuotientAlgebra(a, comm)
        if b.dim == 0:
            return b
        rad = jacobson_radical(b)
        total = comm + Subspace(a.dim, [b.lift_vec(v) for v in rad.basis])
        return QuotientAlgebra(a, total)
    rad = jacobson_radical(a)
    s = QuotientAlgebra(a, rad)
    if s.dim == 0:
        return s
    comm = commutator_ideal(s)
    total = rad + Subspace(a.dim, [s.lift_vec(v) for v in comm.basis])
    return QuotientAlgebra(a, total)


class MorphismCheck(BaseModel):
    """Result of checking a linear map against the Hopf superalgebra structure."""

    ok: bool
    failed: Optional[str] = Field(default=None, description="Name of the first failing property")
    witness: List[str] = Field(default_factory=list, description="Basis labels of the failing input")

    def __bool__(self) -> bool:
        return self.ok


def _map_tensor(f: LinearMap, t: TensorVec) -> TensorVec:
    out: TensorVec = {}
    for (a, b), x in t.items():
        for p, u in f.columns[a].items():
            for q, w in f.columns[b].items():
                tensor_iadd(out, (p, q), x * u * w)
    return out


def check_morphism(
    h: HopfSuperAlgebraData,
    k: HopfSuperAlgebraData,
    f: LinearMap,
    require_iso: bool = False,
) -> MorphismCheck:
    """Check that f: H → K preserves parity, product, unit, coproduct, counit and antipode.

    Args:
        h: Source
        k: Target
        f: Linear map with ``f.columns[i]`` the image of e_i
        require_iso: Also require f to be bijective

    Returns:
        MorphismCheck naming the first failing property and its witness
    """
    if f.source_dim != h.dim or f.target_dim != k.dim:
        return MorphismCheck(ok=False, failed="shape", witness=[])
    for i, col in enumerate(f.columns):
        if any(k.parity[j] != h.parity[i] for j in col):
            return MorphismCheck(ok=False, failed="parity", witness=[h.labels[i]])
    if f.apply(h.unit) != k.unit:
        return MorphismCheck(ok=False, failed="unit", witness=["1"])
    for i in range(h.dim):
        if k.counit_of(f.columns[i]) != h.counit[i]:
            return MorphismCheck(ok=False, failed="counit", witness=[h.labels[i]])
    for i in range(h.dim):
        if _map_tensor(f, h.comult.get(i, {})) != k.coproduct(f.columns[i]):
            return MorphismCheck(ok=False, failed="comultiplication", witness=[h.labels[i]])
    for i in range(h.dim):
        for j in range(h.dim):
            if f.apply(h.mul_basis(i, j)) != k.multiply(f.columns[i], f.columns[j]):
                return MorphismCheck(ok=False, failed="multiplication", witness=[h.labels[i], h.labels[j]])
    for i in range(h.dim):
        if f.apply(h.antipode[i]) != k.apply_antipode(f.columns[i]):
            return MorphismCheck(ok=False, failed="antipode", witness=[h.labels[i]])
    if require_iso and not f.is_bijective():
        return MorphismCheck(ok=False, failed="bijectivity", witness=[])
    return MorphismCheck(ok=True)
