"""Structure-constant representation of finite-dimensional (super)algebras and Hopf superalgebras."""

from math import lcm
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import StructureError, UnknownNameError
from ..scalars import CycRational
from .linalg import Vec, vec_iadd

if TYPE_CHECKING:
    from ..catalog.presentation import SkewPresentation

Pair = Tuple[int, int]
TensorVec = Dict[Pair, CycRational]
MultTable = Dict[Pair, Vec]
ComultTable = Dict[int, TensorVec]


def tensor_iadd(out: TensorVec, key: Pair, value: CycRational) -> None:
    s = out.get(key)
    s = value if s is None else s + value
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


class AlgebraData:
    """A finite-dimensional associative unital algebra given by structure constants.

    Args:
        dim: Dimension
        labels: Display label of each basis vector
        mult: ``mult[(i, j)]`` is the sparse expansion of e_i·e_j
        unit: Sparse expansion of the unit
        allow_zero: Accept the zero algebra, as for the quotient by the whole space
    """

    def __init__(
        self,
        dim: int,
        labels: Sequence[str],
        mult: Mapping[Pair, Mapping[int, CycRational]],
        unit: Vec,
        allow_zero: bool = False,
    ) -> None:
        if dim < 1 and not (allow_zero and dim == 0):
            raise StructureError(f"dimension must be positive, got {dim}")
        if len(labels) != dim:
            raise StructureError(f"expected {dim} labels, got {len(labels)}")
        if len(set(labels)) != dim:
            raise StructureError("basis labels must be distinct")
        self.dim = dim
        self.labels: Tuple[str, ...] = tuple(labels)
        self.mult: MultTable = {}
        for (i, j), v in mult.items():
            self._check_index(i, "mult")
            self._check_index(j, "mult")
            clean = {k: a for k, a in v.items() if not a.is_zero()}
            for k in clean:
                self._check_index(k, "mult")
            if clean:
                self.mult[(i, j)] = clean
        for k in unit:
            self._check_index(k, "unit")
        self.unit: Vec = {k: a for k, a in unit.items() if not a.is_zero()}
        self._index = {label: i for i, label in enumerate(self.labels)}

    def _check_index(self, i: int, where: str) -> None:
        if not 0 <= i < self.dim:
            raise StructureError(f"{where}: index {i} outside 0..{self.dim - 1}")

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNameError(f"unknown basis label {label!r}") from None

    def basis_vec(self, i: int) -> Vec:
        return {i: CycRational.one()}

    def one(self) -> Vec:
        return dict(self.unit)

    def mul_basis(self, i: int, j: int) -> Vec:
        return self.mult.get((i, j), {})

    def multiply(self, u: Mapping[int, CycRational], v: Mapping[int, CycRational]) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = self.mult.get((i, j))
                if prod:
                    vec_iadd(out, prod, a * b)
        return out

    def power(self, v: Mapping[int, CycRational], n: int) -> Vec:
        result = self.one()
        for _ in range(n):
            result = self.multiply(result, v)
        return result

    def product(self, factors: Iterable[Mapping[int, CycRational]]) -> Vec:
        result = self.one()
        for f in factors:
            result = self.multiply(result, f)
        return result

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mul_basis(i, j) == self.mul_basis(j, i) for i in range(n) for j in range(i + 1, n))

    def format_vec(self, v: Mapping[int, CycRational]) -> str:
        """Human-readable expansion such as ``1*c + -1*x1``."""
        if not v:
            return "0"
        return " + ".join(f"{a}*{self.labels[i]}" if a != 1 else self.labels[i] for i, a in sorted(v.items()))


class HopfSuperAlgebraData(AlgebraData):
    """A finite-dimensional Hopf superalgebra as basis, parity and five structure tensors.

    Purely even instances (all parities zero) are ordinary Hopf algebras.

    Args:
        dim: Dimension
        labels: Display label of each basis vector
        parity: 0 or 1 for each basis vector
        mult: ``mult[(i, j)]`` expands e_i·e_j
        unit: Expansion of 1
        comult: ``comult[k]`` expands Δ(e_k) as ``{(i, j): coefficient}``
        counit: ε(e_k) for each k
        antipode: Expansion of S(e_k) for each k
        name: Optional catalog name
        conductor: Conductor of the scalar field; computed from the data when omitted
        presentation: Generators and relations the structure was synthesized from, if any
    """

    def __init__(
        self,
        dim: int,
        labels: Sequence[str],
        parity: Sequence[int],
        mult: Mapping[Pair, Mapping[int, CycRational]],
        unit: Vec,
        comult: Mapping[int, Mapping[Pair, CycRational]],
        counit: Sequence[CycRational],
        antipode: Sequence[Mapping[int, CycRational]],
        name: str = "",
        conductor: Optional[int] = None,
        presentation: Optional["SkewPresentation"] = None,
    ) -> None:
        super().__init__(dim, labels, mult, unit)
        if len(parity) != dim or any(p not in (0, 1) for p in parity):
            raise StructureError(f"parity must be {dim} values in {{0, 1}}")
        if len(counit) != dim:
            raise StructureError(f"expected {dim} counit values, got {len(counit)}")
        if len(antipode) != dim:
            raise StructureError(f"expected {dim} antipode images, got {len(antipode)}")
        self.parity: Tuple[int, ...] = tuple(parity)
        self.comult: ComultTable = {}
        for k, t in comult.items():
            self._check_index(k, "comult")
            clean = {}
            for (i, j), a in t.items():
                self._check_index(i, "comult")
                self._check_index(j, "comult")
                if not a.is_zero():
                    clean[(i, j)] = a
            if clean:
                self.comult[k] = clean
        self.counit: Tuple[CycRational, ...] = tuple(counit)
        self.antipode: Tuple[Vec, ...] = tuple({k: a for k, a in s.items() if not a.is_zero()} for s in antipode)
        for s in self.antipode:
            for k in s:
                self._check_index(k, "antipode")
        self.name = name
        self.conductor = conductor if conductor is not None else self._infer_conductor()
        self.presentation = presentation

    def _infer_conductor(self) -> int:
        n = 1
        for v in self.mult.values():
            for a in v.values():
                n = lcm(n, a.conductor)
        for t in self.comult.values():
            for a in t.values():
                n = lcm(n, a.conductor)
        for s in self.antipode:
            for a in s.values():
                n = lcm(n, a.conductor)
        for a in list(self.unit.values()) + list(self.counit):
            n = lcm(n, a.conductor)
        return n

    def coproduct(self, v: Mapping[int, CycRational]) -> TensorVec:
        out: TensorVec = {}
        for k, a in v.items():
            for key, c in self.comult.get(k, {}).items():
                tensor_iadd(out, key, c * a)
        return out

    def counit_of(self, v: Mapping[int, CycRational]) -> CycRational:
        total = CycRational.zero()
        for k, a in v.items():
            c = self.counit[k]
            if not c.is_zero():
                total = total + c * a
        return total

    def apply_antipode(self, v: Mapping[int, CycRational]) -> Vec:
        out: Vec = {}
        for k, a in v.items():
            vec_iadd(out, self.antipode[k], a)
        return out

    def multiply_tensors(self, t1: Mapping[Pair, CycRational], t2: Mapping[Pair, CycRational]) -> TensorVec:
        """Product in H⊗H with the supersymmetry sign."""
        return super_tensor_multiply(self.mult, self.parity, t1, t2)

    def homogeneous_parity(self, v: Mapping[int, CycRational]) -> Optional[int]:
        """Parity of v when v is homogeneous and nonzero, otherwise None."""
        ps = {self.parity[k] for k in v}
        return ps.pop() if len(ps) == 1 else None

    def parity_part(self, v: Mapping[int, CycRational], eps: int) -> Vec:
        return {k: a for k, a in v.items() if self.parity[k] == eps}

    def parity_violations(self) -> List[str]:
        """Describe every structure entry that breaks parity homogeneity."""
        out = []
        p = self.parity
        for (i, j), v in self.mult.items():
            for k in v:
                if p[k] != (p[i] + p[j]) % 2:
                    out.append(f"mult[{self.labels[i]}, {self.labels[j]}] has {self.labels[k]}")
        for k, t in self.comult.items():
            for i, j in t:
                if p[k] != (p[i] + p[j]) % 2:
                    out.append(f"comult[{self.labels[k]}] has {self.labels[i]}⊗{self.labels[j]}")
        for k, s in enumerate(self.antipode):
            for i in s:
                if p[i] != p[k]:
                    out.append(f"antipode[{self.labels[k]}] has {self.labels[i]}")
        for k in self.unit:
            if p[k]:
                out.append(f"unit has odd {self.labels[k]}")
        for k, c in enumerate(self.counit):
            if p[k] and not c.is_zero():
                out.append(f"counit nonzero on odd {self.labels[k]}")
        return out

    @property
    def odd_dim(self) -> int:
        return sum(self.parity)

    @property
    def even_dim(self) -> int:
        return self.dim - self.odd_dim

    def is_purely_even(self) -> bool:
        return not any(self.parity)

    def is_cocommutative(self) -> bool:
        """Ordinary (unsigned) cocommutativity Δ = τ∘Δ."""
        return all({(j, i): a for (i, j), a in t.items()} == t for t in self.comult.values())

    def renamed(self, name: str) -> "HopfSuperAlgebraData":
        return HopfSuperAlgebraData(
            self.dim,
            self.labels,
            self.parity,
            self.mult,
            self.unit,
            self.comult,
            self.counit,
            self.antipode,
            name=name,
            conductor=self.conductor,
            presentation=self.presentation,
        )

    def with_conductor(self, conductor: int) -> "HopfSuperAlgebraData":
        """The same structure over ℚ(ζ_conductor).

        Raises:
            StructureError: If conductor is not a multiple of the current one
        """
        if conductor < 1 or conductor % self.conductor:
            raise StructureError(f"{self.name}: conductor {conductor} is not a multiple of {self.conductor}")
        return HopfSuperAlgebraData(
            self.dim,
            self.labels,
            self.parity,
            self.mult,
            self.unit,
            self.comult,
            self.counit,
            self.antipode,
            name=self.name,
            conductor=conductor,
            presentation=self.presentation,
        )

    def __repr__(self) -> str:
        return f"HopfSuperAlgebraData(name={self.name!r}, dim={self.dim}, odd={self.odd_dim})"


def dual_structure(h: HopfSuperAlgebraData, name: str = "") -> HopfSuperAlgebraData:
    """Transpose every structure tensor: mult ↔ comult, unit ↔ counit, S ↦ Sᵀ.

    The dual basis vector f_k has the parity of e_k and label ``f[label]``.
    """
    n = h.dim
    mult: Dict[Pair, Vec] = {}
    for k, t in h.comult.items():
        for (i, j), a in t.items():
            mult.setdefault((i, j), {})[k] = a
    comult: Dict[int, TensorVec] = {}
    for (i, j), v in h.mult.items():
        for k, a in v.items():
            comult.setdefault(k, {})[(i, j)] = a
    unit = {k: c for k, c in enumerate(h.counit) if not c.is_zero()}
    zero = CycRational.zero()
    counit = [h.unit.get(k, zero) for k in range(n)]
    antipode: List[Vec] = [{} for _ in range(n)]
    for k, s in enumerate(h.antipode):
        for i, a in s.items():
            antipode[i][k] = a
    return HopfSuperAlgebraData(
        n,
        [f"f[{label}]" for label in h.labels],
        h.parity,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=name or f"dual({h.name})",
        conductor=h.conductor,
    )


def super_tensor_multiply(
    mult: Mapping[Pair, Mapping[int, CycRational]],
    parity: Sequence[int],
    t1: Mapping[Pair, CycRational],
    t2: Mapping[Pair, CycRational],
) -> TensorVec:
    """(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd."""
    out: TensorVec = {}
    for (a, b), x in t1.items():
        for (c, d), y in t2.items():
            ac = mult.get((a, c))
            bd = mult.get((b, d))
            if not ac or not bd:
                continue
            coef = x * y
            if parity[b] and parity[c]:
                coef = -coef
            for p, u in ac.items():
                for q, w in bd.items():
                    tensor_iadd(out, (p, q), coef * u * w)
    return out
