"""Exact sparse linear algebra over cyclotomic fields.

Vectors are sparse dictionaries ``{index: CycRational}`` with no stored zeros. Row reduction keeps
the reduced echelon form at every step, so subspaces have a canonical basis and equality of
subspaces is equality of their echelon rows.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

from ..errors import StructureError
from ..scalars import CycRational

Vec = Dict[int, CycRational]
Scalar = Union[CycRational, int]


def vec_add(u: Mapping[int, CycRational], v: Mapping[int, CycRational], scale: Optional[Scalar] = None) -> Vec:
    """Return u + scale·v."""
    out = dict(u)
    for k, b in v.items():
        term = b if scale is None else b * scale
        s = out.get(k)
        s = term if s is None else s + term
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_iadd(out: Vec, v: Mapping[int, CycRational], scale: Optional[Scalar] = None) -> None:
    """In-place out += scale·v."""
    for k, b in v.items():
        term = b if scale is None else b * scale
        s = out.get(k)
        s = term if s is None else s + term
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s


def unit_vec(i: int, conductor: int = 1) -> Vec:
    return {i: CycRational.one(conductor)}


def dense(v: Mapping[int, CycRational], n: int, conductor: int = 1) -> List[CycRational]:
    zero = CycRational.zero(conductor)
    return [v.get(i, zero) for i in range(n)]


def sparse(values: Sequence[CycRational]) -> Vec:
    return {i: a for i, a in enumerate(values) if not a.is_zero()}


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self, rows: Iterable[Mapping[int, CycRational]] = ()) -> None:
        self.rows: Dict[int, Vec] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: Mapping[int, CycRational]) -> Vec:
        """Remainder of v after elimination by the current rows."""
        out = dict(v)
        for p in [p for p in out if p in self.rows]:
            c = out.get(p)
            if c is not None:
                vec_iadd(out, self.rows[p], -c)
        return out

    def add(self, v: Mapping[int, CycRational]) -> bool:
        """Insert v; returns False when v already lies in the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        r = {k: a * inv for k, a in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                self.rows[q] = vec_add(row, r, -c)
        self.rows[p] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[Vec]:
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors: Iterable[Mapping[int, CycRational]]) -> int:
    return Echelon(vectors).rank


def nullspace(rows: Iterable[Mapping[int, CycRational]], ncols: int) -> List[Vec]:
    """Basis of {x : row·x = 0 for every row}, one vector per free column."""
    ech = Echelon(rows)
    pivots = set(ech.rows)
    one = CycRational.one()
    basis: List[Vec] = []
    for f in range(ncols):
        if f in pivots:
            continue
        x: Vec = {f: one}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c is not None:
                x[p] = -c
        basis.append(x)
    return basis


def solve(rows: Sequence[Mapping[int, CycRational]], rhs: Sequence[CycRational], ncols: int) -> Optional[Vec]:
    """One solution x of rows·x = rhs with free variables set to zero, or None if inconsistent."""
    augmented = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if not b.is_zero():
            r[ncols] = b
        augmented.append(r)
    ech = Echelon(augmented)
    if ncols in ech.rows:
        return None
    return {p: row[ncols] for p, row in ech.rows.items() if ncols in row}


class Subspace:
    """A subspace of 𝕜^n with canonical echelon basis."""

    def __init__(self, ambient: int, vectors: Iterable[Mapping[int, CycRational]] = ()) -> None:
        self.ambient = ambient
        self._echelon = Echelon(vectors)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, (unit_vec(i) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return self._echelon.rank

    @property
    def basis(self) -> List[Vec]:
        return self._echelon.basis()

    def pivots(self) -> List[int]:
        return self._echelon.pivots()

    def complement_indices(self) -> List[int]:
        """Coordinates not used as pivots; their unit vectors span a complement."""
        pivots = set(self._echelon.rows)
        return [i for i in range(self.ambient) if i not in pivots]

    def reduce(self, v: Mapping[int, CycRational]) -> Vec:
        return self._echelon.reduce(v)

    def contains(self, v: Mapping[int, CycRational]) -> bool:
        return not self._echelon.reduce(v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        n = self.ambient
        rows: List[Vec] = []
        for u in self.basis:
            row = dict(u)
            row.update({n + k: a for k, a in u.items()})
            rows.append(row)
        rows.extend(dict(w) for w in other.basis)
        ech = Echelon(rows)
        common = [{k - n: a for k, a in row.items()} for p, row in ech.rows.items() if p >= n]
        return Subspace(n, common)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


class CoordinateSystem:
    """Coordinates with respect to a fixed list of linearly independent vectors."""

    def __init__(self, ambient: int, vectors: Sequence[Mapping[int, CycRational]]) -> None:
        self.ambient = ambient
        self.size = len(vectors)
        one = CycRational.one()
        rows = []
        for i, v in enumerate(vectors):
            row = dict(v)
            row[ambient + i] = one
            rows.append(row)
        self._echelon = Echelon(rows)
        if any(p >= ambient for p in self._echelon.rows):
            raise StructureError("coordinate vectors are linearly dependent")

    def coordinates(self, v: Mapping[int, CycRational]) -> Optional[Vec]:
        """Coefficients c with v = Σ c_i b_i, or None when v is outside the span."""
        residual = self._echelon.reduce(v)
        if any(k < self.ambient for k in residual):
            return None
        return {k - self.ambient: -a for k, a in residual.items()}


class LinearMap:
    """A linear map 𝕜^source → 𝕜^target stored by the images of the basis vectors."""

    def __init__(self, source_dim: int, target_dim: int, columns: Sequence[Mapping[int, CycRational]]) -> None:
        if len(columns) != source_dim:
            raise StructureError(f"expected {source_dim} columns, got {len(columns)}")
        for j, col in enumerate(columns):
            if any(not 0 <= k < target_dim for k in col):
                raise StructureError(f"column {j} has an index outside 0..{target_dim - 1}")
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.columns: List[Vec] = [{k: a for k, a in col.items() if not a.is_zero()} for col in columns]

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, [unit_vec(i) for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[CycRational]]) -> "LinearMap":
        """Build from a dense matrix given row by row (target × source)."""
        target = len(rows)
        source = len(rows[0]) if rows else 0
        cols: List[Vec] = [{} for _ in range(source)]
        for t, row in enumerate(rows):
            for s, a in enumerate(row):
                if not a.is_zero():
                    cols[s][t] = a
        return cls(source, target, cols)

    def apply(self, v: Mapping[int, CycRational]) -> Vec:
        out: Vec = {}
        for j, a in v.items():
            vec_iadd(out, self.columns[j], a)
        return out

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self ∘ inner."""
        if inner.target_dim != self.source_dim:
            raise StructureError("dimension mismatch in composition")
        return LinearMap(inner.source_dim, self.target_dim, [self.apply(c) for c in inner.columns])

    def entry(self, target: int, source: int) -> CycRational:
        return self.columns[source].get(target, CycRational.zero())

    def rows(self) -> List[Vec]:
        out: List[Vec] = [{} for _ in range(self.target_dim)]
        for j, col in enumerate(self.columns):
            for i, a in col.items():
                out[i][j] = a
        return out

    def rank(self) -> int:
        return rank(self.columns)

    def kernel(self) -> Subspace:
        return Subspace(self.source_dim, nullspace(self.rows(), self.source_dim))

    def image(self) -> Subspace:
        return Subspace(self.target_dim, self.columns)

    def is_bijective(self) -> bool:
        return self.source_dim == self.target_dim and self.rank() == self.source_dim

    def inverse(self) -> "LinearMap":
        """Inverse of a bijective map.

        Raises:
            StructureError: If the map is not bijective
        """
        if not self.is_bijective():
            raise StructureError("map is not invertible")
        coords = CoordinateSystem(self.target_dim, self.columns)
        cols = []
        for i in range(self.target_dim):
            c = coords.coordinates(unit_vec(i))
            assert c is not None
            cols.append(c)
        return LinearMap(self.target_dim, self.source_dim, cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source_dim, self.target_dim, self.columns) == (other.source_dim, other.target_dim, other.columns)

    def __repr__(self) -> str:
        return f"LinearMap({self.source_dim} -> {self.target_dim})"
