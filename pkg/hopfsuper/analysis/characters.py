"""Characters (even algebra maps H → 𝕜) with a completeness certificate."""

from functools import lru_cache
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..catalog.presentation import Rewriter, SkewPresentation, rewriter_for
from ..core import AlgebraData, HopfSuperAlgebraData, QuotientAlgebra, Subspace, nullspace
from ..core.linalg import Vec
from ..core.structure import commutative_semisimple_quotient, ideal_generated
from ..errors import CertificateError
from ..scalars import CycRational, roots_of_unity, zeta

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class Character(BaseModel):
    """An even algebra map H → 𝕜, stored by its values on the basis of H."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    parent: HopfSuperAlgebraData = Field(..., exclude=True, repr=False)
    values: Tuple[CycRational, ...] = Field(..., description="α(e_k) for every basis vector")
    generator_values: Dict[str, CycRational] = Field(
        default_factory=dict, description="Values on presentation generators, when H is presented"
    )

    def __call__(self, v: Mapping[int, CycRational]) -> CycRational:
        total = CycRational.zero()
        for k, a in v.items():
            value = self.values[k]
            if not value.is_zero():
                total = total + value * a
        return total

    def is_counit(self) -> bool:
        return self.values == self.parent.counit

    def label(self) -> str:
        if self.generator_values:
            return "(" + ", ".join(f"{name}:{v}" for name, v in self.generator_values.items()) + ")"
        return "(" + ", ".join(str(v) for v in self.values) + ")"

    def key(self) -> Tuple[str, ...]:
        return tuple(v.format() for v in self.values)


class CharacterSet(BaseModel):
    """All characters of an algebra together with the count that certifies completeness."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    characters: List[Character]
    expected: int = Field(..., description="dim of the commutative semisimple quotient of H/⟨H_1⟩")
    route: str = Field(..., description='"presentation" or "eigen"')

    @property
    def counit(self) -> Character:
        return self.characters[0]

    def find(self, generator_values: Mapping[str, CycRational]) -> Optional[Character]:
        """The character with the given values on (a subset of) the presentation generators."""
        for chi in self.characters:
            if all(chi.generator_values.get(name) == v for name, v in generator_values.items()):
                return chi
        return None

    def index_of(self, chi: Character) -> int:
        key = chi.key()
        for i, other in enumerate(self.characters):
            if other.key() == key:
                return i
        raise ValueError(f"character {chi.label()} not in the set")


def character_product(alpha: Character, beta: Character) -> Character:
    """Convolution (α*β)(a) = α(a₁)β(a₂)."""
    h = alpha.parent
    zero = CycRational.zero()
    values = []
    for k in range(h.dim):
        total = zero
        for (i, j), c in h.comult.get(k, {}).items():
            a, b = alpha.values[i], beta.values[j]
            if not a.is_zero() and not b.is_zero():
                total = total + c * a * b
        values.append(total)
    return _make(h, values)


def is_multiplicative(a: AlgebraData, values: Sequence[CycRational]) -> bool:
    """α(e_i e_j) = α(e_i)α(e_j) on every basis pair and α(1) = 1."""

    def apply(v: Mapping[int, CycRational]) -> CycRational:
        total = CycRational.zero()
        for k, c in v.items():
            if not values[k].is_zero():
                total = total + values[k] * c
        return total

    if apply(a.unit) != 1:
        return False
    for i in range(a.dim):
        if values[i].is_zero():
            if any(not apply(a.mul_basis(i, j)).is_zero() for j in range(a.dim)):
                return False
            continue
        for j in range(a.dim):
            if apply(a.mul_basis(i, j)) != values[i] * values[j]:
                return False
    return True


@lru_cache(maxsize=256)
def _reduced_quotient(h: HopfSuperAlgebraData) -> Tuple[QuotientAlgebra, QuotientAlgebra]:
    odd = [{k: CycRational.one()} for k in range(h.dim) if h.parity[k]]
    even_part = QuotientAlgebra(h, ideal_generated(h, odd) if odd else Subspace(h.dim))
    return even_part, commutative_semisimple_quotient(even_part)


def certificate_count(h: HopfSuperAlgebraData) -> int:
    """dim of the commutative semisimple quotient of H/⟨H_1⟩; every character factors through it."""
    return _reduced_quotient(h)[1].dim


def characters(h: HopfSuperAlgebraData, presentation: Optional[SkewPresentation] = None) -> CharacterSet:
    """Every character of H, certified complete.

    Presented algebras are searched over generator assignments: roots of unity of the factor order on
    group generators, zero on odd skew generators and on those with nontrivial conjugation, and
    μ_{2N} ∪ {0} otherwise. Other algebras are split into joint eigenspaces on the commutative
    semisimple quotient.

    Args:
        h: Hopf superalgebra
        presentation: Presentation whose rewriting basis is the basis of h; defaults to h.presentation

    Returns:
        The characters, the counit first

    Raises:
        CertificateError: If the number found differs from the quotient dimension
    """
    if presentation is not None and presentation is not h.presentation:
        return _certified(h, _presented_characters(h, Rewriter(presentation)), "presentation")
    return _characters(h)


@lru_cache(maxsize=256)
def _characters(h: HopfSuperAlgebraData) -> CharacterSet:
    rw = rewriter_for(h)
    if rw is not None:
        return _certified(h, _presented_characters(h, rw), "presentation")
    return _certified(h, _eigen_characters(h), "eigen")


def _certified(h: HopfSuperAlgebraData, found: List[Character], route: str) -> CharacterSet:
    expected = certificate_count(h)
    if len(found) != expected:
        logger.warning("character_certificate_failed", algebra=h.name, found=len(found), expected=expected)
        raise CertificateError(
            f"{h.name or 'algebra'}: found {len(found)} characters but the commutative semisimple quotient "
            f"has dimension {expected}; field too small or candidate set insufficient"
        )
    found.sort(key=lambda chi: (not chi.is_counit(), chi.key()))
    logger.debug("characters_found", algebra=h.name, count=len(found), route=route)
    return CharacterSet(characters=found, expected=expected, route=route)


def _make(h: HopfSuperAlgebraData, values: Sequence[CycRational]) -> Character:
    gen_values: Dict[str, CycRational] = {}
    rw = rewriter_for(h)
    if rw is not None:
        for name, mono in rw.generator_monomials():
            gen_values[name] = values[rw.index[mono]]
    return Character(parent=h, values=tuple(values), generator_values=gen_values)


def _skew_candidates(p: SkewPresentation, i: int, n2: int) -> List[CycRational]:
    gen = p.generators[i]
    zero = CycRational.zero()
    if gen.parity or any(c != 1 for c in gen.conj) or not gen.power_value:
        return [zero]
    return [zero, *roots_of_unity(n2)]


def _presented_characters(h: HopfSuperAlgebraData, rw: Rewriter) -> List[Character]:
    p = rw.p
    group_choices = [[zeta(n, k) for k in range(n)] for n in p.group.factors]
    skew_choices = [_skew_candidates(p, i, 2 * h.conductor) for i in range(p.theta)]
    one = CycRational.one()
    found: List[Character] = []
    for choice in product(*group_choices, *skew_choices):
        gvals, svals = choice[: p.group.rank], choice[p.group.rank :]
        values = []
        for g, word in rw.basis:
            v = one
            for r, e in enumerate(g):
                if e:
                    v = v * gvals[r] ** e
            for letter in word:
                v = v * svals[letter]
            values.append(v)
        if is_multiplicative(h, values):
            found.append(_make(h, values))
    return found


def _left_action_rows(s: AlgebraData, b: int, value: CycRational) -> List[Vec]:
    """Equations α(b·s_j) = value·α(s_j) on a covector α of S, one per basis vector s_j."""
    rows: List[Vec] = []
    for j in range(s.dim):
        row: Vec = dict(s.mul_basis(b, j))
        row[j] = row.get(j, CycRational.zero()) - value
        rows.append({k: c for k, c in row.items() if not c.is_zero()})
    return rows


def _split(s: AlgebraData, space: Subspace, b: int, candidates: Sequence[CycRational]) -> List[Subspace]:
    pieces = []
    for value in candidates:
        eigen = Subspace(s.dim, nullspace(_left_action_rows(s, b, value), s.dim)).intersection(space)
        if eigen.dim:
            pieces.append(eigen)
    if sum(w.dim for w in pieces) != space.dim:
        return [space]
    return pieces


def _eigen_characters(h: HopfSuperAlgebraData) -> List[Character]:
    even_part, s = _reduced_quotient(h)
    if s.dim == 0:
        return []
    candidates = [CycRational.zero(), *roots_of_unity(2 * h.conductor)]
    spaces = [Subspace.full(s.dim)]
    for b in range(s.dim):
        spaces = [piece for w in spaces for piece in (_split(s, w, b, candidates) if w.dim > 1 else [w])]
    zero = CycRational.zero()
    found: List[Character] = []
    for w in spaces:
        if w.dim != 1:
            logger.debug("eigenspace_unsplit", algebra=h.name, dim=w.dim)
            continue
        covector = w.basis[0]
        at_one = sum((covector.get(k, zero) * c for k, c in s.unit.items()), zero)
        if at_one.is_zero():
            continue
        scale = at_one.inverse()
        values = []
        for k in range(h.dim):
            image = s.project(even_part.project({k: CycRational.one()}))
            total = zero
            for q, c in image.items():
                if q in covector:
                    total = total + covector[q] * c
            values.append(total * scale)
        if is_multiplicative(h, values):
            found.append(_make(h, values))
    return found
