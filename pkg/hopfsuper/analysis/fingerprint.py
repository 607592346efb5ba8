"""Isomorphism invariants used as non-isomorphism certificates."""

from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, Field

from ..catalog.groups import Exps, GroupData, apply_automorphism, automorphisms
from ..core import HopfSuperAlgebraData, Subspace, center, nullspace, radical_filtration
from ..core.linalg import Vec, vec_add
from ..scalars import CycRational, unity_order, zeta
from .grouplikes import GroupLikes, grouplikes
from .primitives import skew_primitives, trivial_skew

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class Eigenline(BaseModel):
    """A joint eigenspace of the conjugation action on reduced skew primitives."""

    character: Exps = Field(..., description="k with g_r z g_r⁻¹ = ζ_{n_r}^{k_r} z on standard generators")
    dim: int
    nilpotent: Optional[bool] = Field(default=None, description="z^N = 0 for the self-braiding order N (1-dim only)")


class SkewComponent(BaseModel):
    gamma: Exps
    eps: int
    dim: int = Field(..., description="dim of the γ-skew primitives of parity eps modulo 𝕜(γ−1)")
    eigenlines: List[Eigenline]


class Fingerprint(BaseModel):
    name: str = ""
    dim: int
    even_dim: int
    odd_dim: int
    group_factors: List[int]
    radical_filtration: List[int]
    center_dim: int
    components: List[SkewComponent]


def _conjugation_rows(h: HopfSuperAlgebraData, g: Vec, g_inv: Vec, value: CycRational) -> List[Vec]:
    """Equations g z g⁻¹ = value·z, one per coordinate of H."""
    per_k: Dict[int, Vec] = {}
    for i in range(h.dim):
        image = vec_add(h.multiply(h.multiply(g, {i: CycRational.one()}), g_inv), {i: value}, -1)
        for k, c in image.items():
            per_k.setdefault(k, {})[i] = c
    return list(per_k.values())


def _eigenspace(
    h: HopfSuperAlgebraData, gl: GroupLikes, space: Subspace, k: Exps, inverses: Sequence[Vec]
) -> Subspace:
    result = space
    for r, gi in enumerate(gl.generators):
        value = zeta(gl.group.factors[r], k[r])
        rows = _conjugation_rows(h, gl.elements[gi], inverses[r], value)
        result = result.intersection(Subspace(h.dim, nullspace(rows, h.dim)))
        if result.dim == 0:
            break
    return result


def _nilpotent_flag(h: HopfSuperAlgebraData, z: Vec, gamma: Vec, gamma_inv: Vec, eps: int) -> Optional[bool]:
    conj = h.multiply(h.multiply(gamma, z), gamma_inv)
    pivot = min(z)
    q = conj.get(pivot, CycRational.zero()) / z[pivot]
    if eps:
        q = -q
    n = unity_order(q)
    if n is None or n == 1:
        return None
    return not h.power(z, n)


def fingerprint(h: HopfSuperAlgebraData) -> Fingerprint:
    """Group-likes, grading, radical, center and skew-primitive data of H."""
    gl = grouplikes(h)
    inverses = [h.apply_antipode(gl.elements[gi]) for gi in gl.generators]
    characters = list(product(*(range(n) for n in gl.group.factors)))
    components: List[SkewComponent] = []
    for gi, gamma in enumerate(gl.elements):
        gamma_inv = h.apply_antipode(gamma)
        for eps in (0, 1):
            space = skew_primitives(h, gamma, eps)
            shift = trivial_skew(h, gamma) if eps == 0 else []
            if space.dim == len(shift):
                continue
            lines = []
            for k in characters:
                e = _eigenspace(h, gl, space, k, inverses)
                trivial = not any(k) and bool(shift)
                dim = e.dim - (1 if trivial else 0)
                if dim <= 0:
                    continue
                flag = None
                if dim == 1 and not trivial:
                    flag = _nilpotent_flag(h, e.basis[0], gamma, gamma_inv, eps)
                lines.append(Eigenline(character=k, dim=dim, nilpotent=flag))
            components.append(
                SkewComponent(gamma=gl.exponents[gi], eps=eps, dim=space.dim - len(shift), eigenlines=lines)
            )
    return Fingerprint(
        name=h.name,
        dim=h.dim,
        even_dim=h.even_dim,
        odd_dim=h.odd_dim,
        group_factors=list(gl.group.factors),
        radical_filtration=radical_filtration(h),
        center_dim=center(h).dim,
        components=components,
    )


CanonicalEntry = Tuple[Exps, int, int, Tuple[Tuple[Exps, int, int], ...]]


def _flag_code(flag: Optional[bool]) -> int:
    return -1 if flag is None else int(flag)


def _canonical(components: Sequence[SkewComponent]) -> List[CanonicalEntry]:
    return sorted(
        (
            c.gamma,
            c.eps,
            c.dim,
            tuple(sorted((e.character, e.dim, _flag_code(e.nilpotent)) for e in c.eigenlines)),
        )
        for c in components
    )


def _inverse_images(group: GroupData, images: Sequence[Exps]) -> List[Exps]:
    mapping = {apply_automorphism(group, images, g): g for g in group.elements}
    return [mapping[group.generator(r)] for r in range(group.rank)]


def _transport(group: GroupData, images: Sequence[Exps], components: Sequence[SkewComponent]) -> List[SkewComponent]:
    """Relabel components along the automorphism with the given generator images."""
    e = group.exponent
    preimages = _inverse_images(group, images)

    def move_character(k: Exps) -> Exps:
        out = []
        for r, n in enumerate(group.factors):
            a = preimages[r]
            total = sum(ks * a_s * (e // ns) for ks, a_s, ns in zip(k, a, group.factors)) % e
            out.append(total // (e // n))
        return tuple(out)

    return [
        SkewComponent(
            gamma=apply_automorphism(group, images, c.gamma),
            eps=c.eps,
            dim=c.dim,
            eigenlines=[
                Eigenline(character=move_character(line.character), dim=line.dim, nilpotent=line.nilpotent)
                for line in c.eigenlines
            ],
        )
        for c in components
    ]


def fingerprints_equal(f1: Fingerprint, f2: Fingerprint) -> bool:
    """Equality up to an automorphism of the group-like group; inequality certifies non-isomorphism."""
    scalars = ("dim", "even_dim", "odd_dim", "group_factors", "radical_filtration", "center_dim")
    if any(getattr(f1, name) != getattr(f2, name) for name in scalars):
        return False
    target = _canonical(f2.components)
    group = GroupData(f1.group_factors)
    for images in automorphisms(group):
        if _canonical(_transport(group, images, f1.components)) == target:
            return True
    return False
