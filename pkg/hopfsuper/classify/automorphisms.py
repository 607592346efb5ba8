"""Hopf automorphisms given on generators, and their action on super-data."""

from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..analysis import SuperDatum, characters, grouplikes
from ..catalog.presentation import Rewriter, parse_element, rewriter_for
from ..core import HopfSuperAlgebraData, LinearMap, MorphismCheck, check_morphism
from ..core.linalg import Vec
from ..errors import HopfSuperError, StructureError, UnknownNameError
from ..scalars import as_scalar

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class AutomorphismInput(BaseModel):
    """An automorphism as written down: generator images as element strings.

    Parameters appear as ``(name)`` inside the images and are substituted before parsing.
    """

    name: str
    images: Dict[str, str] = Field(default_factory=dict, description="Generator name → element text")
    parameters: List[str] = Field(default_factory=list)
    instances: List[Dict[str, str]] = Field(
        default_factory=list, description="Explicit parameter values; the sample grid is used when empty"
    )
    printed: bool = False
    expected_ok: bool = True
    note: str = ""

    @property
    def is_family(self) -> bool:
        return bool(self.parameters)


class AutomorphismSpec(BaseModel):
    """A verified (or rejected) automorphism.

    For a family every instance is checked; ``map`` is the first instance and ``check`` the first
    failure, or the last success.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    images: Dict[str, str]
    ok: bool
    is_family: bool = False
    printed: bool = False
    expected_ok: bool = True
    instances_checked: int = 0
    check: MorphismCheck
    failing_instance: Dict[str, str] = Field(default_factory=dict)
    map: Optional[LinearMap] = Field(default=None, exclude=True)


def _require_rewriter(h: HopfSuperAlgebraData) -> Rewriter:
    rw = rewriter_for(h)
    if rw is None:
        raise StructureError(f"{h.name} has no presentation spanning its basis")
    return rw


def generator_vectors(h: HopfSuperAlgebraData) -> Dict[str, Vec]:
    """Basis vector of every presentation generator, by name."""
    rw = _require_rewriter(h)
    return {name: {rw.index[m]: rw.one} for name, m in rw.generator_monomials() if m in rw.index}


def extend_on_basis(
    h: HopfSuperAlgebraData, target: HopfSuperAlgebraData, images: Mapping[str, Vec]
) -> LinearMap:
    """The linear map H → target sending u_g x_w to Π φ(g_r)^{a_r} · φ(x_{w_1})⋯φ(x_{w_k}).

    This is the only candidate for an algebra map with the given generator images; whether it is
    one is left to check_morphism.

    Raises:
        UnknownNameError: If an image is given for a name that is not a generator
    """
    rw = _require_rewriter(h)
    group_names = list(rw.group.names)
    skew_names = [g.name for g in rw.p.generators]
    unknown = set(images) - set(group_names) - set(skew_names)
    if unknown:
        raise UnknownNameError(f"{sorted(unknown)} are not generators of {h.name}")
    missing = [n for n in group_names + skew_names if n not in images]
    if missing:
        raise UnknownNameError(f"no image for {missing} in a map out of {h.name}")
    columns: List[Vec] = []
    for g, word in rw.basis:
        factors: List[Vec] = []
        for name, a in zip(group_names, g):
            factors.extend([images[name]] * a)
        factors.extend(images[skew_names[letter]] for letter in word)
        columns.append(target.product(factors) if factors else target.one())
    return LinearMap(h.dim, target.dim, columns)


def _substitute(text: str, values: Mapping[str, str]) -> str:
    for name, value in values.items():
        text = text.replace(f"({name})", f"({as_scalar(int(value)).format() if _is_int(value) else value})")
    return text


def _is_int(text: str) -> bool:
    try:
        int(text)
    except ValueError:
        return False
    return True


def _instances(spec: AutomorphismInput, samples: Sequence[int]) -> List[Dict[str, str]]:
    if not spec.parameters:
        return [{}]
    if spec.instances:
        return spec.instances
    return [dict(zip(spec.parameters, map(str, combo))) for combo in product(samples, repeat=len(spec.parameters))]


def automorphism_map(h: HopfSuperAlgebraData, images: Mapping[str, str]) -> LinearMap:
    """Extend images given as element strings; unnamed generators are fixed."""
    vectors = generator_vectors(h)
    for name, text in images.items():
        if name not in vectors:
            raise UnknownNameError(f"{name!r} is not a generator of {h.name}")
        vectors[name] = parse_element(h, text)
    return extend_on_basis(h, h, vectors)


def verify_automorphism(h: HopfSuperAlgebraData, spec: AutomorphismInput, samples: Sequence[int]) -> AutomorphismSpec:
    """Check one automorphism, at every parameter instance for a family."""
    first: Optional[LinearMap] = None
    check = MorphismCheck(ok=True)
    failing: Dict[str, str] = {}
    instances = _instances(spec, samples)
    for values in instances:
        images = {name: _substitute(text, values) for name, text in spec.images.items()}
        try:
            f = automorphism_map(h, images)
        except HopfSuperError as e:
            check, failing = MorphismCheck(ok=False, failed="images", witness=[str(e)]), values
            break
        check = check_morphism(h, h, f, require_iso=True)
        if first is None:
            first = f
        if not check:
            failing = values
            break
    if not check:
        logger.info(
            "automorphism_rejected",
            algebra=h.name,
            automorphism=spec.name,
            failed=check.failed,
            witness=check.witness,
            instance=failing,
        )
    return AutomorphismSpec(
        name=spec.name,
        images=dict(spec.images),
        ok=check.ok,
        is_family=spec.is_family,
        printed=spec.printed,
        expected_ok=spec.expected_ok,
        instances_checked=len(instances),
        check=check,
        failing_instance=failing,
        map=first if check.ok else None,
    )


def verify_automorphisms(
    h: HopfSuperAlgebraData, specs: Sequence[AutomorphismInput], samples: Sequence[int] = (-1, 2)
) -> List[AutomorphismSpec]:
    """Extend each spec from generators to a matrix and check it as a Hopf automorphism.

    Failures are reported per spec rather than raised.

    Args:
        h: A presented Hopf algebra
        specs: Generator images; families carry parameters
        samples: Values substituted for each parameter of a family without explicit instances

    Returns:
        One AutomorphismSpec per input, in order
    """
    return [verify_automorphism(h, spec, samples) for spec in specs]


class Orbit(BaseModel):
    members: List[int] = Field(..., description="Positions in the super-datum list")
    labels: List[str]

    @property
    def representative(self) -> int:
        return self.members[0]


def _act(
    h: HopfSuperAlgebraData, f: LinearMap, f_inv: LinearMap, d: SuperDatum, data: Sequence[SuperDatum]
) -> Optional[int]:
    """Position of (φ(g), α∘φ⁻¹) in data."""
    gl = grouplikes(h)
    chars = characters(h)
    gi = gl.index_of(f.apply(d.g))
    if gi is None:
        return None
    values = [d.alpha(col) for col in f_inv.columns]
    for ai, chi in enumerate(chars.characters):
        if all(a == b for a, b in zip(chi.values, values)):
            for k, other in enumerate(data):
                if other.g_index == gi and other.alpha_index == ai:
                    return k
            return None
    return None


def orbits(h: HopfSuperAlgebraData, data: Sequence[SuperDatum], autos: Sequence[AutomorphismSpec]) -> List[Orbit]:
    """Orbits of the super-data under the group generated by the verified non-family automorphisms.

    Families act trivially on group-likes and characters and only serve as verification witnesses.
    Orbits are listed by their first member, so the result does not depend on the order of autos.

    Raises:
        StructureError: If an automorphism moves a super-datum outside the list
    """
    parent = list(range(len(data)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for spec in autos:
        if not spec.ok or spec.is_family or spec.map is None:
            continue
        f = spec.map
        f_inv = f.inverse()
        for k, d in enumerate(data):
            image = _act(h, f, f_inv, d, data)
            if image is None:
                raise StructureError(f"{spec.name} moves {d.label()} outside the super-data of {h.name}")
            a, b = find(k), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: Dict[int, List[int]] = {}
    for k in range(len(data)):
        groups.setdefault(find(k), []).append(k)
    result = [Orbit(members=m, labels=[data[i].label() for i in m]) for m in sorted(groups.values())]
    logger.debug("orbits_computed", algebra=h.name, data=len(data), orbits=len(result))
    return result
