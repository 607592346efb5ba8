"""Skew-primitive subspaces."""

from typing import Dict, List, Mapping, Tuple

from ..core import HopfSuperAlgebraData, Subspace, nullspace
from ..core.algebra import tensor_iadd
from ..core.linalg import Vec
from ..scalars import CycRational


def skew_primitives(h: HopfSuperAlgebraData, gamma: Mapping[int, CycRational], eps: int) -> Subspace:
    """{z ∈ H_eps : Δ(z) = γ⊗z + z⊗1} as a subspace of H.

    Args:
        h: Hopf superalgebra
        gamma: A group-like element
        eps: Parity 0 or 1
    """
    columns = [k for k in range(h.dim) if h.parity[k] == eps]
    one = h.one()
    # coordinate (i, j) of Δ(e_k) − γ⊗e_k − e_k⊗1, collected per tensor position
    per_position: Dict[Tuple[int, int], Vec] = {}
    for col, k in enumerate(columns):
        t = dict(h.comult.get(k, {}))
        for g, a in gamma.items():
            tensor_iadd(t, (g, k), -a)
        for u, a in one.items():
            tensor_iadd(t, (k, u), -a)
        for pos, c in t.items():
            per_position.setdefault(pos, {})[col] = c
    solutions = nullspace(list(per_position.values()), len(columns))
    return Subspace(h.dim, [{columns[c]: a for c, a in v.items()} for v in solutions])


def reduced_skew_dimension(h: HopfSuperAlgebraData, gamma: Mapping[int, CycRational], eps: int) -> int:
    """dim of the skew primitives modulo 𝕜(γ − 1)."""
    dim = skew_primitives(h, gamma, eps).dim
    if eps == 0 and dict(gamma) != h.one():
        dim -= 1
    return dim


def trivial_skew(h: HopfSuperAlgebraData, gamma: Mapping[int, CycRational]) -> List[Vec]:
    """γ − 1, or nothing when γ = 1."""
    diff = dict(gamma)
    for k, a in h.one().items():
        s = diff.get(k, CycRational.zero()) - a
        if s.is_zero():
            diff.pop(k, None)
        else:
            diff[k] = s
    return [diff] if diff else []
