"""Tensor products of Hopf superalgebras with the Koszul sign rule."""

from math import lcm
from typing import Dict, List

from ..scalars import CycRational
from .algebra import HopfSuperAlgebraData, MultTable, Pair, TensorVec, tensor_iadd
from .linalg import Vec


def tensor_label(a: str, b: str) -> str:
    if b == "1":
        return a
    if a == "1":
        return b
    return f"{a}⊗{b}"


def tensor_product(h: HopfSuperAlgebraData, k: HopfSuperAlgebraData, name: str = "") -> HopfSuperAlgebraData:
    """H ⊗ K with basis e_i⊗f_j at index i·dim(K) + j.

    Multiplication (e⊗f)(e'⊗f') = (−1)^{|f||e'|} ee'⊗ff', comultiplication
    Δ(e⊗f) = Σ (−1)^{|e₂||f₁|} (e₁⊗f₁)⊗(e₂⊗f₂), antipode S(e⊗f) = S(e)⊗S(f).
    """
    m = k.dim
    dim = h.dim * m

    def idx(i: int, j: int) -> int:
        return i * m + j

    labels = [tensor_label(a, b) for a in h.labels for b in k.labels]
    if len(set(labels)) != dim:
        labels = [f"{a}⊗{b}" for a in h.labels for b in k.labels]
    parity = [(p + q) % 2 for p in h.parity for q in k.parity]

    mult: MultTable = {}
    for (i1, i2), u in h.mult.items():
        for (j1, j2), w in k.mult.items():
            sign = -1 if k.parity[j1] and h.parity[i2] else 1
            out: Vec = {}
            for a, x in u.items():
                for b, y in w.items():
                    out[idx(a, b)] = x * y * sign
            mult[(idx(i1, j1), idx(i2, j2))] = out

    unit = {idx(a, b): x * y for a, x in h.unit.items() for b, y in k.unit.items()}
    counit = [h.counit[i] * k.counit[j] for i in range(h.dim) for j in range(m)]

    comult: Dict[int, TensorVec] = {}
    for i in range(h.dim):
        for j in range(m):
            t: TensorVec = {}
            for (e1, e2), x in h.comult.get(i, {}).items():
                for (f1, f2), y in k.comult.get(j, {}).items():
                    coef = x * y
                    if h.parity[e2] and k.parity[f1]:
                        coef = -coef
                    key: Pair = (idx(e1, f1), idx(e2, f2))
                    tensor_iadd(t, key, coef)
            comult[idx(i, j)] = t

    antipode: List[Vec] = []
    for i in range(h.dim):
        for j in range(m):
            s: Vec = {}
            for a, x in h.antipode[i].items():
                for b, y in k.antipode[j].items():
                    s[idx(a, b)] = x * y
            antipode.append(s)

    return HopfSuperAlgebraData(
        dim,
        labels,
        parity,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=name or f"{h.name}⊗{k.name}",
        conductor=lcm(h.conductor, k.conductor),
    )


def trivial_hopf(conductor: int = 1) -> HopfSuperAlgebraData:
    """The one-dimensional Hopf algebra 𝕜."""
    one = CycRational.one(conductor)
    return HopfSuperAlgebraData(
        1,
        ["1"],
        [0],
        {(0, 0): {0: one}},
        {0: one},
        {0: {(0, 0): one}},
        [one],
        [{0: one}],
        name="k",
        conductor=conductor,
    )
