"""Explicit Hopf pairings: exterior determinants, generator values and bicharacter search."""

from itertools import combinations, permutations, product
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import structlog
from sympy.combinatorics import Permutation

from ..catalog.families import build_exterior
from ..catalog.groups import Exps
from ..catalog.presentation import Rewriter, rewriter_for
from ..core import HopfSuperAlgebraData
from ..core.linalg import Scalar, Vec
from ..errors import StructureError, UnknownNameError
from ..scalars import CycRational, as_scalar, zeta
from .dual import dual
from .pairing import HopfPairing, matrix_from_rows, verify_hopf_pairing

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

GeneratorValues = Mapping[Tuple[str, str], Scalar]


def _det(m: Sequence[Sequence[CycRational]]) -> CycRational:
    n = len(m)
    if n == 0:
        return CycRational.one()
    total = CycRational.zero()
    for perm in permutations(range(n)):
        term = CycRational.rational(Permutation(list(perm)).signature())
        for r, c in enumerate(perm):
            term = term * m[r][c]
            if term.is_zero():
                break
        total = total + term
    return total


def exterior_pairing(n: int, form: Optional[Sequence[Sequence[Scalar]]] = None) -> HopfPairing:
    """⟨v_I, f_J⟩ = δ_{|I|,|J|} det(⟨v_i, f_j⟩)_{i∈I, j∈J} on ⋀𝕜ⁿ × ⋀𝕜ⁿ, verified.

    Args:
        n: Number of odd generators
        form: The n×n matrix ⟨v_i, f_j⟩; the identity by default
    """
    h = build_exterior(n)
    rw = rewriter_for(h)
    assert rw is not None
    base = [[as_scalar(form[i][j] if form is not None else int(i == j)) for j in range(n)] for i in range(n)]
    rows: List[Vec] = [{} for _ in range(h.dim)]
    for size in range(n + 1):
        for left in combinations(range(n), size):
            i = rw.index[(rw.group.identity, left)]
            for right in combinations(range(n), size):
                value = _det([[base[r][c] for c in right] for r in left])
                if not value.is_zero():
                    rows[i][rw.index[(rw.group.identity, right)]] = value
    pairing = HopfPairing(left=h, right=h, matrix=matrix_from_rows(rows))
    verify_hopf_pairing(pairing)
    return pairing


def _require_rewriter(h: HopfSuperAlgebraData) -> Rewriter:
    rw = rewriter_for(h)
    if rw is None:
        raise StructureError(f"{h.name} has no presentation spanning its basis")
    return rw


def _bicharacter(rh: Rewriter, ra: Rewriter, values: GeneratorValues) -> List[List[CycRational]]:
    """β(g_r, h_s) on group generators; pairs that are not given are 1."""
    return [
        [as_scalar(values.get((gname, hname), 1)) for hname in ra.group.names]
        for gname in rh.group.names
    ]


def _group_covector(ra: Rewriter, beta: List[List[CycRational]], g: Exps) -> Vec:
    """Φ(u_g): the character u_h ↦ Π β(g_r, h_s)^{g_r h_s} of A, zero on skew words."""
    out: Vec = {}
    one = CycRational.one()
    for k, (h, word) in enumerate(ra.basis):
        if word:
            continue
        value = one
        for r, a in enumerate(g):
            for s, b in enumerate(h):
                if a and b:
                    value = value * beta[r][s] ** (a * b)
        out[k] = value
    return out


def _check_names(rh: Rewriter, ra: Rewriter, values: GeneratorValues) -> None:
    left_groups, right_groups = set(rh.group.names), set(ra.group.names)
    left_skew = {g.name for g in rh.p.generators}
    right_skew = {g.name for g in ra.p.generators}
    for x, y in values:
        if not ((x in left_groups and y in right_groups) or (x in left_skew and y in right_skew)):
            raise UnknownNameError(f"({x}, {y}) is not a pair of group generators or of skew generators")


def pairing_from_generators(h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, values: GeneratorValues) -> HopfPairing:
    """Extend values on generator pairs of two presented algebras to a bilinear form, and verify it.

    Group generators pair by the bicharacter β given on generator pairs, skew generators by the given
    values, and mixed pairs vanish. A skew generator x of H with Δ(x) = u_c⊗x + x⊗1 pairs with
    u_h x_j as β(c, h)⟨x, x_j⟩ and with longer words as 0. Products of generators pair through the
    multiplication of dual(A).

    Args:
        h: Left presented algebra
        a: Right presented algebra
        values: ⟨generator of H, generator of A⟩ by name; absent group pairs are 1, absent skew pairs 0

    Raises:
        StructureError: If either algebra lacks a presentation spanning its basis
        UnknownNameError: If a key is not a pair of group or of skew generator names
    """
    rh, ra = _require_rewriter(h), _require_rewriter(a)
    _check_names(rh, ra, values)
    beta = _bicharacter(rh, ra, values)
    group_rows = {g: _group_covector(ra, beta, g) for g in rh.group.elements}
    skew_rows: List[Vec] = []
    for gen in rh.p.generators:
        loc = group_rows[rh.group.normalize(gen.coproduct_loc)]
        row: Vec = {}
        for j, other in enumerate(ra.p.generators):
            v = as_scalar(values.get((gen.name, other.name), 0))
            if v.is_zero():
                continue
            for h_elem in ra.group.elements:
                c = loc.get(ra.index[(h_elem, ())])
                if c is not None and not c.is_zero():
                    row[ra.index[(h_elem, (j,))]] = c * v
        skew_rows.append(row)

    d = dual(a)
    rows: List[Vec] = []
    for g, word in rh.basis:
        row = dict(group_rows[g])
        for letter in word:
            row = d.multiply(row, skew_rows[letter])
        rows.append(row)
    pairing = HopfPairing(left=h, right=a, matrix=matrix_from_rows(rows))
    verify_hopf_pairing(pairing)
    return pairing


def search_pairing(
    h: HopfSuperAlgebraData, a: HopfSuperAlgebraData, skew_values: GeneratorValues
) -> Optional[HopfPairing]:
    """First verified non-degenerate pairing over all bicharacters of the group parts.

    β(g_r, h_s) runs over the roots of unity of order gcd(n_r, m_s); skew values are fixed.
    """
    rh, ra = _require_rewriter(h), _require_rewriter(a)
    slots = [
        (gname, hname, gcd(n, m))
        for gname, n in zip(rh.group.names, rh.group.factors)
        for hname, m in zip(ra.group.names, ra.group.factors)
    ]
    tried = 0
    for choice in product(*(range(order) for _, _, order in slots)):
        values: Dict[Tuple[str, str], Scalar] = dict(skew_values)
        for (gname, hname, order), k in zip(slots, choice):
            values[(gname, hname)] = zeta(order, k)
        pairing = pairing_from_generators(h, a, values)
        tried += 1
        status = pairing.status
        if status is not None and status.is_hopf and status.nondegenerate:
            logger.debug("pairing_found", left=h.name, right=a.name, tried=tried)
            return pairing
    logger.info("pairing_not_found", left=h.name, right=a.name, tried=tried)
    return None
