"""Named algebra families: group algebras, exterior superalgebras, Taft algebras, the 𝒜(ω, j, μ) series,
the 8-dimensional pointed list with its non-pointed companion, the 16-dimensional algebras A^(1)…A^(14)
and the classified 𝒜(Γ, D) entries of dimensions 4, 8 and 2p.
"""

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..core import HopfSuperAlgebraData, TensorVec
from ..core.algebra import tensor_iadd
from ..core.linalg import Vec, vec_iadd
from ..scalars import CycRational, unity_order, zeta
from .datum import DatumEntry, build_A_gamma_D
from .groups import Exps, GroupData
from .presentation import (
    CrossRelation,
    Element,
    SkewGenerator,
    SkewPresentation,
    TensorTerm,
    build_from_presentation,
    monomial_label,
)

ONE = CycRational.one()
MINUS_ONE = CycRational.rational(-1)
I4 = zeta(4)


def gaussian_binomial(n: int, k: int, q: CycRational) -> CycRational:
    """[n, k]_q by [n, k] = [n−1, k−1] + q^k [n−1, k]."""
    row = [CycRational.one(q.conductor)]
    for m in range(1, n + 1):
        nxt = []
        for i in range(m + 1):
            left = row[i - 1] if i >= 1 else CycRational.zero()
            right = row[i] * q**i if i < m else CycRational.zero()
            nxt.append(left + right)
        row = nxt
    return row[k] if 0 <= k <= n else CycRational.zero()


def _cross_all(theta: int, q: CycRational) -> Dict[Tuple[int, int], CrossRelation]:
    return {(i, j): CrossRelation(q=q) for i in range(theta) for j in range(i + 1, theta)}


def _skew(
    name: str,
    loc: Exps,
    conj: Sequence[CycRational],
    power: int = 2,
    value: Optional[Dict[Exps, CycRational]] = None,
    parity: int = 0,
) -> SkewGenerator:
    return SkewGenerator(
        name=name, coproduct_loc=loc, conj=tuple(conj), parity=parity, power_exp=power, power_value=value or {}
    )


# group algebras and exterior superalgebras


def build_group_hopf(group: GroupData, name: str = "") -> HopfSuperAlgebraData:
    """The group algebra 𝕜Γ; the trivial group gives the one-dimensional Hopf algebra."""
    label = name or "k" + "x".join(f"C{n}" for n in group.factors)
    return build_from_presentation(SkewPresentation(group=group, name=label), label)


def build_exterior(n: int, name: str = "") -> HopfSuperAlgebraData:
    """⋀𝕜ⁿ with n odd primitive generators, i.e. 𝒜({1}, (1, 1, 0; 1)ⁿ)."""
    entries = [DatumEntry(g=(), chi=(), mu=0, eps=1)] * n
    return build_A_gamma_D(GroupData([]), entries, name=name or f"ext{n}")


# one skew generator over a cyclic group


def cyclic_presentation(
    order: int, j: int, omega: CycRational, power: int, mu: int, name: str
) -> SkewPresentation:
    """⟨c, x | c^order = 1, x^power = μ(1 − c^power), cx = ωxc⟩ with x c^j-skew."""
    value: Dict[Exps, CycRational] = {}
    if mu:
        value = {(0,): ONE, (power % order,): MINUS_ONE}
    group = GroupData([order], ["c"])
    x = _skew("x", (j % order,), (omega,), power=power, value=value)
    return SkewPresentation(group=group, generators=[x], name=name)


def _build_cyclic_direct(presentation: SkewPresentation, j: int, mu: int, name: str) -> HopfSuperAlgebraData:
    """Closed formulas for a presentation built by cyclic_presentation.

    The basis and labels are those of the rewriting path: c^i x^a has index a·order + i.
    """
    order = presentation.group.order
    gen = presentation.generators[0]
    power = gen.power_exp
    conductor = presentation.conductor()
    one = CycRational.one(conductor)
    omega_inv = gen.conj[0].inverse()

    def idx(i: int, a: int) -> int:
        return a * order + i % order

    n = order * power
    labels = [""] * n
    for a in range(power):
        for i in range(order):
            labels[idx(i, a)] = monomial_label(presentation, ((i,), (0,) * a))

    mult: Dict[Tuple[int, int], Vec] = {}
    for a in range(power):
        for i in range(order):
            for b in range(power):
                for k in range(order):
                    # x^a c^k = ω^{−ak} c^k x^a
                    coef = one * omega_inv ** (a * k)
                    s = a + b
                    v: Vec = {}
                    if s < power:
                        v = {idx(i + k, s): coef}
                    elif mu:
                        r = s - power
                        vec_iadd(v, {idx(i + k, r): coef})
                        vec_iadd(v, {idx(i + k + power, r): -coef})
                    if v:
                        mult[(idx(i, a), idx(k, b))] = v

    q = omega_inv**j
    comult: Dict[int, TensorVec] = {}
    for a in range(power):
        for i in range(order):
            t: TensorVec = {}
            for m in range(a + 1):
                tensor_iadd(t, (idx(i + j * m, a - m), idx(i, m)), one * gaussian_binomial(a, m, q))
            comult[idx(i, a)] = t

    def mul(u: Vec, w: Vec) -> Vec:
        out: Vec = {}
        for p, x in u.items():
            for r, y in w.items():
                prod = mult.get((p, r))
                if prod:
                    vec_iadd(out, prod, x * y)
        return out

    # S(c^i x^a) = S(x)^a c^{−i} with S(x) = −c^{−j}x
    s_x: Vec = {idx(-j, 1): -one}
    s_pow: Vec = {idx(0, 0): one}
    antipode: List[Vec] = [{} for _ in range(n)]
    for a in range(power):
        for i in range(order):
            antipode[idx(i, a)] = mul(s_pow, {idx(-i, 0): one})
        s_pow = mul(s_pow, s_x)
    counit = [one if k < order else CycRational.zero(conductor) for k in range(n)]
    return HopfSuperAlgebraData(
        n,
        labels,
        [0] * n,
        mult,
        {idx(0, 0): one},
        comult,
        counit,
        antipode,
        name=name,
        conductor=conductor,
        presentation=presentation,
    )


def _root_exponent(n: int, omega: CycRational) -> int:
    for s in range(n):
        if zeta(n, s) == omega:
            return s
    raise ValueError(f"{omega} is not an {n}-th root of unity")


def taft_presentation(n: int, omega: CycRational, name: str = "") -> SkewPresentation:
    if n < 2 or unity_order(omega) != n:
        raise ValueError(f"Taft algebra needs a primitive {n}-th root of unity, got {omega}")
    return cyclic_presentation(n, 1, omega, n, 0, name or f"T_{n * n}({omega})")


def build_taft(n: int, omega: CycRational, name: str = "") -> HopfSuperAlgebraData:
    """T_{n²}(ω): c^n = 1, x^n = 0, cx = ωxc with x c-skew, from closed formulas."""
    presentation = taft_presentation(n, omega, name)
    return _build_cyclic_direct(presentation, 1, 0, presentation.name)


def build_taft_presented(n: int, omega: CycRational, name: str = "") -> HopfSuperAlgebraData:
    presentation = taft_presentation(n, omega, name)
    return build_from_presentation(presentation, presentation.name)


def build_taft_superform(n: int, omega: CycRational, name: str = "") -> HopfSuperAlgebraData:
    """The super-form 𝒜(C_{n/2}, (g^{(n+2)/4}, χ, 0; 1)) with χ(g) = ω² of T_{n²}(ω), for n/2 odd."""
    if n % 2 or (n // 2) % 2 == 0:
        raise ValueError(f"Taft super-forms exist only for n ≡ 2 mod 4, got {n}")
    if unity_order(omega) != n:
        raise ValueError(f"need a primitive {n}-th root of unity, got {omega}")
    half = n // 2
    s = _root_exponent(n, omega)
    group = GroupData([half], ["g"])
    g = group.normalize(((n + 2) // 4,))
    chi = group.normalize((s,))
    return build_A_gamma_D(group, [DatumEntry(g=g, chi=chi, mu=0, eps=1)], name=name or f"TaftSuper({n})")


def an_presentation(
    omega: CycRational, j: int, mu: int, ell: int, q: int, name: str = ""
) -> SkewPresentation:
    """Presentation of 𝒜(ω, j, μ) of dimension ℓq².

    Raises:
        ValueError: If ω^j is not of order q, μ ∉ {0, 1}, μ = 1 with j ≠ 1, or ℓ = q
    """
    if ell == q:
        raise ValueError("ℓ and q must be distinct primes")
    if mu not in (0, 1) or (mu and j != 1):
        raise ValueError(f"μ must be 0 unless j = 1, got μ={mu}, j={j}")
    if unity_order(omega**j) != q:
        raise ValueError(f"ω^j must have order {q}")
    if omega ** (ell * q) != 1:
        raise ValueError(f"ω must satisfy ω^{ell * q} = 1")
    return cyclic_presentation(ell * q, j, omega, q, mu, name or f"AN({omega},{j},{mu})")


def build_AN(omega: CycRational, j: int, mu: int, ell: int, q: int, name: str = "") -> HopfSuperAlgebraData:
    """𝒜(ω, j, μ): c^{ℓq} = 1, x^q = μ(1 − c^q), cx = ωxc, Δ(x) = c^j⊗x + x⊗1."""
    presentation = an_presentation(omega, j, mu, ell, q, name)
    return _build_cyclic_direct(presentation, j, mu, presentation.name)


def build_AN_presented(
    omega: CycRational, j: int, mu: int, ell: int, q: int, name: str = ""
) -> HopfSuperAlgebraData:
    presentation = an_presentation(omega, j, mu, ell, q, name)
    return build_from_presentation(presentation, presentation.name)


AN_2P_NAMES = ("AN(-1,p,0)", "AN(omega,p,0)", "AN(-1,1,0)", "AN(-1,1,1)")


def an_2p(p: int, key: str) -> HopfSuperAlgebraData:
    """One of the four 4p-dimensional candidates (ℓ = p, q = 2) with ω = ζ_{2p}."""
    params = {
        "AN(-1,p,0)": (MINUS_ONE, p, 0),
        "AN(omega,p,0)": (zeta(2 * p), p, 0),
        "AN(-1,1,0)": (MINUS_ONE, 1, 0),
        "AN(-1,1,1)": (MINUS_ONE, 1, 1),
    }
    omega, j, mu = params[key]
    return build_AN(omega, j, mu, p, 2, key)


SQUARE_NAMES = ("AN(tau,1,0)", "AN(tau,1,1)", "AN(omega,2,0)", "AN(tau,2,0)")


def an_square(p: int, key: str) -> HopfSuperAlgebraData:
    """One of the 2p²-dimensional candidates (ℓ = 2, q = p) with τ = ζ_p and ω = ζ_{2p}."""
    tau = zeta(p)
    params = {
        "AN(tau,1,0)": (tau, 1, 0),
        "AN(tau,1,1)": (tau, 1, 1),
        "AN(omega,2,0)": (zeta(2 * p), 2, 0),
        "AN(tau,2,0)": (tau, 2, 0),
    }
    omega, j, mu = params[key]
    return build_AN(omega, j, mu, 2, p, key)


# eight-dimensional pointed list and the non-pointed algebra


def stefan_presentation(key: str) -> SkewPresentation:
    """Presentations of A_C2, A_C2xC2, A'_C4 and A''_C4 (":printed" keeps x c-skew in A''_C4)."""
    if key == "A_C2":
        group = GroupData([2], ["c"])
        gens = [_skew("x1", (1,), (MINUS_ONE,)), _skew("x2", (1,), (MINUS_ONE,))]
        return SkewPresentation(group=group, generators=gens, cross=_cross_all(2, MINUS_ONE), name=key)
    if key == "A_C2xC2":
        group = GroupData([2, 2], ["c", "d"])
        return SkewPresentation(group=group, generators=[_skew("x", (1, 0), (MINUS_ONE, MINUS_ONE))], name=key)
    if key == "A'_C4":
        group = GroupData([4], ["c"])
        return SkewPresentation(group=group, generators=[_skew("x", (1,), (MINUS_ONE,))], name=key)
    if key in ("A''_C4", "A''_C4:printed"):
        group = GroupData([4], ["c"])
        loc = (1,) if key.endswith(":printed") else (2,)
        return SkewPresentation(group=group, generators=[_skew("x", loc, (I4,))], name=key)
    raise KeyError(key)


def exotic_presentation(printed: bool = False) -> SkewPresentation:
    """The non-pointed 8-dimensional algebra: x1^4 = 1, x2x1 = ζ_4 x1x2, x2² = 0.

    Δ(x1) = x1⊗x1 − 2x1x2⊗x1³x2 and Δ(x2) = x2⊗x1² + 1⊗x2. The printed variant carries
    −1⊗x2 and the printed antipode S(x1) = x1³, S(x2) = −x2x1² = x1²x2.
    """
    group = GroupData([4], ["x1"])
    one_m = ((0,), ())
    x1 = ((1,), ())
    x1sq = ((2,), ())
    x2 = ((0,), (0,))
    x1x2 = ((1,), (0,))
    x1cube_x2 = ((3,), (0,))
    x1sq_x2 = ((2,), (0,))
    coproducts: Dict[str, List[TensorTerm]] = {
        "x1": [(ONE, x1, x1), (CycRational.rational(-2), x1x2, x1cube_x2)],
        "x2": [(ONE, x2, x1sq), (MINUS_ONE if printed else ONE, one_m, x2)],
    }
    antipodes: Dict[str, Element] = {}
    if printed:
        antipodes = {"x1": {((3,), ()): ONE}, "x2": {x1sq_x2: ONE}}
    # x1 x2 = ζ_4^{-1} x2 x1
    x2_gen = _skew("x2", (0,), (I4.inverse(),))
    name = "exotic:printed" if printed else "exotic"
    return SkewPresentation(
        group=group,
        generators=[x2_gen],
        coproduct_overrides=coproducts,
        antipode_overrides=antipodes,
        name=name,
    )


# sixteen-dimensional algebras


def _c2xc2() -> GroupData:
    return GroupData([2, 2], ["c", "d"])


def _c4xc2() -> GroupData:
    return GroupData([4, 2], ["c", "d"])


def sixteen_presentation(key: str) -> SkewPresentation:
    """Presentations of A^(1)…A^(14), and "A^(6):linked" with linking term cd − 1."""
    m = MINUS_ONE
    if key == "A^(1)":
        gens = [_skew(f"x{i}", (1,), (m,)) for i in (1, 2, 3)]
        return SkewPresentation(group=GroupData([2], ["c"]), generators=gens, cross=_cross_all(3, m), name=key)
    if key == "A^(2)":
        gens = [_skew("x1", (1, 0), (m, ONE)), _skew("x2", (1, 0), (m, ONE))]
        return SkewPresentation(group=_c2xc2(), generators=gens, cross=_cross_all(2, m), name=key)
    if key == "A^(3)":
        gens = [_skew("x1", (1, 0), (m, ONE)), _skew("x2", (1, 0), (m, m))]
        return SkewPresentation(group=_c2xc2(), generators=gens, cross=_cross_all(2, m), name=key)
    if key == "A^(4)":
        gens = [_skew("x1", (1, 0), (m, ONE)), _skew("x2", (0, 1), (ONE, m))]
        return SkewPresentation(group=_c2xc2(), generators=gens, cross=_cross_all(2, ONE), name=key)
    if key in ("A^(5)", "A^(6)", "A^(6):linked"):
        gens = [_skew("x1", (1, 0), (m, m)), _skew("x2", (0, 1), (m, m))]
        t: Dict[Exps, CycRational] = {}
        if key == "A^(6)":
            t = {(1, 0): ONE, (0, 0): m}
        elif key == "A^(6):linked":
            t = {(1, 1): ONE, (0, 0): m}
        cross = {(0, 1): CrossRelation(q=m, t=t)}
        return SkewPresentation(group=_c2xc2(), generators=gens, cross=cross, name=key)
    if key == "A^(7)":
        group = GroupData([2, 2, 2], ["c", "d", "e"])
        return SkewPresentation(group=group, generators=[_skew("x", (1, 0, 0), (m, ONE, ONE))], name=key)
    c4 = {
        "A^(8)": ((1, 0), (m, ONE), {}),
        "A^(9)": ((1, 1), (ONE, m), {}),
        "A^(10)": ((2, 0), (I4, m), {}),
        "A^(11)": ((0, 1), (ONE, m), {}),
        "A^(12)": ((2, 1), (I4, ONE), {}),
        "A^(13)": ((1, 0), (m, ONE), {(2, 0): ONE, (0, 0): m}),
        "A^(14)": ((1, 1), (ONE, m), {(2, 0): ONE, (0, 0): m}),
    }
    if key in c4:
        loc, conj, value = c4[key]
        return SkewPresentation(group=_c4xc2(), generators=[_skew("x", loc, conj, value=value)], name=key)
    raise KeyError(key)


SIXTEEN_NAMES = tuple(f"A^({i})" for i in range(1, 15))
STEFAN_NAMES = ("A_C2", "A_C2xC2", "A'_C4", "A''_C4")


# classified entries 𝒜(Γ, D)


def _entry(g: Sequence[int], chi: Sequence[int], mu: int = 0, eps: int = 1) -> DatumEntry:
    return DatumEntry(g=tuple(g), chi=tuple(chi), mu=mu, eps=eps)


TableEntry = Tuple[Tuple[int, ...], Tuple[str, ...], Tuple[DatumEntry, ...]]

# label → (invariant factors of Γ, generator names, datum)
TABLE_ENTRIES: Mapping[str, TableEntry] = {
    "H_4^(1)": ((), (), (_entry((), ()), _entry((), ()))),
    "H_4^(2)": ((2,), ("g",), (_entry((0,), (0,)),)),
    "H_4^(3)": ((2,), ("g",), (_entry((1,), (0,)),)),
    "H_4^(4)": ((2,), ("g",), (_entry((0,), (1,)),)),
    "H_8^(1)": ((), (), (_entry((), ()),) * 3),
    "H_8^(2)": ((2,), ("g",), (_entry((0,), (0,)), _entry((0,), (0,)))),
    "H_8^(3)": ((2,), ("g",), (_entry((0,), (0,)), _entry((1,), (0,)))),
    "H_8^(4)": ((2,), ("g",), (_entry((0,), (0,)), _entry((0,), (1,)))),
    "H_8^(5)": ((2,), ("g",), (_entry((1,), (0,)), _entry((1,), (0,)))),
    "H_8^(6)": ((2,), ("g",), (_entry((0,), (1,)), _entry((0,), (1,)))),
    "H_8^(7)": ((2,), ("g",), (_entry((1,), (1,), eps=0), _entry((0,), (0,)))),
    "H_8^(8)": ((2, 2), ("g1", "g2"), (_entry((0, 0), (0, 0)),)),
    "H_8^(9)": ((2, 2), ("g1", "g2"), (_entry((1, 0), (0, 0)),)),
    "H_8^(10)": ((2, 2), ("g1", "g2"), (_entry((0, 0), (1, 0)),)),
    "H_8^(11)": ((2, 2), ("g1", "g2"), (_entry((1, 0), (0, 1)),)),
    "H_8^(11):printed": ((2, 2), ("g1", "g2"), (_entry((1, 0), (1, 0)),)),
    "H_8^(12)": ((4,), ("g",), (_entry((0,), (0,)),)),
    "H_8^(13)": ((4,), ("g",), (_entry((1,), (0,)),)),
    "H_8^(14)": ((4,), ("g",), (_entry((2,), (0,)),)),
    "H_8^(15)": ((4,), ("g",), (_entry((0,), (1,)),)),
    "H_8^(16)": ((4,), ("g",), (_entry((0,), (2,)),)),
    "H_8^(17)": ((4,), ("g",), (_entry((2,), (2,)),)),
    "H_8^(18)": ((4,), ("g",), (_entry((1,), (0,), mu=1),)),
}


def table_2p_entry(label: str, p: int) -> TableEntry:
    """Entries of dimension 2p over Γ = C_p with χ(g) = ζ_p, labelled as in the printed table."""
    half = (p + 1) // 2
    data = {
        "H_2p^(1)": _entry((0,), (0,)),
        "H_2p^(2)": _entry((half,), (0,)),
        "H_2p^(3)": _entry((0,), (1,)),
        "H_2p^(4)": _entry((half,), (0,), mu=1),
    }
    if label not in data:
        raise KeyError(label)
    return ((p,), ("g",), (data[label],))


TABLE_2P_LABELS = ("H_2p^(1)", "H_2p^(2)", "H_2p^(3)", "H_2p^(4)")


def table_group(entry: TableEntry) -> GroupData:
    factors, names, _ = entry
    return GroupData(list(factors), list(names))


def build_table_entry(label: str, p: int = 3) -> HopfSuperAlgebraData:
    entry = table_2p_entry(label, p) if label.startswith("H_2p") else TABLE_ENTRIES[label]
    name = label.replace("2p", str(2 * p)) if label.startswith("H_2p") else label
    return build_A_gamma_D(table_group(entry), entry[2], name=name)
