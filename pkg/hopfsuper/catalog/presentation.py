"""Structure constants from skew-group presentations by normal-form rewriting.

A presentation has a finite abelian group part u_g and skew generators x_1, …, x_θ with

    u_g x_i = χ_i(g) x_i u_g,    x_i^{P_i} = (group-algebra element),
    x_j x_i = q_ij x_i x_j + t_ij  (i < j, t_ij in the group algebra).

Normal words put the group element leftmost and the skew generators in ascending index with
exponents below P_i. Rewriting applies the relations left to right at the leftmost reducible
position; confluence is checked afterwards by associativity against every generator.
"""

from functools import lru_cache
from math import lcm
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..core import HopfSuperAlgebraData, TensorVec, nullspace, solve
from ..core.algebra import super_tensor_multiply, tensor_iadd
from ..core.linalg import Vec, vec_iadd
from ..errors import PresentationError, StructureError, UnknownNameError
from ..scalars import CycRational
from .groups import Exps, GroupData

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

Word = Tuple[int, ...]
Monomial = Tuple[Exps, Word]
Element = Dict[Monomial, CycRational]
TensorTerm = Tuple[CycRational, Monomial, Monomial]


class SkewGenerator(BaseModel):
    """One skew generator x_i."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    coproduct_loc: Exps = Field(..., description="Group element c_i with Δ(x_i) = u_{c_i}⊗x_i + x_i⊗1")
    conj: Tuple[CycRational, ...] = Field(..., description="χ_i on each group generator: u_g x_i = χ_i(g) x_i u_g")
    parity: int = Field(default=0, ge=0, le=1)
    power_exp: int = Field(..., ge=2, description="P_i with x_i^{P_i} in the group algebra")
    power_value: Dict[Exps, CycRational] = Field(default_factory=dict, description="x_i^{P_i} as Σ c_g u_g")


class CrossRelation(BaseModel):
    """x_j x_i = q x_i x_j + t for i < j."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    q: CycRational
    t: Dict[Exps, CycRational] = Field(default_factory=dict)


class SkewPresentation(BaseModel):
    """Generators and relations from which a Hopf superalgebra is synthesized.

    Coproduct overrides replace the default coproduct of a generator (by name) with an explicit
    tensor; antipode overrides give S on generators, extended anti-multiplicatively.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    group: GroupData
    generators: List[SkewGenerator] = Field(default_factory=list)
    cross: Dict[Tuple[int, int], CrossRelation] = Field(default_factory=dict)
    coproduct_overrides: Dict[str, List[TensorTerm]] = Field(default_factory=dict)
    antipode_overrides: Dict[str, Element] = Field(default_factory=dict)
    name: str = ""

    @property
    def theta(self) -> int:
        return len(self.generators)

    def conductor(self) -> int:
        n = lcm(2, self.group.exponent)
        values: List[CycRational] = []
        for gen in self.generators:
            values.extend(gen.conj)
            values.extend(gen.power_value.values())
        for rel in self.cross.values():
            values.append(rel.q)
            values.extend(rel.t.values())
        for terms in self.coproduct_overrides.values():
            values.extend(c for c, _, _ in terms)
        for elem in self.antipode_overrides.values():
            values.extend(elem.values())
        for v in values:
            n = lcm(n, v.conductor)
        return n

    def dimension(self) -> int:
        d = self.group.order
        for gen in self.generators:
            d *= gen.power_exp
        return d

    def generator_names(self) -> List[str]:
        return list(self.group.names) + [g.name for g in self.generators]


def word_label(presentation: SkewPresentation, word: Word) -> str:
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = presentation.generators[word[i]].name
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "".join(parts)


def monomial_label(presentation: SkewPresentation, m: Monomial) -> str:
    g, word = m
    glabel = presentation.group.label(g)
    wlabel = word_label(presentation, word)
    if not wlabel:
        return glabel
    return wlabel if glabel == "1" else glabel + wlabel


class Rewriter:
    """Normal-form rewriting for one presentation."""

    def __init__(self, presentation: SkewPresentation) -> None:
        self.p = presentation
        self.group = presentation.group
        self.conductor = presentation.conductor()
        self.one = CycRational.one(self.conductor)
        gens = presentation.generators
        for (i, j) in presentation.cross:
            if not 0 <= i < j < len(gens):
                raise StructureError(f"cross relation index ({i}, {j}) must satisfy 0 <= i < j < {len(gens)}")
        self._chi_cache: Dict[Tuple[int, Exps], CycRational] = {}
        self.basis: List[Monomial] = self._enumerate_basis()
        self.index: Dict[Monomial, int] = {m: k for k, m in enumerate(self.basis)}
        self.nf_word = lru_cache(maxsize=None)(self._nf_word)

    def _enumerate_basis(self) -> List[Monomial]:
        words: List[Word] = [()]
        for i, gen in enumerate(self.p.generators):
            words = [w + (i,) * a for w in words for a in range(gen.power_exp)]
        words.sort(key=lambda w: (len(w), w))
        return [(g, w) for w in words for g in self.group.elements]

    def chi(self, i: int, g: Exps) -> CycRational:
        """χ_i(g) for the skew generator x_i."""
        key = (i, g)
        value = self._chi_cache.get(key)
        if value is None:
            value = self.one
            for c, a in zip(self.p.generators[i].conj, g):
                if a:
                    value = value * c**a
            self._chi_cache[key] = value
        return value

    def move_left_factor(self, prefix: Word, g: Exps) -> CycRational:
        """Scalar with prefix·u_g = factor · u_g·prefix."""
        factor = self.one
        for letter in prefix:
            factor = factor * self.chi(letter, g).inverse()
        return factor

    def _step(self, word: Word) -> Optional[List[Tuple[CycRational, Exps, Word]]]:
        """Rewrite the leftmost reducible position once; None when the word is normal."""
        gens = self.p.generators
        n = len(word)
        for i in range(n):
            letter = word[i]
            power = gens[letter].power_exp
            if i + power <= n and all(w == letter for w in word[i : i + power]):
                prefix, suffix = word[:i], word[i + power :]
                return [
                    (c * self.move_left_factor(prefix, g), g, prefix + suffix)
                    for g, c in gens[letter].power_value.items()
                    if not c.is_zero()
                ]
            if i + 1 < n and word[i] > word[i + 1]:
                lo, hi = word[i + 1], word[i]
                rel = self.p.cross.get((lo, hi))
                if rel is None:
                    raise StructureError(f"no cross relation for {gens[hi].name}{gens[lo].name}")
                prefix, suffix = word[:i], word[i + 2 :]
                out = [(rel.q, self.group.identity, prefix + (lo, hi) + suffix)]
                out.extend(
                    (c * self.move_left_factor(prefix, g), g, prefix + suffix)
                    for g, c in rel.t.items()
                    if not c.is_zero()
                )
                return out
        return None

    def _nf_word(self, word: Word) -> Element:
        result: Element = {}
        stack: List[Tuple[CycRational, Exps, Word]] = [(self.one, self.group.identity, word)]
        while stack:
            coef, g, w = stack.pop()
            if coef.is_zero():
                continue
            step = self._step(w)
            if step is None:
                _elem_iadd(result, (g, w), coef)
                continue
            for c, h, nw in step:
                stack.append((coef * c, self.group.mul(g, h), nw))
        return result

    def multiply_monomials(self, a: Monomial, b: Monomial) -> Element:
        (g, u), (h, w) = a, b
        factor = self.move_left_factor(u, h)
        gh = self.group.mul(g, h)
        out: Element = {}
        for (k, word), c in self.nf_word(u + w).items():
            _elem_iadd(out, (self.group.mul(gh, k), word), c * factor)
        return out

    def multiply(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for a, c in x.items():
            for b, d in y.items():
                for m, e in self.multiply_monomials(a, b).items():
                    _elem_iadd(out, m, c * d * e)
        return out

    def to_vec(self, elem: Mapping[Monomial, CycRational]) -> Vec:
        out: Vec = {}
        for m, c in elem.items():
            if m not in self.index:
                nf = self.normalize_monomial(m)
                for m2, c2 in nf.items():
                    vec_iadd(out, {self.index[m2]: c * c2})
            else:
                vec_iadd(out, {self.index[m]: c})
        return out

    def normalize_monomial(self, m: Monomial) -> Element:
        g, word = m
        g = self.group.normalize(g)
        return self.multiply_monomials((g, ()), (self.group.identity, word))

    def parity_of(self, m: Monomial) -> int:
        return sum(self.p.generators[i].parity for i in m[1]) % 2

    def generator_monomials(self) -> List[Tuple[str, Monomial]]:
        out = [(name, (self.group.normalize(self.group.generator(r)), ())) for r, name in enumerate(self.group.names)]
        out.extend((gen.name, (self.group.identity, (i,))) for i, gen in enumerate(self.p.generators))
        return out


def _elem_iadd(out: Element, key: Monomial, value: CycRational) -> None:
    s = out.get(key)
    s = value if s is None else s + value
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def check_confluence(rw: Rewriter, mult: Mapping[Tuple[int, int], Vec], labels: Sequence[str]) -> None:
    """Associativity on (basis, basis, generator) triples; by induction this covers all triples.

    Raises:
        PresentationError: With the first triple whose bracketings disagree
    """
    n = len(rw.basis)
    gens = [(name, rw.index[m]) for name, m in rw.generator_monomials() if m in rw.index]

    def mul(u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = mult.get((i, j))
                if prod:
                    vec_iadd(out, prod, a * b)
        return out

    for i in range(n):
        for j in range(n):
            ij = mult.get((i, j), {})
            for name, k in gens:
                left = mul(ij, {k: rw.one})
                right = mul({i: rw.one}, mult.get((j, k), {}))
                if left != right:
                    logger.info(
                        "presentation_overlap_failed", presentation=rw.p.name, left=labels[i], mid=labels[j], gen=name
                    )
                    raise PresentationError(
                        f"rewriting rules of {rw.p.name or 'presentation'} are not confluent",
                        (labels[i], labels[j], name),
                    )


def build_from_presentation(presentation: SkewPresentation, name: str = "") -> HopfSuperAlgebraData:
    """Synthesize the Hopf superalgebra of a presentation.

    Args:
        presentation: Group part, skew generators, relations and optional overrides
        name: Catalog name for the result

    Returns:
        Structure constants on the PBW basis u_g x_1^{a_1}⋯x_θ^{a_θ}

    Raises:
        PresentationError: If the rewriting rules are not confluent or no antipode exists
    """
    name = name or presentation.name
    rw = Rewriter(presentation)
    n = len(rw.basis)
    labels = [monomial_label(presentation, m) for m in rw.basis]
    parity = [rw.parity_of(m) for m in rw.basis]

    mult: Dict[Tuple[int, int], Vec] = {}
    for i, a in enumerate(rw.basis):
        for j, b in enumerate(rw.basis):
            v = rw.to_vec(rw.multiply_monomials(a, b))
            if v:
                mult[(i, j)] = v
    check_confluence(rw, mult, labels)

    unit = {rw.index[(presentation.group.identity, ())]: rw.one}
    comult = _build_comult(rw, mult, parity)
    counit = [rw.one if not m[1] else CycRational.zero(rw.conductor) for m in rw.basis]

    if presentation.antipode_overrides:
        antipode = _antipode_from_overrides(rw, mult, parity)
    else:
        antipode = _triangular_antipode(rw, mult, comult, counit, unit)
        if antipode is None:
            antipode = _solve_antipode(n, mult, comult, counit, unit, name)

    h = HopfSuperAlgebraData(
        n,
        labels,
        parity,
        mult,
        unit,
        comult,
        counit,
        antipode,
        name=name,
        conductor=rw.conductor,
        presentation=presentation,
    )
    logger.debug("presentation_built", algebra=name, dim=n)
    return h


def _generator_coproduct(rw: Rewriter, gen_name: str, mono: Monomial) -> TensorVec:
    overrides = rw.p.coproduct_overrides
    out: TensorVec = {}
    if gen_name in overrides:
        for c, left, right in overrides[gen_name]:
            for i, a in rw.to_vec({left: rw.one}).items():
                for j, b in rw.to_vec({right: rw.one}).items():
                    tensor_iadd(out, (i, j), c * a * b)
        return out
    g, word = mono
    one_idx = rw.index[(rw.group.identity, ())]
    if not word:
        k = rw.index[mono]
        return {(k, k): rw.one}
    gen = rw.p.generators[word[0]]
    loc = rw.index[(rw.group.normalize(gen.coproduct_loc), ())]
    x = rw.index[mono]
    tensor_iadd(out, (loc, x), rw.one)
    tensor_iadd(out, (x, one_idx), rw.one)
    return out


def _build_comult(rw: Rewriter, mult: Mapping[Tuple[int, int], Vec], parity: Sequence[int]) -> Dict[int, TensorVec]:
    gen_delta = {name: _generator_coproduct(rw, name, m) for name, m in rw.generator_monomials()}
    group_names = rw.group.names
    skew_names = [g.name for g in rw.p.generators]
    one_idx = rw.index[(rw.group.identity, ())]
    unit_t: TensorVec = {(one_idx, one_idx): rw.one}

    group_delta: Dict[Exps, TensorVec] = {}
    for g in rw.group.elements:
        t = unit_t
        for r, a in enumerate(g):
            for _ in range(a):
                t = super_tensor_multiply(mult, parity, t, gen_delta[group_names[r]])
        group_delta[g] = t

    comult: Dict[int, TensorVec] = {}
    for k, (g, word) in enumerate(rw.basis):
        t = group_delta[g]
        for letter in word:
            t = super_tensor_multiply(mult, parity, t, gen_delta[skew_names[letter]])
        comult[k] = t
    return comult


def _antipode_from_overrides(rw: Rewriter, mult: Mapping[Tuple[int, int], Vec], parity: Sequence[int]) -> List[Vec]:
    """S(y_1⋯y_m) = (−1)^{Σ_{i<j}|y_i||y_j|} S(y_m)⋯S(y_1) from S on generators."""
    images: Dict[str, Vec] = {}
    for name, mono in rw.generator_monomials():
        if name in rw.p.antipode_overrides:
            images[name] = rw.to_vec(rw.p.antipode_overrides[name])
        elif not mono[1]:
            images[name] = rw.to_vec({(rw.group.inv(mono[0]), ()): rw.one})
        else:
            raise StructureError(f"antipode override missing for {name}")

    def mul(u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = mult.get((i, j))
                if prod:
                    vec_iadd(out, prod, a * b)
        return out

    one_idx = rw.index[(rw.group.identity, ())]
    antipode: List[Vec] = []
    for g, word in rw.basis:
        factors: List[Tuple[str, int]] = []
        for r, a in enumerate(g):
            factors.extend([(rw.group.names[r], 0)] * a)
        factors.extend((rw.p.generators[i].name, rw.p.generators[i].parity) for i in word)
        sign = 1
        odd_seen = 0
        for _, par in factors:
            if par:
                if odd_seen % 2:
                    sign = -sign
                odd_seen += 1
        result: Vec = {one_idx: rw.one}
        for fname, _ in reversed(factors):
            result = mul(result, images[fname])
        antipode.append({k: c * sign for k, c in result.items()})
    return antipode


def _triangular_antipode(
    rw: Rewriter,
    mult: Mapping[Tuple[int, int], Vec],
    comult: Mapping[int, TensorVec],
    counit: Sequence[CycRational],
    unit: Vec,
) -> Optional[List[Vec]]:
    """Solve m(S⊗id)Δ = uε degree by degree.

    Δ(u_g w) contains u_g w ⊗ u_g exactly once and otherwise only first legs of lower degree, so each
    S(e_k) is forced. Returns None when Δ does not have that shape.
    """
    n = len(rw.basis)
    group_index = {rw.index[(g, ())]: g for g in rw.group.elements}
    antipode: List[Optional[Vec]] = [None] * n

    def mul(u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                prod = mult.get((i, j))
                if prod:
                    vec_iadd(out, prod, a * b)
        return out

    for k in range(n):
        t = comult.get(k, {})
        leading = [(b, c) for (a, b), c in t.items() if a == k]
        if len(leading) != 1 or leading[0][0] not in group_index:
            return None
        b0, c0 = leading[0]
        rhs: Vec = {}
        if not counit[k].is_zero():
            vec_iadd(rhs, unit, counit[k])
        for (a, b), c in t.items():
            if a == k:
                continue
            sa = antipode[a]
            if sa is None:
                return None
            vec_iadd(rhs, mul(sa, {b: rw.one}), -c)
        g_inv = rw.index[(rw.group.inv(group_index[b0]), ())]
        antipode[k] = {i: a / c0 for i, a in mul(rhs, {g_inv: rw.one}).items()}
    return [s for s in antipode if s is not None]


def _solve_antipode(
    n: int,
    mult: Mapping[Tuple[int, int], Vec],
    comult: Mapping[int, TensorVec],
    counit: Sequence[CycRational],
    unit: Vec,
    name: str,
) -> List[Vec]:
    """Convolution inverse of the identity as one linear system in the n² entries of S.

    Raises:
        PresentationError: If the system has no solution or more than one
    """
    rows: List[Vec] = []
    rhs: List[CycRational] = []
    zero = CycRational.zero()
    for k in range(n):
        eq: Dict[int, Vec] = {}
        for (a, b), d in comult.get(k, {}).items():
            for l in range(n):
                for m, c in mult.get((l, b), {}).items():
                    vec_iadd(eq.setdefault(m, {}), {a * n + l: d * c})
        for m in range(n):
            rows.append(eq.get(m, {}))
            rhs.append(counit[k] * unit.get(m, zero))
    sol = solve(rows, rhs, n * n)
    if sol is None:
        raise PresentationError(f"{name or 'presentation'}: identity has no convolution inverse")
    if nullspace(rows, n * n):
        raise PresentationError(f"{name or 'presentation'}: antipode is not unique")
    antipode: List[Vec] = [{} for _ in range(n)]
    for idx, c in sol.items():
        antipode[idx // n][idx % n] = c
    return antipode


@lru_cache(maxsize=256)
def rewriter_for(h: HopfSuperAlgebraData) -> Optional[Rewriter]:
    """Rewriter of h.presentation when its normal words are the basis of h."""
    p = h.presentation
    if p is None or p.dimension() != h.dim:
        return None
    return Rewriter(p)


def parse_element(h: HopfSuperAlgebraData, text: str) -> Vec:
    """Parse ``label``, ``coef*label`` and sums joined by `` + `` over basis labels.

    Coefficients use the scalar string format without the conductor suffix or with ``@N``
    in parentheses, e.g. ``(1*z @4)*x``.

    Raises:
        UnknownNameError: For unknown basis labels
    """
    out: Vec = {}
    for term in _split_terms(text):
        coef = CycRational.one()
        label = term
        if term.startswith("("):
            close = term.index(")")
            coef = CycRational.parse(term[1:close])
            label = term[close + 1 :].lstrip("*")
        elif "*" in term:
            head, _, label = term.rpartition("*")
            coef = CycRational.parse(head)
        elif term.startswith("-"):
            coef = CycRational.rational(-1)
            label = term[1:]
        vec_iadd(out, {h.index(label.strip()): coef})
    return out


def _split_terms(text: str) -> List[str]:
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            terms.append(text[start:i].strip())
            start = i + 3
    terms.append(text[start:].strip())
    if any(not t for t in terms):
        raise UnknownNameError(f"empty term in {text!r}")
    return terms
