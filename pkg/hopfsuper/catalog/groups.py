"""Finite abelian groups given by invariant factors, and their characters."""

from itertools import product
from math import gcd, lcm
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from sympy import factorint

from ..errors import UnknownNameError
from ..scalars import CycRational, zeta

Exps = Tuple[int, ...]
T = TypeVar("T")

DEFAULT_NAMES = ("c", "d", "e", "f")


class GroupData:
    """The group C_{n_1} × … × C_{n_r} with elements as exponent tuples.

    Characters are exponent tuples k as well: χ(e_r) = ζ_{n_r}^{k_r} on the r-th generator.

    Args:
        invariant_factors: Orders n_1, …, n_r of the cyclic factors
        names: Generator names used in labels; defaults to c, d, e, …
    """

    def __init__(self, invariant_factors: Sequence[int], names: Optional[Sequence[str]] = None) -> None:
        if any(n < 1 for n in invariant_factors):
            raise ValueError(f"invariant factors must be positive: {list(invariant_factors)}")
        self.factors: Tuple[int, ...] = tuple(invariant_factors)
        self.names: Tuple[str, ...] = tuple(names) if names is not None else DEFAULT_NAMES[: len(self.factors)]
        if len(self.names) != len(self.factors):
            raise ValueError("one name per cyclic factor is required")
        self.elements: List[Exps] = [tuple(e) for e in product(*(range(n) for n in self.factors))]
        self.exponent = lcm(1, *self.factors)
        self._position = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def identity(self) -> Exps:
        return tuple(0 for _ in self.factors)

    def position(self, g: Exps) -> int:
        return self._position[self.normalize(g)]

    def normalize(self, g: Sequence[int]) -> Exps:
        if len(g) != len(self.factors):
            raise ValueError(f"element {tuple(g)} does not have {len(self.factors)} components")
        return tuple(a % n for a, n in zip(g, self.factors))

    def mul(self, g: Exps, h: Exps) -> Exps:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def inv(self, g: Exps) -> Exps:
        return tuple((-a) % n for a, n in zip(g, self.factors))

    def pow(self, g: Exps, k: int) -> Exps:
        return tuple((a * k) % n for a, n in zip(g, self.factors))

    def element_order(self, g: Exps) -> int:
        return lcm(1, *(n // gcd(n, a) for a, n in zip(g, self.factors)))

    def generator(self, r: int) -> Exps:
        return tuple(1 if i == r else 0 for i in range(self.rank))

    def label(self, g: Exps) -> str:
        parts = []
        for name, a in zip(self.names, g):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "".join(parts) or "1"

    def parse(self, text: str) -> Exps:
        """Inverse of label: ``c^2d`` → (2, 1)."""
        for g in self.elements:
            if self.label(g) == text:
                return g
        raise UnknownNameError(f"{text!r} is not an element of C{'×C'.join(map(str, self.factors))}")

    # characters

    @property
    def characters(self) -> List[Exps]:
        return list(self.elements)

    def char_value(self, chi: Sequence[int], g: Sequence[int]) -> CycRational:
        """χ(g) = Π ζ_{n_r}^{k_r g_r}, expressed in ℚ(ζ_exponent)."""
        e = self.exponent
        power = sum(k * a * (e // n) for k, a, n in zip(chi, g, self.factors))
        return zeta(e, power)

    def char_on_generators(self, chi: Sequence[int]) -> Tuple[CycRational, ...]:
        return tuple(zeta(n, k) for k, n in zip(chi, self.factors))

    def char_mul(self, chi: Exps, psi: Exps) -> Exps:
        return self.mul(chi, psi)

    def char_label(self, chi: Exps) -> str:
        parts = []
        for r, a in enumerate(chi):
            if a:
                suffix = "" if a == 1 else f"^{a}"
                name = "χ" if self.rank == 1 else f"χ{r + 1}"
                parts.append(f"{name}{suffix}")
        return "·".join(parts) or "1"

    def __repr__(self) -> str:
        return f"GroupData({list(self.factors)})"


def invariant_factors_from_orders(orders: Iterable[int]) -> List[int]:
    """Invariant factors (ascending divisibility chain) of an abelian group from its element orders.

    For each prime p the number of elements of order dividing p^k determines the p-primary partition.
    """
    orders = list(orders)
    size = len(orders)
    primary: Dict[int, List[int]] = {}
    for p, top in factorint(size).items():
        counts = [sum(1 for o in orders if (p**k) % o == 0 and _is_p_power(o, p)) for k in range(top + 1)]
        # counts[k] = p^{Σ min(k, a_i)}; the number of cyclic factors of order ≥ p^k is the increment in log_p
        logs = [_log(c, p) for c in counts]
        parts: List[int] = []
        for k in range(1, top + 1):
            at_least_k = logs[k] - logs[k - 1]
            at_least_next = logs[k + 1] - logs[k] if k < top else 0
            parts.extend([p**k] * (at_least_k - at_least_next))
        primary[p] = sorted(parts, reverse=True)
    width = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(width):
        n = 1
        for parts in primary.values():
            if i < len(parts):
                n *= parts[i]
        factors.append(n)
    return sorted(factors)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def standard_generators(
    elements: Sequence[T],
    mul: Callable[[T, T], T],
    identity: T,
    factors: Sequence[int],
    key: Callable[[T], object] = lambda x: x,
) -> Optional[Tuple[T, ...]]:
    """Find generators g_1, …, g_r with ord(g_i) = n_i whose products enumerate every element once."""
    ident_key = key(identity)

    def order(g: T) -> int:
        k, x = 1, g
        while key(x) != ident_key:
            x = mul(x, g)
            k += 1
        return k

    by_order: Dict[int, List[T]] = {}
    for g in elements:
        by_order.setdefault(order(g), []).append(g)
    size = len(elements)
    for combo in product(*(by_order.get(n, []) for n in factors)):
        seen = set()
        for exps in product(*(range(n) for n in factors)):
            x = identity
            for g, a in zip(combo, exps):
                for _ in range(a):
                    x = mul(x, g)
            seen.add(key(x))
        if len(seen) == size:
            return tuple(combo)
    return None


def automorphisms(group: GroupData) -> List[List[Exps]]:
    """All automorphisms, each given by the images of the standard generators."""
    result = []
    for combo in product(*([g for g in group.elements if group.element_order(g) == n] for n in group.factors)):
        images = set()
        for exps in group.elements:
            x = group.identity
            for g, a in zip(combo, exps):
                x = group.mul(x, group.pow(g, a))
            images.add(x)
        if len(images) == group.order:
            result.append(list(combo))
    return result


def apply_automorphism(group: GroupData, images: Sequence[Exps], g: Exps) -> Exps:
    x = group.identity
    for img, a in zip(images, g):
        x = group.mul(x, group.pow(img, a))
    return x
