"""Exact arithmetic in cyclotomic fields ℚ(ζ_N).

Values are stored as integer numerators over one positive common denominator, in the power basis
1, ζ_N, …, ζ_N^{φ(N)-1} reduced modulo the N-th cyclotomic polynomial. Operands with different
conductors are promoted to the lcm conductor before any arithmetic.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, List, Literal, Optional, Sequence, Tuple, Union

from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly, divisors, mobius, totient

from ..errors import CyclotomicDivisionError, ScalarParseError

Operand = Union["CycRational", int, Fraction]
ArithOp = Literal["add", "sub", "mul", "div"]

_X = Symbol("x")


class CyclotomicField:
    """Reduction data for ℚ(ζ_N)."""

    def __init__(self, conductor: int) -> None:
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.degree = int(totient(conductor))
        # Φ_N is monic; low holds the coefficients of X^0 … X^{φ-1}
        coeffs = [int(c) for c in reversed(Poly(cyclotomic_poly(conductor, _X), _X).all_coeffs())]
        self.low: Tuple[int, ...] = tuple(coeffs[: self.degree])
        self.power_basis: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self.reduce([0] * k + [1])) for k in range(conductor)
        )
        self.trace_weights: Tuple[Fraction, ...] = tuple(
            Fraction(int(mobius(conductor // gcd(conductor, k))), int(totient(conductor // gcd(conductor, k))))
            for k in range(self.degree)
        )

    def reduce(self, values: List[int]) -> List[int]:
        """Reduce an integer coefficient list (ascending powers) modulo Φ_N."""
        n = self.degree
        values = list(values)
        for top in range(len(values) - 1, n - 1, -1):
            c = values[top]
            if c:
                values[top] = 0
                base = top - n
                for i, a in enumerate(self.low):
                    if a:
                        values[base + i] -= c * a
        values = values[:n]
        values.extend([0] * (n - len(values)))
        return values

    def modulus(self) -> Poly:
        return Poly(cyclotomic_poly(self.conductor, _X), _X, domain=QQ)


@lru_cache(maxsize=None)
def field(conductor: int) -> CyclotomicField:
    """Cached reduction table for conductor N."""
    return CyclotomicField(conductor)


@lru_cache(maxsize=None)
def _embedding(source: int, target: int) -> Tuple[Tuple[int, ...], ...]:
    """Images of ζ_source^k (k < φ(source)) in the power basis of ℚ(ζ_target)."""
    step = target // source
    tf = field(target)
    return tuple(tf.power_basis[(k * step) % target] for k in range(field(source).degree))


def _normalize(nums: Sequence[int], den: int) -> Tuple[Tuple[int, ...], int]:
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    g = den
    for a in nums:
        g = gcd(g, a)
        if g == 1:
            break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g > 1:
        nums = [a // g for a in nums]
        den //= g
    return tuple(nums), den


class CycRational:
    """An element of ℚ(ζ_N), immutable and hashable.

    Equality is decided across conductors (values are compared after promotion), and the hash is
    the normalized trace to ℚ so that equal values with different conductors hash alike.
    """

    __slots__ = ("_conductor", "_nums", "_den", "_hash")

    _conductor: int
    _nums: Tuple[int, ...]
    _den: int
    _hash: Optional[int]

    def __init__(self, conductor: int, coeffs: Iterable[Union[int, Fraction]]) -> None:
        values = [Fraction(c) for c in coeffs]
        degree = field(conductor).degree
        if len(values) != degree:
            raise ValueError(f"conductor {conductor} needs {degree} coefficients, got {len(values)}")
        den = lcm(1, *(v.denominator for v in values))
        nums = [v.numerator * (den // v.denominator) for v in values]
        self._set(conductor, *_normalize(nums, den))

    def _set(self, conductor: int, nums: Tuple[int, ...], den: int) -> None:
        self._conductor = conductor
        self._nums = nums
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, conductor: int, nums: Sequence[int], den: int = 1) -> "CycRational":
        obj = cls.__new__(cls)
        obj._set(conductor, *_normalize(nums, den))
        return obj

    @classmethod
    def rational(cls, value: Union[int, Fraction], conductor: int = 1) -> "CycRational":
        """Embed a rational number into ℚ(ζ_N)."""
        value = Fraction(value)
        nums = [0] * field(conductor).degree
        nums[0] = value.numerator
        return cls._raw(conductor, nums, value.denominator)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycRational":
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "CycRational":
        return cls.rational(1, conductor)

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_fraction(self) -> Fraction:
        """Return the value as a rational number.

        Raises:
            ValueError: If the value is irrational
        """
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._nums[0], self._den)

    def promote(self, conductor: int) -> "CycRational":
        """Embed into ℚ(ζ_M) for a multiple M of the current conductor."""
        if conductor == self._conductor:
            return self
        if conductor % self._conductor:
            raise ValueError(f"cannot promote conductor {self._conductor} to {conductor}")
        target = field(conductor)
        if self.is_rational():
            nums = [0] * target.degree
            nums[0] = self._nums[0]
            return CycRational._raw(conductor, nums, self._den)
        nums = [0] * target.degree
        for a, image in zip(self._nums, _embedding(self._conductor, conductor)):
            if a:
                for i, b in enumerate(image):
                    if b:
                        nums[i] += a * b
        return CycRational._raw(conductor, nums, self._den)

    def _trace(self) -> Fraction:
        weights = field(self._conductor).trace_weights
        return sum((w * a for w, a in zip(weights, self._nums) if a), Fraction(0)) / self._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._trace())
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        if not isinstance(other, CycRational):
            return NotImplemented
        if self._conductor == other._conductor:
            return self._nums == other._nums and self._den == other._den
        a, b = _align(self, other)
        return a._nums == b._nums and a._den == b._den

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "CycRational":
        return CycRational._raw(self._conductor, [-a for a in self._nums], self._den)

    def __add__(self, other: Operand) -> "CycRational":
        a, b = _align(self, _coerce(other))
        nums = [x * b._den + y * a._den for x, y in zip(a._nums, b._nums)]
        return CycRational._raw(a._conductor, nums, a._den * b._den)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "CycRational":
        return self + (-_coerce(other))

    def __rsub__(self, other: Operand) -> "CycRational":
        return _coerce(other) - self

    def __mul__(self, other: Operand) -> "CycRational":
        a, b = _align(self, _coerce(other))
        if b.is_rational():
            c = b._nums[0]
            return CycRational._raw(a._conductor, [x * c for x in a._nums], a._den * b._den)
        if a.is_rational():
            c = a._nums[0]
            return CycRational._raw(a._conductor, [y * c for y in b._nums], a._den * b._den)
        n = len(a._nums)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a._nums):
            if x:
                for j, y in enumerate(b._nums):
                    if y:
                        prod[i + j] += x * y
        return CycRational._raw(a._conductor, field(a._conductor).reduce(prod), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycRational":
        """Field inverse.

        Raises:
            CyclotomicDivisionError: If the value is zero
        """
        if self.is_zero():
            raise CyclotomicDivisionError(f"division by zero in conductor {self._conductor}")
        support = [i for i, a in enumerate(self._nums) if a]
        if len(support) == 1:
            # c·ζ^k has inverse c^{-1}·ζ^{N-k}
            k = support[0]
            c = Fraction(self._nums[k], self._den)
            basis = field(self._conductor).power_basis[(-k) % self._conductor]
            inv = 1 / c
            return CycRational._raw(self._conductor, [v * inv.numerator for v in basis], inv.denominator)
        poly = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X, domain=QQ)
        inv_poly = poly.invert(field(self._conductor).modulus())
        values = [Fraction(int(c.p), int(c.q)) for c in reversed(inv_poly.all_coeffs())]
        values.extend([Fraction(0)] * (field(self._conductor).degree - len(values)))
        return CycRational(self._conductor, values)

    def __truediv__(self, other: Operand) -> "CycRational":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other: Operand) -> "CycRational":
        return _coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "CycRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycRational.one(self._conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def format(self) -> str:
        """Serialize as ``a0 + a1*z + a2*z^2 @N``."""
        terms = []
        for k, a in enumerate(self._nums):
            if not a:
                continue
            c = str(Fraction(a, self._den))
            terms.append(c if k == 0 else f"{c}*z" if k == 1 else f"{c}*z^{k}")
        return f"{' + '.join(terms) or '0'} @{self._conductor}"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.to_fraction())
        return self.format()

    def __repr__(self) -> str:
        return f"CycRational({self.format()!r})"

    @classmethod
    def parse(cls, text: str) -> "CycRational":
        """Parse the serialized form; a bare rational without ``@N`` has conductor 1.

        Raises:
            ScalarParseError: If the text is malformed
        """
        body, sep, cond = text.strip().rpartition("@")
        if not sep:
            body, cond = cond, "1"
        try:
            conductor = int(cond)
        except ValueError as e:
            raise ScalarParseError(f"bad conductor in {text!r}") from e
        if conductor < 1:
            raise ScalarParseError(f"bad conductor in {text!r}")
        total = [Fraction(0)] * max(conductor, 1)
        body = body.strip()
        if not body:
            raise ScalarParseError(f"empty scalar {text!r}")
        for term in body.split(" + "):
            coef, power = _parse_term(term.strip(), text)
            total[power % conductor] += coef
        pb = field(conductor).power_basis
        nums = [Fraction(0)] * field(conductor).degree
        for power, coef in enumerate(total):
            if coef:
                for i, b in enumerate(pb[power]):
                    if b:
                        nums[i] += coef * b
        return cls(conductor, nums)


def _parse_term(term: str, text: str) -> Tuple[Fraction, int]:
    coef_text, star, zpart = term.partition("*")
    if not star:
        if "z" in term:
            sign = -1 if term.startswith("-") else 1
            zpart = term.lstrip("-")
            coef_text = str(sign)
        else:
            zpart = ""
    try:
        coef = Fraction(coef_text)
    except (ValueError, ZeroDivisionError) as e:
        raise ScalarParseError(f"bad coefficient {coef_text!r} in {text!r}") from e
    if not zpart:
        return coef, 0
    if zpart == "z":
        return coef, 1
    if zpart.startswith("z^"):
        try:
            return coef, int(zpart[2:])
        except ValueError as e:
            raise ScalarParseError(f"bad exponent in {text!r}") from e
    raise ScalarParseError(f"bad term {term!r} in {text!r}")


def _coerce(value: Operand) -> CycRational:
    if isinstance(value, CycRational):
        return value
    if isinstance(value, (int, Fraction)):
        return CycRational.rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a cyclotomic scalar")


def _align(a: CycRational, b: CycRational) -> Tuple[CycRational, CycRational]:
    if a.conductor == b.conductor:
        return a, b
    if a.conductor % b.conductor == 0:
        return a, b.promote(a.conductor)
    if b.conductor % a.conductor == 0:
        return a.promote(b.conductor), b
    m = lcm(a.conductor, b.conductor)
    return a.promote(m), b.promote(m)


def zeta(conductor: int, k: int = 1) -> CycRational:
    """ζ_N^k in ℚ(ζ_N)."""
    if conductor < 1:
        raise ValueError(f"conductor must be positive, got {conductor}")
    return CycRational._raw(conductor, field(conductor).power_basis[k % conductor])


def cyc_arith(a: Operand, b: Operand, op: ArithOp) -> CycRational:
    """Apply one field operation after conductor promotion."""
    x, y = _coerce(a), _coerce(b)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def unity_order(value: CycRational) -> Optional[int]:
    """Least m ≥ 1 with value^m = 1, or None when value is not a root of unity.

    Roots of unity in ℚ(ζ_N) form the cyclic group of order lcm(2, N), so only its divisors are tried.
    """
    if value.is_zero():
        return None
    bound = lcm(2, value.conductor)
    if value**bound != 1:
        return None
    for d in divisors(bound):
        if value ** int(d) == 1:
            return int(d)
    return None


def roots_of_unity(order: int, conductor: int = 1) -> List[CycRational]:
    """All ζ_order^k, k = 0 … order-1, expressed in conductor lcm(order, conductor)."""
    target = lcm(order, conductor)
    return [zeta(order, k).promote(target) for k in range(order)]


def common_conductor(values: Iterable[CycRational]) -> int:
    result = 1
    for v in values:
        result = lcm(result, v.conductor)
    return result


def as_scalar(value: Operand, conductor: int = 1) -> CycRational:
    """Coerce ints and fractions, then promote to at least the given conductor."""
    v = _coerce(value)
    return v.promote(lcm(v.conductor, conductor))
