from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Literal, Optional, Sequence, Union

import mpmath

from a4_polytopes.core.errors import FieldDivisionError

RationalLike = Union[int, Fraction]
Scalar = Union["FieldScalar", int, Fraction]

# square-free radicands of the basis after 1
_RADICANDS = (2, 5, 10)


@lru_cache(maxsize=None)
def _scaled_isqrt(radicand: int, bits: int) -> int:
    # floor(sqrt(radicand) * 2**bits)
    return math.isqrt(radicand << (2 * bits))


@total_ordering
class FieldScalar:
    """Exact element ``c0 + c1*sqrt2 + c2*sqrt5 + c3*sqrt10`` of Q(sqrt2, sqrt5).

    Internally the four rational components share one positive denominator and
    the five integers are kept coprime, so the representation is unique and
    equality is a plain tuple comparison.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, c0: RationalLike = 0, c1: RationalLike = 0,
                 c2: RationalLike = 0, c3: RationalLike = 0):
        parts = [Fraction(c) for c in (c0, c1, c2, c3)]
        d = math.lcm(*(p.denominator for p in parts))
        nums = tuple(p.numerator * (d // p.denominator) for p in parts)
        self._assign(nums, d)

    def _assign(self, nums: tuple[int, int, int, int], d: int) -> None:
        g = math.gcd(*nums, d)
        if g > 1:
            nums = tuple(n // g for n in nums)
            d //= g
        self._n = nums
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, n0: int, n1: int, n2: int, n3: int, d: int) -> "FieldScalar":
        obj = object.__new__(cls)
        if d < 0:
            n0, n1, n2, n3, d = -n0, -n1, -n2, -n3, -d
        obj._assign((n0, n1, n2, n3), d)
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 0, 0, 1)
        if isinstance(value, Fraction):
            return cls._raw(value.numerator, 0, 0, 0, value.denominator)
        raise TypeError(f"Cannot coerce {type(value).__name__} to FieldScalar")

    @classmethod
    def sqrt_of(cls, value: RationalLike) -> Optional["FieldScalar"]:
        """Square root of a non-negative rational, or None when it is not in the field."""
        r = Fraction(value)
        if r < 0:
            return None
        if r == 0:
            return ZERO
        radicand = r.numerator * r.denominator
        for s, position in ((1, 0), (2, 1), (5, 2), (10, 3)):
            if radicand % s:
                continue
            m = math.isqrt(radicand // s)
            if m * m * s == radicand:
                coeffs = [0, 0, 0, 0]
                coeffs[position] = Fraction(m, r.denominator)
                return cls(*coeffs)
        return None

    # -- components ---------------------------------------------------------

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self._d) for n in self._n)  # type: ignore[return-value]

    @property
    def c0(self) -> Fraction:
        return Fraction(self._n[0], self._d)

    @property
    def c1(self) -> Fraction:
        return Fraction(self._n[1], self._d)

    @property
    def c2(self) -> Fraction:
        return Fraction(self._n[2], self._d)

    @property
    def c3(self) -> Fraction:
        return Fraction(self._n[3], self._d)

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not (self._n[1] or self._n[2] or self._n[3])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.to_exact_string()} is irrational")
        return Fraction(self._n[0], self._d)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._n, o._n
        if self._d == o._d:
            return FieldScalar._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], self._d)
        da, db = self._d, o._d
        return FieldScalar._raw(a[0] * db + b[0] * da, a[1] * db + b[1] * da,
                                a[2] * db + b[2] * da, a[3] * db + b[3] * da, da * db)

    __radd__ = __add__

    def __neg__(self) -> "FieldScalar":
        n = self._n
        return FieldScalar._raw(-n[0], -n[1], -n[2], -n[3], self._d)

    def __sub__(self, other: Scalar) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "FieldScalar":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = o._n
        # sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5, sqrt5*sqrt10 = 5 sqrt2
        return FieldScalar._raw(
            a0 * b0 + 2 * a1 * b1 + 5 * a2 * b2 + 10 * a3 * b3,
            a0 * b1 + a1 * b0 + 5 * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise FieldDivisionError("division by the zero element of Q(sqrt2, sqrt5)")
        # x * conj2(x) lies in Q(sqrt5); times its galois conjugate it is rational
        partial = self * self.conjugate_sqrt2()
        norm = (partial * partial.galois_conjugate()).to_fraction()
        return self.conjugate_sqrt2() * partial.galois_conjugate() * (1 / norm)

    def __truediv__(self, other: Scalar) -> "FieldScalar":
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldScalar":
        return FieldScalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self) -> "FieldScalar":
        return -self if self.sign() < 0 else self

    # -- automorphisms --------------------------------------------------------

    def galois_conjugate(self) -> "FieldScalar":
        """The automorphism sqrt5 -> -sqrt5 fixing sqrt2 (it exchanges tau and sigma)."""
        n = self._n
        return FieldScalar._raw(n[0], n[1], -n[2], -n[3], self._d)

    def conjugate_sqrt2(self) -> "FieldScalar":
        n = self._n
        return FieldScalar._raw(n[0], -n[1], n[2], -n[3], self._d)

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign by refining integer enclosures of sqrt2, sqrt5 and sqrt10."""
        n0, n1, n2, n3 = self._n
        if not (n1 or n2 or n3):
            return (n0 > 0) - (n0 < 0)
        bits = 32
        while True:
            lo = hi = n0 << bits
            for coeff, radicand in zip((n1, n2, n3), _RADICANDS):
                if not coeff:
                    continue
                root = _scaled_isqrt(radicand, bits)
                if coeff > 0:
                    lo += coeff * root
                    hi += coeff * (root + 1)
                else:
                    lo += coeff * (root + 1)
                    hi += coeff * root
            # the enclosure is strict since the radicals are irrational
            if lo >= 0:
                return 1
            if hi <= 0:
                return -1
            bits *= 2

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldScalar):
            return self._d == other._d and self._n == other._n
        if isinstance(other, (int, Fraction)):
            return self == FieldScalar.coerce(other)
        return NotImplemented

    def __lt__(self, other: Scalar) -> bool:
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._d))
            else:
                self._hash = hash((self._n, self._d))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    @property
    def canonical_key(self) -> tuple[Fraction, ...]:
        """Lexicographic key on the rational components, used for reproducible sorting."""
        return self.components

    # -- rendering ----------------------------------------------------------

    def __float__(self) -> float:
        n0, n1, n2, n3 = self._n
        return (n0 + n1 * math.sqrt(2) + n2 * math.sqrt(5) + n3 * math.sqrt(10)) / self._d

    def to_decimal(self, digits: int = 12) -> str:
        with mpmath.workdps(digits + 10):
            n0, n1, n2, n3 = self._n
            value = (mpmath.mpf(n0) + n1 * mpmath.sqrt(2) + n2 * mpmath.sqrt(5)
                     + n3 * mpmath.sqrt(10)) / self._d
            return mpmath.nstr(value, digits)

    def to_exact_string(self) -> str:
        terms = []
        for value, suffix in zip(self.components, ("", "*r2", "*r5", "*r10")):
            if value == 0:
                continue
            magnitude = abs(value)
            text = f"{magnitude}{suffix}"
            if suffix and magnitude == 1:
                text = suffix[1:]
            if not terms:
                terms.append(f"-{text}" if value < 0 else text)
            else:
                terms.append(f"- {text}" if value < 0 else f"+ {text}")
        return " ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.to_exact_string()

    def __repr__(self) -> str:
        return f"FieldScalar({self.to_exact_string()})"


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
HALF = FieldScalar(Fraction(1, 2))
SQRT2 = FieldScalar(0, 1)
SQRT5 = FieldScalar(0, 0, 1)
SQRT10 = FieldScalar(0, 0, 0, 1)
TAU = FieldScalar(Fraction(1, 2), 0, Fraction(1, 2))
SIGMA = FieldScalar(Fraction(1, 2), 0, Fraction(-1, 2))


def field_arith(a: Scalar, b: Scalar, op: Literal["add", "sub", "mul", "div"]) -> FieldScalar:
    x = FieldScalar.coerce(a)
    match op:
        case "add":
            return x + b
        case "sub":
            return x - b
        case "mul":
            return x * b
        case "div":
            return x / b
        case _:
            raise ValueError(f"Unknown field operation {op!r}")


def field_sign(a: Scalar) -> int:
    return FieldScalar.coerce(a).sign()


def galois_conjugate(a: Scalar) -> FieldScalar:
    return FieldScalar.coerce(a).galois_conjugate()


def field_rank(rows: Iterable[Sequence[Scalar]]) -> int:
    """Rank of a matrix with field entries, by Gaussian elimination."""
    matrix = [[FieldScalar.coerce(x) for x in row] for row in rows]
    if not matrix:
        return 0
    rank = 0
    columns = len(matrix[0])
    for col in range(columns):
        pivot = next((r for r in range(rank, len(matrix)) if not matrix[r][col].is_zero()), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = matrix[rank][col].inverse()
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col] * inv
            if factor.is_zero():
                continue
            matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank
