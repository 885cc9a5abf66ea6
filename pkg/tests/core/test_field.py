import pytest
import mpmath
import random
from fractions import Fraction
from a4_polytopes.core.errors import FieldDivisionError, PolytopeError
from a4_polytopes.core.field import (
    HALF, ONE, SIGMA, SQRT2, SQRT5, SQRT10, TAU, ZERO,
    FieldScalar, field_arith, field_rank, field_sign, galois_conjugate
)


def high_precision(x: FieldScalar) -> mpmath.mpf:
    with mpmath.workdps(80):
        c0, c1, c2, c3 = x.components
        return (mpmath.mpf(c0.numerator) / c0.denominator
                + mpmath.mpf(c1.numerator) / c1.denominator * mpmath.sqrt(2)
                + mpmath.mpf(c2.numerator) / c2.denominator * mpmath.sqrt(5)
                + mpmath.mpf(c3.numerator) / c3.denominator * mpmath.sqrt(10))


class TestFieldArithmetic:

    def test_golden_ratio_identities(self):
        assert TAU + SIGMA == 1
        assert TAU * SIGMA == -1
        assert TAU * TAU == TAU + 1
        assert SIGMA * SIGMA == SIGMA + 1

    def test_radical_products(self):
        assert SQRT2 * SQRT5 == SQRT10
        assert SQRT2 * SQRT2 == 2
        assert SQRT10 * SQRT10 == 10
        assert SQRT5 * SQRT10 == 5 * SQRT2

    def test_normalized_representation(self):
        a = FieldScalar(Fraction(2, 4), Fraction(3, 6))
        b = FieldScalar(Fraction(1, 2), Fraction(1, 2))
        assert a == b
        assert hash(a) == hash(b)

    def test_rational_hash_matches_fraction(self):
        assert hash(FieldScalar(Fraction(3, 7))) == hash(Fraction(3, 7))
        assert {FieldScalar(2): "two"}[2] == "two"

    def test_mixed_operands(self):
        assert 1 - TAU == SIGMA
        assert 2 * HALF == ONE
        assert Fraction(1, 2) + HALF == 1
        assert 1 / SQRT2 == SQRT2 / 2

    @pytest.mark.parametrize("value", [
        SQRT2, SQRT5, TAU, SIGMA, SQRT10 - 3, FieldScalar(1, 1, 1, 1),
        FieldScalar(Fraction(-3, 7), Fraction(2, 5), Fraction(-1, 9), Fraction(4, 11)),
    ])
    def test_inverse(self, value):
        assert value * value.inverse() == ONE
        assert value / value == ONE

    def test_division_by_zero(self):
        with pytest.raises(FieldDivisionError):
            ONE / ZERO
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_power(self):
        assert SQRT2 ** 4 == 4
        assert TAU ** 0 == ONE
        assert TAU ** -1 == -SIGMA
        assert SQRT5 ** 3 == 5 * SQRT5

    def test_galois_conjugate(self):
        assert TAU.galois_conjugate() == SIGMA
        assert galois_conjugate(SIGMA) == TAU
        assert SQRT2.galois_conjugate() == SQRT2
        assert SQRT10.galois_conjugate() == -SQRT10
        x = FieldScalar(1, 2, 3, 4)
        assert x.galois_conjugate().galois_conjugate() == x

    def test_conjugate_sqrt2(self):
        assert SQRT2.conjugate_sqrt2() == -SQRT2
        assert SQRT5.conjugate_sqrt2() == SQRT5
        assert SQRT10.conjugate_sqrt2() == -SQRT10

    def test_field_arith(self):
        assert field_arith(TAU, SIGMA, "add") == 1
        assert field_arith(TAU, SIGMA, "sub") == SQRT5
        assert field_arith(TAU, SIGMA, "mul") == -1
        assert field_arith(SQRT10, SQRT5, "div") == SQRT2
        with pytest.raises(ValueError):
            field_arith(TAU, SIGMA, "pow")

    def test_coerce_rejects_floats(self):
        with pytest.raises(TypeError):
            FieldScalar.coerce(1.5)

    def test_to_fraction(self):
        assert (SQRT2 * SQRT2).to_fraction() == 2
        with pytest.raises(ValueError):
            SQRT2.to_fraction()

    def test_errors_share_base(self):
        assert issubclass(FieldDivisionError, PolytopeError)


class TestFieldSign:

    @pytest.mark.parametrize("value", [
        SQRT2 - Fraction(141, 100),
        SQRT2 - Fraction(142, 100),
        TAU - Fraction(1618, 1000),
        TAU - Fraction(1619, 1000),
        SQRT2 + SQRT5 - SQRT10 + Fraction(-1, 2),
        # within 1e-12 of zero
        FieldScalar(Fraction(-1393, 985), 1),
        FieldScalar(Fraction(-3363, 2378), 1),
        FieldScalar(Fraction(-15127, 6765), 0, 1),
        3 * SQRT2 + 2 * SQRT5 - 4 * SQRT10 + Fraction(701, 100),
    ])
    def test_sign_matches_high_precision(self, value):
        expected = int(mpmath.sign(high_precision(value)))
        assert value.sign() == expected
        assert field_sign(value) == expected

    def test_exact_zero(self):
        assert (SQRT10 - SQRT2 * SQRT5).sign() == 0
        assert (TAU * SIGMA + 1).sign() == 0

    def test_ordering(self):
        values = [SQRT10, TAU, SQRT2, SIGMA, ZERO, SQRT5, HALF]
        assert sorted(values) == [SIGMA, ZERO, HALF, SQRT2, TAU, SQRT5, SQRT10]
        assert SIGMA < 0 < TAU
        assert abs(SIGMA) == TAU - 1


class TestSqrtOf:

    @pytest.mark.parametrize("value,expected", [
        (0, ZERO),
        (4, FieldScalar(2)),
        (2, SQRT2),
        (8, 2 * SQRT2),
        (Fraction(1, 2), SQRT2 / 2),
        (Fraction(16, 5), 4 * SQRT5 / 5),
        (Fraction(2, 5), SQRT10 / 5),
        (10, SQRT10),
    ])
    def test_sqrt_in_field(self, value, expected):
        root = FieldScalar.sqrt_of(value)
        assert root == expected
        assert root * root == value

    @pytest.mark.parametrize("value", [3, Fraction(1, 3), 6, -4])
    def test_sqrt_not_in_field(self, value):
        assert FieldScalar.sqrt_of(value) is None


class TestFieldRendering:

    def test_exact_strings(self):
        assert TAU.to_exact_string() == "1/2 + 1/2*r5"
        assert str(-SQRT2) == "-r2"
        assert str(ZERO) == "0"
        assert str(FieldScalar(0, 0, Fraction(-3, 4), 2)) == "-3/4*r5 + 2*r10"

    def test_float(self):
        assert float(TAU) == pytest.approx(1.6180339887498949)
        assert float(SQRT10) == pytest.approx(3.1622776601683795)

    def test_to_decimal(self):
        assert TAU.to_decimal(20) == "1.6180339887498948482"
        assert SQRT2.to_decimal(5) == "1.4142"


class TestFieldRank:

    def test_full_rank(self):
        rows = [[1, 0, 0], [0, SQRT2, 0], [0, 0, TAU]]
        assert field_rank(rows) == 3

    def test_dependent_rows(self):
        rows = [[TAU, 1, 0], [1, SIGMA * -1, 0], [0, 0, SQRT5]]
        # the second row is the first divided by tau
        assert field_rank(rows) == 2

    def test_empty(self):
        assert field_rank([]) == 0


def random_scalar(rng) -> FieldScalar:
    return FieldScalar(*(Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(4)))


def random_pairs(seed, n=40):
    rng = random.Random(seed)
    return [(random_scalar(rng), random_scalar(rng), random_scalar(rng)) for _ in range(n)]


class TestFieldProperties:

    @pytest.mark.parametrize("a,b,c", random_pairs(2024))
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert a * ONE == a

    @pytest.mark.parametrize("a,b,c", random_pairs(7))
    def test_inverse(self, a, b, c):
        if a == ZERO:
            return
        assert a * a.inverse() == ONE
        assert (b * a) / a == b

    @pytest.mark.parametrize("a,b,c", random_pairs(31))
    def test_galois_conjugate_is_a_ring_homomorphism(self, a, b, c):
        assert galois_conjugate(a + b) == galois_conjugate(a) + galois_conjugate(b)
        assert galois_conjugate(a * b) == galois_conjugate(a) * galois_conjugate(b)
        assert galois_conjugate(galois_conjugate(c)) == c

    @pytest.mark.parametrize("a,b,c", random_pairs(97, n=60))
    def test_sign_matches_high_precision(self, a, b, c):
        for value in (a, a - b, a * b - c):
            assert field_sign(value) == int(mpmath.sign(high_precision(value)))

    @pytest.mark.parametrize("a,b,c", random_pairs(5))
    def test_ordering_is_consistent(self, a, b, c):
        assert (a < b) == ((b - a).sign() > 0)
        if a < b:
            assert a + c < b + c
