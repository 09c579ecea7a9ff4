import random

import pytest
from hypothesis import given, settings, strategies as st

from sympow.groupring import (
    UnitSpecialization,
    augmentation,
    finite_quotient,
    gr_add,
    gr_mul,
    specialize,
    surface_ring,
    wedge_ring,
)
from oracles import regular_representation

R1 = surface_ring(1)  # variables x1, y1
R2 = surface_ring(2)


def x1(ring=R1):
    return ring.gen(0)


def test_add_examples():
    a = x1() - R1.one()
    assert gr_add(a, -a) == R1.zero()
    assert gr_add(x1(), x1()) == 2 * x1()
    # commutativity of the group: x1*y1^-1 written either way
    m = R1.monomial((1, -1))
    assert gr_add(m, m) == 2 * m


def test_mul_examples():
    assert (x1() - R1.one()) * (x1() + R1.one()) == R1.monomial((2, 0)) - R1.one()
    assert (R1.one() - x1()) * R1.zero() == R1.zero()
    y1 = R1.gen(1)
    lhs = (R1.one() - y1) * (R1.one() - x1())
    assert lhs == R1.one() - x1() - y1 + R1.monomial((1, 1))


def test_genus_mismatch_raises():
    with pytest.raises(ValueError):
        gr_add(R1.one(), R2.one())
    with pytest.raises(ValueError):
        gr_mul(R1.one(), R2.one())


def test_augmentation_examples():
    assert augmentation(x1() - R1.one()) == 0
    a = 3 * R2.monomial((2, 0, 0, -1)) + 2 * R2.one()
    assert augmentation(a) == 5
    assert augmentation(R1.zero()) == 0


def test_specialize_examples():
    s = UnitSpecialization(7, (1, 1))
    assert specialize(x1() - R1.one(), s) == 0
    s = UnitSpecialization(7, (2, 1))
    assert specialize(x1() - R1.one(), s) == 1
    # modular inverse oracle: 3 * 5 = 15 = 1 mod 7
    s = UnitSpecialization(7, (3, 1))
    assert pow(3, -1, 7) == 5
    assert specialize(R1.monomial((-1, 0)), s) == 5


def test_specialization_validation():
    with pytest.raises(ValueError):
        UnitSpecialization(7, (0, 1))
    with pytest.raises(ValueError):
        UnitSpecialization(2, (1, 1))
    with pytest.raises(ValueError):
        UnitSpecialization(9, (1, 1))  # composite modulus
    UnitSpecialization(2147483647, (5, 6))  # Mersenne prime accepted


def test_finite_quotient_identity_and_n1():
    for N in (1, 2, 3):
        M = finite_quotient(R1.one(), N)
        size = N ** 2
        assert M == [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    assert finite_quotient(x1() - R1.one(), 1) == [[0]]
    a = 3 * R2.monomial((2, 0, 0, -1)) + 2 * R2.one()
    assert finite_quotient(a, 1) == [[augmentation(a)]]


def test_finite_quotient_regular_representation_oracle():
    # multiplication by x1 at g=1, N=2 permutes exponent classes (0,b) <-> (1,b)
    expected = regular_representation((1, 0), 2, 2)
    assert finite_quotient(x1(), 2) == expected
    expected = regular_representation((0, 1), 3, 2)
    assert finite_quotient(R1.gen(1), 3) == expected


def test_finite_quotient_rejects_zero():
    with pytest.raises(ValueError):
        finite_quotient(R1.one(), 0)


def _matmul(A, B):
    n, m = len(A), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(m)] for i in range(n)]


def test_finite_quotient_is_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(10):
        a = sum((R1.monomial((rng.randint(-2, 2), rng.randint(-2, 2)), rng.randint(-3, 3))
                 for _ in range(2)), R1.zero())
        b = sum((R1.monomial((rng.randint(-2, 2), rng.randint(-2, 2)), rng.randint(-3, 3))
                 for _ in range(2)), R1.zero())
        for N in (1, 2, 3):
            assert finite_quotient(a * b, N) == _matmul(finite_quotient(a, N), finite_quotient(b, N))


def test_no_zero_divisors_on_monomials():
    rng = random.Random(9)
    for _ in range(20):
        mono = R2.monomial(tuple(rng.randint(-2, 2) for _ in range(4)), rng.choice([-2, -1, 1, 2]))
        other = sum((R2.monomial(tuple(rng.randint(-1, 1) for _ in range(4)), rng.randint(-2, 2))
                     for _ in range(2)), R2.zero())
        if other:
            assert mono * other


def test_canonical_string():
    assert (R1.one() - x1()).canonical_str() == "1 - 1*x1"
    assert R1.zero().canonical_str() == "0"
    assert R1.monomial((2, -1), -3).canonical_str() == "-3*x1^2*y1^-1"
    w = wedge_ring(2)
    assert (w.one() - w.gen(1)).canonical_str() == "1 - 1*z2"
    assert (2 * R1.one()).canonical_str() == "2"


# -- property tests ---------------------------------------------------------

coeffs = st.integers(min_value=-5, max_value=5)
exps = st.tuples(*[st.integers(min_value=-2, max_value=2)] * 4)
elements = st.lists(st.tuples(exps, coeffs), min_size=0, max_size=4).map(
    lambda terms: sum((R2.monomial(e, c) for e, c in terms), R2.zero())
)


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_mul_commutative_and_augmentation_multiplicative(a, b):
    assert a * b == b * a
    assert augmentation(a * b) == augmentation(a) * augmentation(b)


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_mul_associative_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(elements, elements, st.integers(min_value=0, max_value=10 ** 6))
def test_specialize_is_ring_homomorphism(a, b, seed):
    rng = random.Random(seed)
    p = 1000003
    s = UnitSpecialization(p, tuple(rng.randrange(1, p) for _ in range(4)))
    assert specialize(a * b, s) == specialize(a, s) * specialize(b, s) % p
    assert specialize(a + b, s) == (specialize(a, s) + specialize(b, s)) % p
