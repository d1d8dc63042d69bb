from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from ealie.exact_arith import GaussianRational, SqrtFieldElement, is_square_free, sqrt_pairing

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fracs, fracs)

# square-free products of 2, 3, 5
LABELS = (1, 2, 3, 5, 6, 10, 15, 30)
sqrts = st.builds(
    SqrtFieldElement,
    st.dictionaries(st.sampled_from(LABELS), fracs, max_size=4),
)


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(gaussians, gaussians)
def test_gaussian_conjugate_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).norm2() == x.norm2() * y.norm2()


@given(gaussians, gaussians)
def test_gaussian_division_roundtrip(x, y):
    if y.is_zero():
        return
    assert (x / y) * y == x


def test_gaussian_scalar_coercion():
    assert GaussianRational(2, 3) * 2 == GaussianRational(4, 6)
    assert GaussianRational(1) + Fraction(1, 2) == GaussianRational(Fraction(3, 2))
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)


def test_is_square_free():
    for n in (1, 2, 3, 5, 6, 7, 10, 15, 30, 105):
        assert is_square_free(n)
    for n in (0, -2, 4, 8, 9, 12, 18, 50):
        assert not is_square_free(n)


def test_sqrt_multiplication_table():
    r2 = SqrtFieldElement.sqrt(2)
    r3 = SqrtFieldElement.sqrt(3)
    r6 = SqrtFieldElement.sqrt(6)
    r10 = SqrtFieldElement.sqrt(10)
    r15 = SqrtFieldElement.sqrt(15)
    assert r2 * r3 == r6
    assert r2 * r2 == SqrtFieldElement.from_rational(2)
    assert r6 * r10 == 2 * r15
    assert r6 * r6 == SqrtFieldElement.from_rational(6)


@given(sqrts, sqrts, sqrts)
def test_sqrt_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=40)
@given(sqrts)
def test_sqrt_inverse_roundtrip(x):
    if x.is_zero():
        return
    assert x * x.inverse() == SqrtFieldElement.from_rational(1)


def test_sqrt_inverse_known_value():
    # 1/(1 + sqrt 2) = sqrt 2 - 1
    x = SqrtFieldElement({1: 1, 2: 1})
    assert x.inverse() == SqrtFieldElement({1: -1, 2: 1})


@given(sqrts, sqrts)
def test_sqrt_pairing_symmetric(u, v):
    assert sqrt_pairing(u, v) == sqrt_pairing(v, u)


def test_sqrt_pairing_on_labels():
    for a in LABELS:
        for b in LABELS:
            got = sqrt_pairing(SqrtFieldElement.sqrt(a), SqrtFieldElement.sqrt(b))
            assert got == (a if a == b else 0)


def test_sqrt_rejects_non_square_free_labels():
    import pytest

    with pytest.raises(ValueError):
        SqrtFieldElement({4: 1})
    with pytest.raises(ValueError):
        SqrtFieldElement.sqrt(12)
