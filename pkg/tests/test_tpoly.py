from hypothesis import given, strategies as st

from incpat.tpoly import TPoly

polys = st.lists(st.integers(-50, 50), max_size=6).map(TPoly)


def test_canonical_zero_and_trim():
    assert TPoly([0, 0]).coeffs == ()
    assert TPoly([1, 2, 0]).coeffs == (1, 2)
    assert TPoly().degree == -1
    assert TPoly([0, 0, 3]).degree == 2


def test_int_interop():
    t = TPoly.t()
    assert t - 1 == TPoly([-1, 1])
    assert 1 - t == TPoly([1, -1])
    assert 3 * t == TPoly([0, 3])
    assert TPoly([5]) == 5
    assert TPoly() == 0
    assert hash(TPoly([5])) == hash(5)


def test_power_and_eval():
    p = (TPoly.t() - 1) ** 3
    assert p == TPoly([-1, 3, -3, 1])
    assert p(2) == 1
    assert p(0) == -1


def test_str():
    assert str(TPoly([5, 1])) == "5 + t"
    assert str(TPoly([1, -2, 1])) == "1 - 2*t + t^2"
    assert str(TPoly()) == "0"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


def test_big_coefficients_exact():
    big = 10**40 + 7
    p = TPoly([big, 1]) * TPoly([big, -1])
    assert p == TPoly([big * big, 0, -1])
