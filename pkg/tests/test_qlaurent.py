import pytest
from hypothesis import given, strategies as st

from skeinquot.qlaurent import (
    ONE, Q, QLaurent, ZERO, arith, bar, bracket, divide_exact, divmod_cyclic,
    poly_gcd, qint, residue_cyclic, residue_monic,
)

from conftest import nonzero_qlaurents, qlaurents


def q(e, c=1):
    return QLaurent.monomial(e, c)


def test_arith_examples():
    a = Q + q(-1)
    assert a * a == q(2) + 2 + q(-2)
    assert a + ZERO == a
    assert arith(a, a, "mul") == q(2) + 2 + q(-2)
    # {1} [2] = {2}
    assert (q(2) - q(-2)) * (q(2) + q(-2)) == q(4) - q(-4)


def test_zero_coefficients_dropped():
    assert QLaurent({3: 0, 1: 2, -1: 0}).terms == {1: 2}
    assert (Q - Q).terms == {}
    assert not QLaurent()


def test_bracket_and_qint():
    assert bracket(1) == q(2) - q(-2)
    assert bracket(0) == ZERO
    assert bracket(-1) == q(-2) - q(2)
    assert qint(1) == ONE
    assert qint(2) == q(2) + q(-2)
    assert qint(0) == ZERO
    assert qint(3) == q(4) + 1 + q(-4)


@pytest.mark.parametrize("k", range(-50, 51))
def test_qint_times_bracket1(k):
    assert qint(k) * bracket(1) == bracket(k)
    assert bracket(-k) == -bracket(k)


def test_bar_examples():
    assert bar(q(3)) == q(-3)
    assert bar(QLaurent(5)) == QLaurent(5)
    for k in range(-4, 5):
        assert bar(bracket(k)) == -bracket(k)


def test_divide_exact_examples():
    assert divide_exact(bracket(2), bracket(1)) == qint(2)
    assert divide_exact(bracket(1), bracket(2)) is None
    assert divide_exact(ZERO, bracket(3)) == ZERO
    with pytest.raises(ValueError):
        divide_exact(Q, ZERO)
    # content obstruction: 3 does not divide q + 2
    assert divide_exact(Q + 2, QLaurent(3)) is None


def test_residue_cyclic_examples():
    assert residue_cyclic(q(9), 8) == Q
    assert residue_cyclic(q(8) - 1, 8) == ZERO
    assert residue_cyclic(bracket(2), 8) == ZERO


def test_residue_monic_examples():
    d = 1 + q(4) + q(8)
    assert residue_monic(d, d) == ZERO
    assert residue_monic(q(-1), d) == -(q(3) + q(7))
    assert residue_monic(QLaurent(7), d) == QLaurent(7)
    for bad in (q(2) * 2 + 1, q(2) + 2, QLaurent(1), q(-1) + 1):
        with pytest.raises(ValueError):
            residue_monic(Q, bad)


def test_render():
    assert str(q(4) - q(-4)) == "q^4 - q^-4"
    assert str(-Q + 3) == "-q + 3"
    assert str(q(2, -2) + q(-2, 5)) == "-2*q^2 + 5*q^-2"
    assert str(ZERO) == "0"


def test_poly_gcd():
    a = (q(4) + 1) * (q(2) - 3)
    b = (q(4) + 1) * (Q + 1) * 2
    assert poly_gcd(a, b) == q(4) + 1
    assert poly_gcd(q(3) * (Q + 1), Q + 1) == Q + 1
    assert poly_gcd(Q + 1, Q - 1) == ONE


# -- properties ---------------------------------------------------------------------

@given(qlaurents(), qlaurents(), qlaurents())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert all(v != 0 for v in (a * b).terms.values())


@given(qlaurents(), qlaurents())
def test_bar_is_involutive_ring_map(a, b):
    assert bar(bar(a)) == a
    assert bar(a * b) == bar(a) * bar(b)
    assert bar(a + b) == bar(a) + bar(b)


@given(qlaurents(), nonzero_qlaurents())
def test_divide_exact_roundtrip(a, d):
    assert divide_exact(a * d, d) == a


@given(qlaurents(), nonzero_qlaurents())
def test_divide_exact_is_sound(a, d):
    s = divide_exact(a, d)
    if s is not None:
        assert s * d == a


@given(qlaurents(span=30), st.integers(1, 16))
def test_residue_cyclic_window_and_congruence(a, m):
    r = residue_cyclic(a, m)
    assert all(0 <= e < m for e in r.terms)
    assert divide_exact(a - r, q(m) - 1) is not None


@given(qlaurents(span=30), qlaurents(), st.integers(1, 16))
def test_residue_cyclic_invariant_under_ideal(a, s, m):
    assert residue_cyclic(a + (q(m) - 1) * s, m) == residue_cyclic(a, m)


@given(qlaurents(span=30), st.integers(0, 6))
def test_residue_cyclic_zero_iff_divisible(a, n):
    m = 4 * n + 4
    zero = residue_cyclic(a, m) == ZERO
    assert zero == (divide_exact(a, q(m) - 1) is not None)
    assert zero == (divide_exact(a, bracket(n + 1)) is not None)


@given(qlaurents(span=30), st.integers(1, 12), st.integers(0, 3))
def test_divmod_cyclic_reconstructs(a, m, slack):
    quot, res = divmod_cyclic(a, m, slack)
    assert quot * (q(m) - 1) + res == a
    assert all(0 <= e < m + slack for e in res.terms)


@given(qlaurents(span=20), qlaurents(span=6), st.integers(1, 6))
def test_residue_monic(a, s, n):
    d = QLaurent({4 * i: 1 for i in range(n + 1)})
    r = residue_monic(a, d)
    assert all(0 <= e < 4 * n for e in r.terms)
    assert divide_exact(a - r, d) is not None
    assert residue_monic(a + d * s, d) == r
