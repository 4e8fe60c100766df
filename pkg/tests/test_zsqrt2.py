from math import gcd

import pytest
from hypothesis import given, strategies as st

from oracles import jacobi_euler, norm_solutions, primes_below
from purequartic.errors import InvalidInput, NotRepresentable
from purequartic.zsqrt2 import (
    Zsqrt2, decompose, decompose_search, decompositions, invariant,
    lambda_twist, minimal_solution, search_bound, spin, spin_value, twisted_spin, unit_shift,
)

PRIMES_1E4 = primes_below(10 ** 4)
coeff = st.integers(-10 ** 9, 10 ** 9)


@st.composite
def totally_positive(draw):
    a = draw(st.integers(1, 10 ** 9))
    bound = int(((a * a - 1) // 2) ** 0.5)
    while 2 * bound * bound >= a * a:
        bound -= 1
    return Zsqrt2(a, draw(st.integers(-bound, bound)))


def test_mul_examples():
    assert Zsqrt2(3, 1) * Zsqrt2(3, 2) == Zsqrt2(13, 9)
    assert Zsqrt2(1, 0) * Zsqrt2(7, -4) == Zsqrt2(7, -4)
    assert Zsqrt2(1, 1) * Zsqrt2(-1, 1) == Zsqrt2(1, 0)


def test_norm_conj_examples():
    assert Zsqrt2(1, 1).norm() == -1
    assert Zsqrt2(13, 9).norm() == 7
    assert Zsqrt2(5, 2).conj() == Zsqrt2(5, -2)


@given(coeff, coeff, coeff, coeff)
def test_norm_multiplicative(a, b, c, d):
    x, y = Zsqrt2(a, b), Zsqrt2(c, d)
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * y == y * x


def test_unit_shift_examples():
    assert unit_shift(Zsqrt2(3, 1), 1) == Zsqrt2(13, 9)
    assert unit_shift(Zsqrt2(3, 1), 0) == Zsqrt2(3, 1)
    assert unit_shift(Zsqrt2(13, 9), 1) == Zsqrt2(75, 53)
    assert unit_shift(unit_shift(Zsqrt2(13, 9), 3), -3) == Zsqrt2(13, 9)


def test_unit_shift_is_unbounded():
    big = unit_shift(Zsqrt2(1, 0), 200)
    assert big.norm() == 1 and big.a > 2 ** 64


@pytest.mark.parametrize("p, u, v", [(17, 5, 2), (7, 13, 9), (31, 33, 23), (47, 25, 17), (23, 5, 1)])
def test_decompose_examples(p, u, v):
    assert u * u - 2 * v * v == p and u % 4 == 1
    assert (decompose(p).u, decompose(p).v) == (u, v)


@pytest.mark.parametrize("p", [2, 3, 5, 11, 13])
def test_decompose_rejects_inert(p):
    with pytest.raises(NotRepresentable):
        decompose(p)


def test_decompose_rejects_composite():
    with pytest.raises(InvalidInput):
        decompose(49)


def test_decompose_fast_path_matches_search():
    for p in PRIMES_1E4:
        if p % 8 in (1, 7):
            assert decompose(p) == decompose_search(p)


def test_minimal_solution_is_least_v():
    for p in PRIMES_1E4[:400]:
        if p % 8 in (1, 7):
            sols = norm_solutions(p, search_bound(p))
            assert sols and minimal_solution(p) == sols[0]


def test_decompose_invariants():
    for p in PRIMES_1E4:
        if p % 8 in (1, 7):
            d = decompose(p)
            assert d.u * d.u - 2 * d.v * d.v == p and d.u % 4 == 1 and d.v > 0
            if p % 8 == 7:
                assert d.u % 2 == 1 and d.v % 2 == 1


@pytest.mark.parametrize("p, expected", [(7, 1), (31, -1), (47, 1)])
def test_invariant_examples(p, expected):
    d = decompose(p)
    assert jacobi_euler(2 * d.u, d.v) == expected
    assert invariant(p) == expected


def test_invariant_of_7_from_alternate_decomposition():
    assert jacobi_euler(10, 3) == invariant(7)


def test_invariant_rejects_other_classes():
    with pytest.raises(InvalidInput):
        invariant(17)


def test_invariant_independent_of_decomposition():
    for p in PRIMES_1E4:
        if p % 8 == 7:
            target = invariant(p)
            decs = decompositions(p)
            assert len(decs) >= 3
            for d in decs:
                assert jacobi_euler(2 * d.u, d.v) == target, (p, d)
            # every solution with small v, found by brute force
            for u, v in norm_solutions(p, 3 * decompose(p).v):
                assert jacobi_euler(2 * u, v) == target


@pytest.mark.parametrize("x, expected", [(Zsqrt2(3, 2), -1), (Zsqrt2(2, 1), 0), (Zsqrt2(13, 9), 1)])
def test_spin_examples(x, expected):
    assert spin(x) == expected


@pytest.mark.parametrize("x, expected", [(Zsqrt2(13, 9), 1), (Zsqrt2(7, 1), -1), (Zsqrt2(1, 0), 1)])
def test_lambda_examples(x, expected):
    assert lambda_twist(x) == expected


@pytest.mark.parametrize("x, expected", [(Zsqrt2(7, 1), -1), (Zsqrt2(13, 9), 1), (Zsqrt2(2, 1), 0)])
def test_twisted_spin_examples(x, expected):
    assert twisted_spin(x) == expected


def test_spin_rejects_not_totally_positive():
    for x in (Zsqrt2(1, 1), Zsqrt2(-3, 1), Zsqrt2(0, 0)):
        with pytest.raises(InvalidInput):
            spin(x)


@given(totally_positive())
def test_twisted_spin_invariant_under_unit8(x):
    assert twisted_spin(unit_shift(x, 4)) == twisted_spin(x)


@given(totally_positive())
def test_spin_value_consistency(x):
    sv = spin_value(x)
    assert sv.twisted == sv.plain * sv.lam
    # (v/u) also vanishes when gcd(u, v) > 1
    assert (sv.plain == 0) == (x.a % 2 == 0 or gcd(x.a, x.b) > 1)
