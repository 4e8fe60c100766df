import random

import pytest
from hypothesis import given, strategies as st

from oracles import is_prime_trial, is_x2_plus_64y2, jacobi_euler, primes_below
from purequartic.errors import InvalidInput, NotQuadraticResidue
from purequartic.modular import (
    PrimeStream, is_prime, jacobi, legendre, prime_array, quartic_symbol,
    quartic_symbol_2, sqrt_mod,
)

PRIMES_1E4 = primes_below(10 ** 4)
ODD_PRIMES_1E4 = PRIMES_1E4[1:]


@pytest.mark.parametrize("n, expected", [(2, True), (1, False), (0, False), (999983, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected
    assert is_prime_trial(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(20000) if is_prime(n)] == primes_below(20000)


@pytest.mark.parametrize("n", [
    2 ** 61 - 1,  # Mersenne prime
    3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
    3825123056546413051,  # strong pseudoprime to the first nine prime bases
    (2 ** 32 - 5) * (2 ** 31 - 1),
])
def test_is_prime_large(n):
    assert is_prime(n) is (n == 2 ** 61 - 1)


def test_prime_stream_residue_class():
    got = list(PrimeStream(100, 2000, 16, 15))
    assert got == [q for q in primes_below(2000) if q >= 100 and q % 16 == 15]
    assert list(PrimeStream(10, 10)) == []


def test_prime_array_segments():
    assert prime_array(0, 5000, segment=97).tolist() == primes_below(5000)


@pytest.mark.parametrize("a, n, expected", [(2, 7, 1), (2, 3, -1), (26, 9, 1), (66, 23, -1)])
def test_jacobi_examples(a, n, expected):
    assert jacobi_euler(a, n) == expected
    assert jacobi(a, n) == expected


def test_jacobi_one_is_empty_product():
    assert jacobi(0, 1) == jacobi(5, 1) == 1


@pytest.mark.parametrize("n", [0, -3, 4])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(InvalidInput):
        jacobi(3, n)


def test_jacobi_equals_euler_for_small_primes():
    for p in primes_below(1000)[1:]:
        for a in range(p):
            assert jacobi(a, p) == legendre(a, p)


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6),
       st.integers(0, 5000).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative(a, b, n):
    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)
    assert jacobi(a, n) == jacobi_euler(a, n)


@pytest.mark.parametrize("a, p, expected", [(2, 7, 3), (2, 17, 6), (3, 7, None), (14, 7, 0)])
def test_sqrt_mod_examples(a, p, expected):
    assert sqrt_mod(a, p) == expected


def test_sqrt_mod_random_pairs():
    rng = random.Random(0)
    for _ in range(10 ** 4):
        p = rng.choice(ODD_PRIMES_1E4)
        a = rng.randrange(-10 ** 6, 10 ** 6)
        r = sqrt_mod(a, p)
        if r is None:
            assert legendre(a, p) == -1
        else:
            assert (r * r - a) % p == 0 and 0 <= r <= (p - 1) // 2


@pytest.mark.parametrize("p, expected", [(17, -1), (97, -1), (113, 1)])
def test_quartic_symbol_2_examples(p, expected):
    # Gauss: 2 is a quartic residue mod p = 1 (8) iff p = x^2 + 64 y^2
    assert (1 if is_x2_plus_64y2(p) else -1) == expected
    assert quartic_symbol_2(p) == expected


def test_quartic_symbol_2_gauss_criterion():
    for p in PRIMES_1E4:
        if p % 8 == 1:
            assert (quartic_symbol_2(p) == 1) == is_x2_plus_64y2(p), p


def test_quartic_symbol_2_rejects_other_classes():
    with pytest.raises(InvalidInput):
        quartic_symbol_2(7)


@pytest.mark.parametrize("a, p, expected", [(9, 73, 1), (1, 13, 1), (4, 5, -1)])
def test_quartic_symbol_examples(a, p, expected):
    assert quartic_symbol(a, p) == expected


def test_quartic_symbol_non_residue():
    with pytest.raises(NotQuadraticResidue):
        quartic_symbol(2, 5)


def test_quartic_symbol_squares_to_legendre():
    for p in PRIMES_1E4[:300]:
        if p % 4 != 1:
            continue
        for a in range(1, min(p, 60)):
            if legendre(a, p) == 1:
                q = quartic_symbol(a, p)
                assert q in (-1, 1)
                # (a/p)_4 = +1 iff a is a fourth power mod p
                fourth = any(pow(x, 4, p) == a % p for x in range(1, p))
                assert (q == 1) == fourth
