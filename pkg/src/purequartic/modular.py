"""Modular arithmetic kernel: primality, prime streams, residue symbols."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional

import numpy as np

from .errors import InvalidInput, InvariantViolation, NotQuadraticResidue

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Miller-Rabin with the first twelve prime bases is exact below this bound.
_MR_EXACT_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test (exact for every n < 3.3e24)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n >= _MR_EXACT_BOUND:
        raise InvalidInput(f"is_prime is only certified below {_MR_EXACT_BOUND}")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    return np.flatnonzero(flags).astype(np.int64)


def prime_array(lower: int, upper: int, segment: int = 1 << 22) -> np.ndarray:
    """All primes q with lower <= q < upper, ascending, as an int64 array."""
    lower = max(lower, 2)
    if upper <= lower:
        return np.array([], dtype=np.int64)
    base = _base_primes(isqrt(upper - 1))
    chunks = []
    for lo in range(lower, upper, segment):
        hi = min(lo + segment, upper)
        flags = np.ones(hi - lo, dtype=bool)
        for q in base.tolist():
            if q * q >= hi:
                break
            start = max(q * q, -(-lo // q) * q)
            flags[start - lo :: q] = False
        chunks.append(np.flatnonzero(flags) + lo)
    return np.concatenate(chunks).astype(np.int64)


@dataclass(frozen=True)
class PrimeStream:
    """Primes q with lower <= q < upper and q = residue (mod modulus)."""

    lower: int
    upper: int
    modulus: int = 1
    residue: int = 0

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise InvalidInput(f"bad residue class {self.residue} mod {self.modulus}")

    def __iter__(self) -> Iterator[int]:
        step = 1 << 22
        for lo in range(self.lower, self.upper, step):
            chunk = prime_array(lo, min(lo + step, self.upper))
            if self.modulus > 1:
                chunk = chunk[chunk % self.modulus == self.residue]
            yield from chunk.tolist()


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n <= 0 or n % 2 == 0:
        raise InvalidInput(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Euler's criterion; used as the brute-force reference for ``jacobi``."""
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod(a: int, p: int) -> Optional[int]:
    """Square root of a modulo the odd prime p, normalised to [0, (p-1)/2].

    Returns None when a is a non-residue. Tonelli-Shanks.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


def _quartic_sign(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 4, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise InvariantViolation(f"{a}^((p-1)/4) mod {p} = {r} is not +-1")


def quartic_symbol_2(p: int) -> int:
    """Quartic residue symbol (2/p)_4 for a prime p = 1 (mod 8)."""
    if p % 8 != 1:
        raise InvalidInput(f"(2/p)_4 needs p = 1 mod 8, got {p}")
    return _quartic_sign(2, p)


def quartic_symbol(a: int, p: int) -> int:
    """Quartic residue symbol (a/p)_4; only defined when (a/p) = +1."""
    if p % 4 != 1:
        raise InvalidInput(f"quartic symbol needs p = 1 mod 4, got {p}")
    if legendre(a, p) != 1:
        raise NotQuadraticResidue(f"{a} is not a quadratic residue mod {p}")
    return _quartic_sign(a, p)
