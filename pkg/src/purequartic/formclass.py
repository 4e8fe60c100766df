"""Class numbers of imaginary quadratic orders from reduced binary forms."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .errors import InvalidInput, InvariantViolation
from .modular import is_prime


@dataclass(frozen=True)
class ReducedForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c) or a <= 0:
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return gcd(gcd(a, b), c) == 1

    @property
    def is_ambiguous(self) -> bool:
        return self.b == 0 or self.a == self.b or self.a == self.c


@dataclass(frozen=True)
class FormClassSummary:
    D: int
    h: int
    ord2: int
    ambiguous: int


def _check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidInput(f"{D} is not a negative discriminant")


class _SmallestFactor:
    """Lazily grown smallest-prime-factor table for divisor enumeration."""

    def __init__(self):
        self.table: list[int] = []

    def ensure(self, n: int) -> None:
        if n < len(self.table):
            return
        size = max(n + 1, 2 * len(self.table), 1 << 16)
        spf = np.zeros(size, dtype=np.int64)
        for q in range(2, isqrt(size - 1) + 1):
            if spf[q] == 0:
                block = spf[q * q :: q]
                block[block == 0] = q
        idx = np.flatnonzero(spf == 0)
        spf[idx] = idx
        self.table = spf.tolist()

    def divisors(self, n: int) -> list[int]:
        self.ensure(n)
        spf = self.table
        divs = [1]
        while n > 1:
            q = spf[n]
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            divs = [d * q ** k for d in divs for k in range(e + 1)]
        return divs


_SPF = _SmallestFactor()
# above this the lookup table would be too large; fall back to trial division
_SPF_LIMIT = 1 << 25


def _divisors(n: int) -> list[int]:
    if n <= _SPF_LIMIT:
        return _SPF.divisors(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return small + [n // d for d in reversed(small) if d * d != n]


def reduced_forms(D: int) -> list[ReducedForm]:
    """All reduced primitive forms of discriminant D.

    Loops over b and factors (b^2 - D)/4 = a*c; same output as
    ``reduced_forms_reference``.
    """
    _check_discriminant(D)
    forms = []
    b = D % 2
    b_max = isqrt(-D // 3)
    while b <= b_max:
        n = (b * b - D) // 4
        for a in _divisors(n):
            c = n // a
            if a < max(b, 1) or a > c or gcd(gcd(a, b), c) != 1:
                continue
            forms.append(ReducedForm(a, b, c))
            if 0 < b < a < c:
                forms.append(ReducedForm(a, -b, c))
        b += 2
    forms.sort(key=lambda f: (f.a, f.b))
    return forms


def reduced_forms_reference(D: int) -> list[ReducedForm]:
    """Direct enumeration over a <= sqrt(|D|/3), |b| <= a."""
    _check_discriminant(D)
    forms = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            f = ReducedForm(a, b, num // (4 * a))
            if f.is_reduced:
                forms.append(f)
    return forms


def class_number(D: int) -> FormClassSummary:
    forms = reduced_forms(D)
    for f in forms:
        if not f.is_reduced or f.discriminant != D:
            raise InvariantViolation(f"enumerated a non-reduced form {f}")
    h = len(forms)
    amb = sum(f.is_ambiguous for f in forms)
    return FormClassSummary(D, h, (h & -h).bit_length() - 1, amb)


def h2p(p: int) -> FormClassSummary:
    """Class number data for Q(sqrt(-2p)), discriminant -8p."""
    if p % 2 == 0 or not is_prime(p):
        raise InvalidInput(f"{p} is not an odd prime")
    return class_number(-8 * p)
