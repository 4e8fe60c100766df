"""Continued fractions of sqrt(d), units of Z[sqrt d], and x^2 - d y^2 = 2.

All arithmetic on units is exact (Python ints); units of Q(sqrt p) reach
hundreds of digits already for p near 10^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional

from .errors import InvalidInput, NoNormTwoSolution
from .modular import is_prime, jacobi, legendre, sqrt_mod


@dataclass(frozen=True)
class ContinuedFraction:
    d: int
    a0: int
    period: tuple[int, ...]


@dataclass(frozen=True)
class FundamentalUnit:
    d: int
    x: int
    y: int
    unit_norm: int


@dataclass(frozen=True)
class NormTwoSolution:
    d: int
    x: int
    y: int


def is_squarefree(n: int) -> bool:
    """Trial division by q <= n^(1/3); what remains has at most two prime
    factors, so it is squarefree unless it is a perfect square."""
    if n < 1:
        raise InvalidInput(f"squarefree test needs n >= 1, got {n}")
    q = 2
    while q * q * q <= n:
        if n % q == 0:
            n //= q
            if n % q == 0:
                return False
        q += 1
    r = isqrt(n)
    return n == 1 or r * r != n


def cf_sqrt(d: int) -> ContinuedFraction:
    """Periodic continued fraction of sqrt(d) via the (P, Q) recurrence."""
    a0 = isqrt(d)
    if d < 2 or a0 * a0 == d:
        raise InvalidInput(f"{d} is a perfect square or < 2")
    P, Q = 0, 1
    seen = set()
    period = []
    while True:
        a = (a0 + P) // Q
        P = a * Q - P
        Q = (d - P * P) // Q
        if (P, Q) in seen:
            break
        seen.add((P, Q))
        period.append((a0 + P) // Q)
    return ContinuedFraction(d, a0, tuple(period))


def _convergents(cf: ContinuedFraction, terms: int) -> Iterator[tuple[int, int]]:
    """(p_n, q_n) for n = 0 .. terms-1, cycling through the period."""
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    yield p, q
    for n in range(1, terms):
        a = cf.period[(n - 1) % len(cf.period)]
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q


def _require_squarefree(d: int) -> None:
    if d < 2 or not is_squarefree(d):
        raise InvalidInput(f"{d} is not a squarefree integer >= 2")


def fundamental_unit(d: int) -> FundamentalUnit:
    """Least x + y sqrt(d) > 1 with x^2 - d y^2 = +-1."""
    _require_squarefree(d)
    cf = cf_sqrt(d)
    n = len(cf.period)
    *_, (x, y) = _convergents(cf, n)
    return FundamentalUnit(d, x, y, -1 if n % 2 else 1)


def solve_norm_two(d: int) -> Optional[NormTwoSolution]:
    """Least positive solution of x^2 - d y^2 = 2, or None.

    For d >= 5 every primitive solution of |x^2 - d y^2| < sqrt(d) is a
    convergent, so scanning one full period of the norm sequence decides
    existence. With an odd period the signs flip on the second pass, so we
    scan two.
    """
    _require_squarefree(d)
    if d < 5:
        # 2 > sqrt(d): convergents may miss solutions; only d = 2 has one
        return NormTwoSolution(2, 2, 1) if d == 2 else None
    cf = cf_sqrt(d)
    n = len(cf.period)
    for x, y in _convergents(cf, n if n % 2 == 0 else 2 * n):
        if x * x - d * y * y == 2:
            return NormTwoSolution(d, x, y)
    return None


@dataclass(frozen=True)
class UnitIdentityReport:
    p: int
    eps_ok: bool
    eps_prime_ok: bool

    @property
    def ok(self) -> bool:
        return self.eps_ok and self.eps_prime_ok


def _half_square_is_unit(d: int) -> bool:
    sol = solve_norm_two(d)
    if sol is None:
        raise NoNormTwoSolution(f"x^2 - {d} y^2 = 2 has no solution")
    eps = fundamental_unit(d)
    # (x + y sqrt d)^2 / 2
    return ((sol.x ** 2 + d * sol.y ** 2) // 2, sol.x * sol.y) == (eps.x, eps.y)


def check_eps_eq_pi_squared_over_two(p: int) -> UnitIdentityReport:
    """Check that half the square of the norm-2 element is the fundamental
    unit, for Q(sqrt p) and Q(sqrt 2p), p = 7 (mod 8)."""
    if p % 8 != 7 or not is_prime(p):
        raise InvalidInput(f"needs a prime p = 7 mod 8, got {p}")
    return UnitIdentityReport(p, _half_square_is_unit(p), _half_square_is_unit(2 * p))


@dataclass(frozen=True)
class Lemma34Report:
    p: int
    two_pm_sqrt2_squares: bool
    pi_square: bool
    pi_prime_square: bool

    @property
    def ok(self) -> bool:
        return self.two_pm_sqrt2_squares and self.pi_square and self.pi_prime_square


def lemma34_suite(p: int) -> Lemma34Report:
    """Local square checks at p for p = 15 (mod 16): 2 +- sqrt 2 in Q_p, and
    the norm-2 generators of Q(sqrt p), Q(sqrt 2p) modulo the prime above p."""
    if p % 16 != 15 or not is_prime(p):
        raise InvalidInput(f"needs a prime p = 15 mod 16, got {p}")
    t = sqrt_mod(2, p)
    squares = legendre(2 + t, p) == 1 and legendre(2 - t, p) == 1
    pi = solve_norm_two(p)
    pi_prime = solve_norm_two(2 * p)
    if pi is None or pi_prime is None:
        raise NoNormTwoSolution(f"missing norm-2 element for p = {p}")
    return Lemma34Report(p, squares, jacobi(pi.x, p) == 1, jacobi(pi_prime.x, p) == 1)
