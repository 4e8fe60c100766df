"""Arithmetic in Z[sqrt 2], norm decompositions p = u^2 - 2v^2, spin symbols."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, isqrt, sqrt

from .errors import InvalidInput, InvariantViolation, NotRepresentable, SearchBoundExceeded
from .modular import is_prime, jacobi, sqrt_mod


@dataclass(frozen=True)
class Zsqrt2:
    """The element a + b*sqrt(2)."""

    a: int
    b: int

    def __mul__(self, other: "Zsqrt2") -> "Zsqrt2":
        return Zsqrt2(self.a * other.a + 2 * self.b * other.b, self.a * other.b + self.b * other.a)

    def __neg__(self) -> "Zsqrt2":
        return Zsqrt2(-self.a, -self.b)

    def conj(self) -> "Zsqrt2":
        return Zsqrt2(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    @property
    def totally_positive(self) -> bool:
        return self.a > 0 and self.a * self.a > 2 * self.b * self.b

    def __str__(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}*sqrt2"


ONE = Zsqrt2(1, 0)
FUNDAMENTAL_UNIT = Zsqrt2(1, 1)
UNIT_SQUARED = Zsqrt2(3, 2)
UNIT_SQUARED_INV = Zsqrt2(3, -2)


def mul(x: Zsqrt2, y: Zsqrt2) -> Zsqrt2:
    return x * y


def conj(x: Zsqrt2) -> Zsqrt2:
    return x.conj()


def norm(x: Zsqrt2) -> int:
    return x.norm()


def unit_shift(x: Zsqrt2, k: int) -> Zsqrt2:
    """x * (1 + sqrt 2)^(2k); negative k multiplies by the inverse unit."""
    step = UNIT_SQUARED if k >= 0 else UNIT_SQUARED_INV
    result = x
    for _ in range(abs(k)):
        result = result * step
    return result


def _round_div(x: int, n: int) -> int:
    # nearest integer to x/n, n != 0
    if n < 0:
        x, n = -x, -n
    return (2 * x + n) // (2 * n)


def _divmod(x: Zsqrt2, y: Zsqrt2) -> tuple[Zsqrt2, Zsqrt2]:
    n = y.norm()
    num = x * y.conj()
    q = Zsqrt2(_round_div(num.a, n), _round_div(num.b, n))
    return q, Zsqrt2(x.a - (q * y).a, x.b - (q * y).b)


def _gcd(x: Zsqrt2, y: Zsqrt2) -> Zsqrt2:
    # Z[sqrt 2] is norm-Euclidean with nearest-integer rounding
    while y.a or y.b:
        _, r = _divmod(x, y)
        x, y = y, r
    return x


@dataclass(frozen=True)
class NormDecomposition:
    """Canonical p = u^2 - 2v^2 with u, v > 0 and u = 1 (mod 4)."""

    p: int
    u: int
    v: int

    @property
    def element(self) -> Zsqrt2:
        return Zsqrt2(self.u, self.v)


def _check_split_prime(p: int) -> None:
    if p == 2 or p % 8 not in (1, 7):
        raise NotRepresentable(f"{p} is not of the form u^2 - 2v^2 with p = +-1 mod 8")
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")


def _canonical(p: int, u0: int, v0: int) -> NormDecomposition:
    if u0 % 4 == 3:
        u0, v0 = 3 * u0 + 4 * v0, 2 * u0 + 3 * v0
    dec = NormDecomposition(p, u0, v0)
    if u0 * u0 - 2 * v0 * v0 != p or u0 % 4 != 1 or u0 <= 0 or v0 <= 0:
        raise InvariantViolation(f"bad decomposition {dec}")
    return dec


def search_bound(p: int) -> int:
    return ceil(4.2 * sqrt(p))


def minimal_solution_search(p: int) -> tuple[int, int]:
    """Solution of u^2 - 2v^2 = p with least v > 0, by direct search."""
    for v in range(1, search_bound(p) + 1):
        s = p + 2 * v * v
        u = isqrt(s)
        if u * u == s:
            return u, v
    raise SearchBoundExceeded(f"no u^2 - 2v^2 = {p} with v <= {search_bound(p)}")


def minimal_solution(p: int) -> tuple[int, int]:
    """Same output as ``minimal_solution_search``, via a gcd in Z[sqrt 2].

    gcd(p, t + sqrt 2) with t^2 = 2 (mod p) is a prime element of norm +-p;
    we then walk its orbit under (3 + 2 sqrt 2) to the sign change of the
    sqrt 2 coefficient, where the least |v| sits.
    """
    t = sqrt_mod(2, p)
    g = _gcd(Zsqrt2(p, 0), Zsqrt2(t, 1))
    if g.norm() < 0:
        g = g * FUNDAMENTAL_UNIT
    if g.a < 0:
        g = -g
    if g.norm() != p:
        raise InvariantViolation(f"gcd in Z[sqrt2] has norm {g.norm()}, expected {p}")
    # v is strictly increasing along g * (3+2sqrt2)^k for totally positive g
    while g.b > 0:
        g = g * UNIT_SQUARED_INV
    while g.b < 0:
        g = g * UNIT_SQUARED
    below = g * UNIT_SQUARED_INV
    best = g if g.b <= -below.b else below.conj()
    return best.a, best.b


def decompose(p: int) -> NormDecomposition:
    """Canonical decomposition of a prime p = +-1 (mod 8)."""
    _check_split_prime(p)
    return _canonical(p, *minimal_solution(p))


def decompose_search(p: int) -> NormDecomposition:
    """Reference version of ``decompose`` using the bounded search."""
    _check_split_prime(p)
    return _canonical(p, *minimal_solution_search(p))


def invariant(p: int) -> int:
    """The Jacobi symbol (2u/v) for p = 7 (mod 8), independent of (u, v)."""
    if p % 8 != 7:
        raise InvalidInput(f"(2u/v) invariant needs p = 7 mod 8, got {p}")
    d = decompose(p)
    return jacobi(2 * d.u, d.v)


def decompositions(p: int, shifts=(-2, -1, 0, 1, 2)) -> list[NormDecomposition]:
    """Other (u, v) in N^2 with u^2 - 2v^2 = p, from both unit orbits.

    u is not normalised mod 4 here.
    """
    base = decompose(p).element
    found = {}
    for start in (base, base.conj()):
        for k in shifts:
            e = unit_shift(start, k)
            if e.a > 0 and e.b > 0:
                found[(e.a, e.b)] = NormDecomposition(p, e.a, e.b)
    return [found[key] for key in sorted(found)]


def _require_totally_positive(x: Zsqrt2) -> None:
    if not x.totally_positive:
        raise InvalidInput(f"{x} is not totally positive")


def spin(x: Zsqrt2) -> int:
    """[u + v sqrt 2] = (v/u) for odd u, 0 otherwise."""
    _require_totally_positive(x)
    if x.a % 2 == 0:
        return 0
    return jacobi(x.b, x.a)


def lambda_twist(x: Zsqrt2) -> int:
    _require_totally_positive(x)
    n = x.norm()
    if n % 16 == 15:
        return -1 if ((n + 1) // 16) % 2 else 1
    return 1


def twisted_spin(x: Zsqrt2) -> int:
    return spin(x) * lambda_twist(x)


@dataclass(frozen=True)
class SpinValue:
    plain: int
    lam: int
    twisted: int


def spin_value(x: Zsqrt2) -> SpinValue:
    plain, lam = spin(x), lambda_twist(x)
    return SpinValue(plain, lam, plain * lam)
