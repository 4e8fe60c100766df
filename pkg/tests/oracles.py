"""Slow, independent reference computations used only by the tests."""

from math import gcd, isqrt


def is_prime_trial(n):
    if n < 2:
        return False
    return all(n % q for q in range(2, isqrt(n) + 1))


def primes_below(n):
    return [q for q in range(2, n) if is_prime_trial(q)]


def factor(n):
    out, q = [], 2
    while q * q <= n:
        while n % q == 0:
            out.append(q)
            n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def jacobi_euler(a, n):
    """Product of Euler-criterion Legendre symbols over the factors of n."""
    result = 1
    for q in factor(n):
        r = pow(a % q, (q - 1) // 2, q)
        result *= -1 if r == q - 1 else r
    return result


def is_x2_plus_64y2(p):
    return any(isqrt(p - 64 * y * y) ** 2 == p - 64 * y * y for y in range(isqrt(p // 64) + 1))


def norm_solutions(p, vmax):
    """All (u, v) with u^2 - 2v^2 = p, 0 < v <= vmax."""
    out = []
    for v in range(1, vmax + 1):
        s = p + 2 * v * v
        if isqrt(s) ** 2 == s:
            out.append((isqrt(s), v))
    return out


def reduce_form(a, b, c):
    """Gauss reduction of a positive definite form."""
    while True:
        if b > a or b <= -a:
            k = (a - b) // (2 * a)
            b, c = b + 2 * k * a, a * k * k + b * k + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        if b == -a:
            b = a
        return a, b, c


def class_number_by_reduction(D, box=30):
    """Reduce every primitive form with a, |b| <= box and count classes."""
    classes = set()
    for a in range(1, box + 1):
        for b in range(-box, box + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if gcd(gcd(a, b), c) == 1:
                classes.add(reduce_form(a, b, c))
    return len(classes)


def class_number_analytic_minus8p(p):
    """h(-8p) = -(1/|D|) sum_{0<a<|D|} (D/a) a, for the fundamental D = -8p."""
    D = -8 * p
    total = sum(jacobi_euler(D, a) * a for a in range(1, -D, 2) if a % p)
    assert total % D == 0
    return total // D


def ord2(n):
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k
