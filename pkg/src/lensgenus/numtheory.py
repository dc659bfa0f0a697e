"""Elementary number theory on Python integers.

Everything here is exact and works for arbitrarily large ``int`` values.
Nothing is mutated (factorizations are memoized through ``functools``), so
all functions are safe to call from several threads at once.
"""

from __future__ import annotations

import functools
import math
import random
from itertools import product

__all__ = [
    "CeilingExceeded",
    "gcd",
    "is_prime",
    "factorize",
    "find_prime_in_progression",
    "jacobi",
    "is_quadratic_residue",
    "sqrt_mod",
    "sqrt_mod_all",
    "is_three_square_excluded",
    "three_squares",
    "DEFAULT_CEILING",
]

DEFAULT_CEILING = 10**6

# Deterministic Miller-Rabin witnesses; correct for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class CeilingExceeded(RuntimeError):
    """A bounded search ran out of steps before finding an answer."""


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def is_prime(n: int) -> bool:
    """Exact primality test.

    Miller-Rabin with a fixed witness set below 3.3e24, trial division above
    (a Miller-Rabin "composite" verdict is exact, so it is tried first).
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _MR_LIMIT:
        return _miller_rabin(n)
    if not _miller_rabin(n):
        return False
    f = 53
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    # n is odd and composite
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``.

    >>> factorize(60)
    {2: 2, 3: 1, 5: 1}
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    return dict(_factor_items(n))


@functools.lru_cache(maxsize=8192)
def _factor_items(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # fixed seed keeps the factor discovery order reproducible
    rng = random.Random(n)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.extend((d, m // d))
    return tuple(sorted(out.items()))


def find_prime_in_progression(a: int, m: int, ceiling: int = DEFAULT_CEILING) -> int:
    """Smallest prime of the form ``a + n*m`` with ``n >= 0``.

    Raises ``ValueError`` when ``gcd(a, m) != 1`` (no such prime is promised)
    and ``CeilingExceeded`` after ``ceiling`` candidates.
    """
    if a < 1 or m < 1:
        raise ValueError(f"need a >= 1 and m >= 1, got a={a}, m={m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1: progression has no primes to find")
    x = a
    for _ in range(ceiling):
        if is_prime(x):
            return x
        x += m
    raise CeilingExceeded(f"no prime among {ceiling} terms of {a} + n*{m}")


def _check_unit(q: int, p: int) -> None:
    if p < 1:
        raise ValueError(f"modulus must be >= 1, got {p}")
    if math.gcd(q, p) != 1:
        raise ValueError(f"{q} is not a unit mod {p}")


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol ``(a/n)`` for odd ``n >= 1``."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
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


def is_quadratic_residue(q: int, p: int) -> bool:
    """True iff the unit ``q`` is a square in ``(Z/p)^*``; ``p`` may be composite."""
    _check_unit(q, p)
    for r, k in factorize(p).items():
        if r == 2:
            if k == 2 and q % 4 != 1:
                return False
            if k >= 3 and q % 8 != 1:
                return False
        elif pow(q, (r - 1) // 2, r) != 1:
            return False
    return True


def _sqrt_mod_prime(q: int, p: int) -> int:
    q %= p
    if p == 2 or q == 0:
        return q
    if p % 4 == 3:
        return pow(q, (p + 1) // 4, p)
    # Tonelli-Shanks
    s, t = 0, p - 1
    while t % 2 == 0:
        t //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c, r, u, m = pow(z, t, p), pow(q, (t + 1) // 2, p), pow(q, t, p), s
    while u != 1:
        i, v = 0, u
        while v != 1:
            v = v * v % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r, c = r * b % p, b * b % p
        u, m = u * c % p, i
    return r


def _roots_prime_power(q: int, r: int, k: int) -> list[int]:
    n = r**k
    if r == 2:
        if k == 1:
            return [1]
        if k == 2:
            return [1, 3]
        x = 1
        for j in range(3, k):
            if (x * x - q) % (1 << (j + 1)):
                x += 1 << (j - 1)
        half = n // 2
        return sorted({x % n, -x % n, (x + half) % n, (-x + half) % n})
    x = _sqrt_mod_prime(q, r)
    # Hensel lift; 2x is invertible since r is odd and q is a unit
    pk = r
    for _ in range(1, k):
        pk *= r
        x = (x - (x * x - q) * pow(2 * x, -1, pk)) % pk
    return sorted({x, -x % n})


def sqrt_mod_all(q: int, p: int) -> list[int]:
    """All square roots of the unit ``q`` modulo ``p``, ascending."""
    if not is_quadratic_residue(q, p):
        raise ValueError(f"{q} is not a square mod {p}")
    if p == 1:
        return [0]
    moduli, root_sets = [], []
    for r, k in factorize(p).items():
        moduli.append(r**k)
        root_sets.append(_roots_prime_power(q, r, k))
    roots = set()
    for combo in product(*root_sets):
        x = 0
        for m, a in zip(moduli, combo):
            c = p // m
            x += a * c * pow(c, -1, m)
        roots.add(x % p)
    return sorted(roots)


def sqrt_mod(q: int, p: int) -> int:
    """Smallest ``u`` in ``[0, p)`` with ``u*u == q (mod p)``.

    >>> sqrt_mod(2, 7)
    3
    """
    if not is_quadratic_residue(q, p):
        raise ValueError(f"{q} is not a square mod {p}")
    if p == 1:
        return 0
    if is_prime(p):
        u = _sqrt_mod_prime(q, p)
        return min(u, p - u) if p > 2 else u
    return sqrt_mod_all(q, p)[0]


def is_three_square_excluded(n: int) -> bool:
    """True iff ``n = 4**a * (8*b + 7)``, i.e. ``n`` is not a sum of three squares."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return False
    while n % 4 == 0:
        n //= 4
    return n % 8 == 7


def three_squares(n: int) -> tuple[int, int, int]:
    """Write ``n`` as ``a1**2 + a2**2 + a3**2`` with ``a1 >= a2 >= a3 >= 0``.

    Picks the largest possible ``a1``, then the largest ``a2``.
    """
    if is_three_square_excluded(n):
        raise ValueError(f"{n} has the form 4^a(8b+7) and is not a sum of three squares")
    for a1 in range(math.isqrt(n), -1, -1):
        rest = n - a1 * a1
        if 3 * a1 * a1 < n:
            break
        for a2 in range(min(a1, math.isqrt(rest)), -1, -1):
            r3 = rest - a2 * a2
            if 2 * a2 * a2 < rest:
                break
            a3 = math.isqrt(r3)
            if a3 * a3 == r3:
                return a1, a2, a3
    raise AssertionError(f"three_squares: no decomposition found for {n}")
