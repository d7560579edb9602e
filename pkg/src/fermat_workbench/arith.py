"""Exact integer utilities: gcd, squares, factorization, residues.

Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import reduce

from .errors import BoundExceeded, NotSquareFree, PreconditionViolated

#: Largest magnitude accepted by :func:`factorize`. Module-level so callers
#: can raise it for a session; per-call ``bound=`` overrides it.
FACTOR_BOUND: int = 2**64

TRIAL_DIVISION_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses, exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if any(e < 1 for _, e in self.factors) or primes != sorted(set(primes)):
            raise ValueError(f"malformed factorization {self.factors!r}")
        if math.prod(p**e for p, e in self.factors) != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@dataclass(frozen=True)
class SquareFreeDecomp:
    """``value == core * cofactor**2`` with ``core`` square-free."""

    core: int
    cofactor: int

    @property
    def value(self) -> int:
        return self.core * self.cofactor**2


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def gcd_many(*values: int) -> int:
    return reduce(math.gcd, values, 0)


def pairwise_coprime(*values: int) -> bool:
    return all(
        math.gcd(values[i], values[j]) == 1
        for i in range(len(values))
        for j in range(i + 1, len(values))
    )


def is_perfect_square(n: int) -> int | None:
    """Return ``r`` with ``r*r == n``, or None when ``n`` is not a square."""
    if n < 0:
        raise PreconditionViolated(f"is_perfect_square needs n >= 0, got {n}")
    r = math.isqrt(n)
    return r if r * r == n else None


def integer_root(n: int, k: int) -> int | None:
    """Exact ``k``-th root of ``n >= 0`` if it is an integer."""
    if n < 0 or k < 1:
        raise PreconditionViolated(f"integer_root needs n >= 0, k >= 1; got {n}, {k}")
    if n < 2 or k == 1:
        return n
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**k == n else None


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Seeded from n so repeated calls agree.
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split_large(d, out)
    _split_large(n // d, out)


def _check_bound(n: int, bound: int | None) -> None:
    limit = FACTOR_BOUND if bound is None else bound
    if abs(n) > limit:
        raise BoundExceeded(f"{n} exceeds factorization bound {limit}")


def factorize(n: int, *, bound: int | None = None) -> Factorization:
    """Complete prime factorization of ``n >= 1``.

    Trial division up to 10**6, then Pollard rho on whatever cofactor is
    left. Raises BoundExceeded above the configured bound.
    """
    if n < 1:
        raise PreconditionViolated(f"factorize needs n >= 1, got {n}")
    _check_bound(n, bound)
    found: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    p, step = 5, 2
    while p <= TRIAL_DIVISION_LIMIT and p * p <= m:
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
        p += step
        step = 6 - step
    if m > 1:
        if p * p > m:
            found[m] = found.get(m, 0) + 1
        else:
            _split_large(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def squarefree_decompose(n: int, *, bound: int | None = None) -> SquareFreeDecomp:
    core = cofactor = 1
    for p, e in factorize(n, bound=bound).factors:
        cofactor *= p ** (e // 2)
        if e % 2:
            core *= p
    return SquareFreeDecomp(core, cofactor)


def is_squarefree(n: int, *, bound: int | None = None) -> bool:
    return all(e == 1 for _, e in factorize(n, bound=bound).factors)


def is_prime_power(n: int, *, bound: int | None = None) -> tuple[int, int] | None:
    """``(p, e)`` when ``n == p**e`` for a prime ``p``; 1 is not a prime power."""
    factors = factorize(n, bound=bound).factors
    if len(factors) != 1:
        return None
    return factors[0]


def is_qr(t: int, m: int) -> bool:
    """Whether ``x*x == t (mod m)`` is solvable, for square-free ``m``.

    Decided prime by prime with Euler's criterion; solvability mod a
    square-free modulus is the conjunction over its primes (CRT).
    """
    if m < 1:
        raise PreconditionViolated(f"is_qr needs a positive modulus, got {m}")
    factors = factorize(m).factors
    for p, e in factors:
        if e > 1:
            raise NotSquareFree(f"modulus {m} is divisible by {p}^2")
    for p, _ in factors:
        r = t % p
        if p == 2 or r == 0:
            continue
        if pow(r, (p - 1) // 2, p) != 1:
            return False
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
