"""Brute-force reference implementations, deliberately naive.

None of these import from fermat_workbench.
"""

from fractions import Fraction
from itertools import permutations
from math import gcd


def squares_mod(m):
    return {x * x % m for x in range(m)}


def qr_exhaustive(t, m):
    return t % m in squares_mod(m)


def divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend({d, n // d})
        d += 1
    return sorted(out)


def trial_factor(n):
    out, p = [], 2
    while n > 1:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    return out


def is_squarefree_naive(n):
    return all(n % (d * d) for d in range(2, n + 1) if d * d <= n)


def perm_sign(p):
    sign, seen = 1, list(p)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def monic_quadratic_integer_roots(s, t):
    """Integer roots of x^2 + s x + t with t != 0, by testing divisors of |t|."""
    roots = set()
    for d in divisors(abs(t)):
        for r in (d, -d):
            if r * r + s * r + t == 0:
                roots.add(r)
    return roots


def cubic_discriminant(a, b, c, d):
    return 18 * a * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * a * c**3 - 27 * a * a * d * d


def primitive_triples_brute(limit):
    out = []
    squares = {z * z: z for z in range(1, limit + 1)}
    for x in range(1, limit + 1):
        for y in range(x + 1, limit + 1):
            z = squares.get(x * x + y * y)
            if z is not None and gcd(x, gcd(y, z)) == 1:
                out.append((x, y, z))
    return sorted(out)


def g_exact(a, b, c, k):
    """(a/c)^k + (b/c)^k for integer k as an exact fraction."""
    return Fraction(a**k + b**k, c**k)
