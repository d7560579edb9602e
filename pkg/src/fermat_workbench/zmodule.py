"""Sublattices of Z^3 and Z^4 cut out by one linear relation, and wedge tests.

A wedge of n vectors in Z^n is represented by their determinant, so
``l0 ^ l1 ^ m == 0`` iff the three vectors are dependent over Q.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ._parallel import run_chunks, split_range
from .arith import pairwise_coprime, xgcd
from .errors import PreconditionViolated

Vec3 = tuple[int, int, int]
Vec4 = tuple[int, int, int, int]


class Cor23Verdict(str, enum.Enum):
    VACUOUS = "vacuous"
    OUTSIDE_L = "at-least-one-outside-L"
    # both vectors in L with vanishing wedge; would refute the theorem
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class SParams:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not in_S(self.a, self.b, self.c):
            raise PreconditionViolated(f"{(self.a, self.b, self.c)} is not in S")

    def power(self, k: int) -> Vec3:
        return (self.a**k, self.b**k, self.c**k)


@dataclass(frozen=True)
class S4Params:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        vals = (self.a, self.b, self.c, self.d)
        if min(vals) < 1 or not pairwise_coprime(*vals):
            raise PreconditionViolated(f"{vals} must be positive and pairwise coprime")
        if len(set(vals)) < 4:
            raise PreconditionViolated(f"{vals} has repeated coefficients (degenerate)")

    def relation(self, v: Sequence[int]) -> int:
        return self.a * v[0] + self.b * v[1] + self.c * v[2] - self.d * v[3]

    def power(self, k: int) -> Vec4:
        return (self.a**k, self.b**k, self.c**k, self.d**k)


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise PreconditionViolated("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q, by the largest nonvanishing minor built from leading rows."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    for r in range(min(len(rows), ncols), 0, -1):
        for ri in combinations(range(len(rows)), r):
            for ci in combinations(range(ncols), r):
                if det([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return r
    return 0


def in_S(a: int, b: int, c: int) -> bool:
    return 0 < a < b < c and math.gcd(a, b) == 1 and math.gcd(a * b, c) == 1


def in_L(v: Sequence[int], s: SParams) -> bool:
    x, y, z = v
    return s.a * x + s.b * y - s.c * z == 0


def wedge3(v0: Sequence[int], v1: Sequence[int], v2: Sequence[int]) -> int:
    return det([v0, v1, v2])


def wedge4(v0: Sequence[int], v1: Sequence[int], v2: Sequence[int], v3: Sequence[int]) -> int:
    return det([v0, v1, v2, v3])


def _independent(*vecs: Sequence[int]) -> bool:
    return rank(vecs) == len(vecs)


def kernel_basis(row: Sequence[int]) -> list[tuple[int, ...]]:
    """Z-basis of ``{v : row . v = 0}`` by unimodular column operations.

    Columns of U are combined pairwise with extended gcd until
    ``row @ U == (g, 0, ..., 0)``; the remaining columns span the kernel.
    """
    r = list(row)
    n = len(r)
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # U[i] is column i
    lead = next((i for i, t in enumerate(r) if t != 0), None)
    if lead is None:
        return [tuple(col) for col in U]
    if lead != 0:
        r[0], r[lead] = r[lead], r[0]
        U[0], U[lead] = U[lead], U[0]
    for j in range(1, n):
        if r[j] == 0:
            continue
        g, s, t = xgcd(r[0], r[j])
        p, q = r[j] // g, r[0] // g
        c0 = [s * x + t * y for x, y in zip(U[0], U[j])]
        cj = [-p * x + q * y for x, y in zip(U[0], U[j])]
        U[0], U[j] = c0, cj
        r[0], r[j] = g, 0
    return [tuple(col) for col in U[1:]]


def _gauss_reduce(v1: tuple[int, ...], v2: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lagrange-Gauss reduction of a rank-2 lattice basis (exact)."""

    def dot(x, y):
        return sum(i * j for i, j in zip(x, y))

    if dot(v1, v1) > dot(v2, v2):
        v1, v2 = v2, v1
    while True:
        n1 = dot(v1, v1)
        # nearest integer to dot(v1, v2) / n1
        mu = (2 * dot(v1, v2) + n1) // (2 * n1)
        v2 = tuple(y - mu * x for x, y in zip(v1, v2))
        if dot(v2, v2) >= n1:
            return v1, v2
        v1, v2 = v2, v1


def basis_of_L(s: SParams) -> tuple[Vec3, Vec3]:
    """Reduced Z-basis of the rank-2 lattice ``a x + b y - c z = 0``."""
    k1, k2 = kernel_basis((s.a, s.b, -s.c))
    v1, v2 = _gauss_reduce(k1, k2)
    return v1, v2  # type: ignore[return-value]


def thm22_check(l0: Vec3, l1: Vec3, s: SParams, k: int) -> bool:
    """``l0 ^ l1 ^ (a^k, b^k, c^k) != 0`` for independent members of L."""
    if k < 2:
        raise PreconditionViolated(f"k must be >= 2, got {k}")
    if not (in_L(l0, s) and in_L(l1, s)):
        raise PreconditionViolated("l0 and l1 must lie in L")
    if not _independent(l0, l1):
        raise PreconditionViolated("l0 and l1 are linearly dependent")
    return wedge3(l0, l1, s.power(k)) != 0


def cor23_check(m0: Vec3, m1: Vec3, s: SParams, k: int) -> Cor23Verdict:
    if k < 2:
        raise PreconditionViolated(f"k must be >= 2, got {k}")
    if not _independent(m0, m1):
        raise PreconditionViolated("m0 and m1 are linearly dependent")
    if wedge3(m0, m1, s.power(k)) != 0:
        return Cor23Verdict.VACUOUS
    if in_L(m0, s) and in_L(m1, s):
        return Cor23Verdict.CONTRADICTION
    return Cor23Verdict.OUTSIDE_L


def euler_check(l0: Vec4, l1: Vec4, l2: Vec4, p: S4Params, k: int) -> bool:
    """Whether ``l0 ^ l1 ^ l2 ^ (a^k, b^k, c^k, d^k)`` is nonzero."""
    if k < 3:
        raise PreconditionViolated(f"k must be >= 3, got {k}")
    for v in (l0, l1, l2):
        if p.relation(v) != 0:
            raise PreconditionViolated(f"{v} does not satisfy ax + by + cz - dt = 0")
    if not _independent(l0, l1, l2):
        raise PreconditionViolated("l0, l1, l2 are linearly dependent")
    return wedge4(l0, l1, l2, p.power(k)) != 0


def random_S(rng: random.Random, max_entry: int = 100) -> SParams:
    while True:
        a, b, c = sorted(rng.sample(range(1, max_entry + 1), 3))
        if in_S(a, b, c):
            return SParams(a, b, c)


def random_L_pair(rng: random.Random, s: SParams, max_entry: int = 10**6) -> tuple[Vec3, Vec3]:
    """Two independent members of L with entries bounded by ``max_entry``."""
    e1, e2 = basis_of_L(s)
    scale = max(1, max_entry // (2 * max(map(abs, e1 + e2))))
    while True:
        coeffs = [rng.randint(-scale, scale) for _ in range(4)]
        if coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2] == 0:
            continue
        l0 = tuple(coeffs[0] * x + coeffs[1] * y for x, y in zip(e1, e2))
        l1 = tuple(coeffs[2] * x + coeffs[3] * y for x, y in zip(e1, e2))
        if max(map(abs, l0 + l1)) <= max_entry:
            return l0, l1  # type: ignore[return-value]


@dataclass(frozen=True)
class SweepResult:
    samples: int
    failures: list[dict]
    seed: int


def thm22_sweep(samples: int, seed: int = 0, *, max_s: int = 100, max_l: int = 10**6) -> SweepResult:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        s = random_S(rng, max_s)
        l0, l1 = random_L_pair(rng, s, max_l)
        k = rng.randint(2, 6)
        if not thm22_check(l0, l1, s, k):
            failures.append({"s": (s.a, s.b, s.c), "l0": l0, "l1": l1, "k": k})
    return SweepResult(samples, failures, seed)


def _euler_chunk(n: int, bound: int, u_lo: int, u_hi: int, coprime: bool) -> list[tuple[int, int, int, int]]:
    pw = [i**n for i in range(bound + 1)]
    pair_sums: dict[int, list[tuple[int, int]]] = {}
    for x in range(1, bound + 1):
        for y in range(x, bound + 1):
            if not coprime or math.gcd(x, y) == 1:
                pair_sums.setdefault(pw[x] + pw[y], []).append((x, y))
    hits = []
    for u in range(u_hi, u_lo - 1, -1):
        un = pw[u]
        for z in range(1, u):
            if coprime and math.gcd(z, u) != 1:
                continue
            # x^n + y^n = u^n - z^n with x <= y <= z
            for x, y in pair_sums.get(un - pw[z], ()):
                if y <= z and (not coprime or pairwise_coprime(x, y, z, u)):
                    hits.append((x, y, z, u))
    return hits


def three_power_solutions(
    n: int, bound: int, *, coprime: bool = True, jobs: int = 1
) -> list[tuple[int, int, int, int]]:
    """``x <= y <= z < u <= bound`` with ``x^n + y^n + z^n = u^n``, sorted by (u, x, y, z).

    With ``coprime`` (the default) only pairwise coprime quadruples count.
    """
    tasks = [(n, bound, lo, hi, coprime) for lo, hi in split_range(2, bound, max(1, jobs))]
    hits = [h for chunk in run_chunks(_euler_chunk, tasks, jobs) for h in chunk]
    return sorted(hits, key=lambda t: (t[3], t[0], t[1], t[2]))


def euler_counterexample_scan(n: int, bound: int, *, jobs: int = 1) -> tuple[int, int, int, int] | None:
    if n < 4:
        raise PreconditionViolated(f"n must be >= 4, got {n}")
    hits = three_power_solutions(n, bound, jobs=jobs)
    return hits[0] if hits else None
