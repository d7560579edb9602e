"""Real exponents: when does a^x + b^x = c^x have a root x > 2?

With ``g(x) = (a/c)^x + (b/c)^x`` strictly decreasing, a root beyond 2
exists iff ``g(2) > 1``, i.e. iff ``c^2 < a^2 + b^2``; it is then unique.
Region tests use exact integers; floats appear only inside the bisection.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ._parallel import run_chunks, split_range
from .errors import PreconditionViolated

DEFAULT_TOL = 1e-12
MONOTONICITY_SAMPLES = 16


class Verdict(str, enum.Enum):
    SOLVABLE = "solvable-with-alpha"
    BOUNDARY = "boundary-alpha-two"
    UNSOLVABLE = "unsolvable"


def in_F(a: int, b: int, c: int) -> bool:
    return 0 < a < b < c and c * c < a * a + b * b


@dataclass(frozen=True)
class FTriple:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not in_F(self.a, self.b, self.c):
            raise PreconditionViolated(f"{(self.a, self.b, self.c)} is not in F")

    def g(self, x: float) -> float:
        return (self.a / self.c) ** x + (self.b / self.c) ** x


@dataclass(frozen=True)
class RootSolveResult:
    alpha: float
    # |g(alpha) - 1|, i.e. |a^alpha + b^alpha - c^alpha| / c^alpha
    residual: float
    bracket: tuple[float, float]
    iterations: int
    nearest_integer: int
    integer_distance: float
    trace: tuple[tuple[float, float], ...] = field(default=(), repr=False)

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


@dataclass(frozen=True)
class NoRootCertificate:
    a: int
    b: int
    c: int
    g_at_two: Fraction

    @property
    def certified(self) -> bool:
        return self.g_at_two < 1

    def __bool__(self) -> bool:
        return self.certified


@dataclass(frozen=True)
class SolvabilityResult:
    verdict: Verdict
    root: RootSolveResult | None = None
    certificate: NoRootCertificate | None = None


def solve_exponent(t: FTriple, tol: float = DEFAULT_TOL, *, trace: bool = False) -> RootSolveResult:
    """Bisect for the unique alpha > 2 with ``(a/c)^alpha + (b/c)^alpha = 1``."""
    if not isinstance(t, FTriple):
        t = FTriple(*t)
    if tol <= 0:
        raise PreconditionViolated(f"tol must be positive, got {tol}")
    lo, hi = 2.0, 4.0
    while t.g(hi) >= 1.0:
        lo, hi = hi, 2 * hi
    _check_decreasing(t, 2.0, hi)
    steps = [(lo, hi)] if trace else []
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if t.g(mid) >= 1.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
        if trace:
            steps.append((lo, hi))
    alpha = 0.5 * (lo + hi)
    nearest = round(alpha)
    return RootSolveResult(
        alpha=alpha,
        residual=abs(t.g(alpha) - 1.0),
        bracket=(lo, hi),
        iterations=iterations,
        nearest_integer=nearest,
        integer_distance=abs(alpha - nearest),
        trace=tuple(steps),
    )


def _check_decreasing(t: FTriple, lo: float, hi: float) -> None:
    xs = [lo + (hi - lo) * i / MONOTONICITY_SAMPLES for i in range(MONOTONICITY_SAMPLES + 1)]
    gs = [t.g(x) for x in xs]
    if any(g1 <= g2 for g1, g2 in zip(gs, gs[1:])):
        raise AssertionError(f"g is not strictly decreasing on [{lo}, {hi}] for {t}")


def certify_no_root(a: int, b: int, c: int) -> NoRootCertificate:
    """Certificate that ``a^x + b^x = c^x`` has no root x > 2.

    ``g(2) = (a^2 + b^2)/c^2 < 1`` and g decreases, so g stays below 1.
    """
    if not (0 < a < b < c):
        raise PreconditionViolated(f"need 0 < a < b < c, got {(a, b, c)}")
    if c * c <= a * a + b * b:
        raise PreconditionViolated(f"{(a, b, c)} has c^2 <= a^2 + b^2")
    return NoRootCertificate(a, b, c, Fraction(a * a + b * b, c * c))


def solvability(x: int, y: int, z: int, tol: float = DEFAULT_TOL) -> SolvabilityResult:
    if not (0 < x < y < z):
        raise PreconditionViolated(f"need 0 < x < y < z, got {(x, y, z)}")
    lhs, rhs = x * x + y * y, z * z
    if rhs == lhs:
        return SolvabilityResult(Verdict.BOUNDARY)
    if rhs < lhs:
        return SolvabilityResult(Verdict.SOLVABLE, root=solve_exponent(FTriple(x, y, z), tol))
    return SolvabilityResult(Verdict.UNSOLVABLE, certificate=certify_no_root(x, y, z))


def f_triples(cmax: int, cmin: int = 1):
    """Every member of F with ``cmin <= c <= cmax``, ordered by (c, a, b)."""
    for c in range(max(cmin, 3), cmax + 1):
        for a in range(1, c):
            for b in range(a + 1, c):
                if c * c < a * a + b * b:
                    yield FTriple(a, b, c)


@dataclass(frozen=True)
class ProximityReport:
    instances: int
    considered: int
    min_distance: float
    witness: dict | None
    flagged: list[dict]

    @property
    def vacuous(self) -> bool:
        return self.considered == 0


def _proximity_chunk(c_lo: int, c_hi: int, threshold: float) -> tuple[int, int, float, dict | None, list[dict]]:
    count = considered = 0
    best, arg, flagged = math.inf, None, []
    for t in f_triples(c_hi, c_lo):
        count += 1
        root = solve_exponent(t)
        if root.nearest_integer < 3:
            continue
        considered += 1
        info = {"a": t.a, "b": t.b, "c": t.c, "alpha": root.alpha, "distance": root.integer_distance}
        if root.integer_distance < best:
            best, arg = root.integer_distance, info
        if root.integer_distance < threshold:
            flagged.append(info)
    return count, considered, best, arg, flagged


def integer_proximity_scan(cmax: int, threshold: float = 1e-6, *, jobs: int = 1) -> ProximityReport:
    """How close does any root alpha come to an integer >= 3, for c <= cmax?"""
    tasks = [(lo, hi, threshold) for lo, hi in split_range(3, cmax, max(1, jobs))]
    count = considered = 0
    best, arg, flagged = math.inf, None, []
    for n, k, b, w, f in run_chunks(_proximity_chunk, tasks, jobs):
        count += n
        considered += k
        flagged.extend(f)
        if b < best:
            best, arg = b, w
    return ProximityReport(count, considered, best, arg, flagged)


@dataclass(frozen=True)
class ConstantScan:
    instances: int
    min_e: float
    witness_e: tuple[int, int, int] | None
    min_pi: float
    witness_pi: tuple[int, int, int] | None

    @property
    def vacuous(self) -> bool:
        return self.instances == 0


def special_constant_scan(cmax: int) -> ConstantScan:
    """Smallest ``|a^e + b^e - c^e|`` and ``|a^pi + b^pi - c^pi|`` over F, c <= cmax."""
    count = 0
    best = {math.e: (math.inf, None), math.pi: (math.inf, None)}
    for t in f_triples(cmax):
        count += 1
        for s in best:
            r = abs(t.a**s + t.b**s - t.c**s)
            if r < best[s][0]:
                best[s] = (r, (t.a, t.b, t.c))
    (me, we), (mp, wp) = best[math.e], best[math.pi]
    return ConstantScan(count, me, we, mp, wp)


def _flt_chunk(n: int, z_max: int, x_lo: int, x_hi: int) -> list[tuple[int, int, int, int]]:
    pw = [i**n for i in range(z_max + 1)]
    roots = {v: i for i, v in enumerate(pw)}
    hits = []
    for x in range(x_lo, x_hi + 1):
        for y in range(x, z_max):
            if math.gcd(x, y) != 1:
                continue
            z = roots.get(pw[x] + pw[y])
            if z is not None:
                hits.append((x, y, z, n))
    return hits


def power_sum_hits(n: int, zmax: int, *, jobs: int = 1) -> list[tuple[int, int, int, int]]:
    """All coprime ``x <= y < z <= zmax`` with ``x^n + y^n = z^n``, as (x, y, z, n)."""
    tasks = [(n, zmax, lo, hi) for lo, hi in split_range(1, zmax - 1, max(1, jobs))]
    return [h for chunk in run_chunks(_flt_chunk, tasks, jobs) for h in chunk]


def flt_desk_check(nmax: int, zmax: int, *, jobs: int = 1) -> tuple[int, int, int, int] | None:
    """Exhaustive exact search for ``x^n + y^n = z^n``, 3 <= n <= nmax."""
    for n in range(3, nmax + 1):
        hits = power_sum_hits(n, zmax, jobs=jobs)
        if hits:
            return hits[0]
    return None
