"""Solution families of X^(2n) + 4Y^n = Z^2 and the Pythagorean triples they induce.

Every solution ``(X, Y, Z)`` of ``X**(2n) + 4*Y**n == Z**2`` gives the
triple ``(Z*X**n, 2*Y**n, X**(2n) + 2*Y**n)``. For ``n = 1, 2`` the
solutions are parametrized by coprime generators ``u, v`` of opposite
parity; for ``n >= 3`` a solution would contradict Fermat's theorem, so
the scans here are expected to come back empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._parallel import run_chunks, split_range
from .arith import is_perfect_square
from .errors import PreconditionViolated

VARIANT_KINDS = ("minus12", "plus12", "minus2m")
# "plus6" names the minus12 family by its u^2 + 6v^2 generator form.
_KIND_ALIASES = {"plus6": "minus12", "plus-6-form": "minus12"}


@dataclass(frozen=True, order=True)
class Triple:
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 1:
            raise PreconditionViolated(f"triple components must be positive: {self}")

    def is_pythagorean(self) -> bool:
        return self.x**2 + self.y**2 == self.z**2

    def is_primitive(self) -> bool:
        return math.gcd(self.x, self.y, self.z) == 1


@dataclass(frozen=True)
class FamilySolution:
    X: int
    Y: int
    Z: int
    n: int
    u: int | None = None
    v: int | None = None

    def __post_init__(self) -> None:
        if not check_family_identity(self.X, self.Y, self.Z, self.n):
            raise ValueError(f"{self} does not satisfy X^2n + 4Y^n = Z^2")
        if math.gcd(self.X, 2 * self.Y) != 1:
            raise ValueError(f"{self} violates gcd(X, 2Y) = 1")
        if self.u is not None and not _valid_generators(self.u, self.v):
            raise ValueError(f"bad generators u={self.u}, v={self.v}")

    @property
    def triple(self) -> tuple[int, int, int]:
        """The induced Pythagorean triple (legs in construction order)."""
        xn, yn = self.X**self.n, self.Y**self.n
        return (self.Z * xn, 2 * yn, xn * xn + 2 * yn)


@dataclass(frozen=True)
class Reducibility:
    reducible: bool
    discriminant: int
    roots: tuple[int, int] | None
    even_a: bool


def _valid_generators(u: int | None, v: int | None) -> bool:
    return u is not None and v is not None and math.gcd(u, v) == 1 and (u * v) % 2 == 0


def _require_generators(u: int, v: int) -> None:
    if not (u > v >= 1):
        raise PreconditionViolated(f"need u > v >= 1, got u={u}, v={v}")
    if not _valid_generators(u, v):
        raise PreconditionViolated(f"need gcd(u, v) = 1 and u*v even, got u={u}, v={v}")


def is_reducible(a: int, b: int, n: int) -> Reducibility:
    """Decide whether ``x^2 + a^n x - b^n`` splits over the rationals.

    The polynomial is monic, so it splits iff its discriminant
    ``a^(2n) + 4 b^n`` is a perfect square, and then both roots are
    integers.
    """
    if a == 0 or b <= 0 or n < 1:
        raise PreconditionViolated(f"need a != 0, b > 0, n >= 1; got a={a}, b={b}, n={n}")
    if math.gcd(a, b) != 1:
        raise PreconditionViolated(f"gcd(a, b) = {math.gcd(a, b)} != 1")
    an = a**n
    disc = an * an + 4 * b**n
    c = is_perfect_square(disc)
    roots = None
    if c is not None:
        roots = ((-an - c) // 2, (-an + c) // 2)
    return Reducibility(c is not None, disc, roots, a % 2 == 0)


def check_family_identity(X: int, Y: int, Z: int, n: int) -> bool:
    if min(X, Y, Z, n) < 1:
        raise PreconditionViolated("family identity takes positive integers")
    xn, yn = X**n, Y**n
    direct = xn * xn + 4 * yn == Z * Z
    rewritten = (Z * xn) ** 2 + (2 * yn) ** 2 == (xn * xn + 2 * yn) ** 2
    if direct != rewritten:
        raise AssertionError("algebraic identity failed; arithmetic is broken")
    return direct


def param_n1(u: int, v: int) -> FamilySolution:
    _require_generators(u, v)
    return FamilySolution(u - v, u * v, u + v, 1, u, v)


def param_n2(u: int, v: int) -> FamilySolution | None:
    """X = sqrt(u^2 - v^2), Y = uv, Z = u^2 + v^2 when the root is exact."""
    _require_generators(u, v)
    X = is_perfect_square(u * u - v * v)
    if X is None:
        return None
    return FamilySolution(X, u * v, u * u + v * v, 2, u, v)


def _search_family_chunk(n: int, x_lo: int, x_hi: int, bound_y: int) -> list[tuple[int, int, int]]:
    ypow = [y**n for y in range(bound_y + 1)]
    hits = []
    # gcd(X, 2Y) = 1 forces X odd
    start = x_lo if x_lo % 2 else x_lo + 1
    for X in range(start, x_hi + 1, 2):
        x2n = X ** (2 * n)
        for Y in range(1, bound_y + 1):
            if math.gcd(X, Y) != 1:
                continue
            Z = is_perfect_square(x2n + 4 * ypow[Y])
            if Z is not None:
                hits.append((X, Y, Z))
    return hits


def search_family(n: int, bound_x: int, bound_y: int, *, jobs: int = 1) -> list[FamilySolution]:
    """All solutions with ``X <= bound_x``, ``Y <= bound_y``, ordered by (X, Y)."""
    if n < 1:
        raise PreconditionViolated(f"n must be >= 1, got {n}")
    tasks = [(n, lo, hi, bound_y) for lo, hi in split_range(1, bound_x, max(1, jobs))]
    found = []
    for chunk in run_chunks(_search_family_chunk, tasks, jobs):
        found.extend(FamilySolution(X, Y, Z, n) for X, Y, Z in chunk)
    return found


@dataclass(frozen=True)
class VariantSolution:
    kind: str
    X: int
    Y: int
    Z: int
    m: int
    k: int
    sign: int

    def identity_holds(self) -> bool:
        return _variant_identity(self.X**2, self.Y, self.Z, self.m, self.k, self.sign)


def _variant_identity(x_sq: int, Y: int, Z: int, m: int, k: int, sign: int) -> bool:
    # (Z X^2)^2 + (2k Y^m)^2 == (X^4 + sign * 2k Y^m)^2
    t = 2 * k * Y**m
    return (Z * x_sq) ** 2 + t * t == (x_sq * x_sq + sign * t) ** 2


def _variant_terms(kind: str, u: int, v: int, m: int | None) -> tuple[int, int, int, int, int, int]:
    """``(X^2, Y, Z, m, k, sign)`` for the named family; X^2 may be a non-square."""
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in VARIANT_KINDS:
        raise PreconditionViolated(f"unknown variant kind {kind!r}")
    if u < 1 or v < 1 or math.gcd(u, v) != 1:
        raise PreconditionViolated(f"need coprime positive u, v; got u={u}, v={v}")
    if kind == "minus12":
        return u * u + 6 * v * v, u * v, u * u - 6 * v * v, 2, 6, -1
    if kind == "plus12":
        return u * u - 6 * v * v, u * v, u * u + 6 * v * v, 2, 6, 1
    if m is None or m < 3:
        raise PreconditionViolated("kind minus2m needs m >= 3")
    return u**m + v**m, u * v, u**m - v**m, m, 1, -1


def variant_identity_holds(kind: str, u: int, v: int, m: int | None = None) -> bool:
    """Check the family's defining identity with X^2 taken from the generators.

    This holds as a polynomial identity in ``u, v``, whether or not X^2 is
    a perfect square, so it is meaningful for every generator pair.
    """
    x_sq, Y, Z, m_, k, sign = _variant_terms(kind, u, v, m)
    return _variant_identity(x_sq, Y, Z, m_, k, sign)


def variant_solution(kind: str, u: int, v: int, m: int | None = None) -> VariantSolution | None:
    """Evaluate a variant parametrization; None unless X is integral and Z > 0.

    Kinds: ``minus12`` is (ZX^2)^2 + (12Y^2)^2 = (X^4 - 12Y^2)^2 with
    X^2 = u^2 + 6v^2, Z = u^2 - 6v^2; ``plus12`` swaps the signs;
    ``minus2m`` is (ZX^2)^2 + (2Y^m)^2 = (X^4 - 2Y^m)^2 with
    X^2 = u^m + v^m, Z = u^m - v^m.
    """
    x_sq, Y, Z, m_, k, sign = _variant_terms(kind, u, v, m)
    if x_sq <= 0 or Z <= 0:
        return None
    X = is_perfect_square(x_sq)
    if X is None:
        return None
    sol = VariantSolution(_KIND_ALIASES.get(kind, kind), X, Y, Z, m_, k, sign)
    if not sol.identity_holds():
        raise AssertionError(f"variant identity failed for {sol}")
    return sol


def scan_nonsquare_form(c1: int, c2: int, bound: int) -> tuple[int, int] | None:
    """First coprime ``(u, v)`` in ``[1, bound]^2`` with ``c1 u^2 + c2 v^2`` square.

    The whole grid is scanned. Pairs with ``u >= v`` (the generator
    convention) are preferred; within each half the order is (u, v).
    """
    fallback = None
    for u in range(1, bound + 1):
        cu = c1 * u * u
        for v in range(1, bound + 1):
            if math.gcd(u, v) != 1:
                continue
            if is_perfect_square(cu + c2 * v * v) is not None:
                if u >= v:
                    return (u, v)
                if fallback is None:
                    fallback = (u, v)
    return fallback


def enumerate_primitive_triples(limit: int) -> list[Triple]:
    """Primitive triples (legs sorted) with hypotenuse <= limit, via param_n1."""
    if limit < 5:
        raise PreconditionViolated(f"limit must be >= 5, got {limit}")
    seen = set()
    for u in range(2, math.isqrt(limit) + 1):
        for v in range(1, u):
            if u * u + v * v > limit:
                break
            if math.gcd(u, v) != 1 or (u * v) % 2:
                continue
            a, b, c = param_n1(u, v).triple
            seen.add(Triple(min(a, b), max(a, b), c))
    return sorted(seen)
