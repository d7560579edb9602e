"""Legendre's equation a x^2 + b y^2 = c z^2 and the reduction of Fermat's equation to it."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .arith import (
    is_perfect_square,
    is_prime_power,
    is_qr,
    is_squarefree,
    pairwise_coprime,
    squarefree_decompose,
)
from .errors import DegenerateForm, PreconditionViolated, SearchExhausted


class Point(NamedTuple):
    """Nonnegative solution ``(x, y, z)``, not all zero."""

    x: int
    y: int
    z: int


@dataclass(frozen=True)
class Normalization:
    original: tuple[int, int, int]
    square_cofactors: tuple[int, int, int]
    # (which pair, shared factor) in the order the migrations were applied
    migrations: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class LegendreForm:
    a: int
    b: int
    c: int
    provenance: Normalization | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise DegenerateForm(f"coefficients must be positive: {self.coefficients}")
        if not all(is_squarefree(t) for t in self.coefficients):
            raise PreconditionViolated(f"coefficients must be square-free: {self.coefficients}")
        if not pairwise_coprime(*self.coefficients):
            raise PreconditionViolated(f"coefficients must be pairwise coprime: {self.coefficients}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def holds(self, x: int, y: int, z: int) -> bool:
        return self.a * x * x + self.b * y * y == self.c * z * z

    def holzer_bounds(self) -> tuple[int, int, int]:
        a, b, c = self.coefficients
        return (math.isqrt(b * c), math.isqrt(a * c), math.isqrt(a * b))


@dataclass(frozen=True)
class Solvability:
    form: LegendreForm
    conditions: dict[str, bool]

    @property
    def solvable(self) -> bool:
        return all(self.conditions.values())

    def __bool__(self) -> bool:
        return self.solvable


@dataclass(frozen=True)
class FermatReduction:
    form: LegendreForm
    d1: int
    d2: int
    d3: int
    k: int
    n: int
    point: tuple[int, int, int]
    on_form: bool
    fermat_holds: bool


@dataclass(frozen=True)
class AbelFlag:
    solution: Point
    prime_powers: dict[str, tuple[int, int]]


@dataclass(frozen=True)
class FreyCurve:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 for y^2 = x(x - a^n)(x + b^n)."""

    a: int
    b: int
    c: int
    n: int
    a2: int
    a4: int
    a6: int
    discriminant: int
    fermat_holds: bool

    @property
    def roots(self) -> tuple[int, int, int]:
        return (0, self.a**self.n, -(self.b**self.n))


def normalize(a0: int, b0: int, c0: int) -> LegendreForm:
    """Reduce ``a0 x^2 + b0 y^2 = c0 z^2`` to an equivalent Legendre form.

    Square parts are absorbed into the variables. A factor ``g`` shared by
    two coefficients is moved across: e.g. ``g | a, b`` forces ``g | z``,
    so ``(a, b, c) -> (a/g, b/g, c g)``. Repeats until pairwise coprime.
    """
    if min(a0, b0, c0) < 1:
        raise DegenerateForm(f"coefficients must be positive: {(a0, b0, c0)}")
    decomps = [squarefree_decompose(t) for t in (a0, b0, c0)]
    a, b, c = (d.core for d in decomps)
    migrations: list[tuple[str, int]] = []
    while True:
        g = math.gcd(a, b, c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
            migrations.append(("abc", g))
            continue
        g = math.gcd(a, b)
        if g > 1:
            a, b, c = a // g, b // g, c * g
            migrations.append(("ab", g))
        elif (g := math.gcd(a, c)) > 1:
            a, b, c = a // g, b * g, c // g
            migrations.append(("ac", g))
        elif (g := math.gcd(b, c)) > 1:
            a, b, c = a * g, b // g, c // g
            migrations.append(("bc", g))
        else:
            break
        a, b, c = (squarefree_decompose(t).core for t in (a, b, c))
    prov = Normalization((a0, b0, c0), tuple(d.cofactor for d in decomps), tuple(migrations))
    return LegendreForm(a, b, c, prov)


def is_solvable(form: LegendreForm) -> Solvability:
    """Legendre's criterion: bc is a square mod a, ac mod b, and -ab mod c."""
    a, b, c = form.coefficients
    return Solvability(
        form,
        {
            "bc_qr_mod_a": is_qr(b * c, a),
            "ac_qr_mod_b": is_qr(a * c, b),
            "neg_ab_qr_mod_c": is_qr(-a * b, c),
        },
    )


def holzer_search(form: LegendreForm) -> Point | None:
    """Exhaustive search inside Holzer's box; independent of the residue test.

    Returns the lexicographically smallest primitive nonnegative solution.
    """
    a, b, c = form.coefficients
    xmax, ymax, zmax = form.holzer_bounds()
    for x in range(xmax + 1):
        ax2 = a * x * x
        for y in range(ymax + 1):
            if x == 0 and y == 0:
                continue
            s = ax2 + b * y * y
            if s % c:
                continue
            z = is_perfect_square(s // c)
            if z is not None and z <= zmax and math.gcd(x, y, z) == 1:
                return Point(x, y, z)
    return None


def find_solution(form: LegendreForm) -> Point | None:
    sol = holzer_search(form)
    solvable = is_solvable(form).solvable
    if solvable and sol is None:
        raise SearchExhausted(f"{form.coefficients} passes the residue test but Holzer search failed")
    if sol is not None and not solvable:
        raise AssertionError(f"{form.coefficients} fails the residue test yet has solution {sol}")
    return sol


def enumerate_solutions(form: LegendreForm, bound: int) -> list[Point]:
    """Primitive nonnegative solutions with every coordinate <= bound, sorted."""
    a, b, c = form.coefficients
    out = []
    for x in range(bound + 1):
        for y in range(bound + 1):
            if x == 0 and y == 0:
                continue
            s = a * x * x + b * y * y
            if s % c:
                continue
            z = is_perfect_square(s // c)
            if z is not None and z <= bound and math.gcd(x, y, z) == 1:
                out.append(Point(x, y, z))
    return out


def fermat_to_legendre(a: int, b: int, c: int, n: int) -> FermatReduction:
    """Attach to ``a^n + b^n = c^n`` the form ``alpha x^2 + beta y^2 = gamma z^2``.

    With ``a = alpha d1^2`` etc. and ``k = (n - 1)/2``, the point
    ``(alpha^k d1^n, beta^k d2^n, gamma^k d3^n)`` lies on the form exactly
    when ``a^n + b^n = c^n``, because ``alpha x^2 = a^n``.
    """
    if n < 3 or n % 2 == 0:
        raise PreconditionViolated(f"n must be odd and >= 3, got {n}")
    if min(a, b, c) < 1 or not pairwise_coprime(a, b, c):
        raise PreconditionViolated(f"need pairwise coprime positive a, b, c; got {(a, b, c)}")
    da, db, dc = (squarefree_decompose(t) for t in (a, b, c))
    form = LegendreForm(da.core, db.core, dc.core)
    k = (n - 1) // 2
    point = (
        da.core**k * da.cofactor**n,
        db.core**k * db.cofactor**n,
        dc.core**k * dc.cofactor**n,
    )
    on_form = form.holds(*point)
    fermat = a**n + b**n == c**n
    if on_form != fermat:
        raise AssertionError("reduction equivalence broken")
    return FermatReduction(form, da.cofactor, db.cofactor, dc.cofactor, k, n, point, on_form, fermat)


def thm14_scan(form: LegendreForm, n: int, dbound: int) -> tuple[int, int, int] | None:
    """Look for ``(d1, d2, d3)`` reducing a point on ``form`` to a Fermat solution.

    Checks ``(alpha d1^2)^n + (beta d2^2)^n == (gamma d3^2)^n`` over
    pairwise coprime bases with every ``d <= dbound``. Returns the first
    counterexample, which would contradict Fermat's theorem.
    """
    if n < 3 or n % 2 == 0:
        raise PreconditionViolated(f"n must be odd and >= 3, got {n}")
    al, be, ga = form.coefficients
    rhs = {}
    for d3 in range(1, dbound + 1):
        rhs.setdefault((ga * d3 * d3) ** n, d3)
    for d1 in range(1, dbound + 1):
        A = al * d1 * d1
        An = A**n
        for d2 in range(1, dbound + 1):
            B = be * d2 * d2
            if math.gcd(A, B) != 1:
                continue
            d3 = rhs.get(An + B**n)
            if d3 is not None and pairwise_coprime(A, B, ga * d3 * d3):
                return (d1, d2, d3)
    return None


def abel_scan(form: LegendreForm, bound: int) -> list[AbelFlag]:
    """Solutions (xyz != 1) where some coordinate is a prime power.

    This reports on the generalized Abel statement; small forms such as
    x^2 + y^2 = 2 z^2 already produce flagged solutions like (7, 1, 5).
    """
    flags = []
    for sol in enumerate_solutions(form, bound):
        if sol.x * sol.y * sol.z == 1:
            continue
        hits = {}
        for name, value in zip("xyz", sol):
            if value > 1 and (pp := is_prime_power(value)) is not None:
                hits[name] = pp
        if hits:
            flags.append(AbelFlag(sol, hits))
    return flags


def frey_curve(a: int, b: int, c: int, n: int) -> FreyCurve:
    """Expanded Frey curve for ``(a, b, c, n)``; nothing about modularity."""
    if n < 3:
        raise PreconditionViolated(f"n must be >= 3, got {n}")
    if min(a, b, c) < 1 or not pairwise_coprime(a, b, c):
        raise PreconditionViolated(f"need pairwise coprime positive a, b, c; got {(a, b, c)}")
    A, B = a**n, b**n
    disc = 16 * (A * B * (A + B)) ** 2
    return FreyCurve(a, b, c, n, B - A, -A * B, 0, disc, A + B == c**n)
