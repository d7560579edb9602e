"""Exact arithmetic in Z[i] and Z[sqrt 2], powers with quadratic-integer exponents.

Ring arithmetic is exact. Only powers ``x**(p + q*omega)`` with an
irrational part go through floating point, and every scan built on them
reports residuals rather than yes/no answers.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from functools import cmp_to_key
from numbers import Rational, Real
from typing import Iterable, Union

import numpy as np

from .arith import pairwise_coprime
from .errors import ExponentOverflow, NonPositiveInput, PreconditionViolated

SQRT2 = math.sqrt(2.0)
RING_TAGS = (-1, 2)


@dataclass(frozen=True, order=True)
class QuadInt:
    """``p + q*omega`` with ``omega**2 == D``; D = -1 is Z[i], D = 2 is Z[sqrt 2]."""

    p: int
    q: int = 0
    D: int = -1

    def __post_init__(self) -> None:
        if self.D not in RING_TAGS:
            raise PreconditionViolated(f"ring tag D must be -1 or 2, got {self.D}")

    def _coerce(self, other: object) -> QuadInt:
        if isinstance(other, QuadInt):
            if other.D != self.D:
                raise PreconditionViolated("cannot mix Z[i] and Z[sqrt 2] elements")
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.D)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> QuadInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.p + o.p, self.q + o.q, self.D)

    __radd__ = __add__

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.p, -self.q, self.D)

    def __sub__(self, other: object) -> QuadInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.p - o.p, self.q - o.q, self.D)

    def __rsub__(self, other: object) -> QuadInt:
        return -(self - other)

    def __mul__(self, other: object) -> QuadInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(
            self.p * o.p + self.D * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.D,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadInt:
        if not isinstance(n, int) or n < 0:
            raise PreconditionViolated("QuadInt powers take nonnegative integer exponents")
        result, base = QuadInt(1, 0, self.D), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.p, -self.q, self.D)

    def norm(self) -> int:
        return self.p * self.p - self.D * self.q * self.q

    def trace(self) -> int:
        return 2 * self.p

    def sign(self) -> int:
        """Exact sign of ``p + q*sqrt 2`` under the standard real embedding."""
        if self.D != 2:
            raise PreconditionViolated("sign is only defined on Z[sqrt 2]")
        p, q = self.p, self.q
        if p >= 0 and q >= 0 or p <= 0 and q <= 0:
            return (p > 0 or q > 0) - (p < 0 or q < 0)
        # mixed signs: compare p^2 with 2 q^2
        diff = p * p - 2 * q * q
        return (1 if diff > 0 else -1) * (1 if p > 0 else -1)

    def is_totally_positive(self) -> bool:
        return self.sign() > 0 and self.conj().sign() > 0

    def embed(self, which: int = 1) -> float:
        if self.D != 2:
            raise PreconditionViolated("real embeddings only exist for Z[sqrt 2]")
        return self.p + which * self.q * SQRT2

    def __str__(self) -> str:
        unit = "i" if self.D == -1 else "√2"
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f"{self.q}{unit}"
        return f"{self.p}{self.q:+}{unit}"


def conj(z: QuadInt) -> QuadInt:
    return z.conj()


def gaussian(p: int, q: int = 0) -> QuadInt:
    return QuadInt(p, q, -1)


def root2(p: int, q: int = 0) -> QuadInt:
    return QuadInt(p, q, 2)


def qpow(base: int, e: QuadInt) -> complex:
    """``base ** (p + q i)`` as ``base**p * exp(i q ln base)``."""
    if e.D != -1:
        raise PreconditionViolated("qpow takes a Gaussian-integer exponent")
    if base < 1:
        raise PreconditionViolated(f"base must be >= 1, got {base}")
    if base == 1:
        return complex(1.0, 0.0)
    try:
        modulus = float(base) ** e.p
    except OverflowError as exc:
        raise ExponentOverflow(f"{base}^{e.p} overflows a double") from exc
    theta = e.q * math.log(base)
    out = complex(modulus * math.cos(theta), modulus * math.sin(theta))
    if not cmath.isfinite(out):
        raise ExponentOverflow(f"{base}^({e}) is not finite")
    return out


def real_qpow(base: int, e: QuadInt, which: int = 1) -> float:
    """``base ** (p + q sqrt 2)`` under real embedding ``which`` (+1 or -1)."""
    if e.D != 2:
        raise PreconditionViolated("real_qpow takes a Z[sqrt 2] exponent")
    if base < 1:
        raise PreconditionViolated(f"base must be >= 1, got {base}")
    if base == 1:
        return 1.0
    try:
        return math.exp(e.embed(which) * math.log(base))
    except OverflowError as exc:
        raise ExponentOverflow(f"{base}^({e}) overflows a double") from exc


def conj_identity_residual(a: int, b: int, u: QuadInt, v: QuadInt) -> float:
    """``|conj(a^u + b^v) - (a^conj(u) + b^conj(v))|``."""
    lhs = (qpow(a, u) + qpow(b, v)).conjugate()
    rhs = qpow(a, u.conj()) + qpow(b, v.conj())
    return abs(lhs - rhs)


@dataclass(frozen=True)
class ConjSweep:
    samples: int
    seed: int
    max_residual: float
    worst: dict | None


def conj_identity_sweep(samples: int, seed: int = 0, *, max_base: int = 20, erange: int = 5) -> ConjSweep:
    rng = random.Random(seed)
    worst, worst_args = 0.0, None
    for _ in range(samples):
        a, b = rng.randint(1, max_base), rng.randint(1, max_base)
        u = gaussian(rng.randint(-erange, erange), rng.randint(-erange, erange))
        v = gaussian(rng.randint(-erange, erange), rng.randint(-erange, erange))
        r = conj_identity_residual(a, b, u, v)
        if worst_args is None or r > worst:
            worst, worst_args = r, {"a": a, "b": b, "u": u, "v": v}
    return ConjSweep(samples, seed, worst, worst_args)


@dataclass(frozen=True)
class ScanMinimum:
    """Smallest residual seen in a scan, or ``witness is None`` when vacuous."""

    minimum: float
    witness: dict | None
    evaluated: int

    @property
    def vacuous(self) -> bool:
        return self.witness is None


def _coprime_triples(xmax: int, *, pairwise: bool) -> list[tuple[int, int, int]]:
    out = []
    for x in range(1, xmax + 1):
        for y in range(1, xmax + 1):
            for z in range(1, xmax + 1):
                ok = pairwise_coprime(x, y, z) if pairwise else math.gcd(x, y, z) == 1
                if ok:
                    out.append((x, y, z))
    return out


def prop36_scan(xmax: int, prange: int) -> ScanMinimum:
    """Min of ``|x^(2+ip) + y^(2+iq) - z^(2+ir)|`` over coprime x, y, z <= xmax.

    ``p, q, r`` range over ``[-prange, prange]`` with ``pq != 0``. Ties
    go to the lexicographically smallest ``(x, y, z, p, q, r)``.
    """
    if xmax < 2 or prange < 1:
        return ScanMinimum(math.inf, None, 0)
    pq = np.array([t for t in range(-prange, prange + 1) if t != 0])
    rr = np.arange(-prange, prange + 1)
    logs = np.log(np.arange(1, xmax + 1, dtype=float))
    sq = np.arange(1, xmax + 1, dtype=float) ** 2
    # W[x-1, j] = x^(2 + i*e_j)
    Wpq = sq[:, None] * np.exp(1j * logs[:, None] * pq[None, :])
    Wr = sq[:, None] * np.exp(1j * logs[:, None] * rr[None, :])
    best, arg, count = math.inf, None, 0
    for x, y, z in _coprime_triples(xmax, pairwise=True):
        grid = np.abs(Wpq[x - 1][:, None, None] + Wpq[y - 1][None, :, None] - Wr[z - 1][None, None, :])
        count += grid.size
        idx = int(np.argmin(grid))
        val = float(grid.flat[idx])
        if val < best:
            i, j, k = np.unravel_index(idx, grid.shape)
            best = val
            arg = {"x": x, "y": y, "z": z, "p": int(pq[i]), "q": int(pq[j]), "r": int(rr[k])}
    return ScanMinimum(best, arg, count)


def _check_prop37_exponents(u: QuadInt, v: QuadInt, w: QuadInt) -> None:
    for e in (u, v, w):
        if e.D != 2:
            raise PreconditionViolated("exponents must lie in Z[sqrt 2]")
        if e.trace() <= 0:
            raise PreconditionViolated(f"exponent {e} needs e + conj(e) > 0")
    if u.q == 0 or v.q == 0:
        raise PreconditionViolated("need (u - conj u)(v - conj v) != 0")


def prop37_residual(coeffs: tuple[int, int, int], xyz: tuple[int, int, int], u: QuadInt, v: QuadInt, w: QuadInt) -> float:
    """``max(|a x^u - b y^v - c z^w|, |a x^u' + b y^v' - c z^w'|)``, primes = conjugates."""
    _check_prop37_exponents(u, v, w)
    a, b, c = coeffs
    x, y, z = xyz
    eq1 = a * real_qpow(x, u) - b * real_qpow(y, v) - c * real_qpow(z, w)
    eq2 = a * real_qpow(x, u, -1) + b * real_qpow(y, v, -1) - c * real_qpow(z, w, -1)
    return max(abs(eq1), abs(eq2))


def prop37_exponents(prange: int, qrange: int) -> list[tuple[QuadInt, QuadInt, QuadInt]]:
    """Exponent triples meeting the side conditions, rational parts in ``[1, prange]``."""
    uv = [root2(p, q) for p in range(1, prange + 1) for q in range(-qrange, qrange + 1) if q]
    ws = [root2(p, q) for p in range(1, prange + 1) for q in range(-qrange, qrange + 1)]
    return [(u, v, w) for u in uv for v in uv for w in ws]


def prop37_scan(
    coeffs: tuple[int, int, int],
    xmax: int,
    prange: int = 2,
    qrange: int = 2,
    exponents: Iterable[tuple[QuadInt, QuadInt, QuadInt]] | None = None,
) -> ScanMinimum:
    """Min joint residual of the two-equation system over x, y, z <= xmax.

    Grid points need ``gcd(x, y, z) = 1`` and exclude ``x = y = z = 1``.
    """
    a, b, c = coeffs
    if min(coeffs) < 1 or not pairwise_coprime(a, b, c):
        raise PreconditionViolated(f"coefficients {coeffs} must be positive and pairwise coprime")
    exps = list(prop37_exponents(prange, qrange) if exponents is None else exponents)
    for e in exps:
        _check_prop37_exponents(*e)
    triples = [t for t in _coprime_triples(xmax, pairwise=False) if t != (1, 1, 1)]
    if not triples or not exps:
        return ScanMinimum(math.inf, None, 0)
    logs = np.log(np.arange(1, xmax + 1, dtype=float))
    # columns: u, v, w under each embedding
    emb = np.array([[e.embed(s) for e in trip for s in (1, -1)] for trip in exps])
    best, arg, count = math.inf, None, 0
    with np.errstate(over="raise"):
        try:
            for x, y, z in triples:
                lx, ly, lz = logs[x - 1], logs[y - 1], logs[z - 1]
                eq1 = a * np.exp(emb[:, 0] * lx) - b * np.exp(emb[:, 2] * ly) - c * np.exp(emb[:, 4] * lz)
                eq2 = a * np.exp(emb[:, 1] * lx) + b * np.exp(emb[:, 3] * ly) - c * np.exp(emb[:, 5] * lz)
                res = np.maximum(np.abs(eq1), np.abs(eq2))
                count += res.size
                idx = int(np.argmin(res))
                if res[idx] < best:
                    u, v, w = exps[idx]
                    best = float(res[idx])
                    arg = {"x": x, "y": y, "z": z, "u": u, "v": v, "w": w}
        except FloatingPointError as exc:
            raise ExponentOverflow("prop37 grid overflowed double precision") from exc
    return ScanMinimum(best, arg, count)


def positive_elements(cbound: int) -> list[QuadInt]:
    """Elements ``p + q sqrt 2 > 0`` (standard embedding) with ``|p|, |q| <= cbound``."""
    return [
        e
        for p in range(-cbound, cbound + 1)
        for q in range(-cbound, cbound + 1)
        if (e := root2(p, q)).sign() > 0
    ]


def fermat_sqrt2_search(n: int, cbound: int) -> list[tuple[QuadInt, QuadInt, QuadInt]]:
    """Ordered solutions of ``x^n + y^n = z^n`` in Z[sqrt 2] with |p|, |q| <= cbound.

    Side lengths must be positive reals under the standard embedding, so
    e.g. ``sqrt 2`` counts although its conjugate is negative. Both orders
    of ``(x, y)`` are reported, sorted by (x, y).
    """
    if n < 2:
        raise PreconditionViolated(f"n must be >= 2, got {n}")
    elems = positive_elements(cbound)
    powers = {e: e**n for e in elems}
    targets = {pw: e for e, pw in powers.items()}
    out = []
    for x in elems:
        for y in elems:
            z = targets.get(powers[x] + powers[y])
            if z is not None:
                out.append((x, y, z))
    return sorted(out)


TRIANGLE_CLASSES = ("degenerate-line", "acute", "right", "obtuse", "not-a-triangle")
Length = Union[Real, QuadInt]


def _sign(value: Length, tol: float) -> int:
    if isinstance(value, QuadInt):
        return value.sign()
    if isinstance(value, Rational):
        return (value > 0) - (value < 0)
    if abs(value) <= tol:
        return 0
    return 1 if value > 0 else -1


def triangle_classify(x: Length, y: Length, z: Length, *, tol: float = 1e-12) -> str:
    """Classify three segment lengths by the triangle they form.

    Integers, fractions and Z[sqrt 2] elements (mixed only with ints) are
    compared exactly. Floats use ``tol`` relative to the longest side.
    """
    sides = [x, y, z]
    if any(_sign(s, 0.0) <= 0 for s in sides):
        raise NonPositiveInput(f"side lengths must be positive: {sides}")
    exact = all(isinstance(s, (QuadInt, Rational)) for s in sides)
    if not exact:
        sides = [s.embed() if isinstance(s, QuadInt) else float(s) for s in sides]
    a, b, c = sorted(sides, key=cmp_to_key(lambda s, t: _sign(s - t, 0.0)))
    top = 1.0 if exact else max(1.0, float(c))
    line = _sign(c - (a + b), 0.0 if exact else tol * top)
    if line > 0:
        return "not-a-triangle"
    if line == 0:
        return "degenerate-line"
    pyth = _sign(c * c - (a * a + b * b), 0.0 if exact else tol * top * top)
    return {0: "right", -1: "acute", 1: "obtuse"}[pyth]
