import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fermat_workbench.errors import PreconditionViolated
from fermat_workbench.transcendental import (
    FTriple,
    Verdict,
    certify_no_root,
    f_triples,
    flt_desk_check,
    in_F,
    integer_proximity_scan,
    power_sum_hits,
    solvability,
    solve_exponent,
    special_constant_scan,
)
from oracles import g_exact, primitive_triples_brute


@pytest.mark.parametrize("abc, expected", [((5, 6, 7), True), ((3, 4, 5), False), ((2, 3, 4), False), ((4, 5, 6), True)])
def test_in_F(abc, expected):
    assert in_F(*abc) is expected


class TestSolve:
    def test_five_six_seven(self):
        # exact sign change: g(2) = 61/49 > 1 > 341/343 = g(3)
        assert g_exact(5, 6, 7, 2) == Fraction(61, 49) > 1 > g_exact(5, 6, 7, 3) == Fraction(341, 343)
        r = solve_exponent(FTriple(5, 6, 7))
        assert 2.9 < r.alpha < 3.0
        assert r.residual < 1e-10
        assert r.width <= 1e-12
        assert r.bracket[0] < r.alpha < r.bracket[1]

    def test_four_five_six(self):
        r = solve_exponent(FTriple(4, 5, 6))
        assert r.alpha > 2 and r.residual < 1e-10
        # relative residual equals |a^x + b^x - c^x| / c^x
        a = r.alpha
        assert abs(4**a + 5**a - 6**a) / 6**a == pytest.approx(r.residual, abs=1e-14)

    def test_boundary_rejected(self):
        with pytest.raises(PreconditionViolated):
            FTriple(3, 4, 5)
        with pytest.raises(PreconditionViolated):
            solve_exponent((3, 4, 5))

    def test_bad_tolerance(self):
        with pytest.raises(PreconditionViolated):
            solve_exponent(FTriple(5, 6, 7), tol=0)

    def test_bracket_invariant_every_step(self):
        for t in f_triples(20):
            r = solve_exponent(t, trace=True)
            assert r.trace[0][0] >= 2
            for lo, hi in r.trace:
                assert t.g(lo) >= 1 >= t.g(hi)
            assert r.width <= 1e-12

    def test_large_alpha_bracket_expansion(self):
        r = solve_exponent(FTriple(48, 49, 50))
        assert r.alpha > 20 and r.residual < 1e-9

    def test_agrees_with_finite_difference_newton(self):
        # independent route: Newton iteration with a central-difference derivative
        for t in [FTriple(5, 6, 7), FTriple(10, 13, 15), FTriple(20, 29, 30)]:
            x = 3.0
            for _ in range(100):
                h = 1e-6
                f = t.g(x) - 1
                df = (t.g(x + h) - t.g(x - h)) / (2 * h)
                x -= f / df
            assert solve_exponent(t).alpha == pytest.approx(x, abs=1e-9)

    @settings(max_examples=50)
    @given(st.integers(3, 50).flatmap(lambda c: st.tuples(st.integers(1, c - 1), st.integers(1, c - 1), st.just(c))))
    def test_monotone_decreasing(self, abc):
        a, b, c = abc
        if not (a < b and in_F(a, b, c)):
            return
        t = FTriple(a, b, c)
        r = solve_exponent(t)
        rng = random.Random(a * 10007 + b * 101 + c)
        for _ in range(1000):
            x1, x2 = sorted(rng.uniform(2, r.bracket[1]) for _ in range(2))
            if x1 < x2:
                assert t.g(x1) > t.g(x2)


class TestNoRoot:
    @pytest.mark.parametrize("abc, g2", [((2, 3, 4), Fraction(13, 16)), ((1, 2, 3), Fraction(5, 9))])
    def test_examples(self, abc, g2):
        cert = certify_no_root(*abc)
        assert cert.certified and cert.g_at_two == g2

    def test_F_member_rejected(self):
        with pytest.raises(PreconditionViolated):
            certify_no_root(5, 6, 7)


class TestSolvability:
    @pytest.mark.parametrize(
        "xyz, verdict", [((5, 6, 7), Verdict.SOLVABLE), ((3, 4, 5), Verdict.BOUNDARY), ((2, 3, 4), Verdict.UNSOLVABLE)]
    )
    def test_examples(self, xyz, verdict):
        assert solvability(*xyz).verdict is verdict

    def test_unordered(self):
        with pytest.raises(PreconditionViolated):
            solvability(4, 3, 5)

    def test_boundary_is_exact(self):
        for x, y, z in primitive_triples_brute(200):
            for k in (1, 2, 3):
                assert solvability(k * x, k * y, k * z).verdict is Verdict.BOUNDARY

    def test_trichotomy_partition(self):
        counts = {v: 0 for v in Verdict}
        for z in range(3, 51):
            for y in range(2, z):
                for x in range(1, y):
                    v = solvability(x, y, z).verdict
                    counts[v] += 1
                    assert (v is Verdict.SOLVABLE) == (z * z < x * x + y * y)
                    assert (v is Verdict.BOUNDARY) == (z * z == x * x + y * y)
                    assert (v is Verdict.UNSOLVABLE) == (z * z > x * x + y * y)
        assert sum(counts.values()) == sum(math.comb(z - 1, 2) for z in range(3, 51))


class TestScans:
    def test_proximity_examples(self):
        r = integer_proximity_scan(30)
        assert r.flagged == [] and r.min_distance > 0
        small = integer_proximity_scan(7)
        # F members with c <= 7: (4, 5, 6), (4, 6, 7), (5, 6, 7)
        assert [(t.a, t.b, t.c) for t in f_triples(7)] == [(4, 5, 6), (4, 6, 7), (5, 6, 7)]
        assert small.instances == 3 and small.min_distance > 0

    def test_proximity_jobs_identical(self):
        assert integer_proximity_scan(25, jobs=3) == integer_proximity_scan(25)

    def test_proximity_tiny(self):
        assert integer_proximity_scan(5).vacuous
        assert integer_proximity_scan(6).instances == 1  # just (4, 5, 6)

    def test_proximity_flags_with_loose_threshold(self):
        r = integer_proximity_scan(30, threshold=1e-3)
        assert r.flagged and all(f["distance"] < 1e-3 for f in r.flagged)

    def test_constant_scan(self):
        r = special_constant_scan(30)
        assert r.min_e > 0 and r.min_pi > 0
        a, b, c = r.witness_e
        assert abs(a**math.e + b**math.e - c**math.e) == r.min_e
        assert special_constant_scan(5).vacuous

    def test_constant_scan_matches_brute(self):
        r = special_constant_scan(12)
        brute = min(
            abs(a**math.pi + b**math.pi - c**math.pi)
            for c in range(1, 13)
            for b in range(1, c)
            for a in range(1, b)
            if c * c < a * a + b * b
        )
        assert r.min_pi == brute

    @pytest.mark.parametrize("nmax, zmax", [(7, 100), (3, 20), (3, 2)])
    def test_flt_desk_check(self, nmax, zmax):
        assert flt_desk_check(nmax, zmax) is None

    def test_power_sum_machinery_finds_squares(self):
        hits = {(x, y, z) for x, y, z, _ in power_sum_hits(2, 100)}
        assert hits == {t for t in primitive_triples_brute(100)}
        assert power_sum_hits(2, 60, jobs=3) == power_sum_hits(2, 60)
