"""Acceptance gate: one test per criterion, each at its stated tolerance.

A summary line per criterion is printed at the end of the pytest run.
"""

from __future__ import annotations

import json
import math
import random
import time
from fractions import Fraction

import jsonschema
import pytest

from cli_cases import CASES
from fermat_workbench.cli import main, run
from fermat_workbench.legendre import LegendreForm, find_solution, holzer_search, is_solvable, thm14_scan
from fermat_workbench.pythagoras import is_reducible, scan_nonsquare_form, search_family, variant_identity_holds
from fermat_workbench.quadrings import conj_identity_sweep, fermat_sqrt2_search, prop36_scan, root2
from fermat_workbench.report import load_schema
from fermat_workbench.transcendental import (
    FTriple,
    Verdict,
    flt_desk_check,
    integer_proximity_scan,
    solvability,
    solve_exponent,
)
from fermat_workbench.zmodule import SParams, euler_counterexample_scan, thm22_sweep, wedge3
from oracles import is_squarefree_naive, leibniz_det, monic_quadratic_integer_roots

SEED = 20240601


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "reducibility test agrees with divisor-root oracle")
def test_c01_reducibility_oracle():
    disagreements = []
    with Timer() as t:
        for a in range(-30, 31):
            for b in range(1, 31):
                if a == 0 or math.gcd(a, b) != 1:
                    continue
                for n in range(1, 5):
                    got = is_reducible(a, b, n)
                    roots = monic_quadratic_integer_roots(a**n, -(b**n))
                    if got.reducible != bool(roots):
                        disagreements.append((a, b, n))
                    elif got.reducible and set(got.roots) != roots:
                        disagreements.append((a, b, n, "roots"))
    assert disagreements == []
    assert t.elapsed < 10


@pytest.mark.criterion(2, "family search at bound 150")
def test_c02_family_search():
    with Timer() as t:
        found = {n: [(s.X, s.Y, s.Z) for s in search_family(n, 150, 150)] for n in range(1, 5)}
    assert (1, 2, 3) in found[1]
    assert (3, 20, 41) in found[2]
    assert found[3] == [] and found[4] == []
    assert t.elapsed < 60


@pytest.mark.criterion(3, "variant identities and non-square form scan")
def test_c03_variants():
    rng = random.Random(SEED)
    checked = 0
    while checked < 1000:
        u, v = rng.randint(1, 1000), rng.randint(1, 1000)
        if math.gcd(u, v) != 1:
            continue
        checked += 1
        assert variant_identity_holds("plus6", u, v)
        assert variant_identity_holds("minus2m", u, v, 3)
        # direct big-int restatement
        x2, y = u * u + 6 * v * v, u * v
        z = u * u - 6 * v * v
        assert (z * x2) ** 2 + (12 * y * y) ** 2 == (x2 * x2 - 12 * y * y) ** 2
        x2, z = u**3 + v**3, u**3 - v**3
        assert (z * x2) ** 2 + (2 * y**3) ** 2 == (x2 * x2 - 2 * y**3) ** 2
    assert scan_nonsquare_form(2, 3, 2000) is None


@pytest.mark.criterion(4, "Legendre criterion matches bounded search")
def test_c04_legendre_vs_search():
    sf = [t for t in range(1, 21) if is_squarefree_naive(t)]
    mismatches, forms = [], 0
    with Timer() as t:
        for a in sf:
            for b in sf:
                for c in sf:
                    if math.gcd(a, b) != 1 or math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
                        continue
                    form = LegendreForm(a, b, c)
                    forms += 1
                    pt = holzer_search(form)
                    if is_solvable(form).solvable != (pt is not None):
                        mismatches.append((a, b, c))
                        continue
                    if pt is not None:
                        assert form.holds(*pt)
                        assert all(p <= h for p, h in zip(pt, form.holzer_bounds()))
                        assert find_solution(form) == pt
    assert forms > 0 and mismatches == []
    assert t.elapsed < 60


@pytest.mark.criterion(5, "no Fermat points on small Legendre forms")
def test_c05_thm14_scan():
    for coeffs in [(1, 1, 2), (2, 3, 5), (1, 2, 3)]:
        for n in (3, 5):
            assert thm14_scan(LegendreForm(*coeffs), n, 20) is None, (coeffs, n)


@pytest.mark.criterion(6, "wedge nonvanishing sweep and fixed determinant")
def test_c06_thm22():
    result = thm22_sweep(10**4, seed=SEED)
    assert result.samples == 10**4 and result.failures == []
    s = SParams(3, 4, 5)
    rows = [(1, 3, 3), (3, 4, 5), s.power(2)]
    assert leibniz_det(rows) == -34
    assert wedge3(*rows) == -34


@pytest.mark.criterion(7, "no coprime Euler quadruples at desk scale")
def test_c07_euler_scan():
    with Timer() as t:
        assert euler_counterexample_scan(4, 100) is None
        assert euler_counterexample_scan(5, 60) is None
    assert t.elapsed < 120


@pytest.mark.criterion(8, "exponent solvability trichotomy for c <= 30")
def test_c08_trichotomy():
    counts = {v: 0 for v in Verdict}
    for c in range(3, 31):
        for b in range(2, c):
            for a in range(1, b):
                r = solvability(a, b, c)
                counts[r.verdict] += 1
                lhs, rhs = a * a + b * b, c * c
                if rhs < lhs:
                    assert r.verdict is Verdict.SOLVABLE and r.certificate is None
                    assert r.root.width <= 1e-12
                    assert r.root.residual < 1e-9
                    assert r.root.alpha > 2
                elif rhs == lhs:
                    assert r.verdict is Verdict.BOUNDARY and r.root is None and r.certificate is None
                else:
                    assert r.verdict is Verdict.UNSOLVABLE and r.root is None
                    assert r.certificate.g_at_two == Fraction(lhs, rhs) < 1
    assert all(counts.values())
    alpha = solve_exponent(FTriple(5, 6, 7)).alpha
    assert 2.9 < alpha < 3.0


@pytest.mark.criterion(9, "roots stay away from integers >= 3")
def test_c09_integer_proximity():
    rep = integer_proximity_scan(30, 1e-6)
    assert rep.flagged == []
    assert rep.considered > 0 and rep.min_distance > 0
    print(f"min distance {rep.min_distance:.3e} at {rep.witness}")


@pytest.mark.criterion(10, "conjugation identity residual")
def test_c10_conjugation():
    sweep = conj_identity_sweep(1000, seed=SEED, max_base=20, erange=5)
    assert sweep.samples == 1000
    assert sweep.max_residual < 1e-10


@pytest.mark.criterion(11, "complex exponent scan stays away from zero")
def test_c11_prop36():
    with Timer() as t:
        res = prop36_scan(15, 4)
    assert res.witness is not None
    assert res.minimum > 1e-9
    print(f"minimum {res.minimum!r} at {res.witness}")
    assert t.elapsed < 120


@pytest.mark.criterion(12, "Fermat equation over Z[sqrt 2]")
def test_c12_sqrt2():
    s2, two = root2(0, 1), root2(2, 0)
    assert (s2, s2, two) in fermat_sqrt2_search(2, 3)
    assert fermat_sqrt2_search(4, 10) == []
    assert fermat_sqrt2_search(5, 8) == []


@pytest.mark.criterion(13, "Fermat desk check up to n = 7, z = 100")
def test_c13_flt():
    with Timer() as t:
        assert flt_desk_check(7, 100) is None
    assert t.elapsed < 60


@pytest.mark.criterion(14, "CLI schema, determinism and exit codes")
def test_c14_cli():
    validator = jsonschema.Draft202012Validator(load_schema())
    for line in CASES:
        outs = []
        for _ in range(2):
            code, report = run(line.split())
            assert code == 0, line
            doc = json.loads(report.to_json())
            validator.validate(doc)
            doc.pop("elapsed_ms")
            outs.append(doc)
        assert outs[0] == outs[1], line
    assert main(["legendre", "check", "2", "3", "5"]) == 0
    assert main(["legendre", "check", "2", "3"]) == 2
    assert main(["quad", "conj-check", "--samples", "100", "--seed", str(SEED)]) == 0
