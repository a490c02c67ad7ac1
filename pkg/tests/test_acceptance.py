"""Acceptance criteria, one test per criterion.

Each test times its own work on a fresh, uncached ``SkeinFamilies`` and
records a PASS/FAIL line that is echoed in the terminal summary.
"""
import random
import time

import pytest

from skeinquot.chebyshev import cheb_verify
from skeinquot.generators import SkeinFamilies, sigma_summands
from skeinquot.qlaurent import ONE, QLaurent, bracket, qint
from skeinquot.quotient import (
    Classification, LocalizedPoly, classify, normal_form, normal_form_localized, torsion_split,
)
from skeinquot.ringcore import SkeinPoly, XPoly
from skeinquot.verify import random_skein, run_structure_suite, run_suite

from oracles import localized_oracle

ZERO = SkeinPoly()


def qm(e):
    return QLaurent.monomial(e)


class Criterion:
    def __init__(self, record, number, title, budget):
        self.record, self.number, self.title, self.budget = record, number, title, budget
        self.failures = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is not None:
            self.failures.append(f"raised {exc_type.__name__}: {exc}")
        if elapsed > self.budget:
            self.failures.append(f"took {elapsed:.1f}s > {self.budget}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"[{status}] criterion {self.number}: {self.title} ({elapsed:.2f}s)"
        if self.failures:
            line += " -- " + "; ".join(self.failures[:3])
        self.record(line)
        assert not self.failures, line
        return False


@pytest.fixture
def criterion(acceptance_line):
    return lambda *a: Criterion(acceptance_line, *a)


def test_criterion_1_maintech(criterion):
    with criterion(1, "F_n = U_n - q^(4-4n) U_(n-2), 2 <= n <= 30; F_1 = G_1", 60) as c:
        f = SkeinFamilies()
        c.check(f.F(1) == f.G(1), "F_1 != G_1")
        for n in range(2, 31):
            c.check(f.F(n) - f.U(n) + f.U(n - 2) * qm(4 - 4 * n) == ZERO, f"n={n}")


def test_criterion_2_double_primed(criterion):
    with criterion(2, "U''_n = 0, 0 <= n <= 30; degree-4 recurrence, 0 <= n <= 26", 30) as c:
        f = SkeinFamilies()
        for n in range(31):
            c.check(f.Upp(n) == ZERO, f"U''_{n} != 0")
        report = run_suite(30, f)
        rec = report.get("recurrence_Gpp")
        c.check(rec.passed and (rec.lo, rec.hi) == (0, 26), f"recurrence: {rec.detail}")


def test_criterion_3_primed(criterion):
    with criterion(3, "F_(n+1) = U'_(n+1) - q^(-4n) U'_(n-1), 1 <= n <= 30", 60) as c:
        f = SkeinFamilies()
        for n in range(1, 31):
            c.check(f.F(n + 1) - f.Up(n + 1) + f.Up(n - 1) * qm(-4 * n) == ZERO, f"n={n}")


def test_criterion_4_chebyshev(criterion):
    with criterion(4, "Chebyshev identities and u-substitution, n <= 30", 10) as c:
        bad = cheb_verify(30)
        c.check(bad is None, f"first failure {bad}")
        report = run_suite(30)
        for name in ("cheb_T1_Tn", "cheb_T_even", "cheb_S_reflect", "cheb_T_u_sub", "cheb_S_u_sub"):
            c.check(report.get(name).passed, name)


def test_criterion_5_quotient_properties(criterion):
    with criterion(5, "quotient property suite, seed 0, 200 cases, y-degree <= 8", 120) as c:
        report = run_structure_suite(seed=0, cases=200, degree_bound=8, families=SkeinFamilies())
        for name in ("nf_idempotence", "nf_soundness", "nf_stability",
                     "membership_zero_form", "tau_compatibility"):
            r = report.get(name)
            c.check(r.passed and r.hi == 199, f"{name}: {r.detail}")
        for r in report.failures():
            c.check(False, f"{r.name}: {r.detail}")


def test_criterion_6_torsion(criterion):
    with criterion(6, "x1^a x2^b J_n torsion, n <= 10, a, b <= 3", 60) as c:
        f = SkeinFamilies()
        for n in range(1, 11):
            for a in range(4):
                for b in range(4):
                    mono = XPoly.monomial(a, b)
                    t = f.J(n) * mono
                    c.check(classify(t, families=f) is Classification.Torsion, f"classify n={n} a={a} b={b}")
                    c.check(normal_form(t * bracket(1), families=f).rep == ZERO, f"{{1}}-kill n={n} a={a} b={b}")
                    s = torsion_split(t, families=f)
                    c.check(s.torsion_coords == {n: mono} and s.free_residue == ZERO,
                            f"split n={n} a={a} b={b}")


def test_criterion_7_localization(criterion):
    with criterion(7, "localized normal form: 100 random inputs, G_n -> 0, spot values", 60) as c:
        f = SkeinFamilies()
        rng = random.Random(0)
        for i in range(100):
            p = random_skein(rng, 6)
            loc = normal_form_localized(p, families=f)
            c.check(isinstance(loc.numerator, XPoly), f"case {i}: y survives")
            c.check(loc == localized_oracle(p), f"case {i}: disagrees with the S-basis oracle")
        for n in range(1, 11):
            c.check(normal_form_localized(f.G(n), families=f) == LocalizedPoly(XPoly(), ONE), f"G_{n}")
        x1x2 = XPoly.monomial(1, 1)
        y = SkeinPoly.monomial(1)
        c.check(normal_form_localized(y, families=f).same_value(LocalizedPoly(-x1x2, qint(2))), "nf-loc(y)")
        s1sq = (XPoly.monomial(2, 0) - XPoly.lift(ONE)) * (XPoly.monomial(0, 2) - XPoly.lift(ONE))
        c.check(normal_form_localized(y * y, families=f).same_value(
            LocalizedPoly(s1sq + XPoly.lift(qint(3)), qint(3))), "nf-loc(y^2)")


def _drop(i):
    def sigma(n):
        parts = sigma_summands(n)
        return sum(parts[:i] + parts[i + 1:], ZERO)
    return sigma


def test_criterion_8_mutation(criterion):
    with criterion(8, "dropping any sigma summand or widening a window is detected", 60) as c:
        for i in range(7):
            c.check(not run_suite(30, SkeinFamilies(sigma=_drop(i))).passed, f"sigma summand {i}")
        widened = run_structure_suite(seed=0, cases=200, degree_bound=8, slack=1)
        c.check(not widened.passed, "slack=1")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
