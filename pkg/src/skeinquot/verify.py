"""Symbolic replay of the identities behind the quotient presentation.

``run_suite`` checks the lemmas as exact polynomial identities over a range
of indices; ``run_structure_suite`` runs seeded randomized property checks
of the quotient module.  Failures are reported, never raised.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional

from .chebyshev import UniPoly, V, cheb_S, cheb_T
from .generators import DEFAULT, SkeinFamilies, _S_x1x2
from .qlaurent import QLaurent, bracket
from .quotient import is_canonical, membership, normal_form
from .ringcore import (
    SkeinPoly, TwoVarLaurent, XPoly, skein_to_obj, twovar_to_obj,
)

__all__ = ["VerifyConfig", "CheckResult", "VerifyReport", "run_suite",
           "run_structure_suite", "random_skein", "random_span_element"]

WITNESS_LIMIT = 200


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 30
    seed: int = 0
    cases: int = 200
    degree_bound: int = 8


@dataclass
class CheckResult:
    name: str
    lo: int
    hi: int
    status: str = "pass"
    witness: Optional[dict] = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_obj(self) -> dict:
        return {"name": self.name, "range": [self.lo, self.hi], "status": self.status,
                "witness": self.witness, "detail": self.detail}


@dataclass
class VerifyReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_obj(self) -> dict:
        return {"checks": [c.to_obj() for c in self.checks]}

    def __add__(self, other: "VerifyReport") -> "VerifyReport":
        return VerifyReport(self.checks + other.checks)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.name:24} [{c.lo}, {c.hi}]"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        return "\n".join(lines)


def _witness(diff) -> dict:
    if isinstance(diff, UniPoly):
        diff = SkeinPoly({d: c for d, c in enumerate(diff.coeffs) if c})
    if isinstance(diff, XPoly):
        diff = SkeinPoly.lift(diff)
    obj = twovar_to_obj(diff) if isinstance(diff, TwoVarLaurent) else skein_to_obj(diff)
    extra = len(obj["terms"]) - WITNESS_LIMIT
    if extra > 0:
        obj["terms"] = obj["terms"][:WITNESS_LIMIT]
        obj["truncated"] = extra
    return obj


def _identity_check(name: str, indices: Iterable[int], diff_at: Callable) -> CheckResult:
    """Pass iff ``diff_at(n)`` is zero for every index."""
    idx = list(indices)
    if not idx:
        return CheckResult(name, 0, -1, detail="empty index range")
    res = CheckResult(name, idx[0], idx[-1])
    for n in idx:
        try:
            d = diff_at(n)
        except Exception as exc:  # reported, not raised
            res.status, res.witness, res.detail = "fail", _witness(SkeinPoly()), f"n={n}: {exc!r}"
            return res
        if d:
            res.status, res.witness, res.detail = "fail", _witness(d), f"first failure at n={n}"
            return res
    return res


def _qm(e: int) -> QLaurent:
    return QLaurent.monomial(e)


def _u_image(p: UniPoly) -> TwoVarLaurent:
    return p(TwoVarLaurent({(1, 0): 1, (-1, 0): 1}), TwoVarLaurent.lift(1))


def _u(e: int) -> TwoVarLaurent:
    return TwoVarLaurent.monomial(e, 0)


def _gpp_over_bracket(n: int) -> XPoly:
    """b_n = (-1)^(n+1) S_n(x1) S_n(x2)."""
    return _S_x1x2(n) * (1 if n % 2 else -1)


X1X2 = XPoly.monomial(1, 1)
E2 = XPoly({(2, 0): 1, (0, 2): 1, (0, 0): -2})


def run_suite(max_n: int = 30, families: SkeinFamilies = DEFAULT) -> VerifyReport:
    """Replay every identity for indices up to ``max_n``."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    f = families
    checks = []

    def maintech(n):
        if n == 1:
            return f.F(1) - f.G(1)
        return f.F(n) - f.U(n) + f.U(n - 2) * _qm(4 - 4 * n)

    checks.append(_identity_check("lemma_maintech", range(1, max_n + 1), maintech))
    checks.append(_identity_check(
        "Up_relation", range(1, max_n + 1),
        lambda n: f.F(n + 1) - f.Up(n + 1) + f.Up(n - 1) * _qm(-4 * n)))
    checks.append(_identity_check("Upp_vanishing", range(0, max_n + 1), f.Upp))
    checks.append(_identity_check(
        "recurrence_Gpp", range(0, max_n - 3),
        lambda n: (_gpp_over_bracket(n + 4) + X1X2 * _gpp_over_bracket(n + 3)
                   + E2 * _gpp_over_bracket(n + 2) + X1X2 * _gpp_over_bracket(n + 1)
                   + _gpp_over_bracket(n))))
    checks.append(_identity_check(
        "cheb_T1_Tn", range(0, max_n + 1),
        lambda n: V * cheb_T(n) - cheb_S(n + 1) + cheb_S(n - 3)))
    checks.append(_identity_check(
        "cheb_T_even", range(0, max_n + 1), lambda n: cheb_T(-n) - cheb_T(n)))
    checks.append(_identity_check(
        "cheb_S_reflect", range(0, max_n + 1), lambda n: cheb_S(-n - 1) + cheb_S(n - 1)))
    checks.append(_identity_check(
        "cheb_T_u_sub", range(-max_n, max_n + 1),
        lambda n: _u_image(cheb_T(n)) - _u(n) - _u(-n)))
    checks.append(_identity_check(
        "cheb_S_u_sub", range(-max_n, max_n + 1),
        lambda n: _u_image(cheb_S(n)) * (_u(1) - _u(-1)) - _u(n + 1) + _u(-n - 1)))
    checks.append(_identity_check(
        "G_symmetry", range(-max_n, max_n + 1), lambda k: f.G(k - 1) - f.G(-k - 1)))
    checks.append(_identity_check("G_vanishing", range(-2, 1), f.G))

    def degree(n):
        g = f.G(n)
        if g.deg_y() != n:
            return g
        return SkeinPoly.lift(g.coeff_y(n) - XPoly.lift(bracket(n + 1)))

    checks.append(_identity_check("G_degree", range(1, max_n + 1), degree))
    checks.append(_identity_check(
        "tau_antisymmetry", range(-max_n, max_n + 1), lambda n: f.G(n).tau() + f.G(n)))

    def doubling(n):
        total = SkeinPoly()
        for g, qf in ((f.G, f.Q), (f.Gp, f.Qp), (f.Gpp, f.Qpp)):
            half = SkeinPoly()
            for k in range(n + 1):
                half = half + g(n - 2 * k - 1)
            total = total + (qf(n) * 2 - half)
        return total

    checks.append(_identity_check("Q_doubling", range(0, max_n + 1), doubling))
    checks.append(_identity_check(
        "J_division", range(1, max_n + 1), lambda n: f.J(n) * bracket(1) - f.G(n)))
    checks.append(_identity_check(
        "F_W_relation", range(1, max_n),
        lambda n: f.F(n + 1) + f.W(n) * _qm(-2 * n - 4)))
    return VerifyReport(checks)


# -- randomized structure checks -------------------------------------------------------

def _random_q(rng: random.Random, span: int = 10, max_terms: int = 3) -> QLaurent:
    return QLaurent({rng.randint(-span, span): rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
                     for _ in range(rng.randint(1, max_terms))})


def _random_x(rng: random.Random, max_terms: int = 2, max_exp: int = 2) -> XPoly:
    return XPoly({(rng.randint(0, max_exp), rng.randint(0, max_exp)): _random_q(rng, 6, 2)
                  for _ in range(rng.randint(1, max_terms))})


def random_skein(rng: random.Random, degree_bound: int, max_terms: int = 6) -> SkeinPoly:
    top = rng.randint(0, degree_bound)
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        terms.append(((rng.randint(0, top), rng.randint(0, 3), rng.randint(0, 3)), _random_q(rng)))
    terms.append(((top, rng.randint(0, 3), rng.randint(0, 3)), _random_q(rng)))
    return SkeinPoly.from_terms(terms)


def random_span_element(rng: random.Random, families: SkeinFamilies = DEFAULT,
                        max_index: int = 10) -> SkeinPoly:
    g = SkeinPoly()
    for _ in range(rng.randint(1, 3)):
        g = g + families.G(rng.randint(1, max_index)) * _random_x(rng)
    return g


def run_structure_suite(seed: int = 0, cases: int = 200, degree_bound: int = 8, *,
                        slack: int = 0, families: SkeinFamilies = DEFAULT) -> VerifyReport:
    """Randomized quotient-module invariants.

    Case 0 is the zero polynomial; cases 1.. are drawn from ``Random(seed)``.
    ``slack`` is forwarded to :func:`normal_form` (sensitivity testing only).
    """
    if cases < 1:
        raise ValueError("cases must be >= 1")
    names = ["nf_idempotence", "nf_soundness", "nf_stability", "nf_quasilinearity",
             "nf_canonical", "membership_zero_form", "tau_compatibility",
             "degree0_embedding", "torsion_annihilator"]
    results = {n: CheckResult(n, 0, cases - 1) for n in names}
    rng = random.Random(seed)

    def nf(p):
        return normal_form(p, families=families, slack=slack)

    def fail(name, case, witness, why):
        r = results[name]
        if r.passed:
            r.status, r.witness = "fail", _witness(witness)
            r.detail = f"case {case} (seed {seed}): {why}"

    def member(p):
        return membership(p, families=families) is not None

    for case in range(cases):
        if case == 0:
            p, r, g = SkeinPoly(), SkeinPoly(), SkeinPoly()
        else:
            p = random_skein(rng, degree_bound)
            r = random_skein(rng, degree_bound)
            g = random_span_element(rng, families)
        try:
            form = nf(p)
            rep = form.rep
            again = nf(rep).rep
            if again != rep:
                fail("nf_idempotence", case, again - rep, "nf(nf(p)) != nf(p)")
            back = rep + form.cert.expand(families)
            if back != p:
                fail("nf_soundness", case, back - p, "rep + sum c_n G_n != p")
            moved = nf(p + g).rep
            if moved != rep:
                fail("nf_stability", case, moved - rep, "nf(p + g) != nf(p)")
            lin = nf(rep + nf(r).rep).rep
            direct = nf(p + r).rep
            if lin != direct:
                fail("nf_quasilinearity", case, lin - direct, "nf(nf p + nf r) != nf(p + r)")
            if not is_canonical(rep):
                fail("nf_canonical", case, rep, "representative outside residue windows")
            for x in (p, g, p + g):
                if member(x) != (not nf(x).rep):
                    fail("membership_zero_form", case, x, "membership disagrees with nf == 0")
                if member(x) != member(x.tau()):
                    fail("tau_compatibility", case, x, "membership(p) != membership(tau p)")
            p0 = SkeinPoly.lift(p.coeff_y(0))
            if nf(p0).rep != p0:
                fail("degree0_embedding", case, nf(p0).rep - p0, "degree-0 input moved")
            if case:
                n = rng.randint(1, 10)
                c = _random_x(rng)
                t = families.J(n) * c
                killed = nf(t * bracket(1)).rep
                if killed:
                    fail("torsion_annihilator", case, killed, f"{{1}} * c * J_{n} not in G")
                divisible = all(_divisible_by_bracket1(c.get(k)) for k in c.keys())
                if (not nf(t).rep) != divisible:
                    fail("torsion_annihilator", case, t, f"c * J_{n} in G disagrees with {{1}} | c")
        except Exception as exc:  # reported, not raised
            for name in names:
                fail(name, case, p, f"exception {exc!r}")
            break
    return VerifyReport([results[n] for n in names])


def _divisible_by_bracket1(c: QLaurent) -> bool:
    # {1} = q^-2 (q^4 - 1): divisible iff the coefficient sums over each residue class mod 4 vanish
    sums = [0, 0, 0, 0]
    for e, k in c.items():
        sums[e % 4] += k
    return not any(sums)
