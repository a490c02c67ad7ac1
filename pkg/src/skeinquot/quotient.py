"""Computation in the quotient R[x1, x2, y] / G.

G is the R[x1, x2]-span of {G_n : n >= 1}.  The family is unitriangular in
y (deg_y G_n = n, leading coefficient {n+1}) and free, so every reduction
here is a single greedy pass from the top y-degree down to 1.

Residue convention: the y^d coefficient (d >= 1) of a normal form has every
q-coefficient supported on exponents [0, 4d+4).  Since
{d+1} = q^(-2d-2) (q^(4d+4) - 1) and q is a unit, these windows are exactly
the canonical residues modulo {d+1}.  The y^0 coefficient is left alone
(R[x1, x2] embeds in the quotient).

Cost of one pass is O(d^2 * terms) for input of y-degree d.
"""
from __future__ import annotations

import enum
from math import gcd
from dataclasses import dataclass, field
from typing import Dict, Optional

from .generators import DEFAULT, SkeinFamilies
from .qlaurent import (
    ONE, QLaurent, bracket, content, divide_exact, divmod_cyclic, poly_gcd,
    qint, residue_cyclic, residue_monic,
)
from .ringcore import SkeinPoly, XPoly, skein_to_obj, xpoly_to_obj

__all__ = [
    "Certificate",
    "NormalForm",
    "TorsionSplit",
    "LocalizedPoly",
    "Classification",
    "membership",
    "normal_form",
    "classify",
    "torsion_split",
    "normal_form_localized",
    "is_canonical",
]


@dataclass(frozen=True)
class Certificate:
    """Coefficients c_n in R[x1, x2] of a combination sum_n c_n G_n."""

    entries: Dict[int, XPoly] = field(default_factory=dict)

    def expand(self, families: SkeinFamilies = DEFAULT) -> SkeinPoly:
        total = SkeinPoly()
        for n, c in self.entries.items():
            total = total + families.G(n) * c
        return total

    def to_obj(self) -> dict:
        return {"cert": [{"n": n, "coeff": xpoly_to_obj(self.entries[n])}
                         for n in sorted(self.entries, reverse=True)]}

    def __str__(self):
        if not self.entries:
            return "{}"
        return "{" + ", ".join(f"{n}: {self.entries[n]}" for n in sorted(self.entries, reverse=True)) + "}"


@dataclass(frozen=True)
class NormalForm:
    rep: SkeinPoly
    cert: Certificate


class Classification(enum.Enum):
    Zero = "Zero"
    Torsion = "Torsion"
    HasFreePart = "HasFreePart"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TorsionSplit:
    """``p == sum_n torsion_coords[n] * J_n + free_residue`` modulo G."""

    torsion_coords: Dict[int, XPoly]
    free_residue: SkeinPoly

    def to_obj(self) -> dict:
        return {
            "torsion": [{"n": n, "coeff": xpoly_to_obj(self.torsion_coords[n])}
                        for n in sorted(self.torsion_coords)],
            "free_residue": skein_to_obj(self.free_residue),
        }

    def __str__(self):
        tor = ", ".join(f"{n}: {self.torsion_coords[n]}" for n in sorted(self.torsion_coords))
        return f"torsion: {{{tor}}}\nfree: {self.free_residue}"


@dataclass(frozen=True)
class LocalizedPoly:
    """numerator / denominator with numerator in R[x1, x2] and denominator in Z[q].

    Canonical: denominator has nonzero constant term and positive leading
    coefficient, and shares no factor (over Q[q], nor integer content) with
    the numerator.  Use :meth:`from_fraction` to build one.
    """

    numerator: XPoly
    denominator: QLaurent

    @classmethod
    def from_fraction(cls, num: XPoly, den: QLaurent) -> "LocalizedPoly":
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(XPoly(), ONE)
        v = den.valuation()
        den = den.shift(-v)
        num = num * QLaurent.monomial(-v)
        g = den
        for c in num.keys():
            g = poly_gcd(g, num.get(c))
            if g.degree() == 0:
                break
        if g.degree() > 0:
            den = divide_exact(den, g)
            num = num.map_coeffs(lambda c: divide_exact(c, g))
        k = content(den)
        for c in num.keys():
            k = gcd(k, content(num.get(c)))
        if den.coeff(den.degree()) < 0:
            k = -k
        if k != 1:
            den = QLaurent({e: c // k for e, c in den.items()})
            num = num.map_coeffs(lambda c: QLaurent({e: x // k for e, x in c.items()}))
        return cls(num, den)

    def same_value(self, other: "LocalizedPoly") -> bool:
        return self.numerator * other.denominator == other.numerator * self.denominator

    def to_obj(self) -> dict:
        return {
            "numerator": xpoly_to_obj(self.numerator),
            "denominator": [[e, str(self.denominator.coeff(e))]
                            for e in sorted(self.denominator.terms, reverse=True)],
        }

    def __str__(self):
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def _window(d: int) -> int:
    return 4 * d + 4


def is_canonical(rep: SkeinPoly) -> bool:
    """Whether ``rep`` satisfies the residue convention."""
    for d, xp in rep.items():
        if d < 1:
            continue
        m = _window(d)
        for _, c in xp.items():
            if any(not 0 <= e < m for e in c.terms):
                return False
    return True


def normal_form(p: SkeinPoly, *, families: SkeinFamilies = DEFAULT, slack: int = 0) -> NormalForm:
    """Canonical representative of p + G with certificate.

    ``slack`` widens the residue window; anything nonzero breaks uniqueness
    and exists only for sensitivity testing.
    """
    cur = p
    cert: Dict[int, XPoly] = {}
    top = p.deg_y()
    for d in range(int(max(top, 0)), 0, -1):
        xp = cur.coeff_y(d)
        if not xp:
            continue
        m = _window(d)
        s = {}
        for mono, c in xp.items():
            quot, _res = divmod_cyclic(c, m, slack)
            if quot:
                s[mono] = quot.shift(2 * d + 2)
        if s:
            s = XPoly(s)
            cur = cur - families.G(d) * s
            cert[d] = s
    return NormalForm(cur, Certificate(cert))


def membership(p: SkeinPoly, *, families: SkeinFamilies = DEFAULT) -> Optional[Certificate]:
    """Certificate if p is in the span of {G_n}, else None."""
    cur = p
    cert: Dict[int, XPoly] = {}
    top = p.deg_y()
    for d in range(int(max(top, 0)), 0, -1):
        xp = cur.coeff_y(d)
        if not xp:
            continue
        lead = bracket(d + 1)
        s = {}
        for mono, c in xp.items():
            quo = divide_exact(c, lead)
            if quo is None:
                return None
            s[mono] = quo
        s = XPoly(s)
        cur = cur - families.G(d) * s
        cert[d] = s
    if cur:
        return None
    return Certificate(cert)


def classify(p: SkeinPoly, *, families: SkeinFamilies = DEFAULT) -> Classification:
    if membership(p, families=families) is not None:
        return Classification.Zero
    if membership(p * bracket(1), families=families) is not None:
        return Classification.Torsion
    return Classification.HasFreePart


def _monic_qint(d: int) -> QLaurent:
    """q^(2d) [d+1] = 1 + q^4 + ... + q^(4d)."""
    return QLaurent({4 * i: 1 for i in range(d + 1)})


def torsion_split(p: SkeinPoly, *, families: SkeinFamilies = DEFAULT) -> TorsionSplit:
    """Split p against the J-basis, then reduce J-coordinates modulo {1}."""
    cur = p
    coords: Dict[int, XPoly] = {}
    top = p.deg_y()
    for d in range(int(max(top, 0)), 0, -1):
        xp = cur.coeff_y(d)
        if not xp:
            continue
        mod = _monic_qint(d)
        lead = qint(d + 1)
        s = {}
        for mono, c in xp.items():
            r = residue_monic(c, mod)
            quo = divide_exact(c - r, lead)
            if quo is None:  # pragma: no cover - residue_monic guarantees exactness
                raise ArithmeticError("inexact J-reduction")
            if quo:
                s[mono] = quo
        if s:
            s = XPoly(s)
            cur = cur - families.J(d) * s
            t = s.map_coeffs(lambda c: residue_cyclic(c, 4))
            if t:
                coords[d] = t
    return TorsionSplit(coords, cur)


def normal_form_localized(p: SkeinPoly, *, families: SkeinFamilies = DEFAULT) -> LocalizedPoly:
    """Image of p in R_loc[x1, x2] after eliminating y completely.

    Works in the fraction field of Z[q]; denominators that occur are products
    of q-integers [d+1], i.e. units of R_loc.
    """
    cur = p
    den = ONE
    top = p.deg_y()
    for d in range(int(max(top, 0)), 0, -1):
        xp = cur.coeff_y(d)
        if not xp:
            continue
        mod = _monic_qint(d)
        cur = cur * mod - families.J(d) * (xp * QLaurent.monomial(2 * d))
        den = den * mod
    return LocalizedPoly.from_fraction(cur.coeff_y(0), den)
