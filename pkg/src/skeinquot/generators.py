"""Named element families in R[x1, x2, y].

    G_n   = {n+1} S_n(y) + (-1)^(n+1) {1} S_n(x1) S_n(x2)      (all n in Z)
    G'_n  = first summand, G''_n = second summand
    J_n   = G_n / {1}
    Q_n   = (1/2) sum_{k=0..n} G_{n-2k-1}
    U_n   = G_n + x1 x2 G_{n-1} - G_{n-2} + (x1^2 + x2^2) Q_{n-1} + 2 x1 x2 Q_{n-2}
    sigma_n                                     (closed expansion, n >= 1)
    F_n   = q^(4-2n) (sigma_{n-1} - q^-6 y T_{n-1}(y)),  F_1 = G_1
    W_n   = y T^_n(y) - q^6 sigma_n

Primed and double-primed Q and U are built from G' and G'' by the same
formulas.  Q is computed from the integer closed form
``sum G_j, 0 <= j <= n-1, j == n-1 (mod 2)``, which equals the half-sum
because G_j = G_{-j-2} for every family.  Negative-index Q and U are 0.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, List, Optional

from .chebyshev import UniPoly, cheb_S, cheb_That
from .qlaurent import QLaurent, bracket, qint
from .ringcore import X1, X2, XPoly, SkeinPoly, Y

__all__ = [
    "SkeinFamilies",
    "DEFAULT",
    "FAMILIES",
    "sigma_summands",
    "gen_G", "gen_Gp", "gen_Gpp", "gen_J", "gen_Q", "gen_Qp", "gen_Qpp",
    "gen_U", "gen_Up", "gen_Upp", "gen_sigma", "gen_F", "gen_W",
    "S_of", "family",
]

ZERO = SkeinPoly()
X1X2 = X1 * X2
X1SQ_X2SQ = X1 * X1 + X2 * X2


def _qm(e: int, c: int = 1) -> QLaurent:
    return QLaurent.monomial(e, c)


@lru_cache(maxsize=None)
def _S_y(n: int) -> SkeinPoly:
    return SkeinPoly({d: c for d, c in enumerate(cheb_S(n).coeffs) if c})


def _x1_poly(p: UniPoly) -> XPoly:
    return XPoly({(i, 0): c for i, c in enumerate(p.coeffs) if c})


def _x2_poly(p: UniPoly) -> XPoly:
    return XPoly({(0, i): c for i, c in enumerate(p.coeffs) if c})


@lru_cache(maxsize=None)
def _S_x1x2(n: int) -> XPoly:
    """S_n(x1) * S_n(x2)."""
    p = cheb_S(n)
    return _x1_poly(p) * _x2_poly(p)


def S_of(n: int, v: SkeinPoly) -> SkeinPoly:
    """S_n evaluated at an arbitrary element."""
    return cheb_S(n)(v, SkeinPoly.lift(1))


def sigma_summands(n: int) -> List[SkeinPoly]:
    """The seven summands of the closed expansion of sigma_n, in display order."""
    if n < 1:
        raise ValueError(
            "sigma_n is defined for n >= 1; at n = 0 the closed expansion gives twice "
            "the value forced by F_1 = G_1"
        )
    sum_odd = ZERO
    sum_even = ZERO
    for k in range(n):
        sum_odd = sum_odd + _S_y(n - 2 * k - 1) * _qm(-4 * k)
        sum_even = sum_even + _S_y(n - 2 * k - 2) * _qm(-4 * k)
    return [
        _S_y(n + 1) * _qm(4 * n + 2),
        X1X2 * _S_y(n) * (_qm(4 * n) - _qm(-4)),
        _S_y(n - 1) * (_qm(-4 * n - 2) - _qm(4 * n - 2)),
        X1X2 * _S_y(n - 2) * (_qm(-4) - _qm(-4 * n)),
        _S_y(n - 3) * _qm(-4 * n + 2, -1),
        X1SQ_X2SQ * sum_odd * (_qm(4 * n - 2) - _qm(-2)),
        X1X2 * sum_even * (_qm(4 * n - 4, 2) - _qm(-4, 2)),
    ]


def _default_sigma(n: int) -> SkeinPoly:
    total = ZERO
    for s in sigma_summands(n):
        total = total + s
    return total


class SkeinFamilies:
    """All generator families, memoized per index.

    ``sigma`` may be replaced (e.g. by a deliberately corrupted expansion);
    every family derived from it then follows.
    """

    def __init__(self, sigma: Optional[Callable[[int], SkeinPoly]] = None):
        self._sigma_impl = sigma or _default_sigma
        for name in ("G", "Gp", "Gpp", "J", "Q", "Qp", "Qpp",
                     "U", "Up", "Upp", "sigma", "F", "W"):
            # lru_cache serialises its bookkeeping; a racing miss just recomputes
            setattr(self, name, lru_cache(maxsize=None)(getattr(self, "_" + name)))

    # -- G and its parts -------------------------------------------------------
    def _Gp(self, n: int) -> SkeinPoly:
        return _S_y(n) * bracket(n + 1)

    def _Gpp(self, n: int) -> SkeinPoly:
        c = bracket(1) if n % 2 else -bracket(1)
        return SkeinPoly.lift(_S_x1x2(n)) * c

    def _G(self, n: int) -> SkeinPoly:
        return self.Gp(n) + self.Gpp(n)

    def _J(self, n: int) -> SkeinPoly:
        if n < 1:
            raise ValueError("J_n is defined for n >= 1")
        sign = 1 if n % 2 else -1
        return _S_y(n) * qint(n + 1) + SkeinPoly.lift(_S_x1x2(n)) * sign

    # -- Q ---------------------------------------------------------------------
    def _q_closed(self, g, n: int) -> SkeinPoly:
        total = ZERO
        for j in range(n - 1, -1, -2):
            total = total + g(j)
        return total

    def _Q(self, n: int) -> SkeinPoly:
        return self._q_closed(self.G, n)

    def _Qp(self, n: int) -> SkeinPoly:
        return self._q_closed(self.Gp, n)

    def _Qpp(self, n: int) -> SkeinPoly:
        return self._q_closed(self.Gpp, n)

    # -- U ---------------------------------------------------------------------
    def _u_formula(self, g, qf, n: int) -> SkeinPoly:
        if n < 0:
            return ZERO
        return (g(n) + X1X2 * g(n - 1) - g(n - 2)
                + X1SQ_X2SQ * qf(n - 1) + X1X2 * qf(n - 2) * 2)

    def _U(self, n: int) -> SkeinPoly:
        return self._u_formula(self.G, self.Q, n)

    def _Up(self, n: int) -> SkeinPoly:
        return self._u_formula(self.Gp, self.Qp, n)

    def _Upp(self, n: int) -> SkeinPoly:
        return self._u_formula(self.Gpp, self.Qpp, n)

    # -- sigma, F, W -------------------------------------------------------------
    def _sigma(self, n: int) -> SkeinPoly:
        if n < 1:
            raise ValueError(
                "sigma_n is defined for n >= 1; at n = 0 the closed expansion gives twice "
                "the value forced by F_1 = G_1"
            )
        return self._sigma_impl(n)

    def _F(self, n: int) -> SkeinPoly:
        if n < 1:
            raise ValueError("F_n is defined for n >= 1")
        if n == 1:
            return self.G(1)
        yT = Y * _S_like(cheb_That(n - 1))
        return (self.sigma(n - 1) - yT * _qm(-6)) * _qm(4 - 2 * n)

    def _W(self, n: int) -> SkeinPoly:
        if n < 1:
            raise ValueError("W_n is defined for n >= 1")
        return Y * _S_like(cheb_That(n)) - self.sigma(n) * _qm(6)


def _S_like(p: UniPoly) -> SkeinPoly:
    """A univariate integer polynomial read as a polynomial in y."""
    return SkeinPoly({d: c for d, c in enumerate(p.coeffs) if c})


DEFAULT = SkeinFamilies()

gen_G = DEFAULT.G
gen_Gp = DEFAULT.Gp
gen_Gpp = DEFAULT.Gpp
gen_J = DEFAULT.J
gen_Q = DEFAULT.Q
gen_Qp = DEFAULT.Qp
gen_Qpp = DEFAULT.Qpp
gen_U = DEFAULT.U
gen_Up = DEFAULT.Up
gen_Upp = DEFAULT.Upp
gen_sigma = DEFAULT.sigma
gen_F = DEFAULT.F
gen_W = DEFAULT.W

FAMILIES = {
    "G": gen_G, "Gp": gen_Gp, "Gpp": gen_Gpp, "J": gen_J, "Q": gen_Q,
    "U": gen_U, "Up": gen_Up, "Upp": gen_Upp, "F": gen_F, "sigma": gen_sigma, "W": gen_W,
}


def family(name: str, n: int) -> SkeinPoly:
    try:
        f = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}") from None
    return f(n)
