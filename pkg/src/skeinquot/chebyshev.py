"""Chebyshev polynomials S_n, T_n and T-hat_n for every integer index.

Polynomials live in Z[v] for a single formal variable v and are later
instantiated at x1, x2 or y.  Coefficients are plain ints: every Chebyshev
polynomial has integer coefficients, and they embed into R = Z[q^+-1].
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .ringcore import TwoVarLaurent

__all__ = ["UniPoly", "cheb_S", "cheb_T", "cheb_That", "cheb_verify", "V"]


class UniPoly:
    """Dense univariate integer polynomial; ``coeffs[i]`` multiplies v^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, z in enumerate(b):
                    out[i + j] += x * z
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, v, one=1):
        """Horner evaluation at ``v``; ``one`` is the unit of v's ring."""
        acc = one * 0
        for c in reversed(self.coeffs):
            acc = acc * v + one * c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        terms = [f"{c}*v^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UniPoly(" + " + ".join(reversed(terms)) + ")"


V = UniPoly([0, 1])


@lru_cache(maxsize=None)
def cheb_S(n: int) -> UniPoly:
    """Second kind: S_0 = 1, S_1 = v, S_n = v S_{n-1} - S_{n-2}; S_{-n-1} = -S_{n-1}."""
    if n < 0:
        # S_{-1} = 0 falls out of the rule with n = 0
        return -cheb_S(-n - 2) if n <= -2 else UniPoly()
    if n == 0:
        return UniPoly([1])
    if n == 1:
        return V
    return V * cheb_S(n - 1) - cheb_S(n - 2)


@lru_cache(maxsize=None)
def cheb_T(n: int) -> UniPoly:
    """First kind: T_0 = 2, T_1 = v, T_n = v T_{n-1} - T_{n-2}; T_{-n} = T_n."""
    if n < 0:
        return cheb_T(-n)
    if n == 0:
        return UniPoly([2])
    if n == 1:
        return V
    return V * cheb_T(n - 1) - cheb_T(n - 2)


def cheb_That(n: int) -> UniPoly:
    """T_n with T_0 replaced by 1."""
    return UniPoly([1]) if n == 0 else cheb_T(n)


def _u_laurent(p: UniPoly) -> TwoVarLaurent:
    u_sum = TwoVarLaurent({(1, 0): 1, (-1, 0): 1})
    return p(u_sum, TwoVarLaurent.lift(1))


def _u(e: int) -> TwoVarLaurent:
    return TwoVarLaurent.monomial(e, 0)


def cheb_verify(max_n: int) -> Optional[Tuple[str, int]]:
    """Check the Chebyshev identities for 0 <= n <= max_n.

    Returns None when everything holds, otherwise the first failing
    ``(identity, n)`` pair.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    for n in range(max_n + 1):
        if V * cheb_T(n) != cheb_S(n + 1) - cheb_S(n - 3):
            return ("T1_Tn", n)
        if cheb_T(-n) != cheb_T(n):
            return ("T_even", n)
        if cheb_S(-n - 1) != -cheb_S(n - 1):
            return ("S_reflect", n)
        if V * cheb_S(n) != cheb_S(n + 1) + cheb_S(n - 1):
            return ("S1_Sn", n)
        # the u-definitions hold for negative indices too
        for k in (n, -n):
            if _u_laurent(cheb_T(k)) != _u(k) + _u(-k):
                return ("T_u_sub", k)
            # S_k(u + 1/u) * (u - 1/u) == u^(k+1) - u^(-k-1)
            if _u_laurent(cheb_S(k)) * (_u(1) - _u(-1)) != _u(k + 1) - _u(-k - 1):
                return ("S_u_sub", k)
    return None
