"""Exact Laurent polynomials in q with integer coefficients.

This is the ground ring ``R = Z[q, q^-1]``.  Elements are immutable and
sparse (exponent -> nonzero int).  Besides ring arithmetic the module
provides the divisibility and residue machinery the quotient reduction
needs: exact division, canonical residues modulo ``q^m - 1`` (the ideal
generated by ``{n+1}`` when ``m = 4n + 4``) and modulo a monic integer
polynomial with unit constant term (the ideal generated by ``[n+1]``).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "QLaurent",
    "Q",
    "ONE",
    "ZERO",
    "arith",
    "bracket",
    "qint",
    "bar",
    "divide_exact",
    "divmod_cyclic",
    "residue_cyclic",
    "residue_monic",
    "poly_gcd",
    "content",
]


class QLaurent:
    """A Laurent polynomial sum_e c_e q^e with c_e in Z."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            t = {}
        elif isinstance(terms, int):
            t = {0: terms} if terms else {}
        else:
            t = {}
            for e, c in terms.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("QLaurent terms must map int -> int")
                if c:
                    t[e] = t.get(e, 0) + c
            t = {e: c for e, c in t.items() if c}
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, t: dict) -> "QLaurent":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._t = t
        obj._h = None
        return obj

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "QLaurent":
        return cls._raw({e: c} if c else {})

    @classmethod
    def lift(cls, x) -> "QLaurent":
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as QLaurent")

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def coeff(self, e: int) -> int:
        return self._t.get(e, 0)

    def degree(self):
        """Top q-exponent; ``-inf`` for zero."""
        return max(self._t) if self._t else float("-inf")

    def valuation(self):
        return min(self._t) if self._t else float("inf")

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def is_unit(self) -> bool:
        """True for ``+-q^k``, the units of Z[q^+-1]."""
        if len(self._t) != 1:
            return False
        (c,) = self._t.values()
        return c in (1, -1)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            other = QLaurent.lift(other)
        except TypeError:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return QLaurent._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        try:
            other = QLaurent.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = QLaurent.lift(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return QLaurent._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, QLaurent):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return QLaurent._raw({e + eb: c * cb for e, c in a.items()})
        t: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                t[k] = t.get(k, 0) + c1 * c2
        return QLaurent._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            ((e, c),) = self._t.items()
            return QLaurent._raw({e * k: c ** (-k)})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q^k."""
        if not k:
            return self
        return QLaurent._raw({e + k: c for e, c in self._t.items()})

    def bar(self) -> "QLaurent":
        """The involution q -> q^-1."""
        return QLaurent._raw({-e: c for e, c in self._t.items()})

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QLaurent):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- rendering --------------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            sign = "-" if c < 0 else "+"
            body = _term(abs(c), e)
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"QLaurent({str(self)!r})"


def _term(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    power = "q" if e == 1 else f"q^{e}"
    return power if c == 1 else f"{c}*{power}"


ZERO = QLaurent()
ONE = QLaurent(1)
Q = QLaurent.monomial(1)


def arith(a: QLaurent, b: QLaurent, op: str) -> QLaurent:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def bracket(k: int) -> QLaurent:
    """{k} = q^(2k) - q^(-2k)."""
    if k == 0:
        return ZERO
    return QLaurent._raw({2 * k: 1, -2 * k: -1})


def qint(k: int) -> QLaurent:
    """[k] = {k}/{1} = q^(2k-2) + q^(2k-6) + ... + q^(2-2k)."""
    if k == 0:
        return ZERO
    if k < 0:
        return -qint(-k)
    return QLaurent._raw({2 * k - 2 - 4 * i: 1 for i in range(k)})


def bar(a: QLaurent) -> QLaurent:
    return a.bar()


def _dense(a: QLaurent, lo: int) -> list:
    hi = a.degree()
    out = [0] * (hi - lo + 1)
    for e, c in a.items():
        out[e - lo] = c
    return out


def _from_dense(coeffs: Iterable[int], lo: int = 0) -> QLaurent:
    return QLaurent._raw({i + lo: c for i, c in enumerate(coeffs) if c})


def divide_exact(a: QLaurent, d: QLaurent) -> Optional[QLaurent]:
    """Return s with a == s*d in Z[q^+-1], or None when d does not divide a."""
    if not d:
        raise ValueError("division by zero")
    if not a:
        return ZERO
    va, vd = a.valuation(), d.valuation()
    num = _dense(a, va)
    den = _dense(d, vd)
    n, m = len(num) - 1, len(den) - 1
    if n < m:
        return None
    lc = den[-1]
    quot = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c = num[i + m]
        if not c:
            continue
        if c % lc:
            return None
        f = c // lc
        quot[i] = f
        for j, dc in enumerate(den):
            if dc:
                num[i + j] -= f * dc
    if any(num):
        return None
    return _from_dense(quot, va - vd)


def divmod_cyclic(a: QLaurent, m: int, slack: int = 0):
    """Split a = quot*(q^m - 1) + res with res supported on [0, m + slack).

    Exponents already inside the window are kept; the rest are folded mod m.
    With ``slack == 0`` the residue is the canonical one.
    """
    if m < 1:
        raise ValueError("modulus exponent must be positive")
    res: dict = {}
    quot: dict = {}
    hi = m + slack
    for e, c in a.items():
        r = e if 0 <= e < hi else e % m
        res[r] = res.get(r, 0) + c
        k = (e - r) // m
        if k > 0:
            for i in range(k):
                x = r + i * m
                quot[x] = quot.get(x, 0) + c
        elif k < 0:
            for i in range(k, 0):
                x = r + i * m
                quot[x] = quot.get(x, 0) - c
    return (QLaurent._raw({e: c for e, c in quot.items() if c}),
            QLaurent._raw({e: c for e, c in res.items() if c}))


def residue_cyclic(a: QLaurent, m: int) -> QLaurent:
    """Canonical representative of a mod (q^m - 1), exponents in [0, m)."""
    if m < 1:
        raise ValueError("modulus exponent must be positive")
    return divmod_cyclic(a, m)[1]


def residue_monic(a: QLaurent, d: QLaurent) -> QLaurent:
    """Canonical representative of a modulo the ideal (d).

    ``d`` must be an integer polynomial in q (no negative exponents), monic,
    of degree >= 1, with constant term +-1.  The result has exponents in
    ``[0, deg d)``.
    """
    if not d or d.valuation() < 0:
        raise ValueError("modulus must be a polynomial in q")
    deg = d.degree()
    c0 = d.coeff(0)
    if deg < 1 or d.coeff(deg) != 1 or c0 not in (1, -1):
        raise ValueError("modulus must be monic of degree >= 1 with constant term +-1")
    dd = _dense(d, 0)
    if not a:
        return ZERO
    shift = max(0, -a.valuation())
    num = _dense(a.shift(shift), 0)
    # Euclidean remainder by the monic modulus
    for i in range(len(num) - 1, deg - 1, -1):
        f = num[i]
        if f:
            base = i - deg
            for j, dc in enumerate(dd):
                if dc:
                    num[base + j] -= f * dc
    rem = (num + [0] * deg)[:deg]
    # q^-1 == -c0 * (d - c0)/q  mod d
    h = dd[1:]
    for _ in range(shift):
        r0 = rem[0]
        rem = rem[1:] + [0]
        if r0:
            for j, hc in enumerate(h):
                if hc:
                    rem[j] -= c0 * r0 * hc
    return _from_dense(rem)


def content(a: QLaurent) -> int:
    g = 0
    for c in a._t.values():
        g = gcd(g, c)
    return g


def poly_gcd(a: QLaurent, b: QLaurent) -> QLaurent:
    """gcd over Q[q] of two polynomials, returned primitive with positive lead.

    Powers of q are ignored (they are units in R); zero inputs act as identity.
    """
    if not a:
        a, b = b, a
    if not a:
        return ZERO
    fa = [Fraction(c) for c in _dense(a, a.valuation())]
    fb = [Fraction(c) for c in _dense(b, b.valuation())] if b else []
    while fb:
        while len(fa) >= len(fb) and fa:
            f = fa[-1] / fb[-1]
            off = len(fa) - len(fb)
            for j, c in enumerate(fb):
                fa[off + j] -= f * c
            while fa and fa[-1] == 0:
                fa.pop()
        fa, fb = fb, fa
    den = 1
    for c in fa:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fa]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return _from_dense([c // g for c in ints])
