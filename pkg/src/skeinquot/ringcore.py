"""Sparse polynomial rings over the ground ring R = Z[q^+-1].

* ``XPoly``          -- R[x1, x2], keys (e_x1, e_x2) >= 0
* ``SkeinPoly``      -- R[x1, x2][y], keys e_y >= 0 with XPoly coefficients
* ``TwoVarLaurent``  -- R[u1^+-1, u2^+-1], the oracle ring for x_i = u_i + 1/u_i

The representation is nested so that the quotient reduction can walk
y-degrees from the top.  All values are immutable.
"""
from __future__ import annotations

import json
from math import comb
from typing import Dict, Optional

from .qlaurent import QLaurent, ZERO

__all__ = [
    "XPoly",
    "SkeinPoly",
    "TwoVarLaurent",
    "ParseError",
    "X1",
    "X2",
    "Y",
    "poly_arith",
    "tau",
    "substitute_u",
    "coeff_y",
    "deg_y",
    "serialize",
    "deserialize",
]

NEG_INF = float("-inf")


class ParseError(ValueError):
    """Malformed serialized polynomial; ``path`` names the offending element."""

    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


class _Sparse:
    """Sparse map key -> nonzero coefficient, with ring operations.

    Subclasses set ``_coeff`` (coefficient class with a ``lift`` classmethod)
    and ``_unit_key``; keys add under multiplication.
    """

    __slots__ = ("_t", "_h")
    _coeff = QLaurent
    _unit_key = None

    def __init__(self, terms=None):
        t = {}
        if terms:
            lift = self._coeff.lift
            for k, c in terms.items():
                self._check_key(k)
                c = lift(c)
                if c:
                    t[k] = t[k] + c if k in t else c
            t = {k: c for k, c in t.items() if c}
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        obj._h = None
        return obj

    @staticmethod
    def _check_key(k):
        pass

    @staticmethod
    def _key_add(a, b):
        return tuple(i + j for i, j in zip(a, b))

    @classmethod
    def lift(cls, x):
        if isinstance(x, cls):
            return x
        c = cls._coeff.lift(x)
        return cls._raw({cls._unit_key: c} if c else {})

    @classmethod
    def _try_coeff(cls, x):
        try:
            return cls._coeff.lift(x)
        except TypeError:
            return None

    def items(self):
        return self._t.items()

    def keys(self):
        return self._t.keys()

    def get(self, k):
        return self._t.get(k, self._coeff.lift(0))

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._t == other._t
        try:
            other = type(self).lift(other)
        except TypeError:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._h is None:
            self._h = hash((type(self).__name__, frozenset(self._t.items())))
        return self._h

    def __add__(self, other):
        if type(other) is not type(self):
            try:
                other = type(self).lift(other)
            except TypeError:
                return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            if k in t:
                v = t[k] + c
                if v:
                    t[k] = v
                else:
                    del t[k]
            else:
                t[k] = c
        return self._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            try:
                other = type(self).lift(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = type(self).lift(other)
        except TypeError:
            return NotImplemented
        return other - self

    def scale(self, c):
        """Multiply every coefficient by ``c`` (an element of the coefficient ring)."""
        if not c:
            return self._raw({})
        t = {}
        for k, v in self._t.items():
            w = v * c
            if w:
                t[k] = w
        return self._raw(t)

    def __mul__(self, other):
        if type(other) is not type(self):
            c = self._try_coeff(other)
            if c is None:
                return NotImplemented
            return self.scale(c)
        a, b = self._t, other._t
        if not a or not b:
            return self._raw({})
        if len(a) < len(b):
            a, b = b, a
        t = {}
        add = self._key_add
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = add(k1, k2)
                if k in t:
                    t[k] = t[k] + c1 * c2
                else:
                    t[k] = c1 * c2
        return self._raw({k: c for k, c in t.items() if c})

    def __rmul__(self, other):
        c = self._try_coeff(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = type(self).lift(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_coeffs(self, f):
        t = {}
        for k, c in self._t.items():
            w = f(c)
            if w:
                t[k] = w
        return self._raw(t)


class XPoly(_Sparse):
    """Element of R[x1, x2]: (e_x1, e_x2) -> nonzero QLaurent."""

    __slots__ = ()
    _coeff = QLaurent
    _unit_key = (0, 0)

    @staticmethod
    def _check_key(k):
        if not (isinstance(k, tuple) and len(k) == 2 and all(isinstance(e, int) and e >= 0 for e in k)):
            raise ValueError(f"bad XPoly exponent {k!r}")

    @staticmethod
    def _key_add(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "XPoly":
        return cls({(a, b): c})

    def bar(self) -> "XPoly":
        return self.map_coeffs(QLaurent.bar)

    def constant(self) -> QLaurent:
        return self._t.get((0, 0), ZERO)

    def __str__(self):
        return _render([((0,) + k, c) for k, c in self._t.items()])

    def __repr__(self):
        return f"XPoly({str(self)!r})"


class SkeinPoly(_Sparse):
    """Element of R[x1, x2, y], stored as e_y -> nonzero XPoly."""

    __slots__ = ()
    _coeff = XPoly
    _unit_key = 0

    @staticmethod
    def _check_key(k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"bad y-exponent {k!r}")

    @staticmethod
    def _key_add(a, b):
        return a + b

    @classmethod
    def monomial(cls, ey: int, ex1: int = 0, ex2: int = 0, c=1) -> "SkeinPoly":
        return cls({ey: XPoly.monomial(ex1, ex2, c)})

    @classmethod
    def from_terms(cls, terms) -> "SkeinPoly":
        """Build from an iterable of ((ey, ex1, ex2), QLaurent-or-int)."""
        nested: Dict[int, dict] = {}
        for (ey, a, b), c in terms:
            inner = nested.setdefault(ey, {})
            c = QLaurent.lift(c)
            inner[(a, b)] = inner[(a, b)] + c if (a, b) in inner else c
        return cls({ey: XPoly(inner) for ey, inner in nested.items()})

    def flat_terms(self):
        """Yield ((ey, ex1, ex2), QLaurent) for every monomial."""
        for ey, xp in self._t.items():
            for (a, b), c in xp.items():
                yield (ey, a, b), c

    def n_terms(self) -> int:
        return sum(len(xp) for xp in self._t.values())

    def deg_y(self):
        return max(self._t) if self._t else NEG_INF

    def coeff_y(self, d: int) -> XPoly:
        return self._t.get(d, _XZERO)

    def tau(self) -> "SkeinPoly":
        return self.map_coeffs(XPoly.bar)

    def __str__(self):
        return _render(list(self.flat_terms()))

    def __repr__(self):
        return f"SkeinPoly({str(self)!r})"


class TwoVarLaurent(_Sparse):
    """Element of R[u1^+-1, u2^+-1]: (e_u1, e_u2) -> nonzero QLaurent."""

    __slots__ = ()
    _coeff = QLaurent
    _unit_key = (0, 0)

    @staticmethod
    def _check_key(k):
        if not (isinstance(k, tuple) and len(k) == 2 and all(isinstance(e, int) for e in k)):
            raise ValueError(f"bad TwoVarLaurent exponent {k!r}")

    @staticmethod
    def _key_add(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "TwoVarLaurent":
        return cls({(a, b): c})

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for (a, b) in sorted(self._t, reverse=True):
            mono = "*".join(
                s for s in (_pw("u1", a), _pw("u2", b)) if s
            )
            parts.append(_join_coeff(self._t[(a, b)], mono))
        return _join(parts)

    def __repr__(self):
        return f"TwoVarLaurent({str(self)!r})"


_XZERO = XPoly()
X1 = SkeinPoly.monomial(0, 1, 0)
X2 = SkeinPoly.monomial(0, 0, 1)
Y = SkeinPoly.monomial(1)


# -- text rendering ----------------------------------------------------------

def _pw(name, e):
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _join_coeff(c: QLaurent, mono: str):
    """Return (negative?, text) for coefficient ``c`` times monomial text."""
    if not mono:
        if len(c) == 1:
            s = str(c)
            return (s.startswith("-"), s.lstrip("-"))
        return (False, f"({c})")
    if len(c) == 1:
        ((e, k),) = c.items()
        neg = k < 0
        k = abs(k)
        if e == 0:
            return (neg, mono if k == 1 else f"{k}*{mono}")
        return (neg, f"{str(QLaurent.monomial(e, k))}*{mono}")
    return (False, f"({c})*{mono}")


def _join(parts):
    neg, body = parts[0]
    s = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        s += (" - " if neg else " + ") + body
    return s


def _render(flat):
    if not flat:
        return "0"
    if len(flat) == 1 and flat[0][0] == (0, 0, 0):
        return str(flat[0][1])
    parts = []
    for (ey, a, b), c in sorted(flat, key=lambda kv: kv[0], reverse=True):
        mono = "*".join(s for s in (_pw("x1", a), _pw("x2", b), _pw("y", ey)) if s)
        parts.append(_join_coeff(c, mono))
    return _join(parts)


# -- module-level operations ---------------------------------------------------

def poly_arith(a: SkeinPoly, b, op: str) -> SkeinPoly:
    """add / sub / mul, or scalar_mul by a QLaurent, XPoly or int."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op in ("mul", "scalar_mul"):
        return a * b
    raise ValueError(f"unknown op {op!r}")


def tau(p: SkeinPoly) -> SkeinPoly:
    """Coefficient-wise q -> q^-1; x1, x2, y fixed."""
    return p.tau()


def coeff_y(p: SkeinPoly, d: int) -> XPoly:
    return p.coeff_y(d)


def deg_y(p: SkeinPoly):
    """Largest y-degree present, ``-inf`` for the zero polynomial."""
    return p.deg_y()


def _u_powers(which: int, n: int):
    """(u + 1/u)^k for k = 0..n as TwoVarLaurent in u1 (which=0) or u2."""
    out = []
    for k in range(n + 1):
        t = {}
        for i in range(k + 1):
            e = k - 2 * i
            key = (e, 0) if which == 0 else (0, e)
            t[key] = comb(k, i)
        out.append(TwoVarLaurent(t))
    return out


def substitute_u(p, y_image: Optional[TwoVarLaurent] = None) -> TwoVarLaurent:
    """Image under x1 -> u1 + 1/u1, x2 -> u2 + 1/u2 (and y -> y_image if given).

    Accepts a SkeinPoly or an XPoly.
    """
    if isinstance(p, XPoly):
        p = SkeinPoly.lift(p)
    dy = p.deg_y()
    if dy > 0 and y_image is None:
        raise ValueError("y-degree > 0 requires a y_image")
    if not p:
        return TwoVarLaurent()
    m1 = max((a for (_, a, _), _c in p.flat_terms()), default=0)
    m2 = max((b for (_, _, b), _c in p.flat_terms()), default=0)
    p1, p2 = _u_powers(0, m1), _u_powers(1, m2)
    total = TwoVarLaurent()
    ypow = TwoVarLaurent.lift(1)
    for ey in range(int(max(dy, 0)) + 1):
        xp = p.coeff_y(ey)
        if xp:
            acc = TwoVarLaurent()
            for (a, b), c in xp.items():
                acc = acc + (p1[a] * p2[b]).scale(c)
            total = total + acc * ypow
        if ey < dy:
            ypow = ypow * y_image
    return total


# -- JSON ------------------------------------------------------------------------

def _q_json(c: QLaurent):
    return [[e, str(c.coeff(e))] for e in sorted(c.terms, reverse=True)]


def skein_to_obj(p: SkeinPoly) -> dict:
    terms = []
    for ey in sorted(p.keys(), reverse=True):
        xp = p.coeff_y(ey)
        for (a, b) in sorted(xp.keys()):
            terms.append({"ey": ey, "ex1": a, "ex2": b, "q": _q_json(xp.get((a, b)))})
    return {"terms": terms}


def xpoly_to_obj(p: XPoly) -> dict:
    return {"terms": [{"ex1": a, "ex2": b, "q": _q_json(p.get((a, b)))} for (a, b) in sorted(p.keys())]}


def twovar_to_obj(p: TwoVarLaurent) -> dict:
    return {"terms": [{"eu1": a, "eu2": b, "q": _q_json(p.get((a, b)))} for (a, b) in sorted(p.keys())]}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def serialize(p: SkeinPoly) -> str:
    """Canonical JSON text for ``p``."""
    return dumps(skein_to_obj(p))


def _int_field(obj, key, path, nonneg=True):
    if key not in obj:
        raise ParseError(path, f"missing field {key!r}")
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{path}.{key}", "expected an integer")
    if nonneg and v < 0:
        raise ParseError(f"{path}.{key}", "expected a nonnegative integer")
    return v


def _q_from_obj(arr, path) -> QLaurent:
    if not isinstance(arr, list):
        raise ParseError(path, "expected a list of [exp, coeff] pairs")
    t = {}
    for i, pair in enumerate(arr):
        pp = f"{path}[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(pp, "expected [exp, coeff]")
        e, c = pair
        if not isinstance(e, int) or isinstance(e, bool):
            raise ParseError(f"{pp}[0]", "exponent must be an integer")
        if isinstance(c, str):
            try:
                c = int(c)
            except ValueError:
                raise ParseError(f"{pp}[1]", f"not a decimal integer: {c!r}") from None
        elif not isinstance(c, int) or isinstance(c, bool):
            raise ParseError(f"{pp}[1]", "coefficient must be a decimal string")
        t[e] = t.get(e, 0) + c
    return QLaurent(t)


def skein_from_obj(obj, path="$") -> SkeinPoly:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ParseError(path, "expected an object with a 'terms' list")
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise ParseError(f"{path}.terms", "expected a list")
    flat = []
    for i, term in enumerate(terms):
        tp = f"{path}.terms[{i}]"
        if not isinstance(term, dict):
            raise ParseError(tp, "expected an object")
        ey = _int_field(term, "ey", tp)
        a = _int_field(term, "ex1", tp)
        b = _int_field(term, "ex2", tp)
        if "q" not in term:
            raise ParseError(tp, "missing field 'q'")
        flat.append(((ey, a, b), _q_from_obj(term["q"], f"{tp}.q")))
    return SkeinPoly.from_terms(flat)


def xpoly_from_obj(obj, path="$") -> XPoly:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ParseError(path, "expected an object with a 'terms' list")
    t = {}
    for i, term in enumerate(obj["terms"]):
        tp = f"{path}.terms[{i}]"
        if not isinstance(term, dict):
            raise ParseError(tp, "expected an object")
        key = (_int_field(term, "ex1", tp), _int_field(term, "ex2", tp))
        c = _q_from_obj(term.get("q"), f"{tp}.q")
        t[key] = t[key] + c if key in t else c
    return XPoly(t)


def deserialize(text: str) -> SkeinPoly:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("$", f"invalid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None
    return skein_from_obj(obj)
