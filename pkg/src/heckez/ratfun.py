"""
Exact arithmetic in the Laurent polynomial ring Z[v, v^-1] and its fraction
field Q(v).

Polynomials in Z[v] are stored internally as tuples of Python ints in
ascending order of exponent, with no trailing zeros; `()` is the zero
polynomial. A `RatFun` keeps a numerator and denominator in Z[v] in the
canonical form

* `gcd(num, den) = 1` in Q[v] (in particular `v` does not divide both),
* the denominator has positive leading coefficient,
* the integer contents of `num` and `den` are coprime,

so two `RatFun` values are equal as rational functions exactly when their
stored tuples agree. Negative powers of `v` are absorbed into the
denominator, which is lossless because `v` is a unit.

>>> a = RatFun.parse("1/(v - 1)") + RatFun.parse("1/(v + 1)")
>>> str(a)
'(2*v)/(v^2 - 1)'
>>> RatFun.parse("(v^2 - 1)/(v - 1)").eval_at_one()
Fraction(2, 1)
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Union

__all__ = [
    "LaurentPoly", "RatFun", "PoleError",
    "V", "ONE", "ZERO", "as_ratfun",
]

Poly = tuple  # tuple[int, ...], ascending coefficients, trimmed


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at one of its poles."""


# ---------------------------------------------------------------------------
# dense integer polynomials


def _trim(c) -> Poly:
    end = len(c)
    while end and not c[end - 1]:
        end -= 1
    return tuple(c[:end])


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _psub(a: Poly, b: Poly) -> Poly:
    return _padd(a, _pneg(b))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _pscale(a: Poly, c: int) -> Poly:
    if not c:
        return ()
    return tuple(c * x for x in a)


def _content(a: Poly) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _valuation(a: Poly) -> int:
    for i, x in enumerate(a):
        if x:
            return i
    raise ValueError("valuation of the zero polynomial")


def _primitive(a: Poly) -> Poly:
    c = _content(a)
    if a and a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of `a` by `b` (with `lc(b)` powers absorbed)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        g = gcd(lr, lb)
        mr, mb = lb // g, lr // g
        r = [mr * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= mb * y
        # leading term cancels by construction
        r.pop()
        while r and not r[-1]:
            r.pop()
    return tuple(r)


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[v], normalized to positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else ())
    return _primitive(a)


def _pdivexact(a: Poly, b: Poly) -> Poly:
    """Quotient `a / b` in Z[v]; `b` must divide `a` exactly."""
    if len(b) == 1:
        c = b[0]
        return tuple(x // c for x in a)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db) if len(a) > db else []
    while r and len(r) - 1 >= db:
        lr = r[-1]
        if lr % lb:
            raise ArithmeticError("inexact polynomial division")
        c = lr // lb
        shift = len(r) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        while r and not r[-1]:
            r.pop()
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _peval(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _poly_str(c, low: int = 0) -> str:
    """Dense printing in decreasing exponent; `low` is the exponent of c[0]."""
    parts = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if not x:
            continue
        k = i + low
        mag = abs(x)
        if k == 0:
            body = str(mag)
        else:
            mon = "v" if k == 1 else f"v^{k}"
            body = mon if mag == 1 else f"{mag}*{mon}"
        if not parts:
            parts.append("-" + body if x < 0 else body)
        else:
            parts.append((" - " if x < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """An element of Z[v, v^-1], immutable.

    Stored as `low` (exponent of the first coefficient) and a trimmed tuple of
    integer coefficients with a nonzero first entry.
    """

    __slots__ = ("low", "c")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = {k: x for k, x in dict(coeffs).items() if x}
        if not items:
            self.low, self.c = 0, ()
            return
        lo, hi = min(items), max(items)
        self.low = lo
        self.c = tuple(items.get(k, 0) for k in range(lo, hi + 1))

    @classmethod
    def _raw(cls, low: int, c: Poly) -> "LaurentPoly":
        obj = cls.__new__(cls)
        if not c:
            obj.low, obj.c = 0, ()
            return obj
        k = 0
        while not c[k]:
            k += 1
        obj.low = low + k
        obj.c = tuple(c[k:]) if k else tuple(c)
        return obj

    @property
    def coeffs(self) -> dict[int, int]:
        """Exponent-to-coefficient map, with no zero entries."""
        return {self.low + i: x for i, x in enumerate(self.c) if x}

    def is_zero(self) -> bool:
        return not self.c

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.c:
            return other
        if not other.c:
            return self
        lo = min(self.low, other.low)
        a = (0,) * (self.low - lo) + self.c
        b = (0,) * (other.low - lo) + other.c
        return LaurentPoly._raw(lo, _padd(a, b))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.low, _pneg(self.c))

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._raw(self.low + other.low, _pmul(self.c, other.c))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by `v**k`."""
        if not self.c:
            return self
        return LaurentPoly._raw(self.low + k, self.c)

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.c == other.c

    def __hash__(self):
        return hash((self.low, self.c))

    def __str__(self):
        return _poly_str(self.c, self.low)

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly._raw(0, (x,) if x else ())
    return NotImplemented


# ---------------------------------------------------------------------------
# rational functions

Scalar = Union[int, Fraction, "RatFun", LaurentPoly]


class RatFun:
    """An element of Q(v) in canonical form (see module docstring)."""

    __slots__ = ("_n", "_d")

    def __init__(self, num: Scalar = 0, den: Scalar = 1):
        a = as_ratfun(num)
        if not (isinstance(den, int) and den == 1):
            a = a / as_ratfun(den)
        self._n, self._d = a._n, a._d

    # -- construction ---------------------------------------------------

    @classmethod
    def _raw(cls, n: Poly, d: Poly) -> "RatFun":
        obj = cls.__new__(cls)
        obj._n, obj._d = n, d
        return obj

    @classmethod
    def _make(cls, n: Poly, d: Poly) -> "RatFun":
        """Canonicalize the fraction n/d of integer polynomials."""
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not n:
            return ZERO
        k = min(_valuation(n), _valuation(d))
        if k:
            n, d = n[k:], d[k:]
        if len(d) > 1 and any(d[:-1]):
            g = _pgcd(n, d)
            if len(g) > 1:
                n, d = _pdivexact(n, g), _pdivexact(d, g)
        c = gcd(_content(n), _content(d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = tuple(x // c for x in n)
            d = tuple(x // c for x in d)
        return cls._raw(n, d)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFun":
        if not p.c:
            return ZERO
        if p.low >= 0:
            return cls._raw((0,) * p.low + p.c, (1,))
        return cls._make(p.c, (0,) * (-p.low) + (1,))

    @classmethod
    def parse(cls, text: str) -> "RatFun":
        """Parse an expression in `v` built from integers, + - * / ^ and
        parentheses. Accepts everything `str()` produces."""
        return _Parser(text).parse()

    # -- accessors ------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self._n)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self._d)

    def is_zero(self) -> bool:
        return not self._n

    def is_polynomial(self) -> bool:
        """True iff the canonical denominator is 1 (an element of Z[v] or Q[v])."""
        return len(self._d) == 1 and self._d[0] == 1

    def is_laurent(self) -> bool:
        """True iff this lies in Z[v, v^-1]."""
        d = self._d
        return d[-1] == 1 and not any(d[:-1])

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return LaurentPoly._raw(-(len(self._d) - 1), self._n)

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self._n[0] if self._n else 0, self._d[0])

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._n:
            return self
        if not self._n:
            return other
        d1, d2 = self._d, other._d
        if d1 == d2:
            if len(d1) == 1:
                n = _padd(self._n, other._n)
                return RatFun._make(n, d1) if d1[0] != 1 else (
                    RatFun._raw(n, d1) if n else ZERO)
            return RatFun._make(_padd(self._n, other._n), d1)
        return RatFun._make(
            _padd(_pmul(self._n, d2), _pmul(other._n, d1)), _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(_pneg(self._n), self._d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._n or not other._n:
            return ZERO
        if self._d == (1,) and other._d == (1,):
            return RatFun._raw(_pmul(self._n, other._n), (1,))
        return RatFun._make(_pmul(self._n, other._n), _pmul(self._d, other._d))

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self._n:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun._make(self._d, self._n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- evaluation -----------------------------------------------------

    def evaluate(self, x) -> Fraction:
        """Exact value at the rational point `x`."""
        x = Fraction(x)
        d = _peval(self._d, x)
        if d == 0:
            raise PoleError(f"{self} has a pole at v={x}")
        return Fraction(_peval(self._n, x)) / d

    def eval_at_one(self) -> Fraction:
        """Value at v=1. Removable singularities are already cancelled in
        canonical form, so a vanishing denominator is a genuine pole."""
        d = sum(self._d)
        if d == 0:
            raise PoleError(f"{self} has a pole at v=1")
        return Fraction(sum(self._n), d)

    # -- comparison and printing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        if len(self._d) == 1 and len(self._n) <= 1:
            return hash(self.constant())
        return hash((self._n, self._d))

    def __bool__(self):
        return bool(self._n)

    def __str__(self):
        num = _poly_str(self._n)
        if self._d == (1,):
            return num
        den = _poly_str(self._d)
        if len(self._n) > 1:
            num = f"({num})"
        nz = [x for x in self._d if x]
        if len(nz) > 1 or (len(self._d) > 1 and nz[0] != 1):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFun({str(self)!r})"


def _coerce(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, int):
        return RatFun._raw((x,) if x else (), (1,))
    if isinstance(x, Fraction):
        return RatFun._make((x.numerator,) if x else (), (x.denominator,))
    if isinstance(x, LaurentPoly):
        return RatFun.from_laurent(x)
    return NotImplemented


def as_ratfun(x: Scalar) -> RatFun:
    """Coerce an int, Fraction, LaurentPoly or RatFun to a RatFun."""
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(v)")
    return r


ZERO = RatFun._raw((), (1,))
ONE = RatFun._raw((1,), (1,))
V = RatFun._raw((0, 1), (1,))


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(v)|(\S))")


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                break
            num, var, op = m.groups()
            self.toks.append(int(num) if num is not None else (var or op))
            pos = m.end()
        self.i = 0
        self.text = text

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def _next(self):
        t = self._peek()
        self.i += 1
        return t

    def _fail(self):
        raise ValueError(f"cannot parse rational function {self.text!r}")

    def parse(self) -> RatFun:
        if not self.toks:
            self._fail()
        r = self._expr()
        if self._peek() is not None:
            self._fail()
        return r

    def _expr(self):
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._next() == "-" else 1
        r = self._term() * sign
        while self._peek() in ("+", "-"):
            op = self._next()
            t = self._term()
            r = r + t if op == "+" else r - t
        return r

    def _term(self):
        r = self._power()
        while self._peek() in ("*", "/"):
            op = self._next()
            f = self._power()
            r = r * f if op == "*" else r / f
        return r

    def _power(self):
        base = self._atom()
        if self._peek() == "^":
            self._next()
            sign = 1
            if self._peek() == "-":
                self._next()
                sign = -1
            k = self._next()
            if not isinstance(k, int):
                self._fail()
            return base ** (sign * k)
        return base

    def _atom(self):
        t = self._next()
        if isinstance(t, int) and not isinstance(t, bool):
            return as_ratfun(t)
        if t == "v":
            return V
        if t == "(":
            r = self._expr()
            if self._next() != ")":
                self._fail()
            return r
        if t == "-":
            return -self._atom()
        self._fail()
