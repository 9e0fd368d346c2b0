"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Rationals are :class:`fractions.Fraction` throughout (``Rat`` below).
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rat = Fraction
Number = Union[int, Fraction]


class DivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    # construction -----------------------------------------------------

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def linear_root(cls, root: Number) -> IntPoly:
        """Primitive linear factor ``den*x - num`` vanishing at ``root``."""
        root = Fraction(root)
        return cls((-root.numerator, root.denominator))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        out = cls.const(1)
        for a in roots:
            out = out * cls((-a, 1))
        return out

    @classmethod
    def from_json(cls, text: str) -> IntPoly:
        return cls(int(c) for c in json.loads(text))

    # basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    # ring operations --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        b = _as_poly(other).coeffs
        a = self.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _as_poly(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent; use exact_divide")
        out, base = IntPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, a: int) -> IntPoly:
        """The polynomial ``x -> self(x + a)``."""
        c = list(self.coeffs)
        d = len(c)
        for i in range(d - 1):
            for j in range(d - 2, i - 1, -1):
                c[j] += a * c[j + 1]
        return IntPoly(c)

    def derivative(self) -> IntPoly:
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    # evaluation -------------------------------------------------------

    def __call__(self, x: Number) -> Number:
        return eval_at(self, x)

    def sign_at(self, x: Number) -> int:
        """Sign of ``self(x)`` computed with integers only."""
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        v = 0
        bp = 1
        # homogeneous Horner: sum c_k a^k b^(d-k)
        for c in reversed(self.coeffs):
            v = v * a + c * bp
            bp *= b
        return (v > 0) - (v < 0)

    # division ---------------------------------------------------------

    def divmod_rational(self, d: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(r) - len(d.coeffs) + 1, 0)
        dl = d.lc
        for k in range(len(q) - 1, -1, -1):
            t = r[k + d.degree] / dl
            q[k] = t
            if t:
                for i, c in enumerate(d.coeffs):
                    r[k + i] -= t * c
        return q, r[: d.degree] if d.degree > 0 else []

    def exact_divide(self, d: IntPoly) -> IntPoly:
        """Quotient ``self / d`` in Z[x].

        Raises :class:`DivisionError` on a nonzero remainder or a
        non-integral quotient.
        """
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dd, dl = d.degree, d.lc
        q = [0] * max(len(r) - dd, 0)
        dc = d.coeffs
        for k in range(len(q) - 1, -1, -1):
            t, rem = divmod(r[k + dd], dl)
            if rem:
                raise DivisionError(f"{d} does not divide {self} in Z[x]")
            q[k] = t
            if t:
                for i, c in enumerate(dc):
                    r[k + i] -= t * c
        if any(r[:dd]):
            raise DivisionError(f"{d} does not divide {self}")
        return IntPoly(q)

    def divides(self, p: IntPoly) -> bool:
        _, r = p.divmod_rational(self)
        return not any(r)

    def prem(self, d: IntPoly) -> IntPoly:
        """Pseudo-remainder of ``lc(d)**(deg self - deg d + 1) * self`` by ``d``."""
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dd, dl = d.degree, d.lc
        if len(r) - 1 < dd:
            return IntPoly(r)
        e = len(r) - dd
        while r and len(r) - 1 >= dd:
            lead = r[-1]
            shift = len(r) - 1 - dd
            r = [c * dl for c in r]
            for i, c in enumerate(d.coeffs):
                r[shift + i] -= lead * c
            r.pop()
            e -= 1
            while r and r[-1] == 0:
                r.pop()
        scale = dl ** e
        return IntPoly(c * scale for c in r)

    # display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mon = "x" if k == 1 else f"x^{k}"
                body = mon if a == 1 else f"{a}*{mon}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p: IntPoly | int) -> IntPoly:
    return p if isinstance(p, IntPoly) else IntPoly.const(p)


X = IntPoly.x()


def eval_at(p: IntPoly, x: Number) -> Number:
    """Horner evaluation; exact for ``int`` and ``Fraction`` arguments."""
    v: Number = 0
    for c in reversed(p.coeffs):
        v = v * x + c
    return v


def exact_divide(p: IntPoly, d: IntPoly) -> IntPoly:
    return p.exact_divide(d)


def derivative(p: IntPoly) -> IntPoly:
    return p.derivative()


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient.

    Subresultant pseudo-remainder sequence: every intermediate stays in
    Z[x] and coefficient growth is only polynomial.
    """
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    if not q:
        return p.primitive()
    if not p:
        return q.primitive()
    a, b = (p, q) if p.degree >= q.degree else (q, p)
    a, b = a.primitive(), b.primitive()
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = a.prem(b)
        if not r:
            return b.primitive()
        if r.degree == 0:
            return IntPoly.const(1)
        div = g * h ** delta
        a, b = b, IntPoly(c // div for c in r.coeffs)
        g = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: ``p = c * prod f_i**m_i``.

    Returns ``(f_i, m_i)`` with each ``f_i`` primitive, squarefree, of positive
    degree and pairwise coprime, in increasing multiplicity.
    """
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    p = p.primitive()
    if p.degree <= 0:
        return []
    # all divisors below are primitive, so every quotient is integral
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_divide(a)
    d = dp.exact_divide(a) - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else b.primitive()
        if a.degree > 0:
            out.append((a.primitive(), k))
        b = b.exact_divide(a)
        d = (d.exact_divide(a) if d else IntPoly()) - b.derivative()
        k += 1
    return out


def squarefree_part(p: IntPoly) -> IntPoly:
    return p.primitive().exact_divide(poly_gcd(p, p.derivative()))


def multiplicity_at(p: IntPoly, root: Number) -> int:
    """Largest ``k`` with ``(den*x - num)**k`` dividing ``p``."""
    if not p:
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    lin = IntPoly.linear_root(root)
    p = p.primitive()
    k = 0
    while p.sign_at(root) == 0:
        p = p.exact_divide(lin)
        k += 1
    return k


def rational_roots(p: IntPoly) -> list[Fraction]:
    """All distinct rational roots of ``p``, ascending."""
    if not p:
        raise ValueError("zero polynomial")
    coeffs = list(p.coeffs)
    roots: set[Fraction] = set()
    k = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        roots.add(Fraction(0))
    q = IntPoly(coeffs)
    if q.degree <= 0:
        return sorted(roots)
    lead, tail = abs(q.lc), abs(q.coeffs[0])
    bound = root_bound(q)
    tail_divs = divisors(tail)
    for den in divisors(lead):
        limit = bound * den
        for num in tail_divs:
            if num > limit:
                break
            if gcd(num, den) != 1:
                continue
            for s in (num, -num):
                x = Fraction(s, den)
                if q.sign_at(x) == 0:
                    roots.add(x)
    return sorted(roots)


def root_bound(p: IntPoly) -> int:
    """Integer strictly above the modulus of every root (Fujiwara's bound)."""
    lead = abs(p.lc)
    d = p.degree
    best = 0
    for k in range(1, d + 1):
        c = abs(p.coeffs[d - k])
        if not c:
            continue
        if k == d:
            c = -(-c // 2)
        # ceil((c / lead) ** (1 / k))
        t = -(-c // lead)
        r = _iroot_ceil(t, k)
        best = max(best, r)
    return 2 * best + 1


def _iroot_ceil(t: int, k: int) -> int:
    r = int(round(t ** (1.0 / k))) if t < 2 ** 1000 else 1 << (t.bit_length() // k + 1)
    while r ** k < t:
        r += 1
    while r > 0 and (r - 1) ** k >= t:
        r -= 1
    return r


def _factorize(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def divisors(m: int) -> list[int]:
    """Positive divisors of ``m``, ascending."""
    m = abs(m)
    if m == 0:
        raise ValueError("divisors of 0")
    divs = [1]
    for prime, k in _factorize(m):
        divs = [d * prime ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


def from_factors(factors: Sequence[tuple[IntPoly, int]]) -> IntPoly:
    out = IntPoly.const(1)
    for f, m in factors:
        out = out * f ** m
    return out
