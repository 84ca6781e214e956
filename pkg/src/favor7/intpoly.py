"""Exact integer and rational polynomial arithmetic.

IntPolynomial stores arbitrary-precision integer coefficients, index = degree
of term.  The zero polynomial has an empty coefficient tuple and degree -1.

Resultant convention (documented, unit-tested):

    Res(p, q) = lc(p)^deg(q) * prod q(alpha) over roots alpha of p
              = det Sylvester(p, q)

so Res(x-1, x+1) = q(1) = 2, and Res(p, q) = (-1)^(deg p * deg q) Res(q, p).
The discriminant is disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        if any(not isinstance(c, int) for c in cs):
            raise TypeError("integer coefficients required")
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "IntPolynomial(0)"
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "IntPolynomial(" + " + ".join(terms) + ")"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        out = list(self.coeffs)
        out += [0] * (len(other.coeffs) - len(out))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c: int):
        """p(x + c), by synthetic division."""
        out = list(self.coeffs)
        n = len(out)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] += c * out[j + 1]
        return IntPolynomial(out)

    def scale_arg(self, num: int, den: int = 1):
        """den^deg * p(num*x/den), integer coefficients."""
        n = self.degree
        out = [c * num**i * den ** (n - i) for i, c in enumerate(self.coeffs)]
        return IntPolynomial(out)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self):
        """Divide out the content; sign normalized so lc > 0."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coeffs])

    def to_rational(self):
        return RatPolynomial([Fraction(c) for c in self.coeffs])


class RatPolynomial:
    """Polynomial over Q; denominators kept in lowest terms by Fraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, RatPolynomial) and self.coeffs == other.coeffs

    def __add__(self, other):
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return RatPolynomial(a)

    def __sub__(self, other):
        a = list(self.coeffs)
        a += [Fraction(0)] * (len(other.coeffs) - len(a))
        for i, c in enumerate(other.coeffs):
            a[i] -= c
        return RatPolynomial(a)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPolynomial([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lc = other.lc
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return RatPolynomial(q), RatPolynomial(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division not exact")
        return q

    def clear_denominators(self):
        """Primitive integer polynomial with the same roots (positive lc)."""
        if self.is_zero():
            return IntPolynomial([])
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ip = IntPolynomial([int(c * den) for c in self.coeffs])
        return ip.primitive_part()


def pseudo_rem(f: IntPolynomial, g: IntPolynomial, positive_scale=False):
    """prem(f, g) over Z: remainder of lc(g)^e * f by g with e = deg f - deg g + 1.

    With positive_scale, e is rounded up to even so the scaling factor is
    positive; sign sequences are then preserved (needed for Sturm chains).
    """
    if g.is_zero():
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    df, dg = f.degree, g.degree
    if df < dg:
        return f
    e = df - dg + 1
    if positive_scale and e % 2 == 1:
        e += 1
    rem = [c * g.lc**e for c in f.coeffs]
    gl = g.lc
    gc = g.coeffs
    while len(rem) - 1 >= dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg:
            break
        k = len(rem) - 1 - dg
        c = rem[-1]
        q, r = divmod(c, gl)
        if r:
            raise ArithmeticError("pseudo-division not exact")
        for i, gcf in enumerate(gc):
            rem[k + i] -= q * gcf
        rem.pop()
    return IntPolynomial(rem)


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd in Z[x] (positive leading coefficient)."""
    a, b = f.primitive_part(), g.primitive_part()
    while not b.is_zero():
        r = pseudo_rem(a, b)
        a, b = b, r.primitive_part()
    return a


def is_squarefree(f: IntPolynomial) -> bool:
    if f.degree < 1:
        return not f.is_zero()
    return poly_gcd(f, f.derivative()).degree == 0


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Res(p, q), exact, via a subresultant-style PRS.

    Convention: Res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a).
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return p.coeffs[0] ** q.degree
    if q.degree == 0:
        return q.coeffs[0] ** p.degree
    # Euclidean PRS over Q with exact bookkeeping of the scaling factors:
    # Res(p,q) = (-1)^(dp dq) lc(q)^(dp - dr) Res(q, r) for r = p mod q.
    sign = 1
    scale = Fraction(1)
    a, b = p.to_rational(), q.to_rational()
    while True:
        da, db = a.degree, b.degree
        _, r = a.divmod(b)
        if r.is_zero():
            return 0
        dr = r.degree
        if da % 2 and db % 2:
            sign = -sign
        scale *= b.lc ** (da - dr)
        if dr == 0:
            res = sign * scale * b.lc ** (0) * r.coeffs[0] ** db
            assert res.denominator == 1
            return int(res)
        a, b = b, r


def discriminant(p: IntPolynomial) -> int:
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree
    if n < 2:
        raise ValueError("degree >= 2 required")
    r = resultant(p, p.derivative())
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    val = Fraction(s * r, p.lc)
    assert val.denominator == 1
    return int(val)


def sturm_chain(p: IntPolynomial):
    """Sturm sequence with primitive-part normalization (signs preserved)."""
    chain = [p.primitive_part(), p.derivative().primitive_part()]
    while chain[-1].degree > 0:
        r = pseudo_rem(chain[-2], chain[-1], positive_scale=True)
        if r.is_zero():
            raise ValueError("squarefree required")
        nxt = r.primitive_part()
        # primitive_part normalizes lc > 0; restore the sign of -r
        if r.lc > 0:
            nxt = -nxt
        chain.append(nxt)
    return chain


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _sign_at_inf(p: IntPolynomial, positive: bool):
    if p.is_zero():
        return 0
    s = 1 if p.lc > 0 else -1
    if not positive and p.degree % 2:
        s = -s
    return s


def count_real_roots(p: IntPolynomial, lo=None, hi=None) -> int:
    """Distinct real roots of squarefree p in (lo, hi], default all of R."""
    if p.degree < 1:
        if p.is_zero():
            raise ValueError("zero polynomial")
        return 0
    if not is_squarefree(p):
        raise ValueError("squarefree required")
    chain = sturm_chain(p)
    if lo is None:
        v_lo = _sign_changes([_sign_at_inf(q, positive=False) for q in chain])
    else:
        v_lo = _sign_changes([q(lo) for q in chain])
    if hi is None:
        v_hi = _sign_changes([_sign_at_inf(q, positive=True) for q in chain])
    else:
        v_hi = _sign_changes([q(hi) for q in chain])
    return v_lo - v_hi


def sylvester_resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Resultant as a Bareiss determinant of the Sylvester matrix.

    Independent of the PRS route; used as a cross-check oracle.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("zero polynomial")
    n, m = p.degree, q.degree
    if n == 0:
        return p.coeffs[0] ** m
    if m == 0:
        return q.coeffs[0] ** n
    size = n + m
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(m):
        rows.append([0] * i + pc + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + qc + [0] * (n - 1 - i))
    return _bareiss_det(rows)


def _bareiss_det(a):
    n = len(a)
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
