"""Newton polygons, ramification certificates and fractional-ring arithmetic.

The fractional-element rules implemented here work in quotients
R_d = Kbar / (p/d) O_Kbar with ord_p(d) < 1:

  B1  ord_p of a nonzero class is the ord of any representative;
  B2  r^q = class of x^q, defined when p x^(q-1) is integral;
  B3  (x+y)^q = x^q + y^q in R_d when d x^q and d y^q are integral;
  B4  projection R_d -> R_d' exists when ord_p(d) <= ord_p(d').

FracElt carries a symbolic valuation lane and an optional concrete lane in the
truncated model W(F8)[pi]/(pi^7-2, pi^(7M)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .intpoly import IntPolynomial
from .localmodel import LocalModel


def _ord(n: int, p: int):
    if n == 0:
        return None  # infinity
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class Segment:
    """One side of the lower hull: from (i0, v0) to (i1, v1)."""

    i0: int
    v0: int
    i1: int
    v1: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.v1 - self.v0, self.i1 - self.i0)

    @property
    def length(self) -> int:
        return self.i1 - self.i0

    @property
    def root_valuation(self) -> Fraction:
        return -self.slope

    @property
    def denominator(self) -> int:
        return self.slope.denominator

    @property
    def residual_degree(self) -> int:
        return self.length // self.denominator


class NewtonPolygon:
    """Lower convex hull of (i, ord_p(a_i)) for p = sum a_i x^i."""

    def __init__(self, poly: IntPolynomial, prime: int):
        if poly.is_zero():
            raise ValueError("zero polynomial")
        if prime < 2:
            raise ValueError("prime >= 2 required")
        self.poly = poly
        self.prime = prime
        pts = []
        for i, c in enumerate(poly.coeffs):
            v = _ord(c, prime)
            if v is not None:
                pts.append((i, v))
        self.points = pts
        self.vertices = _lower_hull(pts)
        self.segments = [
            Segment(a[0], a[1], b[0], b[1])
            for a, b in zip(self.vertices, self.vertices[1:])
        ]

    @property
    def slopes(self):
        """(slope, multiplicity) pairs, multiplicity = lattice length."""
        return [(s.slope, s.length) for s in self.segments]

    def root_valuations(self):
        """Multiset of ord_p of the roots, as (valuation, count) pairs."""
        return [(s.root_valuation, s.length) for s in self.segments]

    def residual_polynomial(self, seg: Segment):
        """Residual polynomial of a segment, over F_p as a coefficient list.

        Degree = length/denominator; coefficient j comes from the lattice
        point (i0 + j*b, v0 + j*h) for slope h/b in lowest terms.
        """
        h = seg.v1 - seg.v0
        ell = seg.length
        g = gcd(abs(h), ell) if h else ell
        b = ell // g
        hh = h // g
        m = seg.residual_degree
        p = self.prime
        out = []
        for j in range(m + 1):
            i = seg.i0 + j * b
            expect = seg.v0 + j * hh
            c = self.poly.coeffs[i] if i < len(self.poly.coeffs) else 0
            if c == 0 or _ord(c, p) > expect:
                out.append(0)
            else:
                out.append((c // p**expect) % p)
        return out

    def ramification_certificate(self):
        """Per-segment data: (slope, denominator b, message 'b divides e')."""
        out = []
        for s in self.segments:
            out.append(
                {
                    "slope": s.slope,
                    "root_valuation": s.root_valuation,
                    "length": s.length,
                    "denominator": s.denominator,
                    "certifies": f"slope denominator {s.denominator} divides the local ramification index",
                }
            )
        return out

    def single_slope(self):
        return self.segments[0] if len(self.segments) == 1 else None


def _lower_hull(points):
    pts = sorted(points)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop middle point if it lies on or above the new edge
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_polygon(p: IntPolynomial, prime: int) -> NewtonPolygon:
    return NewtonPolygon(p, prime)


# F2[x] helpers for residual polynomials --------------------------------


def f2poly_is_irreducible(coeffs) -> bool:
    """Irreducibility over F2 of a small polynomial given as a 0/1 list."""
    cs = [c & 1 for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    n = len(cs) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if cs[0] == 0:  # divisible by x
        return False
    # trial division by all monic polys of degree <= n//2
    for d in range(1, n // 2 + 1):
        for mask in range(1 << d):
            div = [(mask >> j) & 1 for j in range(d)] + [1]
            if _f2poly_rem(cs, div) == [0] * 0:
                return False
    return True


def _f2poly_rem(a, b):
    a = a[:]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        k = len(a) - 1 - db
        for i, c in enumerate(b):
            a[k + i] ^= c
        while a and a[-1] == 0:
            a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


# Fractional elements ---------------------------------------------------


class FracRingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class FracRing:
    """R_d = Kbar/(p/d)O, identified by ord_p(d) < 1."""

    d_ord: Fraction

    def __post_init__(self):
        if self.d_ord >= 1:
            raise ValueError("ord_p(d) < 1 required")

    @property
    def modulus_ord(self) -> Fraction:
        """ord_p(p/d) = 1 - ord_p(d) > 0."""
        return 1 - self.d_ord

    def project_to(self, other: "FracRing"):
        """B4: projection exists when ord_p(d) <= ord_p(d')."""
        if self.d_ord > other.d_ord:
            raise FracRingError("no projection R_d -> R_d' with ord(d) > ord(d')")
        return other


@dataclass(frozen=True)
class FracElt:
    """Class in R_d with symbolic valuation; optionally a concrete lift.

    The concrete lane stores the lift as (model, element, shift): the value is
    element * pi^(-shift) with `element` integral in the truncated model.
    """

    ord: Fraction  # ord_p; use None-like big value for the zero class
    ring: FracRing
    rep: tuple | None = None  # (LocalModel, O-element, shift)

    def is_zero_class(self) -> bool:
        return self.ord >= self.ring.modulus_ord

    def normalized_ord(self):
        """B1: ord of the class; infinite (None) if the class is zero."""
        if self.is_zero_class():
            return None
        return self.ord


def fracring_pow_q(x: FracElt, q: int, p: int = 2) -> FracElt:
    """B2: q-th power on R_d, defined when p*x^(q-1) is integral."""
    if 1 + (q - 1) * x.ord < 0:
        raise FracRingError("power not well-defined in R_d")
    rep = None
    if x.rep is not None:
        model, elt, shift = x.rep
        rep = (model, model.pow(elt, q), shift * q)
    return FracElt(x.ord * q, x.ring, rep)


def fracring_add_freshman(x: FracElt, y: FracElt, q: int, p: int = 2) -> FracElt:
    """B3: (x+y)^q = x^q + y^q in R_d when d x^q and d y^q are integral."""
    if x.ring != y.ring:
        raise FracRingError("operands in different fractional rings")
    d = x.ring.d_ord
    if d + q * x.ord < 0 or d + q * y.ord < 0:
        raise FracRingError("freshman-dream precondition failed: d*x^q not integral")
    val = q * min(x.ord, y.ord)
    rep = None
    if x.rep is not None and y.rep is not None:
        mx, ex, sx = x.rep
        my, ey, sy = y.rep
        if mx.m == my.m:
            m = mx
            s = max(sx, sy)
            lift_x = m.mul(ex, m.pow(m.pi(), s - sx))
            lift_y = m.mul(ey, m.pow(m.pi(), s - sy))
            rep = (m, m.pow(m.add(lift_x, lift_y), q), s * q)
    return FracElt(val, x.ring, rep)


def fracring_project(x: FracElt, target: FracRing) -> FracElt:
    """B4 on elements."""
    x.ring.project_to(target)
    return FracElt(x.ord, target, x.rep)


def ppower_gap_holds(model: LocalModel, x, y, q: int) -> bool:
    """ord_p((x+y)^q - x^q - y^q) >= 1 + q min(ord x, ord y), in the model."""
    s = model.add(x, y)
    lhs = model.sub(model.sub(model.pow(s, q), model.pow(x, q)), model.pow(y, q))
    bound = 7 + q * min(model.val(x), model.val(y))  # v(p) = 7 in pi-units
    return model.val(lhs) >= min(bound, model.prec)
