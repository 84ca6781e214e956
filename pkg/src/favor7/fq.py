"""Small finite fields F_{p^n}, n <= 4, with fixed named moduli.

Elements are ints encoding polynomial residues in base p (digit i = coefficient
of x^i).  For F8 the modulus is x^3 + x + 1, so 0b010 is the residue class of
x, the distinguished generator zeta with zeta^3 + zeta + 1 = 0.
"""

from __future__ import annotations

MODULI = {
    (2, 1): (1, 0),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 0),
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (5, 1): (1, 0),
    (7, 1): (1, 0),
}


class Fq:
    """Field F_{p^n}; element ops take/return ints in range(p**n)."""

    def __init__(self, p, n=1):
        if (p, n) not in MODULI:
            raise ValueError(f"no modulus registered for F_{p}^{n}")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = MODULI[(p, n)]
        self._mul = {}
        self._inv = {}
        self._build_tables()

    def _build_tables(self):
        for a in range(self.q):
            for b in range(a, self.q):
                c = self._polymul(a, b)
                self._mul[(a, b)] = c
                self._mul[(b, a)] = c
        for a in range(1, self.q):
            for b in range(1, self.q):
                if self._mul[(a, b)] == 1:
                    self._inv[a] = b
                    break

    def _digits(self, a):
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds):
        acc = 0
        for d in reversed(ds):
            acc = acc * self.p + (d % self.p)
        return acc

    def _polymul(self, a, b):
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.n)
        for i, x in enumerate(da):
            if not x:
                continue
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by modulus (monic, degree n): x^n = -(lower part)
        mod = self.modulus
        for k in range(2 * self.n - 1, self.n - 1, -1):
            c = prod[k]
            if not c:
                continue
            prod[k] = 0
            for j in range(self.n):
                prod[k - self.n + j] = (prod[k - self.n + j] - c * mod[self.n - j]) % self.p
        return self._undigits(prod[: self.n])

    def add(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def sub(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x - y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def mul(self, a, b):
        return self._mul[(a, b)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def pow(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        acc = 1
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            k >>= 1
        return acc

    def frob(self, a, j=1):
        """sigma^j with sigma: x -> x^p; j may be negative."""
        j %= self.n
        return self.pow(a, self.p**j)

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def frob_order(self):
        return self.n

    def f2_basis(self):
        """Basis of the field over F_p as element codes (1, x, x^2, ...)."""
        return [self.p**i for i in range(self.n)]

    def trace(self, a):
        acc = 0
        for j in range(self.n):
            acc = self.add(acc, self.frob(a, j))
        return acc

    def __repr__(self):
        return f"Fq({self.p},{self.n})"


_CACHE = {}


def GF(p, n=1) -> Fq:
    key = (p, n)
    if key not in _CACHE:
        _CACHE[key] = Fq(p, n)
    return _CACHE[key]


F2 = GF(2, 1)
F8 = GF(2, 3)
