"""Truncated model of O = W(F8)[pi] with pi^7 = 2.

Elements live in (Z/2^M)[x, w] / (x^3 + x + 1, w^7 - 2): 21 coefficients
c[j][i] (x^j w^i, 0 <= j < 3, 0 <= i < 7) in Z/2^M.  Since 2 = w^7 times a
unit, the model has pi-adic precision 7M; the default M = 4 gives pi^28.

The residue field is F8 = F2[x]/(x^3+x+1) and valuations are exact below the
precision: v(sum c_ji x^j w^i) = min_i (i + 7 * v2(digit_i)) with the seven
w-digit positions pairwise distinct mod 7.

Galois action: sigma(w) = zeta*w fixing W(F8); tau = Frobenius lift fixing w.
zeta is the Teichmueller 7th root of unity congruent to x mod 2.
"""

from __future__ import annotations

from fractions import Fraction


class LocalModel:
    def __init__(self, m: int = 4):
        if m < 1:
            raise ValueError("precision exponent must be >= 1")
        self.m = m
        self.mod = 1 << m
        self.prec = 7 * m  # pi-adic precision
        self._zeta = None
        self._taux = None

    # elements are 21-tuples: index 3*i + j  <->  x^j w^i
    def zero(self):
        return (0,) * 21

    def one(self):
        return self.from_digit(1, 0)

    def from_digit(self, fj: int, i: int):
        """x-polynomial digit (int 0..7, bits = coeffs of 1,x,x^2) times w^i."""
        e = [0] * 21
        for j in range(3):
            if (fj >> j) & 1:
                e[3 * i + j] = 1
        return tuple(e)

    def from_int(self, n: int):
        e = [0] * 21
        e[0] = n % self.mod
        return tuple(e)

    def add(self, a, b):
        return tuple((x + y) % self.mod for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.mod for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.mod for x in a)

    def mul(self, a, b):
        # multiply in Z[x,w], reduce x^3 = -x - 1 and w^7 = 2 as we go
        acc = [0] * (5 * 13)  # degrees x<5, w<13
        for ia in range(7):
            for ja in range(3):
                ca = a[3 * ia + ja]
                if not ca:
                    continue
                for ib in range(7):
                    for jb in range(3):
                        cb = b[3 * ib + jb]
                        if cb:
                            acc[13 * (ja + jb) + (ia + ib)] += ca * cb
        # reduce x powers: x^3 = -x-1, x^4 = -x^2-x
        for j in (4, 3):
            for i in range(13):
                c = acc[13 * j + i]
                if c:
                    acc[13 * j + i] = 0
                    acc[13 * (j - 3) + i] -= c  # -1 * x^(j-3)
                    acc[13 * (j - 2) + i] -= c  # -x * x^(j-3)
        # reduce w powers: w^(7+k) = 2 w^k
        out = [0] * 21
        for j in range(3):
            for i in range(13):
                c = acc[13 * j + i]
                if not c:
                    continue
                if i >= 7:
                    out[3 * (i - 7) + j] += 2 * c
                else:
                    out[3 * i + j] += c
        return tuple(v % self.mod for v in out)

    def pow(self, a, k):
        acc = self.one()
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            k >>= 1
        return acc

    def _v2(self, n: int):
        if n % self.mod == 0:
            return self.m
        n %= self.mod
        v = 0
        while n % 2 == 0:
            n //= 2
            v += 1
        return v

    def val(self, a):
        """pi-adic valuation (in units of v(pi) = 1); >= prec means 'zero'."""
        best = self.prec
        for i in range(7):
            v2 = min(self._v2(a[3 * i + j]) for j in range(3))
            best = min(best, i + 7 * v2)
        return best

    def ord2(self, a) -> Fraction:
        """Valuation normalized so ord2(2) = 1."""
        return Fraction(self.val(a), 7)

    def is_zero(self, a):
        return self.val(a) >= self.prec

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def eq_mod(self, a, b, piexp: int):
        """a == b mod pi^piexp."""
        return self.val(self.sub(a, b)) >= min(piexp, self.prec)

    def div2k(self, a, k: int):
        """Exact division by 2^k; result lives in a model of precision m-k."""
        if k == 0:
            return self, a
        if self.m - k < 1:
            raise PrecisionError("raise precision")
        small = LocalModel(self.m - k)
        out = []
        for c in a:
            c %= self.mod
            if c % (1 << k):
                raise PrecisionError("element not divisible by 2^%d" % k)
            out.append((c >> k) % small.mod)
        return small, tuple(out)

    def reduce_to(self, a, m2: int):
        small = LocalModel(m2)
        return tuple(c % small.mod for c in a)

    def pi(self):
        return self.from_digit(1, 1)

    def two(self):
        return self.from_int(2)

    # Galois action -----------------------------------------------------

    def zeta(self):
        """Teichmueller lift of the residue x: zeta^7 = 1, zeta = x mod 2."""
        if self._zeta is None:
            z = self.from_digit(0b010, 0)  # x
            # Newton for z^7 - 1 = 0: z <- z - (z^7-1)/(7 z^6)
            for _ in range(self.m + 2):
                z7 = self.pow(z, 7)
                err = self.sub(z7, self.one())
                dz = self.mul(self.from_int(7), self.pow(z, 6))
                z = self.sub(z, self.mul(err, self.invert_unit(dz)))
            assert self.eq(self.pow(z, 7), self.one())
            self._zeta = z
        return self._zeta

    def invert_unit(self, a):
        """Inverse of a unit (valuation 0) by Newton iteration from F8."""
        if self.val(a) != 0:
            raise ValueError("not a unit")
        # residue inverse via F8
        from .fq import F8

        res = 0
        for j in range(3):
            if a[j] % 2:
                res |= 1 << j
        inv0 = F8.inv(res)
        x = self.from_digit(inv0, 0)
        for _ in range(self.m + 2):
            # x <- x (2 - a x)
            x = self.mul(x, self.sub(self.from_int(2), self.mul(a, x)))
        assert self.eq(self.mul(a, x), self.one())
        return x

    def _tau_x(self):
        """Image of the W(F8)-generator x under the Frobenius lift."""
        if self._taux is None:
            # root of y^3 + y + 1 congruent to x^2 mod 2
            y = self.mul(self.from_digit(0b010, 0), self.from_digit(0b010, 0))
            for _ in range(self.m + 2):
                f = self.add(self.add(self.pow(y, 3), y), self.one())
                df = self.add(self.mul(self.from_int(3), self.mul(y, y)), self.one())
                y = self.sub(y, self.mul(f, self.invert_unit(df)))
            self._taux = y
        return self._taux

    def apply_galois(self, a, sigma_exp: int = 0, tau_exp: int = 0):
        """Apply sigma^sigma_exp tau^tau_exp (sigma(w)=zeta w, tau = Frob)."""
        sigma_exp %= 7
        tau_exp %= 3
        out = a
        for _ in range(tau_exp):
            out = self._apply_tau(out)
        if sigma_exp:
            out = self._apply_sigma(out, sigma_exp)
        return out

    def _apply_sigma(self, a, k):
        zk = self.pow(self.zeta(), k)
        out = self.zero()
        for i in range(7):
            digit = [0] * 21
            for j in range(3):
                digit[j] = a[3 * i + j]
            term = self.mul(tuple(digit), self.pow(zk, i))
            term = self.mul(term, self.from_digit(1, i))
            out = self.add(out, term)
        return out

    def _apply_tau(self, a):
        tx = self._tau_x()
        tx2 = self.mul(tx, tx)
        out = self.zero()
        for i in range(7):
            c0 = self.from_int(a[3 * i + 0])
            c1 = self.mul(self.from_int(a[3 * i + 1]), tx)
            c2 = self.mul(self.from_int(a[3 * i + 2]), tx2)
            digit = self.add(self.add(c0, c1), c2)
            out = self.add(out, self.mul(digit, self.from_digit(1, i)))
        return out

    def teichmuller(self, f8elt: int):
        """Teichmueller lift of an F8 element (0 stays 0)."""
        if f8elt == 0:
            return self.zero()
        from .fq import F8

        # f8elt = x^k for some k; zeta^k is its lift
        z = self.zeta()
        acc = 0b010
        if f8elt == 1:
            return self.one()
        cur = z
        for _ in range(7):
            if acc == f8elt:
                return cur
            acc = F8.mul(acc, 0b010)
            cur = self.mul(cur, z)
        raise ValueError("bad F8 element")

    def residue(self, a) -> int:
        """Image in F8 (element code) for integral a."""
        res = 0
        for j in range(3):
            if a[j] % 2:
                res |= 1 << j
        return res


class PrecisionError(ArithmeticError):
    pass


DEFAULT_MODEL = LocalModel(4)
