"""Bit-packed linear algebra over GF(2).

Vectors are ints (bit i = coordinate i).  Matrices store one int per row.
Everything is immutable; operations return new objects.
"""

from __future__ import annotations


def popcount(x: int) -> int:
    return bin(x).count("1")


def dot(u: int, v: int) -> int:
    """F2 inner product of two bit vectors."""
    return popcount(u & v) & 1


class F2Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols):
        self.rows = tuple(rows)
        self.nrows = len(self.rows)
        self.ncols = ncols

    @classmethod
    def from_lists(cls, entries):
        rows = []
        ncols = len(entries[0]) if entries else 0
        for r in entries:
            acc = 0
            for j, e in enumerate(r):
                if e & 1:
                    acc |= 1 << j
            rows.append(acc)
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n):
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def zero(cls, nrows, ncols):
        return cls([0] * nrows, ncols)

    def entry(self, i, j):
        return (self.rows[i] >> j) & 1

    def to_lists(self):
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, F2Matrix)
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __add__(self, other):
        assert self.ncols == other.ncols and self.nrows == other.nrows
        return F2Matrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def __mul__(self, other):
        assert self.ncols == other.nrows
        # row i of product = xor of rows of `other` selected by bits of row i
        out = []
        orows = other.rows
        for r in self.rows:
            acc = 0
            x = r
            while x:
                b = x & -x
                acc ^= orows[b.bit_length() - 1]
                x ^= b
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def mul_vec(self, v: int) -> int:
        """Matrix times column vector (vector as bit int)."""
        acc = 0
        for i, r in enumerate(self.rows):
            if popcount(r & v) & 1:
                acc |= 1 << i
        return acc

    def transpose(self):
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            x = r
            while x:
                b = x & -x
                cols[b.bit_length() - 1] |= 1 << i
                x ^= b
        return F2Matrix(cols, self.nrows)

    def __pow__(self, k):
        assert self.nrows == self.ncols
        acc = F2Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def rank(self):
        return len(echelon(self.rows)[0])

    def is_zero(self):
        return all(r == 0 for r in self.rows)

    def inverse(self):
        assert self.nrows == self.ncols
        n = self.nrows
        aug = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        mask = (1 << n) - 1
        pos = 0
        for col in range(n):
            piv = None
            for i in range(pos, n):
                if (aug[i] >> col) & 1:
                    piv = i
                    break
            if piv is None:
                raise ValueError("matrix not invertible")
            aug[pos], aug[piv] = aug[piv], aug[pos]
            for i in range(n):
                if i != pos and ((aug[i] >> col) & 1):
                    aug[i] ^= aug[pos]
            pos += 1
        rows = [0] * n
        for i in range(n):
            assert aug[i] & mask == 1 << i
            rows[i] = aug[i] >> n
        return F2Matrix(rows, n)


def echelon(vectors):
    """Row-echelon basis of the span of bit vectors.

    Returns (basis, pivots) with basis sorted by decreasing pivot and reduced
    (each pivot occurs in exactly one basis vector), so spans have a unique
    canonical basis and equality of spans is basis equality.
    """
    basis = {}  # pivot bit -> vector
    for v in vectors:
        v = _reduce(v, basis)
        if v:
            p = v.bit_length() - 1
            basis[p] = v
    # back-reduce
    for p in sorted(basis):
        v = basis[p]
        for q in list(basis):
            if q > p and ((basis[q] >> p) & 1):
                basis[q] ^= v
    pivots = sorted(basis, reverse=True)
    return [basis[p] for p in pivots], pivots


def _reduce(v, basis):
    while v:
        p = v.bit_length() - 1
        if p in basis:
            v ^= basis[p]
        else:
            break
    return v


class Subspace:
    """Subspace of F2^n with canonical reduced echelon basis."""

    __slots__ = ("basis", "pivots", "n")

    def __init__(self, vectors, n):
        self.basis, self.pivots = echelon(vectors)
        self.n = n

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v: int) -> bool:
        return _reduce(v, dict(zip(self.pivots, self.basis))) == 0

    def reduce(self, v: int) -> int:
        return _reduce(v, dict(zip(self.pivots, self.basis)))

    def coords(self, v: int):
        """Coefficients of v on self.basis, or None if v not in the span."""
        coeffs = 0
        w = v
        lookup = {p: i for i, p in enumerate(self.pivots)}
        while w:
            p = w.bit_length() - 1
            if p not in lookup:
                return None
            i = lookup[p]
            coeffs |= 1 << i
            w ^= self.basis[i]
        return coeffs

    def __eq__(self, other):
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((tuple(self.basis), self.n))

    def sum(self, other):
        return Subspace(list(self.basis) + list(other.basis), self.n)

    def intersection(self, other):
        # Zassenhaus: echelon rows (v, v) for v in self, (w, 0) for w in other
        n = self.n
        stacked = [(v << n) | v for v in self.basis]
        stacked += [w << n for w in other.basis]
        base, _ = echelon(stacked)
        mask = (1 << n) - 1
        out = [v & mask for v in base if (v >> n) == 0 and (v & mask)]
        return Subspace(out, n)

    def vectors(self):
        """Iterate over all 2^dim elements (small subspaces only)."""
        k = len(self.basis)
        for m in range(1 << k):
            acc = 0
            x = m
            while x:
                b = x & -x
                acc ^= self.basis[b.bit_length() - 1]
                x ^= b
            yield acc


def solve(mat: F2Matrix, rhs: int):
    """One solution x of mat * x = rhs, or None."""
    n = mat.ncols
    aug = [(mat.rows[i] | (((rhs >> i) & 1) << n)) for i in range(mat.nrows)]
    basis = {}
    for v in aug:
        v = _reduce_cols(v, basis, n)
        if v:
            p = _lead(v, n)
            if p == n:
                return None  # row (0 | 1): inconsistent
            basis[p] = v
    x = 0
    for p in sorted(basis, reverse=True):
        v = basis[p]
        val = (v >> n) & 1
        acc = val
        w = v & (((1 << n) - 1) ^ (1 << p))
        while w:
            b = w & -w
            j = b.bit_length() - 1
            acc ^= (x >> j) & 1
            w ^= b
        if acc:
            x |= 1 << p
    return x


def _lead(v, n):
    for j in range(n + 1):
        if (v >> j) & 1:
            return j
    return None


def _reduce_cols(v, basis, n):
    while v:
        p = _lead(v, n)
        if p in basis:
            v ^= basis[p]
        else:
            break
    return v


def nullspace(mat: F2Matrix):
    """Basis of the right kernel of mat."""
    n = mat.ncols
    basis, pivots = echelon(mat.rows)
    # pivots here are column positions (leading bits)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    out = []
    lookup = dict(zip(pivots, basis))
    for f in free:
        v = 1 << f
        # back substitute: for each pivot p, coefficient = row_p . v
        # iterate pivots from small to large to respect dependencies
        for p in sorted(lookup):
            if popcount(lookup[p] & v) & 1:
                v ^= 1 << p
        out.append(v)
    return out
