"""Primality testing: deterministic Miller-Rabin below 3.3*10^24, BPSW above.

The Miller-Rabin base set {2,3,...,41} is deterministic for n < 3317044064679887385961981
(Sorenson-Webster).  Larger inputs fall back to BPSW (base-2 strong probable
prime + strong Lucas), for which no counterexample is known; callers needing a
proof above the deterministic range must use an external certificate.
"""

from __future__ import annotations

MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)


def _mr_witness(n: int, a: int) -> bool:
    """True if a witnesses compositeness of odd n > 2."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable prime test with Selfridge's parameters."""
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    # n + 1 = 2^s * t with t odd
    t = n + 1
    s = 0
    while t % 2 == 0:
        t //= 2
        s += 1
    # Lucas sequence by binary ladder on index t
    u, v, qk = 1, p, q % n
    for bit in bin(t)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u % 2:
                u += n
            if v % 2:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    if n <= 1:
        raise ValueError("is_prime requires n > 1")
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < MR_DETERMINISTIC_LIMIT:
        return not any(_mr_witness(n, a) for a in _MR_BASES)
    # BPSW: probabilistic caveat documented in the module docstring
    if _mr_witness(n, 2):
        return False
    return _strong_lucas_prp(n)
