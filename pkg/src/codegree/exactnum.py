"""Exact integer arithmetic for the gates: r-parts, factorization,
multiplicative orders, Zsigmondy primes and cyclotomic values.

Everything here works on Python ints, so no value is ever truncated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional

__all__ = [
    "PrimePower",
    "Factorization",
    "is_prime",
    "rpart",
    "valuation",
    "qde_rpart",
    "factor_rpart",
    "mult_order",
    "zsigmondy",
    "factorize",
    "cyclotomic_value",
    "divisors",
    "mobius",
]

TRIAL_LIMIT = 10**6
# Deterministic Miller-Rabin with these bases is correct below this bound.
MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _small_primes(limit: int) -> list:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


_SMALL_PRIMES = _small_primes(TRIAL_LIMIT)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES[:2000])


def _miller_rabin(n: int, bases: Iterable[int]) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
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


def _strong_lucas(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Binary Lucas chain for U_d, V_d.
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic below ``MR_DETERMINISTIC_LIMIT`` (about 3.3e24); above it
    the Baillie-PSW combination is used, which has no known counterexample.
    """
    if n < 2:
        return False
    if n in _SMALL_PRIME_SET:
        return True
    for p in _SMALL_PRIMES[:60]:
        if n % p == 0:
            return n == p
    if n < MR_DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _MR_BASES)
    return _miller_rabin(n, (2,)) and _strong_lucas(n)


def _require_prime(r: int) -> None:
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p**f with p certified prime."""

    p: int
    f: int
    q: int = field(init=False)

    def __post_init__(self):
        if self.f < 1:
            raise ValueError(f"exponent f must be >= 1, got {self.f}")
        _require_prime(self.p)
        object.__setattr__(self, "q", self.p**self.f)

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        ((p, f),) = fac.items()
        return cls(p, f)

    def __int__(self) -> int:
        return self.q

    def __str__(self) -> str:
        return str(self.q)


class Factorization(dict):
    """Prime -> exponent map, iterated in increasing prime order."""

    def __init__(self, data=None):
        super().__init__()
        if data:
            for p in sorted(data):
                if data[p]:
                    self[p] = data[p]

    def value(self) -> int:
        out = 1
        for p, e in self.items():
            out *= p**e
        return out

    def merge(self, other: Dict[int, int], sign: int = 1) -> "Factorization":
        acc = dict(self)
        for p, e in other.items():
            acc[p] = acc.get(p, 0) + sign * e
        if any(e < 0 for e in acc.values()):
            raise ValueError("factorization quotient is not an integer")
        return Factorization(acc)

    def primes(self) -> list:
        return list(self.keys())

    def format(self, sep: str = " · ") -> str:
        if not self:
            return "1"
        return sep.join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.items())

    def to_json(self) -> Dict[str, int]:
        return {str(p): e for p, e in self.items()}

    def __repr__(self) -> str:
        return f"Factorization({dict.__repr__(self)})"


def valuation(n: int, r: int) -> int:
    """Exponent of the prime r in n (n >= 1)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % r == 0:
        n //= r
        v += 1
    return v


def rpart(n: int, r: int) -> int:
    """Largest power of the prime r dividing n."""
    if n < 1:
        raise ValueError(f"rpart needs n >= 1, got {n}")
    _require_prime(r)
    return r ** valuation(n, r)


def qde_rpart(q: int, d: int, eps: int, r: int) -> int:
    """(q**d - eps)_r for a prime r dividing q - eps, by the closed-form case
    split (lifting the exponent); q**d is never expanded.

    eps is +1 or -1.
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    _require_prime(r)
    base = q - eps
    if base == 0 or base % r:
        raise ValueError(f"hypothesis failed: r={r} does not divide q - eps = {base}")
    if r == 2:
        if d % 2:
            return rpart(abs(base), 2)
        if eps == 1:
            return rpart(q * q - 1, 2) * rpart(d // 2, 2)
        return 2
    if d % 2 == 0 and eps == -1:
        return 1
    return rpart(abs(base), r) * rpart(d, r)


def mult_order(q: int, r: int) -> int:
    """Multiplicative order of q modulo the prime r."""
    _require_prime(r)
    if q % r == 0:
        raise ValueError(f"{r} divides {q}; order undefined")
    order = r - 1
    for p in factorize(r - 1):
        while order % p == 0 and pow(q, order // p, r) == 1:
            order //= p
    return order


def factor_rpart(q: int, d: int, sign: int, r: int) -> int:
    """(q**d - sign)_r for any prime r not dividing q.

    Reduces to ``qde_rpart`` with base q**j, where j is the order of q mod r.
    """
    if q % r == 0:
        raise ValueError(f"{r} divides q={q}")
    if r == 2:
        if sign == 1:
            return qde_rpart(q, d, 1, 2)
        return qde_rpart(q, d, -1, 2)
    j = mult_order(q, r)
    if sign == 1:
        if d % j:
            return 1
        return qde_rpart(q**j, d // j, 1, r)
    # q**d + 1: divisible by r iff j is even and j/2 divides d with odd quotient.
    if j % 2 or d % (j // 2) or (d // (j // 2)) % 2 == 0:
        return 1
    return qde_rpart(q ** (j // 2), d // (j // 2), -1, r)


def divisors(n: int) -> list:
    out = [1]
    for p, e in factorize(n).items():
        out = [x * p**k for x in out for k in range(e + 1)]
    return sorted(out)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=4096)
def cyclotomic_value(m: int, q: int) -> int:
    """Phi_m(q) computed by the Moebius product over divisors of m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if q < 2:
        raise ValueError("q must be >= 2")
    num, den = 1, 1
    for d in divisors(m):
        mu = mobius(m // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _pollard_brent(n: int, c: int) -> Optional[int]:
    y, m, g, r, q = 2, 128, 1, 1, 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return None if g == n else g


def _split(n: int) -> int:
    for c in range(1, 200):
        g = _pollard_brent(n, c)
        if g:
            return g
    raise ArithmeticError(f"Pollard-Brent failed to split {n}")


def _factor_large(n: int, acc: Dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            acc[m] = acc.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        g = _split(m)
        stack.extend((g, m // g))


@lru_cache(maxsize=8192)
def _factorize_cached(n: int) -> tuple:
    acc: Dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            acc[p] = e
    if n > 1:
        if n <= TRIAL_LIMIT * TRIAL_LIMIT or is_prime(n):
            acc[n] = acc.get(n, 0) + 1
        else:
            _factor_large(n, acc)
    return tuple(sorted(acc.items()))


def factorize(n: int) -> Factorization:
    """Complete prime factorization: trial division to 1e6, then Pollard rho
    with Brent cycling on the cofactor."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    return Factorization(dict(_factorize_cached(n)))


def primitive_prime_divisors(q: int, n: int) -> Iterator[int]:
    for r in factorize(cyclotomic_value(n, q)):
        if q % r and mult_order(q, r) == n:
            yield r


def zsigmondy(q: int, n: int) -> Optional[int]:
    """Smallest primitive prime divisor of q**n - 1, or None if there is none."""
    if q < 2 or n < 2:
        raise ValueError("zsigmondy needs q >= 2 and n >= 2")
    return min(primitive_prime_divisors(q, n), default=None)
