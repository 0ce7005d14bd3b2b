"""Character tables by the Dixon-Schneider method over a prime field.

Class-sum eigenvectors are split mod a prime l = 1 (mod e), e the group
exponent, with l > 2 sqrt|G| so that degrees and eigenvalue multiplicities
can be read back as integers. Each character value is stored exactly as the
multiplicities of the o-th roots of unity among the eigenvalues of a
representing matrix (o = order of the class representative).
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import List, Sequence, Tuple

import numpy as np

from ..exactnum import divisors, factorize, is_prime
from .classes import ConjugacyClasses

SAFE_PRIME = 1 << 26  # l**2 * 2**11 stays inside int64


class TableError(ArithmeticError):
    """The computation did not produce a consistent character table."""


# ---------------------------------------------------------------- cyclotomic values


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_divexact(a: List[int], b: List[int]) -> List[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "inexact polynomial division"
    return out


def _poly_mod(a: List[int], m: Sequence[int]) -> Tuple[int, ...]:
    a = list(a)
    k = len(m) - 1
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i]
        if c:
            for j in range(k + 1):
                a[i - k + j] -= c * m[j]
    a = a[:k]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


@dataclass(frozen=True)
class CharValue:
    """A character value: the sum over i of mults[i] * exp(2 pi i/o)."""

    o: int
    mults: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.mults)

    def coeffs(self, e: int) -> List[int]:
        """Coefficient vector in powers of a primitive e-th root (o | e)."""
        if e % self.o:
            raise ValueError(f"{self.o} does not divide {e}")
        out = [0] * e
        step = e // self.o
        for i, m in enumerate(self.mults):
            out[i * step] = m
        return out

    def canonical(self, e: int) -> Tuple[int, ...]:
        """Reduction mod Phi_e; equal values give equal tuples."""
        return _poly_mod(self.coeffs(e), cyclotomic_poly(e))

    def __complex__(self) -> complex:
        return sum(m * cmath.exp(2j * cmath.pi * i / self.o) for i, m in enumerate(self.mults))

    def galois(self, a: int) -> "CharValue":
        out = [0] * self.o
        for i, m in enumerate(self.mults):
            out[i * a % self.o] += m
        return CharValue(self.o, tuple(out))

    def conj(self) -> "CharValue":
        return self.galois(-1)

    def is_degree(self) -> bool:
        """True iff the value equals the degree, i.e. the element acts trivially."""
        return self.mults[0] == self.degree

    def to_json(self) -> dict:
        return {"o": self.o, "mults": list(self.mults)}


# ---------------------------------------------------------------- linear algebra mod l


def _inv(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def rref(m: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if not len(nz):
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * _inv(m[r, c], p) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : m v = 0} as columns."""
    rows, cols = m.shape
    red, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        out[f, j] = 1
        for i, c in enumerate(pivots):
            out[c, j] = (-red[i, f]) % p
    return out


def solve_in_span(w: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    """R with w R = y, w of full column rank; raises if y leaves span(w)."""
    d = w.shape[1]
    red, pivots = rref(np.hstack([w, y]), p)
    if pivots[:d] != list(range(d)) or (len(pivots) > d and pivots[d] < d + y.shape[1]):
        raise TableError("subspace is not invariant")
    return red[:d, d:]


def charpoly(m: np.ndarray, p: int) -> List[int]:
    """Characteristic polynomial mod p via Hessenberg reduction, constant first."""
    h = np.array(m, dtype=np.int64) % p
    n = len(h)
    for col in range(n - 2):
        nz = np.nonzero(h[col + 1 :, col])[0]
        if not len(nz):
            continue
        i = col + 1 + int(nz[0])
        m_ = col + 1
        if i != m_:
            h[[i, m_]] = h[[m_, i]]
            h[:, [i, m_]] = h[:, [m_, i]]
        inv = _inv(h[m_, col], p)
        for i in range(m_ + 1, n):
            u = int(h[i, col]) * inv % p
            if u:
                h[i] = (h[i] - u * h[m_]) % p
                h[:, m_] = (h[:, m_] + u * h[:, i]) % p
    polys = [[1]]
    for k in range(n):
        # p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
        prev = polys[-1]
        nxt = [0] + prev
        for i, c in enumerate(prev):
            nxt[i] = (nxt[i] - int(h[k, k]) * c) % p
        t = 1
        for i in range(k - 1, -1, -1):
            t = t * int(h[i + 1, i]) % p
            coef = int(h[i, k]) * t % p
            if coef:
                for j, c in enumerate(polys[i]):
                    nxt[j] = (nxt[j] - coef * c) % p
        polys.append(nxt)
    return polys[-1]


def roots_mod(poly: List[int], p: int) -> List[int]:
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


# ---------------------------------------------------------------- primes


def _primitive_root(p: int) -> int:
    qs = list(factorize(p - 1))
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return g


def prime_one_mod(e: int, above: int) -> int:
    """Smallest prime l = 1 (mod e) with l > above."""
    t = above // e + 1
    while not is_prime(t * e + 1):
        t += 1
    return t * e + 1


def root_of_unity(e: int, p: int) -> int:
    return pow(_primitive_root(p), (p - 1) // e, p)


# ---------------------------------------------------------------- the table


@dataclass
class CharacterTable:
    group_order: int
    sizes: List[int]
    orders: List[int]
    inverse_class: List[int]
    powers: List[List[int]]
    mults: List[List[Tuple[int, ...]]]  # mults[chi][k]
    prime: int
    name: str = ""

    @property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for o in self.orders:
            out = lcm(out, o)
        return out

    @property
    def degrees(self) -> List[int]:
        return [sum(row[0]) for row in self.mults]

    def value(self, chi: int, k: int) -> CharValue:
        return CharValue(self.orders[k], self.mults[chi][k])

    def row(self, chi: int) -> List[CharValue]:
        return [self.value(chi, k) for k in range(len(self.sizes))]

    def complex_table(self) -> np.ndarray:
        return np.array([[complex(v) for v in self.row(i)] for i in range(len(self.mults))])

    def kernel_classes(self, chi: int) -> List[int]:
        return [k for k in range(len(self.sizes)) if self.value(chi, k).is_degree()]

    def kernel_order(self, chi: int) -> int:
        return sum(self.sizes[k] for k in self.kernel_classes(chi))

    def central_classes(self) -> List[int]:
        return [k for k, s in enumerate(self.sizes) if s == 1]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "group_order": self.group_order,
            "sizes": self.sizes,
            "orders": self.orders,
            "inverse_class": self.inverse_class,
            "powers": self.powers,
            "mults": [[list(m) for m in row] for row in self.mults],
            "prime": self.prime,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharacterTable":
        return cls(
            data["group_order"], list(data["sizes"]), list(data["orders"]),
            list(data["inverse_class"]), [list(p) for p in data["powers"]],
            [[tuple(m) for m in row] for row in data["mults"]], data["prime"],
            data.get("name", ""),
        )


def _split_spaces(consts: np.ndarray, p: int) -> List[np.ndarray]:
    K = consts.shape[0]
    spaces = [np.eye(K, dtype=np.int64)]
    for j in range(1, K):
        if all(w.shape[1] == 1 for w in spaces):
            break
        m = consts[j] % p  # m[l, k] = a_{j l k}
        roots = None
        nxt = []
        for w in spaces:
            d = w.shape[1]
            if d == 1:
                nxt.append(w)
                continue
            if roots is None:
                roots = roots_mod(charpoly(m, p), p)
            r = solve_in_span(w, m @ w % p, p)
            pieces = []
            for lam in roots:
                ns = nullspace((r - lam * np.eye(d, dtype=np.int64)) % p, p)
                if ns.shape[1]:
                    pieces.append(w @ ns % p)
            if sum(x.shape[1] for x in pieces) != d:
                raise TableError(f"class {j}: eigenspaces do not fill a space of dimension {d}")
            nxt.extend(pieces)
        spaces = nxt
    if any(w.shape[1] != 1 for w in spaces):
        raise TableError("class sums did not separate all characters")
    return [w[:, 0] for w in spaces]


def dixon_schneider(cc: ConjugacyClasses, name: str = "") -> CharacterTable:
    N = cc.group_order
    K = cc.count
    e = cc.exponent
    p = prime_one_mod(e, 2 * isqrt(N) + 2)
    if p >= SAFE_PRIME or max(cc.orders) > 2048:
        raise TableError(f"prime {p} too large for int64 arithmetic")
    consts = cc.structure_constants()
    vecs = _split_spaces(consts, p)
    sizes = cc.sizes
    size_inv = [_inv(s, p) for s in sizes]
    z = root_of_unity(e, p)
    rows = []
    for v in vecs:
        if v[0] == 0:
            raise TableError("eigenvector vanishes at the identity")
        v = v * _inv(v[0], p) % p
        s = sum(int(v[k]) * int(v[cc.inverse_class[k]]) * size_inv[k] for k in range(K)) % p
        d2 = N * _inv(s, p) % p
        d = next((x for x in range(1, isqrt(N) + 1) if x * x % p == d2), None)
        if d is None or N % d:
            raise TableError("no admissible degree for an eigenvector")
        chi = [d * int(v[k]) * size_inv[k] % p for k in range(K)]
        row = []
        for k in range(K):
            o = cc.orders[k]
            zo = pow(z, e // o, p)
            inv_o = _inv(o, p)
            vals = [chi[c] for c in cc.powers[k]]
            mults = []
            for i in range(o):
                zi = pow(zo, (-i) % o, p)
                acc, zt = 0, 1
                for val in vals:
                    acc = (acc + val * zt) % p
                    zt = zt * zi % p
                mults.append(acc * inv_o % p)
            if any(m > d for m in mults) or sum(mults) != d:
                raise TableError(f"class {k}: multiplicities {mults} are not a degree-{d} splitting")
            row.append(tuple(mults))
        rows.append(row)
    # Deterministic order: trivial character first, then by degree.
    trivial = tuple((1,) + (0,) * (o - 1) for o in cc.orders)
    rows.sort(key=lambda r: (sum(r[0]), tuple(r) != trivial))
    table = CharacterTable(
        N, list(sizes), list(cc.orders), list(cc.inverse_class),
        [list(pw) for pw in cc.powers], rows, p, name,
    )
    verify_table(table)
    return table


# ---------------------------------------------------------------- exact verification


def _unit_generators(e: int) -> List[int]:
    units = [a for a in range(1, e) if gcd(a, e) == 1] or [1]
    gens: List[int] = []
    reached = {1 % e}
    for a in units:
        if a in reached:
            continue
        gens.append(a)
        frontier = list(reached)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x * g % e
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
    return gens


def verify_table(table: CharacterTable) -> None:
    """Exact check that the rows are orthonormal and closed under Galois action.

    Entries of the Gram matrices lie in Z[zeta_e] and have absolute value at
    most N^2 + N under every embedding. Checking them modulo one prime ideal
    above a split prime l_v > N^2 + N for a Galois-closed set of rows covers
    every conjugate, which forces exact equality.
    """
    N = table.group_order
    K = len(table.sizes)
    e = table.exponent
    if len(table.mults) != K:
        raise TableError(f"{len(table.mults)} characters for {K} classes")
    degs = table.degrees
    if sum(d * d for d in degs) != N or any(N % d for d in degs):
        raise TableError("degrees do not fit the group order")
    rowset = {tuple(r) for r in table.mults}
    if len(rowset) != K:
        raise TableError("repeated character")
    for a in _unit_generators(e):
        for r in table.mults:
            img = tuple(
                CharValue(table.orders[k], r[k]).galois(a).mults for k in range(K)
            )
            if img not in rowset:
                raise TableError(f"rows are not closed under zeta -> zeta^{a}")
    lv = prime_one_mod(e, N * N + N)
    zv = root_of_unity(e, lv)
    zpow = [pow(zv, i, lv) for i in range(e)]

    def embed(chi: int, k: int, sign: int) -> int:
        o = table.orders[k]
        step = e // o
        return sum(m * zpow[(sign * i * step) % e] for i, m in enumerate(table.mults[chi][k])) % lv

    X = np.array([[embed(i, k, 1) for k in range(K)] for i in range(K)], dtype=object)
    Xb = np.array([[embed(i, k, -1) for k in range(K)] for i in range(K)], dtype=object)
    sizes = np.array(table.sizes, dtype=object)
    gram = (X * sizes).dot(Xb.T) % lv
    want = np.diag([N] * K).astype(object) % lv
    if not (gram == want).all():
        raise TableError("row orthogonality fails")
    cols = X.T.dot(Xb) % lv
    want = np.diag([N // s for s in table.sizes]).astype(object) % lv
    if not (cols == want).all():
        raise TableError("column orthogonality fails")
