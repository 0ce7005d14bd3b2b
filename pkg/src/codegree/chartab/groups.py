"""Small permutation groups used as test inputs and in the small cases."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import List, Sequence

import numpy as np

from ..exactnum import PrimePower, factorize
from .classes import Enumeration
from .perms import PermGroup


# ---------------------------------------------------------------- finite fields


def _poly_mulmod(a: List[int], b: List[int], mod: List[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    f = len(mod) - 1
    for i in range(len(out) - 1, f - 1, -1):
        c = out[i]
        if c:
            for j in range(f + 1):
                out[i - f + j] = (out[i - f + j] - c * mod[j]) % p
    return (out + [0] * f)[:f]


@dataclass
class GF:
    """GF(p^f) with elements encoded as integers 0..q-1 (base-p digits are
    polynomial coefficients); add/mul are lookup tables."""

    p: int
    f: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    gen: int  # a primitive element

    @property
    def q(self) -> int:
        return self.p**self.f

    def power(self, x: int, k: int) -> int:
        if x == 0:
            return 0 if k else 1
        out = 1
        for _ in range(k % (self.q - 1)):
            out = int(self.mul[out, x])
        return out


def _encode(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def _decode(x: int, p: int, f: int) -> List[int]:
    return [(x // p**i) % p for i in range(f)]


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    pp = PrimePower.from_int(q)
    p, f = pp.p, pp.f
    mod: List[int] = []
    if f > 1:
        # Smallest monic modulus for which x generates the multiplicative group.
        x = [0, 1] + [0] * (f - 2)
        for tail in product(range(p), repeat=f):
            mod = list(tail) + [1]
            if mod[0] == 0:
                continue
            cur = [1] + [0] * (f - 1)
            seen = set()
            for _ in range(q - 1):
                seen.add(_encode(cur, p))
                cur = _poly_mulmod(cur, x, mod, p)
            if len(seen) == q - 1:
                break
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    if f == 1:
        a = np.arange(q)
        add = (a[:, None] + a[None, :]) % q
        mul = (a[:, None] * a[None, :]) % q
        g = 2 if q > 2 else 1
        while q > 2 and any(pow(g, (q - 1) // r, q) == 1 for r in factorize(q - 1)):
            g += 1
    else:
        for a in range(q):
            da = _decode(a, p, f)
            for b in range(q):
                db = _decode(b, p, f)
                add[a, b] = _encode([(u + v) % p for u, v in zip(da, db)], p)
                mul[a, b] = _encode(_poly_mulmod(da, db, mod, p), p)
        g = p  # the class of x
    neg = np.array([int(np.nonzero(add[a] == 0)[0][0]) for a in range(q)])
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
    return GF(p, f, add, mul, neg, inv, g)


# ---------------------------------------------------------------- constructors


def _group(gens: Sequence[Sequence[int]], name: str) -> PermGroup:
    gens = [np.asarray(g) for g in gens]
    return PermGroup(len(gens[0]), tuple(gens), name)


def cyclic(n: int) -> PermGroup:
    return _group([[(i + 1) % n for i in range(n)]], f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of an n-gon, order 2n."""
    return _group([[(i + 1) % n for i in range(n)], [(-i) % n for i in range(n)]], f"D{2 * n}")


def symmetric(n: int) -> PermGroup:
    if n < 3:
        return cyclic(max(n, 1)) if n == 2 else _group([[0]], "S1")
    return _group([[(i + 1) % n for i in range(n)], [1, 0] + list(range(2, n))], f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return _group([list(range(max(n, 1)))], f"A{n}")
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0
        gens.append(g)
    return _group(gens, f"A{n}")


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    n, m = a.degree, b.degree
    gens = [np.concatenate([g, np.arange(n, n + m)]) for g in a.gens]
    gens += [np.concatenate([np.arange(n), g + n]) for g in b.gens]
    return PermGroup(n + m, tuple(gens), f"{a.name}x{b.name}")


def affine(q: int) -> PermGroup:
    """AGL_1(q): x -> a x + b on the field."""
    F = gf(q)
    t = [int(F.add[x, 1]) for x in range(q)]
    s = [int(F.mul[x, F.gen]) for x in range(q)]
    return _group([t, s], f"AGL1({q})")


def frobenius(p: int, k: int) -> PermGroup:
    """Z_p : Z_k inside AGL_1(p), for k | p - 1."""
    F = gf(p)
    w = F.power(F.gen, (p - 1) // k)
    return _group([[(x + 1) % p for x in range(p)], [int(F.mul[x, w]) for x in range(p)]], f"F{p * k}")


def _moebius(F: GF, a: int, b: int, c: int, d: int) -> List[int]:
    """x -> (a x + b)/(c x + d) on the projective line; infinity is point q."""
    q = F.q
    out = []
    for x in range(q + 1):
        if x == q:
            num, den = a, c
        else:
            num = int(F.add[F.mul[a, x], b])
            den = int(F.add[F.mul[c, x], d])
        out.append(q if den == 0 else int(F.mul[num, F.inv[den]]))
    return out


def psl2(q: int) -> PermGroup:
    """PSL_2(q) on the q+1 points of the projective line."""
    F = gf(q)
    gens = [_moebius(F, 1, 1, 0, 1), _moebius(F, 0, int(F.neg[1]), 1, 0)]
    if q > 3:
        gens.append(_moebius(F, F.power(F.gen, 2), 0, 0, 1))
    return _group(gens, f"PSL2({q})")


def sl2(q: int) -> PermGroup:
    """SL_2(q) acting faithfully on the q^2 - 1 nonzero row vectors."""
    F = gf(q)
    vecs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(m):
        (a, b), (c, d) = m
        out = []
        for x, y in vecs:
            u = int(F.add[F.mul[x, a], F.mul[y, c]])
            v = int(F.add[F.mul[x, b], F.mul[y, d]])
            out.append(idx[(u, v)])
        return out

    w = F.gen
    gens = [act(((1, 1), (0, 1))), act(((0, 1), (int(F.neg[1]), 0)))]
    if q > 3:
        gens.append(act(((w, 0), (0, int(F.inv[w])))))
    return _group(gens, f"SL2({q})")


def quaternion() -> PermGroup:
    """Q8 in its regular representation."""
    # elements 1,i,j,k,-1,-i,-j,-k as 0..7; right multiplication by i and j
    table = {
        "i": [1, 4, 7, 2, 5, 0, 3, 6],
        "j": [2, 3, 4, 5, 6, 7, 0, 1],
    }
    return _group([table["i"], table["j"]], "Q8")


def quotient_by_kernel(enum: Enumeration, kernel: Sequence[int], name: str = "") -> PermGroup:
    """Action of the group on the right cosets of a normal subgroup K,
    given as element indices of ``enum``; the image is G/K."""
    N = enum.size
    label = np.full(N, N, dtype=np.int64)
    for k in kernel:
        label = np.minimum(label, enum.left_by(int(k)))
    reps, pos = np.unique(label, return_inverse=True)
    if len(reps) * len(kernel) != N:
        raise ValueError("kernel does not partition the group into cosets")
    gens = []
    for g in range(len(enum.group.gens)):
        img = pos[enum.right[g][reps]]
        gens.append(img)
    return PermGroup(len(reps), tuple(gens), name or f"{enum.group.name}/K")


def corpus_groups() -> List[PermGroup]:
    """Groups of order at most 2000 used to compare the two table paths."""
    return [
        cyclic(1), cyclic(2), cyclic(6), cyclic(12),
        symmetric(3), symmetric(4), symmetric(5), alternating(4), alternating(5),
        alternating(6), dihedral(5), dihedral(8), dihedral(12), quaternion(),
        frobenius(7, 3), frobenius(11, 5), affine(5), affine(8), affine(9),
        psl2(7), psl2(8), psl2(11), psl2(13), sl2(3), sl2(5),
        direct_product(symmetric(3), cyclic(4)), direct_product(quaternion(), cyclic(3)),
    ]
