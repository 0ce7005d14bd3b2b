"""Element enumeration and conjugacy classes for groups of desk-scale order.

Elements are enumerated breadth-first from the generators and identified by
their images of a base, so no full permutation is stored per element. The
right-multiplication tables R_g[x] = index(x * g) drive everything else:
left multiplication, conjugation, power maps and class structure constants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Dict, List, Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .perms import PermGroup, identity, inverse, mul, perm_order

ORDER_CAP = 200_000
CLASS_CAP = 120


class CapExceeded(RuntimeError):
    """The group is beyond the size this module is willing to enumerate."""


@dataclass
class Enumeration:
    group: PermGroup
    base: np.ndarray
    images: np.ndarray  # (N, len(base)) base images per element
    parent: np.ndarray  # BFS parent element, -1 for the identity
    via: np.ndarray  # generator index used to reach the element
    right: np.ndarray  # (ngens, N): right[g, x] = index(x * gen_g)
    layers: List[np.ndarray]
    _lookup: Dict = field(default_factory=dict, repr=False)
    _radix: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.parent)

    def _keys(self, imgs: np.ndarray) -> list:
        if self._radix is not None:
            return (imgs.astype(np.int64) @ self._radix).tolist()
        return [row.tobytes() for row in np.ascontiguousarray(imgs, dtype=np.int32)]

    def index_of_images(self, imgs: np.ndarray) -> np.ndarray:
        imgs = np.atleast_2d(imgs)
        return np.array([self._lookup[k] for k in self._keys(imgs)], dtype=np.int64)

    def index_of(self, perm: np.ndarray) -> int:
        return int(self.index_of_images(perm[self.base])[0])

    def word(self, x: int) -> List[int]:
        out = []
        while self.parent[x] >= 0:
            out.append(int(self.via[x]))
            x = int(self.parent[x])
        return out[::-1]

    def perm(self, x: int) -> np.ndarray:
        p = identity(self.group.degree)
        for k in self.word(x):
            p = mul(p, self.group.gens[k])
        return p

    def right_by(self, x: int) -> np.ndarray:
        """Table w -> index(w * element_x)."""
        idx = np.arange(self.size)
        for k in self.word(x):
            idx = self.right[k][idx]
        return idx

    def left_by(self, t: int) -> np.ndarray:
        """Table x -> index(element_t * x), built layer by layer from
        element_t * (p * g) = (element_t * p) * g."""
        out = np.empty(self.size, dtype=np.int64)
        out[0] = t
        for layer in self.layers[1:]:
            out[layer] = self.right[self.via[layer], out[self.parent[layer]]]
        return out


def enumerate_group(group: PermGroup, order_cap: int = ORDER_CAP) -> Enumeration:
    order = group.order()
    if order > order_cap:
        raise CapExceeded(f"group order {order} exceeds the cap {order_cap}")
    base = np.array(group.base() or [0], dtype=np.int64)
    radix = None
    if group.degree ** len(base) < 2**62:
        radix = np.array([group.degree**i for i in range(len(base))], dtype=np.int64)
    enum = Enumeration(
        group, base, np.empty((0, len(base)), dtype=np.int32), np.empty(0, np.int64),
        np.empty(0, np.int64), np.empty((0, 0), np.int64), [], {}, radix,
    )
    gens = group.gens
    images = [base.astype(np.int32)]
    parent = [-1]
    via = [-1]
    enum._lookup[enum._keys(images[0][None, :])[0]] = 0
    right = [[] for _ in gens]
    layers = [np.array([0])]
    frontier = np.array([0])
    img_arr = images[0][None, :]
    count = 1
    # right[g] is filled in element order; frontier elements are processed
    # in increasing index, so appending per layer keeps it aligned.
    while len(frontier):
        new_ids = []
        for k, g in enumerate(gens):
            nxt = g[img_arr[frontier]]
            keys = enum._keys(nxt)
            col = np.empty(len(frontier), dtype=np.int64)
            for pos, key in enumerate(keys):
                idx = enum._lookup.get(key)
                if idx is None:
                    idx = count
                    count += 1
                    enum._lookup[key] = idx
                    images.append(nxt[pos])
                    parent.append(int(frontier[pos]))
                    via.append(k)
                    new_ids.append(idx)
                col[pos] = idx
            right[k].append(col)
        if new_ids:
            img_arr = np.vstack([img_arr, np.array(images[len(img_arr):])])
        frontier = np.array(sorted(new_ids), dtype=np.int64)
        if len(frontier):
            layers.append(frontier)
    if count != order:
        raise AssertionError(f"enumerated {count} elements, chain says {order}")
    enum.images = img_arr
    enum.parent = np.array(parent, dtype=np.int64)
    enum.via = np.array(via, dtype=np.int64)
    enum.right = np.array([np.concatenate(cols) for cols in right], dtype=np.int64)
    enum.layers = layers
    return enum


@dataclass
class ConjugacyClasses:
    enum: Enumeration
    class_of: np.ndarray  # element index -> class index
    reps: List[int]  # element index of each representative
    sizes: List[int]
    orders: List[int]
    inverse_class: List[int]
    powers: List[List[int]]  # powers[k][t] = class of rep_k ** t, t < orders[k]

    @property
    def count(self) -> int:
        return len(self.reps)

    @property
    def group_order(self) -> int:
        return self.enum.size

    @property
    def exponent(self) -> int:
        out = 1
        for o in self.orders:
            out = lcm(out, o)
        return out

    def power_map(self, p: int) -> List[int]:
        return [pw[p % len(pw)] for pw in self.powers]

    def rep_perm(self, k: int) -> np.ndarray:
        return self.enum.perm(self.reps[k])

    def central_classes(self) -> List[int]:
        return [k for k, s in enumerate(self.sizes) if s == 1]

    def structure_constants(self) -> np.ndarray:
        """a[j, l, k] = #{(x, y) : x in C_j, y in C_l, x y = z_k} for a fixed z_k in C_k."""
        K = self.count
        cinv = np.array(self.inverse_class)[self.class_of]
        out = np.zeros((K, K, K), dtype=np.int64)
        for k, z in enumerate(self.reps):
            # w ranges over G with x = w^-1 in C_j and y = w z in C_l.
            wz = self.enum.right_by(z)
            flat = cinv * K + self.class_of[wz]
            out[:, :, k] = np.bincount(flat, minlength=K * K).reshape(K, K)
        return out


def conjugacy_classes(
    group: PermGroup, order_cap: int = ORDER_CAP, class_cap: int = CLASS_CAP
) -> ConjugacyClasses:
    enum = enumerate_group(group, order_cap)
    N = enum.size
    rows, cols = [], []
    for g in group.gens:
        s = enum.index_of(g)
        s_inv = enum.index_of(inverse(g))
        conj = enum.right_by(s)[enum.left_by(s_inv)]  # x -> s^-1 x s
        rows.append(np.arange(N))
        cols.append(conj)
    if rows:
        graph = coo_matrix(
            (np.ones(N * len(rows), dtype=np.int8), (np.concatenate(rows), np.concatenate(cols))),
            shape=(N, N),
        )
        ncomp, labels = connected_components(graph, directed=True, connection="weak")
    else:
        ncomp, labels = 1, np.zeros(N, dtype=np.int64)
    if ncomp > class_cap:
        raise CapExceeded(f"{ncomp} conjugacy classes exceed the cap {class_cap}")
    first = np.full(ncomp, N, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(N))
    sizes_raw = np.bincount(labels, minlength=ncomp)
    degree = group.degree
    orders_raw = [perm_order(enum.perm(int(first[c]))) for c in range(ncomp)]
    ordering = sorted(range(ncomp), key=lambda c: (orders_raw[c], int(first[c])))
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[ordering] = np.arange(ncomp)
    class_of = relabel[labels]
    reps = [int(first[c]) for c in ordering]
    sizes = [int(sizes_raw[c]) for c in ordering]
    orders = [orders_raw[c] for c in ordering]
    powers = []
    for k, x in enumerate(reps):
        p = enum.perm(x)
        img = enum.base.copy()
        pw_imgs = []
        for _ in range(orders[k]):
            pw_imgs.append(img)
            img = p[img]
        idx = enum.index_of_images(np.array(pw_imgs))
        powers.append([int(c) for c in class_of[idx]])
    inverse_class = [pw[-1] if len(pw) > 1 else pw[0] for pw in powers]
    assert degree == enum.group.degree
    return ConjugacyClasses(enum, class_of, reps, sizes, orders, inverse_class, powers)
