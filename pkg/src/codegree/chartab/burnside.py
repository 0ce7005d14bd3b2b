"""Floating-point character tables by Burnside's method.

This is an independent oracle for the exact path: elements are plain tuples,
classes come from brute-force conjugation, and characters are read off the
eigenvectors of a random combination of class matrices. Only meant for
groups with a few thousand elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

Perm = Tuple[int, ...]


def _mul(x: Perm, y: Perm) -> Perm:
    return tuple(y[i] for i in x)


def _inv(x: Perm) -> Perm:
    out = [0] * len(x)
    for i, j in enumerate(x):
        out[j] = i
    return tuple(out)


def elements(gens: Sequence[Perm]) -> List[Perm]:
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    out = [ident]
    i = 0
    while i < len(out):
        x = out[i]
        i += 1
        for g in gens:
            y = _mul(x, g)
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


@dataclass
class FloatTable:
    sizes: List[int]
    degrees: List[int]
    kernel_orders: List[int]
    values: np.ndarray  # (chars, classes), complex


def burnside_table(gens: Sequence[Sequence[int]], seed: int = 1) -> FloatTable:
    gens = [tuple(int(v) for v in g) for g in gens]
    elts = elements(gens)
    N = len(elts)
    index: Dict[Perm, int] = {x: i for i, x in enumerate(elts)}
    cls = [-1] * N
    classes: List[List[int]] = []
    for i, x in enumerate(elts):
        if cls[i] >= 0:
            continue
        orbit = [x]
        cls[i] = len(classes)
        j = 0
        while j < len(orbit):
            y = orbit[j]
            j += 1
            for g in gens:
                z = _mul(_mul(_inv(g), y), g)
                if cls[index[z]] < 0:
                    cls[index[z]] = len(classes)
                    orbit.append(z)
        classes.append([index[y] for y in orbit])
    K = len(classes)
    sizes = [len(c) for c in classes]
    inv_cls = [cls[index[_inv(elts[c[0]])]] for c in classes]
    # a[j][l][k] = #{x in C_j : x^-1 z_k in C_l}
    a = np.zeros((K, K, K))
    for k, c in enumerate(classes):
        z = elts[c[0]]
        for i, x in enumerate(elts):
            a[cls[i], cls[index[_mul(_inv(x), z)]], k] += 1
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(K)
    m = np.tensordot(coeffs, a, axes=1)  # m[l, k]
    _, vecs = np.linalg.eig(m)
    size_arr = np.array(sizes, dtype=float)
    degrees, kernels, rows = [], [], []
    for col in range(K):
        w = vecs[:, col] / vecs[0, col]
        s = np.sum(w * w[inv_cls] / size_arr)
        d = float(np.sqrt((N / s).real))
        chi = d * w / size_arr
        deg = int(round(d))
        degrees.append(deg)
        kernels.append(sum(sz for sz, v in zip(sizes, chi) if abs(v - deg) < 1e-6))
        rows.append(chi)
    order = np.argsort(degrees, kind="stable")
    return FloatTable(
        sizes, [degrees[i] for i in order], [kernels[i] for i in order], np.array(rows)[order]
    )
