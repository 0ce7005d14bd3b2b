"""Permutation groups: cycle-notation I/O and a Schreier-Sims stabilizer chain.

Permutations are numpy integer arrays on the points 0..n-1. Products act on
the right: ``mul(x, y)`` applies x first, then y, so ``mul(x, y)[i] == y[x[i]]``.
Group files use 1-based points:

    # comment
    degree 24
    gen (1,2,3)(4,5)
    gen (1,6)
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

PERM_DTYPE = np.int32


class GroupFormatError(ValueError):
    pass


def identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=PERM_DTYPE)


def mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x then y."""
    return y[x]


def inverse(x: np.ndarray) -> np.ndarray:
    inv = np.empty_like(x)
    inv[x] = np.arange(len(x), dtype=x.dtype)
    return inv


def is_identity(x: np.ndarray) -> bool:
    return bool(np.array_equal(x, np.arange(len(x))))


def check_perm(x: np.ndarray) -> None:
    n = len(x)
    if x.min(initial=0) < 0 or x.max(initial=0) >= n or len(np.unique(x)) != n:
        raise GroupFormatError("not a permutation")


def cycles(x: np.ndarray) -> List[Tuple[int, ...]]:
    seen = np.zeros(len(x), dtype=bool)
    out = []
    for i in range(len(x)):
        if seen[i] or x[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = int(x[j])
        out.append(tuple(cyc))
    return out


def perm_order(x: np.ndarray) -> int:
    from math import lcm

    out = 1
    for c in cycles(x):
        out = lcm(out, len(c))
    return out


def fmt_perm(x: np.ndarray) -> str:
    cs = cycles(x)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> np.ndarray:
    """Parse 1-based cycle notation such as ``(1,2,3)(4,5)``."""
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise GroupFormatError(f"bad cycle notation: {text!r}")
    x = identity(degree)
    used = set()
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        try:
            pts = [int(t) - 1 for t in body.split(",")]
        except ValueError as exc:
            raise GroupFormatError(f"bad point in cycle ({body})") from exc
        for p in pts:
            if not 0 <= p < degree:
                raise GroupFormatError(f"point {p + 1} outside 1..{degree}")
            if p in used:
                raise GroupFormatError(f"point {p + 1} repeated")
            used.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            x[a] = b
    return x


# ---------------------------------------------------------------- stabilizer chain


@dataclass
class _Level:
    point: int
    gens: List[np.ndarray]
    gen_inv: List[np.ndarray]
    # Schreier vector: label[b] = index of the generator that reached b, -1
    # outside the orbit, -2 at the base point; back[b] = the predecessor.
    label: np.ndarray
    back: np.ndarray
    orbit: List[int]

    @classmethod
    def new(cls, point: int, degree: int) -> "_Level":
        label = np.full(degree, -1, dtype=np.int64)
        label[point] = -2
        return cls(point, [], [], label, np.full(degree, -1, dtype=np.int64), [point])

    def add_gen(self, g: np.ndarray) -> None:
        self.gens.append(g)
        self.gen_inv.append(inverse(g))
        # Extend the orbit without touching existing entries, so transversal
        # elements chosen earlier stay valid.
        queue = list(self.orbit)
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            for k, s in enumerate(self.gens):
                b = int(s[a])
                if self.label[b] == -1:
                    self.label[b] = k
                    self.back[b] = a
                    self.orbit.append(b)
                    queue.append(b)

    def strip_point(self, h: np.ndarray, b: int) -> np.ndarray:
        """h * u_b^-1, where u_b maps the base point to b."""
        while self.label[b] != -2:
            k = int(self.label[b])
            h = mul(h, self.gen_inv[k])
            b = int(self.back[b])
        return h

    def transversal(self, b: int, degree: int) -> np.ndarray:
        word = []
        while self.label[b] != -2:
            word.append(int(self.label[b]))
            b = int(self.back[b])
        u = identity(degree)
        for k in reversed(word):
            u = mul(u, self.gens[k])
        return u


@dataclass
class StabChain:
    degree: int
    levels: List[_Level] = field(default_factory=list)

    @property
    def base(self) -> List[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.orbit)
        return out

    def sift(self, h: np.ndarray, start: int = 0) -> Tuple[np.ndarray, int]:
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            b = int(h[lv.point])
            if lv.label[b] == -1:
                return h, i
            h = lv.strip_point(h, b)
        return h, len(self.levels)

    def contains(self, h: np.ndarray) -> bool:
        h, j = self.sift(h)
        return j == len(self.levels) and is_identity(h)


def _moved_point(h: np.ndarray) -> int:
    moved = np.nonzero(h != np.arange(len(h)))[0]
    return int(moved[0])


def schreier_sims(gens: Sequence[np.ndarray], degree: int) -> StabChain:
    """Deterministic Schreier-Sims."""
    chain = StabChain(degree)
    gens = [g for g in gens if not is_identity(g)]
    if not gens:
        return chain
    chain.levels.append(_Level.new(_moved_point(gens[0]), degree))
    for g in gens:
        chain.levels[0].add_gen(g)
    # done[i] = number of (orbit point, generator) pairs already checked at level i,
    # scanned orbit-major; pairs stay valid because transversals never change.
    done: List[set] = [set()]
    i = 0
    while i >= 0:
        lv = chain.levels[i]
        progressed = False
        for b in list(lv.orbit):
            u_b = None
            for k in range(len(lv.gens)):
                if (b, k) in done[i]:
                    continue
                if u_b is None:
                    u_b = lv.transversal(b, degree)
                s = lv.gens[k]
                y = lv.strip_point(mul(u_b, s), int(s[b]))
                h, j = chain.sift(y, i + 1)
                done[i].add((b, k))
                if j < len(chain.levels) or not is_identity(h):
                    if j == len(chain.levels):
                        chain.levels.append(_Level.new(_moved_point(h), degree))
                        done.append(set())
                    for level in range(i + 1, j + 1):
                        chain.levels[level].add_gen(h)
                    i = j
                    progressed = True
                    break
            if progressed:
                break
        if not progressed:
            i -= 1
    return chain


# ---------------------------------------------------------------- groups


@dataclass
class PermGroup:
    degree: int
    gens: Tuple[np.ndarray, ...]
    name: str = ""
    _chain: Optional[StabChain] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        gens = []
        for g in self.gens:
            g = np.asarray(g, dtype=PERM_DTYPE)
            if len(g) != self.degree:
                raise GroupFormatError("generator degree mismatch")
            check_perm(g)
            gens.append(g)
        self.gens = tuple(gens)

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = schreier_sims(self.gens, self.degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def base(self) -> List[int]:
        return self.chain.base

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        lines.append(f"degree {self.degree}")
        lines.extend(f"gen {fmt_perm(g)}" for g in self.gens)
        return "\n".join(lines) + "\n"

    def content_hash(self) -> str:
        body = f"degree {self.degree}\n" + "".join(f"gen {fmt_perm(g)}\n" for g in self.gens)
        return hashlib.sha256(body.encode()).hexdigest()


def parse_group(text: str, name: str = "") -> PermGroup:
    degree = None
    gens: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key == "degree":
            try:
                degree = int(rest)
            except ValueError as exc:
                raise GroupFormatError(f"line {lineno}: bad degree") from exc
            if degree < 1:
                raise GroupFormatError(f"line {lineno}: degree must be positive")
        elif key == "gen":
            if degree is None:
                raise GroupFormatError(f"line {lineno}: gen before degree")
            gens.append(rest)
        else:
            raise GroupFormatError(f"line {lineno}: unknown keyword {key!r}")
    if degree is None:
        raise GroupFormatError("missing degree line")
    return PermGroup(degree, tuple(parse_perm(g, degree) for g in gens), name)


def read_group(path: Union[str, Path]) -> PermGroup:
    path = Path(path)
    return parse_group(path.read_text(), name=path.stem)
