"""Rebuild src/codegree/data/2sz8.txt, a permutation representation of the
perfect double cover 2.Sz(8) on 4480 points.

1. The presentation P below defines Sz(8): coset enumeration over <b> (b of
   order dividing 4) gives index 7280, so |P| <= 29120, and the action on
   the 65 cosets of a point stabiliser is a group of order 29120.
2. Adjoin a central involution c and multiply the relators by tails c^t.
   For each tail vector, up to the substitutions a -> ac, b -> bc,
   enumerate cosets of <(Baba)^2>, the lift of a subgroup of order 13
   (odd order, so it lifts isomorphically). Index 4480 means order 58240.
3. The first such group with a single linear character (so perfect, hence
   a non-split extension) is written out. The three non-split double
   covers are permuted by the outer automorphisms of Sz(8), so any of them
   will do.

Usage: python scripts/build_2sz8.py [output path]
"""
from __future__ import annotations

import itertools
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))
from cosets import enumerate_felsch, word  # noqa: E402

from codegree.chartab import PermGroup, character_table  # noqa: E402

RELATORS = [
    "aa",
    "bbbb",
    "ab" * 5,
    "abb" * 7,
    "Baba" * 13,
    "BBaBaba" * 7,
]
STABILISER = ["abababbab", "babbabbbababa", "bbababbabbabb"]
SZ8_ORDER = 29120


def check_presentation() -> None:
    index, _, _ = enumerate_felsch(2, [word(r) for r in RELATORS], [word("b")], 200_000)
    assert index == 7280, index
    index, perms, _ = enumerate_felsch(2, [word(r) for r in RELATORS], [word(s) for s in STABILISER])
    group = PermGroup(index, tuple(np.array(p) for p in perms), "Sz(8)")
    assert group.order() == SZ8_ORDER, group.order()
    print(f"presentation defines a group of order {SZ8_ORDER} (index 7280 over <b>, 65-point image)")


def flip(tails, letter):
    return tuple(t ^ (sum(ch.lower() == letter for ch in r) % 2) for t, r in zip(tails, RELATORS))


def find_cover() -> PermGroup:
    seen = set()
    for tails in itertools.product((0, 1), repeat=len(RELATORS)):
        key = min({tails, flip(tails, "a"), flip(tails, "b"), flip(flip(tails, "a"), "b")})
        if key in seen:
            continue
        seen.add(key)
        rels = ["cc", "acAC", "bcBC"] + [r + "c" * t for r, t in zip(RELATORS, tails)]
        start = time.time()
        try:
            index, perms, _ = enumerate_felsch(3, [word(r) for r in rels], [word("Baba" * 2)], 400_000)
        except RuntimeError:
            continue
        print(f"tails {tails}: index {index} ({time.time() - start:.1f}s)")
        if index != 2 * SZ8_ORDER // 13:
            continue
        # <a, b> is everything exactly when the extension does not split
        group = PermGroup(index, tuple(np.array(p) for p in perms[:2]), "2.Sz(8)")
        if group.order() != 2 * SZ8_ORDER:
            continue
        table = character_table(group)
        if table.degrees.count(1) == 1 and len(table.central_classes()) == 2:
            print(f"perfect central extension of order {group.order()}, degrees {table.degrees}")
            return group
    raise RuntimeError("no non-split double cover found")


def main(argv) -> None:
    out = Path(argv[1]) if len(argv) > 1 else Path(__file__).parents[1] / "src/codegree/data/2sz8.txt"
    check_presentation()
    group = find_cover()
    header = "# perfect double cover 2.Sz(8), order 58240, regenerated by scripts/build_2sz8.py\n"
    out.write_text(header + group.to_text())
    print(f"wrote {out}")


if __name__ == "__main__":
    main(sys.argv)
