"""Exact character tables and codegree sets of small permutation groups."""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union

from .classes import CLASS_CAP, ORDER_CAP, CapExceeded, ConjugacyClasses, conjugacy_classes
from .dixon import CharacterTable, CharValue, TableError, dixon_schneider
from .perms import GroupFormatError, PermGroup, parse_group, read_group

__all__ = [
    "CapExceeded",
    "CharValue",
    "CharacterTable",
    "CodegreeSet",
    "ConjugacyClasses",
    "GroupFormatError",
    "PermGroup",
    "TableError",
    "WitnessReport",
    "character_table",
    "codegrees",
    "conjugacy_classes",
    "faithful_degrees",
    "parse_group",
    "read_group",
    "step1_witness_check",
]

CACHE_VERSION = 1


def _cache_path(group: PermGroup, cache_dir: Path) -> Path:
    return cache_dir / f"table-v{CACHE_VERSION}-{group.content_hash()[:32]}.json"


def write_json_atomic(path: Path, data) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    with os.fdopen(fd, "w") as fh:
        json.dump(data, fh, sort_keys=True, separators=(",", ":"))
    os.replace(tmp, path)


def character_table(
    group: PermGroup,
    order_cap: int = ORDER_CAP,
    class_cap: int = CLASS_CAP,
    cache_dir: Optional[Union[str, Path]] = None,
) -> CharacterTable:
    """Exact table of ``group``; with ``cache_dir`` set, tables are stored as
    JSON keyed by a hash of the group text and re-verified on load."""
    path = _cache_path(group, Path(cache_dir)) if cache_dir else None
    if path is not None and path.exists():
        table = CharacterTable.from_json(json.loads(path.read_text()))
        from .dixon import verify_table

        verify_table(table)
        if table.group_order <= order_cap and len(table.sizes) <= class_cap:
            return table
    if group.order() > order_cap:
        raise CapExceeded(f"group order {group.order()} exceeds the cap {order_cap}")
    table = dixon_schneider(conjugacy_classes(group, order_cap, class_cap), group.name)
    if path is not None:
        write_json_atomic(path, table.to_json())
    return table


@dataclass
class CodegreeRecord:
    degree: int
    kernel_order: int
    codegree: int


@dataclass
class CodegreeSet:
    values: List[int]
    records: List[CodegreeRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "codegrees": self.values,
            "characters": [vars(r) for r in self.records],
        }


def codegrees(table: CharacterTable) -> CodegreeSet:
    records = []
    for chi, d in enumerate(table.degrees):
        ker = table.kernel_order(chi)
        num = table.group_order // ker
        if table.group_order % ker or num % d:
            raise TableError(f"non-integral codegree |G:ker|/chi(1) = {num}/{d}")
        records.append(CodegreeRecord(d, ker, num // d))
    return CodegreeSet(sorted({r.codegree for r in records}), records)


def faithful_degrees(table: CharacterTable) -> List[int]:
    """Degrees of the faithful characters, as a sorted multiset."""
    return sorted(d for chi, d in enumerate(table.degrees) if table.kernel_order(chi) == 1)


@dataclass
class WitnessReport:
    r: int
    cover_order: int
    quotient_degrees: List[int]
    rows: List[dict]
    verdict: str  # REFUTED or INCONCLUSIVE
    witness: Optional[int]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "cover_order": self.cover_order,
            "quotient_degrees": self.quotient_degrees,
            "faithful": self.rows,
            "verdict": self.verdict,
            "witness": self.witness,
        }


def step1_witness_check(
    cover: Union[PermGroup, CharacterTable],
    r: int,
    order_cap: int = ORDER_CAP,
    class_cap: int = CLASS_CAP,
    cache_dir: Optional[Union[str, Path]] = None,
) -> WitnessReport:
    """Look for a faithful character chi of a central extension r.H with
    chi(1)/r not a degree of H.

    The characters of H are the characters of the cover whose kernel contains
    the center, so one table serves both groups.
    """
    table = cover if isinstance(cover, CharacterTable) else character_table(
        cover, order_cap, class_cap, cache_dir
    )
    center = table.central_classes()
    if len(center) != r:
        raise ValueError(f"center has order {len(center)}, expected {r}")
    quotient = sorted(
        d for chi, d in enumerate(table.degrees)
        if set(center) <= set(table.kernel_classes(chi))
    )
    cd = set(quotient)
    rows = []
    witness = None
    for d in faithful_degrees(table):
        divides = d % r == 0
        inside = divides and d // r in cd
        rows.append({"degree": d, "r_divides": divides, "quotient_degree": inside})
        if not inside and witness is None:
            witness = d
    verdict = "REFUTED" if witness is not None else "INCONCLUSIVE"
    return WitnessReport(r, table.group_order, sorted(cd), rows, verdict, witness)
