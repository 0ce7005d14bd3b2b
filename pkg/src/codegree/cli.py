"""Command-line front end.

Exit codes: 0 success, 1 gate failure, 2 bad parameters, 3 cap refusal.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from .catalog import InadmissibleError, LieFamily, order, order_factorization, sylow_order, sylow_trace
from .chartab import CapExceeded, GroupFormatError, TableError, character_table, codegrees, read_group
from .chartab import write_json_atomic
from .chartab.classes import CLASS_CAP, ORDER_CAP
from .exactnum import PrimePower, factorize, zsigmondy
from .verifier import (
    GATE_FAIL,
    PARTIAL,
    PASS,
    Certificate,
    VerifyOptions,
    run_certificate,
    run_symbolic_sweep,
    symbolic_verdict,
    write_certificate,
)

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_CAP = 0, 1, 2, 3


class ParamError(ValueError):
    pass


def default_cache_dir() -> str:
    return os.environ.get("CODEGREE_CACHE_DIR") or str(Path.home() / ".cache" / "codegree")


def parse_q_values(text: str) -> List[int]:
    """``9``, ``2,3,4`` or ``2..9``; non prime powers inside a range are
    skipped, explicit ones are rejected."""
    values: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = (int(x) for x in part.split("..", 1))
            if lo > hi:
                raise ParamError(f"empty q range {part}")
            for q in range(max(lo, 2), hi + 1):
                if len(factorize(q)) == 1:
                    values.append(q)
        elif part:
            q = int(part)
            if q < 2 or len(factorize(q)) != 1:
                raise ParamError(f"q={q} is not a prime power")
            values.append(q)
    if not values:
        raise ParamError(f"no prime powers in {text!r}")
    return sorted(set(values))


@dataclass
class RunConfig:
    command: str
    family: Optional[str] = None
    n: Optional[int] = None
    q: Optional[List[int]] = None
    r: Optional[int] = None
    out: Optional[str] = None
    cache_dir: Optional[str] = None
    cap_order: int = ORDER_CAP
    cap_classes: int = CLASS_CAP
    fmt: str = "json"
    symbolic: bool = False
    jobs: int = 1

    def lie_family(self) -> LieFamily:
        if not self.family:
            raise ParamError("--family is required")
        return LieFamily.parse(self.family, self.n)


def _pp(q: int) -> PrimePower:
    return PrimePower.from_int(q)


# ---------------------------------------------------------------- commands


def cmd_order(cfg: RunConfig) -> int:
    fam = cfg.lie_family()
    for q in cfg.q:
        pp = _pp(q)
        fam.check(pp)
        print(f"{fam.name(q)}: {order(fam, pp)} = {order_factorization(fam, pp).format()}")
    return EXIT_OK


def cmd_sylow(cfg: RunConfig) -> int:
    fam = cfg.lie_family()
    if cfg.r is None:
        raise ParamError("--r is required")
    for q in cfg.q:
        pp = _pp(q)
        fam.check(pp)
        s = sylow_order(fam, pp, cfg.r)
        print(f"{fam.name(q)}: |H|_{cfg.r} = {s} = {factorize(s).format()}    [{sylow_trace(fam, pp, cfg.r)}]")
    return EXIT_OK


def cmd_zsigmondy(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise ParamError("--n is required")
    for q in cfg.q:
        r = zsigmondy(q, cfg.n)
        print(f"q={q} n={cfg.n}: " + ("none (exception case)" if r is None else str(r)))
    return EXIT_OK


def cmd_cod(cfg: RunConfig, path: str) -> int:
    group = read_group(path)
    table = character_table(group, cfg.cap_order, cfg.cap_classes, cfg.cache_dir)
    cod = codegrees(table)
    print(f"{group.name}: |G| = {table.group_order}, {len(table.sizes)} classes")
    print("degree  kernel  codegree")
    for rec in cod.records:
        print(f"{rec.degree:6d}  {rec.kernel_order:6d}  {rec.codegree:8d}")
    print("cod = {" + ", ".join(map(str, cod.values)) + "}")
    if cfg.out:
        data = {"group": group.name, "order": table.group_order, "class_sizes": table.sizes,
                "degrees": table.degrees, **cod.to_json()}
        write_json_atomic(Path(cfg.out), data)
    return EXIT_OK


def _one_certificate(args):
    fam, q, opts, out = args
    cert = run_certificate(fam, q, opts)
    if out:
        write_certificate(cert, out)
    return cert


def _symbolic_report(cfg: RunConfig) -> int:
    fam = cfg.lie_family()
    proofs = run_symbolic_sweep(fam.label, fam.n)
    verdict = symbolic_verdict(proofs)
    for p in proofs:
        print(f"  {p.verdict:11s} {p.label}: {p.lhs.format(p.var)} > {p.rhs.format(p.var)} for {p.var} >= {p.q0} [{p.path}]")
    print(f"{fam.label}{'' if fam.n is None else f' n={fam.n}'}: {len(proofs)} entries, {verdict}")
    if cfg.out:
        path = Path(cfg.out) / f"{fam.label}_{'' if fam.n is None else fam.n}_symbolic.json"
        write_json_atomic(path, {"family": fam.label, "n": fam.n, "verdict": verdict,
                                 "proofs": [p.to_json() for p in proofs]})
    return EXIT_OK if verdict == PASS else EXIT_FAIL


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.q is None:
        if cfg.symbolic:
            return _symbolic_report(cfg)
        raise ParamError("--q is required unless --symbolic is given alone")
    fam = cfg.lie_family()
    for q in cfg.q:
        fam.check(_pp(q))
    opts = VerifyOptions(
        order_cap=cfg.cap_order, class_cap=cfg.cap_classes, cache_dir=cfg.cache_dir,
        symbolic=cfg.symbolic,
    )
    work = [(fam, q, opts, cfg.out) for q in cfg.q]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            certs = list(pool.map(_one_certificate, work))
    else:
        certs = [_one_certificate(w) for w in work]
    if cfg.fmt == "markdown":
        print(markdown_report(certs))
    else:
        print(summary_table(certs))
    failed = [c for c in certs if c.verdict not in (PASS, PARTIAL)]
    for c in failed:
        print(f"GATE-FAIL in {c.params['name']}:", file=sys.stderr)
        for rec in c.failures():
            print("  " + json.dumps(rec, sort_keys=True), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------- reports


def summary_table(certs: Sequence[Certificate]) -> str:
    rows = ["instance          step1         step2  step3     step4  verdict"]
    for c in certs:
        s1 = ",".join(sorted({r.verdict for r in c.step1})) or "-"
        s2 = PASS if all(r.verdict == PASS for r in c.step2) else GATE_FAIL
        s4 = c.step4.verdict if c.step4 else "-"
        rows.append(f"{c.params['name']:16s}  {s1:12s}  {s2:5s}  {c.step3.verdict:8s}  {s4:5s}  {c.verdict}")
    return "\n".join(rows)


def markdown_report(certs: Sequence[Certificate]) -> str:
    out: List[str] = []
    by_family = {}
    for c in certs:
        key = c.family if "n" not in c.params else f"{c.family} n={c.params['n']}"
        by_family.setdefault(key, []).append(c)
    for key, group in by_family.items():
        out.append(f"## {key}\n")
        for c in group:
            out.append(f"### {c.params['name']}: {c.verdict}\n")
            out.append(f"|H| = {c.order}\n")
            out.append("#### Step 1\n")
            if not c.step1:
                out.append("Trivial Schur multiplier: nothing to check.\n")
            for r in c.step1:
                cites = "; ".join(x["citation"] for x in r.citations)
                out.append(f"- r={r.r}: {r.mode}, {r.verdict}, witness {r.witness}" + (f" ({cites})" if cites else ""))
            out.append("\n#### Step 2\n")
            out.append("| r | j | e | log_r of Sylow | verdict | bound |")
            out.append("|---|---|---|---|---|---|")
            for r in c.step2:
                out.append(f"| {r.r} | {r.j} | {r.e} | {r.sylow_exponent} | {r.verdict} | {r.bound_source} |")
            s3 = c.step3
            out.append("\n#### Step 3\n")
            out.append(f"D = {s3.D}, 2D = {2 * s3.D} vs qexp = {s3.qexp}: {s3.verdict}")
            for case in s3.ledger:
                out.append(f"- {case.case}: m >= {case.m_lower} (log_p), {'refuted' if case.refuted else 'survives'}")
            if s3.residual:
                out.append(f"- residual: {s3.residual}")
            if c.step4 is not None:
                s4 = c.step4
                out.append("\n#### Step 4\n")
                out.append(f"{s4.divisor} divides {s4.value}: {s4.divides}; gcd(n, q-1) = {s4.gcd_n_q_minus_1}: {s4.verdict}")
            out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="codegree", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, q=True):
        p.add_argument("--family")
        p.add_argument("--n", type=int)
        if q:
            p.add_argument("--q")
        p.add_argument("--r", type=int)
        p.add_argument("--out")
        p.add_argument("--format", dest="fmt", choices=["json", "markdown"], default="json")
        p.add_argument("--cap-order", type=int, default=ORDER_CAP)
        p.add_argument("--cap-classes", type=int, default=CLASS_CAP)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--symbolic", action="store_true")

    for name in ("order", "sylow", "zsigmondy", "verify"):
        common(sub.add_parser(name))
    p = sub.add_parser("cod")
    p.add_argument("group_file")
    common(p, q=False)
    p = sub.add_parser("catalog")
    p.add_argument("--out", default="catalog.json")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            from .catalog import write_catalog

            write_catalog(args.out)
            print(f"wrote {args.out}")
            return EXIT_OK
        cfg = RunConfig(
            command=args.command, family=args.family, n=args.n,
            q=parse_q_values(args.q) if getattr(args, "q", None) else None,
            r=args.r, out=args.out, cache_dir=default_cache_dir(),
            cap_order=args.cap_order, cap_classes=args.cap_classes, fmt=args.fmt,
            symbolic=args.symbolic, jobs=args.jobs,
        )
        if cfg.command in ("order", "sylow", "zsigmondy") and cfg.q is None:
            raise ParamError("--q is required")
        if cfg.command == "order":
            return cmd_order(cfg)
        if cfg.command == "sylow":
            return cmd_sylow(cfg)
        if cfg.command == "zsigmondy":
            return cmd_zsigmondy(cfg)
        if cfg.command == "cod":
            return cmd_cod(cfg, args.group_file)
        return cmd_verify(cfg)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParamError, InadmissibleError, GroupFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except TableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
