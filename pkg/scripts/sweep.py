"""Write certificates for the standard instance grid and print a summary.

Usage: python scripts/sweep.py [output dir] [--jobs N]
"""
from __future__ import annotations

import argparse
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from codegree.catalog import InadmissibleError, LieFamily
from codegree.cli import default_cache_dir
from codegree.exactnum import factorize
from codegree.verifier import VerifyOptions, run_certificate, write_certificate

QS = (2, 3, 4, 5, 7, 8, 9)


def instances():
    small = [q for q in range(2, 14) if len(factorize(q)) == 1]
    out = [(k, None, q) for k in ("E8", "E7", "E6", "2E6", "F4", "G2", "3D4") for q in small]
    out += [(k, None, q) for k in ("2B2", "2F4") for q in (8, 32)]
    out += [("2G2", None, q) for q in (27, 243)]
    out += [("PSL", n, q) for n in range(4, 9) for q in QS]
    out += [("PSp", n, q) for n in range(2, 7) for q in QS]
    return out


def one(args):
    kind, n, q, out_dir = args
    try:
        cert = run_certificate(LieFamily.parse(kind, n), q, VerifyOptions(cache_dir=default_cache_dir()))
    except InadmissibleError:
        return None
    write_certificate(cert, out_dir)
    return cert.params["name"], cert.verdict


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", nargs="?", default="certificates")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)
    work = [(k, n, q, args.out) for k, n, q in instances()]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = [r for r in pool.map(one, work) if r]
    else:
        results = [r for r in map(one, work) if r]
    for name, verdict in results:
        print(f"{name:12s} {verdict}")
    counts = Counter(v for _, v in results)
    print(", ".join(f"{v}: {c}" for v, c in sorted(counts.items())))
    return 1 if "GATE-FAIL" in counts else 0


if __name__ == "__main__":
    raise SystemExit(main())
