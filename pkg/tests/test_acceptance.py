"""Acceptance gate: one test per criterion, each printing a single pass/fail
line with its runtime against the budget."""
import json
import random
import time
from contextlib import contextmanager

import pytest

from codegree.catalog import CITED_FACTS, InadmissibleError, LieFamily, order
from codegree.chartab import character_table, codegrees, step1_witness_check
from codegree.chartab.burnside import burnside_table
from codegree.chartab.groups import alternating, corpus_groups, psl2
from codegree.chartab.perms import read_group
from codegree.corpus import corpus
from codegree.exactnum import factorize, is_prime, qde_rpart, zsigmondy
from codegree.qsymbolic import verify_shift_certificate
from codegree.verifier import (
    CITED,
    DATA_DIR,
    GATE_FAIL,
    PARTIAL,
    PASS,
    VerifyOptions,
    run_certificate,
    step4_psl_gate,
)


@pytest.fixture(scope="module")
def cache(tmp_path_factory):
    return tmp_path_factory.mktemp("acceptance-cache")


@contextmanager
def criterion(capsys, number, title, budget):
    start = time.perf_counter()
    ok, why = True, ""
    try:
        yield
    except Exception as exc:
        ok, why = False, f"{type(exc).__name__}: {exc}"
        raise
    finally:
        elapsed = time.perf_counter() - start
        if ok and elapsed > budget:
            ok, why = False, f"over budget {budget:.0f} s"
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\ncriterion {number}: {status}  {title}  ({elapsed:.2f} s / {budget:.0f} s){'  ' + why if why else ''}")
    assert elapsed <= budget, why


def fam(kind, n=None):
    return LieFamily.parse(kind, n)


def prime_powers(lo, hi):
    return [q for q in range(max(lo, 2), hi + 1) if len(factorize(q)) == 1]


# ---------------------------------------------------------------- 1


PRINTED = [
    (("G2", None), 3, {2: 6, 3: 6, 7: 1, 13: 1}),
    (("G2", None), 4, {2: 12, 3: 3, 5: 2, 7: 1, 13: 1}),
    (("F4", None), 2, {2: 24, 3: 6, 5: 2, 7: 2, 13: 1, 17: 1}),
    (("2B2", None), 8, {2: 6, 5: 1, 7: 1, 13: 1}),
    (("PSL", 6), 2, {2: 15, 3: 4, 5: 1, 7: 2, 31: 1}),
    (("PSL", 6), 3, {2: 11, 3: 15, 5: 1, 7: 1, 11: 2, 13: 2}),
    (("PSp", 3), 2, {2: 9, 3: 4, 5: 1, 7: 1}),
]


def test_criterion_1_printed_factorizations(capsys):
    with criterion(capsys, 1, "printed order factorizations", 1):
        for (kind, n), q, expected in PRINTED:
            assert dict(factorize(order(fam(kind, n), q))) == expected, (kind, n, q)


# ---------------------------------------------------------------- 2


def test_criterion_2_lifting_exponent(capsys):
    rng = random.Random(20240601)
    small_primes = [p for p in range(2, 102) if is_prime(p)]

    def brute(n, r):
        v = 1
        while n % r == 0:
            n //= r
            v *= r
        return v

    with criterion(capsys, 2, "qde_rpart vs expansion on 10000 tuples", 5):
        done = 0
        while done < 10000:
            q, d, eps = rng.randint(2, 100), rng.randint(1, 12), rng.choice((1, -1))
            divisors = [r for r in small_primes if (q - eps) % r == 0]
            if not divisors:
                continue
            r = rng.choice(divisors)
            assert qde_rpart(q, d, eps, r) == brute(q**d - eps, r), (q, d, eps, r)
            done += 1


# ---------------------------------------------------------------- 3


def test_criterion_3_zsigmondy(capsys):
    with criterion(capsys, 3, "Zsigmondy exceptions for q <= 30, n <= 20", 10):
        exceptions = set()
        for q in prime_powers(2, 30):
            for n in range(2, 21):
                r = zsigmondy(q, n)
                if r is None:
                    exceptions.add((n, q))
                    continue
                assert is_prime(r) and pow(q, n, r) == 1
                assert all(pow(q, i, r) != 1 for i in range(1, n)), (q, n, r)
        mersenne = {(2, q) for q in prime_powers(2, 30) if (q + 1) & q == 0}
        assert exceptions == {(6, 2)} | mersenne == {(6, 2), (2, 3), (2, 7)}


# ---------------------------------------------------------------- 4


def test_criterion_4_codegree_oracle(capsys):
    with criterion(capsys, 4, "Dixon-Schneider vs Burnside codegrees", 120):
        assert codegrees(character_table(alternating(5))).values == [1, 12, 15, 20]
        assert codegrees(character_table(psl2(7))).values == [1, 21, 24, 28, 56]
        groups = corpus_groups()
        assert len(groups) >= 20
        for g in groups:
            assert g.order() <= 2000
            exact = codegrees(character_table(g)).values
            oracle = burnside_table([list(x) for x in g.gens])
            N = sum(oracle.sizes)
            float_cod = sorted({N // k // d for d, k in zip(oracle.degrees, oracle.kernel_orders)})
            assert exact == float_cod, g.name


# ---------------------------------------------------------------- 5


def test_criterion_5_suzuki_cover_witness(capsys, cache):
    with criterion(capsys, 5, "faithful degree 40 of 2.Sz(8), 20 not in cd(Sz(8))", 300):
        cover = read_group(DATA_DIR / "2sz8.txt")
        assert cover.order() == 2 * order(fam("2B2"), 8) == 58240
        rep = step1_witness_check(cover, 2, cache_dir=cache)
        assert rep.verdict == "REFUTED" and rep.witness == 40
        assert 20 not in rep.quotient_degrees
        assert rep.quotient_degrees == [1, 14, 35, 64, 65, 91]


# ---------------------------------------------------------------- 6


def sweep_instances():
    out = []
    for kind in ("E8", "E7", "E6", "2E6", "F4", "G2", "3D4"):
        out += [(kind, None, q) for q in prime_powers(2, 13)]
    out += [(kind, None, q) for kind in ("2B2", "2F4") for q in (8, 32)]
    out += [("2G2", None, q) for q in (27, 243)]
    qs = (2, 3, 4, 5, 7, 8, 9)
    out += [("PSL", n, q) for n in range(4, 9) for q in qs]
    out += [("PSp", n, q) for n in range(2, 7) for q in qs]
    return out


def test_criterion_6_numeric_sweep(capsys, cache):
    opts = VerifyOptions(cache_dir=str(cache), timestamp=False)
    with criterion(capsys, 6, "numeric step 2/3 sweep", 600):
        verdicts = {}
        for kind, n, q in sweep_instances():
            try:
                cert = run_certificate(fam(kind, n), q, opts)
            except InadmissibleError:
                continue
            verdicts[(kind, n, q)] = cert.verdict
            expected = PARTIAL if kind == "PSp" else PASS
            assert cert.verdict == expected and not cert.failures(), (kind, n, q, cert.failures())
        assert GATE_FAIL not in verdicts.values()
        assert len(verdicts) >= 130


# ---------------------------------------------------------------- 7


def test_criterion_7_symbolic_corpus(capsys):
    with criterion(capsys, 7, "symbolic inequality corpus", 30):
        entries = corpus()
        assert len(entries) >= 30
        for e in entries:
            proof = e.prove()
            assert proof.proven and verify_shift_certificate(proof), e.key
            assert proof.q0 == e.q0 or proof.path == "shift+finite-check"


# ---------------------------------------------------------------- 8


def test_criterion_8_step4_arithmetic(capsys):
    with criterion(capsys, 8, "p^n does not divide (p^n-1)(p^(n-1)-p)/(p-1)", 1):
        for p in (2, 3, 5, 7):
            for n in range(5, 11):
                value = (p**n - 1) * (p ** (n - 1) - p) // (p - 1)
                assert value % p**n != 0
                rec = step4_psl_gate(n, p)
                assert rec.value == value and not rec.divides and rec.verdict == PASS


# ---------------------------------------------------------------- 9


CITED_INSTANCES = {
    "2.F4(2):faithful-52": ("F4", None, 2),
    "3.2E6(2):faithful-46683": ("2E6", None, 2),
    "2.2E6(2):faithful-2432": ("2E6", None, 2),
    "Dempwolff:faithful-248": ("PSL", 5, 2),
    "SL4(3):faithful-40": ("PSL", 4, 3),
    "3.G2(3):faithful-27": ("G2", None, 3),
}


def _citations(data):
    if isinstance(data, dict):
        if "status" in data and "citation" in data:
            yield data
        for v in data.values():
            yield from _citations(v)
    elif isinstance(data, list):
        for v in data:
            yield from _citations(v)


def test_criterion_9_cited_facts(capsys, cache):
    opts = VerifyOptions(cache_dir=str(cache), timestamp=False)
    with criterion(capsys, 9, "large-group facts carried as ASSUMED-CITED", 60):
        for key, (kind, n, q) in CITED_INSTANCES.items():
            text = run_certificate(fam(kind, n), q, opts).dumps()
            assert "VERIFIED" not in text
            found = [c for c in _citations(json.loads(text)) if c["key"] == key]
            assert found, key
            for c in found:
                assert c["status"] == CITED
                assert c["citation"] == CITED_FACTS[key].citation
