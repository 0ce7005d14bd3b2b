import json

import pytest
from hypothesis import given, settings, strategies as st

from codegree.catalog import InadmissibleError, LieFamily, order
from codegree.exactnum import PrimePower
from codegree.verifier import (
    CITED,
    GATE_FAIL,
    PARTIAL,
    PASS,
    REFUTED,
    RESIDUAL,
    VerifyOptions,
    run_certificate,
    step1_gate,
    step2_gate,
    step3_gate,
    step3_tensor_ledger,
    step4_psl_gate,
    suzuki_order_check,
    write_certificate,
)

OPTS = VerifyOptions(timestamp=False)
CITED_ONLY = VerifyOptions(compute_small=False, timestamp=False)


def fam(kind, n=None):
    return LieFamily.parse(kind, n)


def ledger(kind, n, q):
    return {c.case: c for c in step3_tensor_ledger(fam(kind, n), q)}


# ---------------------------------------------------------------- step 1


def test_g2_3_step1_is_cited():
    (rec,) = step1_gate(fam("G2"), 3, OPTS)
    assert rec.r == 3 and rec.verdict == CITED and rec.witness == 27
    assert rec.citations and all(c["status"] == CITED for c in rec.citations)


def test_suzuki_8_witness_is_computed():
    (rec,) = step1_gate(fam("2B2"), 8, OPTS)
    assert (rec.mode, rec.verdict, rec.witness) == ("computed", REFUTED, 40)
    (cited,) = step1_gate(fam("2B2"), 8, CITED_ONLY)
    assert cited.verdict == CITED and cited.witness == 40


def test_psl_and_psp_inequality_witnesses():
    (rec,) = step1_gate(fam("PSL", 5), 11, OPTS)
    assert rec.r == 5 and rec.verdict == REFUTED and rec.mode == "inequality"
    assert rec.witness == (11**5 - 1) // 10  # Weil degree (q^n - 1)/(q - 1)
    assert rec.detail["min_degree_H"] == rec.witness - 1
    (rec,) = step1_gate(fam("PSp", 3), 3, OPTS)
    assert (rec.r, rec.verdict, rec.witness) == (2, REFUTED, 14)


def test_trivial_multiplier_has_no_step1():
    assert step1_gate(fam("E8"), 2, OPTS) == []
    assert step1_gate(fam("F4"), 3, OPTS) == []


# ---------------------------------------------------------------- step 2


def test_g2_3_step2_primes():
    cert = run_certificate(fam("G2"), 3, OPTS)
    assert [r.r for r in cert.step2] == [2, 7, 13]
    assert all(r.verdict == PASS for r in cert.step2)


def test_step2_records():
    rec = step2_gate(fam("F4"), 2, 3)
    assert rec.bound_source == "F4(2):hiss-malle-52" and rec.e == 52 and rec.sylow_exponent == 6
    rec = step2_gate(fam("PSL", 4), 3, 13)
    assert rec.bound_source == "L4(3):min-degree-26"
    rec = step2_gate(fam("G2"), 3, 11)
    assert rec.sylow == 1 and rec.verdict == PASS and "vacuous" in rec.note
    rec = step2_gate(fam("PSL", 5), 2, 31)
    assert rec.kappa == 1 and rec.e == 29 and rec.corpus == ["PSL[n=5]/r odd, j=n"]
    rec = step2_gate(fam("PSL", 5), 2, 3)
    assert not rec.corpus and "exact arithmetic" in rec.note and rec.verdict == PASS
    with pytest.raises(ValueError):
        step2_gate(fam("E8"), 3, 3)


# ---------------------------------------------------------------- step 3


def test_step3_exceptional_passes():
    rec = step3_gate(fam("E8"), 2)
    assert (rec.D, rec.qexp, rec.verdict) == (248, 120, PASS)
    rec = step3_gate(fam("F4"), 3)
    assert (rec.p, rec.D, rec.qexp, rec.verdict) == (3, 25, 24, PASS)


def test_step3_psl_residual_goes_to_step4():
    rec = step3_gate(fam("PSL", 5), 2)
    assert rec.verdict == RESIDUAL and "step 4" in rec.residual
    assert all(c.refuted for c in rec.ledger if c.case != "natural module")


def test_tensor_ledger_examples():
    cases = ledger("PSL", 6, 4)
    assert cases["s=2, M restricted"].m_lower == 36 and cases["s=2, M restricted"].refuted
    cases = ledger("PSp", 4, 2)
    assert cases["s=1, restricted, dim > 2n"].m_lower == 26
    assert cases["s=1, spin module"].m_lower == 16
    assert not cases["natural module"].refuted
    with pytest.raises(ValueError):
        step3_tensor_ledger(fam("E8"), 2)


def test_psp_residual_is_left_open():
    cert = run_certificate(fam("PSp", 4), 2, OPTS)
    assert cert.step3.verdict == RESIDUAL and "left open" in cert.step3.residual
    assert cert.step4 is None and cert.verdict == PARTIAL


# ---------------------------------------------------------------- step 4


def test_step4_examples():
    rec = step4_psl_gate(5, 2)
    assert (rec.value, rec.divisor, rec.divides, rec.verdict) == (434, 32, False, PASS)
    assert len(rec.citations) == 3
    rec = step4_psl_gate(6, 4)
    assert rec.value == 1392300 and rec.divisor == 4096 and rec.verdict == PASS
    for n in (2, 3, 4):
        with pytest.raises(ValueError):
            step4_psl_gate(n, 5)


@settings(max_examples=100)
@given(st.integers(5, 20), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27]))
def test_step4_never_divides(n, q):
    assert step4_psl_gate(n, q).verdict == PASS


# ---------------------------------------------------------------- certificates


def test_suzuki_order_check():
    check = suzuki_order_check(PrimePower.from_int(32))
    assert check["pairwise_coprime"] and check["value"] == order(fam("2B2"), 32)
    assert check["factors"] == [31, 25, 41]


def test_certificate_json_and_replay(tmp_path):
    cert = run_certificate(fam("PSL", 5), 2, OPTS)
    path = write_certificate(cert, tmp_path)
    assert path.name == "PSL_5_2.cert.json"
    replay = run_certificate(fam("PSL", 5), 2, OPTS)
    assert replay.dumps() == path.read_text()
    stamped = run_certificate(fam("PSL", 5), 2, VerifyOptions())
    data = stamped.to_json()
    assert data.pop("timestamp") == stamped.timestamp
    assert data == cert.to_json()
    assert write_certificate(run_certificate(fam("2B2"), 8, OPTS), tmp_path).name == "2B2__8.cert.json"


def _walk(x):
    if isinstance(x, dict):
        for v in x.values():
            yield from _walk(v)
    elif isinstance(x, list):
        for v in x:
            yield from _walk(v)
    else:
        yield x


@pytest.mark.parametrize("kind,n,q", [("E8", None, 3), ("2B2", None, 8), ("PSL", 6, 4), ("PSp", 3, 3), ("G2", None, 4)])
def test_certificates_hold_no_floats(kind, n, q):
    data = json.loads(run_certificate(fam(kind, n), q, OPTS).dumps())
    assert not any(isinstance(v, float) for v in _walk(data))


def test_symbolic_attachment():
    cert = run_certificate(fam("E8"), 3, VerifyOptions(symbolic=True, timestamp=False))
    assert cert.symbolic and all(p["verdict"] == "proven" for p in cert.symbolic)
    assert cert.verdict == PASS


def test_inadmissible_instance_is_rejected():
    with pytest.raises(InadmissibleError):
        run_certificate(fam("PSL", 4), 2, OPTS)


def test_no_gate_failures_on_a_small_grid():
    for kind, n in [("E6", None), ("2E6", None), ("E7", None), ("3D4", None), ("PSL", 7), ("PSp", 5)]:
        for q in (2, 3, 4, 5):
            cert = run_certificate(fam(kind, n), q, OPTS)
            assert cert.verdict != GATE_FAIL and not cert.failures(), (kind, n, q)
