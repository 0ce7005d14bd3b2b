import json
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codegree.chartab import (
    CapExceeded,
    CharacterTable,
    GroupFormatError,
    TableError,
    character_table,
    codegrees,
    conjugacy_classes,
    faithful_degrees,
    parse_group,
    step1_witness_check,
)
from codegree.chartab.burnside import burnside_table
from codegree.chartab.classes import enumerate_group
from codegree.chartab.dixon import verify_table
from codegree.chartab.groups import (
    alternating,
    corpus_groups,
    cyclic,
    psl2,
    quotient_by_kernel,
    sl2,
    symmetric,
)
from codegree.chartab.perms import cycles, fmt_perm, inverse, is_identity, mul, parse_perm, perm_order

M11 = """# Mathieu group of degree 11
degree 11
gen (1,2,3,4,5,6,7,8,9,10,11)
gen (3,7,11,8)(4,10,5,6)
"""

perm_lists = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(n))))


# ---------------------------------------------------------------- permutations


def test_mul_applies_left_factor_first():
    x, y = np.array([1, 2, 0]), np.array([0, 2, 1])
    assert list(mul(x, y)) == [2, 1, 0]


@given(perm_lists)
def test_inverse_and_cycle_round_trip(p):
    x = np.array(p)
    assert is_identity(mul(x, inverse(x)))
    assert list(parse_perm(fmt_perm(x), len(p))) == list(p)
    assert perm_order(x) == np.lcm.reduce([len(c) for c in cycles(x)] or [1])


def test_parse_group_and_errors():
    g = parse_group(M11, "M11")
    assert g.degree == 11 and len(g.gens) == 2
    assert parse_group(g.to_text()).content_hash() == g.content_hash()
    for bad in ["gen (1,2)\n", "degree 3\ngen (1,4)\n", "degree 3\ngen (1,1)\n",
                "degree 0\n", "degree 3\nfoo (1,2)\n", "degree x\n", ""]:
        with pytest.raises(GroupFormatError):
            parse_group(bad)


def test_group_orders():
    assert symmetric(10).order() == 3628800
    assert parse_group(M11).order() == 7920
    assert psl2(7).order() == 168 and sl2(5).order() == 120


# ---------------------------------------------------------------- classes


def test_classes_of_small_groups():
    cc = conjugacy_classes(alternating(5))
    assert sorted(cc.sizes) == [1, 12, 12, 15, 20]
    assert sorted(cc.orders) == [1, 2, 3, 5, 5]
    assert conjugacy_classes(psl2(7)).count == 6
    triv = conjugacy_classes(cyclic(1))
    assert triv.count == 1 and triv.group_order == 1


def test_class_sizes_sum_to_order():
    for g in corpus_groups():
        cc = conjugacy_classes(g)
        assert sum(cc.sizes) == g.order()
        assert all(g.order() % s == 0 for s in cc.sizes)


# ---------------------------------------------------------------- tables


def test_known_tables():
    a5 = character_table(alternating(5))
    assert sorted(a5.degrees) == [1, 3, 3, 4, 5]
    assert codegrees(a5).values == [1, 12, 15, 20]
    assert sorted(character_table(cyclic(2)).degrees) == [1, 1]
    s = character_table(sl2(5))
    assert sorted(s.degrees) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert faithful_degrees(s) == [2, 2, 4, 6]
    assert codegrees(s).values == [1, 12, 15, 20, 30, 60]


def test_codegrees_divide_group_order():
    for g in corpus_groups():
        t = character_table(g)
        for rec in codegrees(t).records:
            assert rec.codegree * rec.degree * rec.kernel_order == t.group_order


@pytest.mark.parametrize("group", corpus_groups(), ids=lambda g: g.name)
def test_exact_table_agrees_with_float_oracle(group):
    exact = character_table(group)
    oracle = burnside_table([list(x) for x in group.gens])
    assert sorted(exact.degrees) == sorted(oracle.degrees)
    assert sorted(exact.sizes) == sorted(oracle.sizes)
    assert sum(d * d for d in exact.degrees) == exact.group_order
    assert Counter(zip(exact.degrees, (exact.kernel_order(c) for c in range(len(exact.degrees))))) == Counter(
        zip(oracle.degrees, oracle.kernel_orders)
    )
    # orthogonality on the complex values
    X = exact.complex_table()
    w = np.array(exact.sizes)
    gram = (X * w) @ X.conj().T / exact.group_order
    assert np.allclose(gram, np.eye(len(w)), atol=1e-9)


@pytest.mark.parametrize("group", [sl2(5), sl2(3), psl2(7), symmetric(4)], ids=lambda g: g.name)
def test_quotient_codegrees_are_a_subset(group):
    """cod(G/N) is contained in cod(G) for a normal subgroup N."""
    cc = conjugacy_classes(group)
    t = character_table(group)
    cod = set(codegrees(t).values)
    for chi in range(len(t.degrees)):
        kernel_classes = t.kernel_classes(chi)
        kernel = [i for i in range(cc.group_order) if int(cc.class_of[i]) in kernel_classes]
        quotient = quotient_by_kernel(cc.enum, kernel)
        assert quotient.order() * len(kernel) == group.order()
        assert set(codegrees(character_table(quotient)).values) <= cod


def test_table_is_deterministic():
    a = character_table(psl2(11)).to_json()
    b = character_table(psl2(11)).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_cache_round_trip(tmp_path):
    g = psl2(8)
    first = character_table(g, cache_dir=tmp_path)
    files = list(tmp_path.glob("table-*.json"))
    assert len(files) == 1
    second = character_table(g, cache_dir=tmp_path)
    assert second.to_json() == first.to_json()
    assert CharacterTable.from_json(json.loads(files[0].read_text())).degrees == first.degrees


def test_corrupted_cache_is_rejected(tmp_path):
    g = alternating(5)
    character_table(g, cache_dir=tmp_path)
    path = next(tmp_path.glob("table-*.json"))
    data = json.loads(path.read_text())
    data["sizes"][1], data["sizes"][2] = data["sizes"][2], data["sizes"][1]
    path.write_text(json.dumps(data))
    with pytest.raises(TableError):
        character_table(g, cache_dir=tmp_path)


def test_verify_table_rejects_wrong_degree():
    t = character_table(symmetric(3))
    data = t.to_json()
    bad = CharacterTable.from_json(json.loads(json.dumps(data)))
    bad.mults[-1] = bad.mults[0]
    with pytest.raises(TableError):
        verify_table(bad)


def test_cap_refusal():
    with pytest.raises(CapExceeded):
        character_table(symmetric(10))
    with pytest.raises(CapExceeded):
        character_table(symmetric(6), order_cap=100)
    with pytest.raises(CapExceeded):
        conjugacy_classes(symmetric(6), class_cap=5)
    with pytest.raises(CapExceeded):
        enumerate_group(parse_group(M11), order_cap=1000)


# ---------------------------------------------------------------- witness check


def test_witness_for_sl2_5():
    rep = step1_witness_check(sl2(5), 2)
    assert rep.verdict == "REFUTED" and rep.witness == 4
    assert rep.quotient_degrees == [1, 3, 4, 5]  # cd(A5) as a set


def test_sl2_3_is_inconclusive():
    rep = step1_witness_check(sl2(3), 2)
    assert rep.verdict == "INCONCLUSIVE" and rep.witness is None
    assert [r["degree"] for r in rep.to_json()["faithful"]] == [2, 2, 2]


def test_witness_check_checks_center():
    with pytest.raises(ValueError):
        step1_witness_check(alternating(5), 2)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(corpus_groups()))
def test_faithful_degrees_are_a_submultiset(group):
    t = character_table(group)
    fd = Counter(faithful_degrees(t))
    assert not fd - Counter(t.degrees)
