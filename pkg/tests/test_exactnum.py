import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from codegree.exactnum import (
    Factorization,
    PrimePower,
    cyclotomic_value,
    factor_rpart,
    factorize,
    is_prime,
    mult_order,
    primitive_prime_divisors,
    qde_rpart,
    rpart,
    valuation,
    zsigmondy,
)

primes = st.sampled_from([p for p in range(2, 200) if sympy.isprime(p)])


def brute_rpart(n, r):
    out = 1
    while n % r == 0:
        n //= r
        out *= r
    return out


# ---------------------------------------------------------------- rpart


def test_rpart_examples():
    assert rpart(80, 2) == 16
    assert rpart(7, 2) == 1
    assert rpart(4245696, 3) == 729


def test_rpart_rejects_bad_input():
    with pytest.raises(ValueError):
        rpart(0, 2)
    with pytest.raises(ValueError):
        rpart(12, 4)


@given(st.integers(1, 10**30), primes)
def test_rpart_matches_division(n, r):
    s = rpart(n, r)
    assert s == brute_rpart(n, r)
    assert n % s == 0 and (n // s) % r
    assert r ** valuation(n, r) == s


# ---------------------------------------------------------------- qde_rpart


def test_qde_rpart_examples():
    assert qde_rpart(3, 4, 1, 2) == 16
    assert qde_rpart(3, 5, 1, 2) == 2
    # oracle values: rpart(4^2 + 1, 5) = 1 and rpart(9^3 + 1, 5) = 5
    assert qde_rpart(4, 2, -1, 5) == rpart(17, 5) == 1
    assert qde_rpart(9, 3, -1, 5) == rpart(730, 5) == 5


def test_qde_rpart_refuses_without_hypothesis():
    with pytest.raises(ValueError, match="does not divide"):
        qde_rpart(4, 2, 1, 5)


@st.composite
def lifting_inputs(draw):
    r = draw(primes)
    eps = draw(st.sampled_from([1, -1]))
    k = draw(st.integers(0, 60))
    q = eps + r * k
    if q < 2:
        q += r * (2 + (2 - q) // r)
    d = draw(st.integers(1, 12))
    return q, d, eps, r


@settings(max_examples=500)
@given(lifting_inputs())
def test_qde_rpart_matches_expansion(args):
    q, d, eps, r = args
    assert qde_rpart(q, d, eps, r) == brute_rpart(q**d - eps, r)


@settings(max_examples=300)
@given(st.integers(2, 60), st.integers(1, 30), st.sampled_from([1, -1]), primes)
def test_factor_rpart_matches_expansion(q, d, sign, r):
    if q % r == 0:
        return
    assert factor_rpart(q, d, sign, r) == brute_rpart(q**d - sign, r)


# ---------------------------------------------------------------- orders and Zsigmondy


def test_mult_order_examples():
    assert mult_order(3, 13) == 3
    assert mult_order(2, 3) == 2
    assert mult_order(7, 3) == 1
    with pytest.raises(ValueError):
        mult_order(9, 3)


@given(st.integers(2, 10**6), primes)
def test_mult_order_divides_r_minus_1(q, r):
    if q % r == 0:
        return
    j = mult_order(q, r)
    assert (r - 1) % j == 0
    assert pow(q, j, r) == 1
    assert all(pow(q, i, r) != 1 for i in range(1, j))


def test_zsigmondy_examples():
    assert zsigmondy(2, 6) is None
    assert zsigmondy(7, 2) is None
    assert zsigmondy(2, 10) == 11


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13])
@pytest.mark.parametrize("n", range(2, 13))
def test_zsigmondy_is_smallest_primitive_divisor(q, n):
    r = zsigmondy(q, n)
    value = q**n - 1
    prim = [p for p in sympy.primefactors(value) if all((q**i - 1) % p for i in range(1, n))]
    if r is None:
        assert not prim
    else:
        assert r == min(prim) and r >= n + 1
        assert list(primitive_prime_divisors(q, n))[0] == r


# ---------------------------------------------------------------- factorization


def test_factorize_examples():
    assert factorize(29120) == {2: 6, 5: 1, 7: 1, 13: 1}
    assert factorize(1) == {}
    n = 2**15 * 3**4 * 5 * 7**2 * 31
    assert factorize(n) == {2: 15, 3: 4, 5: 1, 7: 2, 31: 1}


def test_factorize_small_range_reconstructs():
    for n in range(1, 20000):
        fac = factorize(n)
        assert fac.value() == n
        assert all(sympy.isprime(p) for p in fac)
        assert list(fac) == sorted(fac)


@settings(max_examples=500)
@given(st.integers(1, 10**6))
def test_factorize_up_to_a_million(n):
    fac = factorize(n)
    assert fac.value() == n and all(is_prime(p) for p in fac)


@settings(max_examples=60, deadline=None)
@given(st.integers(10**15, 10**26))
def test_factorize_large_agrees_with_sympy(n):
    assert dict(factorize(n)) == sympy.factorint(n)


def test_factorize_semiprime_with_large_factors():
    p, q = 998244353, 1000000007
    assert factorize(p * q * 2**5) == {2: 5, p: 1, q: 1}


@given(st.integers(0, 10**7))
def test_is_prime_agrees_with_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_strong_pseudoprimes():
    # strong pseudoprime to the first 12 prime bases
    assert not is_prime(318665857834031151167461)
    assert is_prime(2**89 - 1)
    assert not is_prime(2**83 - 1)


def test_prime_power():
    pp = PrimePower.from_int(243)
    assert (pp.p, pp.f, pp.q) == (3, 5, 243)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            PrimePower.from_int(bad)
    with pytest.raises(ValueError):
        PrimePower(4, 1)


def test_factorization_merge_and_format():
    a = Factorization({2: 3, 3: 1})
    assert a.merge({2: 1}).value() == 48
    assert a.merge({2: 3}, sign=-1) == {3: 1}
    with pytest.raises(ValueError):
        a.merge({5: 1}, sign=-1)
    assert a.format() == "2^3 · 3"


# ---------------------------------------------------------------- cyclotomic values


def test_cyclotomic_examples():
    assert cyclotomic_value(1, 7) == 6
    assert cyclotomic_value(6, 2) == 3
    assert cyclotomic_value(12, 3) == 73


def test_cyclotomic_product_identity():
    for q in range(2, 17):
        for n in range(1, 61):
            prod = math.prod(cyclotomic_value(d, q) for d in sympy.divisors(n))
            assert prod == q**n - 1


@given(st.integers(1, 40), st.integers(2, 50))
def test_cyclotomic_matches_sympy(m, q):
    assert cyclotomic_value(m, q) == sympy.cyclotomic_poly(m, q)
