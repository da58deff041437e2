import math
import random

import pytest
from hypothesis import given, strategies as st

from hrlab.factor_oracle import FactorMap, big_omega, factor_small, is_prime, is_squarefree, omega


def test_factor_one_is_empty():
    assert factor_small(1) == FactorMap(())
    assert omega(1) == big_omega(1) == 0


def test_factor_twelve():
    assert factor_small(12).as_dict() == {2: 2, 3: 1}


def test_factor_primorial_eight():
    first_eight = [2, 3, 5, 7, 11, 13, 17, 19]
    assert 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 == 9699690
    assert factor_small(9699690).as_dict() == {p: 1 for p in first_eight}


@pytest.mark.parametrize("n, w, W", [(12, 2, 3), (30, 3, 3)])
def test_omega_examples(n, w, W):
    assert omega(n) == w
    assert big_omega(n) == W


@pytest.mark.parametrize("k", range(1, 21))
def test_powers_of_two(k):
    assert omega(2**k) == 1
    assert big_omega(2**k) == k


@pytest.mark.parametrize("n, expected", [(10, True), (12, False), (1, True)])
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


@pytest.mark.parametrize("fn", [factor_small, omega, big_omega, is_squarefree])
def test_rejects_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_rejects_above_cap():
    with pytest.raises(ValueError):
        factor_small(2**63)


def test_large_semiprime():
    p, q = 1_000_003, 999_983
    assert factor_small(p * q).as_dict() == {q: 1, p: 1}


def test_invariants_up_to_1e6(oracle_table):
    for n, fm in enumerate(oracle_table[: 10**6], start=1):
        w = len(fm)
        W = sum(e for _, e in fm)
        assert fm.value() == n
        assert w <= W
        assert (w == W) == all(e == 1 for _, e in fm)
        if n >= 2:
            assert W <= math.log(n) / math.log(2) + 1e-9


def test_structure_up_to_1e6_sampled(oracle_table):
    rng = random.Random(7)
    for n in rng.sample(range(1, 10**6 + 1), 2000):
        oracle_table[n - 1].validate()


def test_omega_at_most_20_below_2_pow_20(oracle_table):
    assert max(len(fm) for fm in oracle_table) <= 20


def test_additivity_random_pairs():
    rng = random.Random(11)
    for _ in range(2000):
        m, n = rng.randint(1, 10**4), rng.randint(1, 10**4)
        assert big_omega(m * n) == big_omega(m) + big_omega(n)
        if math.gcd(m, n) == 1:
            assert omega(m * n) == omega(m) + omega(n)


@given(st.integers(min_value=1, max_value=10**12))
def test_reconstruction_property(n):
    fm = factor_small(n)
    fm.validate()
    assert fm.value() == n
    assert is_squarefree(n) == (omega(n) == big_omega(n))


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
