import pytest
from hypothesis import given
from hypothesis import strategies as st

from kcrank.moments import (
    dyson_second_moment_check,
    gen_binom,
    mu_symmetrized,
    mu_weighted_direct,
    mu_weighted_gf1,
    mu_weighted_gf2,
    weighted_moments,
)
from kcrank.partitions import pk_table
from kcrank.tables import build, get_table


def test_gen_binom_examples():
    assert gen_binom(5, 2) == 10
    assert gen_binom(-1, 2) == 1
    assert gen_binom(-3, 3) == -10
    assert gen_binom(0, 2) == 0
    assert gen_binom(7, 0) == 1
    with pytest.raises(ValueError):
        gen_binom(3, -1)


@given(st.integers(-200, 200), st.integers(1, 12))
def test_pascal_rule(a, b):
    assert gen_binom(a, b) == gen_binom(a - 1, b) + gen_binom(a - 1, b - 1)


@given(st.integers(-50, 50), st.integers(0, 10))
def test_gen_binom_reflection(a, b):
    assert gen_binom(-a, b) == (-1) ** b * gen_binom(a + b - 1, b)


def test_mu_symmetrized():
    t = build(2, 20)
    pk = pk_table(2, 20)
    assert mu_symmetrized(0, 2, t) == pk
    for j in (1, 3, 5):
        assert mu_symmetrized(j, 2, t) == [0] * 21
    assert mu_symmetrized(2, 2, t)[2] == 5
    with pytest.raises(ValueError):
        mu_symmetrized(2, 3, t)


def test_direct_spot_values():
    t = build(2, 3)
    assert mu_weighted_direct(1, 2, t)[1:] == [-1, 3, -7]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("j", [0, 1, 2, 3, 4])
def test_three_routes_agree(k, j):
    order = 40
    direct = mu_weighted_direct(j, k, get_table(k, order))
    assert list(mu_weighted_gf1(j, k, order)) == direct
    assert list(mu_weighted_gf2(j, k, order)) == direct


def test_weighted_moments_records():
    vals = weighted_moments(1, 2, 3, "gf2")
    assert [v.value for v in vals] == [0, -1, 3, -7]
    assert vals[2].route == "gf2" and vals[2].n == 2
    with pytest.raises(ValueError):
        weighted_moments(1, 2, 3, "nope")


def test_dyson_second_moment():
    for k in (1, 2, 5):
        t = get_table(k, 50)
        for lhs, rhs in dyson_second_moment_check(k, t, pk_table(k, 50)):
            assert lhs == rhs
