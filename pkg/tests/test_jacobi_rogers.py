import math

import pytest

from mahonian import jacobi_rogers as jr
from mahonian.polyring import bq_factorial, var

b = var("b")


def test_presets():
    assert jr.preset("euler").gamma(1) == 3
    assert jr.preset("beta_q").gamma(0) == b
    assert jr.preset("digraph").beta(1) == b * var("u1") * var("u2")
    with pytest.raises(ValueError):
        jr.preset("nope")


def test_motzkin_paths_and_oracle():
    assert sorted(jr.motzkin_paths(2, 0)) == ["LL", "UD"]
    P = jr.generic_params(3)
    g0, B1 = var("g0"), var("B1")
    assert jr.motzkin_mu(P, 2, 0) == g0 ** 2 + B1
    assert jr.motzkin_mu(P, 3, 3) == 1
    assert jr.motzkin_mu(jr.preset("euler"), 2, 1) == 4


def test_cf_taylor_examples():
    P = jr.generic_params(3)
    g0, B1 = var("g0"), var("B1")
    assert list(jr.cf_taylor(P, 2).coeffs) == [1, g0, g0 ** 2 + B1]
    assert [c.constant() for c in jr.cf_taylor(jr.preset("euler"), 4).coeffs] == [1, 1, 2, 6, 24]
    assert list(jr.cf_taylor(jr.preset("beta_q"), 2).coeffs) == [bq_factorial(n) for n in range(3)]


@pytest.mark.parametrize("name", ["euler", "beta_q", "digraph", "alternating"])
def test_three_oracles_agree(name):
    P = jr.preset(name)
    N = 6
    table = jr.mu_table(P, N)
    series = jr.cf_taylor(P, N)
    deeper = jr.cf_taylor(P, N, depth=N + 3)
    for n in range(N + 1):
        assert series[n] == table[n, 0] == deeper[n]
        for k in range(n + 1):
            assert jr.motzkin_mu(P, n, k) == table[n, k]


def test_generic_oracles():
    P = jr.generic_params(6)
    table = jr.mu_table(P, 5)
    series = jr.cf_taylor(P, 5)
    for n in range(6):
        assert series[n] == table[n, 0] == jr.motzkin_mu(P, n, 0)


def test_euler_table():
    table = jr.mu_table(jr.preset("euler"), 7)
    for n in range(8):
        for k in range(n + 1):
            assert table[n, k] == math.comb(n, k) * math.factorial(n) // math.factorial(k)


def test_unitriangular_inverse():
    g0 = var("g0")
    assert jr.unitriangular_inverse([[1, 0], [g0, 1]]) == [[1, 0], [-g0, 1]]
    assert jr.unitriangular_inverse([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    inv = jr.unitriangular_inverse(jr.mu_table(jr.preset("euler"), 3).matrix())
    for n in range(4):
        for k in range(n + 1):
            sign = (-1) ** (n - k)
            assert inv[n][k] == sign * math.comb(n, k) * math.factorial(n) // math.factorial(k)
    with pytest.raises(ValueError):
        jr.unitriangular_inverse([[2, 0], [0, 1]])
    with pytest.raises(ValueError):
        jr.unitriangular_inverse([[1, 1], [0, 1]])


def test_duality_and_ortho():
    assert jr.duality_check(jr.preset("euler"), 4).ok
    assert jr.duality_check(jr.generic_params(3), 2).ok
    assert jr.duality_check(jr.preset("euler"), 0).ok
    ortho = jr.ortho_seq(jr.generic_params(2), 1)
    x, g0 = var("x"), var("g0")
    assert ortho.as_poly(1) == x - g0


def test_little_q_laguerre_and_egf():
    assert jr.little_q_laguerre_check(5).ok
    assert jr.egf_consistency(5).ok


def test_mu_table_bounds():
    table = jr.mu_table(jr.preset("euler"), 2)
    assert table[1, 3] == 0
    with pytest.raises(IndexError):
        table[3, 0]
    with pytest.raises(ValueError):
        jr.mu_table(jr.preset("euler"), -1)
