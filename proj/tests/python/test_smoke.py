import math

import pytest

import psilcm


@pytest.fixture(scope="module")
def table():
    return psilcm.PrimeTable(100_000)


def test_prime_table_basics(table):
    assert table.limit == 100_000
    assert table.prime_count(100) == 25
    assert table.von_mangoldt(8) == pytest.approx(math.log(2))
    assert table.chebyshev_psi(10) == pytest.approx(math.log(2520))
    assert table.factorize(12) == [(2, 2), (3, 1)]
    assert table.euler_phi(12) == 4


def test_psi_of_set(table):
    A = psilcm.IntegerSet(10, [2, 5, 10])
    assert A.n == 10
    assert A.elements == [2, 5, 10]
    assert psilcm.psi_of_set(A, table) == pytest.approx(math.log(10))
    assert psilcm.psi_indicator(A, table) == pytest.approx(math.log(10))


def test_exceptions(table):
    with pytest.raises(IndexError):
        table.von_mangoldt(10**7)
    with pytest.raises(RuntimeError):
        psilcm.PrimeTable(10**9)


def test_samplers_deterministic():
    a = psilcm.sample_bernoulli(100, 0.3, seed=7, trial_index=0)
    b = psilcm.sample_bernoulli(100, 0.3, seed=7, trial_index=0)
    assert a.elements == b.elements
    u = psilcm.sample_uniform_k(100, 5, seed=7, trial_index=3)
    assert len(u.elements) == 5


def test_montecarlo(table):
    s = psilcm.montecarlo_psi_bernoulli(100, 0.5, 200, 1, table)
    assert s.trials == 200
    assert s.mean_psi > 0
    assert not s.degenerate
    assert len(s.quantiles) == 3
    s2 = psilcm.montecarlo_psi_uniform_k(100, 10, 200, 1, table)
    assert s2.mean_size == pytest.approx(10.0)


def test_exact_moments(table):
    assert psilcm.expectation_bernoulli_direct(2, 0.5, table) == pytest.approx(
        0.5 * math.log(2)
    )
    direct = psilcm.expectation_bernoulli_direct(1000, 0.3, table)
    grouped = psilcm.expectation_bernoulli_grouped(1000, 0.3, table)
    assert direct == pytest.approx(grouped, rel=1e-9)
    assert psilcm.variance_bernoulli_exact(50, 0.5, table) >= 0
    assert psilcm.expectation_uniform_k(4, 2, table) == pytest.approx(
        math.log(6912) / 6
    )
    assert psilcm.second_moment_uniform_k(4, 2, table) == pytest.approx(
        2.4860315233, rel=1e-9
    )
    assert psilcm.pair_indicator_expectation(2, 3, 6, 0.5) == pytest.approx(0.6875)


def test_oracle_agreement(table):
    e, v = psilcm.enumerate_bernoulli_moments(8, 0.4, table)
    assert psilcm.expectation_bernoulli_direct(8, 0.4, table) == pytest.approx(e)
    assert psilcm.variance_bernoulli_exact(8, 0.4, table) == pytest.approx(v)
    m1, m2 = psilcm.enumerate_uniform_k_moments(6, 3, table)
    assert psilcm.expectation_uniform_k(6, 3, table) == pytest.approx(m1)


def test_tail_bounds():
    assert psilcm.chernoff_bound(100, 20.0) == pytest.approx(2 * math.exp(-1))
    assert psilcm.binomial_tail_exact(4, 0.5, 2) == pytest.approx(0.125)


def test_extremal_sets(table):
    assert psilcm.smooth_count(100, 5, table) == 34
    A, y, t_eff = psilcm.build_smooth_set(100, 34, table)
    assert y == 5
    assert len(A.elements) == 34
    tail = psilcm.build_prime_tail_set(10, 2, table)
    assert tail.elements == [5, 7]
    assert psilcm.psi_smooth_closed_form(100, 5, table) == pytest.approx(
        math.log(129_600)
    )
    assert psilcm.cep_prediction(10_000, 100) == pytest.approx(2500)


def test_poly(table):
    f = psilcm.IntPolynomial([1, 0, 1])
    assert f.degree == 2
    A = psilcm.poly_set(f, 10, table)
    assert A.elements == [1, 2, 5, 10]
    assert psilcm.psi_poly(f, 10, table) == pytest.approx(math.log(10))
    g = psilcm.IntPolynomial([1, 2])
    assert psilcm.predict_linear(g, 1000, table) == pytest.approx(1000)
    assert psilcm.predict_reducible_x2m1(10**6) == pytest.approx(1000)
    n = 10**6
    assert psilcm.predict_conjecture(f, n) == pytest.approx(
        0.5 * math.sqrt(n) * math.log(n)
    )
    value, last_delta = psilcm.estimate_B_constant(3)
    assert value == pytest.approx(-0.2200518, abs=1e-6)
    assert psilcm.legendre_minus_one(5) == 1
    assert psilcm.legendre_minus_one(7) == -1


def test_asymptotics(table):
    assert psilcm.bernoulli_main_term(100, 0.5) == pytest.approx(
        100 * 0.5 * math.log(2) / 0.5
    )
    assert abs(psilcm.epsilon_error(100_000, table)) < 0.01
    assert psilcm.predict_mean(10_000, 0.5, 1.0) == pytest.approx(
        0.5 * 100 * math.log(10_000)
    )
    assert psilcm.error_envelope(1000, 0.5, 1.0) == pytest.approx(
        math.exp(-math.sqrt(math.log(500)))
    )
