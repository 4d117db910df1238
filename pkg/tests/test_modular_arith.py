import itertools
from math import gcd

import pytest

from fareymap.errors import InvalidLevel
from fareymap.modular_arith import (
    egcd,
    euler_phi,
    fibonacci_period,
    fibonacci_semiperiod,
    genus,
    inverse_mod,
    is_prime,
    mu,
    prime_factors,
    statistics,
    vertex_count,
)

from conftest import brute_vertices


def brute_darts(n):
    reps = [min(c) for c in brute_vertices(n)]
    return sum(1 for (a, c), (b, d) in itertools.product(reps, repeat=2) if (a * d - b * c) % n in {1 % n, (-1) % n})


def brute_semiperiod(n):
    f = [1 % n, 0]
    while True:
        f.append((f[-1] + f[-2]) % n)
        k = len(f) - 2
        if (f[k], f[k + 1]) in {(1 % n, 0), ((-1) % n, 0)}:
            return k


@pytest.mark.parametrize("n, expected", [(2, 6), (8, 192), (7, 168)])
def test_mu_examples(n, expected):
    assert mu(n) == expected


@pytest.mark.parametrize("n, expected", [(2, 3), (8, 24), (6, 12)])
def test_vertex_count_examples(n, expected):
    assert vertex_count(n) == expected


@pytest.mark.parametrize("n, expected", [(7, 3), (8, 5), (5, 0), (6, 1), (2, 0)])
def test_genus_examples(n, expected):
    assert genus(n) == expected


@pytest.mark.parametrize(
    "n, expected",
    [
        (3, (12, 6, 4, 4, 3, 0)),
        (4, (24, 12, 8, 6, 4, 0)),
        (8, (192, 96, 64, 24, 8, 5)),
    ],
)
def test_statistics_examples(n, expected):
    assert statistics(n).as_tuple() == expected


@pytest.mark.parametrize("n, expected", [(8, 4), (7, 6), (12, 4), (1, 1)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize("n, expected", [(7, 8), (8, 12), (2, 3)])
def test_fibonacci_semiperiod_examples(n, expected):
    assert fibonacci_semiperiod(n) == expected


@pytest.mark.parametrize("n", range(2, 61))
def test_semiperiod_matches_brute_force(n):
    assert fibonacci_semiperiod(n) == brute_semiperiod(n)
    assert fibonacci_period(n) // fibonacci_semiperiod(n) in (1, 2)
    assert fibonacci_period(n) % fibonacci_semiperiod(n) == 0


@pytest.mark.parametrize("n", range(3, 101))
def test_mu_is_n_times_vertices(n):
    assert mu(n) == n * vertex_count(n)
    assert mu(n) % 6 == 0


@pytest.mark.parametrize("n", range(2, 13))
def test_mu_counts_darts_by_brute_force(n):
    assert mu(n) == brute_darts(n)
    assert vertex_count(n) == len(brute_vertices(n))


@pytest.mark.parametrize("n", range(2, 200))
def test_euler_identity(n):
    s = statistics(n)
    assert s.vertices - s.edges + s.faces == 2 - 2 * s.genus
    assert s.genus >= 0


@pytest.mark.parametrize("n", range(1, 80))
def test_phi_and_factors_brute(n):
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
    assert prime_factors(n) == [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    assert is_prime(n) == (n > 1 and all(n % q for q in range(2, n)))


def test_level_one_rejected():
    for f in (mu, vertex_count, genus, statistics, fibonacci_semiperiod):
        with pytest.raises(InvalidLevel):
            f(1)
    with pytest.raises(InvalidLevel):
        mu(True)


def test_egcd_and_inverse():
    for a, b in itertools.product(range(-20, 21), range(1, 21)):
        g, u, v = egcd(a, b)
        assert g == gcd(a, b) and u * a + v * b == g
    assert inverse_mod(2, 7) == 4
    assert inverse_mod(3, 8) == 3
    with pytest.raises(ValueError):
        inverse_mod(2, 8)
