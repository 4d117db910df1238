from math import gcd

import pytest

from fareymap.errors import InvalidVertex, LevelMismatch, PreconditionViolated
from fareymap.modular_arith import vertex_count
from fareymap.projective_line import (
    FareyFraction,
    adjacent,
    enumerate_vertices,
    lift_to_unimodular,
    make_fraction,
    parse_fraction,
    unit_shift,
)

from conftest import brute_vertices


def test_make_fraction_examples():
    assert make_fraction(6, 0, 7) == make_fraction(1, 0, 7) == FareyFraction(1, 0, 7)
    for n in range(2, 10):
        assert make_fraction(1, 0, n) == FareyFraction(1, 0, n)
    with pytest.raises(InvalidVertex):
        make_fraction(2, 2, 4)
    with pytest.raises(InvalidVertex):
        make_fraction(0, 0, 5)


def test_non_canonical_construction_rejected():
    with pytest.raises(InvalidVertex):
        FareyFraction(6, 0, 7)


def test_parse_fraction():
    assert parse_fraction("3/5", 7) == make_fraction(3, 5, 7)
    assert parse_fraction(" -1/0 ", 7) == make_fraction(1, 0, 7)
    assert parse_fraction("4/2", 7) == make_fraction(3, 5, 7)
    assert parse_fraction("-3/-5", 7) == make_fraction(3, 5, 7)
    with pytest.raises(InvalidVertex):
        parse_fraction("3", 7)


@pytest.mark.parametrize("n", range(2, 12))
def test_adjacent_examples(n):
    inf = make_fraction(1, 0, n)
    for k in range(n):
        assert adjacent(inf, make_fraction(k, 1, n))
    for a in range(n):
        if gcd(a, n) == 1 and a % n not in (1 % n, (-1) % n):
            assert not adjacent(inf, make_fraction(a, 0, n))


def test_adjacent_listed_star_member():
    assert adjacent(make_fraction(3, 5, 7), make_fraction(1, 2, 7))


def test_level_mismatch():
    with pytest.raises(LevelMismatch):
        adjacent(make_fraction(1, 0, 5), make_fraction(1, 0, 7))


def _det(v, b, d):
    return (v.a * d - b * v.c) % v.n


def test_lift_examples():
    assert lift_to_unimodular(make_fraction(1, 0, 9)) == (0, 1)
    # any lift with determinant 1 is accepted
    v = make_fraction(3, 5, 7)
    assert _det(v, 0, 5) == 1 and _det(v, *lift_to_unimodular(v)) == 1
    w = make_fraction(1, 2, 8)
    assert _det(w, *lift_to_unimodular(w)) == 1
    # the matrix [[1, 2], [2, 3]] has determinant -1, so (2, 3) is not a valid lift
    assert _det(w, 2, 3) == 8 - 1


@pytest.mark.parametrize("n", range(2, 40))
def test_lift_always_unimodular(n):
    for v in enumerate_vertices(n):
        b, d = lift_to_unimodular(v)
        assert _det(v, b, d) == 1 % n


def test_unit_shift_examples():
    for n in range(2, 20):
        assert unit_shift(1, 0, n) == 1
    assert unit_shift(2, 3, 6) == 1 and gcd(2 + 3, 6) == 1
    assert unit_shift(3, 2, 6) == 1 and gcd(3 + 2, 6) == 1
    # 5 divides neither 2 nor 3, so it is included
    assert unit_shift(2, 3, 30) == 5 and gcd(2 + 3 * 5, 30) == 1
    with pytest.raises(PreconditionViolated):
        unit_shift(2, 4, 6)


@pytest.mark.parametrize("n", range(2, 31))
def test_unit_shift_all_pairs(n):
    for a in range(n):
        for c in range(n):
            if gcd(gcd(a, c), n) == 1:
                k = unit_shift(a, c, n)
                assert gcd(a + c * k, n) == 1


def test_enumerate_small():
    assert set(enumerate_vertices(2)) == {make_fraction(1, 0, 2), make_fraction(0, 1, 2), make_fraction(1, 1, 2)}
    assert len(enumerate_vertices(5)) == 12
    assert len(enumerate_vertices(8)) == 24


@pytest.mark.parametrize("n", range(2, 41))
def test_enumerate_matches_brute_force(n):
    vs = enumerate_vertices(n)
    assert len(vs) == vertex_count(n)
    classes = {frozenset({(v.a, v.c), ((-v.a) % n, (-v.c) % n)}) for v in vs}
    assert classes == brute_vertices(n)


@pytest.mark.parametrize("n", range(2, 25))
def test_valency_and_irreflexive(n):
    vs = enumerate_vertices(n)
    for u in vs:
        assert not adjacent(u, u)
        assert sum(adjacent(u, v) for v in vs) == n
