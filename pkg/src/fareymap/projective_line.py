"""Farey fractions mod n: the vertices of the quotient map.

A vertex is a pair ``(a, c)`` of residues with ``gcd(a, c, n) == 1``, taken up
to a global sign. The stored representative is the lexicographically smaller
of ``(a, c)`` and ``(-a, -c)``.
"""

import re
from dataclasses import dataclass
from math import gcd

from .errors import InvalidVertex, LevelMismatch, PreconditionViolated
from .modular_arith import check_level, egcd, inverse_mod, prime_factors

__all__ = [
    "FareyFraction",
    "make_fraction",
    "parse_fraction",
    "adjacent",
    "determinant",
    "lift_to_unimodular",
    "unit_shift",
    "enumerate_vertices",
    "canonical_pair",
]


def canonical_pair(a, c, n):
    a, c = a % n, c % n
    neg = ((-a) % n, (-c) % n)
    return min((a, c), neg)


@dataclass(frozen=True, order=True)
class FareyFraction:
    a: int
    c: int
    n: int

    def __post_init__(self):
        if (self.a, self.c) != canonical_pair(self.a, self.c, self.n):
            raise InvalidVertex(f"({self.a}, {self.c}) is not canonical mod {self.n}; use make_fraction")

    @property
    def is_pole(self):
        return self.c == 0

    def __str__(self):
        return f"{self.a}/{self.c}"


def make_fraction(a, c, n):
    """Canonical vertex for the class of ``a/c`` mod ``n``."""
    n = check_level(n)
    a, c = canonical_pair(a, c, n)
    if gcd(gcd(a, c), n) != 1:
        raise InvalidVertex(f"{a}/{c} is not a Farey fraction mod {n}: gcd(a, c, n) != 1")
    return FareyFraction(a, c, n)


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_fraction(text, n):
    """Parse ``"a/c"`` (optional signs) into a canonical vertex."""
    m = _FRACTION_RE.match(text)
    if not m:
        raise InvalidVertex(f"cannot parse fraction {text!r}; expected a/c")
    return make_fraction(int(m.group(1)), int(m.group(2)), n)


def _same_level(u, v):
    if u.n != v.n:
        raise LevelMismatch(f"levels differ: {u.n} vs {v.n}")
    return u.n


def determinant(u, v):
    """``a*d - b*c mod n`` for the stored representatives of ``u = a/c``, ``v = b/d``."""
    n = _same_level(u, v)
    return (u.a * v.c - v.a * u.c) % n


def adjacent(u, v):
    """True iff ``u`` and ``v`` are joined by an edge (determinant is +-1)."""
    delta = determinant(u, v)
    return delta == 1 % u.n or delta == (-1) % u.n


def lift_to_unimodular(u):
    """Return ``(b, d)`` with ``a*d - b*c == 1 (mod n)``.

    Construction: with ``k = gcd(a, c) = s*a + t*c`` and ``alpha = k^-1 mod n``
    (``k`` is prime to ``n``), ``(alpha*s)*a + (alpha*t)*c == 1``, so
    ``d = alpha*s`` and ``b = -alpha*t``.
    """
    n = u.n
    k, s, t = egcd(u.a, u.c)
    alpha = inverse_mod(k, n)
    d = (alpha * s) % n
    b = (-alpha * t) % n
    assert (u.a * d - b * u.c) % n == 1 % n
    return b, d


def unit_shift(a, c, n):
    """Return ``k`` with ``gcd(a + c*k, n) == 1``.

    ``k`` is the product of the primes dividing ``n`` that divide neither ``a``
    nor ``c`` (1 if there are none).
    """
    n = check_level(n)
    if gcd(gcd(a, c), n) != 1:
        raise PreconditionViolated(f"gcd({a}, {c}, {n}) != 1")
    k = 1
    for p in prime_factors(n):
        if a % p and c % p:
            k *= p
    if gcd(a + c * k, n) != 1:
        raise AssertionError(f"unit shift failed for ({a}, {c}, {n})")
    return k


def enumerate_vertices(n):
    """All vertices at level ``n``, sorted by representative."""
    n = check_level(n)
    out = set()
    for a in range(n):
        for c in range(n):
            if gcd(gcd(a, c), n) == 1:
                out.add(FareyFraction(*canonical_pair(a, c, n), n))
    return sorted(out)
