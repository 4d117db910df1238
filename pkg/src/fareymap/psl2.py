"""The finite group PSL(2, Z_n) and its action on Farey fractions mod n."""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidVertex, LevelMismatch, TooLarge
from .modular_arith import check_level, mu
from .projective_line import FareyFraction, canonical_pair

__all__ = [
    "DEFAULT_CAP",
    "Psl2Element",
    "element",
    "identity",
    "multiply",
    "inverse",
    "power",
    "order",
    "act_on_vertex",
    "enumerate_group",
    "stabilizer_of_infinity",
    "chi",
    "triangle_generators",
    "generated_subgroup",
    "verify_triangle_relations",
]

DEFAULT_CAP = 10 ** 7


def _canonical(a, b, c, d, n):
    t = (a % n, b % n, c % n, d % n)
    neg = tuple((-x) % n for x in t)
    return min(t, neg)


@dataclass(frozen=True, order=True)
class Psl2Element:
    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        n = self.n
        if (self.a * self.d - self.b * self.c) % n != 1 % n:
            raise ValueError(f"determinant of {self.entries} is not 1 mod {n}")
        if self.entries != _canonical(*self.entries, n):
            raise ValueError(f"{self.entries} is not canonical mod {n}; use element()")

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        return multiply(self, other)

    def __call__(self, v):
        return act_on_vertex(self, v)

    def __str__(self):
        return "[[{} {}] [{} {}]]".format(*self.entries)


def element(a, b, c, d, n):
    """Build the class of ``[[a, b], [c, d]]``; the determinant must be 1 mod n."""
    n = check_level(n)
    return Psl2Element(*_canonical(a, b, c, d, n), n)


def identity(n):
    return element(1, 0, 0, 1, n)


def _check(s, t):
    if s.n != t.n:
        raise LevelMismatch(f"levels differ: {s.n} vs {t.n}")
    return s.n


def multiply(s, t):
    n = _check(s, t)
    return element(
        s.a * t.a + s.b * t.c,
        s.a * t.b + s.b * t.d,
        s.c * t.a + s.d * t.c,
        s.c * t.b + s.d * t.d,
        n,
    )


def inverse(t):
    return element(t.d, -t.b, -t.c, t.a, t.n)


def power(t, k):
    if k < 0:
        return power(inverse(t), -k)
    result = identity(t.n)
    base = t
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def order(t):
    one = identity(t.n)
    k, x = 1, t
    while x != one:
        x = multiply(x, t)
        k += 1
    return k


def act_on_vertex(t, v):
    """Moebius action ``x/y -> (a x + b y)/(c x + d y)``."""
    if not isinstance(v, FareyFraction):
        raise TypeError(f"expected FareyFraction, got {type(v).__name__}")
    if t.n != v.n:
        raise LevelMismatch(f"levels differ: {t.n} vs {v.n}")
    n = t.n
    x, y = v.a, v.c
    a, c = canonical_pair(t.a * x + t.b * y, t.c * x + t.d * y, n)
    # determinant-1 action keeps gcd(a, c, n) == 1; skip revalidation
    return FareyFraction(a, c, n)


def _check_cap(n, cap):
    size = mu(n)
    if cap is not None and size > cap:
        raise TooLarge(f"|PSL(2, Z_{n})| = {size} exceeds the cap {cap}")
    return size


def enumerate_group(n, cap=DEFAULT_CAP):
    """Every element of PSL(2, Z_n), found by brute force over Z_n^4.

    This deliberately does not use the order formula or vertex lifts so it can
    serve as an independent check on both.
    """
    n = check_level(n)
    _check_cap(n, cap)
    r = np.arange(n, dtype=np.int64)
    b, c, d = np.meshgrid(r, r, r, indexing="ij")
    b, c, d = b.ravel(), c.ravel(), d.ravel()
    found = set()
    for a in range(n):
        mask = (a * d - b * c) % n == 1 % n
        for bb, cc, dd in zip(b[mask].tolist(), c[mask].tolist(), d[mask].tolist()):
            found.add(_canonical(a, bb, cc, dd, n))
    return sorted(Psl2Element(*t, n) for t in found)


def stabilizer_of_infinity(n, cap=DEFAULT_CAP):
    """Elements fixing ``1/0``; these are exactly the classes of ``[[1, b], [0, 1]]``."""
    infinity = FareyFraction(1, 0, n)
    return [t for t in enumerate_group(n, cap) if act_on_vertex(t, infinity) == infinity]


def chi(t):
    """Send ``+-[[1, b], [0, 1]]`` to ``b mod n``; defined on the stabilizer of ``1/0``."""
    n = t.n
    if t.c != 0:
        raise InvalidVertex(f"{t} does not fix 1/0")
    if t.a == 1 % n and t.d == 1 % n:
        return t.b
    if t.a == (-1) % n and t.d == (-1) % n:
        return (-t.b) % n
    raise InvalidVertex(f"{t} is not unipotent")


def triangle_generators(n):
    """``(X, Y, Z)`` with ``X^2 = Y^3 = Z^n = XYZ = 1``.

    ``X = [[0, -1], [1, 0]]``, ``Z = U = [[1, 1], [0, 1]]`` and ``Y = X^-1 Z^-1``.
    """
    x = element(0, -1, 1, 0, n)
    z = element(1, 1, 0, 1, n)
    y = multiply(inverse(x), inverse(z))
    return x, y, z


def generated_subgroup(gens):
    """Closure of the identity under right multiplication by ``gens``."""
    start = identity(gens[0].n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = multiply(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def verify_triangle_relations(n):
    n = check_level(n)
    x, y, z = triangle_generators(n)
    one = identity(n)
    return (
        power(x, 2) == one
        and power(y, 3) == one
        and power(z, n) == one
        and multiply(multiply(x, y), z) == one
        and len(generated_subgroup([x, z])) == mu(n)
    )
