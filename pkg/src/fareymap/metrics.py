"""Graph distances in the quotient maps: BFS, poles, diameter and the
arithmetic distance criteria."""

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from math import gcd

from .errors import FareyMapError, InvalidVertex, NotPrime, PreconditionViolated, TooLarge
from .map_builder import farey_graph, star
from .modular_arith import check_level, euler_phi, inverse_mod, is_prime
from .projective_line import FareyFraction, adjacent, determinant, make_fraction

__all__ = [
    "DistanceClass",
    "PoleSet",
    "graph",
    "bfs_distances",
    "bfs_distance",
    "eccentricity",
    "distance_balls",
    "pair_distance",
    "diameter",
    "poles",
    "distance2_criterion",
    "classify_distance_prime",
    "star_decomposition",
    "path_witness_distance3",
]

N_BFS = 200


class DistanceClass(IntEnum):
    SAME = 0
    ADJACENT = 1
    TWO = 2
    THREE = 3


@dataclass(frozen=True)
class PoleSet:
    n: int
    poles: tuple

    def __len__(self):
        return len(self.poles)

    def __iter__(self):
        return iter(self.poles)

    def __contains__(self, v):
        return v in self.poles


@lru_cache(maxsize=16)
def graph(n):
    """Cached graph at level ``n`` (built from the edge relation alone)."""
    n = check_level(n)
    if n > N_BFS:
        raise TooLarge(f"distance computations are limited to n <= {N_BFS}")
    return farey_graph(n)


def bfs_distances(g, source):
    """Distances from vertex index ``source`` to every vertex index."""
    dist = [-1] * g.num_vertices
    dist[source] = 0
    queue = deque([source])
    nbrs = g.neighbors
    while queue:
        i = queue.popleft()
        di = dist[i] + 1
        for j in nbrs[i]:
            if dist[j] < 0:
                dist[j] = di
                queue.append(j)
    return dist


def bfs_distance(n, u, v):
    """Shortest path length between ``u`` and ``v`` at level ``n``."""
    g = graph(n)
    if u.n != n or v.n != n:
        raise InvalidVertex(f"vertices {u}, {v} are not at level {n}")
    return bfs_distances(g, g.index[u])[g.index[v]]


def eccentricity(n, v):
    g = graph(n)
    return max(bfs_distances(g, g.index[v]))


@lru_cache(maxsize=4)
def distance_balls(n):
    """Balls of every radius around every vertex, as bitmasks over vertex indices.

    ``distance_balls(n)[r][i]`` has bit ``j`` set iff vertex ``j`` is within
    distance ``r`` of vertex ``i``. Grows one radius at a time until every
    ball is the whole vertex set, so this is an all-pairs computation.
    """
    g = graph(n)
    size = g.num_vertices
    full = (1 << size) - 1
    ball = [1 << i for i in range(size)]
    layers = [ball]
    while any(b != full for b in ball):
        grown = []
        for i, nb in enumerate(g.neighbors):
            acc = ball[i]
            for j in nb:
                acc |= ball[j]
            grown.append(acc)
        if grown == ball:
            raise FareyMapError(f"graph at level {n} is disconnected")
        ball = grown
        layers.append(ball)
    return layers


def pair_distance(n, u, v):
    """Distance read from :func:`distance_balls`; agrees with :func:`bfs_distance`."""
    g = graph(n)
    i, j = g.index[u], g.index[v]
    for r, layer in enumerate(distance_balls(n)):
        if layer[i] >> j & 1:
            return r


def diameter(n):
    """Largest distance over all vertex pairs (exhaustive, see :func:`distance_balls`)."""
    return len(distance_balls(n)) - 1


def poles(n):
    """Vertices ``a/0``; there are ``phi(n)/2`` of them for ``n > 2``."""
    n = check_level(n)
    found = sorted({make_fraction(a, 0, n) for a in range(1, n) if gcd(a, n) == 1})
    expected = 1 if n == 2 else euler_phi(n) // 2
    if len(found) != expected:
        raise FareyMapError(f"found {len(found)} poles at level {n}, expected {expected}")
    return PoleSet(n, tuple(found))


def distance2_criterion(n, b, d):
    """Whether ``b/d`` is predicted to lie at distance 2 from ``1/0``.

    True iff ``g = gcd(d, n)`` divides ``b + 1`` or ``b - 1``. Since ``g``
    divides ``n`` the test only depends on ``b mod n``. Requires ``d != +-1``
    (those vertices are neighbours of ``1/0``).
    """
    n = check_level(n)
    make_fraction(b, d, n)
    d %= n
    if d in (1 % n, (-1) % n):
        raise PreconditionViolated(f"d = {d} is +-1 mod {n}: b/d is adjacent to 1/0")
    g = gcd(d, n)
    return (b + 1) % g == 0 or (b - 1) % g == 0


def classify_distance_prime(p, u, v):
    """Distance class of ``u``, ``v`` at a prime level from ``Delta = a d - b c``.

    ``Delta = +-1`` means adjacent, ``Delta = 0`` distance 3, anything else
    distance 2. That needs diameter 3, so levels 2 and 3 fall back to BFS.
    """
    p = check_level(p)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if u.n != p or v.n != p:
        raise InvalidVertex(f"vertices {u}, {v} are not at level {p}")
    if u == v:
        return DistanceClass.SAME
    if p < 5:
        return DistanceClass(bfs_distance(p, u, v))
    delta = determinant(u, v)
    if delta in (1, p - 1):
        return DistanceClass.ADJACENT
    if delta == 0:
        return DistanceClass.THREE
    return DistanceClass.TWO


def star_decomposition(p):
    """Stars of ``k/0`` for ``k = 1..(p-1)/2`` at an odd prime level.

    Each entry is ``(pole, neighbours)``. The neighbour sets (``p`` vertices
    each) are disjoint and, with the poles added, cover every vertex.
    """
    p = check_level(p)
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    out = []
    seen = set()
    for k in range(1, (p - 1) // 2 + 1):
        pole = FareyFraction(k, 0, p)
        nbrs = star(pole)
        block = {pole, *nbrs}
        if len(block) != p + 1 or seen & block:
            raise FareyMapError(f"star of {pole} overlaps an earlier star at level {p}")
        seen |= block
        out.append((pole, nbrs))
    total = (p * p - 1) // 2
    if len(seen) != total:
        raise FareyMapError(f"stars cover {len(seen)} of {total} vertices at level {p}")
    return out


def path_witness_distance3(n, a):
    """The path ``1/0 -> 0/1 -> 1/a^-1 -> a/0`` joining two poles."""
    n = check_level(n)
    if gcd(a, n) != 1 or a % n in (1 % n, (-1) % n):
        raise PreconditionViolated(f"need a unit a != +-1 mod {n}, got {a}")
    inv = inverse_mod(a, n)
    path = [make_fraction(1, 0, n), make_fraction(0, 1, n), make_fraction(1, inv, n), make_fraction(a, 0, n)]
    for u, v in zip(path, path[1:]):
        if not adjacent(u, v):
            raise FareyMapError(f"{u} and {v} are not adjacent at level {n}")
    return path
