"""Build the quotient Farey map at level n as a combinatorial map.

Darts are ordered pairs of adjacent vertices. Around each vertex ``a/c`` the
neighbours come in the cyclic order ``(a k + b)/(c k + d)``, ``k = 0..n-1``,
where ``(b, d)`` is any unimodular lift; ``sigma`` steps ``k -> k + 1``,
``alpha`` reverses a dart and ``phi`` walks around a face.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import FareyMapError, LevelMismatch, TooLarge
from .modular_arith import MapStatistics, check_level, mu
from .projective_line import (
    FareyFraction,
    canonical_pair,
    enumerate_vertices,
    lift_to_unimodular,
)
from .psl2 import DEFAULT_CAP, Psl2Element, act_on_vertex, element

__all__ = [
    "Dart",
    "CombinatorialMap",
    "Graph",
    "valency",
    "star",
    "build_map",
    "faces",
    "underlying_graph",
    "farey_graph",
    "dart_action",
]


def valency(n):
    return n


@dataclass(frozen=True)
class Dart:
    source: FareyFraction
    target: FareyFraction
    matrix: Psl2Element

    def __str__(self):
        return f"{self.source}->{self.target}"


def star(v):
    """Neighbours of ``v`` in cyclic order: ``(a k + b)/(c k + d)`` for ``k = 0..n-1``."""
    n = v.n
    b, d = lift_to_unimodular(v)
    out = []
    for k in range(n):
        out.append(FareyFraction(*canonical_pair(v.a * k + b, v.c * k + d, n), n))
    return out


def _cycles(perm):
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


@dataclass
class Graph:
    """Simple undirected graph on vertex indices, with sorted adjacency lists."""

    n: int
    vertices: list
    neighbors: list

    @cached_property
    def index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return sum(len(x) for x in self.neighbors) // 2

    def edges(self):
        """Unordered edges as index pairs ``(i, j)``, ``i < j``, sorted."""
        return [(i, j) for i, nb in enumerate(self.neighbors) for j in nb if i < j]

    def degrees(self):
        return [len(x) for x in self.neighbors]


@dataclass
class CombinatorialMap:
    n: int
    vertices: list
    darts: list
    sigma: list
    alpha: list
    phi: list
    face_convention: str
    vertex_index: dict = field(repr=False)
    dart_index: dict = field(repr=False)

    @property
    def num_darts(self):
        return len(self.darts)

    def sigma_inverse(self):
        inv = [0] * len(self.sigma)
        for i, j in enumerate(self.sigma):
            inv[j] = i
        return inv

    def vertex_orbits(self):
        return _cycles(self.sigma)

    def edge_orbits(self):
        return _cycles(self.alpha)

    def face_orbits(self):
        return _cycles(self.phi)

    def statistics(self):
        """Counts read off the permutations (not the formulas)."""
        v = len(self.vertex_orbits())
        e = len(self.edge_orbits())
        f = len(self.face_orbits())
        chi = v - e + f
        if chi % 2:
            raise FareyMapError(f"odd Euler characteristic {chi}")
        valencies = {len(c) for c in self.vertex_orbits()}
        if len(valencies) != 1:
            raise FareyMapError(f"map is not vertex-regular: valencies {sorted(valencies)}")
        return MapStatistics(
            darts=len(self.darts),
            edges=e,
            faces=f,
            vertices=v,
            valency=valencies.pop(),
            genus=(2 - chi) // 2,
        )

    def dart_between(self, u, v):
        return self.dart_index[(self.vertex_index[u], self.vertex_index[v])]

    def rotation(self, v):
        """Neighbours of ``v`` in the order given by ``sigma``."""
        first = self.dart_between(v, star(v)[0])
        out = []
        i = first
        while True:
            out.append(self.darts[i].target)
            i = self.sigma[i]
            if i == first:
                return out


def build_map(n, cap=DEFAULT_CAP):
    """Construct the map at level ``n`` and check it is triangular.

    ``phi = sigma . alpha`` is tried first; should it fail to have order 3 the
    opposite composition is used and ``face_convention`` records which held.
    """
    n = check_level(n)
    size = mu(n)
    if cap is not None and size > cap:
        raise TooLarge(f"level {n} has {size} darts, over the cap {cap}")

    vertices = enumerate_vertices(n)
    vertex_index = {v: i for i, v in enumerate(vertices)}
    val = valency(n)

    darts = []
    dart_index = {}
    for i, v in enumerate(vertices):
        b, d = lift_to_unimodular(v)
        for k in range(val):
            top, bottom = v.a * k + b, v.c * k + d
            target = FareyFraction(*canonical_pair(top, bottom, n), n)
            key = (i, vertex_index[target])
            if key in dart_index:
                raise FareyMapError(f"repeated neighbour {target} around {v}: map has a multiple edge")
            dart_index[key] = len(darts)
            darts.append(Dart(v, target, element(v.a, top, v.c, bottom, n)))

    if len(darts) != size:
        raise FareyMapError(f"built {len(darts)} darts, expected {size}")

    sigma = [(i // val) * val + (i % val + 1) % val for i in range(len(darts))]
    alpha = [0] * len(darts)
    for (i, j), idx in dart_index.items():
        try:
            alpha[idx] = dart_index[(j, i)]
        except KeyError:
            raise FareyMapError(f"dart {darts[idx]} has no reverse") from None

    phi = [sigma[alpha[i]] for i in range(len(darts))]
    convention = "sigma*alpha"
    if not _is_order_three(phi):
        phi = [alpha[sigma[i]] for i in range(len(darts))]
        convention = "alpha*sigma"
        if not _is_order_three(phi):
            raise FareyMapError(f"no face convention gives triangles at level {n}")

    return CombinatorialMap(
        n=n,
        vertices=vertices,
        darts=darts,
        sigma=sigma,
        alpha=alpha,
        phi=phi,
        face_convention=convention,
        vertex_index=vertex_index,
        dart_index=dart_index,
    )


def _is_order_three(perm):
    return all(perm[perm[perm[i]]] == i and perm[i] != i for i in range(len(perm)))


def faces(m):
    """Faces as dart triples (orbits of ``phi``)."""
    out = []
    for cyc in m.face_orbits():
        if len(cyc) != 3:
            raise FareyMapError(f"face of length {len(cyc)}")
        out.append(tuple(cyc))
    return out


def underlying_graph(m):
    """The simple graph of ``m``, read off its darts."""
    neighbors = [[] for _ in m.vertices]
    for i, j in m.dart_index:
        neighbors[i].append(j)
    for nb in neighbors:
        nb.sort()
    return Graph(m.n, list(m.vertices), neighbors)


def farey_graph(n, cap=DEFAULT_CAP, block=512):
    """The graph at level ``n`` from the edge relation alone.

    Every pair of vertices is tested with the determinant condition, so this
    does not rely on the star formula used by :func:`build_map`.
    """
    n = check_level(n)
    if cap is not None and mu(n) > cap:
        raise TooLarge(f"level {n} has {mu(n)} darts, over the cap {cap}")
    vertices = enumerate_vertices(n)
    a = np.array([v.a for v in vertices], dtype=np.int64)
    c = np.array([v.c for v in vertices], dtype=np.int64)
    neighbors = []
    for start in range(0, len(vertices), block):
        sl = slice(start, start + block)
        det = (a[sl, None] * c[None, :] - a[None, :] * c[sl, None]) % n
        hit = (det == 1 % n) | (det == (-1) % n)
        for row in hit:
            neighbors.append(np.flatnonzero(row).tolist())
    return Graph(n, vertices, neighbors)


def dart_action(m, t, i):
    """Index of the image of dart ``i`` under the group element ``t``."""
    if t.n != m.n:
        raise LevelMismatch(f"levels differ: {t.n} vs {m.n}")
    d = m.darts[i]
    key = (m.vertex_index[act_on_vertex(t, d.source)], m.vertex_index[act_on_vertex(t, d.target)])
    return m.dart_index[key]
