import networkx as nx
import pytest

from fareymap.errors import TooLarge
from fareymap.map_builder import build_map, dart_action, faces, farey_graph, star, underlying_graph
from fareymap.modular_arith import genus, mu, vertex_count
from fareymap.projective_line import adjacent, canonical_pair, make_fraction
from fareymap.psl2 import act_on_vertex, enumerate_group

from conftest import as_pair


def F(a, c, n):
    return make_fraction(a, c, n)


def same_cycle(xs, ys):
    """Equal as cyclic sequences, rotation only."""
    if len(xs) != len(ys):
        return False
    return any(xs[k:] + xs[:k] == ys for k in range(len(xs)))


def test_star_of_three_fifths_mod_seven():
    listed = [F(0, 5, 7), F(3, 3, 7), F(6, 1, 7), F(2, 6, 7), F(5, 4, 7), F(1, 2, 7), F(4, 0, 7)]
    assert same_cycle(star(F(3, 5, 7)), listed)


def test_star_of_half_mod_eight_is_reversed_listed_star():
    # the listed star comes from a determinant -1 matrix, so it runs the other way round
    listed = [F(2, 3, 8), F(3, 5, 8), F(4, 7, 8), F(5, 1, 8), F(6, 3, 8), F(7, 5, 8), F(0, 7, 8), F(1, 1, 8)]
    ours = star(F(1, 2, 8))
    assert set(ours) == set(listed)
    assert same_cycle(ours, listed[::-1])


@pytest.mark.parametrize("n", range(2, 15))
def test_star_of_infinity(n):
    assert star(F(1, 0, n)) == [F(k, 1, n) for k in range(n)]


@pytest.mark.parametrize("n, counts", [(2, (3, 3, 2, 0)), (3, (4, 6, 4, 0)), (6, (12, 36, 24, 1))])
def test_build_map_examples(n, counts):
    s = build_map(n).statistics()
    assert (s.vertices, s.edges, s.faces, s.genus) == counts


def test_tetrahedron_octahedron_icosahedron():
    for n, ref in [(3, nx.tetrahedral_graph()), (4, nx.octahedral_graph()), (5, nx.icosahedral_graph())]:
        g = underlying_graph(build_map(n))
        h = nx.Graph()
        h.add_edges_from(g.edges())
        assert nx.is_isomorphic(h, ref)


def test_m6_is_torus_and_m2_is_triangle():
    g = underlying_graph(build_map(2))
    assert (g.num_vertices, g.num_edges) == (3, 3)
    assert build_map(6).statistics().genus == 1


@pytest.mark.parametrize("n", range(2, 21))
def test_orbit_counts(n):
    m = build_map(n)
    assert m.num_darts == mu(n)
    assert len(m.vertex_orbits()) == vertex_count(n)
    assert len(m.face_orbits()) == mu(n) // 3
    assert len(m.edge_orbits()) == mu(n) // 2
    assert m.statistics().genus == genus(n)


@pytest.mark.parametrize("n", range(2, 21))
def test_permutation_axioms(n):
    m = build_map(n)
    for i in range(m.num_darts):
        assert m.alpha[m.alpha[i]] == i and m.alpha[i] != i
        assert m.phi[m.phi[m.phi[i]]] == i
        assert m.darts[m.sigma[i]].source == m.darts[i].source


def test_face_convention_pinned():
    # both compositions give triangles here; the builder keeps the first one
    for n in range(2, 13):
        assert build_map(n).face_convention == "sigma*alpha"


@pytest.mark.parametrize("n", range(2, 21))
def test_faces_are_mediant_triangles(n):
    m = build_map(n)
    fs = faces(m)
    assert len(fs) == mu(n) // 3
    for tri in fs:
        verts = [m.darts[i].source for i in tri]
        assert len(set(verts)) == 3
        for i in range(3):
            assert adjacent(verts[i], verts[(i + 1) % 3])
        # reversing a face dart gives a matrix [[a, b], [c, d]] whose mediant is the third vertex
        for i in tri:
            t = m.darts[m.alpha[i]].matrix
            third = make_fraction(t.a + t.b, t.c + t.d, n)
            assert third in verts
            assert third not in (m.darts[i].source, m.darts[i].target)
    assert sum(len(f) for f in fs) == m.num_darts


@pytest.mark.parametrize("n", [3, 8])
def test_face_counts(n):
    assert len(faces(build_map(n))) == {3: 4, 8: 64}[n]


@pytest.mark.parametrize("n", range(2, 31))
def test_graph_matches_brute_force(n, nx_graph):
    m = build_map(n)
    g = underlying_graph(m)
    ref = nx_graph(n)
    h = nx.Graph()
    h.add_nodes_from(as_pair(v) for v in g.vertices)
    h.add_edges_from((as_pair(g.vertices[i]), as_pair(g.vertices[j])) for i, j in g.edges())
    assert set(h.nodes) == set(ref.nodes)
    assert {frozenset(e) for e in h.edges} == {frozenset(e) for e in ref.edges}
    assert g.num_edges == mu(n) // 2
    fg = farey_graph(n)
    assert fg.neighbors == g.neighbors


@pytest.mark.parametrize("n", range(2, 9))
def test_regular_exhaustive(n):
    m = build_map(n)
    group = enumerate_group(n)
    for i in range(m.num_darts):
        images = [dart_action(m, t, i) for t in group]
        assert sorted(images) == list(range(m.num_darts))


@pytest.mark.parametrize("n", range(2, 13))
def test_dart_matrix_maps_base_dart(n):
    m = build_map(n)
    inf, zero = make_fraction(1, 0, n), make_fraction(0, 1, n)
    for d in m.darts:
        assert act_on_vertex(d.matrix, inf) == d.source
        assert act_on_vertex(d.matrix, zero) == d.target


@pytest.mark.parametrize("n", range(3, 12))
def test_star_equivariance(n):
    group = enumerate_group(n)
    for t in group[:: max(1, len(group) // 15)]:
        for v in make_fraction(1, 0, n), make_fraction(0, 1, n), make_fraction(1, 2 % n, n):
            image = [act_on_vertex(t, w) for w in star(v)]
            assert same_cycle(star(act_on_vertex(t, v)), image)


@pytest.mark.parametrize("n", range(2, 16))
def test_rotation_matches_star(n):
    m = build_map(n)
    for v in m.vertices:
        assert m.rotation(v) == star(v)


def test_cap_enforced():
    with pytest.raises(TooLarge):
        build_map(30, cap=100)
    with pytest.raises(TooLarge):
        farey_graph(30, cap=100)


def test_canonical_pair_helper():
    assert canonical_pair(6, 0, 7) == (1, 0)
    assert canonical_pair(4, 2, 7) == (3, 5)
