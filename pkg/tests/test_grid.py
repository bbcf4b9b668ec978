import json

import pytest

from truncdom import (
    UNREACHED,
    Vertex,
    bfs_distances,
    build_grid,
    build_torus,
    eccentricity,
    graph_from_json,
    graph_to_json,
    neighbors,
    radius,
)
from truncdom.grid import FiniteGraph

from oracles import bfs


def test_vertex_count_examples():
    assert build_grid(1, 1).vertex_count == 8
    assert build_grid(2, 2).vertex_count == 24
    assert build_grid(3, 5).vertex_count == 76


def test_vertex_count_formula():
    for m in range(1, 11):
        for n in range(1, 11):
            assert build_grid(m, n).vertex_count == 2 * m + n * (4 * m + 2)


def test_single_octagon_is_an_eight_cycle():
    g = build_grid(1, 1)
    assert all(len(nbrs) == 2 for nbrs in g.adjacency)
    assert max(bfs(g.adjacency, 0)) == 4  # C8 diameter


def test_degree_spectrum_and_bipartite():
    for m, n in [(1, 1), (1, 4), (2, 2), (3, 3), (2, 5)]:
        g = build_grid(m, n)
        degrees = {len(nbrs) for nbrs in g.adjacency}
        assert degrees <= {2, 3}
        # 2-color by BFS: succeeds exactly when there is no odd cycle
        color = [UNREACHED] * g.vertex_count
        color[0] = 0
        queue = [0]
        while queue:
            u = queue.pop()
            for w in g.adjacency[u]:
                if color[w] == UNREACHED:
                    color[w] = 1 - color[u]
                    queue.append(w)
                else:
                    assert color[w] != color[u]
        assert UNREACHED not in color  # connected as well


def test_grid_adjacency_is_induced_from_the_tiling():
    g = build_grid(3, 4)
    present = set(g.coords)
    for i, v in enumerate(g.coords):
        expected = {g.index_of[w] for w in neighbors(v) if w in present}
        assert set(g.adjacency[i]) == expected


def test_coords_and_index_are_inverse_and_sorted():
    g = build_grid(2, 3)
    assert [g.index_of[v] for v in g.coords] == list(range(g.vertex_count))
    assert list(g.coords) == sorted(g.coords, key=lambda v: (v.y, v.x, v.a))


def test_build_grid_rejects_bad_dimensions():
    with pytest.raises(ValueError):
        build_grid(0, 3)
    with pytest.raises(ValueError):
        build_grid(2, -1)


def test_torus_vertex_counts():
    assert build_torus(((1, 0), (0, 1))).vertex_count == 4
    assert build_torus(((1, 1), (0, 4))).vertex_count == 16
    assert build_torus(((1, 3), (0, 6))).vertex_count == 24


def test_torus_is_three_regular_and_simple():
    for basis in [((1, 0), (0, 1)), ((1, 1), (0, 4)), ((2, 1), (1, 3))]:
        g = build_torus(basis)
        for i, nbrs in enumerate(g.adjacency):
            assert len(nbrs) == 3
            assert len(set(nbrs)) == 3
            assert i not in nbrs


def test_torus_rejects_singular_basis():
    with pytest.raises(ValueError):
        build_torus(((1, 2), (2, 4)))


def test_bfs_distances():
    g = build_grid(1, 1)
    dist = bfs_distances(g, 0)
    assert dist[0] == 0
    assert max(dist) == 4
    capped = bfs_distances(g, 0, cap=2)
    assert capped.count(UNREACHED) == sum(1 for d in dist if d > 2)
    with pytest.raises(ValueError):
        bfs_distances(g, 8)


def test_grid_22_diameter():
    g = build_grid(2, 2)
    assert max(max(bfs(g.adjacency, v)) for v in range(g.vertex_count)) == 8


def test_torus_distance_is_minimum_over_lifts():
    # quotient paths are projections of plane paths, so the quotient metric
    # must equal the nearest-translate distance; this is what makes torus
    # witnesses lift to valid periodic patterns
    from truncdom import distance
    from truncdom.intlattice import PeriodLattice

    lat = PeriodLattice(3, 2, 1)
    g = build_torus(lat.basis())
    for src in (0, 7, 16):
        dist = bfs_distances(g, src)
        su = g.coords[src]
        for j, w in enumerate(g.coords):
            lifts = [
                Vertex(w.a, w.x + i1 * lat.d1 + i2 * lat.k, w.y + i2 * lat.d2)
                for i1 in range(-3, 4)
                for i2 in range(-3, 4)
            ]
            found = [distance(su, lift, cap=12) for lift in lifts]
            best = min(d for d in found if d is not None)
            assert best == dist[j]


def test_eccentricity_and_radius():
    assert radius(build_grid(1, 1)) == 4
    assert radius(build_grid(2, 2)) == 5
    assert radius(build_grid(3, 3)) == 8
    g = build_grid(1, 1)
    assert eccentricity(g, 0) == 4


def test_declared_symmetries_are_automorphisms():
    # the solver skips search branches based on these, so a wrong
    # permutation here would silently lose solutions
    for g in (
        build_grid(2, 3),
        build_grid(3, 3),
        build_torus(((1, 1), (0, 4))),
        build_torus(((2, 1), (1, 3))),
    ):
        edge_set = set(g.edges())
        for perm in g.symmetries:
            assert sorted(perm) == list(range(g.vertex_count))
            mapped = {tuple(sorted((perm[i], perm[j]))) for i, j in edge_set}
            assert mapped == edge_set
    assert len(build_grid(2, 3).symmetries) == 3
    assert len(build_torus(((1, 1), (0, 4))).symmetries) == 3


def test_disconnected_graph_reported():
    two = FiniteGraph(
        kind="grid",
        coords=(Vertex(0, 0, 0), Vertex(0, 9, 9)),
        index_of={Vertex(0, 0, 0): 0, Vertex(0, 9, 9): 1},
        adjacency=((), ()),
    )
    with pytest.raises(ValueError):
        eccentricity(two, 0)


def test_graph_json_round_trip():
    for g in (build_grid(2, 3), build_torus(((1, 1), (0, 4)))):
        doc = json.loads(json.dumps(graph_to_json(g)))
        back = graph_from_json(doc)
        assert back.coords == g.coords
        assert back.edges() == g.edges()
        assert all(i < j for i, j in doc["edges"])


def test_graph_json_rejects_tampering():
    doc = graph_to_json(build_grid(1, 2))
    doc["vertices"][0] = [1, 9, 9]
    with pytest.raises(ValueError):
        graph_from_json(doc)
    with pytest.raises(ValueError):
        graph_from_json({"kind": "hex", "vertices": []})
