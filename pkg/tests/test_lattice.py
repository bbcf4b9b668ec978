import random

import pytest

from truncdom import Vertex, ball, ball_size, coordination, distance, neighbors


def test_neighbor_examples():
    assert set(neighbors(Vertex(0, 0, 0))) == {
        Vertex(1, 0, 0),
        Vertex(3, 0, 0),
        Vertex(2, 0, 1),
    }
    assert set(neighbors(Vertex(1, 0, 0))) == {
        Vertex(0, 0, 0),
        Vertex(2, 0, 0),
        Vertex(3, 1, 0),
    }
    assert set(neighbors(Vertex(2, 5, -3))) == {
        Vertex(1, 5, -3),
        Vertex(3, 5, -3),
        Vertex(0, 5, -4),
    }


def test_degree_three_and_symmetry_window():
    for a in range(4):
        for x in range(-10, 11):
            for y in range(-10, 11):
                v = Vertex(a, x, y)
                nbrs = neighbors(v)
                assert len(set(nbrs)) == 3
                for u in nbrs:
                    assert v in neighbors(u)


def test_neighbors_rejects_bad_clock_position():
    with pytest.raises(ValueError):
        neighbors(Vertex(4, 0, 0))


def test_distance_examples():
    assert distance(Vertex(0, 0, 0), Vertex(1, 0, 0)) == 1
    # bottom of a square to the right vertex of the square below it
    assert distance(Vertex(2, 0, 1), Vertex(1, 0, 0)) == 2
    # right of a square to the bottom of the square to its right
    assert distance(Vertex(1, 0, 0), Vertex(2, 1, 0)) == 2
    assert distance(Vertex(3, 2, 2), Vertex(3, 2, 2)) == 0


def test_distance_agrees_with_plain_bfs():
    rng = random.Random(7)
    center = Vertex(1, 0, 0)
    reference = ball(center, 11)  # plain layered BFS to depth 10
    others = sorted(reference)
    for _ in range(120):
        v = others[rng.randrange(len(others))]
        assert distance(center, v) == reference[v]
        assert distance(v, center) == reference[v]


def test_distance_triangle_inequality():
    rng = random.Random(21)
    for _ in range(25):
        pts = [
            Vertex(rng.randrange(4), rng.randrange(-3, 4), rng.randrange(-3, 4))
            for _ in range(3)
        ]
        ab = distance(pts[0], pts[1])
        bc = distance(pts[1], pts[2])
        ac = distance(pts[0], pts[2])
        assert ac <= ab + bc


def test_distance_translation_invariance():
    rng = random.Random(3)
    for _ in range(20):
        u = Vertex(rng.randrange(4), rng.randrange(-2, 3), rng.randrange(-2, 3))
        v = Vertex(rng.randrange(4), rng.randrange(-2, 3), rng.randrange(-2, 3))
        dx, dy = rng.randrange(-5, 6), rng.randrange(-5, 6)
        shifted = distance(
            Vertex(u.a, u.x + dx, u.y + dy), Vertex(v.a, v.x + dx, v.y + dy)
        )
        assert shifted == distance(u, v)


def test_distance_cap():
    u, v = Vertex(0, 0, 0), Vertex(0, 3, 0)
    d = distance(u, v)
    assert distance(u, v, cap=d) == d
    assert distance(u, v, cap=d - 1) is None
    assert distance(u, u, cap=0) == 0


def test_ball_examples():
    v = Vertex(2, 1, -1)
    assert ball(v, 1) == {v: 0}
    assert len(ball(v, 2)) == 4
    assert len(ball(v, 4)) == 17
    assert all(dist <= 3 for dist in ball(v, 4).values())
    with pytest.raises(ValueError):
        ball(v, 0)


def test_coordination_examples():
    assert coordination(2) == 3
    assert coordination(4) == 8
    assert coordination(7) == 16
    with pytest.raises(ValueError):
        coordination(1)


def test_coordination_matches_bfs_counts():
    rng = random.Random(11)
    for _ in range(5):
        center = Vertex(
            rng.randrange(4), rng.randrange(-4, 5), rng.randrange(-4, 5)
        )
        sphere = ball(center, 12)
        for t in range(2, 13):
            count = sum(1 for d in sphere.values() if d == t - 1)
            assert count == coordination(t)


def test_ball_size_values():
    assert ball_size(1) == 1
    assert ball_size(2) == 4
    assert ball_size(4) == 17
    assert ball_size(5) == 28  # frozen from depth-4 BFS on the tiling
    assert len(ball(Vertex(3, -2, 5), 5)) == 28


def test_ball_size_same_for_all_clock_positions():
    for t in range(1, 11):
        sizes = {len(ball(Vertex(a, 0, 0), t)) for a in range(4)}
        assert sizes == {ball_size(t)}


def test_vertex_json_round_trip():
    from truncdom.lattice import vertex_from_json

    v = Vertex(2, -3, 7)
    assert vertex_from_json(v.to_json()) == v
    with pytest.raises(ValueError):
        vertex_from_json([5, 0, 0])
    with pytest.raises(ValueError):
        vertex_from_json([1, 2])
