"""Coordinate arithmetic on the infinite truncated-square tiling graph.

The tiling covers the plane with diamond squares and regular octagons and,
as a graph, is 3-regular. Each square sits at an integer coordinate (x, y)
and carries four vertices numbered like a clock face: 0 = top, 1 = right,
2 = bottom, 3 = left. Within a square, consecutive numbers are adjacent.
Across squares each vertex has exactly one more edge: the top of square
(x, y) meets the bottom of square (x, y+1), and the right of (x, y) meets
the left of (x+1, y). Every remaining face is then an octagon of eight
vertices, one per surrounding square pair.

Distances are taken in the graph metric. No closed-form distance formula
is assumed anywhere; breadth-first search is the single source of truth.
"""

from typing import NamedTuple, Optional

TOP, RIGHT, BOTTOM, LEFT = 0, 1, 2, 3


class Vertex(NamedTuple):
    """A vertex of the infinite tiling: clock position ``a`` on square (x, y)."""

    a: int
    x: int
    y: int

    def to_json(self):
        return [self.a, self.x, self.y]


def vertex_from_json(item) -> Vertex:
    """Parse the wire form [a, x, y] back into a Vertex."""
    try:
        a, x, y = (int(c) for c in item)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"not a vertex triple: {item!r}") from exc
    if a not in (0, 1, 2, 3):
        raise ValueError(f"clock position must be 0..3, got {a}")
    return Vertex(a, x, y)


def neighbors(v) -> tuple:
    """The three neighbors of a vertex.

    Two share v's square (clock positions a-1 and a+1 mod 4); the third is
    the unique square-to-square edge at v: tops pair with the bottom of the
    square above, rights with the left of the square to the right.
    """
    a, x, y = v
    if a == TOP:
        cross = Vertex(BOTTOM, x, y + 1)
    elif a == RIGHT:
        cross = Vertex(LEFT, x + 1, y)
    elif a == BOTTOM:
        cross = Vertex(TOP, x, y - 1)
    elif a == LEFT:
        cross = Vertex(RIGHT, x - 1, y)
    else:
        raise ValueError(f"clock position must be 0..3, got {a}")
    return (Vertex((a - 1) % 4, x, y), Vertex((a + 1) % 4, x, y), cross)


def ball(v, t: int) -> dict:
    """Map every vertex within distance t-1 of v to its distance from v."""
    if t < 1:
        raise ValueError("t must be >= 1")
    v = Vertex(*v)
    dist = {v: 0}
    frontier = [v]
    for d in range(1, t):
        grown = []
        for u in frontier:
            for w in neighbors(u):
                if w not in dist:
                    dist[w] = d
                    grown.append(w)
        frontier = grown
    return dist


def distance(u, v, cap: Optional[int] = None) -> Optional[int]:
    """Length of a shortest path between u and v.

    A bidirectional breadth-first search; both sides grow one layer at a
    time until the known layers certify the best meeting point. When a cap
    is given and every path of length <= cap has been ruled out, the result
    is None instead of the true distance.
    """
    u, v = Vertex(*u), Vertex(*v)
    if u == v:
        return 0 if cap is None or cap >= 0 else None
    if cap is not None and cap < 1:
        return None
    dist_u, dist_v = {u: 0}, {v: 0}
    frontier_u, frontier_v = [u], [v]
    depth_u = depth_v = 0
    best = None
    while True:
        settled = depth_u + depth_v
        # any meeting recorded so far satisfies best <= settled, and once
        # settled >= true distance the optimal meeting has been seen
        if best is not None:
            return best if cap is None or best <= cap else None
        if cap is not None and settled >= cap:
            return None
        if len(frontier_u) <= len(frontier_v):
            frontier, mine, other = frontier_u, dist_u, dist_v
            depth_u += 1
            depth = depth_u
        else:
            frontier, mine, other = frontier_v, dist_v, dist_u
            depth_v += 1
            depth = depth_v
        grown = []
        for w in frontier:
            for nb in neighbors(w):
                if nb not in mine:
                    mine[nb] = depth
                    grown.append(nb)
                    if nb in other:
                        met = depth + other[nb]
                        if best is None or met < best:
                            best = met
        if frontier is frontier_u:
            frontier_u = grown
        else:
            frontier_v = grown


def coordination(t: int) -> int:
    """Number of vertices at distance exactly t-1 from any fixed vertex.

    Closed form, no traversal: writing s = t-1 = 3k + j, the count is 8k
    when j = 0, 8k + 3 when j = 1 and 8k + 5 when j = 2. The sequence runs
    3, 5, 8, 11, 13, 16, ... and is the same for every starting vertex.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    k, j = divmod(t - 1, 3)
    if j == 0:
        return 8 * k
    if j == 1:
        return 8 * k + 3
    return 8 * k + 5


def ball_size(t: int) -> int:
    """Vertex count of a radius-(t-1) ball: 1 plus coordination(2..t) summed."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return 1 + sum(coordination(i) for i in range(2, t + 1))
