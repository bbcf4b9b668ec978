"""A walk through the infinite tiling's coordinate system.

Every square of the tiling sits at an integer coordinate and carries four
vertices numbered like a clock: 0 top, 1 right, 2 bottom, 3 left. This
script pokes at adjacency, distances, and the growth rate of balls.
"""

from truncdom import Vertex, ball, ball_size, coordination, distance, neighbors

origin_top = Vertex(0, 0, 0)
print("the top vertex of the origin square:", origin_top)
print("its three neighbors:", *neighbors(origin_top))
print()

# Two in-square steps, or a hop across to the next square.
pairs = [
    (Vertex(0, 0, 0), Vertex(1, 0, 0)),
    (Vertex(0, 0, 0), Vertex(2, 0, 1)),
    (Vertex(0, 0, 0), Vertex(0, 1, 0)),
    (Vertex(0, 0, 0), Vertex(0, 1, 1)),
    (Vertex(0, 0, 0), Vertex(0, 3, -2)),
]
for u, v in pairs:
    print(f"distance {tuple(u)} -> {tuple(v)}: {distance(u, v)}")
print()

# The number of vertices at each distance follows a closed form; check it
# against an actual breadth-first ball.
sphere = ball(origin_top, 10)
print(" t  at distance t-1   ball_size(t)")
for t in range(2, 11):
    exact = sum(1 for d in sphere.values() if d == t - 1)
    print(f"{t:2d}  {coordination(t):3d} (bfs {exact:3d})      {ball_size(t):4d}")

# Roughly 8/3 new vertices per step: the tiling grows linearly, much slower
# than the square grid's 4 per step.
