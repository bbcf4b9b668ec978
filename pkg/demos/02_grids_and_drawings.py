"""Finite octagon grids: counts, shape, and terminal drawings."""

from truncdom import build_grid, radius
from truncdom.render import to_ascii

print("vertex counts 2m + n(4m+2):")
for m in range(1, 5):
    print("  ", [build_grid(m, n).vertex_count for n in range(1, 7)])
print()

g = build_grid(2, 3)
print(f"the 2x3 grid has {g.vertex_count} vertices and radius {radius(g)}:")
print()
print(to_ascii(g))
print()

# A single octagon is just an 8-cycle.
print("one octagon:")
print(to_ascii(build_grid(1, 1)))
