"""Finite pieces of the tiling: rectangular octagon grids and torus quotients.

The rectangular graph with m rows and n columns of octagons is the subgraph
induced on the union of the octagon vertex rings whose lower-left squares
range over [0, n) x [0, m). A torus graph identifies squares modulo a
full-rank period lattice; that keeps every vertex 3-regular and yields
exactly 4 * index vertices.

Vertices are indexed lexicographically by (y, x, a), so indices are stable
across runs and adjacent indices tend to be adjacent in memory.
"""

from collections import deque
from dataclasses import dataclass, field

from .intlattice import PeriodLattice
from .lattice import BOTTOM, LEFT, RIGHT, TOP, Vertex, neighbors, vertex_from_json

UNREACHED = -1


@dataclass(frozen=True, eq=False)
class FiniteGraph:
    """Immutable vertex-indexed graph with tiling-coordinate labels.

    ``symmetries`` holds known automorphisms as index permutations (identity
    omitted): grid reflections, or square-coordinate translations on a torus.
    The solver uses them to skip mirror-image search branches.
    """

    kind: str
    coords: tuple
    index_of: dict
    adjacency: tuple
    m: int = None
    n: int = None
    basis: tuple = None
    lattice: PeriodLattice = None
    symmetries: tuple = field(default=(), repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.coords)

    def edges(self):
        """Each undirected edge once, as (i, j) with i < j, sorted."""
        return sorted(
            (i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j
        )


def octagon_ring(x: int, y: int):
    """The eight vertices of the octagon above-right of square (x, y), in
    cycle order."""
    return (
        Vertex(TOP, x, y),
        Vertex(RIGHT, x, y),
        Vertex(LEFT, x + 1, y),
        Vertex(TOP, x + 1, y),
        Vertex(BOTTOM, x + 1, y + 1),
        Vertex(LEFT, x + 1, y + 1),
        Vertex(RIGHT, x, y + 1),
        Vertex(BOTTOM, x, y + 1),
    )


def _index(coords):
    return {v: i for i, v in enumerate(coords)}


def _grid_symmetries(coords, index_of, m, n):
    """Left-right and top-bottom reflections of the grid, as permutations."""
    flip_h = {TOP: TOP, BOTTOM: BOTTOM, RIGHT: LEFT, LEFT: RIGHT}
    flip_v = {TOP: BOTTOM, BOTTOM: TOP, RIGHT: RIGHT, LEFT: LEFT}

    def horizontal(v):
        return Vertex(flip_h[v.a], n - v.x, v.y)

    def vertical(v):
        return Vertex(flip_v[v.a], v.x, m - v.y)

    maps = [horizontal, vertical, lambda v: horizontal(vertical(v))]
    perms = []
    for fn in maps:
        perm = tuple(index_of[fn(v)] for v in coords)
        if perm != tuple(range(len(coords))) and perm not in perms:
            perms.append(perm)
    return tuple(perms)


def build_grid(m: int, n: int) -> FiniteGraph:
    """The induced graph on m rows and n columns of octagons.

    The vertex count is always 2m + n(4m + 2).
    """
    if m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be >= 1, got m={m}, n={n}")
    verts = set()
    for y in range(m):
        for x in range(n):
            verts.update(octagon_ring(x, y))
    coords = tuple(sorted(verts, key=lambda v: (v.y, v.x, v.a)))
    index_of = _index(coords)
    adjacency = tuple(
        tuple(index_of[w] for w in neighbors(v) if w in index_of) for v in coords
    )
    return FiniteGraph(
        kind="grid",
        coords=coords,
        index_of=index_of,
        adjacency=adjacency,
        m=m,
        n=n,
        symmetries=_grid_symmetries(coords, index_of, m, n),
    )


def build_torus(basis) -> FiniteGraph:
    """The quotient of the infinite tiling by the lattice spanned by the
    basis, acting on square coordinates. Rejects a singular basis."""
    b1, b2 = basis
    lat = PeriodLattice.from_basis(b1, b2)
    coords = tuple(
        Vertex(a, x, y) for x, y in lat.squares() for a in range(4)
    )
    # squares() runs (y, x) outermost, a innermost: (y, x, a) order
    index_of = _index(coords)

    def canon(v):
        x, y = lat.reduce(v.x, v.y)
        return Vertex(v.a, x, y)

    adjacency = tuple(
        tuple(index_of[canon(w)] for w in neighbors(v)) for v in coords
    )
    translations = []
    identity = tuple(range(len(coords)))
    for ty in range(lat.d2):
        for tx in range(lat.d1):
            if tx == 0 and ty == 0:
                continue
            perm = tuple(
                index_of[canon(Vertex(v.a, v.x + tx, v.y + ty))] for v in coords
            )
            if perm != identity:
                translations.append(perm)
    return FiniteGraph(
        kind="torus",
        coords=coords,
        index_of=index_of,
        adjacency=adjacency,
        basis=(tuple(b1), tuple(b2)),
        lattice=lat,
        symmetries=tuple(translations),
    )


def bfs_distances(g: FiniteGraph, source: int, cap: int = None):
    """Distances from one vertex; UNREACHED marks vertices beyond the cap
    (or off the component)."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} out of range 0..{g.vertex_count - 1}")
    dist = [UNREACHED] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        if cap is not None and d > cap:
            continue
        for w in g.adjacency[u]:
            if dist[w] == UNREACHED:
                dist[w] = d
                queue.append(w)
    return dist


def eccentricity(g: FiniteGraph, v: int) -> int:
    """Greatest distance from v; rejects disconnected graphs."""
    dist = bfs_distances(g, v)
    worst = max(dist)
    if UNREACHED in dist:
        raise ValueError("graph is disconnected")
    return worst


def radius(g: FiniteGraph) -> int:
    """Smallest eccentricity over all vertices."""
    return min(eccentricity(g, v) for v in range(g.vertex_count))


def graph_to_json(g: FiniteGraph) -> dict:
    doc = {
        "kind": g.kind,
        "vertices": [v.to_json() for v in g.coords],
        "edges": [[i, j] for i, j in g.edges()],
    }
    if g.kind == "grid":
        doc["m"] = g.m
        doc["n"] = g.n
    else:
        doc["basis"] = [list(g.basis[0]), list(g.basis[1])]
    return doc


def graph_from_json(doc: dict) -> FiniteGraph:
    """Rebuild a graph from its export, cross-checking the stored labels."""
    kind = doc.get("kind")
    if kind == "grid":
        g = build_grid(int(doc["m"]), int(doc["n"]))
    elif kind == "torus":
        b1, b2 = doc["basis"]
        g = build_torus(((int(b1[0]), int(b1[1])), (int(b2[0]), int(b2[1]))))
    else:
        raise ValueError(f"unknown graph kind: {kind!r}")
    stored = [vertex_from_json(item) for item in doc["vertices"]]
    if tuple(stored) != g.coords:
        raise ValueError("vertex list does not match the declared dimensions")
    if "edges" in doc:
        if sorted((min(i, j), max(i, j)) for i, j in doc["edges"]) != g.edges():
            raise ValueError("edge list does not match the declared dimensions")
    return g
