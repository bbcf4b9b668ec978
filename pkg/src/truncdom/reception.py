"""Signal reception and broadcast validity on finite graphs.

A broadcast set is a set of towers, each transmitting with strength t. A
tower delivers t - d signal to every vertex at distance d < t from it, and
nothing beyond. Reception is additive over towers; the set is a valid
(t, r) broadcast when every vertex of the graph receives at least r.

Reception is accumulated with one depth-(t-1) search per tower rather than
from all-pairs distances, so sparse sets on large graphs stay cheap.
"""

from dataclasses import dataclass

from .grid import FiniteGraph
from .lattice import vertex_from_json


@dataclass(frozen=True)
class BroadcastSet:
    """Tower indices into some FiniteGraph plus their common strength t."""

    vertices: frozenset
    t: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if self.t < 1:
            raise ValueError("transmission strength t must be >= 1")

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class BroadcastCheck:
    valid: bool
    deficient: tuple  # (vertex index, reception) pairs, empty when valid


def _tower_reach(g: FiniteGraph, src: int, t: int):
    """(vertex, distance) pairs within distance t-1 of src."""
    dist = {src: 0}
    frontier = [src]
    yield src, 0
    for d in range(1, t):
        grown = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = d
                    grown.append(w)
                    yield w, d
        frontier = grown


def reception_map(g: FiniteGraph, bset: BroadcastSet):
    """Per-vertex reception: sum over towers within reach of (t - distance)."""
    t = bset.t
    values = [0] * g.vertex_count
    for v in sorted(bset.vertices):
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"tower index {v} out of range 0..{g.vertex_count - 1}")
        for u, d in _tower_reach(g, v, t):
            values[u] += t - d
    return values


def is_broadcast(g: FiniteGraph, bset: BroadcastSet, r: int) -> BroadcastCheck:
    """Decide whether the set is a valid (t, r) broadcast of g.

    Only 1 <= r <= t is meaningful; anything else is rejected. On failure
    every deficient vertex is reported with the reception it actually got.
    """
    if not 1 <= r <= bset.t:
        raise ValueError(f"need 1 <= r <= t, got r={r}, t={bset.t}")
    values = reception_map(g, bset)
    deficient = tuple((i, val) for i, val in enumerate(values) if val < r)
    return BroadcastCheck(valid=not deficient, deficient=deficient)


def broadcast_to_json(g: FiniteGraph, bset: BroadcastSet) -> dict:
    labels = sorted(g.coords[i] for i in bset.vertices)
    return {"t": bset.t, "vertices": [v.to_json() for v in labels]}


def broadcast_from_json(g: FiniteGraph, doc: dict) -> BroadcastSet:
    try:
        t = int(doc["t"])
        items = doc["vertices"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed broadcast set document: {exc}") from exc
    indices = set()
    for item in items:
        v = vertex_from_json(item)
        if v not in g.index_of:
            raise ValueError(f"vertex {v.to_json()} is not in the graph")
        indices.add(g.index_of[v])
    return BroadcastSet(frozenset(indices), t)
