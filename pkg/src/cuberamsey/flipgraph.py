"""The graph on pair-free n-subsets of [2n] (transversals), joined when
two of them differ by swapping one element for its partner, equivalently
when their union has n+1 elements.  Diagnostics: bipartiteness via
breadth-first layering, connectivity, and agreement of the bipartition
with the element-sum parity classes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .lattice import CapacityError, ElementSet, element_sum_parity
from .properties import transversal_masks

MAX_FLIP_N = 20


@dataclass(frozen=True)
class FlipGraph:
    """Vertices are encoded transversal masks, ascending; edges are
    (u, v) pairs with u < v, sorted."""

    n: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def degree_histogram(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        hist: dict[int, int] = {}
        for d in deg.values():
            hist[d] = hist.get(d, 0) + 1
        return hist


@dataclass(frozen=True)
class FlipGraphReport:
    bipartite: bool
    connected: bool
    odd_class_size: int
    even_class_size: int
    matches_parity: bool


def build_flip_graph(n: int) -> FlipGraph:
    if not 1 <= n <= MAX_FLIP_N:
        raise CapacityError(f"flip graph supports 1 <= n <= {MAX_FLIP_N}, got {n}")
    vertices = tuple(transversal_masks(n))
    edges = []
    for t in vertices:
        for i in range(n):
            u = t ^ (3 << (2 * i))
            if u > t:
                edges.append((t, u))
    return FlipGraph(n, vertices, tuple(sorted(edges)))


def check_bipartition(graph: FlipGraph) -> FlipGraphReport:
    """Breadth-first 2-coloring from the lowest vertex of each component,
    then comparison of the resulting sides with the parity classes."""
    adj: dict[int, list[int]] = {v: [] for v in graph.vertices}
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    side: dict[int, int] = {}
    bipartite = True
    components = 0
    for start in graph.vertices:
        if start in side:
            continue
        components += 1
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in side:
                    side[w] = side[v] ^ 1
                    queue.append(w)
                elif side[w] == side[v]:
                    bipartite = False
    m = 2 * graph.n
    odd = frozenset(
        v for v in graph.vertices if element_sum_parity(ElementSet(v, m)) == "odd"
    )
    even = frozenset(graph.vertices) - odd
    side0 = frozenset(v for v in graph.vertices if side[v] == 0)
    side1 = frozenset(graph.vertices) - side0
    matches = bipartite and {side0, side1} == {odd, even}
    return FlipGraphReport(
        bipartite=bipartite,
        connected=components == 1,
        odd_class_size=len(odd),
        even_class_size=len(even),
        matches_parity=matches,
    )


def export_edges(graph: FlipGraph) -> str:
    """One edge per line, the two encoded vertex values ascending."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges)
