"""Simple undirected graphs, distance-bounded pair sets and coloring checks.

Vertices are the dense ids ``0..n-1``.  Colorings and precolorings are plain
``dict[int, int]`` maps from vertex id to a positive color id.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

Pair = tuple[int, int]
Coloring = dict[int, int]
Precoloring = dict[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex ids."""


class PrecoloringError(ValueError):
    """Raised when a precoloring is not proper on the subgraph it colors."""

    def __init__(self, message: str, pair: Pair | None = None):
        super().__init__(message)
        self.pair = pair


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def edges(self) -> list[Pair]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"invalid vertex id {v!r} (graph has {self.n} vertices)")

    def induced_edges(self, vertices: Iterable[int]) -> list[Pair]:
        vs = set(vertices)
        return sorted((u, v) for u in vs for v in self.adj[u] if u < v and v in vs)


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int | None]:
    """Shortest-path lengths from ``source``; unreachable vertices map to None.

    With ``limit`` the search stops at that depth and anything farther is
    reported as None as well.
    """
    g.check_vertex(source)
    dist: dict[int, int | None] = dict.fromkeys(range(g.n))
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return dist


def pairs_within(g: Graph, p: Iterable[int], k: int) -> frozenset[Pair]:
    """All pairs of distinct vertices of ``p`` at distance at most ``k``."""
    if k < 1:
        raise ValueError(f"distance bound must be positive, got {k}")
    members = sorted(set(p))
    for v in members:
        g.check_vertex(v)
    inside = set(members)
    found: set[Pair] = set()
    for x in members:
        dist = bfs_distances(g, x, limit=k)
        for y in inside:
            if y > x and dist[y] is not None:
                found.add((x, y))
    return frozenset(found)


def find_conflict(g: Graph, f: Mapping[int, int]) -> Pair | None:
    """First monochromatic edge of ``f`` in edge order, or None."""
    missing = [v for v in range(g.n) if v not in f]
    if missing:
        raise GraphError(f"coloring misses vertex {missing[0]}")
    for u, v in g.edges():
        if f[u] == f[v]:
            return (u, v)
    return None


def is_proper(g: Graph, f: Mapping[int, int]) -> bool:
    return find_conflict(g, f) is None


def extends(f: Mapping[int, int], d: Mapping[int, int]) -> bool:
    return all(v in f and f[v] == c for v, c in d.items())


def precoloring_violation(g: Graph, d: Mapping[int, int]) -> Pair | None:
    for v, c in d.items():
        g.check_vertex(v)
        if not isinstance(c, int) or c < 1:
            raise PrecoloringError(f"vertex {v} has non-positive color {c!r}")
    for u, v in g.induced_edges(d):
        if d[u] == d[v]:
            return (u, v)
    return None


def validate_precoloring(g: Graph, d: Mapping[int, int]) -> None:
    """Raise :class:`PrecoloringError` unless ``d`` is proper on ``G[P]``."""
    bad = precoloring_violation(g, d)
    if bad is not None:
        u, v = bad
        raise PrecoloringError(
            f"adjacent precolored vertices {u} and {v} share color {d[u]}", bad
        )


def color_count(f: Mapping[int, int]) -> int:
    return len(set(f.values()))


def color_classes(f: Mapping[int, int]) -> dict[int, set[int]]:
    classes: dict[int, set[int]] = {}
    for v, c in f.items():
        classes.setdefault(c, set()).add(v)
    return classes


# small constructors used by tests, generators and the oracle corpus


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def greedy_extend(g: Graph, d: Mapping[int, int]) -> Coloring:
    """Extend ``d`` greedily, largest degree first, with no cap on colors."""
    f = dict(d)
    for v in sorted((v for v in range(g.n) if v not in d), key=lambda v: (-g.degree(v), v)):
        taken = {f[w] for w in g.adj[v] if w in f}
        c = 1
        while c in taken:
            c += 1
        f[v] = c
    return f
