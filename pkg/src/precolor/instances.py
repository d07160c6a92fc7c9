"""Instance generators: the tightness constructions and seeded random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Coloring, Graph, bfs_distances, find_conflict, pairs_within, precoloring_violation


class GenerationError(RuntimeError):
    """Raised when random sampling runs out of retries."""


@dataclass(frozen=True)
class Instance:
    graph: Graph
    p: frozenset[int]
    d: dict[int, int]
    r: int
    k: int
    base: Coloring
    q: int | None = None
    expected: dict = field(default_factory=dict)

    def check(self) -> None:
        """Assert the instance is internally consistent."""
        g = self.graph
        assert set(self.d) == set(self.p)
        assert precoloring_violation(g, self.d) is None
        assert find_conflict(g, self.base) is None
        assert set(self.base.values()) <= set(range(1, self.r + 1))
        for key, dist in (("d1", 1), ("d2", 2), ("d3", 3)):
            if key in self.expected:
                assert len(pairs_within(g, self.p, dist)) == self.expected[key], key

    def metadata(self) -> dict:
        return {"r": self.r, "k": self.k, "q": self.q, "n": self.graph.n, **self.expected}


def _counts(g: Graph, p) -> dict[str, int]:
    return {f"d{i}": len(pairs_within(g, p, i)) for i in (1, 2, 3)}


def _check_small_k(r: int, k: int, q: int, parity: int) -> None:
    if r < 2 or k < 1 or k > r:
        raise ValueError(f"needs r >= 2 and 1 <= k <= r, got r={r}, k={k}")
    if (r + k) % 2 != parity:
        raise ValueError(f"r+k={r + k} has the wrong parity for this construction")
    if q < r + k:
        raise ValueError(f"q must be at least r+k={r + k}, got {q}")


def gen_sharpness_even(r: int, k: int, q: int) -> Instance:
    """Tight instance for the even case: ``2(r+k-1)`` close pairs, no ``(3r+k)/2``-extension.

    Parts ``C_0..C_{r-1}`` of size ``q`` form a complete ``r``-partite graph.
    ``x_1`` and ``x_j`` share the hub ``C_0[j-2]``; ``y_1`` and ``y_j`` share
    ``C_i[j-2]`` for every ``i >= 1``.  Both ``x_j`` and ``y_j`` are
    precolored ``j``.
    """
    _check_small_k(r, k, q, 0)
    s = r + k
    part = [list(range(i * q, (i + 1) * q)) for i in range(r)]
    x = [None] + list(range(r * q, r * q + s))
    y = [None] + list(range(r * q + s, r * q + 2 * s))
    edges = [(a, b) for i in range(r) for j in range(i + 1, r) for a in part[i] for b in part[j]]
    for j in range(2, s + 1):
        hub = part[0][j - 2]
        edges += [(x[1], hub), (x[j], hub)]
        for i in range(1, r):
            hub = part[i][j - 2]
            edges += [(y[1], hub), (y[j], hub)]
    g = Graph.from_edges(r * q + 2 * s, edges)
    d = {x[j]: j for j in range(1, s + 1)} | {y[j]: j for j in range(1, s + 1)}
    base = {v: i + 1 for i in range(r) for v in part[i]}
    base |= {y[j]: 1 for j in range(1, s + 1)} | {x[j]: 2 for j in range(1, s + 1)}
    expected = _counts(g, d) | {"budget": (3 * r + k) // 2, "claimed_d2": 2 * (s - 1)}
    return Instance(g, frozenset(d), d, r, k, base, q, expected)


def gen_sharpness_odd(r: int, k: int, q: int) -> Instance:
    """Tight instance for the odd case: ``3(r+k-1)`` close pairs, no ``(3r+k+1)/2``-extension.

    ``C_0[0]`` is a hub for ``y_1, y_2, y_3``; ``C_0[j-3]`` joins ``y_j`` for
    ``j >= 4``.  In every other part ``C_i[0]`` is a hub for
    ``x_1, x_2, x_3`` and ``C_i[j-3]`` for ``x_1, x_2, x_3, x_j``.
    """
    _check_small_k(r, k, q, 1)
    s = r + k
    part = [list(range(i * q, (i + 1) * q)) for i in range(r)]
    x = [None] + list(range(r * q, r * q + s))
    y = [None] + list(range(r * q + s, r * q + 2 * s))
    edges = [(a, b) for i in range(r) for j in range(i + 1, r) for a in part[i] for b in part[j]]
    edges += [(y[t], part[0][0]) for t in (1, 2, 3)]
    edges += [(y[j], part[0][j - 3]) for j in range(4, s + 1)]
    for i in range(1, r):
        edges += [(x[t], part[i][0]) for t in (1, 2, 3)]
        for j in range(4, s + 1):
            edges += [(x[t], part[i][j - 3]) for t in (1, 2, 3, j)]
    g = Graph.from_edges(r * q + 2 * s, edges)
    d = {x[j]: j for j in range(1, s + 1)} | {y[j]: j for j in range(1, s + 1)}
    base = {v: i + 1 for i in range(r) for v in part[i]}
    base |= {x[j]: 1 for j in range(1, s + 1)} | {y[j]: 2 for j in range(1, s + 1)}
    expected = _counts(g, d) | {"budget": (3 * r + k + 1) // 2, "claimed_d2": 3 * (s - 1)}
    return Instance(g, frozenset(d), d, r, k, base, q, expected)


def gen_random(
    r: int,
    k: int,
    n: int,
    edge_prob: float,
    p_size: int,
    max_d2: int | None = None,
    max_d3: int | None = None,
    *,
    seed: int,
    d_colors: int | None = None,
    retries: int = 200,
) -> Instance:
    """Random graph with a planted ``r``-coloring and a budgeted precolored set.

    Edges only join different planted classes.  ``P`` is grown in random order,
    keeping a vertex only while the distance-two and distance-three pair counts
    stay within budget.  Precolors are drawn uniformly from ``1..d_colors``
    (default ``r+k``) avoiding colors of already-colored precolored neighbours.
    """
    if r < 1 or n < 1 or not 0 <= p_size <= n:
        raise ValueError("need r >= 1, n >= 1 and 0 <= p_size <= n")
    rng = random.Random(seed)
    d_colors = d_colors or r + k

    labels = [v % r for v in range(n)]
    rng.shuffle(labels)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if labels[u] != labels[v] and rng.random() < edge_prob
    ]
    g = Graph.from_edges(n, edges)
    base = {v: labels[v] + 1 for v in range(n)}

    for _ in range(retries):
        p = _grow_p(g, rng, p_size, max_d2, max_d3)
        if p is None:
            continue
        d = _random_precoloring(g, rng, p, d_colors)
        if d is None:
            continue
        inst = Instance(g, frozenset(p), d, r, k, base, None, _counts(g, p))
        return inst
    raise GenerationError(
        f"no precolored set of size {p_size} within budgets d2<={max_d2}, d3<={max_d3} "
        f"after {retries} attempts (seed {seed})"
    )


def _grow_p(g: Graph, rng: random.Random, size: int, max_d2, max_d3) -> list[int] | None:
    order = list(range(g.n))
    rng.shuffle(order)
    chosen: list[int] = []
    n2 = n3 = 0
    for v in order:
        if len(chosen) == size:
            break
        dist = bfs_distances(g, v, limit=3)
        close2 = sum(1 for u in chosen if dist[u] is not None and dist[u] <= 2)
        close3 = sum(1 for u in chosen if dist[u] is not None)
        if max_d2 is not None and n2 + close2 > max_d2:
            continue
        if max_d3 is not None and n3 + close3 > max_d3:
            continue
        chosen.append(v)
        n2 += close2
        n3 += close3
    return chosen if len(chosen) == size else None


def _random_precoloring(g: Graph, rng: random.Random, p: list[int], colors: int) -> dict[int, int] | None:
    d: dict[int, int] = {}
    order = list(p)
    rng.shuffle(order)
    for v in order:
        taken = {d[w] for w in g.adj[v] if w in d}
        options = [c for c in range(1, colors + 1) if c not in taken]
        if not options:
            return None
        d[v] = rng.choice(options)
    return dict(sorted(d.items()))
