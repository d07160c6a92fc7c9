"""The complete graph on the color set, its ordered edge partition and good matchings.

Colors are the vertices ``1..num_colors``.  Each color pair carries the
number ``phi`` of distance-two precolored pairs that realize it; pairs with
``phi == 0``, ``1`` and ``>= 2`` form ``E0``, ``E1`` and ``E2``.  A matching is
*good* when it avoids ``E2`` and uses at most one ``E1`` edge.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .graph import Graph, Pair, pair, pairs_within

Matching = frozenset[Pair]


@dataclass(frozen=True)
class OrderedPartition:
    num_colors: int
    phi: Mapping[Pair, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (i, j), c in self.phi.items():
            if not (1 <= i < j <= self.num_colors):
                raise ValueError(f"color pair ({i}, {j}) outside 1..{self.num_colors}")
            if c < 0:
                raise ValueError(f"negative multiplicity on ({i}, {j})")

    @classmethod
    def from_classes(
        cls, num_colors: int, e1: Iterable[tuple[int, int]] = (), e2: Iterable[tuple[int, int]] = ()
    ) -> OrderedPartition:
        phi = {pair(*e): 1 for e in e1}
        phi.update({pair(*e): 2 for e in e2})
        return cls(num_colors, phi)

    def all_pairs(self) -> list[Pair]:
        return list(combinations(range(1, self.num_colors + 1), 2))

    def mult(self, i: int, j: int) -> int:
        return self.phi.get(pair(i, j), 0)

    def cls(self, i: int, j: int) -> int:
        """0, 1 or 2: which of ``E0``, ``E1``, ``E2`` the pair belongs to."""
        return min(self.mult(i, j), 2)

    @property
    def e0(self) -> frozenset[Pair]:
        return frozenset(e for e in self.all_pairs() if self.mult(*e) == 0)

    @property
    def e1(self) -> frozenset[Pair]:
        return frozenset(e for e, c in self.phi.items() if c == 1)

    @property
    def e2(self) -> frozenset[Pair]:
        return frozenset(e for e, c in self.phi.items() if c >= 2)

    def phi_table(self) -> list[tuple[int, int, int]]:
        return [(i, j, c) for (i, j), c in sorted(self.phi.items()) if c]


def build_partition(g: Graph, d: Mapping[int, int], num_colors: int) -> OrderedPartition:
    """Count, for each color pair, the distance-two precolored pairs realizing it.

    Equal-colored pairs are skipped; they do not correspond to an edge of the
    color graph.
    """
    bad = [c for c in d.values() if not 1 <= c <= num_colors]
    if bad:
        raise ValueError(f"precolor {bad[0]} outside 1..{num_colors}")
    phi: dict[Pair, int] = {}
    for x, y in pairs_within(g, d, 2):
        if d[x] != d[y]:
            e = pair(d[x], d[y])
            phi[e] = phi.get(e, 0) + 1
    return OrderedPartition(num_colors, phi)


def weight(e: OrderedPartition) -> int:
    return len(e.e1) + 2 * len(e.e2)


def is_matching(m: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in m:
        if u == v or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_good(m: Iterable[tuple[int, int]], e: OrderedPartition) -> bool:
    m = list(m)
    if not is_matching(m):
        raise ValueError("edge set is not a matching")
    classes = [e.cls(u, v) for u, v in m]
    return 2 not in classes and classes.count(1) <= 1


def one_factorization(n: int) -> list[list[Pair]]:
    """Circle-method 1-factorization of ``K_n`` on ``0..n-1`` (``n`` even).

    Vertex ``n-1`` stays fixed; round ``r`` pairs it with ``r`` and pairs
    ``r+i`` with ``r-i`` (mod ``n-1``).
    """
    if n < 2 or n % 2:
        raise ValueError(f"1-factorization needs an even n >= 2, got {n}")
    m = n - 1
    rounds = []
    for r in range(m):
        factor = [pair(r, n - 1)]
        factor += [pair((r + i) % m, (r - i) % m) for i in range(1, n // 2)]
        rounds.append(sorted(factor))
    return rounds


def factor_scan(e: OrderedPartition) -> Matching | None:
    """First good perfect matching among the circle-method factors of the color graph."""
    for factor in one_factorization(e.num_colors):
        shifted = [(u + 1, v + 1) for u, v in factor]
        if is_good(shifted, e):
            return frozenset(shifted)
    return None


def _max_matching(vertices: Iterable[int], edges: Iterable[Pair]) -> list[Pair]:
    h = nx.Graph()
    h.add_nodes_from(vertices)
    h.add_edges_from(edges)
    return sorted(pair(u, v) for u, v in nx.max_weight_matching(h, maxcardinality=True))


def find_good_matching(e: OrderedPartition, target: int) -> Matching | None:
    """A good matching with exactly ``target`` edges, or None if there is none.

    Either all edges come from ``E0``, or exactly one ``E1`` edge is used and
    the rest come from ``E0`` avoiding its endpoints; both cases reduce to a
    maximum matching in ``E0``.
    """
    if target < 0 or target > e.num_colors // 2:
        raise ValueError(f"target {target} outside 0..{e.num_colors // 2}")
    if target == 0:
        return frozenset()
    colors = range(1, e.num_colors + 1)
    e0 = sorted(e.e0)
    base = _max_matching(colors, e0)
    if len(base) >= target:
        return frozenset(base[:target])
    for f in sorted(e.e1):
        a, b = f
        rest = [x for x in e0 if a not in x and b not in x]
        sub = _max_matching((c for c in colors if c not in f), rest)
        if len(sub) >= target - 1:
            return frozenset([f, *sub[: target - 1]])
    return None


def augmentation_hypotheses(m: Iterable[Pair], e: OrderedPartition) -> tuple[bool, bool]:
    """Whether each of the two sufficient conditions for augmenting ``m`` holds."""
    m = [pair(*x) for x in m]
    covered = {v for x in m for v in x}
    rest = [c for c in range(1, e.num_colors + 1) if c not in covered]
    inside = any(e.cls(a, b) < 2 for a, b in combinations(rest, 2))
    cross = [e.cls(u, x) for u in covered for x in rest]
    return inside, cross.count(0) > cross.count(2)


def augment_good_matching(m: Iterable[Pair], e: OrderedPartition) -> Matching | None:
    """Grow an ``E0`` matching by one edge while keeping it good.

    Works when some edge among the uncovered colors ``X`` is not in ``E2``, or
    when more ``E0`` than ``E2`` edges join covered colors to ``X``; returns
    None otherwise.
    """
    m = sorted(pair(*x) for x in m)
    if not is_matching(m):
        raise ValueError("edge set is not a matching")
    if any(e.cls(*x) != 0 for x in m):
        raise ValueError("matching is not contained in E0")
    if len(m) >= e.num_colors // 2:
        raise ValueError("matching already has maximum order")
    covered = {v for x in m for v in x}
    xs = [c for c in range(1, e.num_colors + 1) if c not in covered]

    for a, b in combinations(xs, 2):
        if e.cls(a, b) < 2:
            return frozenset([*m, (a, b)])

    cross = [e.cls(u, x) for u in covered for x in xs]
    if cross.count(0) <= cross.count(2):
        return None

    for uv in m:
        to_x = [e.cls(w, x) for w in uv for x in xs]
        if to_x.count(2) >= to_x.count(0):
            continue
        others = [y for y in m if y != uv]
        for u, v in (uv, uv[::-1]):
            zero_x = [x for x in xs if e.cls(u, x) == 0]
            if not zero_x:
                continue
            x0 = zero_x[0]
            for x in xs:
                if x != x0 and e.cls(v, x) < 2:
                    return frozenset([*others, pair(u, x0), pair(v, x)])
            x1 = next(x for x in xs if x != x0)
            return frozenset([*others, pair(u, x1), pair(v, x0)])
    raise AssertionError("augmentation hypothesis held but no swap was found")


def h(n: int, t: int) -> int:
    """Largest edge count of an ``n``-vertex graph with no matching of order ``t``."""
    if not 1 <= t <= n // 2:
        raise ValueError(f"t={t} outside 1..{n // 2}")
    if 5 * t < 2 * n + 2:
        num = (t - 1) * (2 * n - t)
        assert num % 2 == 0
        return num // 2
    return (t - 1) * (2 * t - 1)


def extremal_graphs(n: int, t: int) -> tuple[Graph, Graph]:
    """The two candidates for ``h``: a ``(2t-1)``-clique plus isolated vertices,
    and a ``(t-1)``-clique joined to an independent set of ``n-t+1`` vertices."""
    if not 1 <= t <= n // 2:
        raise ValueError(f"t={t} outside 1..{n // 2}")
    clique = Graph.from_edges(n, combinations(range(2 * t - 1), 2))
    core = range(t - 1)
    split = list(combinations(core, 2)) + [(a, b) for a in core for b in range(t - 1, n)]
    return clique, Graph.from_edges(n, split)


def even_weight_bound(n: int) -> int:
    return 2 * (n - 1)


def odd_weight_bound(n: int) -> int:
    return min(3 * (n - 1), (n + 3) * (n + 5) // 8)


def large_k_weight_bound(r: int, k: int) -> int:
    """Strict upper bound on the weight that guarantees a good matching of order r (k > r >= 2)."""
    if not k > r >= 2:
        raise ValueError(f"needs k > r >= 2, got r={r}, k={k}")
    n = r + k
    complement = n * (n - 1) // 2 - h(n, r - 1)
    return min(complement, (k - r + 2) * (k + r - 1))
