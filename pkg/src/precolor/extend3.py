"""Extension when few precolored pairs lie within distance three.

If at most ``k(k+1)/2`` pairs of precolored vertices are within distance
three, a precoloring into ``1..r+1`` of an ``r``-colorable graph extends to a
coloring into ``1..r+k``.  The precolored set is split into ``k`` classes that
are pairwise at distance four or more plus at most one leftover vertex; the
leftover is absorbed by relabeling the base coloring, and each class is then
fixed in turn with one fresh color.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from .graph import Coloring, Graph, Pair, find_conflict, pairs_within, validate_precoloring
from .oracle import exact_k_colorable

log = logging.getLogger(__name__)


class BudgetError(ValueError):
    """Raised when the pair budget for the requested number of extra colors is exceeded."""


@dataclass(frozen=True)
class ClassPartition:
    """``singleton`` holds at most one vertex; every class in ``classes`` is
    independent in the auxiliary graph."""

    singleton: frozenset[int]
    classes: tuple[frozenset[int], ...]

    def members(self) -> set[int]:
        out = set(self.singleton)
        for c in self.classes:
            out |= c
        return out


@dataclass(frozen=True)
class AuxGraph:
    vertices: tuple[int, ...]
    edges: frozenset[Pair]


def conflict_graph(g: Graph, p, k: int = 3) -> AuxGraph:
    """Precolored vertices joined when they lie within distance ``k``."""
    members = tuple(sorted(set(p)))
    return AuxGraph(members, pairs_within(g, members, k))


def min_classes(num_pairs: int) -> int:
    """Least ``k >= 1`` with ``num_pairs <= k(k+1)/2``."""
    k = 1
    while k * (k + 1) // 2 < num_pairs:
        k += 1
    return k


def almost_k_coloring(h: AuxGraph, k: int) -> ClassPartition:
    """Split ``h`` into ``k`` independent classes plus at most one singleton.

    If ``h`` is ``k``-colorable the singleton is empty.  Otherwise a vertex of
    maximum degree (lowest id on ties) is set aside, the rest is split with
    ``k-1`` classes, any singleton from that split becomes an ordinary class,
    and the set-aside vertex becomes the new singleton.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if len(h.edges) > k * (k + 1) // 2:
        raise BudgetError(f"{len(h.edges)} pairs exceed k(k+1)/2 = {k * (k + 1) // 2}")
    return _almost(set(h.vertices), set(h.edges), k)


def _almost(vertices: set[int], edges: set[Pair], k: int) -> ClassPartition:
    touched = sorted({v for e in edges for v in e})
    isolated = vertices - set(touched)
    classes = _try_color(touched, edges, k)
    if classes is not None:
        classes[0] |= isolated
        return ClassPartition(frozenset(), tuple(frozenset(c) for c in classes))

    deg = {v: 0 for v in touched}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    x = min(touched, key=lambda v: (-deg[v], v))
    rest_edges = {e for e in edges if x not in e}
    rest = vertices - {x}
    if k == 1:
        assert not rest_edges
        return ClassPartition(frozenset([x]), (frozenset(rest),))
    assert len(rest_edges) <= (k - 1) * k // 2
    sub = _almost(rest, rest_edges, k - 1)
    classes = list(sub.classes)
    if sub.singleton:
        classes.append(sub.singleton)
    return ClassPartition(frozenset([x]), tuple(classes))


def _try_color(touched: list[int], edges: set[Pair], k: int) -> list[set[int]] | None:
    index = {v: i for i, v in enumerate(touched)}
    small = Graph.from_edges(len(touched), ((index[a], index[b]) for a, b in edges))
    f = exact_k_colorable(small, k)
    if f is None:
        return None
    classes: list[set[int]] = [set() for _ in range(k)]
    for v in touched:
        classes[f[index[v]] - 1].add(v)
    return classes


def albertson_step(
    g: Graph, f: Mapping[int, int], stage: set[int], d: Mapping[int, int], fresh: int
) -> Coloring:
    """Give every stage vertex its precolor, moving clashing neighbours to ``fresh``.

    Stage vertices must be pairwise at distance at least four, so the
    recolored neighbourhoods never touch.
    """
    if fresh in set(f.values()):
        raise ValueError(f"fresh color {fresh} is already in use")
    close = pairs_within(g, stage, 3)
    if close:
        raise ValueError(f"stage vertices {sorted(close)[0]} are within distance three")
    out = dict(f)
    for x in sorted(stage):
        want = d[x]
        if f[x] == want:
            continue
        for v in g.adj[x]:
            if f[v] == want:
                out[v] = fresh
        out[x] = want
    return out


@dataclass(frozen=True)
class Distance3Plan:
    k: int
    pairs: int
    partition: ClassPartition
    base: Coloring
    fresh: tuple[int, ...]


def plan_distance3(
    g: Graph, d: Mapping[int, int], base: Mapping[int, int], k: int | None = None, r: int | None = None
) -> Distance3Plan:
    """Check preconditions, split the precolored set and align the base coloring.

    The singleton vertex ``u`` must already carry its precolor in the base.
    If ``d(u) <= r`` two base classes swap labels.  If ``d(u) = r+1`` the base
    class of ``u`` is relabeled ``r+1`` and its old label becomes the first
    fresh color, so the palette stays ``1..r+k`` either way.
    """
    validate_precoloring(g, d)
    if r is None:
        r = max(base.values(), default=1)
    if any(not 1 <= c <= r for c in base.values()) or len(base) != g.n:
        raise ValueError(f"base must color every vertex with colors in 1..{r}")
    bad = find_conflict(g, base)
    if bad is not None:
        raise ValueError(f"base coloring is not proper on edge {bad}")
    if any(not 1 <= c <= r + 1 for c in d.values()):
        raise ValueError(f"precolors must lie in 1..{r + 1}")
    aux = conflict_graph(g, d, 3)
    if k is None:
        k = min_classes(len(aux.edges))
    part = almost_k_coloring(aux, k)

    aligned = dict(base)
    fresh = list(range(r + 1, r + k + 1))
    if part.singleton:
        (u,) = part.singleton
        have, want = base[u], d[u]
        if want <= r:
            swap = {have: want, want: have}
            aligned = {v: swap.get(c, c) for v, c in base.items()}
        else:
            aligned = {v: (want if c == have else c) for v, c in base.items()}
            fresh = [have, *range(r + 2, r + k + 1)]
        log.debug("singleton %d aligned to color %d", u, want)
    return Distance3Plan(k, len(aux.edges), part, aligned, tuple(fresh))


def extend_distance3(
    g: Graph, d: Mapping[int, int], base: Mapping[int, int], k: int | None = None, r: int | None = None
) -> Coloring:
    """Extend ``d`` to a proper coloring into ``1..r+k``.

    ``k=None`` picks the least ``k`` that the pair budget allows.
    """
    plan = plan_distance3(g, d, base, k, r)
    f = plan.base
    for stage, color in zip(plan.partition.classes, plan.fresh):
        f = albertson_step(g, f, set(stage), d, color)
    return f
