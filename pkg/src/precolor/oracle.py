"""Exact brute-force ground truth used to cross-check the pipelines.

Nothing in here is imported by the extension pipelines; every routine is a
second, independent implementation of a fact the pipelines rely on.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Mapping

from .graph import Coloring, Graph, Pair, pair, validate_precoloring

MAX_MATCHING_N = 64
MAX_BERGE_N = 16
_POLL_EVERY = 2048


class SearchCancelled(RuntimeError):
    """Raised when the caller's cancellation flag is set mid-search."""


def exact_k_colorable(
    g: Graph,
    k: int,
    d: Mapping[int, int] | None = None,
    cancel: threading.Event | None = None,
) -> Coloring | None:
    """A proper coloring of ``g`` with colors in ``1..k`` extending ``d``, or None.

    Plain backtracking over a fixed order: precolored vertices first, then the
    rest by degree descending (ties by id).  Colors are tried lowest first.
    Colors not fixed by ``d`` are interchangeable, so a new one is opened only
    after every smaller unfixed color is already in use.
    """
    d = dict(d or {})
    validate_precoloring(g, d)
    if any(c > k for c in d.values()):
        raise ValueError(f"precoloring uses a color above k={k}")
    if g.n == 0:
        return {}
    if k < 1:
        return None

    fixed_colors = set(d.values())
    free_rank = {}
    for c in range(1, k + 1):
        if c not in fixed_colors:
            free_rank[c] = len(free_rank)

    order = sorted(d) + sorted(
        (v for v in range(g.n) if v not in d), key=lambda v: (-g.degree(v), v)
    )
    adj = [tuple(s) for s in g.adj]
    # blocked[v][c]: number of colored neighbours of v holding color c
    blocked = [[0] * (k + 1) for _ in range(g.n)]
    nblocked = [0] * g.n
    color = [0] * g.n
    steps = 0

    def place(v: int, c: int) -> bool:
        color[v] = c
        ok = True
        for w in adj[v]:
            row = blocked[w]
            if row[c] == 0:
                nblocked[w] += 1
                if nblocked[w] == k and color[w] == 0:
                    ok = False
            row[c] += 1
        return ok

    def unplace(v: int, c: int) -> None:
        color[v] = 0
        for w in adj[v]:
            row = blocked[w]
            row[c] -= 1
            if row[c] == 0:
                nblocked[w] -= 1

    def search(i: int, free_used: int) -> bool:
        nonlocal steps
        steps += 1
        if cancel is not None and steps % _POLL_EVERY == 1 and cancel.is_set():
            raise SearchCancelled("colorability search cancelled")
        if i == len(order):
            return True
        v = order[i]
        if v in d:
            candidates: Iterable[int] = (d[v],)
        else:
            candidates = range(1, k + 1)
        for c in candidates:
            if blocked[v][c]:
                continue
            rank = free_rank.get(c)
            if rank is not None and rank > free_used:
                continue
            nxt = free_used + 1 if rank is not None and rank == free_used else free_used
            ok = place(v, c)
            if ok and search(i + 1, nxt):
                return True
            unplace(v, c)
        return False

    if not search(0, 0):
        return None
    return {v: color[v] for v in range(g.n)}


def min_extension_colors(
    g: Graph,
    d: Mapping[int, int],
    cap: int,
    cancel: threading.Event | None = None,
) -> tuple[int, Coloring] | None:
    """Least ``m <= cap`` such that ``d`` extends to a coloring into ``1..m``."""
    validate_precoloring(g, d)
    top = max(d.values(), default=0)
    if cap < top:
        raise ValueError(f"cap {cap} is below the largest precolor {top}")
    if g.n == 0:
        return (0, {})
    for m in range(max(1, top), cap + 1):
        f = exact_k_colorable(g, m, d, cancel=cancel)
        if f is not None:
            return (m, f)
    return None


def chromatic_number(g: Graph, cancel: threading.Event | None = None) -> tuple[int, Coloring]:
    found = min_extension_colors(g, {}, max(g.n, 0), cancel=cancel)
    assert found is not None
    return found


def _check_pairs(n: int, edges: Iterable[tuple[int, int]]) -> list[Pair]:
    out = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        out.add(pair(u, v))
    return sorted(out)


def max_matching_exact(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[Pair]:
    """Maximum-cardinality matching by Edmonds' blossom search."""
    if n > MAX_MATCHING_N:
        raise ValueError(f"n={n} exceeds the oracle limit of {MAX_MATCHING_N}")
    es = _check_pairs(n, edges)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in es:
        adj[u].append(v)
        adj[v].append(u)
    mate = [-1] * n

    # greedy start; the blossom search only has to fix what greedy missed
    for u, v in es:
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark(v, b, to, blossom)
                    mark(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        x = to
                        while x != -1:
                            px = parent[x]
                            nxt = mate[px]
                            mate[x], mate[px] = px, x
                            x = nxt
                        return True
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1 and adj[v]:
            augment_from(v)
    return frozenset(pair(v, mate[v]) for v in range(n) if mate[v] > v)


def max_matching_brute(n: int, edges: Iterable[tuple[int, int]]) -> int:
    """Size of a maximum matching by trying every edge subset branch (tiny n only)."""
    es = _check_pairs(n, edges)

    def best(i: int, used: int) -> int:
        if i == len(es):
            return 0
        u, v = es[i]
        skip = best(i + 1, used)
        if used >> u & 1 or used >> v & 1:
            return skip
        return max(skip, 1 + best(i + 1, used | 1 << u | 1 << v))

    return best(0, 0)


def odd_components(n: int, adjmask: list[int], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            grow = adjmask[bit.bit_length() - 1] & rest & ~comp
            comp |= grow
            frontier |= grow
        rest &= ~comp
        count += bin(comp).count("1") & 1
    return count


def berge_deficiency(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, frozenset[int]]:
    """``max over S of o(G-S) - |S|`` with a maximizing ``S``, by subset enumeration."""
    if n > MAX_BERGE_N:
        raise ValueError(f"n={n} exceeds the subset-enumeration limit of {MAX_BERGE_N}")
    es = _check_pairs(n, edges)
    adjmask = [0] * n
    for u, v in es:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u
    full = (1 << n) - 1
    best, best_s = None, 0
    for s in range(1 << n):
        val = odd_components(n, adjmask, full & ~s) - bin(s).count("1")
        if best is None or val > best:
            best, best_s = val, s
    return best, frozenset(v for v in range(n) if best_s >> v & 1)
