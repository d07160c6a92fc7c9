"""Extension when few precolored pairs lie within distance two.

A good matching ``m_1 n_1, ..., m_s n_s`` on the color graph turns an
``r``-coloring ``g`` into an extension of ``d``: an uncolored vertex of base
class ``i`` takes ``m_i``, or ``n_i`` when it already sees a vertex
precolored ``m_i``.  Unmatched base classes (only when ``k <= r``) get
private colors above ``r+k``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass, field

from .colorgraph import (
    Matching,
    OrderedPartition,
    build_partition,
    even_weight_bound,
    find_good_matching,
    is_good,
    large_k_weight_bound,
    odd_weight_bound,
    weight,
)
from .graph import Coloring, Graph, find_conflict, pair, pairs_within, validate_precoloring


class GuaranteeNotApplicable(RuntimeError):
    """No good matching of the needed order exists; carries the report."""

    def __init__(self, message: str, report: Distance2Report):
        super().__init__(message)
        self.report = report


@dataclass
class Distance2Report:
    r: int
    k: int
    regime: str
    theorem: str
    target: int
    pairs_d2: int
    weight: int
    bound: int | None
    budget: int
    matching: list[tuple[int, int]] = field(default_factory=list)

    @property
    def weight_hypothesis(self) -> bool | None:
        return None if self.bound is None else self.weight < self.bound

    @property
    def stated_hypothesis(self) -> bool | None:
        return None if self.bound is None else self.pairs_d2 < self.bound

    def to_json(self) -> dict:
        out = asdict(self)
        out["weight_hypothesis"] = self.weight_hypothesis
        out["stated_hypothesis"] = self.stated_hypothesis
        return out


def budget(r: int, k: int) -> int:
    return -(-(3 * r + k) // 2) if k <= r else r + k


def target_order(r: int, k: int) -> int:
    return (r + k) // 2 if k <= r else r


def classify(r: int, k: int) -> tuple[str, str, int | None]:
    """Regime name, theorem label and strict weight bound for ``(r, k)``."""
    n = r + k
    if k <= r:
        if n % 2 == 0:
            return "even", "small-k even", even_weight_bound(n)
        return "odd", "small-k odd (extended)", odd_weight_bound(n)
    if r < 2:
        return "large", "large-k (r < 2, no bound)", None
    part = "(1)" if 2 * k <= 3 * r - 7 else "(2)"
    return "large", f"large-k {part}", large_k_weight_bound(r, k)


def align_for_e1(
    m: Matching,
    e: OrderedPartition,
    g: Graph,
    d: Mapping[int, int],
    base: Mapping[int, int],
) -> tuple[list[tuple[int, int]], Coloring]:
    """Order the matching and relabel the base so the proof's assumptions hold.

    An ``E1`` edge goes first, oriented so ``m_1`` is the precolor of the
    lower-id vertex ``x_1`` of its unique realizing pair, and the base class
    containing ``x_1`` is swapped with class 1.
    """
    if not is_good(m, e):
        raise ValueError("matching is not good for the partition")
    edges = sorted(pair(*x) for x in m)
    e1 = [x for x in edges if e.cls(*x) == 1]
    if not e1:
        return edges, dict(base)
    (special,) = e1
    realizing = [
        (x, y) for x, y in sorted(pairs_within(g, d, 2)) if pair(d[x], d[y]) == special
    ]
    if len(realizing) != 1:
        raise ValueError(f"E1 edge {special} is realized by {len(realizing)} pairs")
    x1, y1 = realizing[0]
    head = (d[x1], d[y1])
    have = base[x1]
    swap = {have: 1, 1: have}
    aligned = {v: swap.get(c, c) for v, c in base.items()}
    return [head, *(x for x in edges if x != special)], aligned


def extend_via_matching(
    g: Graph,
    d: Mapping[int, int],
    base: Mapping[int, int],
    pairs: Sequence[tuple[int, int]],
    r: int,
    k: int,
) -> Coloring:
    """Color class ``i`` of the base with ``m_i``/``n_i`` and fix ``P`` to ``d``."""
    regime_small = k <= r
    if len(pairs) != target_order(r, k):
        raise ValueError(f"expected {target_order(r, k)} matched pairs, got {len(pairs)}")
    half_up = -(-(r + k) // 2)
    forced: dict[int, set[int]] = {}
    for v, c in d.items():
        for w in g.adj[v]:
            forced.setdefault(w, set()).add(c)
    f: Coloring = {}
    for v in range(g.n):
        if v in d:
            f[v] = d[v]
            continue
        i = base[v]
        if i <= len(pairs):
            mi, ni = pairs[i - 1]
            f[v] = ni if mi in forced.get(v, ()) else mi
        elif regime_small:
            f[v] = half_up + i
        else:
            raise ValueError(f"base class {i} has no matched pair")
    return f


def analyze_distance2(g: Graph, d: Mapping[int, int], r: int, k: int) -> tuple[OrderedPartition, Distance2Report]:
    e = build_partition(g, d, r + k)
    regime, theorem, bound = classify(r, k)
    report = Distance2Report(
        r=r,
        k=k,
        regime=regime,
        theorem=theorem,
        target=target_order(r, k),
        pairs_d2=len(pairs_within(g, d, 2)),
        weight=weight(e),
        bound=bound,
        budget=budget(r, k),
    )
    return e, report


def extend_distance2(
    g: Graph, d: Mapping[int, int], base: Mapping[int, int], r: int, k: int
) -> tuple[Coloring, Distance2Report]:
    """Extend ``d`` within the distance-two budget or raise :class:`GuaranteeNotApplicable`."""
    if r < 1 or k < 1:
        raise ValueError("r and k must be positive")
    validate_precoloring(g, d)
    if len(base) != g.n or any(not 1 <= c <= r for c in base.values()):
        raise ValueError(f"base must color every vertex with colors in 1..{r}")
    bad = find_conflict(g, base)
    if bad is not None:
        raise ValueError(f"base coloring is not proper on edge {bad}")
    if any(not 1 <= c <= r + k for c in d.values()):
        raise ValueError(f"precolors must lie in 1..{r + k}")

    e, report = analyze_distance2(g, d, r, k)
    m = find_good_matching(e, report.target)
    if m is None:
        raise GuaranteeNotApplicable(
            f"no good matching of order {report.target} on {r + k} colors "
            f"(weight {report.weight}, bound {report.bound})",
            report,
        )
    pairs, aligned = align_for_e1(m, e, g, d, base)
    report.matching = [tuple(p) for p in pairs]
    return extend_via_matching(g, d, aligned, pairs, r, k), report
