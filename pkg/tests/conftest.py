from __future__ import annotations

import random
from itertools import combinations

import pytest

from precolor.colorgraph import OrderedPartition

ACCEPTANCE_LINES: list[str] = []


def all_matchings(n: int, first: int = 1) -> list[frozenset]:
    """Every matching of the complete graph on ``first..first+n-1``."""
    verts = list(range(first, first + n))
    out: list[frozenset] = []

    def grow(i: int, used: frozenset, acc: list) -> None:
        if i == len(verts):
            out.append(frozenset(acc))
            return
        v = verts[i]
        grow(i + 1, used, acc)
        if v in used:
            return
        for w in verts[i + 1:]:
            if w not in used:
                grow(i + 1, used | {v, w}, acc + [(v, w)])

    grow(0, frozenset(), [])
    return out


def random_partition(rng: random.Random, n: int, p1: float, p2: float) -> OrderedPartition:
    phi = {}
    for e in combinations(range(1, n + 1), 2):
        x = rng.random()
        if x < p2:
            phi[e] = rng.choice((2, 2, 3, 5))
        elif x < p1 + p2:
            phi[e] = 1
    return OrderedPartition(n, phi)


def partition_with_weight_below(rng: random.Random, n: int, bound: int) -> OrderedPartition:
    """Random partition whose weight stays below ``bound``, usually close to it."""
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    if rng.random() < 0.5:
        # cluster the weight around a few colors; the tight cases look like that
        hot = set(rng.sample(range(1, n + 1), rng.randint(1, max(1, n // 3))))
        pairs.sort(key=lambda e: -((e[0] in hot) + (e[1] in hot)))
    target = rng.randint(max(0, bound - 4), bound - 1) if bound > 0 else 0
    phi, w = {}, 0
    for e in pairs:
        room = target - w
        if room <= 0:
            break
        cost = 2 if room >= 2 and rng.random() < 0.6 else 1
        phi[e] = cost if cost == 1 else rng.choice((2, 3))
        w += cost
    return OrderedPartition(n, phi)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_instance(r, k, n, edge_prob, p_size, *, seed, **kw):
    """``gen_random`` that shrinks the precolored set until sampling succeeds."""
    from precolor.instances import GenerationError, gen_random

    for size in range(p_size, -1, -1):
        try:
            return gen_random(r, k, n, edge_prob, size, seed=seed, retries=40, **kw)
        except GenerationError:
            continue
    raise AssertionError("even an empty precolored set failed")
