import random

import pytest

from conftest import random_instance
from precolor.colorgraph import OrderedPartition, build_partition, weight
from precolor.extend2 import (
    GuaranteeNotApplicable,
    align_for_e1,
    budget,
    classify,
    extend_distance2,
    extend_via_matching,
)
from precolor.graph import Graph, color_count, extends, find_conflict, is_proper, pairs_within
from precolor.instances import gen_sharpness_even, gen_sharpness_odd
from precolor.oracle import min_extension_colors


def hub_paths(colors, extra_edges=()):
    edges, d = list(extra_edges), {}
    for i, (a, b) in enumerate(colors):
        x, hub, y = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(x, hub), (hub, y)]
        d[x], d[y] = a, b
    return Graph.from_edges(3 * len(colors), edges), d


def test_budget_and_classify():
    assert budget(2, 2) == 4 and budget(3, 1) == 5 and budget(2, 1) == 4 and budget(2, 5) == 7
    assert classify(3, 1) == ("even", "small-k even", 6)
    assert classify(3, 2) == ("odd", "small-k odd (extended)", 10)
    assert classify(2, 3)[0] == "large"
    assert classify(10, 11)[1] == "large-k (1)"
    assert classify(10, 12)[1] == "large-k (2)"


def test_align_e0_only():
    g, d = hub_paths([(1, 2)])
    e = OrderedPartition(4)
    base = {0: 1, 1: 2, 2: 1}
    pairs, aligned = align_for_e1(frozenset({(3, 4), (1, 2)}), e, g, d, base)
    assert pairs == [(1, 2), (3, 4)] and aligned == base


def test_align_single_e1_edge():
    g, d = hub_paths([(3, 5)])
    e = build_partition(g, d, 5)
    base = {0: 2, 1: 1, 2: 2}
    pairs, aligned = align_for_e1(frozenset({(3, 5)}), e, g, d, base)
    assert pairs == [(3, 5)]
    assert aligned == {0: 1, 1: 2, 2: 1}


def test_align_moves_e1_edge_first():
    g, d = hub_paths([(3, 4)])
    e = build_partition(g, d, 4)
    base = {0: 1, 1: 2, 2: 1}
    pairs, _ = align_for_e1(frozenset({(1, 2), (3, 4)}), e, g, d, base)
    assert pairs == [(3, 4), (1, 2)]


def test_align_rejects_bad_matching():
    g, d = hub_paths([(1, 2), (1, 2)])
    e = build_partition(g, d, 4)
    with pytest.raises(ValueError):
        align_for_e1(frozenset({(1, 2), (3, 4)}), e, g, d, {v: 1 + (v % 3 == 1) for v in range(6)})


def test_via_matching_empty_p():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    base = {0: 1, 1: 2, 2: 1, 3: 2}
    f = extend_via_matching(g, {}, base, [(3, 1), (4, 2)], 2, 2)
    assert f == {0: 3, 1: 4, 2: 3, 3: 4}


def test_via_matching_rule():
    # class 1 = {0, 2}, 0 sees a vertex precolored 1, 2 does not
    g = Graph.from_edges(4, [(0, 3), (1, 2)])
    base = {0: 1, 1: 2, 2: 1, 3: 2}
    d = {3: 1}
    f = extend_via_matching(g, d, base, [(1, 2), (3, 4)], 2, 2)
    assert f[0] == 2 and f[2] == 1 and f[3] == 1
    assert is_proper(g, f)


def test_via_matching_wrong_length():
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        extend_via_matching(g, {}, {0: 1, 1: 2}, [(1, 2)], 2, 2)


def test_alignment_is_needed():
    # the E1 pair (x, y) shares the hub v; v sits in base class 1, x does not
    g, d = hub_paths([(1, 2), (1, 3), (1, 3), (1, 4), (1, 4)])
    e = build_partition(g, d, 4)
    assert e.cls(1, 2) == 1 and e.cls(1, 3) == 2 and e.cls(1, 4) == 2
    base = {v: 1 if v % 3 == 1 else 2 for v in range(g.n)}
    naive = extend_via_matching(g, d, base, [(1, 2), (3, 4)], 2, 2)
    assert find_conflict(g, naive) is not None
    f, report = extend_distance2(g, d, base, 2, 2)
    assert report.matching[0] == (1, 2)
    assert is_proper(g, f) and extends(f, d) and max(f.values()) <= 4


def test_weight_zero_even():
    g, d = hub_paths([(2, 2), (3, 3)])
    base = {v: 1 if v % 3 == 1 else 2 for v in range(g.n)}
    f, report = extend_distance2(g, d, base, 2, 2)
    assert report.weight == 0 and report.weight_hypothesis
    assert is_proper(g, f) and extends(f, d)


def test_sharpness_even_not_extendable():
    inst = gen_sharpness_even(2, 2, 4)
    with pytest.raises(GuaranteeNotApplicable) as err:
        extend_distance2(inst.graph, inst.d, inst.base, 2, 2)
    rep = err.value.report
    assert rep.pairs_d2 == 6 == rep.bound and not rep.stated_hypothesis
    assert min_extension_colors(inst.graph, inst.d, 4) is None


def test_sharpness_odd_not_extendable():
    inst = gen_sharpness_odd(2, 1, 3)
    with pytest.raises(GuaranteeNotApplicable):
        extend_distance2(inst.graph, inst.d, inst.base, 2, 1)


def test_rejects_improper_base():
    g, d = hub_paths([(1, 2)])
    with pytest.raises(ValueError):
        extend_distance2(g, d, {0: 1, 1: 1, 2: 1}, 2, 2)
    with pytest.raises(ValueError):
        extend_distance2(g, {0: 9, 2: 1}, {0: 1, 1: 2, 2: 1}, 2, 2)


def check_success(inst, r, k, f, report):
    g, d = inst.graph, inst.d
    assert is_proper(g, f) and extends(f, d)
    assert color_count(f) <= budget(r, k) and max(f.values()) <= budget(r, k)
    # matched base classes keep to their own pair of colors
    pairs = report.matching
    from precolor.extend2 import align_for_e1

    e = build_partition(g, d, r + k)
    _, aligned = align_for_e1(frozenset(tuple(sorted(p)) for p in pairs), e, g, d, inst.base)
    for v in range(g.n):
        if v not in d and aligned[v] <= len(pairs):
            assert f[v] in pairs[aligned[v] - 1]


@pytest.mark.parametrize("seed", range(40))
def test_random_r3_k1(seed):
    inst = random_instance(3, 1, 30, 0.15, 8, max_d2=5, seed=seed)
    assert len(pairs_within(inst.graph, inst.p, 2)) <= 5
    f, report = extend_distance2(inst.graph, inst.d, inst.base, 3, 1)
    check_success(inst, 3, 1, f, report)
    assert color_count(f) <= 5


@pytest.mark.parametrize("seed", range(30))
def test_random_distance_three_classic(seed):
    rng = random.Random(seed)
    r = rng.randint(2, 5)
    inst = random_instance(r, 1, 40, 0.1, 8, max_d2=0, seed=seed)
    f, report = extend_distance2(inst.graph, inst.d, inst.base, r, 1)
    assert color_count(f) <= -(-(3 * r + 1) // 2)
    check_success(inst, r, 1, f, report)


@pytest.mark.parametrize("r,k", [(2, 2), (3, 2), (4, 1), (2, 3), (3, 5), (4, 4)])
def test_random_under_weight_bound(r, k):
    _, _, bound = classify(r, k)
    done = 0
    for seed in range(200):
        inst = random_instance(r, k, 45, 0.1, 12, max_d2=bound + 2, seed=seed)
        e = build_partition(inst.graph, inst.d, r + k)
        if weight(e) >= bound:
            continue
        f, report = extend_distance2(inst.graph, inst.d, inst.base, r, k)
        check_success(inst, r, k, f, report)
        done += 1
    assert done >= 20
