import pytest

from allpath import (
    BudgetExceeded,
    GenSpec,
    Graph,
    OracleBudget,
    generate,
    hull_brute,
    interval_brute,
    is_convex_brute,
    numbers_brute,
    parse_edge_list,
)

P3 = parse_edge_list("a b\nb c\n")
P4 = parse_edge_list("a b\nb c\nc d\n")
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
STAR3 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
K1 = Graph.from_edges(1, [])


def test_interval_brute_basics():
    assert interval_brute(P3, {0, 2}) == {0, 1, 2}
    assert interval_brute(P3, {1}) == {1}
    assert interval_brute(P3, set()) == set()
    assert interval_brute(C4, {0, 2}) == {0, 1, 2, 3}
    assert interval_brute(STAR3, {1, 2}) == {0, 1, 2}
    assert interval_brute(K3, {0, 1}) == {0, 1, 2}


def test_interval_brute_extensive_and_monotone():
    for g in (P4, C4, K3, STAR3):
        subsets = [set(), {0}, {0, 1}, {0, g.n - 1}, set(range(g.n))]
        for s in subsets:
            iv = interval_brute(g, s)
            assert s <= iv
            for t in subsets:
                if s <= t:
                    assert iv <= interval_brute(g, t)


def test_hull_brute_counts_growing_steps():
    assert hull_brute(P3, {0, 2}) == ({0, 1, 2}, 1)
    assert hull_brute(P3, {0, 1}) == ({0, 1}, 0)
    assert hull_brute(P4, {1, 2}) == ({1, 2}, 0)
    full, steps = hull_brute(C4, {0, 2})
    assert full == {0, 1, 2, 3} and steps == 1


def test_is_convex_brute():
    assert is_convex_brute(P4, {1, 2})
    assert not is_convex_brute(K3, {0, 1})
    assert is_convex_brute(K3, {0, 1, 2})
    assert is_convex_brute(P3, set())


def test_numbers_brute_frozen():
    k2 = Graph.from_edges(2, [(0, 1)])
    assert _nums(numbers_brute(k2)) == (1, 2, 2, 0)
    assert _nums(numbers_brute(P3)) == (2, 2, 2, 1)
    assert _nums(numbers_brute(STAR3)) == (3, 3, 3, 1)
    assert _nums(numbers_brute(C4)) == (1, 2, 2, 1)
    assert _nums(numbers_brute(K1)) == (0, 1, 1, 0)


def _nums(rep):
    return rep.c, rep.i, rep.h, rep.gin


def test_numbers_brute_witnesses_are_smallest():
    rep = numbers_brute(P3)
    assert rep.max_convex_witness == frozenset({0, 1})
    assert rep.min_interval_witness == frozenset({0, 2})


def test_hull_brute_output_is_convex():
    for seed in range(6):
        g = generate(GenSpec(family="random_connected", n=7, seed=seed, extra={"p": 0.3}))
        s = {v for v in range(g.n) if (seed >> v) & 1}
        h, _ = hull_brute(g, s)
        assert is_convex_brute(g, h)


def test_budget_vertex_cap():
    big = generate(GenSpec(family="tree", n=13, seed=5))
    with pytest.raises(BudgetExceeded):
        interval_brute(big, {0, 1})
    with pytest.raises(BudgetExceeded):
        numbers_brute(big)
    # explicit override admits it
    assert 0 in interval_brute(big, {0, 1}, OracleBudget(max_n=13))


def test_budget_path_cap():
    k6 = generate(GenSpec(family="complete", n=6))
    with pytest.raises(BudgetExceeded):
        interval_brute(k6, {0, 1, 2}, OracleBudget(max_paths=5))
    # a generous cap passes
    assert len(interval_brute(k6, {0, 1}, OracleBudget(max_paths=10**6))) == 6
