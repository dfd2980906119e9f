import itertools

import pytest

from semideg.hypergraph import (
    Hypergraph,
    complete_r_partite,
    contract,
    count_r_partitions,
    enumerate_r_partitions,
    format_hypergraph,
    is_r_partition,
    max_edges,
    parse_hypergraph,
    reduce_to_partite,
)
from semideg.numerics import pi_r


def set_partitions(items):
    """Independent enumerator of all set partitions."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1 :]


def brute_count(H):
    if not H.edges:
        return 0
    return sum(
        1
        for P in set_partitions(list(range(1, H.n + 1)))
        if len(P) == H.r and all(all(len(e & set(b)) == 1 for b in P) for e in H.edges)
    )


def test_complete_r_partite():
    H = complete_r_partite([{1, 2}, {3}])
    assert H.edges == {frozenset({1, 3}), frozenset({2, 3})}
    assert len(complete_r_partite([{1}, {2}, {3}]).edges) == 1
    for n in range(2, 9):
        for r in range(2, n + 1):
            size, extra = divmod(n, r)
            blocks, x = [], 1
            for i in range(r):
                s = size + (i < extra)
                blocks.append(set(range(x, x + s)))
                x += s
            H = complete_r_partite(blocks)
            assert len(H.edges) == pi_r(n, r)
            assert is_r_partition(H, blocks)


def test_is_r_partition():
    H = Hypergraph(3, [{1, 2}])
    assert is_r_partition(H, [{1}, {2, 3}])
    assert not is_r_partition(H, [{1, 2}, {3}])
    with pytest.raises(ValueError):
        is_r_partition(H, [{1}, {2}, {3}])


def test_count_examples():
    assert count_r_partitions(Hypergraph(3, [{1, 2}])) == 2
    four_cycle = complete_r_partite([{1, 3}, {2, 4}])
    assert count_r_partitions(four_cycle) == 1
    assert count_r_partitions(Hypergraph(4, [], r=2)) == 0


def test_isolated_vertex_multiplies_by_r():
    for r in (2, 3):
        H0 = complete_r_partite([set(range(i * 2 + 1, i * 2 + 3)) for i in range(r)])
        H = Hypergraph(H0.n + 1, H0.edges, r=r)
        assert count_r_partitions(H) == r * count_r_partitions(H0)


def test_count_matches_brute_force():
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for k in range(1, len(pairs) + 1):
            for edges in itertools.combinations(pairs, k):
                H = Hypergraph(n, edges)
                assert count_r_partitions(H) == brute_count(H)
    triples = list(itertools.combinations(range(1, 6), 3))
    for edges in itertools.combinations(triples, 2):
        H = Hypergraph(5, edges)
        assert count_r_partitions(H) == brute_count(H)


def test_enumeration_is_canonical_and_distinct():
    H = Hypergraph(5, [{1, 2}])
    parts = list(enumerate_r_partitions(H))
    assert len(parts) == len(set(frozenset(p) for p in parts))
    for p in parts:
        mins = [min(b) for b in p]
        assert mins == sorted(mins)


def test_contract():
    H = Hypergraph(4, [{1, 2}])
    C = contract(H, 3, 4)
    assert C.n == 3 and C.edges == H.edges
    C = contract(Hypergraph(3, [{1, 2}, {2, 3}]), 1, 2)
    assert frozenset({1}) in C.edges and not C.is_uniform
    C = contract(Hypergraph(4, [{1, 4}]), 2, 4)
    assert C.edges == {frozenset({1, 2})}
    with pytest.raises(ValueError):
        contract(H, 2, 2)


def test_contract_never_adds_edges():
    for n in range(2, 5):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for k in range(1, len(pairs) + 1):
            for edges in itertools.combinations(pairs, k):
                H = Hypergraph(n, edges)
                for u, v in pairs:
                    assert len(contract(H, u, v).edges) <= len(H.edges)


def test_reduce_l1_two_partitions():
    H = Hypergraph(3, [{1, 2}])
    assert count_r_partitions(H) == 2
    R = reduce_to_partite(H, 1)
    assert R.n == 2 and len(R.edges) == 1
    assert any(is_r_partition(R, P) for P in enumerate_r_partitions(R))


def test_reduce_with_isolated_vertices():
    H0 = complete_r_partite([{1, 2}, {3, 4, 5}])
    H = Hypergraph(7, H0.edges, r=2)
    assert count_r_partitions(H) == 4
    for l in (1, 2):
        R = reduce_to_partite(H, l)
        assert R.n == 7 - l and len(R.edges) == len(H.edges)
        assert count_r_partitions(R) >= 1


def test_reduce_all_small_graphs():
    for n in range(3, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for k in range(1, len(pairs) + 1):
            for edges in itertools.combinations(pairs, k):
                H = Hypergraph(n, edges)
                c = count_r_partitions(H)
                for l in range(1, 4):
                    if c >= 2 ** (l - 1) + 1:
                        R = reduce_to_partite(H, l)
                        assert R.n == n - l and len(R.edges) == k
                        assert count_r_partitions(R) >= 1


def test_reduce_rejects():
    H = complete_r_partite([{1, 3}, {2, 4}])
    with pytest.raises(ValueError, match="has 1"):
        reduce_to_partite(H, 1)


def test_max_edges():
    assert max_edges(4, 2, 2) == 2
    assert max_edges(3, 2, 3) is None
    for n in range(2, 9):
        for r in range(2, n + 1):
            assert max_edges(n, r, 1) == pi_r(n, r)
    with pytest.raises(ValueError):
        max_edges(4, 1, 1)


def test_text_format():
    H = Hypergraph(4, [{1, 2}, {3, 4}])
    text = format_hypergraph(H)
    assert text == "4 2\n1 2\n3 4\n"
    assert parse_hypergraph(text) == H
    with pytest.raises(ValueError):
        parse_hypergraph("4\n1 2\n")
    with pytest.raises(ValueError):
        parse_hypergraph("3 2\n1 2 3\n")
