import pytest

from semideg.hypergraph import max_edges
from semideg.nildeg import count_F, kappa, null_degree
from semideg.numerics import xi
from semideg.oracle import (
    CayleyTable,
    count_maximal_null_bruteforce,
    find_embedding,
    find_left_null,
    left_null_search,
    max_edges_bruteforce,
    max_null_bruteforce,
    max_three_nilpotent_bruteforce,
    min_degree_bruteforce,
    parse_cayley_table,
    verify_embedding,
)
from semideg.transform import Transformation, classify_structure

# {0, x, y, z} with x^2 = y the only non-zero product
NIL3 = CayleyTable([[0, 0, 0, 0], [0, 2, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


def test_cayley_table_validation():
    with pytest.raises(ValueError):
        CayleyTable([[0, 1], [1, 1], [0, 0]])
    with pytest.raises(ValueError):
        CayleyTable([[1, 0], [0, 0]])  # not associative
    with pytest.raises(ValueError):
        CayleyTable([[0, 5], [0, 0]])
    S = parse_cayley_table("2\n1 1\n1 2\n")
    assert S.order == 2 and S.to_text() == "2\n1 1\n1 2\n"
    with pytest.raises(ValueError):
        parse_cayley_table("3\n1 1 1\n")


def test_min_degree_examples():
    assert min_degree_bruteforce(CayleyTable([[0]]), 3) == 1
    assert min_degree_bruteforce(NIL3, 6) == 5
    assert min_degree_bruteforce(NIL3, 4) is None
    null3 = CayleyTable([[0] * 3] * 3)
    assert min_degree_bruteforce(null3, 6) == 4 == null_degree(3)


def test_known_certificate_is_valid():
    x = Transformation([1, 1, 1, 2, 4])
    y = Transformation([1, 1, 1, 1, 2])
    z = Transformation([1, 1, 2, 1, 1])
    zero = Transformation([1, 1, 1, 1, 1])
    assert verify_embedding(NIL3, [zero, x, y, z])
    found = find_embedding(NIL3, 5)
    assert verify_embedding(NIL3, found)


def test_variants_of_nilpotent_example_are_null_of_degree_4():
    for a in range(4):
        V = NIL3.variant(a)
        assert all(v == V.product[0][0] for row in V.product for v in row)
        assert min_degree_bruteforce(V, 6) == 4 == null_degree(4)


def test_small_groups_and_bands():
    z2 = CayleyTable([[0, 1], [1, 0]])
    assert min_degree_bruteforce(z2, 4) == 2
    lz3 = CayleyTable([[0, 0, 0], [1, 1, 1], [2, 2, 2]])
    assert min_degree_bruteforce(lz3, 5) == 4
    rz3 = CayleyTable([[0, 1, 2]] * 3)
    assert min_degree_bruteforce(rz3, 5) == 3


def test_envelopes():
    with pytest.raises(ValueError):
        min_degree_bruteforce(NIL3, 7)
    with pytest.raises(ValueError):
        max_null_bruteforce(5)
    with pytest.raises(ValueError):
        count_maximal_null_bruteforce(5)
    with pytest.raises(ValueError):
        max_edges_bruteforce(7, 2, 1)
    with pytest.raises(ValueError):
        max_edges_bruteforce(5, 3, 1)
    with pytest.raises(ValueError):
        left_null_search(6)
    with pytest.raises(ValueError):
        left_null_search(4, 3, 2)


def test_max_null():
    assert [max_null_bruteforce(n) for n in (1, 3, 4)] == [1, 2, 4]
    for n in range(1, 5):
        assert max_null_bruteforce(n) == xi(n)


def test_count_maximal_null():
    assert [count_maximal_null_bruteforce(n) for n in (2, 3, 4)] == [3, 13, 73]
    for n in range(1, 5):
        assert count_maximal_null_bruteforce(n) == count_F(n)[0]


def test_max_three_nilpotent():
    assert max_three_nilpotent_bruteforce(3) == 0
    for n in (4, 5):
        assert max_three_nilpotent_bruteforce(n) == kappa(n)[0]


def test_max_edges():
    assert max_edges_bruteforce(4, 2, 2) == 2
    assert max_edges_bruteforce(5, 2, 1) == 6
    assert max_edges_bruteforce(3, 2, 3) is None
    for n in range(2, 7):
        for p in range(1, 5):
            assert max_edges_bruteforce(n, 2, p) == max_edges(n, 2, p)


def test_left_null():
    assert left_null_search(5)
    assert not left_null_search(4)
    assert not left_null_search(3)
    found = find_left_null(5)
    assert classify_structure(found).left_null_dimensions == (2, 2)
