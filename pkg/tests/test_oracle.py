import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import edges, prof
from evalcover.errors import TooLarge
from evalcover.graph import graph_from_edge_list
from evalcover.oracle import (
    check_condition1_oracle,
    enumerate_cycles,
    is_biconnected_subgraph,
    maximal_cycle_sets_oracle,
    naive_biconnected_components,
    oracle_union_graph,
)
from evalcover.verify import edge_families

K4 = "ab ac ad bc bd cd"


def test_triangle_has_one_cycle():
    assert enumerate_cycles(edges("ab bc ca")) == [(0, 1, 2)]


def test_k4_cycle_count():
    cycles = enumerate_cycles(edges(K4))
    assert len(cycles) == 7
    assert sum(len(c) == 3 for c in cycles) == 4
    assert sum(len(c) == 4 for c in cycles) == 3


@pytest.mark.parametrize("n, expected", [(5, 37), (6, 197)])
def test_complete_graph_cycle_counts(n, expected):
    # sum over k >= 3 of C(n, k) * (k - 1)! / 2
    from math import comb, factorial

    formula = sum(comb(n, k) * factorial(k - 1) // 2 for k in range(3, n + 1))
    assert formula == expected
    g = graph_from_edge_list(itertools.combinations(range(n), 2))
    assert len(enumerate_cycles(g)) == expected


def test_path_has_no_cycles():
    assert enumerate_cycles(edges("ab bc")) == []


def test_size_guard():
    g = graph_from_edge_list((i, i + 1) for i in range(13))
    with pytest.raises(TooLarge):
        enumerate_cycles(g)
    assert enumerate_cycles(g, max_vertices=14) == []


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 7).flatmap(
    lambda n: st.lists(st.sampled_from(list(itertools.combinations(range(n), 2))), min_size=1, unique=True)
))
def test_cycles_are_canonical_and_unique(pairs):
    g = graph_from_edge_list(pairs)
    cycles = enumerate_cycles(g)
    edge_sets = [frozenset(frozenset((c[k], c[(k + 1) % len(c)])) for k in range(len(c))) for c in cycles]
    assert len(set(edge_sets)) == len(cycles)
    for c in cycles:
        assert len(c) >= 3 and len(set(c)) == len(c)
        assert c[0] == min(c) and c[1] < c[-1]
        for k in range(len(c)):
            assert c[(k + 1) % len(c)] in g.adjacency[c[k]]


def test_condition_oracle_examples():
    assert check_condition1_oracle(prof("abc", "ab", "bc"))
    assert not check_condition1_oracle(prof("ab", "bc", "ac"))
    assert check_condition1_oracle(prof("ab", "bc", "cd"))


def test_oracle_union_graph_by_pair_scan():
    g = oracle_union_graph(prof("ab", "bc", "ac"))
    assert sorted(map(sorted, g.labeled_edges())) == [["a", "b"], ["a", "c"], ["b", "c"]]


def test_naive_examples(bowtie):
    fam = edge_families(naive_biconnected_components(bowtie))
    assert fam == {
        frozenset(map(frozenset, ["ab", "bc", "ca"])),
        frozenset(map(frozenset, ["cd", "de", "ec"])),
    }
    tree = naive_biconnected_components(edges("ab bc bd de"))
    assert all(len(c.edges) == 1 for c in tree.components) and len(tree) == 4
    square = naive_biconnected_components(edges("ab bc cd da"))
    assert len(square) == 1 and len(square.components[0].edges) == 4


def test_biconnected_definition_check():
    assert is_biconnected_subgraph([(0, 1)])
    assert is_biconnected_subgraph([(0, 1), (1, 2), (0, 2)])
    assert not is_biconnected_subgraph([(0, 1), (1, 2)])
    assert not is_biconnected_subgraph([(0, 1), (2, 3)])


def test_maximal_cycle_sets_examples(bowtie):
    assert maximal_cycle_sets_oracle(bowtie) == [{"a", "b", "c"}, {"c", "d", "e"}]
    assert maximal_cycle_sets_oracle(edges(K4)) == [{"a", "b", "c", "d"}]
    assert maximal_cycle_sets_oracle(edges("ab bc de")) == []
