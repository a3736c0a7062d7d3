import random

import pytest
from hypothesis import given, strategies as st

from tropcone.hypergraph import Hypergraph, canonical_classes, relabel, scc_oracle
from tropcone.instances import random_hypergraph
from tropcone.minscc import (
    UnionFind,
    min_scc_count,
    min_scc_count_digraph,
    minimal_classes,
)


def named(H, classes):
    return sorted(sorted(H.label(v) for v in c) for c in classes)


def test_union_find():
    uf = UnionFind(4)
    assert [uf.find(u) for u in range(4)] == [0, 1, 2, 3]
    r = uf.merge(0, 1)
    assert uf.find(0) == uf.find(1) == r
    r2 = uf.merge(uf.find(2), uf.find(3))
    r3 = uf.merge(r, r2)
    assert {uf.find(u) for u in range(4)} == {r3}
    assert uf.find(uf.find(2)) == uf.find(2)
    assert uf.make_set() == 4 and uf.find(4) == 4 and len(uf) == 5


def test_union_find_long_chain():
    n = 50_000
    uf = UnionFind(n)
    for u in range(1, n):
        uf.merge(uf.find(u - 1), uf.find(u))
    root = uf.find(0)
    assert all(uf.find(u) == root for u in range(0, n, 997))


@pytest.mark.parametrize("fn", [min_scc_count, lambda H: min_scc_count(H, check_invariants=True)])
def test_six_node_example(fixtures, fn):
    H = fixtures["fig5"].value
    r = fn(H)
    assert r.nb == 3
    assert named(H, minimal_classes(r)) == [["t"], ["x"], ["y"]]


def test_five_node_example(fixtures):
    H = fixtures["appF"].value
    r = min_scc_count(H, check_invariants=True)
    assert r.nb == 1
    assert named(H, minimal_classes(r)) == [["t"]]
    # u and x share a non-minimal SCC; the algorithm need not merge them
    u, x = 0, 3
    print("five-node example, u and x merged:", r.find_label[u] == r.find_label[x])


def test_empty_and_isolated():
    assert min_scc_count(Hypergraph.from_edges(0, [])).nb == 0
    r = min_scc_count(Hypergraph.from_edges(5, []))
    assert r.nb == 5
    assert canonical_classes(minimal_classes(r)) == [(i,) for i in range(5)]


DIGRAPHS = {
    "triangle": (3, [([0], [1]), ([1], [2]), ([2], [0])], 1, [(0, 1, 2)]),
    "path": (3, [([0], [1]), ([1], [2])], 1, [(2,)]),
    "two 2-cycles": (4, [([0], [1]), ([1], [0]), ([2], [3]), ([3], [2])], 2, [(0, 1), (2, 3)]),
}


@pytest.mark.parametrize("name", sorted(DIGRAPHS))
def test_digraph_examples(name):
    n, edges, nb, classes = DIGRAPHS[name]
    H = Hypergraph.from_edges(n, edges)
    for r in (min_scc_count_digraph(H), min_scc_count(H, check_invariants=True)):
        assert r.nb == nb
        assert canonical_classes(minimal_classes(r)) == classes


def test_digraph_variant_rejects_hyperedges(fixtures):
    with pytest.raises(ValueError):
        min_scc_count_digraph(fixtures["fig5"].value)


def test_result_invariants(fixtures):
    for name in ("fig5", "appF"):
        r = min_scc_count(fixtures[name].value)
        reps = {r.find_label[v] for v in range(len(r.find_label))}
        assert r.nb == sum(1 for U in reps if r.ismin[U])


def test_random_oracle_equivalence():
    rng = random.Random(20240607)
    for i in range(1500):
        H = random_hypergraph(rng.randint(1, 8), rng.randint(0, 12), rng.randint(1, 3),
                              rng.randint(1, 3), seed=rng.getrandbits(32))
        r = min_scc_count(H, check_invariants=i % 3 == 0)
        o = scc_oracle(H)
        assert r.nb == len(o.minimal_classes), H
        assert canonical_classes(minimal_classes(r)) == canonical_classes(o.minimal_classes), H


def test_deep_instance_does_not_recurse():
    n = 30_000
    H = Hypergraph.from_edges(n, [([u], [u + 1]) for u in range(n - 1)] + [([n - 2, n - 1], [0])])
    r = min_scc_count(H)
    assert r.nb == 1
    assert min_scc_count_digraph(Hypergraph.from_edges(n, [([u], [u + 1]) for u in range(n - 1)])).nb == 1


graphs = st.tuples(st.integers(1, 8), st.integers(0, 14), st.integers(1, 3),
                   st.integers(1, 3), st.integers(0, 2**32))


@given(graphs)
def test_matches_oracle(params):
    H = random_hypergraph(*params)
    r = min_scc_count(H, check_invariants=True)
    assert canonical_classes(minimal_classes(r)) == canonical_classes(scc_oracle(H).minimal_classes)


@given(st.tuples(st.integers(1, 8), st.integers(0, 14), st.just(1), st.integers(1, 3), st.integers(0, 2**32)))
def test_digraph_agreement(params):
    H = random_hypergraph(*params)
    a, b = min_scc_count(H), min_scc_count_digraph(H)
    assert a.nb == b.nb
    assert canonical_classes(minimal_classes(a)) == canonical_classes(minimal_classes(b))


@given(graphs, st.randoms(use_true_random=False))
def test_order_independence(params, rnd):
    H = random_hypergraph(*params)
    perm = list(range(H.node_count))
    rnd.shuffle(perm)
    edges = list(H.edges)
    rnd.shuffle(edges)
    shuffled = relabel(Hypergraph(H.node_count, tuple(edges)), perm)
    base = canonical_classes([{perm[v] for v in c} for c in minimal_classes(min_scc_count(H))])
    assert canonical_classes(minimal_classes(min_scc_count(shuffled))) == base
