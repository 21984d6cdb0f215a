import random

import pytest
from hypothesis import given, settings, strategies as st

from ngons import (acl_relative, closure, d_min, d_rel, delta, delta_rel,
                   is_strong, make_cycle, make_gamma, make_path, GraphError)
from conftest import MaskOracle, random_bipartite


# ----------------------------------------------------------- exact values

def test_delta_basics():
    g = make_path(4, 0)
    assert delta(g, {0}) == 3  # single vertex: n-1
    assert delta(g, frozenset()) == 0


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("r", range(13))
def test_delta_path_identity(n, r):
    g = make_path(n, r)
    assert delta(g, g.vertices) == (n - 1) + r


def test_delta_rel_identities():
    g = make_cycle(3, 8)
    a, b = frozenset({0, 1, 2}), frozenset({5, 6})
    # disjoint: delta(A/B) = delta(A) - (n-2) e(A,B)
    assert delta_rel(g, a, b) == delta(g, a) - (g.n - 2) * g.edge_count(a, b)
    assert delta_rel(g, a, a | b) == 0  # A subset of B


@pytest.mark.parametrize("n", [3, 4, 5])
def test_path_interior_relative_delta_zero(n):
    g = make_path(n, n - 1)
    assert delta_rel(g, g.subsets["interior"], g.subsets["endpoints"]) == 0


def test_strong_path_examples():
    for n in (3, 4, 5):
        good = make_path(n, n - 1)
        ok, _ = is_strong(good, good.subsets["endpoints"])
        assert ok
    # for n = 3 a length-(n-2) path is a single edge and its endpoints are
    # the whole graph, so the failing example starts at n = 4
    for n in (4, 5, 6):
        bad = make_path(n, n - 2)
        ok, witness = is_strong(bad, bad.subsets["endpoints"])
        assert not ok
        assert witness == bad.vertices  # the whole path violates
        assert d_min(bad, bad.subsets["endpoints"]) == 2 * n - 3


def test_is_strong_requires_containment():
    g = make_path(3, 3)
    with pytest.raises(GraphError):
        is_strong(g, {0, 3}, {0, 1})


def test_closure_examples():
    for n in (3, 4, 5):
        bad = make_path(n, n - 2)
        assert closure(bad, bad.subsets["endpoints"]) == bad.vertices
    g = make_cycle(3, 8)
    a = frozenset({0, 4})
    assert closure(g, closure(g, a)) == closure(g, a)


def test_acl_examples():
    g = make_gamma(3)
    assert acl_relative(g, g.vertices) == g.vertices
    # gamma is its own algebraic closure in its standalone graph
    assert acl_relative(g, g.subsets["gamma"]) == g.subsets["gamma"]
    h = random_bipartite(random.Random(5), 3, 6, 0.0)  # edgeless
    assert acl_relative(h, {0}) == frozenset({0})


# ------------------------------------------------- brute-force cross-checks

def test_against_mask_oracle(small_graphs):
    rng = random.Random(7)
    for g in small_graphs:
        oracle = MaskOracle(g)
        verts = sorted(g.vertices)
        subsets = [frozenset(rng.sample(verts, rng.randrange(1, len(verts))))
                   for _ in range(25)]
        for a in subsets:
            assert d_min(g, a) == oracle.d_min(a)
            assert is_strong(g, a)[0] == oracle.is_strong(a)
            assert closure(g, a) == oracle.closure(a)


def test_violator_witness_is_genuine(small_graphs):
    rng = random.Random(11)
    for g in small_graphs:
        verts = sorted(g.vertices)
        for _ in range(20):
            a = frozenset(rng.sample(verts, rng.randrange(1, len(verts))))
            ok, witness = is_strong(g, a)
            if ok:
                assert witness is None
            else:
                assert a <= witness
                assert delta(g, witness) < delta(g, a)
                # inclusion-minimal: removing any extra vertex repairs it
                for v in sorted(witness - a):
                    assert delta(g, witness - {v}) >= delta(g, a)


def test_d_rel_definition(small_graphs):
    rng = random.Random(13)
    for g in small_graphs[:4]:
        verts = sorted(g.vertices)
        a = frozenset(rng.sample(verts, 2))
        b = frozenset(rng.sample(verts, 3))
        assert d_rel(g, b, a) == d_min(g, a | b) - d_min(g, a)


# ------------------------------------------------------ property testing

graphs = st.builds(
    lambda seed, n, nv, p: random_bipartite(random.Random(seed), n, nv, p),
    st.integers(0, 10**6), st.sampled_from([3, 4, 5]),
    st.integers(2, 9), st.floats(0.1, 0.6))


@st.composite
def graph_and_subsets(draw, count=2):
    g = draw(graphs)
    verts = sorted(g.vertices)
    subs = tuple(frozenset(draw(st.sets(st.sampled_from(verts))))
                 for _ in range(count))
    return (g,) + subs


@settings(max_examples=150, deadline=None)
@given(graph_and_subsets())
def test_union_identity(data):
    g, a, b = data
    if a & b:
        a = a - b
    assert delta(g, a | b) == delta(g, a) + delta(g, b) - (g.n - 2) * g.edge_count(a, b)


@settings(max_examples=150, deadline=None)
@given(graph_and_subsets())
def test_submodularity(data):
    g, a, b = data
    assert delta(g, a | b) + delta(g, a & b) <= delta(g, a) + delta(g, b)


@settings(max_examples=100, deadline=None)
@given(graph_and_subsets())
def test_d_monotone_and_bounded(data):
    g, a, b = data
    assert d_min(g, a) <= d_min(g, a | b)
    assert d_min(g, a) <= delta(g, a)


@settings(max_examples=100, deadline=None)
@given(graph_and_subsets(count=1))
def test_closure_properties(data):
    g, a = data
    cl = closure(g, a)
    assert a <= cl
    assert is_strong(g, cl)[0]
    assert closure(g, cl) == cl
    assert cl <= acl_relative(g, a)
    # strong iff delta attains d
    assert is_strong(g, a)[0] == (delta(g, a) == d_min(g, a))


@settings(max_examples=100, deadline=None)
@given(graph_and_subsets(count=1))
def test_closure_contained_in_every_strong_superset(data):
    g, a = data
    oracle = MaskOracle(g)
    cl = closure(g, a)
    for s in oracle.strong_supersets(a):
        assert cl <= s
