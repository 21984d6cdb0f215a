"""Shared fixtures and independent brute-force oracles.

The oracles work over bitmasks with a precomputed delta table, so they
share no code with the implementations they check."""

import random

import pytest

from ngons import BipartiteGraph, fano_graph, gq22_graph, grow, make_cycle


# ---------------------------------------------------------------- oracles

class MaskOracle:
    """Exhaustive subset machinery for graphs of <= ~16 vertices.

    delta, d, strong embedding, closure and 0-(minimally-)algebraic pairs
    are all computed straight from the definitions by iterating subsets.
    """

    def __init__(self, g):
        self.g = g
        self.verts = sorted(g.vertices)
        self.pos = {v: i for i, v in enumerate(self.verts)}
        self.k = len(self.verts)
        self.adjmask = []
        for v in self.verts:
            m = 0
            for w in g.neighbors(v):
                m |= 1 << self.pos[w]
            self.adjmask.append(m)
        n = g.n
        self.delta = [0] * (1 << self.k)
        for mask in range(1, 1 << self.k):
            i = (mask & -mask).bit_length() - 1
            rest = mask & (mask - 1)
            inner = (self.adjmask[i] & rest).bit_count()
            self.delta[mask] = self.delta[rest] + (n - 1) - (n - 2) * inner

    def mask(self, subset):
        m = 0
        for v in subset:
            m |= 1 << self.pos[v]
        return m

    def unmask(self, mask):
        return frozenset(self.verts[i] for i in range(self.k) if mask >> i & 1)

    def supersets(self, amask):
        free = ((1 << self.k) - 1) & ~amask
        sub = free
        while True:
            yield amask | sub
            if sub == 0:
                return
            sub = (sub - 1) & free

    def d_min(self, subset):
        amask = self.mask(subset)
        return min(self.delta[s] for s in self.supersets(amask))

    def is_strong(self, subset):
        amask = self.mask(subset)
        base = self.delta[amask]
        return all(self.delta[s] >= base for s in self.supersets(amask))

    def closure(self, subset):
        """The inclusion-smallest strong superset, by direct search."""
        amask = self.mask(subset)
        strong = [s for s in self.supersets(amask)
                  if all(self.delta[t] >= self.delta[s]
                         for t in self.supersets(s))]
        best = min(strong, key=lambda s: s.bit_count())
        assert all(best & ~s == 0 or s.bit_count() > best.bit_count()
                   for s in strong)
        return self.unmask(best)

    def strong_supersets(self, subset):
        amask = self.mask(subset)
        return [self.unmask(s) for s in self.supersets(amask)
                if all(self.delta[t] >= self.delta[s]
                       for t in self.supersets(s))]

    def delta_rel(self, bmask, amask):
        return self.delta[bmask | amask] - self.delta[amask]

    def zero_algebraic_bodies(self, amask):
        """All nonempty bodies disjoint from A that are 0-algebraic."""
        free = ((1 << self.k) - 1) & ~amask
        out = []
        sub = free
        while sub:
            if self.delta_rel(sub, amask) == 0:
                inner = sub & (sub - 1)
                ok = True
                while ok and inner:
                    if inner != sub and self.delta_rel(inner, amask) <= 0:
                        ok = False
                    inner = (inner - 1) & sub
                if ok:
                    out.append(sub)
            sub = (sub - 1) & free
        return out

    def zero_min_pairs(self):
        """All (base, body) pairs, body 0-minimally algebraic over base."""
        pairs = []
        for amask in range(1, 1 << self.k):
            for bmask in self.zero_algebraic_bodies(amask):
                touched = 0
                m = amask
                while m:
                    i = (m & -m).bit_length() - 1
                    m &= m - 1
                    if self.adjmask[i] & bmask:
                        touched |= 1 << i
                if touched == amask:
                    pairs.append((self.unmask(amask), self.unmask(bmask)))
        return set(pairs)


def random_bipartite(rng, n, nv, edge_prob):
    parts = {i: rng.randrange(2) for i in range(nv)}
    edges = [(u, v) for u in range(nv) for v in range(u + 1, nv)
             if parts[u] != parts[v] and rng.random() < edge_prob]
    return BipartiteGraph(n, parts, edges)


# ---------------------------------------------------------------- fixtures

@pytest.fixture(scope="session")
def fano():
    return fano_graph()


@pytest.fixture(scope="session")
def gq22():
    return gq22_graph()


@pytest.fixture(scope="session")
def grow_outputs():
    """The three pinned 20-step growth runs from the (2n+2)-cycle seed."""
    seed = make_cycle(3, 8)
    return {s: grow(seed, 20, s) for s in (1, 2, 3)}


@pytest.fixture(scope="session")
def small_graphs():
    """A mixed corpus of graphs small enough for the mask oracle."""
    from ngons import make_path, make_gamma
    rng = random.Random(20260823)
    graphs = [
        make_path(3, 5), make_path(4, 6),
        make_cycle(3, 8), make_cycle(4, 10), make_cycle(3, 6),
        make_gamma(3), make_gamma(4),
    ]
    for n in (3, 4):
        for _ in range(4):
            graphs.append(random_bipartite(rng, n, 9, 0.3))
    return graphs
