"""The predimension calculus.

For a finite subset A of a bipartite graph with gonality n,

    delta(A) = (n-1)|A| - (n-2) e(A),

where e(A) counts edges with both endpoints in A.  On top of delta this
module provides the relative version, strong embeddings, the minimum
d(A) = min { delta(A') : A <= A' <= ambient }, the smallest strong
superset (closure) and algebraic closure relative to the finite ambient
graph.

Two independent routes are deliberately kept apart:

* ``d_min``/``closure`` translate the minimisation into a minimum-cut
  (project selection) problem.  delta is submodular, so the minimisers
  form a lattice and the inclusion-smallest minimiser -- which is exactly
  the closure -- is the source side of the unique minimal minimum cut.
* ``is_strong`` searches directly for a violating intermediate set,
  after peeling the ambient down to the vertices that can occur in an
  inclusion-minimal violator.

They are cross-checked against each other (and against brute force) in
the test suite.
"""

import math
from collections import deque

from .graph import GraphError


def delta(g, a):
    """(n-1)|A| - (n-2) e(A)."""
    a = g.check_subset(a)
    return (g.n - 1) * len(a) - (g.n - 2) * g.edge_count(a)


def delta_rel(g, a, b):
    """delta(A/B) = delta(A union B) - delta(B)."""
    a = g.check_subset(a)
    b = g.check_subset(b)
    return delta(g, a | b) - delta(g, b)


def _violator_threshold(n):
    # Every vertex of an inclusion-minimal violator B' (outside A) has
    # (n-2) e(v, B') >= n, since dropping it must repair the violation.
    return math.ceil(n / (n - 2))


def _peel(g, candidates, anchor, threshold):
    """Iteratively discard candidates with fewer than `threshold` edges
    into the surviving candidate set plus the anchor."""
    alive = set(candidates)
    keep = frozenset(anchor)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if sum(1 for w in g.neighbors(v) if w in alive or w in keep) < threshold:
                alive.discard(v)
                changed = True
    return alive


def is_strong(g, a, b=None):
    """Is A strongly embedded in B (default: the whole ambient graph)?

    True iff delta(B') >= delta(A) for every A <= B' <= B.  Returns
    (ok, witness); on failure the witness is an inclusion-minimal
    violating set B'.
    """
    a = g.check_subset(a)
    b = g.vertices if b is None else g.check_subset(b)
    if not a <= b:
        raise GraphError("is_strong requires A to be a subset of B")
    n = g.n
    base = delta(g, a)
    hull = _peel(g, b - a, a, _violator_threshold(n))
    violator = _search_violator(g, a, sorted(hull), base)
    if violator is None:
        return True, None
    return False, _minimize_violator(g, a, violator, base)


def _search_violator(g, a, hull, base):
    """Depth-first search for S within the hull with delta(A|S) < delta(A).

    Branch and bound: at each node the optimistic further decrease is
    (n-2) * (edges among undecided vertices + edges from undecided into
    the current set); if even that cannot push delta below the target,
    the branch is pruned.
    """
    n = g.n
    target = base

    def rec(current, cur_delta, rest):
        if cur_delta < target:
            return current
        if not rest:
            return None
        pool = current | set(rest)
        potential = (g.n - 2) * sum(
            1 for v in rest for w in g.neighbors(v) if w in pool and (w in current or w > v))
        if cur_delta - potential >= target:
            return None
        v, tail = rest[0], rest[1:]
        gain = sum(1 for w in g.neighbors(v) if w in current)
        with_v = rec(current | {v}, cur_delta + (n - 1) - (n - 2) * gain, tail)
        if with_v is not None:
            return with_v
        return rec(current, cur_delta, tail)

    return rec(set(a), base, list(hull))


def _minimize_violator(g, a, violator, base):
    """Greedily shrink a violating set to an inclusion-minimal one."""
    current = set(violator)
    changed = True
    while changed:
        changed = False
        for v in sorted(current - a):
            trial = current - {v}
            if delta(g, trial) < base:
                current = trial
                changed = True
    return frozenset(current)


class _Dinic:
    """Plain max-flow on arc arrays; residual capacities are kept in
    place, so the source side of the minimal minimum cut is just what
    stays reachable afterwards."""

    def __init__(self, size):
        self.size = size
        self.to = []
        self.cap = []
        self.adj = [[] for _ in range(size)]

    def add_edge(self, u, v, capacity):
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, source, sink):
        to, cap, adj = self.to, self.cap, self.adj
        total = 0
        while True:
            level = [-1] * self.size
            level[source] = 0
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for e in adj[u]:
                    v = to[e]
                    if cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[sink] < 0:
                return total
            it = [0] * self.size

            def augment(u, limit):
                if u == sink:
                    return limit
                while it[u] < len(adj[u]):
                    e = adj[u][it[u]]
                    v = to[e]
                    if cap[e] > 0 and level[v] == level[u] + 1:
                        pushed = augment(v, min(limit, cap[e]))
                        if pushed:
                            cap[e] -= pushed
                            cap[e ^ 1] += pushed
                            return pushed
                    it[u] += 1
                return 0

            while True:
                pushed = augment(source, float("inf"))
                if not pushed:
                    break
                total += pushed

    def reachable(self, source):
        seen = [False] * self.size
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _min_superset(g, a, ground):
    """(min delta over A <= S <= ground, inclusion-smallest minimiser).

    Project-selection reduction: choosing S amounts to choosing
    S' = S - A; each chosen vertex costs n-1, each edge inside S' or from
    S' into A pays n-2.  Maximum profit = min cut; the vertices reachable
    from the source in the residual network of a maximum flow form the
    unique smallest maximiser.
    """
    a = frozenset(a)
    ground = frozenset(ground)
    free = sorted(ground - a)
    base = delta(g, a)
    if not free:
        return base, a
    n = g.n
    internal = [(u, v) for (u, v) in g.edges
                if u in ground and v in ground and u not in a and v not in a]
    # node ids: 0 = source, 1 = sink, then one per free vertex, then one
    # per edge between free vertices
    node = {v: 2 + i for i, v in enumerate(free)}
    net = _Dinic(2 + len(free) + len(internal))
    inf = (n - 2) * len(g.edges) + (n - 1) * len(g.vertices) + 1
    offered = 0
    for v in free:
        profit = (n - 2) * sum(1 for w in g.neighbors(v) if w in a)
        cost = n - 1
        if profit > cost:
            net.add_edge(0, node[v], profit - cost)
            offered += profit - cost
        elif cost > profit:
            net.add_edge(node[v], 1, cost - profit)
    for j, (u, v) in enumerate(internal):
        enode = 2 + len(free) + j
        net.add_edge(0, enode, n - 2)
        net.add_edge(enode, node[u], inf)
        net.add_edge(enode, node[v], inf)
        offered += n - 2
    cut_value = net.max_flow(0, 1)
    best_gain = offered - cut_value
    seen = net.reachable(0)
    minimiser = a | {v for v in free if seen[node[v]]}
    return base - best_gain, frozenset(minimiser)


def d_min(g, a, within=None):
    """d(A): the minimum of delta over all supersets of A inside the ambient
    graph (or inside `within`)."""
    a = g.check_subset(a)
    ground = g.vertices if within is None else g.check_subset(within)
    if not a <= ground:
        raise GraphError("d_min requires A to be contained in the ground set")
    value, _ = _min_superset(g, a, ground)
    return value


def d_rel(g, b, a):
    """d(B/A) = d(B union A) - d(A)."""
    a = g.check_subset(a)
    b = g.check_subset(b)
    return d_min(g, a | b) - d_min(g, a)


def closure(g, a):
    """The smallest strong subset of the ambient graph containing A.

    This is the inclusion-smallest minimiser of delta over supersets of A:
    every minimiser is strong, and the closure is itself a minimiser, so
    the lattice bottom is exactly cl(A).
    """
    a = g.check_subset(a)
    _, minimiser = _min_superset(g, a, g.vertices)
    return minimiser


def acl_relative(g, a):
    """All x in the ambient graph with d(A + x) = d(A).

    This relativizes the paper-style algebraic closure to the finite
    ambient graph; it contains closure(A).
    """
    a = g.check_subset(a)
    da = d_min(g, a)
    out = set(a)
    for x in sorted(g.vertices - a):
        if d_min(g, a | {x}) == da:
            out.add(x)
    return frozenset(out)
