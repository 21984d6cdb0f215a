"""Finite bipartite graphs with a gonality parameter, plus the basic metric
machinery: distances, girth, diameter, cycle enumeration and the
generalized n-gon axioms.

Vertices are opaque integers carrying a part label in {0, 1}.  All graphs
are simple and every edge joins part 0 to part 1.  Graphs are immutable
after construction; no operation here mutates its input.
"""

import math
from collections import deque

INFINITY = math.inf


class GraphError(ValueError):
    """Raised on malformed graph data (bad parts, unknown ids, loops...)."""


class BipartiteGraph:
    """A finite simple bipartite graph together with the gonality n >= 3.

    Parameters
    ----------
    n : int
        The gonality parameter; predimension and polygon checks use it.
    parts : mapping vertex id -> part (0 or 1)
    edges : iterable of (u, v) pairs
    subsets : optional mapping name -> iterable of vertex ids
    """

    def __init__(self, n, parts, edges, subsets=None):
        if not isinstance(n, int) or n < 3:
            raise GraphError("gonality n must be an integer >= 3, got %r" % (n,))
        self.n = n
        self._part = {}
        for v, p in dict(parts).items():
            if not isinstance(v, int):
                raise GraphError("vertex ids must be integers, got %r" % (v,))
            if p not in (0, 1):
                raise GraphError("part of vertex %r must be 0 or 1, got %r" % (v, p))
            self._part[v] = p
        self.vertices = frozenset(self._part)
        norm = set()
        adj = {v: set() for v in self.vertices}
        for u, v in edges:
            if u not in self._part or v not in self._part:
                raise GraphError("edge (%r, %r) has an unknown endpoint" % (u, v))
            if u == v:
                raise GraphError("loop at vertex %r" % (u,))
            if self._part[u] == self._part[v]:
                raise GraphError(
                    "edge (%r, %r) joins two vertices of part %d" % (u, v, self._part[u]))
            e = (u, v) if u < v else (v, u)
            norm.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.edges = frozenset(norm)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self.subsets = {}
        for name, ids in dict(subsets or {}).items():
            members = frozenset(ids)
            if not members <= self.vertices:
                raise GraphError("subset %r mentions unknown vertices" % (name,))
            self.subsets[name] = members

    def part(self, v):
        try:
            return self._part[v]
        except KeyError:
            raise GraphError("unknown vertex id %r" % (v,)) from None

    def neighbors(self, v):
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError("unknown vertex id %r" % (v,)) from None

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, u, v):
        return v in self.neighbors(u)

    def edge_count(self, a, b=None):
        """Number of edges inside a, or between disjoint-or-not sets a and b.

        With one argument: edges with both endpoints in a.  With two:
        edges with one endpoint in a and the other in b (edges inside the
        intersection are not counted twice; the two-argument form counts
        pairs (u, v), u in a, v in b, u-v an edge, each unordered edge once).
        """
        a = frozenset(a)
        if b is None:
            return sum(1 for (u, v) in self.edges if u in a and v in a)
        b = frozenset(b)
        return sum(1 for (u, v) in self.edges
                   if (u in a and v in b) or (u in b and v in a))

    def check_subset(self, members):
        members = frozenset(members)
        unknown = members - self.vertices
        if unknown:
            raise GraphError("unknown vertex ids %s" % sorted(unknown))
        return members

    def with_subsets(self, **named):
        """A copy of this graph with additional named subsets."""
        subsets = dict(self.subsets)
        subsets.update(named)
        return BipartiteGraph(self.n, self._part, self.edges, subsets)

    def part_vertices(self, p):
        return frozenset(v for v in self.vertices if self._part[v] == p)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n == other.n and self._part == other._part
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._part.items())), self.edges))

    def __repr__(self):
        return "BipartiteGraph(n=%d, |V|=%d, |E|=%d)" % (
            self.n, len(self.vertices), len(self.edges))


def bfs_distances(g, source):
    """Dict of BFS distances from source to every reachable vertex."""
    g.part(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g, u, v):
    """Graph distance between u and v; INFINITY if disconnected."""
    g.part(v)
    if u == v:
        g.part(u)
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if w == v:
                return dist[x] + 1
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return INFINITY


def diameter(g):
    """Largest distance between any two vertices; INFINITY if disconnected."""
    if not g.vertices:
        return 0
    worst = 0
    nv = len(g.vertices)
    for v in g.vertices:
        dist = bfs_distances(g, v)
        if len(dist) < nv:
            return INFINITY
        worst = max(worst, max(dist.values()))
    return worst


def girth(g):
    """Length of a shortest cycle; INFINITY if the graph is a forest.

    Computed exactly: for each edge, the shortest cycle through it is one
    plus the distance between its endpoints with the edge removed.
    """
    best = INFINITY
    for (u, v) in g.edges:
        d = _distance_avoiding_edge(g, u, v)
        if d + 1 < best:
            best = d + 1
    return best


def _distance_avoiding_edge(g, u, v):
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if x == u and w == v:
                continue
            if w == v:
                return dist[x] + 1
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return INFINITY


def is_generalized_ngon(g, thick=False):
    """Check the generalized n-gon axioms: diameter n and girth 2n.

    Returns (ok, reason); reason is None on success and otherwise names
    the first failing condition with a witness.
    """
    n = g.n
    gi = girth(g)
    if gi != 2 * n:
        witness = None
        if gi != INFINITY:
            for cyc in enumerate_cycles(g, gi):
                witness = cyc
                break
        return False, "girth is %s, expected %d (witness cycle %s)" % (gi, 2 * n, witness)
    dia = diameter(g)
    if dia != n:
        pair = _diameter_witness(g, n)
        return False, "diameter is %s, expected %d (witness pair %s)" % (dia, n, pair)
    if thick:
        for v in sorted(g.vertices):
            if g.degree(v) < 3:
                return False, "vertex %d has valency %d < 3" % (v, g.degree(v))
    return True, None


def _diameter_witness(g, n):
    for v in sorted(g.vertices):
        dist = bfs_distances(g, v)
        missing = g.vertices - dist.keys()
        if missing:
            return (v, min(missing))
        far = max(dist.values())
        if far > n:
            w = min(x for x, d in dist.items() if d == far)
            return (v, w)
    return None


def enumerate_cycles(g, length):
    """All simple cycles of exactly the given (even) length.

    Each cycle is reported once, as a vertex tuple starting at its smallest
    vertex and oriented so the second vertex is smaller than the last.
    """
    if length % 2 != 0 or length < 4:
        raise GraphError("cycle length must be even and >= 4, got %r" % (length,))
    out = []
    order = sorted(g.vertices)
    for root in order:
        # Simple paths from root using vertices > root only; close back to root.
        stack = [(root, (root,), frozenset((root,)))]
        while stack:
            u, path, seen = stack.pop()
            if len(path) == length:
                if root in g.neighbors(u) and path[1] < path[-1]:
                    out.append(path)
                continue
            for w in sorted(g.neighbors(u), reverse=True):
                if w > root and w not in seen:
                    stack.append((w, path + (w,), seen | {w}))
    return sorted(out)


def ordered_cycles(g, length, start_part=None):
    """All ordered simple cycles (x_0, ..., x_{L-1}) of the given length.

    Every rotation and both orientations of each cycle are reported; with
    start_part given, only those whose starting vertex lies in that part.
    """
    out = []
    for cyc in enumerate_cycles(g, length):
        for direction in (cyc, (cyc[0],) + tuple(reversed(cyc[1:]))):
            for shift in range(length):
                rolled = direction[shift:] + direction[:shift]
                if start_part is None or g.part(rolled[0]) == start_part:
                    out.append(rolled)
    return sorted(set(out))


def simple_paths(g, length):
    """All ordered simple paths (x_0, ..., x_length) in g."""
    out = []
    for v in sorted(g.vertices):
        stack = [((v,), frozenset((v,)))]
        while stack:
            path, seen = stack.pop()
            if len(path) == length + 1:
                out.append(path)
                continue
            for w in sorted(g.neighbors(path[-1]), reverse=True):
                if w not in seen:
                    stack.append((path + (w,), seen | {w}))
    return out


def connected_components(g, within=None):
    """Connected components of the subgraph induced on `within` (default all)."""
    within = g.vertices if within is None else frozenset(within)
    seen = set()
    comps = []
    for v in sorted(within):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in within and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g, within=None):
    within = g.vertices if within is None else frozenset(within)
    if not within:
        return True
    return len(connected_components(g, within)) == 1
